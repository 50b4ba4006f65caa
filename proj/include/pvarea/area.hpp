#pragma once

#include <string>

#include "pvarea/cube.hpp"
#include "pvarea/permutation.hpp"

namespace pvarea {

// Region of [0, inf)^dim in canonical form: exactly the containment-maximal
// cubes of the region, sorted, no duplicates. Two areas denote the same set
// iff they compare equal.
class Area {
 public:
  // Default is the 0-dimensional unit.
  Area();

  // Empty region.
  static Area empty(std::size_t dim);
  // All of [0, inf)^dim.
  static Area full(std::size_t dim);
  // The 0-dimensional full area, unit of the product.
  static Area unit() { return full(0); }

  // Canonicalizes by dropping duplicate and contained cubes. Correct only
  // when the maximal records of `cubes` are the maximal cubes of its union;
  // an arbitrary cover of the region does not qualify.
  static Area from_maximal_cubes(CubeList cubes);

  std::size_t dimension() const { return cubes_.dimension(); }
  bool is_empty() const { return cubes_.empty(); }
  const CubeList& cubes() const { return cubes_; }

  friend bool operator==(const Area&, const Area&) = default;

 private:
  explicit Area(CubeList cubes) : cubes_(std::move(cubes)) {}

  CubeList cubes_;
};

// The set of points of [0, inf)^dim lying in no forbidden cube, as a
// canonical area.
Area complement_area(std::size_t dim, const CubeList& forbidden);

Area product(const Area& a, const Area& b);
Area permute(const Area& a, const Permutation& p);

bool area_contains_point(const Area& a, std::span<const Endpoint> p);

// One cube per line in canonical order.
std::string to_string(const Area& a);

}  // namespace pvarea
