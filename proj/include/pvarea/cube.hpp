#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pvarea/interval.hpp"

namespace pvarea {

// Hyperrectangle in [0, inf)^dim, product of half-open intervals, never
// empty. Stored plane-wise: dim lower endpoints, then dim upper endpoints.
// The 0-dimensional cube is the empty product (the single point of the
// 0-dimensional space).
class Cube {
 public:
  Cube() = default;
  explicit Cube(std::vector<Interval> coords);
  // planes = lo[0..dim), hi[0..dim); throws if some coordinate is empty.
  Cube(std::span<const Endpoint> planes, std::size_t dim);

  std::size_t dimension() const { return ep_.size() / 2; }
  Endpoint lo(std::size_t i) const { return ep_[i]; }
  Endpoint hi(std::size_t i) const { return ep_[dimension() + i]; }
  Interval coord(std::size_t i) const { return Interval(lo(i), hi(i)); }
  const Endpoint* data() const { return ep_.data(); }

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::vector<Endpoint> ep_;
};

// Canonical order: lexicographic on the interleaved endpoint tuple
// (lo0, hi0, lo1, hi1, ...), infinity greatest. Records must have equal
// dimension.
bool record_less(const Endpoint* a, const Endpoint* b, std::size_t dim);
bool cube_less(const Cube& a, const Cube& b);

bool contains(const Cube& outer, const Cube& inner);
std::optional<Cube> intersect(const Cube& a, const Cube& b);
bool contains_point(const Cube& c, std::span<const Endpoint> p);

// Juxtaposition: coordinates of a followed by coordinates of b.
Cube concat(const Cube& a, const Cube& b);

// Projection onto the coordinates in idx (strictly increasing, in range).
Cube restrict_to(const Cube& c, std::span<const std::uint32_t> idx);

// Coordinates joined by "*", e.g. "[0,1[*[4,-[". Dimension 0 renders as "".
std::string to_string(const Cube& c);
Cube parse_cube(std::string_view text);

// Flat batch of same-dimension cube records over one buffer, kernel-friendly.
class CubeList {
 public:
  explicit CubeList(std::size_t dim) : dim_(dim) {}

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::size_t stride() const { return 2 * dim_; }

  const Endpoint* at(std::size_t i) const { return buf_.data() + i * stride(); }
  Cube cube(std::size_t i) const;

  void push(const Cube& c);
  void push_raw(const Endpoint* planes);
  void clear();
  void reserve(std::size_t records) { buf_.reserve(records * stride()); }

  // Appends src meet b, dropping empty meets.
  void append_intersections(const CubeList& src, const Cube& b);

  // Sorts records in canonical order and drops exact duplicates.
  void sort_unique();

  // Set-of-cubes normal form: sort_unique, then drop records contained in
  // another record. Keeps exactly the containment-maximal elements.
  void prune_dominated();

  friend bool operator==(const CubeList&, const CubeList&) = default;

 private:
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Endpoint> buf_;
};

// Projection of every record onto idx, deduplicated. Preserves antichains
// only when the underlying set is a product over idx and its complement;
// callers needing an area must establish that themselves.
CubeList project(const CubeList& cubes, std::span<const std::uint32_t> idx);

}  // namespace pvarea
