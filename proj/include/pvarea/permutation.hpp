#pragma once

#include <cstdint>
#include <vector>

#include "pvarea/cube.hpp"

namespace pvarea {

// Coordinate relabeling of [0, inf)^n, 0-based. Applying p to a point x
// yields y with y[k] = x[p(k)].
class Permutation {
 public:
  // map must be a bijection on {0..map.size()-1}; throws otherwise.
  explicit Permutation(std::vector<std::uint32_t> map);

  static Permutation identity(std::size_t n);
  static Permutation swap_coords(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return map_.size(); }
  std::uint32_t operator()(std::size_t k) const { return map_[k]; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> map_;
};

// compose(s, t)(k) = s(t(k)), so permute(permute(x, s), t) equals
// permute(x, compose(s, t)).
Permutation compose(const Permutation& s, const Permutation& t);

// Block sum acting on the first s.size() coordinates by s and the rest by t.
Permutation juxtapose(const Permutation& s, const Permutation& t);

Cube permute(const Cube& c, const Permutation& p);

}  // namespace pvarea
