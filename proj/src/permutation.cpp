#include "pvarea/permutation.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace pvarea {

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::uint32_t v : map_) {
    if (v >= map_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::swap_coords(std::size_t n, std::size_t i, std::size_t j) {
  Permutation p = identity(n);
  std::swap(p.map_[i], p.map_[j]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::uint32_t k = 0; k < map_.size(); ++k) inv[map_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& s, const Permutation& t) {
  assert(s.size() == t.size());
  std::vector<std::uint32_t> map(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) map[k] = s(t(k));
  return Permutation(std::move(map));
}

Permutation juxtapose(const Permutation& s, const Permutation& t) {
  std::vector<std::uint32_t> map(s.size() + t.size());
  for (std::size_t k = 0; k < s.size(); ++k) map[k] = s(k);
  for (std::size_t k = 0; k < t.size(); ++k)
    map[s.size() + k] = static_cast<std::uint32_t>(s.size()) + t(k);
  return Permutation(std::move(map));
}

Cube permute(const Cube& c, const Permutation& p) {
  assert(c.dimension() == p.size());
  std::vector<Interval> coords;
  coords.reserve(c.dimension());
  for (std::size_t k = 0; k < c.dimension(); ++k) coords.push_back(c.coord(p(k)));
  return Cube(std::move(coords));
}

}  // namespace pvarea
