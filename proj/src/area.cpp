#include "pvarea/area.hpp"

#include <cassert>

namespace pvarea {

Area::Area() : cubes_(0) { cubes_.push(Cube()); }

Area Area::empty(std::size_t dim) { return Area(CubeList(dim)); }

Area Area::full(std::size_t dim) {
  CubeList cubes(dim);
  std::vector<Endpoint> planes(2 * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) planes[dim + i] = kInf;
  cubes.push(Cube(planes, dim));
  return Area(std::move(cubes));
}

Area Area::from_maximal_cubes(CubeList cubes) {
  cubes.prune_dominated();
  return Area(std::move(cubes));
}

namespace {

// Complement of one cube as slabs: per bounded side one cube constrained in
// that single coordinate, full in the rest. A point avoids `f` iff it lies
// in some slab, so intersecting a running cover with every slab of `f`
// removes exactly the points of `f`.
std::vector<Cube> complement_slabs(const Cube& f) {
  const std::size_t dim = f.dimension();
  std::vector<Cube> slabs;
  std::vector<Endpoint> planes(2 * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) planes[dim + i] = kInf;
  for (std::size_t i = 0; i < dim; ++i) {
    if (f.lo(i) > 0) {
      planes[i] = 0;
      planes[dim + i] = f.lo(i);
      slabs.emplace_back(planes, dim);
      planes[dim + i] = kInf;
    }
    if (f.hi(i) != kInf) {
      planes[i] = f.hi(i);
      slabs.emplace_back(planes, dim);
      planes[i] = 0;
    }
  }
  return slabs;
}

}  // namespace

Area complement_area(std::size_t dim, const CubeList& forbidden) {
  assert(forbidden.dimension() == dim);
  CubeList acc = Area::full(dim).cubes();
  for (std::size_t i = 0; i < forbidden.size() && !acc.empty(); ++i) {
    CubeList next(dim);
    for (const Cube& slab : complement_slabs(forbidden.cube(i)))
      next.append_intersections(acc, slab);
    // Every maximal cube of the complement arises as a meet of one slab per
    // forbidden cube, so pruning to maximal records at each step keeps the
    // invariant: acc holds exactly the maximal cubes of the region excluded
    // so far.
    next.prune_dominated();
    acc = std::move(next);
  }
  return Area::from_maximal_cubes(std::move(acc));
}

Area product(const Area& a, const Area& b) {
  CubeList cubes(a.dimension() + b.dimension());
  cubes.reserve(a.cubes().size() * b.cubes().size());
  for (std::size_t i = 0; i < a.cubes().size(); ++i) {
    for (std::size_t j = 0; j < b.cubes().size(); ++j)
      cubes.push(concat(a.cubes().cube(i), b.cubes().cube(j)));
  }
  // Maximal cubes of a product are the pairwise products of maximal cubes.
  return Area::from_maximal_cubes(std::move(cubes));
}

Area permute(const Area& a, const Permutation& p) {
  CubeList cubes(a.dimension());
  cubes.reserve(a.cubes().size());
  for (std::size_t i = 0; i < a.cubes().size(); ++i)
    cubes.push(permute(a.cubes().cube(i), p));
  return Area::from_maximal_cubes(std::move(cubes));
}

bool area_contains_point(const Area& a, std::span<const Endpoint> p) {
  for (std::size_t i = 0; i < a.cubes().size(); ++i) {
    if (contains_point(a.cubes().cube(i), p)) return true;
  }
  return false;
}

std::string to_string(const Area& a) {
  std::string out;
  for (std::size_t i = 0; i < a.cubes().size(); ++i) {
    if (i != 0) out += '\n';
    out += to_string(a.cubes().cube(i));
  }
  return out;
}

}  // namespace pvarea
