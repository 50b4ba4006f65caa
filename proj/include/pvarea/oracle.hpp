#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pvarea/area.hpp"
#include "pvarea/cube.hpp"
#include "pvarea/pv.hpp"

namespace pvarea {

// Brute-force reference model over the integer grid. With every endpoint an
// integer, the cells {0..L}^N with cell value L standing for [L, inf[ and
// cell k < L standing for [k, k+1[ decide region questions exactly, provided
// L is at least 1 + the largest finite endpoint involved (a faithful bound).
//
// Everything here recomputes from first principles with plain scalar loops;
// none of it shares code with the cube kernels or the slab-based
// normalization it is used to check.
class GridRegion {
 public:
  GridRegion(std::size_t dim, std::uint32_t bound);

  std::size_t dimension() const { return dim_; }
  std::uint32_t bound() const { return bound_; }
  std::size_t cell_count() const { return cells_.size(); }

  bool at(std::span<const std::uint32_t> cell) const;
  void set(std::span<const std::uint32_t> cell, bool value);

  std::size_t count_true() const;

  friend bool operator==(const GridRegion&, const GridRegion&) = default;

 private:
  std::size_t flatten(std::span<const std::uint32_t> cell) const;

  std::size_t dim_;
  std::uint32_t bound_;
  std::vector<std::uint8_t> cells_;
};

// Smallest faithful bound: 1 + max finite endpoint, at least 1.
std::uint32_t faithful_bound(const Area& x);
// For a program, busy intervals never reach past the longest process body,
// so 1 + max body length is faithful for the state space as well.
std::uint32_t faithful_bound(const Program& prog);

// Rasterizes the area: cell true iff its representative point (the cell's
// coordinate vector) lies in some cube. bound 0 picks faithful_bound(x);
// anything below that is rejected.
GridRegion grid_of_area(const Area& x, std::uint32_t bound = 0);

// Rasterizes the state space straight from the program text: a cell is true
// unless some semaphore of arity a is held there by at least a processes,
// with holdership evaluated by an alternating P/V scan per process.
GridRegion grid_of_program(const Program& prog, std::uint32_t bound = 0);

// All maximal cubes of the region by exhaustive candidate enumeration:
// every per-axis interval [a,b[ with 0 <= a < b <= L or [a,inf[ with a <= L,
// kept when all covered cells are true, pruned to the containment-maximal
// ones. Sorted in canonical cube order.
std::vector<Cube> grid_maximal_cubes(const GridRegion& r);

// True iff the region equals the product of its projections: cell true
// exactly when its A-part appears in some true cell and its complement-part
// appears in some true cell. A is 0-based, strictly increasing, non-trivial.
bool grid_is_product(const GridRegion& r, std::span<const std::uint32_t> A);

}  // namespace pvarea
