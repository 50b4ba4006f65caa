#include "pvarea/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pvarea {

namespace {

std::size_t pow_size(std::uint32_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Odometer over cells {0..bound}^dim; returns false after the last cell.
bool advance(std::vector<std::uint32_t>& cell, std::uint32_t bound) {
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] < bound) {
      ++cell[i];
      std::fill(cell.begin(), cell.begin() + i, 0);
      return true;
    }
  }
  return false;
}

}  // namespace

GridRegion::GridRegion(std::size_t dim, std::uint32_t bound)
    : dim_(dim), bound_(bound), cells_(pow_size(bound + 1, dim), 0) {
  if (bound == 0) throw std::invalid_argument("grid bound must be positive");
}

std::size_t GridRegion::flatten(std::span<const std::uint32_t> cell) const {
  assert(cell.size() == dim_);
  std::size_t flat = 0;
  for (std::size_t i = dim_; i > 0; --i) {
    assert(cell[i - 1] <= bound_);
    flat = flat * (bound_ + 1) + cell[i - 1];
  }
  return flat;
}

bool GridRegion::at(std::span<const std::uint32_t> cell) const {
  return cells_[flatten(cell)] != 0;
}

void GridRegion::set(std::span<const std::uint32_t> cell, bool value) {
  cells_[flatten(cell)] = value ? 1 : 0;
}

std::size_t GridRegion::count_true() const {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::uint32_t faithful_bound(const Area& x) {
  Endpoint max_finite = 0;
  const CubeList& cubes = x.cubes();
  for (std::size_t c = 0; c < cubes.size(); ++c) {
    for (std::size_t i = 0; i < cubes.dimension(); ++i) {
      const Endpoint* rec = cubes.at(c);
      max_finite = std::max(max_finite, rec[i]);
      if (rec[cubes.dimension() + i] != kInf)
        max_finite = std::max(max_finite, rec[cubes.dimension() + i]);
    }
  }
  return max_finite + 1;
}

std::uint32_t faithful_bound(const Program& prog) {
  std::size_t longest = 0;
  for (const Process& p : prog.procs) longest = std::max(longest, p.body.size());
  return static_cast<std::uint32_t>(longest) + 1;
}

namespace {

std::uint32_t checked_bound(std::uint32_t requested, std::uint32_t minimum) {
  if (requested == 0) return minimum;
  if (requested < minimum)
    throw std::invalid_argument("grid bound below faithful minimum");
  return requested;
}

bool cube_has_cell(const Cube& c, std::span<const std::uint32_t> cell) {
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (cell[i] < c.lo(i) || cell[i] >= c.hi(i)) return false;
  }
  return true;
}

// True iff the process holds the semaphore at integer position t: scan the
// body alternating between "waiting for P(s)" and "waiting for V(s)" and
// test t against the take/release positions encountered.
bool holds_at(const Process& proc, std::uint32_t sem, std::uint32_t t) {
  bool held = false;
  std::uint32_t taken = 0;
  for (std::size_t n = 1; n <= proc.body.size(); ++n) {
    const Instruction& ins = proc.body[n - 1];
    if (!held && ins == Instruction{Op::P, sem}) {
      held = true;
      taken = static_cast<std::uint32_t>(n);
    } else if (held && ins == Instruction{Op::V, sem}) {
      held = false;
      if (taken <= t && t < n) return true;
    }
  }
  return held && t >= taken;
}

}  // namespace

GridRegion grid_of_area(const Area& x, std::uint32_t bound) {
  GridRegion grid(x.dimension(), checked_bound(bound, faithful_bound(x)));
  std::vector<std::uint32_t> cell(x.dimension(), 0);
  do {
    bool inside = false;
    for (std::size_t c = 0; c < x.cubes().size() && !inside; ++c)
      inside = cube_has_cell(x.cubes().cube(c), cell);
    grid.set(cell, inside);
  } while (advance(cell, grid.bound()));
  return grid;
}

GridRegion grid_of_program(const Program& prog, std::uint32_t bound) {
  const std::size_t n = prog.procs.size();
  GridRegion grid(n, checked_bound(bound, faithful_bound(prog)));
  std::vector<std::uint32_t> cell(n, 0);
  do {
    bool allowed = true;
    for (std::uint32_t s = 0; s < prog.sems.size() && allowed; ++s) {
      std::uint32_t holders = 0;
      for (std::size_t p = 0; p < n; ++p)
        holders += holds_at(prog.procs[p], s, cell[p]) ? 1 : 0;
      allowed = holders < prog.sems[s].arity;
    }
    grid.set(cell, allowed);
  } while (advance(cell, grid.bound()));
  return grid;
}

namespace {

// Per-axis candidate interval together with the cell range it covers.
struct AxisCandidate {
  Endpoint lo;
  Endpoint hi;         // kInf for the unbounded form
  std::uint32_t cells_lo;
  std::uint32_t cells_hi;  // exclusive
};

std::vector<AxisCandidate> axis_candidates(std::uint32_t bound) {
  std::vector<AxisCandidate> out;
  for (std::uint32_t a = 0; a <= bound; ++a)
    out.push_back({a, kInf, a, bound + 1});
  for (std::uint32_t a = 0; a < bound; ++a) {
    for (std::uint32_t b = a + 1; b <= bound; ++b)
      out.push_back({a, b, a, b});
  }
  return out;
}

// Count of true cells inside a cell box, O(2^dim) via inclusive prefix sums.
class BoxCounter {
 public:
  explicit BoxCounter(const GridRegion& r)
      : dim_(r.dimension()), side_(r.bound() + 2), pref_(pow_size(side_, dim_), 0) {
    if (dim_ == 0) {
      pref_[0] = 0;
      return;
    }
    std::vector<std::uint32_t> cell(dim_, 0);
    do {
      std::size_t flat = 0;
      for (std::size_t i = dim_; i > 0; --i)
        flat = flat * side_ + cell[i - 1] + 1;
      pref_[flat] = r.at(cell) ? 1 : 0;
    } while (advance(cell, r.bound()));
    for (std::size_t axis = 0; axis < dim_; ++axis) {
      std::size_t stride = 1;
      for (std::size_t i = 0; i < axis; ++i) stride *= side_;
      for (std::size_t flat = 0; flat < pref_.size(); ++flat) {
        std::size_t coord = flat / stride % side_;
        if (coord > 0) pref_[flat] += pref_[flat - stride];
      }
    }
  }

  // box bounds per axis as cell ranges [lo, hi).
  std::size_t count(std::span<const std::uint32_t> lo,
                    std::span<const std::uint32_t> hi) const {
    std::size_t total = 0;
    for (std::uint32_t corner = 0; corner < (1u << dim_); ++corner) {
      std::size_t flat = 0;
      bool negative = false;
      for (std::size_t i = dim_; i > 0; --i) {
        bool take_hi = (corner >> (i - 1) & 1) == 0;
        flat = flat * side_ + (take_hi ? hi[i - 1] : lo[i - 1]);
        negative ^= !take_hi;
      }
      total += negative ? -pref_[flat] : pref_[flat];
    }
    return total;
  }

 private:
  std::size_t dim_;
  std::size_t side_;
  std::vector<std::size_t> pref_;
};

}  // namespace

std::vector<Cube> grid_maximal_cubes(const GridRegion& r) {
  const std::size_t dim = r.dimension();
  if (dim == 0) {
    std::vector<Cube> out;
    if (r.at({})) out.push_back(Cube());
    return out;
  }

  const BoxCounter counter(r);
  const std::vector<AxisCandidate> cands = axis_candidates(r.bound());

  std::vector<std::uint32_t> lo(dim), hi(dim);
  auto box_full = [&](std::span<const std::uint32_t> l,
                      std::span<const std::uint32_t> h) {
    std::size_t volume = 1;
    for (std::size_t i = 0; i < dim; ++i) volume *= h[i] - l[i];
    return counter.count(l, h) == volume;
  };

  std::vector<Cube> maximal;
  std::vector<std::size_t> pick(dim, 0);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = cands[pick[i]].cells_lo;
      hi[i] = cands[pick[i]].cells_hi;
    }
    if (box_full(lo, hi)) {
      // Maximal iff no one-cell widening on any side stays inside; checking
      // single steps suffices because a strictly larger valid cube yields a
      // valid one-step extension along any coordinate where it is larger.
      bool is_max = true;
      for (std::size_t i = 0; i < dim && is_max; ++i) {
        const AxisCandidate& c = cands[pick[i]];
        if (c.cells_lo > 0) {
          std::uint32_t save_lo = lo[i], save_hi = hi[i];
          lo[i] = c.cells_lo - 1;
          hi[i] = c.cells_lo;
          is_max = !box_full(lo, hi);
          lo[i] = save_lo;
          hi[i] = save_hi;
        }
        if (is_max && c.hi != kInf) {
          std::uint32_t save_lo = lo[i];
          lo[i] = c.cells_hi;
          hi[i] = c.cells_hi + 1;
          is_max = !box_full(lo, hi);
          lo[i] = save_lo;
          hi[i] = cands[pick[i]].cells_hi;
        }
      }
      if (is_max) {
        std::vector<Interval> coords;
        coords.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i)
          coords.emplace_back(cands[pick[i]].lo, cands[pick[i]].hi);
        maximal.push_back(Cube(std::move(coords)));
      }
    }

    std::size_t axis = 0;
    while (axis < dim && pick[axis] + 1 == cands.size()) {
      pick[axis] = 0;
      ++axis;
    }
    if (axis == dim) break;
    ++pick[axis];
  }

  std::sort(maximal.begin(), maximal.end(), cube_less);
  return maximal;
}

bool grid_is_product(const GridRegion& r, std::span<const std::uint32_t> A) {
  const std::size_t dim = r.dimension();
  if (A.empty() || A.size() >= dim)
    throw std::invalid_argument("coordinate subset must be non-trivial");
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] >= dim || (i > 0 && A[i - 1] >= A[i]))
      throw std::invalid_argument("coordinate subset must be increasing and in range");
  }

  std::vector<std::uint32_t> comp;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (!std::binary_search(A.begin(), A.end(), i)) comp.push_back(i);
  }

  const std::size_t side = r.bound() + 1;
  auto key_of = [&](std::span<const std::uint32_t> cell,
                    std::span<const std::uint32_t> idx) {
    std::size_t key = 0;
    for (std::size_t i = idx.size(); i > 0; --i)
      key = key * side + cell[idx[i - 1]];
    return key;
  };

  std::vector<std::uint8_t> proj_a(pow_size(r.bound() + 1, A.size()), 0);
  std::vector<std::uint8_t> proj_c(pow_size(r.bound() + 1, comp.size()), 0);
  std::vector<std::uint32_t> cell(dim, 0);
  do {
    if (r.at(cell)) {
      proj_a[key_of(cell, A)] = 1;
      proj_c[key_of(cell, comp)] = 1;
    }
  } while (advance(cell, r.bound()));

  std::fill(cell.begin(), cell.end(), 0);
  do {
    bool product = proj_a[key_of(cell, A)] != 0 && proj_c[key_of(cell, comp)] != 0;
    if (product != r.at(cell)) return false;
  } while (advance(cell, r.bound()));
  return true;
}

}  // namespace pvarea
