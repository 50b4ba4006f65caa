#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pvarea/area.hpp"
#include "pvarea/cube.hpp"

namespace pvarea {

// Restrictions to the complement of A of exactly those cubes of S whose
// restriction to A equals w_prime, deduplicated. A is 0-based, strictly
// increasing, non-trivial. Throws when no cube of S restricts to w_prime.
CubeList fiber(const CubeList& S, std::span<const std::uint32_t> A,
               const Cube& w_prime);

// True iff every fiber over A equals project(S, complement of A): exactly
// when S splits as the pairwise combination of its A- and complement-
// projections, i.e. the area is a product across that coordinate split.
bool is_divisor(const CubeList& S, std::span<const std::uint32_t> A);

// Candidate coordinate subsets of {0..n-1} in search order: cardinality 1 up
// to n/2, lexicographic within a cardinality; at cardinality exactly n/2
// (even n) only subsets containing 0, since the complement of equal size
// covers the rest.
std::vector<std::vector<std::uint32_t>> subset_search_order(std::uint32_t n);

struct Factor {
  std::vector<std::uint32_t> indices;  // original coordinates, 0-based, sorted
  Area area;                           // irreducible, dimension = indices.size()

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Factors ordered by smallest original index; index sets partition the
// original coordinate set.
struct Factorization {
  std::vector<Factor> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Finest product decomposition of a non-empty area. The first divisor found
// in subset_search_order is emitted (minimality makes it irreducible) and
// the search recurses on the remaining coordinates; the factor multiset is
// unique up to per-factor coordinate permutation. The 0-dimensional unit
// yields no factors. Throws std::domain_error on an empty area.
Factorization factorize(const Area& x);

// Product of the factors permuted back to original coordinate order;
// reassemble(factorize(x)) == x.
Area reassemble(const Factorization& f);

// "{1,3}{2,4}" with 1-based indices, or "No decomposition" when there are
// fewer than two factors.
std::string partition_string(const Factorization& f);

}  // namespace pvarea
