#include "pvarea/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pvarea {

namespace {

void validate_subset(std::span<const std::uint32_t> A, std::size_t dim,
                     bool proper) {
  if (A.empty()) throw std::invalid_argument("coordinate subset is empty");
  if (proper && A.size() >= dim)
    throw std::invalid_argument("coordinate subset must be proper");
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] >= dim || (i > 0 && A[i - 1] >= A[i]))
      throw std::invalid_argument(
          "coordinate subset must be increasing and in range");
  }
}

std::vector<std::uint32_t> complement_of(std::span<const std::uint32_t> A,
                                         std::size_t dim) {
  std::vector<std::uint32_t> comp;
  comp.reserve(dim - A.size());
  std::size_t next = 0;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (next < A.size() && A[next] == i)
      ++next;
    else
      comp.push_back(i);
  }
  return comp;
}

}  // namespace

CubeList fiber(const CubeList& S, std::span<const std::uint32_t> A,
               const Cube& w_prime) {
  validate_subset(A, S.dimension(), false);
  const std::vector<std::uint32_t> comp = complement_of(A, S.dimension());
  CubeList out(comp.size());
  bool found = false;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const Cube w = S.cube(i);
    if (restrict_to(w, A) != w_prime) continue;
    found = true;
    out.push(restrict_to(w, comp));
  }
  if (!found)
    throw std::invalid_argument("cube is not a projection of any element");
  out.sort_unique();
  return out;
}

bool is_divisor(const CubeList& S, std::span<const std::uint32_t> A) {
  validate_subset(A, S.dimension(), true);
  const std::vector<std::uint32_t> comp = complement_of(A, S.dimension());
  const CubeList proj_c = project(S, comp);

  // Group the cubes by their A-restriction; the area is a product across
  // the split iff every group's set of complement-restrictions is all of
  // proj_c.
  std::vector<std::pair<Cube, Cube>> split;
  split.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    const Cube w = S.cube(i);
    split.emplace_back(restrict_to(w, A), restrict_to(w, comp));
  }
  std::sort(split.begin(), split.end(), [](const auto& x, const auto& y) {
    if (cube_less(x.first, y.first)) return true;
    if (cube_less(y.first, x.first)) return false;
    return cube_less(x.second, y.second);
  });

  std::size_t i = 0;
  while (i < split.size()) {
    std::size_t matched = 0;
    std::size_t j = i;
    for (; j < split.size() && split[j].first == split[i].first; ++j) {
      if (j > i && split[j].second == split[j - 1].second) continue;
      if (matched == proj_c.size() || split[j].second != proj_c.cube(matched))
        return false;
      ++matched;
    }
    if (matched != proj_c.size()) return false;
    i = j;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> subset_search_order(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t card = 1; card <= n / 2; ++card) {
    std::vector<std::uint32_t> pick(card);
    std::iota(pick.begin(), pick.end(), 0);
    const bool half = n % 2 == 0 && card == n / 2;
    while (true) {
      // At half size every split appears once as a subset containing 0 and
      // once as its complement; keep only the former.
      if (half && pick[0] != 0) break;
      out.push_back(pick);
      std::uint32_t j = card;
      while (j > 0 && pick[j - 1] + 1 > n - (card - (j - 1))) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::uint32_t t = j; t < card; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return out;
}

namespace {

std::vector<std::uint32_t> map_indices(std::span<const std::uint32_t> orig,
                                       std::span<const std::uint32_t> local) {
  std::vector<std::uint32_t> out;
  out.reserve(local.size());
  for (std::uint32_t i : local) out.push_back(orig[i]);
  return out;
}

void solve(CubeList S, std::vector<std::uint32_t> orig,
           std::vector<Factor>& factors) {
  const std::size_t n = S.dimension();
  if (n == 0) return;
  for (const std::vector<std::uint32_t>& A : subset_search_order(
           static_cast<std::uint32_t>(n))) {
    if (!is_divisor(S, A)) continue;
    // A proper divisor of the A-factor would itself have divided S at a
    // strictly smaller cardinality, so the first hit is irreducible.
    const std::vector<std::uint32_t> comp = complement_of(A, n);
    factors.push_back(
        {map_indices(orig, A), Area::from_maximal_cubes(project(S, A))});
    solve(project(S, comp), map_indices(orig, comp), factors);
    return;
  }
  factors.push_back({std::move(orig), Area::from_maximal_cubes(std::move(S))});
}

}  // namespace

Factorization factorize(const Area& x) {
  if (x.is_empty())
    throw std::domain_error("the empty area has no factorization");
  std::vector<std::uint32_t> orig(x.dimension());
  std::iota(orig.begin(), orig.end(), 0);
  Factorization result;
  solve(x.cubes(), std::move(orig), result.factors);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) {
              return a.indices.front() < b.indices.front();
            });
  return result;
}

Area reassemble(const Factorization& f) {
  Area prod = Area::unit();
  std::vector<std::uint32_t> flat;
  for (const Factor& factor : f.factors) {
    prod = product(prod, factor.area);
    flat.insert(flat.end(), factor.indices.begin(), factor.indices.end());
  }
  if (flat.empty()) return prod;
  return permute(prod, Permutation(std::move(flat)).inverse());
}

std::string partition_string(const Factorization& f) {
  if (f.factors.size() < 2) return "No decomposition";
  std::string out;
  for (const Factor& factor : f.factors) {
    out += '{';
    for (std::size_t i = 0; i < factor.indices.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(factor.indices[i] + 1);
    }
    out += '}';
  }
  return out;
}

}  // namespace pvarea
