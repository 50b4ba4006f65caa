// End-to-end checks for the analyzer: curated state spaces and partitions,
// randomized cross-validation against the grid reference, and wall-clock
// budgets. Prints one PASS/FAIL line per check; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "pvarea/analysis.hpp"
#include "pvarea/area.hpp"
#include "pvarea/factorize.hpp"
#include "pvarea/oracle.hpp"
#include "pvarea/permutation.hpp"
#include "pvarea/pv.hpp"
#include "pvarea/semantics.hpp"

using namespace pvarea;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kListingMsLimit = 1000.0;
constexpr double kBenchMsLimit = 60000.0;
constexpr double kPipelineMsLimit = 10000.0;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string over_budget(double ms, double limit) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "took %.1fms, budget %.0fms", ms, limit);
  return buf;
}

// Containment reimplemented locally so the reference grid does not depend on
// the code paths under test.
bool cell_in_record(const Endpoint* rec, std::span<const std::uint32_t> cell,
                    std::size_t dim) {
  for (std::size_t k = 0; k < dim; ++k) {
    if (cell[k] < rec[k]) return false;
    if (rec[dim + k] != kInf && cell[k] >= rec[dim + k]) return false;
  }
  return true;
}

GridRegion grid_from_forbidden(std::size_t dim, const CubeList& forbidden,
                               std::uint32_t bound) {
  GridRegion g(dim, bound);
  std::vector<std::uint32_t> cell(dim, 0);
  while (true) {
    bool blocked = false;
    for (std::size_t i = 0; i < forbidden.size() && !blocked; ++i)
      blocked = cell_in_record(forbidden.at(i), cell, dim);
    g.set(cell, !blocked);
    std::size_t k = 0;
    while (k < dim && cell[k] == bound) cell[k++] = 0;
    if (k == dim) break;
    ++cell[k];
  }
  return g;
}

std::uint32_t reference_bound(const CubeList& forbidden, const Area& area) {
  std::uint32_t bound = faithful_bound(area);
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    const Endpoint* rec = forbidden.at(i);
    for (std::size_t k = 0; k < 2 * forbidden.dimension(); ++k) {
      if (rec[k] != kInf) bound = std::max(bound, rec[k] + 1);
    }
  }
  return bound;
}

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

Area random_area(std::mt19937& rng, std::size_t dim, Endpoint max_endpoint,
                 std::size_t max_cubes) {
  return complement_area(dim,
                         fixtures::random_forbidden(rng, dim, max_endpoint, max_cubes));
}

// Non-empty area of dimension 1 or 2 with no non-trivial product split;
// certified against the grid reference, not the divisor test.
Area sample_irreducible(std::mt19937& rng) {
  while (true) {
    std::size_t dim = 1 + rng() % 2;
    Area area = random_area(rng, dim, 3, 2);
    if (area.is_empty()) continue;
    if (dim == 1) return area;
    const std::uint32_t first[] = {0};
    if (!grid_is_product(grid_of_area(area), first)) return area;
  }
}

const std::vector<std::string> kExpectedSigmaListing = {
    "[0,1[*[0,1[*[0,-[*[0,-[", "[0,1[*[0,-[*[0,-[*[0,1[",
    "[0,1[*[0,-[*[0,-[*[4,-[", "[0,1[*[4,-[*[0,-[*[0,-[",
    "[0,-[*[0,1[*[0,1[*[0,-[", "[0,-[*[0,1[*[4,-[*[0,-[",
    "[0,-[*[0,-[*[0,1[*[0,1[", "[0,-[*[0,-[*[0,1[*[4,-[",
    "[0,-[*[0,-[*[4,-[*[0,1[", "[0,-[*[0,-[*[4,-[*[4,-[",
    "[0,-[*[4,-[*[0,1[*[0,-[", "[0,-[*[4,-[*[4,-[*[0,-[",
    "[4,-[*[0,1[*[0,-[*[0,-[", "[4,-[*[0,-[*[0,-[*[0,1[",
    "[4,-[*[0,-[*[0,-[*[4,-[", "[4,-[*[4,-[*[0,-[*[0,-[",
};

const std::vector<std::string> kExpectedSigmaFactor = {
    "[0,1[*[0,-[",
    "[0,-[*[0,1[",
    "[0,-[*[4,-[",
    "[4,-[*[0,-[",
};

Area sigma22_space() {
  const std::uint32_t sizes[] = {2, 2};
  return state_space(gen_sigma(sizes));
}

bool check_sigma_listing(std::string& detail) {
  const Clock::time_point start = Clock::now();
  Area space = sigma22_space();
  std::vector<std::string> got;
  for (std::size_t i = 0; i < space.cubes().size(); ++i)
    got.push_back(to_string(space.cubes().cube(i)));
  const double ms = ms_since(start);
  if (got != kExpectedSigmaListing) {
    detail = "rendered listing differs from the expected 16 cubes";
    return false;
  }
  if (ms >= kListingMsLimit) {
    detail = over_budget(ms, kListingMsLimit);
    return false;
  }
  return true;
}

bool check_sigma_factors(std::string& detail) {
  Factorization f = factorize(sigma22_space());
  if (partition_string(f) != "{1,3}{2,4}") {
    detail = "partition is " + partition_string(f);
    return false;
  }
  Area expected = Area::from_maximal_cubes(
      fixtures::make_list(2, kExpectedSigmaFactor));
  if (f.factors[0].area != expected || f.factors[1].area != expected) {
    detail = "factor areas differ from the expected plane";
    return false;
  }
  return true;
}

bool check_benchmarks(std::string& detail) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"sigma:2,2", "{1,3}{2,4}"},
      {"sigma:2,2,2", "{1,4}{2,5}{3,6}"},
      {"sigma:3,3", "{1,3,5}{2,4,6}"},
      {"sigma:2,2,2,2", "{1,5}{2,6}{3,7}{4,8}"},
      {"sigma-prime:2,2", "No decomposition"},
      {"sigma-prime:2,2,2", "No decomposition"},
      {"sigma-prime:3,3", "No decomposition"},
      {"philosophers:3", "No decomposition"},
      {"philosophers:4", "No decomposition"},
      {"philosophers:5", "No decomposition"},
      {"philosophers:6", "No decomposition"},
  };
  const Clock::time_point start = Clock::now();
  for (const auto& [spec, expected] : rows) {
    Report report = analyze_program(make_benchmark(spec));
    std::string got = partition_string(*report.decomposition);
    if (got != expected) {
      detail = spec + " gave " + got + ", expected " + expected;
      return false;
    }
  }
  const double ms = ms_since(start);
  if (ms >= kBenchMsLimit) {
    detail = over_budget(ms, kBenchMsLimit);
    return false;
  }
  return true;
}

bool check_random_complements(std::string& detail) {
  std::mt19937 rng(90401);
  std::size_t trials = 0;
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    for (int t = 0; t < 180; ++t, ++trials) {
      CubeList forbidden = fixtures::random_forbidden(rng, dim, 4, 3);
      Area area = complement_area(dim, forbidden);
      GridRegion ref =
          grid_from_forbidden(dim, forbidden, reference_bound(forbidden, area));
      std::vector<Cube> want = grid_maximal_cubes(ref);
      bool same = want.size() == area.cubes().size();
      for (std::size_t i = 0; same && i < want.size(); ++i)
        same = want[i] == area.cubes().cube(i);
      if (!same) {
        detail = "maximal cubes differ at trial " + std::to_string(trials);
        return false;
      }
      if (Area::from_maximal_cubes(area.cubes()) != area) {
        detail = "normal form is not idempotent at trial " + std::to_string(trials);
        return false;
      }
    }
  }
  return trials >= 500;
}

bool check_algebra_laws(std::string& detail) {
  std::mt19937 rng(90402);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dx = 1 + rng() % 2;
    const std::size_t dy = 1 + rng() % 2;
    const std::size_t dz = 1 + rng() % 2;
    const Area x = random_area(rng, dx, 3, 2);
    const Area y = random_area(rng, dy, 3, 2);
    const Area z = random_area(rng, dz, 3, 2);
    const Area xy = product(x, y);

    bool ok = xy.dimension() == dx + dy;

    CubeList pairs(dx + dy);
    for (std::size_t i = 0; i < x.cubes().size(); ++i) {
      for (std::size_t j = 0; j < y.cubes().size(); ++j)
        pairs.push(concat(x.cubes().cube(i), y.cubes().cube(j)));
    }
    pairs.sort_unique();
    ok = ok && pairs == xy.cubes();

    ok = ok && product(xy, z) == product(x, product(y, z));
    ok = ok && product(x, Area::unit()) == x;
    ok = ok && product(Area::unit(), x) == x;

    const Permutation s = random_perm(rng, dx);
    const Permutation t = random_perm(rng, dy);
    ok = ok && product(permute(x, s), permute(y, t)) ==
                   permute(xy, juxtapose(s, t));

    const Permutation u = random_perm(rng, dx);
    ok = ok && permute(permute(x, s), u) == permute(x, compose(s, u));
    ok = ok && permute(x, Permutation::identity(dx)) == x;

    std::vector<std::uint32_t> block_swap;
    for (std::size_t k = 0; k < dy; ++k)
      block_swap.push_back(static_cast<std::uint32_t>(dx + k));
    for (std::size_t k = 0; k < dx; ++k)
      block_swap.push_back(static_cast<std::uint32_t>(k));
    ok = ok && product(y, x) == permute(xy, Permutation(std::move(block_swap)));

    if (!ok) {
      detail = "law violated at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool check_factor_recovery(std::string& detail) {
  std::mt19937 rng(90403);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 2 + trial % 2;
    std::vector<Area> xs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks;
    Area prod = Area::unit();
    for (std::size_t i = 0; i < count; ++i) {
      xs.push_back(sample_irreducible(rng));
      const std::uint32_t start = static_cast<std::uint32_t>(prod.dimension());
      prod = product(prod, xs.back());
      blocks.emplace_back(start, static_cast<std::uint32_t>(prod.dimension()));
    }
    const std::size_t n = prod.dimension();
    const Permutation sigma = random_perm(rng, n);
    const Area shuffled = permute(prod, sigma);

    // Coordinate k of the shuffled area is coordinate sigma(k) of the
    // product, so factor i should come back on the preimage of its block.
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> expected(count);
    for (std::size_t i = 0; i < count; ++i) expected[i].second = i;
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t original = sigma(k);
      for (std::size_t i = 0; i < count; ++i) {
        if (blocks[i].first <= original && original < blocks[i].second)
          expected[i].first.push_back(k);
      }
    }
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) {
                return a.first.front() < b.first.front();
              });

    const Factorization f = factorize(shuffled);
    bool ok = f.factors.size() == count;
    for (std::size_t i = 0; ok && i < count; ++i) {
      const Factor& factor = f.factors[i];
      const Area& original = xs[expected[i].second];
      ok = factor.indices == expected[i].first;
      bool area_match = factor.area == original;
      if (!area_match && factor.area.dimension() == 2)
        area_match =
            permute(factor.area, Permutation::swap_coords(2, 0, 1)) == original;
      ok = ok && area_match;
    }
    ok = ok && reassemble(f) == shuffled;
    if (!ok) {
      detail = "recovery failed at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool check_divisor_decisions(std::string& detail) {
  std::mt19937 rng(90404);
  std::size_t mismatches = 0;
  std::size_t decisions = 0;
  auto batch = [&](std::size_t dim, int count) {
    for (int t = 0; t < count; ++t) {
      Area area = random_area(rng, dim, 4, 3);
      GridRegion grid = grid_of_area(area);
      for (std::uint32_t mask = 1; mask + 1 < (1u << dim); ++mask) {
        std::vector<std::uint32_t> subset;
        for (std::uint32_t i = 0; i < dim; ++i) {
          if (mask >> i & 1) subset.push_back(i);
        }
        if (is_divisor(area.cubes(), subset) != grid_is_product(grid, subset))
          ++mismatches;
        ++decisions;
      }
    }
  };
  batch(2, 200);
  batch(3, 200);
  batch(4, 150);
  if (mismatches != 0) {
    detail = std::to_string(mismatches) + " of " + std::to_string(decisions) +
             " decisions disagree with the grid reference";
    return false;
  }
  return decisions > 0;
}

bool check_pipeline_budget(std::string& detail) {
  const Clock::time_point start = Clock::now();
  const std::uint32_t sizes[] = {3, 3};
  Report report = analyze_program(gen_sigma(sizes));
  const double ms = ms_since(start);
  if (partition_string(*report.decomposition) != "{1,3,5}{2,4,6}") {
    detail = "partition is " + partition_string(*report.decomposition);
    return false;
  }
  if (ms >= kPipelineMsLimit) {
    detail = over_budget(ms, kPipelineMsLimit);
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, bool (*)(std::string&)>> checks = {
      {"sigma:2,2 state space lists its 16 maximal cubes canonically within 1s",
       check_sigma_listing},
      {"sigma:2,2 factors into two copies of the expected plane",
       check_sigma_factors},
      {"benchmark families produce the expected partitions within 60s",
       check_benchmarks},
      {"540 random complements match grid-derived maximal cubes exactly",
       check_random_complements},
      {"product and relabeling laws hold on 200 random area pairs",
       check_algebra_laws},
      {"shuffled products of irreducibles are recovered factor by factor",
       check_factor_recovery},
      {"divisor decisions agree with the grid product test on random corpora",
       check_divisor_decisions},
      {"sigma:3,3 analyzes end to end within 10s", check_pipeline_budget},
  };

  int failures = 0;
  for (const auto& [name, run] : checks) {
    std::string detail;
    bool ok = false;
    try {
      ok = run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
