#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "pvarea/area.hpp"
#include "pvarea/cube.hpp"

namespace fixtures {

inline pvarea::CubeList make_list(std::size_t dim,
                                  const std::vector<std::string>& cubes) {
  pvarea::CubeList out(dim);
  for (const std::string& c : cubes) out.push(pvarea::parse_cube(c));
  return out;
}

inline pvarea::Area make_area(std::size_t dim,
                              const std::vector<std::string>& cubes) {
  return pvarea::Area::from_maximal_cubes(make_list(dim, cubes));
}

inline std::vector<std::string> render_all(const pvarea::Area& a) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.cubes().size(); ++i)
    out.push_back(pvarea::to_string(a.cubes().cube(i)));
  return out;
}

inline std::string data_file(const std::string& name) {
  const char* dir = std::getenv("PVAREA_TEST_DATA");
  return (dir != nullptr ? std::string(dir) : std::string("tests/data")) + "/" + name;
}

// State space of two processes each locking two mutexes in opposite order,
// canonical order.
inline const std::vector<std::string> kSwissCubes = {
    "[0,1[*[0,-[", "[0,2[*[0,2[", "[0,2[*[3,-[", "[0,-[*[0,1[",
    "[0,-[*[4,-[", "[3,-[*[0,2[", "[3,-[*[3,-[", "[4,-[*[0,-[",
};

// State space of sigma:2,2 (two mutex groups of two processes sharing one
// arity-3 semaphore), canonical order.
inline const std::vector<std::string> kSigmaCubes = {
    "[0,1[*[0,1[*[0,-[*[0,-[", "[0,1[*[0,-[*[0,-[*[0,1[",
    "[0,1[*[0,-[*[0,-[*[4,-[", "[0,1[*[4,-[*[0,-[*[0,-[",
    "[0,-[*[0,1[*[0,1[*[0,-[", "[0,-[*[0,1[*[4,-[*[0,-[",
    "[0,-[*[0,-[*[0,1[*[0,1[", "[0,-[*[0,-[*[0,1[*[4,-[",
    "[0,-[*[0,-[*[4,-[*[0,1[", "[0,-[*[0,-[*[4,-[*[4,-[",
    "[0,-[*[4,-[*[0,1[*[0,-[", "[0,-[*[4,-[*[4,-[*[0,-[",
    "[4,-[*[0,1[*[0,-[*[0,-[", "[4,-[*[0,-[*[0,-[*[0,1[",
    "[4,-[*[0,-[*[0,-[*[4,-[", "[4,-[*[4,-[*[0,-[*[0,-[",
};

// Common 2-dimensional factor of the sigma:2,2 state space, canonical order.
inline const std::vector<std::string> kSigmaFactor = {
    "[0,1[*[0,-[",
    "[0,-[*[0,1[",
    "[0,-[*[4,-[",
    "[4,-[*[0,-[",
};

inline pvarea::Area swiss_area() { return make_area(2, kSwissCubes); }
inline pvarea::Area sigma_area() { return make_area(4, kSigmaCubes); }
inline pvarea::Area sigma_factor_area() { return make_area(2, kSigmaFactor); }

// Random cube in [0, inf)^dim with finite endpoints <= max_endpoint; each
// upper endpoint is unbounded with probability ~1/(max_endpoint - lo + 1).
inline pvarea::Cube random_cube(std::mt19937& rng, std::size_t dim,
                                pvarea::Endpoint max_endpoint) {
  std::vector<pvarea::Interval> coords;
  coords.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::uniform_int_distribution<pvarea::Endpoint> lo_dist(0, max_endpoint - 1);
    pvarea::Endpoint lo = lo_dist(rng);
    std::uniform_int_distribution<pvarea::Endpoint> hi_dist(lo + 1, max_endpoint + 1);
    pvarea::Endpoint hi = hi_dist(rng);
    coords.emplace_back(lo, hi > max_endpoint ? pvarea::kInf : hi);
  }
  return pvarea::Cube(std::move(coords));
}

inline pvarea::CubeList random_forbidden(std::mt19937& rng, std::size_t dim,
                                         pvarea::Endpoint max_endpoint,
                                         std::size_t max_cubes) {
  std::uniform_int_distribution<std::size_t> count_dist(0, max_cubes);
  pvarea::CubeList out(dim);
  const std::size_t count = count_dist(rng);
  for (std::size_t i = 0; i < count; ++i)
    out.push(random_cube(rng, dim, max_endpoint));
  return out;
}

}  // namespace fixtures
