#include "pvarea/analysis.hpp"

#include <chrono>

#include <json.hpp>

#include "pvarea/oracle.hpp"
#include "pvarea/semantics.hpp"

namespace pvarea {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void oracle_check(const Report& report) {
  const Program& prog = report.program;
  const std::size_t n = prog.procs.size();
  if (n > 5)
    throw std::invalid_argument("oracle check supports at most 5 processes");

  const std::uint32_t bound =
      std::max(faithful_bound(prog), faithful_bound(report.space));
  const GridRegion from_program = grid_of_program(prog, bound);
  if (from_program != grid_of_area(report.space, bound))
    throw OracleMismatch("state space denotation disagrees with the grid reference");

  std::vector<Cube> expected = grid_maximal_cubes(from_program);
  const CubeList& got = report.space.cubes();
  bool same = expected.size() == got.size();
  for (std::size_t i = 0; same && i < expected.size(); ++i)
    same = expected[i] == got.cube(i);
  if (!same)
    throw OracleMismatch("maximal cubes disagree with the grid reference");

  for (std::uint32_t mask = 1; n >= 2 && mask + 1 < (1u << n); ++mask) {
    std::vector<std::uint32_t> subset;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    if (is_divisor(got, subset) != grid_is_product(from_program, subset))
      throw OracleMismatch("divisor test disagrees with the grid reference");
  }

  if (report.decomposition &&
      reassemble(*report.decomposition) != report.space)
    throw OracleMismatch("factor reassembly does not reproduce the state space");
}

}  // namespace

Report analyze_program(const Program& prog, const AnalysisOptions& opt) {
  Report report;
  report.program = prog;

  Clock::time_point t = Clock::now();
  CubeList forbidden = forbidden_cubes(prog);
  report.timings.semantics_ms = ms_since(t);

  t = Clock::now();
  report.space = complement_area(prog.procs.size(), forbidden);
  report.timings.normalization_ms = ms_since(t);

  if (opt.decompose) {
    t = Clock::now();
    report.decomposition = factorize(report.space);
    report.timings.factorization_ms = ms_since(t);
  }

  if (opt.oracle_check) oracle_check(report);
  return report;
}

std::string render_model(const Area& space) {
  std::string out;
  for (std::size_t i = 0; i < space.cubes().size(); ++i) {
    if (i != 0) out += '\n';
    out += i == 0 ? "   " : "|| ";
    out += to_string(space.cubes().cube(i));
  }
  return out;
}

std::string report_json(const Report& report) {
  nlohmann::json doc;
  doc["program"] = render_program(report.program);

  nlohmann::json cubes = nlohmann::json::array();
  for (std::size_t i = 0; i < report.space.cubes().size(); ++i) {
    const Cube c = report.space.cubes().cube(i);
    nlohmann::json coords = nlohmann::json::array();
    for (std::size_t k = 0; k < c.dimension(); ++k) {
      nlohmann::json pair = nlohmann::json::array();
      pair.push_back(c.lo(k));
      if (c.hi(k) == kInf)
        pair.push_back(nullptr);
      else
        pair.push_back(c.hi(k));
      coords.push_back(std::move(pair));
    }
    cubes.push_back(std::move(coords));
  }
  doc["cubes"] = std::move(cubes);

  if (report.decomposition) {
    nlohmann::json partition = nlohmann::json::array();
    for (const Factor& f : report.decomposition->factors) {
      nlohmann::json group = nlohmann::json::array();
      for (std::uint32_t idx : f.indices) group.push_back(idx + 1);
      partition.push_back(std::move(group));
    }
    doc["partition"] = std::move(partition);
  } else {
    doc["partition"] = nullptr;
  }

  doc["timings_ms"] = {{"semantics", report.timings.semantics_ms},
                       {"normalization", report.timings.normalization_ms},
                       {"factorization", report.timings.factorization_ms}};
  return doc.dump();
}

}  // namespace pvarea
