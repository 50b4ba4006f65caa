#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pvarea/area.hpp"
#include "pvarea/factorize.hpp"
#include "pvarea/pv.hpp"

namespace pvarea {

struct AnalysisOptions {
  bool decompose = true;
  // Cross-validate the whole pipeline against the grid reference (model
  // denotation, maximal cubes, every first-level divisor decision,
  // reassembly). Supported for at most 5 processes.
  bool oracle_check = false;
};

struct PhaseTimings {
  double semantics_ms = 0;
  double normalization_ms = 0;
  double factorization_ms = 0;
};

struct Report {
  Program program;
  Area space;
  std::optional<Factorization> decomposition;
  PhaseTimings timings;
};

// A cross-check against the grid reference failed; indicates a defect, not
// bad input.
struct OracleMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

Report analyze_program(const Program& prog, const AnalysisOptions& opt = {});

// Cube listing: first line prefixed "   ", later lines "|| ", no trailing
// newline. Empty for the empty area.
std::string render_model(const Area& space);

// JSON document with fields program (source text), cubes (per cube, per
// coordinate [lo, hi] with null for an unbounded hi), partition (1-based
// index groups, null when decomposition was skipped), timings_ms.
std::string report_json(const Report& report);

}  // namespace pvarea
