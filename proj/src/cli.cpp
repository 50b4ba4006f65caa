#include "pvarea/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pvarea/analysis.hpp"

namespace pvarea {

namespace {

Program load_input(const std::string& path, const std::string& gen) {
  if (!gen.empty()) return make_benchmark(gen);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str());
}

std::string format_ms(double ms) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2fms", ms);
  return buf;
}

void print_analysis(const Report& report, bool model, bool timings,
                    std::ostream& out) {
  if (model) {
    std::string listing = render_model(report.space);
    if (!listing.empty()) out << listing << "\n";
  }
  if (report.decomposition)
    out << partition_string(*report.decomposition) << "\n";
  if (timings) {
    out << "semantics " << format_ms(report.timings.semantics_ms) << "\n"
        << "normalization " << format_ms(report.timings.normalization_ms) << "\n"
        << "factorization " << format_ms(report.timings.factorization_ms) << "\n";
  }
}

void run_bench(const std::vector<std::string>& specs, std::ostream& out) {
  for (const std::string& spec : specs) {
    const Program prog = make_benchmark(spec);
    const auto start = std::chrono::steady_clock::now();
    const Report report = analyze_program(prog, {});
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    const bool split = report.decomposition->factors.size() >= 2;
    out << spec << " " << format_ms(ms) << " "
        << (split ? partition_string(*report.decomposition) : "No") << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"PV program state spaces and independence decomposition"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze one PV program");
  std::string path;
  std::string gen;
  bool model = false;
  bool decompose = true;
  bool json = false;
  bool oracle = false;
  bool timings = false;
  analyze->add_option("file", path, "PV program file");
  analyze->add_option("--gen", gen,
                      "generate the input instead: family:args with families "
                      "sigma, sigma-prime, philosophers");
  analyze->add_flag("--model", model, "print the maximal-cube listing");
  analyze->add_flag("--decompose,!--no-decompose", decompose,
                    "print the finest independence partition (default on)");
  analyze->add_flag("--json", json, "print a JSON report instead of text");
  analyze->add_flag("--oracle-check", oracle,
                    "cross-validate against the grid reference (N <= 5)");
  analyze->add_flag("--timings", timings, "print per-phase wall times");

  auto* bench = app.add_subcommand("bench", "Time and decompose benchmarks");
  std::vector<std::string> specs;
  bench->add_option("specs", specs, "generator specs, e.g. sigma:3,3")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      if (path.empty() == gen.empty())
        throw std::invalid_argument(
            "provide exactly one of a program file or --gen");
      const Program prog = load_input(path, gen);
      const Report report = analyze_program(
          prog, {.decompose = decompose, .oracle_check = oracle});
      if (json)
        out << report_json(report) << "\n";
      else
        print_analysis(report, model, timings, out);
    } else {
      run_bench(specs, out);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pvarea
