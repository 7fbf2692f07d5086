#include "qglab/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

int verify(const std::string& group, const std::string& construction, const std::string& suites,
           const std::string& epsilons, std::uint64_t seed, const std::string& out, std::optional<double> tol) {
  qglab::RunConfig cfg;
  try {
    cfg.groups = qglab::resolve_groups(group);
    cfg.constructions = qglab::parse_constructions(construction);
    cfg.suites = qglab::parse_suites(suites);
    cfg.epsilons = qglab::parse_epsilons(epsilons);
    cfg.seed = seed;
    cfg.max_dim = qglab::max_dim_from_env();
    if (tol) {
      if (!(*tol > 0.0)) throw qglab::ConfigError("--tol must be positive");
      cfg.tolerance = *tol;
    }
    qglab::check_dimension_cap(cfg);
  } catch (const std::exception& e) {
    std::cerr << "qglab: " << e.what() << "\n";
    return kInput;
  }

  qglab::CheckReport report;
  try {
    report = qglab::run_suites(cfg);
  } catch (const qglab::NumericalError& e) {
    std::cerr << "qglab: numerical failure: " << e.what() << "\n";
    return kFail;
  }

  const auto text = qglab::serialize(report);
  if (out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "qglab: cannot write '" << out << "'\n";
      return kInput;
    }
    f << text;
  }
  const auto failed = report.failures();
  std::cerr << report.records.size() - failed << "/" << report.records.size() << " checks passed\n";
  for (const auto& r : report.records)
    if (!r.pass)
      std::cerr << "FAIL " << r.suite << " " << r.group << "/" << r.construction << ": " << r.check
                << " residual=" << qglab::format_real(r.residual) << "\n";
  return failed == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for finite quantum groups"};
  app.require_subcommand(1);
  auto* v = app.add_subcommand("verify", "run check suites and write a JSON report");
  std::string group = "all", construction = "both", suites = "all", epsilons = "0.01,0.1,0.3", out = "-";
  std::uint64_t seed = 0;
  std::optional<double> tol;
  v->add_option("--group", group, "builtin name, JSON file, 'all', or a comma list")->capture_default_str();
  v->add_option("--construction", construction, "function-algebra, group-algebra or both")->capture_default_str();
  v->add_option("--suites", suites, "comma list of suites, or 'all'")->capture_default_str();
  v->add_option("--epsilons", epsilons, "perturbation parameters in (0, 1]")->capture_default_str();
  v->add_option("--seed", seed, "random seed")->capture_default_str();
  v->add_option("--out", out, "report path, '-' for stdout")->capture_default_str();
  v->add_option("--tol", tol, "identity tolerance");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }
  return verify(group, construction, suites, epsilons, seed, out, tol);
}
