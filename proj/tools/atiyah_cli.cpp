// Command line front end: analysis of single configurations, batch identity
// and conjecture verification, configuration sampling, the n = 4 positive
// definiteness certificate and |D| minimization.
//
// Exit codes: 0 success, 1 a conjecture margin fell below -tol during
// verify, 2 bad input or usage.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atiyah/configuration.hpp"
#include "atiyah/experiments.hpp"
#include "atiyah/gram4.hpp"
#include "atiyah/json_io.hpp"

namespace {

struct CommonOpts {
  std::string input = "-";
  std::uint64_t seed = 0;
  int count = 1000;
  int n = 4;
  std::string suite = "all";
  std::string kind = "uniform-box";
  double tol = 1e-9;
  double jitter = 1e-4;
  std::string format = "json";
  int restarts = 16;
};

int run(int argc, char** argv) {
  CLI::App app{"Numerical verification of point-configuration spinor "
               "invariants"};
  app.require_subcommand(1);
  CommonOpts opt;

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Analyze one configuration");
  analyze_cmd->add_option("--input", opt.input,
                          "Configuration JSON file, or - for stdin");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run an identity/conjecture suite on "
                                   "sampled configurations");
  verify_cmd->add_option("--n", opt.n, "Points per configuration");
  verify_cmd->add_option("--count", opt.count, "Number of configurations");
  verify_cmd->add_option("--seed", opt.seed, "PRNG seed");
  verify_cmd->add_option("--suite", opt.suite,
                         "gram3, gram4, bridge, conjectures or all");
  verify_cmd->add_option("--kind", opt.kind,
                         "Sampler: uniform-box, gaussian, near-collinear, "
                         "clustered");
  verify_cmd->add_option("--jitter", opt.jitter, "Sampler noise scale");
  verify_cmd->add_option("--tol", opt.tol, "Margin tolerance");
  verify_cmd->add_option("--format", opt.format, "json or csv");

  CLI::App* sample_cmd =
      app.add_subcommand("sample", "Emit sampled configurations (JSON lines)");
  sample_cmd->add_option("--n", opt.n, "Points per configuration");
  sample_cmd->add_option("--count", opt.count, "Number of configurations");
  sample_cmd->add_option("--seed", opt.seed, "PRNG seed");
  sample_cmd->add_option("--kind", opt.kind, "Sampler kind");
  sample_cmd->add_option("--jitter", opt.jitter, "Sampler noise scale");

  CLI::App* certify_cmd = app.add_subcommand(
      "certify4", "Positive definiteness certificate for a 4-point "
                  "configuration");
  certify_cmd->add_option("--input", opt.input,
                          "Configuration JSON file, or - for stdin");

  CLI::App* minimize_cmd =
      app.add_subcommand("minimize", "Search for the minimum of |D|");
  minimize_cmd->add_option("--n", opt.n, "Points per configuration");
  minimize_cmd->add_option("--restarts", opt.restarts, "Restart count");
  minimize_cmd->add_option("--seed", opt.seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      const atiyah::Configuration c = atiyah::load_configuration(opt.input);
      std::cout << atiyah::to_json(atiyah::analyze(c)).dump() << "\n";
      return 0;
    }

    if (sample_cmd->parsed()) {
      atiyah::SamplerSpec spec;
      spec.kind = atiyah::sampler_kind_from_string(opt.kind);
      spec.n = opt.n;
      spec.count = opt.count;
      spec.seed = opt.seed;
      spec.jitter = opt.jitter;
      for (const atiyah::Configuration& c : atiyah::sample(spec)) {
        std::cout << atiyah::to_json(c).dump() << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      atiyah::SamplerSpec spec;
      spec.kind = atiyah::sampler_kind_from_string(opt.kind);
      spec.n = opt.n;
      spec.count = opt.count;
      spec.seed = opt.seed;
      spec.jitter = opt.jitter;
      const atiyah::Suite suite = atiyah::suite_from_string(opt.suite);
      const atiyah::VerifyResult res =
          atiyah::verify_batch(atiyah::sample(spec), suite, opt.tol);
      if (opt.format == "csv") {
        std::cout << atiyah::csv_header() << "\n";
        for (const auto& rec : res.records) {
          if (!rec.error) std::cout << atiyah::csv_row(rec) << "\n";
        }
        std::cerr << atiyah::to_json(res.summary).dump() << "\n";
      } else if (opt.format == "json") {
        for (const auto& rec : res.records) {
          std::cout << atiyah::to_json(rec).dump() << "\n";
        }
        std::cout << atiyah::to_json(res.summary).dump() << "\n";
      } else {
        throw std::invalid_argument("unknown format: " + opt.format);
      }
      return res.summary.violations > 0 ? 1 : 0;
    }

    if (certify_cmd->parsed()) {
      const atiyah::Configuration c = atiyah::load_configuration(opt.input);
      std::cout << atiyah::to_json(atiyah::pd_certificate(c)).dump() << "\n";
      return 0;
    }

    if (minimize_cmd->parsed()) {
      const atiyah::MinimizeResult res =
          atiyah::minimize_absD(opt.n, opt.restarts, opt.seed);
      std::cout << atiyah::to_json(res).dump() << "\n";
      if (res.bestAbsD < 1.0 - 1e-6) {
        std::cerr << "WARNING: found |D| = " << res.bestAbsD
                  << " below 1; possible counterexample, please report\n";
      }
      return 0;
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
