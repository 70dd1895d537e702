// SPDX-License-Identifier: Apache-2.0
//
// rebitlab: reproducible figure-data runs for two-rebit entanglement
// statistics. Exit codes: 0 ok, 1 bad configuration, 2 I/O failure,
// 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rebit/runner.hpp"
#include "rebit/verify.hpp"
#include "rebit/version.hpp"

namespace {

unsigned parse_workers(const std::string& w) {
  if (w == "auto") return 0;
  const int n = std::stoi(w);
  if (n < 1) throw rebit::ConfigError("workers must be 'auto' or a positive integer");
  return static_cast<unsigned>(n);
}

// Streams to stdout when path is "-".
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(std::cout);
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  fn(out);
  out.flush();
  if (!out) {
    std::cerr << "error: write failed for " << path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo laboratory for two-rebit entanglement statistics"};
  app.set_version_flag("--version", std::string("rebitlab ") + rebit::kVersion);
  app.require_subcommand(1);

  rebit::RunConfig config;
  std::string ensemble = "real-mixed";
  std::string workers = "auto";
  std::string out_path = "-";
  std::string input_csv;

  auto add_common = [&](CLI::App* cmd, bool sampling) {
    cmd->add_option("--seed", config.seed.master_seed, "Master seed")->capture_default_str();
    cmd->add_option("--chunk-size", config.seed.chunk_size, "Samples per random stream")->capture_default_str();
    cmd->add_option("--workers", workers, "Worker threads, or 'auto'")->capture_default_str();
    cmd->add_option("--out", out_path, "Output path ('-' = stdout)")->capture_default_str();
    if (sampling) {
      cmd->add_option("--ensemble", ensemble, "real-mixed | real-pure | complex-mixed | complex-pure")
          ->capture_default_str();
      cmd->add_option("--n", config.n_samples, "Number of samples")->capture_default_str();
    }
  };

  CLI::App* sample = app.add_subcommand("sample", "Write one observable record per sampled state");
  add_common(sample, true);

  std::size_t hist_bins = 100;
  std::size_t mean_bins = 60;

  CLI::App* hist = app.add_subcommand("hist", "Empirical density of one observable column");
  add_common(hist, true);
  hist->add_option("--column", config.column, "Observable column")->capture_default_str();
  hist->add_option("--bins", hist_bins, "Histogram bins")->capture_default_str();
  hist->add_option("--input", input_csv, "Reduce a prior sample CSV instead of sampling");

  CLI::App* mean_vs = app.add_subcommand("mean-vs", "Binned conditional means of observables");
  add_common(mean_vs, true);
  mean_vs->add_option("--x", config.x_column, "Conditioning column")->capture_default_str();
  mean_vs->add_option("--y", config.y_columns, "Averaged columns")->delimiter(',')->capture_default_str();
  mean_vs->add_option("--bins", mean_bins, "Number of x bins")->capture_default_str();
  mean_vs->add_option("--input", input_csv, "Reduce a prior sample CSV instead of sampling");

  CLI::App* curves = app.add_subcommand("curves", "Write the analytic curve files (boundary, pure density, extremal family)");
  curves->add_option("--points", config.curve_points, "Grid resolution")->capture_default_str();
  curves->add_option("--out", out_path, "Output directory")->default_str(".");

  rebit::VerifyConfig vconfig;
  CLI::App* verify = app.add_subcommand("verify", "Run the full numerical verification suite");
  verify->add_option("--seed", vconfig.master_seed, "Master seed")->capture_default_str();
  verify->add_option("--chunk-size", vconfig.chunk_size, "Samples per random stream")->capture_default_str();
  verify->add_option("--workers", workers, "Worker threads, or 'auto'")->capture_default_str();
  verify->add_option("--scale", vconfig.scale, "Sample-count multiplier (thresholds unchanged)")->capture_default_str();
  verify->add_flag("--corrupt-boundary", vconfig.corrupt_boundary)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    config.workers = parse_workers(workers);
    vconfig.workers = config.workers;
    if (!input_csv.empty()) config.input_csv = input_csv;
    if (sample->parsed() || hist->parsed() || mean_vs->parsed()) {
      config.ensemble = rebit::parse_ensemble(ensemble);
    }

    if (sample->parsed()) {
      return with_output(out_path, [&](std::ostream& os) { rebit::run_sample(config, os); });
    }
    if (hist->parsed()) {
      config.bins = hist_bins;
      return with_output(out_path, [&](std::ostream& os) { rebit::run_hist(config, os); });
    }
    if (mean_vs->parsed()) {
      config.bins = mean_bins;
      return with_output(out_path, [&](std::ostream& os) { rebit::run_mean_vs(config, os); });
    }
    if (curves->parsed()) {
      const rebit::CurveFiles files = rebit::run_curves(config, out_path == "-" ? "." : out_path);
      std::cout << "wrote " << files.boundary.string() << "\n"
                << "wrote " << files.pure_density.string() << "\n"
                << "wrote " << files.maximal_family.string() << "\n";
      return 0;
    }
    if (verify->parsed()) {
      const std::vector<rebit::CheckResult> checks = rebit::run_acceptance_checks(vconfig);
      rebit::write_report(checks, std::cout);
      if (!rebit::all_passed(checks)) {
        std::cerr << "verification failed\n";
        return 3;
      }
      return 0;
    }
  } catch (const rebit::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rebit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
