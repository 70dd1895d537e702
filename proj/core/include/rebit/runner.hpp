// SPDX-License-Identifier: Apache-2.0
//
// Figure-data pipelines behind the CLI: ensemble sampling to CSV,
// streaming histograms and conditional means (on-the-fly or from a prior
// sample CSV), and the analytic curve files. All outputs carry a
// reproduction header and are byte-identical for a fixed seed across
// repeated runs and any worker count.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rebit/estimation.hpp"
#include "rebit/sampling.hpp"

namespace rebit {

/// Invalid configuration (unknown column, bad ensemble/column pairing...).
/// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure; the CLI maps this to exit code 2.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  EnsembleKind ensemble = EnsembleKind::RealMixed;
  std::uint64_t n_samples = 100000;
  SeedSpec seed{};
  unsigned workers = 0;  // 0 = one per hardware thread
  std::size_t bins = 100;
  std::string column = "e_cfr";
  std::string x_column = "participation_ratio";
  std::vector<std::string> y_columns = {"e_cfr", "e_wootters"};
  std::optional<std::string> input_csv;  // reduce a prior sample CSV instead of sampling
  std::size_t curve_points = 1001;
};

/// Observable column of a StateRecord CSV.
struct ColumnSpec {
  std::string_view name;
  double lower;
  double upper;  // default estimator range
  bool real_only;
  std::optional<double> (*extract)(const StateRecord&);
};

/// Registry of all record columns; nullptr when the name is unknown.
const ColumnSpec* find_column(std::string_view name);

std::string ensemble_name(EnsembleKind kind);
EnsembleKind parse_ensemble(std::string_view name);

/// One StateRecord row per sample, full round-trip precision.
void run_sample(const RunConfig& config, std::ostream& out);

/// (bin_center, density, stderr) rows of one column's distribution.
void run_hist(const RunConfig& config, std::ostream& out);

/// (x_center, mean/stderr per y column..., count) rows; empty bins keep
/// their row with count 0 and empty mean fields.
void run_mean_vs(const RunConfig& config, std::ostream& out);

struct CurveFiles {
  std::filesystem::path boundary;
  std::filesystem::path pure_density;
  std::filesystem::path maximal_family;
};

/// Writes the three analytic curve files into `out_dir`.
CurveFiles run_curves(const RunConfig& config, const std::filesystem::path& out_dir);

}  // namespace rebit
