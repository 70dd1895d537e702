// SPDX-License-Identifier: Apache-2.0

#include "rebit/runner.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rebit/analytics.hpp"
#include "rebit/parallel.hpp"
#include "rebit/version.hpp"

namespace rebit {

namespace {

void append_g17(std::string& s, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  s += buf;
}

std::string g17(double v) {
  std::string s;
  append_g17(s, v);
  return s;
}

constexpr double kLn4 = 2.0 * std::numbers::ln2;

const std::array<ColumnSpec, 8>& column_registry() {
  static const std::array<ColumnSpec, 8> cols = {{
      {"participation_ratio", 1.0, 4.0, false, [](const StateRecord& r) { return std::optional<double>(r.participation_ratio); }},
      {"purity", 0.25, 1.0, false, [](const StateRecord& r) { return std::optional<double>(r.purity); }},
      {"entropy_vn", 0.0, kLn4, false, [](const StateRecord& r) { return std::optional<double>(r.entropy_vn); }},
      {"lambda_max", 0.25, 1.0, false, [](const StateRecord& r) { return std::optional<double>(r.lambda_max); }},
      {"c_cfr", 0.0, 1.0, true, [](const StateRecord& r) { return r.c_cfr; }},
      {"e_cfr", 0.0, 1.0, true, [](const StateRecord& r) { return r.e_cfr; }},
      {"c_wootters", 0.0, 1.0, false, [](const StateRecord& r) { return std::optional<double>(r.c_wootters); }},
      {"e_wootters", 0.0, 1.0, false, [](const StateRecord& r) { return std::optional<double>(r.e_wootters); }},
  }};
  return cols;
}

void write_run_header(std::ostream& out, const RunConfig& config, const char* command) {
  out << "# rebitlab " << kVersion << "\n";
  out << "# command: " << command << "\n";
  if (config.input_csv) {
    out << "# input: " << *config.input_csv << "\n";
  } else {
    out << "# ensemble: " << ensemble_name(config.ensemble) << "\n";
    out << "# n_samples: " << config.n_samples << "\n";
    out << "# master_seed: " << config.seed.master_seed << "\n";
    out << "# chunk_size: " << config.seed.chunk_size << "\n";
    out << "# workers: any (output is independent of worker count)\n";
  }
  out << "# units: e_cfr, e_wootters in bits (log2); entropy_vn in nats (ln)\n";
}

std::vector<const ColumnSpec*> record_columns(EnsembleKind kind) {
  std::vector<const ColumnSpec*> cols;
  for (const ColumnSpec& c : column_registry()) {
    if (c.real_only && !ensemble_is_real(kind)) continue;
    cols.push_back(&c);
  }
  return cols;
}

const ColumnSpec& require_column(const RunConfig& config, std::string_view name) {
  const ColumnSpec* col = find_column(name);
  if (col == nullptr) throw ConfigError("unknown column: " + std::string(name));
  if (!config.input_csv && col->real_only && !ensemble_is_real(config.ensemble)) {
    throw ConfigError("column " + std::string(name) + " is not defined for ensemble " + ensemble_name(config.ensemble));
  }
  return *col;
}

void check_config(const RunConfig& config) {
  if (config.n_samples < 1) throw ConfigError("n_samples must be at least 1");
  if (config.bins < 2) throw ConfigError("bins must be at least 2");
  if (config.seed.chunk_size < 1) throw ConfigError("chunk_size must be at least 1");
}

// ---- reading back sample CSVs ----------------------------------------

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

class SampleCsvReader {
public:
  explicit SampleCsvReader(const std::string& path) : in_(path) {
    if (!in_) throw IoError("cannot open input CSV: " + path);
    std::string line;
    while (std::getline(in_, line)) {
      if (line.empty() || line[0] == '#') continue;
      header_ = split_csv_line(line);
      return;
    }
    throw ConfigError("input CSV has no header row: " + path);
  }

  std::size_t column_index(std::string_view name) const {
    for (std::size_t k = 0; k < header_.size(); ++k) {
      if (header_[k] == name) return k;
    }
    throw ConfigError("input CSV has no column named " + std::string(name));
  }

  /// Feeds the selected fields of every data row to `fn`.
  template <typename Fn>
  void for_each_row(const std::vector<std::size_t>& indices, Fn&& fn) {
    std::string line;
    std::vector<double> values(indices.size());
    while (std::getline(in_, line)) {
      if (line.empty() || line[0] == '#') continue;
      const std::vector<std::string> fields = split_csv_line(line);
      for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= fields.size() || fields[indices[k]].empty()) {
          throw ConfigError("input CSV row is missing a requested field");
        }
        try {
          values[k] = std::stod(fields[indices[k]]);
        } catch (const std::exception&) {
          throw ConfigError("input CSV field is not numeric: " + fields[indices[k]]);
        }
      }
      fn(values);
    }
  }

private:
  std::ifstream in_;
  std::vector<std::string> header_;
};

}  // namespace

const ColumnSpec* find_column(std::string_view name) {
  for (const ColumnSpec& c : column_registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ensemble_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::RealMixed: return "real-mixed";
    case EnsembleKind::RealPure: return "real-pure";
    case EnsembleKind::ComplexMixed: return "complex-mixed";
    case EnsembleKind::ComplexPure: return "complex-pure";
  }
  return "?";
}

EnsembleKind parse_ensemble(std::string_view name) {
  if (name == "real-mixed") return EnsembleKind::RealMixed;
  if (name == "real-pure") return EnsembleKind::RealPure;
  if (name == "complex-mixed") return EnsembleKind::ComplexMixed;
  if (name == "complex-pure") return EnsembleKind::ComplexPure;
  throw ConfigError("unknown ensemble: " + std::string(name) +
                    " (expected real-mixed, real-pure, complex-mixed or complex-pure)");
}

void run_sample(const RunConfig& config, std::ostream& out) {
  check_config(config);
  write_run_header(out, config, "sample");

  const std::vector<const ColumnSpec*> cols = record_columns(config.ensemble);
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k]->name;
  out << "\n";

  for_each_chunk_ordered<std::string>(
      config.n_samples, config.seed, config.workers,
      [&](std::uint64_t, std::uint64_t count, RandomStream& stream) {
        std::string block;
        block.reserve(count * 24 * cols.size());
        for (std::uint64_t i = 0; i < count; ++i) {
          const StateRecord rec = evaluate(sample_state(config.ensemble, stream));
          for (std::size_t k = 0; k < cols.size(); ++k) {
            if (k) block += ',';
            append_g17(block, *cols[k]->extract(rec));
          }
          block += '\n';
        }
        return block;
      },
      [&](std::uint64_t, std::string block) { out << block; });
}

void run_hist(const RunConfig& config, std::ostream& out) {
  check_config(config);
  const ColumnSpec& col = require_column(config, config.column);

  Histogram hist(col.lower, col.upper, config.bins);
  if (config.input_csv) {
    SampleCsvReader reader(*config.input_csv);
    const std::vector<std::size_t> idx = {reader.column_index(col.name)};
    reader.for_each_row(idx, [&](const std::vector<double>& v) { hist.accumulate(v[0]); });
    if (hist.total() == 0) throw ConfigError("input CSV contains no data rows");
  } else {
    for_each_chunk_ordered<Histogram>(
        config.n_samples, config.seed, config.workers,
        [&](std::uint64_t, std::uint64_t count, RandomStream& stream) {
          Histogram part(col.lower, col.upper, config.bins);
          for (std::uint64_t i = 0; i < count; ++i) {
            const StateRecord rec = evaluate(sample_state(config.ensemble, stream));
            part.accumulate(*col.extract(rec));
          }
          return part;
        },
        [&](std::uint64_t, Histogram part) { hist.merge(part); });
  }

  write_run_header(out, config, "hist");
  out << "# column: " << col.name << "\n";
  out << "# bins: " << config.bins << " on [" << g17(col.lower) << ", " << g17(col.upper) << "]\n";
  out << "bin_center,density,stderr\n";
  for (const Histogram::DensityPoint& p : hist.density()) {
    out << g17(p.center) << ',' << g17(p.density) << ',' << g17(p.stderr_density) << "\n";
  }
}

void run_mean_vs(const RunConfig& config, std::ostream& out) {
  check_config(config);
  if (config.y_columns.empty()) throw ConfigError("mean-vs needs at least one y column");
  const ColumnSpec& xcol = require_column(config, config.x_column);
  std::vector<const ColumnSpec*> ycols;
  for (const std::string& name : config.y_columns) ycols.push_back(&require_column(config, name));

  const std::vector<double> edges = BinnedStat::uniform_edges(xcol.lower, xcol.upper, config.bins);
  std::vector<BinnedStat> stats(ycols.size(), BinnedStat(edges));

  if (config.input_csv) {
    SampleCsvReader reader(*config.input_csv);
    std::vector<std::size_t> idx = {reader.column_index(xcol.name)};
    for (const ColumnSpec* y : ycols) idx.push_back(reader.column_index(y->name));
    reader.for_each_row(idx, [&](const std::vector<double>& v) {
      for (std::size_t k = 0; k < ycols.size(); ++k) stats[k].accumulate(v[0], v[k + 1]);
    });
  } else {
    using Partial = std::vector<BinnedStat>;
    for_each_chunk_ordered<Partial>(
        config.n_samples, config.seed, config.workers,
        [&](std::uint64_t, std::uint64_t count, RandomStream& stream) {
          Partial part(ycols.size(), BinnedStat(edges));
          for (std::uint64_t i = 0; i < count; ++i) {
            const StateRecord rec = evaluate(sample_state(config.ensemble, stream));
            const double x = *xcol.extract(rec);
            for (std::size_t k = 0; k < ycols.size(); ++k) part[k].accumulate(x, *ycols[k]->extract(rec));
          }
          return part;
        },
        [&](std::uint64_t, Partial part) {
          for (std::size_t k = 0; k < ycols.size(); ++k) stats[k].merge(part[k]);
        });
  }

  write_run_header(out, config, "mean-vs");
  out << "# x_column: " << xcol.name << "\n";
  out << "# bins: " << config.bins << " on [" << g17(xcol.lower) << ", " << g17(xcol.upper) << "]\n";
  out << "x_center";
  for (const ColumnSpec* y : ycols) out << ",mean_" << y->name << ",stderr_" << y->name;
  out << ",count\n";

  std::vector<std::vector<BinnedStat::BinSummary>> summaries;
  for (const BinnedStat& s : stats) summaries.push_back(s.summary());
  for (std::size_t bin = 0; bin < config.bins; ++bin) {
    out << g17(summaries[0][bin].x_center);
    for (std::size_t k = 0; k < ycols.size(); ++k) {
      const BinnedStat::BinSummary& b = summaries[k][bin];
      out << ',' << (b.mean ? g17(*b.mean) : "");
      out << ',' << (b.stderr_mean ? g17(*b.stderr_mean) : "");
    }
    out << ',' << summaries[0][bin].count << "\n";
  }
}

CurveFiles run_curves(const RunConfig& config, const std::filesystem::path& out_dir) {
  if (config.curve_points < 2) throw ConfigError("curves need at least 2 points");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

  auto open = [&](const char* name) {
    std::filesystem::path p = out_dir / name;
    std::ofstream f(p);
    if (!f) throw IoError("cannot write " + p.string());
    f << "# rebitlab " << kVersion << "\n# command: curves\n# points: " << config.curve_points << "\n";
    return std::pair<std::filesystem::path, std::ofstream>(std::move(p), std::move(f));
  };

  CurveFiles files;
  const std::size_t n = config.curve_points;

  {
    auto [path, f] = open("boundary.csv");
    files.boundary = std::move(path);
    f << "participation_ratio,c2_max\n";
    for (std::size_t j = 0; j < n; ++j) {
      const double r = 1.0 + 3.0 * static_cast<double>(j) / static_cast<double>(n - 1);
      f << g17(r) << ',' << g17(boundary_c2_max(r)) << "\n";
    }
  }
  {
    auto [path, f] = open("pure_density.csv");
    files.pure_density = std::move(path);
    f << "e,p_density\n";
    for (const CurvePoint& p : pure_entanglement_density_curve(n)) {
      f << g17(p.abscissa) << ',' << g17(p.ordinate) << "\n";
    }
  }
  {
    auto [path, f] = open("maximal_family.csv");
    files.maximal_family = std::move(path);
    f << "beta,sigma_expectation,c_squared,participation_ratio\n";
    for (std::size_t j = 0; j < n; ++j) {
      const double beta = -0.5 + static_cast<double>(j) / static_cast<double>(n - 1);
      const MaximalFamilyMetrics m = maximal_family_metrics(beta);
      f << g17(beta) << ',' << g17(m.sigma_expectation) << ',' << g17(m.c_squared) << ',' << g17(m.participation) << "\n";
    }
  }
  return files;
}

}  // namespace rebit
