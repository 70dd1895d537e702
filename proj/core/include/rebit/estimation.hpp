// SPDX-License-Identifier: Apache-2.0
//
// Streaming statistical reduction: histograms, binned conditional means
// with stable variance accumulation, Kolmogorov-Smirnov statistics and
// the boundary-violation counter. Accumulators merge deterministically;
// the pipelines always combine per-chunk partials in chunk-index order,
// which makes every reduction independent of the worker count.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rebit/entanglement.hpp"

namespace rebit {

/// Fixed-range histogram with half-open bins [a,b); the final bin is
/// closed so the domain maximum is counted in range.
class Histogram {
public:
  Histogram(double lower, double upper, std::size_t bin_count);

  void accumulate(double value);
  void merge(const Histogram& other);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  double bin_width() const { return (upper_ - lower_) / static_cast<double>(counts_.size()); }
  std::size_t bin_count() const { return counts_.size(); }
  std::uint64_t count(std::size_t bin) const { return counts_[bin]; }
  std::uint64_t underflow() const { return underflow_; }
  std::uint64_t overflow() const { return overflow_; }
  std::uint64_t total() const { return total_; }

  double bin_center(std::size_t bin) const;

  struct DensityPoint {
    double center = 0.0;
    double density = 0.0;  // count / (total * bin_width)
    double stderr_density = 0.0;
  };
  /// Empirical density; requires at least one accumulated sample.
  std::vector<DensityPoint> density() const;

private:
  double lower_;
  double upper_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t underflow_ = 0;
  std::uint64_t overflow_ = 0;
  std::uint64_t total_ = 0;
};

/// Conditional mean/variance of y per x-bin. Welford updates per bin,
/// merged with the exact pairwise combination rule.
class BinnedStat {
public:
  explicit BinnedStat(std::vector<double> edges);

  static std::vector<double> uniform_edges(double lower, double upper, std::size_t bin_count);

  void accumulate(double x, double y);
  void merge(const BinnedStat& other);

  std::size_t bin_count() const { return bins_.size(); }
  const std::vector<double>& edges() const { return edges_; }

  struct BinSummary {
    double x_center = 0.0;
    std::uint64_t count = 0;
    std::optional<double> mean;           // empty when count == 0, never 0 by default
    std::optional<double> stderr_mean;    // empty when count < 2
  };
  std::vector<BinSummary> summary() const;

private:
  struct Accumulator {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
  };
  std::vector<double> edges_;
  std::vector<Accumulator> bins_;
  std::uint64_t dropped_ = 0;  // x outside [edges.front(), edges.back()]
};

struct KsResult {
  double statistic = 0.0;  // sup |F_n - F|
  std::size_t n = 0;
  double scaled = 0.0;  // statistic * sqrt(n)
};

/// One-sample Kolmogorov-Smirnov statistic against the uniform CDF on
/// [0,1]. Ties contribute through the usual sorted-order bounds.
KsResult ks_uniform(std::vector<double> samples);

struct KsTwoSampleResult {
  double statistic = 0.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double scaled = 0.0;  // statistic * sqrt(n1*n2/(n1+n2))
};

/// Two-sample Kolmogorov-Smirnov statistic.
KsTwoSampleResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic critical value on the scaled statistic: sqrt(-ln(alpha/2)/2).
double ks_scaled_critical(double alpha);

/// Number of records whose squared CFR concurrence exceeds the
/// maximal-concurrence boundary at their participation ratio by more
/// than `tolerance`. Records must carry the CFR fields.
std::size_t boundary_violations(std::span<const StateRecord> records, double tolerance);

/// Single-record form of the same predicate, for streaming counts.
bool violates_boundary(const StateRecord& record, double tolerance);

}  // namespace rebit
