// SPDX-License-Identifier: Apache-2.0

#include "rebit/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rebit/analytics.hpp"

namespace rebit {

Histogram::Histogram(double lower, double upper, std::size_t bin_count)
    : lower_(lower), upper_(upper), counts_(bin_count, 0) {
  if (!(upper > lower) || bin_count == 0) {
    throw std::invalid_argument("Histogram: need upper > lower and at least one bin");
  }
}

void Histogram::accumulate(double value) {
  if (std::isnan(value)) throw std::invalid_argument("Histogram: NaN sample");
  ++total_;
  if (value < lower_) {
    ++underflow_;
  } else if (value > upper_) {
    ++overflow_;
  } else {
    auto bin = static_cast<std::size_t>((value - lower_) / (upper_ - lower_) * static_cast<double>(counts_.size()));
    if (bin >= counts_.size()) bin = counts_.size() - 1;  // value == upper: closed last bin
    ++counts_[bin];
  }
}

void Histogram::merge(const Histogram& other) {
  if (other.lower_ != lower_ || other.upper_ != upper_ || other.counts_.size() != counts_.size()) {
    throw std::invalid_argument("Histogram::merge: incompatible binning");
  }
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
  underflow_ += other.underflow_;
  overflow_ += other.overflow_;
  total_ += other.total_;
}

double Histogram::bin_center(std::size_t bin) const {
  return lower_ + (static_cast<double>(bin) + 0.5) * bin_width();
}

std::vector<Histogram::DensityPoint> Histogram::density() const {
  if (total_ == 0) throw std::logic_error("Histogram::density: no samples accumulated");
  const double n = static_cast<double>(total_);
  const double w = bin_width();
  std::vector<DensityPoint> out(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    const double p = static_cast<double>(counts_[k]) / n;
    out[k].center = bin_center(k);
    out[k].density = p / w;
    out[k].stderr_density = std::sqrt(p * (1.0 - p) / n) / w;
  }
  return out;
}

BinnedStat::BinnedStat(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 2 || !std::is_sorted(edges_.begin(), edges_.end()) ||
      std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("BinnedStat: edges must be strictly increasing, length >= 2");
  }
  bins_.resize(edges_.size() - 1);
}

std::vector<double> BinnedStat::uniform_edges(double lower, double upper, std::size_t bin_count) {
  if (!(upper > lower) || bin_count == 0) {
    throw std::invalid_argument("BinnedStat: need upper > lower and at least one bin");
  }
  std::vector<double> edges(bin_count + 1);
  for (std::size_t k = 0; k <= bin_count; ++k) {
    edges[k] = lower + (upper - lower) * static_cast<double>(k) / static_cast<double>(bin_count);
  }
  edges.back() = upper;
  return edges;
}

void BinnedStat::accumulate(double x, double y) {
  if (std::isnan(x) || std::isnan(y)) throw std::invalid_argument("BinnedStat: NaN sample");
  if (x < edges_.front() || x > edges_.back()) {
    ++dropped_;
    return;
  }
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  std::size_t bin = static_cast<std::size_t>(it - edges_.begin());
  bin = bin == 0 ? 0 : bin - 1;
  if (bin >= bins_.size()) bin = bins_.size() - 1;  // x == upper edge: closed last bin

  Accumulator& acc = bins_[bin];
  ++acc.n;
  const double d = y - acc.mean;
  acc.mean += d / static_cast<double>(acc.n);
  acc.m2 += d * (y - acc.mean);
}

void BinnedStat::merge(const BinnedStat& other) {
  if (other.edges_ != edges_) throw std::invalid_argument("BinnedStat::merge: incompatible edges");
  for (std::size_t k = 0; k < bins_.size(); ++k) {
    Accumulator& a = bins_[k];
    const Accumulator& b = other.bins_[k];
    if (b.n == 0) continue;
    if (a.n == 0) {
      a = b;
      continue;
    }
    const double na = static_cast<double>(a.n);
    const double nb = static_cast<double>(b.n);
    const double n = na + nb;
    const double delta = b.mean - a.mean;
    a.mean += delta * nb / n;
    a.m2 += b.m2 + delta * delta * na * nb / n;
    a.n += b.n;
  }
  dropped_ += other.dropped_;
}

std::vector<BinnedStat::BinSummary> BinnedStat::summary() const {
  std::vector<BinSummary> out(bins_.size());
  for (std::size_t k = 0; k < bins_.size(); ++k) {
    out[k].x_center = 0.5 * (edges_[k] + edges_[k + 1]);
    out[k].count = bins_[k].n;
    if (bins_[k].n >= 1) out[k].mean = bins_[k].mean;
    if (bins_[k].n >= 2) {
      const double n = static_cast<double>(bins_[k].n);
      out[k].stderr_mean = std::sqrt(bins_[k].m2 / (n - 1.0) / n);
    }
  }
  return out;
}

KsResult ks_uniform(std::vector<double> samples) {
  if (samples.size() < 10) throw std::invalid_argument("ks_uniform: need at least 10 samples");
  for (double v : samples) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("ks_uniform: sample outside [0,1]");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double fi = static_cast<double>(i);
    d = std::max(d, std::max((fi + 1.0) / n - samples[i], samples[i] - fi / n));
  }
  return {d, samples.size(), d * std::sqrt(n)};
}

KsTwoSampleResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return {d, a.size(), b.size(), d * std::sqrt(na * nb / (na + nb))};
}

double ks_scaled_critical(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_scaled_critical: alpha outside (0,1)");
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

bool violates_boundary(const StateRecord& record, double tolerance) {
  if (!record.c_cfr.has_value()) {
    throw std::invalid_argument("boundary check: record lacks CFR fields (complex ensemble?)");
  }
  const double c2 = *record.c_cfr * *record.c_cfr;
  return c2 > boundary_c2_max(record.participation_ratio) + tolerance;
}

std::size_t boundary_violations(std::span<const StateRecord> records, double tolerance) {
  std::size_t n = 0;
  for (const StateRecord& r : records) {
    if (violates_boundary(r, tolerance)) ++n;
  }
  return n;
}

}  // namespace rebit
