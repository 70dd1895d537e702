// SPDX-License-Identifier: Apache-2.0

#include "rebit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rebit/analytics.hpp"
#include "rebit/estimation.hpp"
#include "rebit/parallel.hpp"
#include "rebit/runner.hpp"

namespace rebit {

namespace {

constexpr double kKsPureThreshold = 1.95;        // alpha = 0.001
constexpr double kKsMeasureThreshold = 1.6277;   // alpha = 0.01
constexpr double kBoundaryTolerance = 1e-9;
constexpr double kFamilyTolerance = 1e-12;
constexpr double kEndpointWindow = 0.05;
constexpr double kSupNormWindow = 0.05;
constexpr double kWoottersZeroTol = 1e-9;
constexpr double kLambdaMargin = 1.0 / 3.0 - 1e-6;
constexpr double kOrderingSlack = 1e-9;

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Each check samples from its own stream namespace so the criteria stay
// statistically independent of each other.
SeedSpec subseed(const VerifyConfig& c, std::uint64_t tag) {
  return SeedSpec{mix64(c.master_seed ^ (0xD1B54A32D192ED03ULL * (tag + 1))), c.chunk_size};
}

std::uint64_t scaled_count(const VerifyConfig& c, std::uint64_t base) {
  const double n = static_cast<double>(base) * c.scale;
  return std::max<std::uint64_t>(1000, static_cast<std::uint64_t>(std::llround(n)));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Inverse of eof_from_concurrence on [0,1], by bisection (E is strictly
// increasing in C).
double concurrence_of_eof(double e) {
  if (e <= 0.0) return 0.0;
  if (e >= 1.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (eof_from_concurrence(mid) < e ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---- shared sampling passes -------------------------------------------

template <typename PerRecord>
void stream_records(const VerifyConfig& c, std::uint64_t tag, EnsembleKind kind, std::uint64_t n,
                    PerRecord&& per_record) {
  using Partial = std::vector<StateRecord>;
  for_each_chunk_ordered<Partial>(
      n, subseed(c, tag), c.workers,
      [&](std::uint64_t, std::uint64_t count, RandomStream& stream) {
        Partial recs;
        recs.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) recs.push_back(evaluate(sample_state(kind, stream)));
        return recs;
      },
      [&](std::uint64_t, Partial recs) {
        for (const StateRecord& r : recs) per_record(r);
      });
}

// ---- criterion 1 --------------------------------------------------------

CheckResult check_uniform_concurrence(const VerifyConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t n = scaled_count(c, 100000);

  std::vector<double> concurrences;
  concurrences.reserve(n);
  for_each_chunk_ordered<std::vector<double>>(
      n, subseed(c, 1), c.workers,
      [](std::uint64_t, std::uint64_t count, RandomStream& stream) {
        std::vector<double> v;
        v.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
          v.push_back(concurrence_cfr(pure_to_density(sample_pure_rebit(stream))));
        }
        return v;
      },
      [&](std::uint64_t, std::vector<double> v) {
        concurrences.insert(concurrences.end(), v.begin(), v.end());
      });

  const KsResult ks = ks_uniform(std::move(concurrences));
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  CheckResult r;
  r.name = "uniform-concurrence-law";
  r.observed = ks.scaled;
  r.threshold = kKsPureThreshold;
  r.passed = ks.scaled < kKsPureThreshold && elapsed < 10.0;
  r.detail = "KS scaled statistic of " + std::to_string(n) + " pure concurrences (alpha=0.001); " + fmt(elapsed) + " s (limit 10 s)";
  return r;
}

// ---- criteria 2, 3 and the real half of 8 -------------------------------

struct PureRebitChecks {
  CheckResult endpoint;
  CheckResult supnorm;
  std::size_t density_inversions = 0;
  std::string inversion_detail;
};

PureRebitChecks check_pure_rebit_density(const VerifyConfig& c) {
  const std::uint64_t n = scaled_count(c, 1000000);
  Histogram fine(0.0, 1.0, 100);
  Histogram coarse(0.0, 1.0, 20);
  stream_records(c, 2, EnsembleKind::RealPure, n, [&](const StateRecord& r) {
    fine.accumulate(*r.e_cfr);
    coarse.accumulate(*r.e_cfr);
  });

  PureRebitChecks out;

  const std::vector<Histogram::DensityPoint> d = fine.density();
  const double last = d.back().density;
  const std::vector<CurvePoint> curve = pure_entanglement_density_curve(10000);
  const double analytic_dev = std::abs(curve.back().ordinate - std::numbers::ln2);

  out.endpoint.name = "endpoint-density-ln2";
  out.endpoint.observed = std::abs(last - std::numbers::ln2);
  out.endpoint.threshold = kEndpointWindow;
  out.endpoint.passed = out.endpoint.observed <= kEndpointWindow && analytic_dev <= 1e-9;
  out.endpoint.detail = "last-bin density " + fmt(last) + " vs ln2 = " + fmt(std::numbers::ln2) +
                        "; analytic endpoint deviation " + fmt(analytic_dev) + " (<= 1e-9)";

  // Expected average density over a bin is the concurrence mass it covers
  // divided by the bin width.
  double sup = 0.0;
  for (std::size_t k = 0; k < fine.bin_count(); ++k) {
    const double center = d[k].center;
    if (center < 0.05 || center > 0.95) continue;
    const double e0 = fine.lower() + static_cast<double>(k) * fine.bin_width();
    const double e1 = e0 + fine.bin_width();
    const double expected = (concurrence_of_eof(e1) - concurrence_of_eof(e0)) / fine.bin_width();
    sup = std::max(sup, std::abs(d[k].density - expected));
  }
  out.supnorm.name = "pure-density-vs-analytic";
  out.supnorm.observed = sup;
  out.supnorm.threshold = kSupNormWindow;
  out.supnorm.passed = sup <= kSupNormWindow;
  out.supnorm.detail = "sup-norm over bin centers in [0.05, 0.95], " + std::to_string(n) + " samples";

  const std::vector<Histogram::DensityPoint> cd = coarse.density();
  for (std::size_t k = 0; k + 1 < cd.size(); ++k) {
    if (cd[k + 1].density > cd[k].density) ++out.density_inversions;
  }
  out.inversion_detail = "real-pure coarse density inversions: " + std::to_string(out.density_inversions);
  return out;
}

// ---- criteria 4 and 7 ----------------------------------------------------

std::pair<CheckResult, CheckResult> check_boundary_and_threshold(const VerifyConfig& c) {
  const std::uint64_t n = scaled_count(c, 1000000);
  const double corrupt_offset = c.corrupt_boundary ? 0.05 : 0.0;

  std::uint64_t boundary_viol = 0;
  std::uint64_t wootters_viol = 0;
  stream_records(c, 4, EnsembleKind::RealMixed, n, [&](const StateRecord& r) {
    const double c2 = *r.c_cfr * *r.c_cfr;
    if (c2 > boundary_c2_max(r.participation_ratio) - corrupt_offset + kBoundaryTolerance) ++boundary_viol;
    if (r.lambda_max <= kLambdaMargin && r.c_wootters > kWoottersZeroTol) ++wootters_viol;
  });

  // The two extremal families must sit on the boundary itself.
  double family_dev = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double p = static_cast<double>(k) / 100.0;
    const RebitDensityMatrix rho = maximal_entangled_mixture(p);
    const double c2 = concurrence_cfr(rho) * concurrence_cfr(rho);
    family_dev = std::max(family_dev,
                          std::abs(c2 - (boundary_c2_max(participation_ratio(rho)) - corrupt_offset)));
  }
  for (int k = 0; k <= 100; ++k) {
    const double beta = -0.5 + static_cast<double>(k) / 100.0;
    const RebitDensityMatrix rho = maximal_family_state(beta);
    const double c2 = concurrence_cfr(rho) * concurrence_cfr(rho);
    family_dev = std::max(family_dev,
                          std::abs(c2 - (boundary_c2_max(participation_ratio(rho)) - corrupt_offset)));
  }

  CheckResult boundary;
  boundary.name = "boundary-dominance";
  boundary.observed = static_cast<double>(boundary_viol);
  boundary.threshold = 0.0;
  boundary.passed = boundary_viol == 0 && family_dev <= kFamilyTolerance;
  boundary.detail = "violations among " + std::to_string(n) + " real-mixed samples at tol 1e-9; extremal-family max deviation " +
                    fmt(family_dev) + " (<= 1e-12)";

  CheckResult wootters;
  wootters.name = "wootters-separability-threshold";
  wootters.observed = static_cast<double>(wootters_viol);
  wootters.threshold = 0.0;
  wootters.passed = wootters_viol == 0;
  wootters.detail = "states with lambda_max <= 1/3 - 1e-6 and c_wootters > 1e-9, out of " + std::to_string(n);
  return {boundary, wootters};
}

// ---- criterion 5 ----------------------------------------------------------

CheckResult check_family_closed_forms() {
  double dev = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double beta = -0.5 + static_cast<double>(k) / 100.0;
    const RebitDensityMatrix rho = maximal_family_state(beta);
    const MaximalFamilyMetrics m = maximal_family_metrics(beta);
    const double expect = trace(matmul(rho.matrix().full(), sigma_yy().full()));
    const double c = concurrence_cfr(rho);
    dev = std::max(dev, std::abs(expect - m.sigma_expectation));
    dev = std::max(dev, std::abs(c * c - m.c_squared));
    dev = std::max(dev, std::abs(participation_ratio(rho) - m.participation));
  }
  CheckResult r;
  r.name = "extremal-family-closed-forms";
  r.observed = dev;
  r.threshold = kFamilyTolerance;
  r.passed = dev <= kFamilyTolerance;
  r.detail = "max deviation of (<sigma sigma>, C^2, R) over the 101-point beta grid";
  return r;
}

// ---- criterion 6 ----------------------------------------------------------

CheckResult check_formula_ordering(const VerifyConfig& c) {
  const std::uint64_t n = scaled_count(c, 100000);
  double min_gap = 1.0;
  BinnedStat cfr(BinnedStat::uniform_edges(1.0, 4.0, 60));
  BinnedStat wootters(BinnedStat::uniform_edges(1.0, 4.0, 60));
  stream_records(c, 6, EnsembleKind::RealMixed, n, [&](const StateRecord& r) {
    min_gap = std::min(min_gap, *r.e_cfr - r.e_wootters);
    cfr.accumulate(r.participation_ratio, *r.e_cfr);
    wootters.accumulate(r.participation_ratio, r.e_wootters);
  });

  bool bins_ordered = true;
  std::size_t nonempty = 0;
  const auto sc = cfr.summary();
  const auto sw = wootters.summary();
  for (std::size_t k = 0; k < sc.size(); ++k) {
    if (sc[k].count == 0) continue;
    ++nonempty;
    if (!(*sc[k].mean > *sw[k].mean)) bins_ordered = false;
  }

  CheckResult r;
  r.name = "cfr-dominates-wootters";
  r.observed = min_gap;
  r.threshold = -kOrderingSlack;
  r.passed = min_gap >= -kOrderingSlack && bins_ordered;
  r.detail = "pointwise min(e_cfr - e_wootters) over " + std::to_string(n) + " samples; mean ordering holds in " +
             std::to_string(nonempty) + " nonempty R-bins: " + (bins_ordered ? "yes" : "no");
  return r;
}

// ---- criterion 8 ----------------------------------------------------------

CheckResult check_density_shapes(const VerifyConfig& c, const PureRebitChecks& pure_real) {
  const std::uint64_t n = scaled_count(c, 1000000);
  Histogram coarse(0.0, 1.0, 20);
  stream_records(c, 8, EnsembleKind::ComplexPure, n, [&](const StateRecord& r) {
    coarse.accumulate(r.e_wootters);
  });

  const std::vector<Histogram::DensityPoint> d = coarse.density();
  std::size_t argmax = 0;
  for (std::size_t k = 1; k < d.size(); ++k) {
    if (d[k].density > d[argmax].density) argmax = k;
  }
  const bool interior = argmax != 0 && argmax != d.size() - 1;

  CheckResult r;
  r.name = "pure-density-shape-contrast";
  r.observed = static_cast<double>(pure_real.density_inversions);
  r.threshold = 1.0;
  r.passed = pure_real.density_inversions <= 1 && interior;
  r.detail = pure_real.inversion_detail + " (<= 1); complex-pure density argmax at bin " + std::to_string(argmax) +
             " of 20 (interior: " + (interior ? "yes" : "no") + ")";
  return r;
}

// ---- criterion 9 ----------------------------------------------------------

CheckResult check_measure_sanity(const VerifyConfig& c) {
  const std::uint64_t n = scaled_count(c, 100000);

  std::vector<double> lam_direct;
  lam_direct.reserve(n);
  stream_records(c, 9, EnsembleKind::RealMixed, n, [&](const StateRecord& r) {
    lam_direct.push_back(r.lambda_max);
  });

  // Independent draw, conjugated by one fixed orthogonal matrix.
  RandomStream qstream = derive_stream(subseed(c, 90), 0);
  const Mat4 q = sample_orthogonal_haar(qstream);
  std::vector<double> lam_conj;
  lam_conj.reserve(n);
  for_each_chunk_ordered<std::vector<double>>(
      n, subseed(c, 91), c.workers,
      [&](std::uint64_t, std::uint64_t count, RandomStream& stream) {
        std::vector<double> v;
        v.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
          const RebitDensityMatrix rho = sample_rebit_state(EnsembleKind::RealMixed, stream);
          const Mat4 conj = matmul(matmul(q, rho.matrix().full()), transpose(q));
          SymMat4 sym;
          for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) sym.set(a, b, 0.5 * (conj(a, b) + conj(b, a)));
          v.push_back(lambda_max(RebitDensityMatrix(sym)));
        }
        return v;
      },
      [&](std::uint64_t, std::vector<double> v) { lam_conj.insert(lam_conj.end(), v.begin(), v.end()); });

  const KsTwoSampleResult ks_conj = ks_two_sample(std::move(lam_direct), std::move(lam_conj));

  // Simplex marginal against its analytic CDF 1 - (1-x)^3.
  std::vector<double> transformed;
  transformed.reserve(n);
  for_each_chunk_ordered<std::vector<double>>(
      n, subseed(c, 92), c.workers,
      [](std::uint64_t, std::uint64_t count, RandomStream& stream) {
        std::vector<double> v;
        v.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
          const double x = sample_simplex(stream)[0];
          const double omx = 1.0 - x;
          v.push_back(1.0 - omx * omx * omx);
        }
        return v;
      },
      [&](std::uint64_t, std::vector<double> v) { transformed.insert(transformed.end(), v.begin(), v.end()); });
  const KsResult ks_simplex = ks_uniform(std::move(transformed));

  CheckResult r;
  r.name = "measure-sanity";
  r.observed = std::max(ks_conj.scaled, ks_simplex.scaled);
  r.threshold = kKsMeasureThreshold;
  r.passed = ks_conj.scaled < kKsMeasureThreshold && ks_simplex.scaled < kKsMeasureThreshold;
  r.detail = "orthogonal-conjugation two-sample KS " + fmt(ks_conj.scaled) + "; simplex-marginal KS " +
             fmt(ks_simplex.scaled) + " (alpha=0.01)";
  return r;
}

// ---- criterion 10 ----------------------------------------------------------

CheckResult check_worker_determinism(const VerifyConfig& c) {
  RunConfig rc;
  rc.ensemble = EnsembleKind::RealMixed;
  rc.n_samples = scaled_count(c, 20000);
  rc.seed = subseed(c, 10);

  std::array<unsigned, 3> worker_counts = {1, 2, 8};
  std::array<std::string, 3> outputs;
  for (std::size_t k = 0; k < worker_counts.size(); ++k) {
    rc.workers = worker_counts[k];
    std::ostringstream os;
    run_sample(rc, os);
    outputs[k] = os.str();
  }
  const bool identical = outputs[0] == outputs[1] && outputs[1] == outputs[2];

  CheckResult r;
  r.name = "worker-count-determinism";
  r.observed = identical ? 0.0 : 1.0;
  r.threshold = 0.0;
  r.passed = identical;
  r.detail = "sample CSV bytes for workers {1,2,8}, n = " + std::to_string(rc.n_samples) +
             (identical ? ": identical" : ": DIFFER");
  return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const VerifyConfig& config) {
  std::vector<CheckResult> checks;
  checks.push_back(check_uniform_concurrence(config));

  const PureRebitChecks pure_real = check_pure_rebit_density(config);
  checks.push_back(pure_real.endpoint);
  checks.push_back(pure_real.supnorm);

  auto [boundary, wootters] = check_boundary_and_threshold(config);
  checks.push_back(boundary);
  checks.push_back(check_family_closed_forms());
  checks.push_back(check_formula_ordering(config));
  checks.push_back(wootters);
  checks.push_back(check_density_shapes(config, pure_real));
  checks.push_back(check_measure_sanity(config));
  checks.push_back(check_worker_determinism(config));
  return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void write_report(const std::vector<CheckResult>& checks, std::ostream& out) {
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const CheckResult& c = checks[k];
    out << (c.passed ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << c.name
        << "  observed=" << fmt(c.observed) << " threshold=" << fmt(c.threshold)
        << "  [" << c.detail << "]\n";
  }
}

}  // namespace rebit
