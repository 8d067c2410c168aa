#include "gframe/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "gframe/duals.hpp"
#include "gframe/error.hpp"
#include "gframe/generators.hpp"
#include "gframe/identities.hpp"
#include "gframe/rng.hpp"

namespace gframe {

namespace {

using nlohmann::ordered_json;

// Substream tags for the randomized companions.
enum : std::uint64_t {
  kTagParseval = 1,
  kTagWeight = 2,
  kTagApprox = 3,
  kTagDual = 4,
  kTagVector = 5,
  kTagReconstruct = 6,
};

constexpr std::array<double, 7> kPowerExponents = {-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0};

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  void record(double lhs, double rhs, double residual, double tolerance) {
    const bool ok = residual <= tolerance;
    const double ratio = tolerance > 0.0 ? residual / tolerance
                                         : (residual > 0.0 ? std::numeric_limits<double>::max() : 0.0);
    if (count_ == 0 || ratio > worst_ratio_) {
      worst_ratio_ = ratio;
      check_.lhs = lhs;
      check_.rhs = rhs;
      check_.residual = residual;
      check_.tolerance = tolerance;
    }
    all_passed_ = all_passed_ && ok;
    ++count_;
  }

  void skip(std::string note) {
    skipped_ = true;
    check_.note = std::move(note);
  }

  Check finish() && {
    check_.trials = count_;
    check_.skipped = skipped_;
    check_.passed = skipped_ || (count_ > 0 && all_passed_);
    return std::move(check_);
  }

 private:
  Check check_;
  double worst_ratio_ = 0.0;
  bool all_passed_ = true;
  bool skipped_ = false;
  unsigned count_ = 0;
};

void run_check(std::vector<Check>& out, std::string name,
               const std::function<void(CheckBuilder&)>& body) {
  CheckBuilder builder(name);
  try {
    body(builder);
    out.push_back(std::move(builder).finish());
  } catch (const std::exception& e) {
    Check failed;
    failed.name = std::move(name);
    failed.note = std::string("error: ") + e.what();
    out.push_back(std::move(failed));
  }
}

double rel(double scale) { return 1.0 + std::abs(scale); }

std::string exponent_label(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

void budget_checks(const GFrame& f, unsigned trials, std::uint64_t seed, std::vector<Check>& out) {
  const auto counts = f.output_dims();
  const double n = static_cast<double>(f.dim());

  run_check(out, "parseval_budget", [&](CheckBuilder& c) {
    auto record = [&](const GFrame& g) {
      const auto b = parseval_frobenius_budget(g);
      c.record(b.lhs, b.rhs, b.residual(), 1e-8 * n);
    };
    record(canonical_parseval(f));
    for (unsigned t = 0; t < trials; ++t) {
      record(random_parseval_gframe(f.dim(), counts, derive_seed(seed, kTagParseval, t)));
    }
  });

  for (double a : kPowerExponents) {
    run_check(out, "power_trace[a=" + exponent_label(a) + "]", [&](CheckBuilder& c) {
      const auto p = power_trace_identity(f, a);
      c.record(p.lhs, p.rhs, p.residual(), 1e-8 * rel(p.rhs));
    });
  }

  // One weighting operator, many Parseval frames: every energy equals ||L||_F^2.
  Rng weight_rng(seed, kTagWeight);
  const auto weight = weight_rng.gaussian_matrix(f.dim(), f.dim());
  std::vector<double> energies;
  run_check(out, "parseval_weighted_energy", [&](CheckBuilder& c) {
    auto record = [&](const GFrame& g) {
      const auto e = parseval_weighted_energy(weight, g);
      energies.push_back(e.lhs);
      c.record(e.lhs, e.rhs, e.residual(), 1e-7 * rel(e.rhs));
    };
    record(canonical_parseval(f));
    for (unsigned t = 0; t < trials; ++t) {
      record(random_parseval_gframe(f.dim(), counts, derive_seed(seed, kTagParseval, t)));
    }
  });
  run_check(out, "parseval_weighted_energy_spread", [&](CheckBuilder& c) {
    if (energies.empty()) fail(ErrorCode::InvalidArgument, "no energies recorded");
    const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
    c.record(*hi, *lo, *hi - *lo, 1e-7 * rel(frobenius_norm_sq(weight)));
  });

  run_check(out, "finite_dimension_energy", [&](CheckBuilder& c) {
    const auto bounds = validate_frame(f);
    const double energy = frobenius_energy(f);
    const double lo = bounds.lower * n;
    const double hi = bounds.upper * n;
    const double outside = std::max({0.0, lo - energy, energy - hi});
    c.record(energy, std::clamp(energy, lo, hi), outside, 1e-10 * rel(energy));
  });
}

void approx_checks(const GFrame& f, unsigned trials, std::uint64_t seed, std::vector<Check>& out) {
  const auto counts = f.output_dims();
  const auto gap = najati_gap(f);
  double min_total = std::numeric_limits<double>::infinity();

  run_check(out, "parseval_decomposition", [&](CheckBuilder& c) {
    for (unsigned t = 0; t < trials; ++t) {
      const auto gam = random_parseval_gframe(f.dim(), counts, derive_seed(seed, kTagApprox, t));
      const auto d = parseval_approx_decomposition(f, gam);
      min_total = std::min(min_total, d.total);
      c.record(d.total, d.canonical_gap + d.cross_term, d.residual(), 1e-7 * rel(d.total));
    }
  });

  run_check(out, "canonical_parseval_cross_term", [&](CheckBuilder& c) {
    const auto d = parseval_approx_decomposition(f, canonical_parseval(f));
    c.record(d.cross_term, 0.0, d.cross_term, 1e-8);
  });

  run_check(out, "canonical_parseval_equality", [&](CheckBuilder& c) {
    const auto d = parseval_approx_decomposition(f, canonical_parseval(f));
    c.record(d.total, d.canonical_gap, std::abs(d.total - d.canonical_gap),
             1e-8 * rel(d.canonical_gap));
  });

  run_check(out, "najati_minimality", [&](CheckBuilder& c) {
    if (!std::isfinite(min_total)) fail(ErrorCode::InvalidArgument, "no competitors evaluated");
    c.record(min_total, gap.gap, std::max(0.0, gap.gap - min_total), 1e-9);
  });

  run_check(out, "najati_closed_form", [&](CheckBuilder& c) {
    c.record(gap.gap, gap.closed_form, gap.residual(), 1e-8 * rel(gap.closed_form));
  });
}

void dual_checks(const GFrame& f, unsigned trials, std::uint64_t seed, std::vector<Check>& out) {
  const auto canonical = canonical_dual(f);
  std::vector<GFrame> duals;
  duals.reserve(trials);
  for (unsigned t = 0; t < trials; ++t) {
    duals.push_back(random_alternate_dual(f, 1.0, derive_seed(seed, kTagDual, t)));
  }

  run_check(out, "alternate_dual_certificate", [&](CheckBuilder& c) {
    for (const auto& gam : duals) {
      const auto cert = verify_alternate_dual(f, gam);
      c.record(cert.residual, 0.0, cert.residual, cert.tolerance);
    }
  });

  run_check(out, "canonical_dual_certificate", [&](CheckBuilder& c) {
    const auto cert = verify_alternate_dual(f, canonical);
    c.record(cert.residual, 0.0, cert.residual, cert.tolerance);
  });

  run_check(out, "dual_frobenius_decomposition", [&](CheckBuilder& c) {
    for (const auto& gam : duals) {
      const auto d = frobenius_dual_decomposition(f, gam);
      c.record(d.total, d.canonical + d.remainder, d.residual(), 1e-7 * rel(d.total));
    }
  });

  run_check(out, "dual_closed_form", [&](CheckBuilder& c) {
    const auto d = frobenius_dual_decomposition(f, canonical);
    c.record(d.canonical, d.closed_form, std::abs(d.canonical - d.closed_form),
             1e-8 * rel(d.closed_form));
  });

  run_check(out, "canonical_dual_equality", [&](CheckBuilder& c) {
    const auto d = frobenius_dual_decomposition(f, canonical);
    c.record(d.remainder, 0.0, d.remainder, 1e-9);
  });

  std::vector<ComplexVector> vectors;
  Rng vector_rng(seed, kTagVector);
  for (unsigned t = 0; t < trials; ++t) vectors.push_back(vector_rng.gaussian_vector(f.dim()));

  run_check(out, "pointwise_dual_decomposition", [&](CheckBuilder& c) {
    for (std::size_t t = 0; t < duals.size(); ++t) {
      const auto d = pointwise_dual_decomposition(f, duals[t], vectors[t]);
      c.record(d.total, d.canonical + d.remainder, d.residual(), 1e-8 * rel(d.total));
    }
  });

  run_check(out, "pointwise_dual_minimality", [&](CheckBuilder& c) {
    for (std::size_t t = 0; t < duals.size(); ++t) {
      const auto d = pointwise_dual_decomposition(f, duals[t], vectors[t]);
      c.record(d.total, d.canonical, std::max(0.0, d.canonical - d.total), 1e-9);
    }
  });

  run_check(out, "pointwise_canonical_remainder", [&](CheckBuilder& c) {
    for (const auto& x : vectors) {
      const auto d = pointwise_dual_decomposition(f, canonical, x);
      c.record(d.remainder, 0.0, d.remainder, 1e-10);
    }
  });

  run_check(out, "reconstruction", [&](CheckBuilder& c) {
    Rng rng(seed, kTagReconstruct);
    for (unsigned t = 0; t < trials; ++t) {
      const auto x = rng.gaussian_vector(f.dim());
      const auto y = reconstruct(f, x);
      ComplexVector diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = y[i] - x[i];
      const double norm_x = std::sqrt(norm_sq(x));
      c.record(std::sqrt(norm_sq(y)), norm_x, std::sqrt(norm_sq(diff)), 1e-8 * norm_x);
    }
  });
}

void bound_checks(const GFrame& f, std::vector<Check>& out) {
  const double n = static_cast<double>(f.dim());
  const double eps = *validate_frame(f).epsilon;
  const bool applicable = eps < 1.0;
  const std::string not_applicable = "epsilon >= 1: the frame is not nearly Parseval";

  run_check(out, "parseval_proximity_bound", [&](CheckBuilder& c) {
    if (!applicable) return c.skip(not_applicable);
    const auto b = parseval_proximity_bound(f);
    c.record(b.gap, b.bound, std::max(0.0, b.gap - b.bound), 1e-9 * n);
  });

  run_check(out, "dual_proximity_bound", [&](CheckBuilder& c) {
    if (!applicable) return c.skip(not_applicable);
    const auto b = dual_proximity_bound(f);
    c.record(b.gap, b.bound, std::max(0.0, b.gap - b.bound), 1e-9 * n);
  });

  // Optimality: the scaled orthonormal basis with the same n and epsilon
  // meets both bounds with equality.
  run_check(out, "parseval_bound_attained_by_extremal", [&](CheckBuilder& c) {
    if (!applicable) return c.skip(not_applicable);
    const auto b = parseval_proximity_bound(extremal_frame(f.dim(), eps));
    c.record(b.gap, b.bound, std::abs(b.gap - b.bound), 1e-9 * n);
  });

  run_check(out, "dual_bound_attained_by_extremal", [&](CheckBuilder& c) {
    if (!applicable) return c.skip(not_applicable);
    const auto b = dual_proximity_bound(extremal_frame(f.dim(), eps));
    c.record(b.gap, b.bound, std::abs(b.gap - b.bound), 1e-9 * n);
  });
}

ordered_json check_to_json(const Check& c) {
  ordered_json j = {{"name", c.name},           {"lhs", c.lhs},
                    {"rhs", c.rhs},             {"residual", c.residual},
                    {"tolerance", c.tolerance}, {"passed", c.passed},
                    {"skipped", c.skipped},     {"trials", c.trials}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "budgets") return Suite::Budgets;
  if (name == "parseval-approx") return Suite::ParsevalApprox;
  if (name == "duals") return Suite::Duals;
  if (name == "bounds") return Suite::Bounds;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Budgets: return "budgets";
    case Suite::ParsevalApprox: return "parseval-approx";
    case Suite::Duals: return "duals";
    case Suite::Bounds: return "bounds";
    case Suite::All: return "all";
  }
  return "unknown";
}

FrameSummary summarize(const GFrame& f) {
  const auto bounds = validate_frame(f);
  return FrameSummary{f.dim(), f.output_dims(), bounds.lower, bounds.upper, *bounds.epsilon};
}

VerificationReport verify_frame(const GFrame& f, Suite suite, unsigned trials, std::uint64_t seed) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be positive");
  VerificationReport report{summarize(f), suite, trials, seed, {}, false};

  const bool all = suite == Suite::All;
  if (all || suite == Suite::Budgets) budget_checks(f, trials, seed, report.checks);
  if (all || suite == Suite::ParsevalApprox) approx_checks(f, trials, seed, report.checks);
  if (all || suite == Suite::Duals) dual_checks(f, trials, seed, report.checks);
  if (all || suite == Suite::Bounds) bound_checks(f, report.checks);

  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const Check& c) { return c.passed; });
  return report;
}

ordered_json VerificationReport::to_json() const {
  ordered_json checks_json = ordered_json::array();
  for (const auto& c : checks) checks_json.push_back(check_to_json(c));
  return ordered_json{
      {"frame_summary",
       {{"n", frame.n},
        {"counts", frame.counts},
        {"A", frame.lower},
        {"B", frame.upper},
        {"epsilon", frame.epsilon}}},
      {"suite", to_string(suite)},
      {"trials", trials},
      {"seed", seed},
      {"checks", std::move(checks_json)},
      {"overall", overall},
  };
}

ordered_json analyze_frame(const GFrame& f) {
  const auto s = frame_operator(f);
  const auto bounds = validate_frame(s);
  const double eps = *bounds.epsilon;
  const auto parseval_gap = najati_gap(f);
  const double dual_gap = frobenius_distance_sq(f, canonical_dual(f));

  ordered_json j = {
      {"n", f.dim()},
      {"operator_count", f.size()},
      {"output_dims", f.output_dims()},
      {"A", bounds.lower},
      {"B", bounds.upper},
      {"epsilon", eps},
      {"nearly_parseval", bounds.nearly_parseval()},
      {"frobenius_energy", frobenius_energy(f)},
      {"trace_S", trace(s.matrix).real()},
      {"parseval_gap", parseval_gap.gap},
      {"dual_gap", dual_gap},
  };
  if (bounds.nearly_parseval()) {
    j["parseval_gap_bound"] = parseval_proximity_bound(f).bound;
    j["dual_gap_bound"] = dual_proximity_bound(f).bound;
  }
  return j;
}

}  // namespace gframe
