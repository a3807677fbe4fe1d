#include "finsler/zoo/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace finsler::zoo {

using numeric::BallDomain;
using numeric::make_phi;
using symbolic::PhiSpec;
using symbolic::RatExpr;
using symbolic::Rational;

namespace {

numeric::PhiPtr randers_phi() {
  return make_phi("(sqrt(1 - b^2 + s^2) + s) / (1 - b^2)", [](const auto& b2, const auto& s) {
    using std::sqrt;
    using S = std::decay_t<decltype(s)>;
    return (sqrt(S(1.0) - b2 + s * s) + s) / (S(1.0) - b2);
  });
}

numeric::PhiPtr square_phi() {
  return make_phi("(sqrt(1 - b^2 + s^2) + s)^2 / ((1 - b^2)^2 sqrt(1 - b^2 + s^2))", [](const auto& b2, const auto& s) {
    using std::sqrt;
    using S = std::decay_t<decltype(s)>;
    const S q = sqrt(S(1.0) - b2 + s * s);
    const S w = S(1.0) - b2;
    return (q + s) * (q + s) / (w * w * q);
  });
}

numeric::PhiPtr berwald_phi() {
  return make_phi("(sqrt(1 + b^2) + s)^2", [](const auto& b2, const auto& s) {
    using std::sqrt;
    using S = std::decay_t<decltype(s)>;
    const S q = sqrt(S(1.0) + b2) + s;
    return q * q;
  });
}

numeric::PhiPtr berwald_literal_phi() {
  return make_phi("(sqrt(1 + b^2) + s^2)^2", [](const auto& b2, const auto& s) {
    using std::sqrt;
    using S = std::decay_t<decltype(s)>;
    const S q = sqrt(S(1.0) + b2) + s * s;
    return q * q;
  });
}

// alpha, beta, b^2 of a chart at (x, y).
struct AlphaBeta {
  double alpha = 0.0, beta = 0.0, b2 = 0.0;
};

AlphaBeta alpha_beta(const numeric::ChartMetric& chart, std::span<const double> x, std::span<const double> y) {
  const int n = chart.dim();
  std::vector<double> a, b;
  chart.fields(x, a, b);
  std::vector<numeric::Jet> aj(a.begin(), a.end());
  const std::vector<numeric::Jet> ai = numeric::inverse(aj, n);
  AlphaBeta out;
  double a2 = 0.0;
  for (int i = 0; i < n; ++i) {
    out.beta += b[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      a2 += a[static_cast<std::size_t>(i * n + j)] * y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      out.b2 += ai[static_cast<std::size_t>(i * n + j)].value() * b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  out.alpha = std::sqrt(a2);
  return out;
}

// Margin of the convexity quantities at (b^2, s).
double convexity_margin(const numeric::PhiFunction& phi, double b2, double s) {
  const numeric::BiSeries B = numeric::BiSeries::b2(b2);
  const numeric::BiSeries S = numeric::BiSeries::s(s);
  const numeric::BiSeries f = phi(B, S);
  const double p = f.value();
  const double p2 = d_ds(f).value();
  const double p22 = d_ds(d_ds(f)).value();
  const double m = p - s * p2;
  return std::min({p, m, m + (b2 - s * s) * p22});
}

// Convexity, flag consistency on a handful of points; throws ZooError.
void finalize(ZooEntry& e) {
  e.convexity = numeric::convexity_check(*e.phi, e.b0, 40, e.b_min);
  if (!e.convexity.interior_ok) {
    std::ostringstream os;
    os << e.name << " violates strong convexity: " << e.convexity.worst_term << " = " << e.convexity.worst
       << " at b = " << e.convexity.worst_b << ", s = " << e.convexity.worst_s;
    throw ZooError(os.str());
  }
  e.boundary_degenerate = !e.convexity.ok;

  const std::vector<SamplePoint> pts = sample_points(e, 5, 12345);
  bool some_b = false, some_j = false;
  for (const SamplePoint& p : pts) {
    const numeric::CurvatureReport r = numeric::curvature_report(*e.chart, *e.phi, p.x, p.y);
    if (r.closed_conformal != e.flags.closed_conformal) {
      throw ZooError(e.name + ": closed-conformal flag contradicts the one-form");
    }
    const FlagCheck fc = check_flags(e, r);
    if (!fc.ok) throw ZooError(e.name + ": " + fc.problems.front());
    some_b = some_b || r.norm_B > 1e-3;
    some_j = some_j || r.norm_J > 1e-3;
  }
  if (!e.flags.berwald_expected && !some_b) throw ZooError(e.name + ": expected non-Berwald but B vanished");
  if (!e.flags.weak_landsberg_expected && !some_j) throw ZooError(e.name + ": expected J != 0 but J vanished");
}

std::string join(const std::vector<Rational>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a[i].get_str();
  }
  return out;
}

}  // namespace

double berwald_closed_form(std::span<const double> x, std::span<const double> y) {
  double r2 = 0.0, xy = 0.0, y2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r2 += x[i] * x[i];
    xy += x[i] * y[i];
    y2 += y[i] * y[i];
  }
  const double w = 1.0 - r2;
  const double q = std::sqrt(w * y2 + xy * xy);
  return (q + xy) * (q + xy) / (w * w * q);
}

ZooEntry make_riemannian(int n) {
  ZooEntry e;
  e.name = "riemannian";
  e.params = "phi=1";
  e.citation = "riemannian";
  e.spec = PhiSpec::polynomial({RatExpr(1)});
  e.phi = numeric::phi_from_spec(*e.spec);
  e.chart = numeric::klein_chart(n);
  e.flags = {true, true, true};
  e.b0 = 1.5;
  finalize(e);
  return e;
}

ZooEntry make_randers(int n) {
  ZooEntry e;
  e.name = "randers";
  e.params = "b0=0.9";
  e.citation = "randers-1941";
  e.parametrized = symbolic::ParametrizedPhi::randers();
  e.phi = randers_phi();
  e.chart = numeric::euclidean_chart(n, BallDomain{0.0, 0.8});
  e.flags = {true, false, false};
  e.b0 = 0.9;
  finalize(e);
  return e;
}

ZooEntry make_square(int n) {
  ZooEntry e;
  e.name = "square";
  e.params = "b0=0.9";
  e.citation = "square-metric";
  e.parametrized = symbolic::ParametrizedPhi::square();
  e.phi = square_phi();
  e.chart = numeric::euclidean_chart(n, BallDomain{0.0, 0.8});
  e.flags = {true, false, false};
  e.b0 = 0.9;
  finalize(e);
  return e;
}

ZooEntry make_berwald_example(int n) {
  ZooEntry e;
  e.name = "berwald";
  e.params = "klein r<0.8";
  e.citation = "berwald-1929";
  e.phi = berwald_phi();
  e.chart = numeric::klein_chart(n, 0.8);
  e.flags = {true, false, false};
  const double r = 0.8;
  e.b0 = r / std::sqrt(1.0 - r * r) + 1e-6;

  const numeric::ChartPtr euclid = numeric::euclidean_chart(n, BallDomain{0.0, 0.8});
  e.candidates = {
      {"literal (sqrt(1+b^2)+s^2)^2 over klein", berwald_literal_phi(), e.chart, 0.0, false},
      {"square phi over klein", square_phi(), e.chart, 0.0, false},
      {"(sqrt(1+b^2)+s)^2 over klein", e.phi, e.chart, 0.0, false},
      {"square phi over euclidean", square_phi(), euclid, 0.0, false},
  };
  std::mt19937_64 rng(2029);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const std::vector<double> x = e.chart->domain().sample(n, rng);
    std::vector<double> y(static_cast<std::size_t>(n));
    for (double& v : y) v = normal(rng);
    const double F = berwald_closed_form(x, y);
    for (PhiCandidate& c : e.candidates) {
      const AlphaBeta ab = alpha_beta(*c.chart, x, y);
      const double s = ab.beta / ab.alpha;
      const double Fc = ab.alpha * (*c.phi)(ab.b2, s);
      const double err = std::isfinite(Fc) ? std::abs(Fc - F) / std::abs(F) : HUGE_VAL;
      c.max_rel_error = std::max(c.max_rel_error, err);
    }
  }
  for (PhiCandidate& c : e.candidates) c.reproduces = c.max_rel_error <= 1e-12;
  finalize(e);
  return e;
}

ZooEntry make_theorem_family(int m, const std::vector<Rational>& a, int n, symbolic::SampleDomain domain) {
  ZooEntry e;
  e.name = "family-m" + std::to_string(m);
  e.params = "m=" + std::to_string(m) + " a=" + join(a);
  e.citation = "theorem-family";
  e.spec = PhiSpec::theorem_family(m, a, domain);
  e.phi = numeric::phi_from_spec(*e.spec);
  e.chart = numeric::euclidean_chart(n, BallDomain{domain.b_min, domain.b_max});
  e.flags = {true, true, true};
  e.b_min = domain.b_min;
  e.b0 = domain.b_max;
  finalize(e);
  return e;
}

ZooEntry make_polynomial_entry(const PhiSpec& spec, std::string params, int n) {
  if (!spec.is_polynomial() || spec.is_generic()) throw std::invalid_argument("polynomial entry needs concrete coefficients");
  ZooEntry e;
  e.name = "poly";
  e.params = std::move(params);
  e.citation = "user-polynomial";
  e.spec = spec;
  e.phi = numeric::phi_from_spec(spec);
  const auto& d = spec.domain();
  e.chart = numeric::euclidean_chart(n, BallDomain{d.b_min, d.b_max});
  e.flags = {true, false, false};
  e.b_min = d.b_min;
  e.b0 = d.b_max;
  finalize(e);
  return e;
}

std::vector<Rational> admissible_constants(int m) {
  std::vector<Rational> a;
  Rational p(1);
  for (int k = 0; k <= m; ++k) {
    a.push_back(p);
    p /= 5;
  }
  return a;
}

std::vector<std::string> entry_names() {
  return {"riemannian", "randers", "square", "berwald", "family-m1", "family-m2"};
}

ZooEntry entry_by_name(const std::string& name, int n) {
  if (name == "riemannian") return make_riemannian(n);
  if (name == "randers") return make_randers(n);
  if (name == "square") return make_square(n);
  if (name == "berwald") return make_berwald_example(n);
  if (name == "family-m1") return make_theorem_family(1, {1, 1}, n);
  if (name == "family-m2") return make_theorem_family(2, {1, 1, 1}, n);
  throw std::invalid_argument("unknown zoo entry: " + name);
}

std::vector<ZooEntry> all_entries(int n) {
  std::vector<ZooEntry> out;
  for (const std::string& name : entry_names()) out.push_back(entry_by_name(name, n));
  return out;
}

std::vector<SamplePoint> sample_points(const ZooEntry& entry, int count, std::uint64_t seed, double margin) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  const int n = entry.chart->dim();
  std::vector<SamplePoint> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * (count + 1)) throw ZooError(entry.name + ": could not draw admissible sample points");
    SamplePoint p;
    p.x = entry.chart->domain().sample(n, rng);
    p.y.resize(static_cast<std::size_t>(n));
    double y2 = 0.0;
    for (double& v : p.y) {
      v = normal(rng);
      y2 += v * v;
    }
    const double scale = mag(rng) / std::sqrt(y2);
    for (double& v : p.y) v *= scale;
    const AlphaBeta ab = alpha_beta(*entry.chart, p.x, p.y);
    if (convexity_margin(*entry.phi, ab.b2, ab.beta / ab.alpha) < margin) continue;
    out.push_back(std::move(p));
  }
  return out;
}

FlagCheck check_flags(const ZooEntry& entry, const numeric::CurvatureReport& report, double tol) {
  FlagCheck fc;
  if (entry.flags.berwald_expected && !(report.norm_B <= tol)) {
    fc.ok = false;
    fc.problems.push_back("expected Berwald but |B| = " + std::to_string(report.norm_B));
  }
  if (entry.flags.weak_landsberg_expected && !(report.norm_J <= tol)) {
    fc.ok = false;
    fc.problems.push_back("expected weak Landsberg but |J| = " + std::to_string(report.norm_J));
  }
  if (entry.flags.closed_conformal != report.closed_conformal) {
    fc.ok = false;
    fc.problems.push_back("closed-conformal flag mismatch");
  }
  return fc;
}

}  // namespace finsler::zoo
