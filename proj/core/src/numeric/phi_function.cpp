#include "finsler/numeric/phi_function.hpp"

#include <array>
#include <limits>
#include <stdexcept>

#include "finsler/algebra/symbols.hpp"

namespace finsler::numeric {

namespace {

class SpecPhi final : public PhiFunction {
 public:
  explicit SpecPhi(const symbolic::PhiSpec& spec)
      : phi_(spec.phi()), text_(spec.text()), uses_u_(spec.phi().depends_on(algebra::kU)) {}

  double operator()(double b2, double s) const override { return eval(b2, s); }
  Jet operator()(const Jet& b2, const Jet& s) const override { return eval(b2, s); }
  BiSeries operator()(const BiSeries& b2, const BiSeries& s) const override { return eval(b2, s); }
  std::string text() const override { return text_; }

 private:
  template <class S>
  S eval(const S& b2, const S& s) const {
    using std::sqrt;
    std::array<S, algebra::kNumSymbols> vals{};
    vals[algebra::kS] = s;
    if (uses_u_) vals[algebra::kU] = sqrt(b2);
    return phi_.evaluate_as<S>(std::span<const S, algebra::kNumSymbols>(vals));
  }

  algebra::RatExpr phi_;
  std::string text_;
  bool uses_u_;
};

}  // namespace

PhiPtr phi_from_spec(const symbolic::PhiSpec& spec) {
  if (spec.is_generic()) throw std::invalid_argument("phi with generic coefficient functions has no numeric value");
  return std::make_shared<SpecPhi>(spec);
}

ScalarBundle scalar_bundle(const PhiFunction& phi, double b2, double s) {
  const BiSeries B = BiSeries::b2(b2);
  const BiSeries S = BiSeries::s(s);
  const symbolic::Bundle<BiSeries> f = symbolic::make_bundle(phi(B, S), B, S);
  const symbolic::EHDerivatives<BiSeries> d = symbolic::eh_derivatives(f);
  ScalarBundle out;
  auto& o = out.f;
  o.b2 = b2;
  o.s = s;
  o.phi = f.phi.value();
  o.p1 = f.p1.value();
  o.p2 = f.p2.value();
  o.p12 = f.p12.value();
  o.p22 = f.p22.value();
  o.p222 = f.p222.value();
  o.m = f.m.value();
  o.delta = f.delta.value();
  o.rho = f.rho.value();
  o.rho0 = f.rho0.value();
  o.rho1 = f.rho1.value();
  o.eta = f.eta.value();
  o.eta0 = f.eta0.value();
  o.eta1 = f.eta1.value();
  o.Q = f.Q.value();
  o.R = f.R.value();
  o.Theta = f.Theta.value();
  o.Psi = f.Psi.value();
  o.Pi = f.Pi.value();
  o.Omega = f.Omega.value();
  o.E = f.E.value();
  o.H = f.H.value();
  out.eh = {d.E2.value(), d.E22.value(), d.E222.value(), d.H2.value(), d.H22.value(), d.H222.value()};
  return out;
}

double mean_landsberg_w(const PhiFunction& phi, double b2, double s, int n) {
  const BiSeries B = BiSeries::b2(b2);
  const BiSeries S = BiSeries::s(s);
  const auto f = symbolic::make_bundle(phi(B, S), B, S);
  return symbolic::mean_landsberg_w(f, symbolic::eh_derivatives(f), n).value();
}

double mean_cartan_v(const PhiFunction& phi, double b2, double s, int n) {
  const BiSeries B = BiSeries::b2(b2);
  const BiSeries S = BiSeries::s(s);
  return symbolic::mean_cartan_v(symbolic::make_bundle(phi(B, S), B, S), n).value();
}

ConvexityVerdict convexity_check(const PhiFunction& phi, double b0, int grid, double b_min) {
  if (grid < 1 || !(b0 > b_min) || b_min < 0.0) throw std::invalid_argument("convexity grid needs 0 <= b_min < b0");
  ConvexityVerdict v;
  v.worst = std::numeric_limits<double>::infinity();
  v.interior_worst = v.worst;
  for (int i = 0; i <= grid; ++i) {
    // Stay strictly below b0.
    const double b = b_min + (b0 - b_min) * i / grid * (1.0 - 1e-9);
    const int ns = b == 0.0 ? 0 : 2 * grid;
    for (int j = 0; j <= ns; ++j) {
      const double s = ns == 0 ? 0.0 : -b + 2.0 * b * j / ns;
      const BiSeries B = BiSeries::b2(b * b);
      const BiSeries S = BiSeries::s(s);
      const BiSeries f = phi(B, S);
      const double p = f.value();
      const double p2 = d_ds(f).value();
      const double p22 = d_ds(d_ds(f)).value();
      const double m = p - s * p2;
      const double delta = m + (b * b - s * s) * p22;
      const std::array<std::pair<double, const char*>, 3> terms{
          {{p, "phi"}, {m, "phi - s phi_2"}, {delta, "Delta"}}};
      for (const auto& [val, name] : terms) {
        const double x = std::isfinite(val) ? val : -std::numeric_limits<double>::infinity();
        if (x < v.worst) {
          v.worst = x;
          v.worst_b = b;
          v.worst_s = s;
          v.worst_term = name;
        }
        const bool interior = ns == 0 || (j != 0 && j != ns);
        if (interior && x < v.interior_worst) v.interior_worst = x;
      }
    }
  }
  v.ok = v.worst > 0.0;
  v.interior_ok = v.interior_worst > 0.0;
  return v;
}

}  // namespace finsler::numeric
