#include "finsler/symbolic/conditions.hpp"

#include "finsler/algebra/errors.hpp"

namespace finsler::symbolic {

using algebra::coeff_symbol;
using algebra::d_db2;
using algebra::d_ds;
using algebra::kC;
using algebra::kS;
using algebra::kT;

int Condition::degree_s() const { return numerator.is_zero() ? -1 : static_cast<int>(numerator.degree(kS)); }

Condition make_condition(RatExpr expr) {
  Condition c;
  c.numerator = algebra::numerator_normalized(expr);
  c.expr = std::move(expr);
  return c;
}

FundamentalBundle fundamental_quantities(const PhiSpec& phi) {
  return make_bundle(phi.phi(), RatExpr::b2(), RatExpr::s());
}

Analysis::Analysis(PhiSpec phi) : phi_(std::move(phi)), bundle_(fundamental_quantities(phi_)) {}

const EHDerivatives<RatExpr>& Analysis::eh() const {
  if (!eh_) eh_ = eh_derivatives(bundle_);
  return *eh_;
}

ConditionSet Analysis::weak_landsberg_conditions() const {
  ConditionSet out;
  out.ne22 = make_condition(eh().E22);
  out.nh222 = make_condition(eh().H222);
  out.np = make_condition(weak_landsberg_p(bundle_, eh()));
  return out;
}

RatExpr Analysis::mean_landsberg_scalar(long n) const { return mean_landsberg_w(bundle_, eh(), n); }

RatExpr Analysis::mean_cartan_scalar(long n, VForm form) const {
  switch (form) {
    case VForm::LogDet: return mean_cartan_v(bundle_, n);
    case VForm::Bracket: return mean_cartan_v_bracket(bundle_, n);
    case VForm::Expanded: return mean_cartan_v_expanded(bundle_, n, +1);
    case VForm::ExpandedFlipped: return mean_cartan_v_expanded(bundle_, n, -1);
  }
  return {};
}

Njfi Analysis::njfi(long n, NjfiForm form) const {
  const RatExpr w = mean_landsberg_scalar(n);
  const RatExpr v = mean_cartan_scalar(n);
  const RatExpr scale = bundle_.phi / (RatExpr(2) * bundle_.rho);
  Njfi out;
  out.n = n;
  out.form = form;
  if (form == NjfiForm::Factored) {
    out.expr = scale * (RatExpr::C() * w + RatExpr::T() * v);
  } else {
    out.expr = RatExpr::C() * w + RatExpr::T() * scale * v;
  }
  out.numerator = algebra::scaled_numerator(out.expr);
  out.coeffs = algebra::coeffs_in_s(out.numerator);
  return out;
}

ConditionSet weak_landsberg_conditions(const PhiSpec& phi) { return Analysis(phi).weak_landsberg_conditions(); }

RatExpr mean_landsberg_scalar(const PhiSpec& phi, long n) { return Analysis(phi).mean_landsberg_scalar(n); }

RatExpr mean_cartan_scalar(const PhiSpec& phi, long n, VForm form) {
  return Analysis(phi).mean_cartan_scalar(n, form);
}

Njfi njfi(const PhiSpec& phi, long n, NjfiForm form) { return Analysis(phi).njfi(n, form); }

CaseSplit extract_case_coefficients(const Njfi& njfi, int i) {
  if (i < 0 || i > njfi.degree()) return {};
  const RatExpr& v = njfi.coeffs[static_cast<std::size_t>(i)];
  const Polynomial& num = v.numerator();
  const std::vector<Polynomial> in_c = num.coefficients(kC);
  if (in_c.size() > 2) throw algebra::AlgebraError("v_i is not linear in C");
  const std::vector<Polynomial> in_t = in_c.empty() ? std::vector<Polynomial>{} : in_c[0].coefficients(kT);
  if (in_t.size() > 2 || (!in_t.empty() && !in_t[0].is_zero())) {
    throw algebra::AlgebraError("v_i is not of the form C f_C + T f_T");
  }
  if (in_c.size() == 2 && in_c[1].depends_on(kT)) throw algebra::AlgebraError("v_i has a C T term");
  const RatExpr den = RatExpr(v.denominator());
  CaseSplit out;
  if (in_c.size() == 2) out.f_C = RatExpr(in_c[1]) / den;
  if (in_t.size() == 2) out.f_T = RatExpr(in_t[1]) / den;
  return out;
}

std::vector<RatExpr> case_odes_residual(int which, const std::vector<RatExpr>& c) {
  const RatExpr b2 = RatExpr::b2();
  if (which == 1) {
    if (c.size() != 2) throw std::invalid_argument("case 1 takes c_0, c_1");
    const RatExpr d0 = d_db2(c[0]);
    const RatExpr d1 = d_db2(c[1]);
    return {c[0] * d1 - RatExpr(2) * c[1] * d0, RatExpr(2) * b2 * d0 + c[0]};
  }
  if (which == 2) {
    if (c.size() != 3) throw std::invalid_argument("case 2 takes c_0, c_1, c_2");
    const RatExpr d0 = d_db2(c[0]);
    const RatExpr d1 = d_db2(c[1]);
    const RatExpr d2 = d_db2(c[2]);
    return {RatExpr(2) * b2 * c[2] + c[0], RatExpr(2) * c[1] * d2 - RatExpr(3) * c[2] * d1,
            c[2] * (RatExpr(2) * b2 * d2 + RatExpr(3) * c[2] - RatExpr(3) * d0) + c[0] * d2};
  }
  throw std::invalid_argument("ODE case must be 1 or 2");
}

std::vector<NVerdict> verify_conditions(const PhiSpec& phi, const std::vector<long>& ns) {
  const Analysis an(phi);
  const ConditionSet weak = an.weak_landsberg_conditions();
  std::vector<NVerdict> out;
  for (long n : ns) {
    NVerdict v;
    v.n = n;
    v.ne22 = weak.ne22->holds();
    v.nh222 = weak.nh222->holds();
    v.np = weak.np->holds();
    v.deg_ne22 = weak.ne22->degree_s();
    v.deg_nh222 = weak.nh222->degree_s();
    v.deg_np = weak.np->degree_s();
    if (!v.ne22) v.residuals.emplace_back("NE22", weak.ne22->expr);
    if (!v.nh222) v.residuals.emplace_back("NH222", weak.nh222->expr);
    if (!v.np) v.residuals.emplace_back("NP", weak.np->expr);
    const Njfi nj = an.njfi(n);
    v.deg_njfi = nj.degree();
    const RatExpr weak_part = algebra::substitute(nj.numerator, kT, RatExpr(0));
    v.njfi_weak = weak_part.is_zero();
    if (!v.njfi_weak) v.residuals.emplace_back("NJFI_weak", weak_part);
    out.push_back(std::move(v));
  }
  return out;
}

bool FamilyVerdict::all_hold() const {
  for (const NVerdict& v : per_n) {
    if (!v.all_hold()) return false;
  }
  return true;
}

FamilyVerdict verify_theorem_family(int m, const std::vector<Rational>& a, const std::vector<long>& ns) {
  FamilyVerdict out{PhiSpec::theorem_family(m, a), {}, 0, {}};
  out.per_n = verify_conditions(out.phi, ns);
  if (m == 1 || m == 2) {
    out.ode_case = m;
    out.ode_residuals = case_odes_residual(m, out.phi.coefficients());
  }
  return out;
}

LeadingTPart leading_t_part(const Njfi& njfi, int m) {
  LeadingTPart out;
  out.n = njfi.n;
  out.degree = njfi.degree();
  if (out.degree < 0) return out;
  out.f_T = extract_case_coefficients(njfi, out.degree).f_T;
  if (!out.f_T.denominator().is_constant() || out.f_T.numerator().size() != 1) return out;
  const algebra::Term& t = out.f_T.numerator().leading();
  const algebra::Symbol cm = coeff_symbol(m, 0);
  for (algebra::Symbol v = 0; v < algebra::kNumSymbols; ++v) {
    if (v != cm && t.mono[v] != 0) return out;
  }
  out.monomial_in_cm = true;
  out.power = t.mono[cm];
  out.coefficient = Rational(t.coeff, out.f_T.denominator().constant_value());
  out.coefficient.canonicalize();
  return out;
}

std::vector<Rational> interpolate_in_n(const std::vector<long>& ns, const std::vector<Rational>& values) {
  if (ns.size() != values.size()) throw std::invalid_argument("interpolation sizes differ");
  const std::size_t k = ns.size();
  // Newton divided differences, then expansion into monomial coefficients.
  std::vector<Rational> dd(values);
  for (std::size_t j = 1; j < k; ++j) {
    for (std::size_t i = k - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(ns[i] - ns[i - j]);
      if (i == j) break;
    }
  }
  std::vector<Rational> poly(k, Rational(0));
  for (std::size_t i = k; i-- > 0;) {
    // poly = poly * (n - ns[i]) + dd[i]
    std::vector<Rational> next(k, Rational(0));
    for (std::size_t d = 0; d + 1 < k; ++d) next[d + 1] += poly[d];
    for (std::size_t d = 0; d < k; ++d) next[d] -= poly[d] * Rational(ns[i]);
    next[0] += dd[i];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

}  // namespace finsler::symbolic
