#include "finsler/symbolic/parametrized.hpp"

#include <cmath>

namespace finsler::symbolic {

namespace {

// s = (t - w / t) / 2 with w = 1 - b^2, so that sqrt(1 - b^2 + s^2) = (t + w / t) / 2.
RatExpr unit_sigma() {
  const RatExpr t = RatExpr::s();
  const RatExpr w = RatExpr(1) - RatExpr::b2();
  return (t - w / t) / RatExpr(2);
}

double unit_t(double b2, double s) { return std::sqrt(1.0 - b2 + s * s) + s; }

}  // namespace

ParametrizedPhi ParametrizedPhi::randers() {
  const RatExpr w = RatExpr(1) - RatExpr::b2();
  return {"randers", RatExpr::s() / w, unit_sigma(), &unit_t};
}

ParametrizedPhi ParametrizedPhi::square() {
  const RatExpr t = RatExpr::s();
  const RatExpr w = RatExpr(1) - RatExpr::b2();
  return {"square", RatExpr(2) * t.pow(3) / (w.pow(2) * (t.pow(2) + w)), unit_sigma(), &unit_t};
}

ParamExpr d_ds(const ParamExpr& a) {
  if (a.p_ == nullptr) return {RatExpr(0), nullptr};
  const RatExpr dsigma_dt = a.p_->sigma.partial(algebra::kS);
  return {a.e_.partial(algebra::kS) / dsigma_dt, a.p_};
}

ParamExpr d_db2(const ParamExpr& a) {
  if (a.p_ == nullptr) return {algebra::d_db2(a.e_), nullptr};
  const RatExpr dsigma_dt = a.p_->sigma.partial(algebra::kS);
  const RatExpr dt_db2 = -algebra::d_db2(a.p_->sigma) / dsigma_dt;
  return {algebra::d_db2(a.e_) + a.e_.partial(algebra::kS) * dt_db2, a.p_};
}

namespace {

Bundle<ParamExpr> param_bundle(const ParametrizedPhi& phi) {
  return make_bundle(ParamExpr(phi.phi, &phi), ParamExpr(RatExpr::b2(), &phi), ParamExpr(phi.sigma, &phi));
}

}  // namespace

ConditionSet weak_landsberg_conditions(const ParametrizedPhi& phi) {
  const Bundle<ParamExpr> f = param_bundle(phi);
  const EHDerivatives<ParamExpr> d = eh_derivatives(f);
  ConditionSet out;
  out.ne22 = make_condition(d.E22.expr());
  out.nh222 = make_condition(d.H222.expr());
  out.np = make_condition(weak_landsberg_p(f, d).expr());
  return out;
}

RatExpr mean_landsberg_scalar(const ParametrizedPhi& phi, long n) {
  const Bundle<ParamExpr> f = param_bundle(phi);
  return mean_landsberg_w(f, eh_derivatives(f), n).expr();
}

RatExpr mean_cartan_scalar(const ParametrizedPhi& phi, long n) {
  return mean_cartan_v(param_bundle(phi), n).expr();
}

double evaluate_at(const ParametrizedPhi& phi, const RatExpr& e, double b2, double s) {
  return algebra::eval_double(e, phi.t_of(b2, s), std::sqrt(b2));
}

}  // namespace finsler::symbolic
