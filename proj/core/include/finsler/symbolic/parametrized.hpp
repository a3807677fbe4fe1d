#pragma once

#include <string>

#include "finsler/symbolic/conditions.hpp"

namespace finsler::symbolic {

/// phi with square roots, made rational by a parametrization s = sigma(t, u)
/// of the fibre variable. Expressions live in the s slot as t, so every
/// result is a rational function of (t, u).
struct ParametrizedPhi {
  std::string name;
  RatExpr phi;    // phi as a function of (t, u)
  RatExpr sigma;  // s as a function of (t, u)
  /// t at given (b^2, s), inverting sigma on the branch used by phi.
  double (*t_of)(double b2, double s) = nullptr;

  /// t = sqrt(1 - b^2 + s^2) + s; phi = t / (1 - b^2).
  static ParametrizedPhi randers();
  /// Same t; phi = t^2 / ((1 - b^2)^2 sqrt(1 - b^2 + s^2)).
  static ParametrizedPhi square();
};

/// Field element over a parametrization: d/ds and d/d(b^2) at fixed s act
/// through the chain rule in (t, u).
class ParamExpr {
 public:
  ParamExpr(long c = 0) : e_(c) {}  // NOLINT(google-explicit-constructor)
  ParamExpr(RatExpr e, const ParametrizedPhi* p) : e_(std::move(e)), p_(p) {}

  const RatExpr& expr() const { return e_; }

  ParamExpr operator-() const { return {-e_, p_}; }
  friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b) { return {a.e_ + b.e_, a.p_ ? a.p_ : b.p_}; }
  friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b) { return {a.e_ - b.e_, a.p_ ? a.p_ : b.p_}; }
  friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) { return {a.e_ * b.e_, a.p_ ? a.p_ : b.p_}; }
  friend ParamExpr operator/(const ParamExpr& a, const ParamExpr& b) { return {a.e_ / b.e_, a.p_ ? a.p_ : b.p_}; }
  ParamExpr& operator+=(const ParamExpr& b) { return *this = *this + b; }

  friend ParamExpr d_ds(const ParamExpr& a);
  friend ParamExpr d_db2(const ParamExpr& a);

 private:
  RatExpr e_;
  const ParametrizedPhi* p_ = nullptr;
};

/// NE22, NH222, NP as rational functions of (t, u).
ConditionSet weak_landsberg_conditions(const ParametrizedPhi& phi);
RatExpr mean_landsberg_scalar(const ParametrizedPhi& phi, long n);
RatExpr mean_cartan_scalar(const ParametrizedPhi& phi, long n);

/// Value of an expression in (t, u) at (b^2, s).
double evaluate_at(const ParametrizedPhi& phi, const RatExpr& e, double b2, double s);

}  // namespace finsler::symbolic
