#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "finsler/numeric/bi_series.hpp"
#include "finsler/numeric/jet.hpp"
#include "finsler/symbolic/formulas.hpp"
#include "finsler/symbolic/phi_spec.hpp"

namespace finsler::numeric {

/// phi(b^2, s) evaluated on plain numbers and on both series types.
class PhiFunction {
 public:
  virtual ~PhiFunction() = default;
  virtual double operator()(double b2, double s) const = 0;
  virtual Jet operator()(const Jet& b2, const Jet& s) const = 0;
  virtual BiSeries operator()(const BiSeries& b2, const BiSeries& s) const = 0;
  virtual std::string text() const = 0;
};

using PhiPtr = std::shared_ptr<const PhiFunction>;

/// Wraps a generic callable fn(b2, s) written with sqrt, pow, exp, log.
template <class Fn>
class ClosedFormPhi final : public PhiFunction {
 public:
  ClosedFormPhi(std::string text, Fn fn) : text_(std::move(text)), fn_(std::move(fn)) {}
  double operator()(double b2, double s) const override { return fn_(b2, s); }
  Jet operator()(const Jet& b2, const Jet& s) const override { return fn_(b2, s); }
  BiSeries operator()(const BiSeries& b2, const BiSeries& s) const override { return fn_(b2, s); }
  std::string text() const override { return text_; }

 private:
  std::string text_;
  Fn fn_;
};

template <class Fn>
PhiPtr make_phi(std::string text, Fn fn) {
  return std::make_shared<ClosedFormPhi<Fn>>(std::move(text), std::move(fn));
}

/// Numeric evaluator of an exact phi with u = sqrt(b^2). Throws
/// std::invalid_argument for phi with generic coefficient functions.
PhiPtr phi_from_spec(const symbolic::PhiSpec& spec);

/// The closed-form quantities at one (b^2, s) as plain numbers.
struct ScalarBundle {
  symbolic::Bundle<double> f;
  symbolic::EHDerivatives<double> eh;
};

ScalarBundle scalar_bundle(const PhiFunction& phi, double b2, double s);

/// W and V of the mean Landsberg and mean Cartan formulas at (b^2, s).
double mean_landsberg_w(const PhiFunction& phi, double b2, double s, int n);
double mean_cartan_v(const PhiFunction& phi, double b2, double s, int n);

/// Strong convexity of F = alpha phi(b^2, s) for ||beta|| < b0:
/// phi > 0, phi - s phi_2 > 0 and phi - s phi_2 + (b^2 - s^2) phi_22 > 0 on |s| <= b.
struct ConvexityVerdict {
  bool ok = false;
  /// Smallest of the three quantities seen on the grid.
  double worst = 0.0;
  double worst_b = 0.0;
  double worst_s = 0.0;
  /// "phi", "phi - s phi_2" or "Delta".
  std::string worst_term;
  /// The same restricted to |s| < b.
  bool interior_ok = false;
  double interior_worst = 0.0;
};

/// Samples grid x (2 grid + 1) points of b in [b_min, b0) and |s| <= b.
ConvexityVerdict convexity_check(const PhiFunction& phi, double b0, int grid = 40, double b_min = 0.0);

}  // namespace finsler::numeric
