#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finsler/numeric/jet.hpp"

namespace finsler::numeric {

/// Points with r_min <= |x| < r_max.
struct BallDomain {
  double r_min = 0.0;
  double r_max = 1.0;

  bool contains(std::span<const double> x) const;
  /// Uniform in volume.
  std::vector<double> sample(int n, std::mt19937_64& rng) const;
};

/// Riemannian metric a_ij(x) and one-form b_i(x) on a coordinate chart.
class ChartMetric {
 public:
  virtual ~ChartMetric() = default;

  virtual int dim() const = 0;
  virtual const std::string& name() const = 0;
  virtual const BallDomain& domain() const = 0;
  bool in_domain(std::span<const double> x) const { return domain().contains(x); }

  /// a (row-major n x n) and b (n) at x.
  virtual void fields(std::span<const double> x, std::vector<double>& a, std::vector<double>& b) const = 0;
  virtual void fields(std::span<const Jet> x, std::vector<Jet>& a, std::vector<Jet>& b) const = 0;

  /// c(x) in b_{i|j} = c a_ij when known in closed form.
  virtual std::optional<double> conformal_factor(std::span<const double> x) const = 0;
};

using ChartPtr = std::shared_ptr<const ChartMetric>;
using ConformalFn = std::function<double(std::span<const double>)>;

/// Chart from a generic callable fn(x, a, b) with S* arguments.
template <class Fn>
class FieldChart final : public ChartMetric {
 public:
  FieldChart(std::string name, int n, BallDomain domain, Fn fn, ConformalFn c)
      : name_(std::move(name)), n_(n), domain_(domain), fn_(std::move(fn)), c_(std::move(c)) {}

  int dim() const override { return n_; }
  const std::string& name() const override { return name_; }
  const BallDomain& domain() const override { return domain_; }

  void fields(std::span<const double> x, std::vector<double>& a, std::vector<double>& b) const override {
    run(x, a, b);
  }
  void fields(std::span<const Jet> x, std::vector<Jet>& a, std::vector<Jet>& b) const override { run(x, a, b); }

  std::optional<double> conformal_factor(std::span<const double> x) const override {
    if (!c_) return std::nullopt;
    return c_(x);
  }

 private:
  template <class S>
  void run(std::span<const S> x, std::vector<S>& a, std::vector<S>& b) const {
    a.assign(static_cast<std::size_t>(n_ * n_), S(0.0));
    b.assign(static_cast<std::size_t>(n_), S(0.0));
    fn_(n_, x.data(), a.data(), b.data());
  }

  std::string name_;
  int n_;
  BallDomain domain_;
  Fn fn_;
  ConformalFn c_;
};

template <class Fn>
ChartPtr make_chart(std::string name, int n, BallDomain domain, Fn fn, ConformalFn c = {}) {
  return std::make_shared<FieldChart<Fn>>(std::move(name), n, domain, std::move(fn), std::move(c));
}

/// a_ij = delta_ij, b_i = lambda x^i: closed and conformal with c = lambda.
ChartPtr euclidean_chart(int n, BallDomain domain, double lambda = 1.0);

/// Klein model alpha = sqrt((1 - |x|^2)|y|^2 + <x,y>^2) / (1 - |x|^2) with
/// beta = <x,y> / (1 - |x|^2)^(3/2) = d(1/sqrt(1 - |x|^2)), so b^2 = |x|^2 / (1 - |x|^2).
ChartPtr klein_chart(int n, double r_max = 0.8);

/// A curved alpha with a one-form that is neither closed nor conformal.
ChartPtr tilted_chart(int n, double r_max = 0.3);

}  // namespace finsler::numeric
