#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <vector>

namespace finsler::numeric {

inline constexpr int kMaxJetVars = 12;

/// Highest retained (or still valid) degrees of a truncated expansion.
struct JetOrders {
  int base = 0;
  int fiber = 0;
  int total = 0;
};

/// Index set of a truncated multivariate Taylor expansion in n_base "base"
/// and n_fiber "fiber" variables, with a precomputed product table.
///
/// Variables 0..n_base-1 are base directions, the rest fiber directions.
/// Spaces are interned: get() returns the same object for the same shape.
class JetSpace {
 public:
  using Index = std::array<std::uint8_t, kMaxJetVars>;

  static const JetSpace& get(int n_base, int n_fiber, int max_base = 1, int max_fiber = 5, int max_total = 5);

  int n_base() const { return n_base_; }
  int n_fiber() const { return n_fiber_; }
  int num_vars() const { return n_base_ + n_fiber_; }
  const JetOrders& max_orders() const { return max_; }
  std::size_t size() const { return indices_.size(); }

  const Index& index(std::size_t k) const { return indices_[k]; }
  int base_degree(std::size_t k) const { return base_deg_[k]; }
  int fiber_degree(std::size_t k) const { return fiber_deg_[k]; }
  int total_degree(std::size_t k) const { return base_deg_[k] + fiber_deg_[k]; }

  /// Position of a multi-index, -1 when it is not retained.
  std::ptrdiff_t find(const Index& alpha) const;
  /// Position of index(k) + e_var, -1 when not retained.
  std::ptrdiff_t shift(int var, std::size_t k) const { return shift_[static_cast<std::size_t>(var) * size() + k]; }

  /// Pairs (i, j) with index(i) + index(j) = index(k).
  struct Pair {
    std::uint32_t i, j;
  };
  const Pair* pairs_begin(std::size_t k) const { return pairs_.data() + pair_offset_[k]; }
  const Pair* pairs_end(std::size_t k) const { return pairs_.data() + pair_offset_[k + 1]; }

  bool within(std::size_t k, const JetOrders& o) const {
    return base_deg_[k] <= o.base && fiber_deg_[k] <= o.fiber && base_deg_[k] + fiber_deg_[k] <= o.total;
  }

 private:
  JetSpace(int n_base, int n_fiber, int max_base, int max_fiber, int max_total);

  int n_base_;
  int n_fiber_;
  JetOrders max_;
  std::vector<Index> indices_;
  std::vector<int> base_deg_;
  std::vector<int> fiber_deg_;
  std::vector<std::ptrdiff_t> shift_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> pair_offset_;
  std::unordered_map<std::uint64_t, std::ptrdiff_t> lookup_;
};

/// Truncated Taylor expansion of a smooth function at a point.
///
/// Coefficients are Taylor coefficients (derivative / alpha!), so products
/// are plain convolutions. Each jet records the orders up to which its
/// coefficients are exact; differentiation lowers them. A jet without a
/// space is a constant and combines with any space.
class Jet {
 public:
  Jet(double c = 0.0) : coeffs_{c} {}  // NOLINT(google-explicit-constructor)
  Jet(const JetSpace& space, double c);

  static Jet variable(const JetSpace& space, int var, double value);

  const JetSpace* space() const { return space_; }
  double value() const { return coeffs_[0]; }
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
  JetOrders orders() const;

  /// d^|alpha| f / dz^alpha at the expansion point.
  double derivative(const JetSpace::Index& alpha) const;
  /// Mixed partial along the listed variables, e.g. {3, 4, 4}.
  double derivative(std::initializer_list<int> vars) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& b);
  Jet& operator-=(const Jet& b);
  Jet& operator*=(const Jet& b) { return *this = *this * b; }
  Jet& operator/=(const Jet& b) { return *this = *this / b; }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  /// Partial derivative in one variable.
  friend Jet partial(const Jet& a, int var);

  /// f(a) for f given by its Taylor coefficients d_k = f^(k)(a0) / k! at a0.
  friend Jet compose(const Jet& a, const std::vector<double>& d);

 private:
  void promote(const JetSpace& space);
  void clamp_to(const JetOrders& o);

  const JetSpace* space_ = nullptr;
  std::vector<double> coeffs_;
  JetOrders valid_{99, 99, 99};
};

Jet sqrt(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet pow(const Jet& a, double p);
Jet inv(const Jet& a);

/// Row-major square matrices of jets.
std::vector<Jet> inverse(const std::vector<Jet>& m, int n);
Jet determinant(const std::vector<Jet>& m, int n);

}  // namespace finsler::numeric
