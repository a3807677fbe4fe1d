#include "finsler/numeric/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace finsler::numeric {

namespace {

std::uint64_t pack(const JetSpace::Index& a) {
  std::uint64_t key = 0;
  for (int v = 0; v < kMaxJetVars; ++v) key |= static_cast<std::uint64_t>(a[static_cast<std::size_t>(v)]) << (4 * v);
  return key;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

JetOrders min_orders(const JetOrders& a, const JetOrders& b) {
  return {std::min(a.base, b.base), std::min(a.fiber, b.fiber), std::min(a.total, b.total)};
}

double factorial_weight(const JetSpace::Index& a) {
  double w = 1.0;
  for (std::uint8_t e : a) {
    for (int k = 2; k <= e; ++k) w *= k;
  }
  return w;
}

}  // namespace

const JetSpace& JetSpace::get(int n_base, int n_fiber, int max_base, int max_fiber, int max_total) {
  if (n_base < 0 || n_fiber < 0 || n_base + n_fiber > kMaxJetVars || n_base + n_fiber == 0) {
    throw std::invalid_argument("jet space needs 1.." + std::to_string(kMaxJetVars) + " variables");
  }
  if (max_base < 0 || max_fiber < 0 || max_total < 0 || max_total > 15) {
    throw std::invalid_argument("jet orders out of range");
  }
  static std::map<std::tuple<int, int, int, int, int>, std::unique_ptr<JetSpace>> spaces;
  const std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_tuple(n_base, n_fiber, max_base, max_fiber, max_total);
  auto it = spaces.find(key);
  if (it == spaces.end()) {
    it = spaces.emplace(key, std::unique_ptr<JetSpace>(new JetSpace(n_base, n_fiber, max_base, max_fiber, max_total)))
             .first;
  }
  return *it->second;
}

JetSpace::JetSpace(int n_base, int n_fiber, int max_base, int max_fiber, int max_total)
    : n_base_(n_base), n_fiber_(n_fiber), max_{max_base, max_fiber, max_total} {
  const int nv = n_base + n_fiber;
  // Graded enumeration: all indices of total degree d before degree d + 1.
  std::vector<Index> layer{Index{}};
  for (int d = 0; d <= max_total; ++d) {
    for (const Index& a : layer) {
      int bd = 0, fd = 0;
      for (int v = 0; v < nv; ++v) (v < n_base ? bd : fd) += a[static_cast<std::size_t>(v)];
      if (bd <= max_base && fd <= max_fiber) {
        indices_.push_back(a);
        base_deg_.push_back(bd);
        fiber_deg_.push_back(fd);
      }
    }
    // Next layer: raise the last non-zero slot or any later slot, so each index appears once.
    std::vector<Index> next;
    for (const Index& a : layer) {
      int last = 0;
      for (int v = 0; v < nv; ++v) {
        if (a[static_cast<std::size_t>(v)] != 0) last = v;
      }
      for (int v = last; v < nv; ++v) {
        Index b = a;
        ++b[static_cast<std::size_t>(v)];
        next.push_back(b);
      }
    }
    layer = std::move(next);
  }

  for (std::size_t k = 0; k < indices_.size(); ++k) lookup_.emplace(pack(indices_[k]), static_cast<std::ptrdiff_t>(k));

  const std::size_t n = indices_.size();
  shift_.assign(static_cast<std::size_t>(nv) * n, -1);
  for (int v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < n; ++k) {
      Index b = indices_[k];
      ++b[static_cast<std::size_t>(v)];
      auto it = lookup_.find(pack(b));
      if (it != lookup_.end()) shift_[static_cast<std::size_t>(v) * n + k] = it->second;
    }
  }

  std::vector<std::vector<Pair>> per(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (total_degree(i) + total_degree(j) > max_total) continue;
      if (base_deg_[i] + base_deg_[j] > max_base || fiber_deg_[i] + fiber_deg_[j] > max_fiber) continue;
      Index c;
      for (std::size_t v = 0; v < c.size(); ++v) c[v] = static_cast<std::uint8_t>(indices_[i][v] + indices_[j][v]);
      auto it = lookup_.find(pack(c));
      if (it != lookup_.end()) {
        per[static_cast<std::size_t>(it->second)].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  pair_offset_.assign(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    pair_offset_[k + 1] = pair_offset_[k] + per[k].size();
    pairs_.insert(pairs_.end(), per[k].begin(), per[k].end());
  }
}

std::ptrdiff_t JetSpace::find(const Index& alpha) const {
  auto it = lookup_.find(pack(alpha));
  return it == lookup_.end() ? -1 : it->second;
}

Jet::Jet(const JetSpace& space, double c) : space_(&space), coeffs_(space.size(), 0.0), valid_(space.max_orders()) {
  coeffs_[0] = c;
}

Jet Jet::variable(const JetSpace& space, int var, double value) {
  if (var < 0 || var >= space.num_vars()) throw std::out_of_range("jet variable index");
  Jet j(space, value);
  const std::ptrdiff_t k = space.shift(var, 0);
  if (k >= 0) j.coeffs_[static_cast<std::size_t>(k)] = 1.0;
  return j;
}

JetOrders Jet::orders() const {
  if (space_ == nullptr) return valid_;
  return min_orders(valid_, space_->max_orders());
}

double Jet::derivative(const JetSpace::Index& alpha) const {
  int bd = 0, fd = 0, nz = 0;
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    nz += alpha[v];
    if (space_ != nullptr && static_cast<int>(v) < space_->n_base()) bd += alpha[v];
    else fd += alpha[v];
  }
  if (space_ == nullptr) return nz == 0 ? coeffs_[0] : 0.0;
  const JetOrders o = orders();
  if (bd > o.base || fd > o.fiber || bd + fd > o.total) throw std::out_of_range("derivative beyond the jet's valid order");
  const std::ptrdiff_t k = space_->find(alpha);
  if (k < 0) throw std::out_of_range("derivative beyond the jet's valid order");
  return coeffs_[static_cast<std::size_t>(k)] * factorial_weight(alpha);
}

double Jet::derivative(std::initializer_list<int> vars) const {
  JetSpace::Index a{};
  for (int v : vars) {
    if (v < 0 || v >= kMaxJetVars) throw std::out_of_range("jet variable index");
    ++a[static_cast<std::size_t>(v)];
  }
  return derivative(a);
}

void Jet::promote(const JetSpace& space) {
  const double c = coeffs_[0];
  space_ = &space;
  coeffs_.assign(space.size(), 0.0);
  coeffs_[0] = c;
}

void Jet::clamp_to(const JetOrders& o) {
  valid_ = o;
  if (space_ == nullptr) return;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!space_->within(k, o)) coeffs_[k] = 0.0;
  }
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (double& c : r.coeffs_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& b) {
  if (b.space_ == nullptr) {
    coeffs_[0] += b.coeffs_[0];
    return *this;
  }
  if (space_ == nullptr) promote(*b.space_);
  if (space_ != b.space_) throw std::invalid_argument("jets from different spaces");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  const JetOrders o = min_orders(valid_, b.valid_);
  if (o.base != valid_.base || o.fiber != valid_.fiber || o.total != valid_.total) clamp_to(o);
  return *this;
}

Jet& Jet::operator-=(const Jet& b) { return *this += -b; }

Jet operator*(const Jet& a, const Jet& b) {
  if (a.space_ == nullptr || b.space_ == nullptr) {
    const Jet& s = a.space_ == nullptr ? a : b;
    Jet r = a.space_ == nullptr ? b : a;
    const double c = s.coeffs_[0];
    for (double& x : r.coeffs_) x *= c;
    if (a.space_ == nullptr && b.space_ == nullptr) r.valid_ = min_orders(a.valid_, b.valid_);
    return r;
  }
  if (a.space_ != b.space_) throw std::invalid_argument("jets from different spaces");
  const JetSpace& sp = *a.space_;
  Jet r(sp, 0.0);
  r.valid_ = min_orders(a.valid_, b.valid_);
  const double* ac = a.coeffs_.data();
  const double* bc = b.coeffs_.data();
  for (std::size_t k = 0; k < sp.size(); ++k) {
    if (!sp.within(k, r.valid_)) continue;
    double acc = 0.0;
    for (const JetSpace::Pair* p = sp.pairs_begin(k); p != sp.pairs_end(k); ++p) acc += ac[p->i] * bc[p->j];
    r.coeffs_[k] = acc;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.space_ == nullptr) {
    Jet r = a;
    for (double& x : r.coeffs_) x /= b.coeffs_[0];
    return r;
  }
  return a * inv(b);
}

Jet partial(const Jet& a, int var) {
  if (a.space_ == nullptr) return Jet(0.0);
  const JetSpace& sp = *a.space_;
  if (var < 0 || var >= sp.num_vars()) throw std::out_of_range("jet variable index");
  Jet r(sp, 0.0);
  for (std::size_t k = 0; k < sp.size(); ++k) {
    const std::ptrdiff_t t = sp.shift(var, k);
    if (t >= 0) r.coeffs_[k] = (sp.index(k)[static_cast<std::size_t>(var)] + 1) * a.coeffs_[static_cast<std::size_t>(t)];
  }
  JetOrders o = a.orders();
  if (var < sp.n_base()) --o.base;
  else --o.fiber;
  --o.total;
  r.clamp_to(o);
  return r;
}

Jet compose(const Jet& a, const std::vector<double>& d) {
  if (d.empty()) throw std::invalid_argument("compose needs at least the value");
  if (a.space_ == nullptr) {
    Jet r(d[0]);
    r.valid_ = a.valid_;
    return r;
  }
  const JetOrders o = a.orders();
  const int order = std::min(std::max(o.total, 0), static_cast<int>(d.size()) - 1);
  Jet h = a;
  h.coeffs_[0] = 0.0;
  Jet r(*a.space_, d[static_cast<std::size_t>(order)]);
  r.valid_ = o;
  for (int k = order - 1; k >= 0; --k) {
    r = r * h;
    r.coeffs_[0] += d[static_cast<std::size_t>(k)];
  }
  r.clamp_to(o);
  return r;
}

namespace {

int compose_order(const Jet& a) {
  if (a.space() == nullptr) return 0;
  return std::max(a.orders().total, 0);
}

// Taylor coefficients of x^p at x0: binom(p, k) x0^(p - k).
std::vector<double> power_series(double x0, double p, int order) {
  std::vector<double> d(static_cast<std::size_t>(order) + 1);
  double binom = 1.0;
  for (int k = 0; k <= order; ++k) {
    d[static_cast<std::size_t>(k)] = binom * std::pow(x0, p - k);
    binom *= (p - k) / (k + 1);
  }
  return d;
}

}  // namespace

Jet pow(const Jet& a, double p) {
  const double x0 = a.value();
  if (x0 <= 0.0 && p != std::floor(p)) throw std::domain_error("non-integer power of a non-positive value");
  if (x0 == 0.0 && p < 0.0) throw std::domain_error("negative power of zero");
  return compose(a, power_series(x0, p, compose_order(a)));
}

Jet sqrt(const Jet& a) {
  if (!(a.value() > 0.0)) throw std::domain_error("sqrt of a non-positive jet");
  return pow(a, 0.5);
}

Jet inv(const Jet& a) {
  if (a.value() == 0.0) throw std::domain_error("inverse of a jet with zero value");
  return compose(a, power_series(a.value(), -1.0, compose_order(a)));
}

Jet exp(const Jet& a) {
  const int order = compose_order(a);
  std::vector<double> d(static_cast<std::size_t>(order) + 1);
  const double e = std::exp(a.value());
  double f = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f *= k;
    d[static_cast<std::size_t>(k)] = e / f;
  }
  return compose(a, d);
}

Jet log(const Jet& a) {
  const double x0 = a.value();
  if (!(x0 > 0.0)) throw std::domain_error("log of a non-positive jet");
  const int order = compose_order(a);
  std::vector<double> d(static_cast<std::size_t>(order) + 1);
  d[0] = std::log(x0);
  for (int k = 1; k <= order; ++k) d[static_cast<std::size_t>(k)] = ((k % 2 == 1) ? 1.0 : -1.0) / (k * std::pow(x0, k));
  return compose(a, d);
}

namespace {

// LU with partial pivoting on the values; returns the sign of the permutation.
int lu(std::vector<Jet>& m, std::vector<int>& perm, int n) {
  int sign = 1;
  perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  auto at = [&](int i, int j) -> Jet& { return m[static_cast<std::size_t>(i * n + j)]; };
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(at(i, k).value()) > std::abs(at(piv, k).value())) piv = i;
    }
    if (at(piv, k).value() == 0.0) throw std::domain_error("singular jet matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(piv)]);
      sign = -sign;
    }
    const Jet pinv = inv(at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const Jet f = at(i, k) * pinv;
      at(i, k) = f;
      for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return sign;
}

}  // namespace

Jet determinant(const std::vector<Jet>& m, int n) {
  if (m.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("matrix size");
  std::vector<Jet> a = m;
  std::vector<int> perm;
  const int sign = lu(a, perm, n);
  Jet d(static_cast<double>(sign));
  for (int i = 0; i < n; ++i) d = d * a[static_cast<std::size_t>(i * n + i)];
  return d;
}

std::vector<Jet> inverse(const std::vector<Jet>& m, int n) {
  if (m.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("matrix size");
  std::vector<Jet> a = m;
  std::vector<int> perm;
  lu(a, perm, n);
  auto at = [&](int i, int j) -> const Jet& { return a[static_cast<std::size_t>(i * n + j)]; };
  std::vector<Jet> out(static_cast<std::size_t>(n * n));
  std::vector<Jet> diag_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag_inv[static_cast<std::size_t>(i)] = inv(at(i, i));
  for (int col = 0; col < n; ++col) {
    std::vector<Jet> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Jet v(perm[static_cast<std::size_t>(i)] == col ? 1.0 : 0.0);
      for (int j = 0; j < i; ++j) v -= at(i, j) * x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(i)] = v;
    }
    for (int i = n - 1; i >= 0; --i) {
      Jet v = x[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) v -= at(i, j) * x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(i)] = v * diag_inv[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i * n + col)] = x[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace finsler::numeric
