#pragma once

// Closed-form quantities of a general (alpha, beta) metric F = alpha * phi(b^2, s),
// written once for any field-like type X that provides +, -, *, /, X(long)
// and the two partial derivatives d_ds(X) and d_db2(X) (found by ADL). The
// exact engine instantiates them with RatExpr, the numeric engine with a
// truncated bivariate Taylor series.

namespace finsler::symbolic {

template <class X>
struct Bundle {
  X b2, s;
  X phi, p1, p2, p12, p22, p222;
  X m;      // phi - s phi_2
  X delta;  // phi - s phi_2 + (b^2 - s^2) phi_22
  X rho, rho0, rho1;
  X eta, eta0, eta1;
  X Q, R, Theta, Psi, Pi, Omega;
  X E, H;
};

template <class X>
Bundle<X> make_bundle(const X& phi, const X& b2, const X& s) {
  Bundle<X> f;
  f.b2 = b2;
  f.s = s;
  f.phi = phi;
  f.p1 = d_db2(phi);
  f.p2 = d_ds(phi);
  f.p12 = d_ds(f.p1);
  f.p22 = d_ds(f.p2);
  f.p222 = d_ds(f.p22);
  const X two(2);
  const X bs = b2 - s * s;
  const X k = s * phi + bs * f.p2;
  f.m = phi - s * f.p2;
  f.delta = f.m + bs * f.p22;
  f.rho = phi * f.m;
  f.rho0 = phi * f.p22 + f.p2 * f.p2;
  f.rho1 = f.m * f.p2 - s * phi * f.p22;
  f.eta = -f.p22 / f.delta;
  f.eta0 = -f.rho1 / (phi * f.delta);
  f.eta1 = k * f.rho1 / (phi * phi * f.delta);
  f.Q = f.p2 / f.m;
  f.R = f.p1 / f.m;
  f.Theta = f.rho1 / (two * phi * f.delta);
  f.Psi = f.p22 / (two * f.delta);
  f.Pi = (f.m * f.p12 - s * f.p1 * f.p22) / (f.m * f.delta);
  f.Omega = two * f.p1 / phi - k / phi * f.Pi;
  f.H = (f.p22 - two * (f.p1 - s * f.p12)) / (two * f.delta);
  f.E = (f.p2 + two * s * f.p1) / (two * phi) - f.H * k / phi;
  return f;
}

/// s-derivatives of E and H up to third order.
template <class X>
struct EHDerivatives {
  X E2, E22, E222, H2, H22, H222;
};

template <class X>
EHDerivatives<X> eh_derivatives(const Bundle<X>& f) {
  EHDerivatives<X> d;
  d.E2 = d_ds(f.E);
  d.E22 = d_ds(d.E2);
  d.E222 = d_ds(d.E22);
  d.H2 = d_ds(f.H);
  d.H22 = d_ds(d.H2);
  d.H222 = d_ds(d.H22);
  return d;
}

/// Scalar W with J_j = -(c phi / (2 rho)) W (b_j - s l_j).
template <class X>
X mean_landsberg_w(const Bundle<X>& f, const EHDerivatives<X>& d, long n) {
  const X n1(n + 1);
  const X three(3);
  const X& s = f.s;
  const X bs = f.b2 - s * s;
  const X k = s * f.phi + bs * f.p2;
  const X e0 = f.E - s * d.E2;
  const X h0 = d.H2 - s * d.H22;
  X w = e0 * n1 * f.p2 + three * d.E22 * f.p2 * bs - s * d.E22 * n1 * f.phi + d.E222 * f.phi * bs;
  w += (h0 * n1 + d.H222 * bs) * k;
  w += three * f.eta * e0 * f.p2 * bs + three * f.eta * d.E22 * f.p2 * bs * bs -
       three * s * f.eta * d.E22 * f.phi * bs;
  w += f.eta * d.E222 * bs * bs * f.phi + f.eta * (three * h0 * bs + d.H222 * bs * bs) * k;
  return w;
}

/// Left side of the second weak-Landsberg condition,
/// (E - s E_2) phi_2 + (H_2 - s H_22)(s phi + (b^2 - s^2) phi_2).
template <class X>
X weak_landsberg_p(const Bundle<X>& f, const EHDerivatives<X>& d) {
  const X& s = f.s;
  return (f.E - s * d.E2) * f.p2 + (d.H2 - s * d.H22) * (s * f.phi + (f.b2 - s * s) * f.p2);
}

/// Scalar V with I_j = V / (2 alpha rho) (b_j - s l_j), from the
/// s-derivative of the log of det(g) / det(a).
template <class X>
X mean_cartan_v(const Bundle<X>& f, long n) {
  const X sum = X(n + 1) * f.p2 / f.phi + X(n - 2) * d_ds(f.m) / f.m + d_ds(f.delta) / f.delta;
  return f.rho * sum;
}

/// The same scalar written through phi_22 and phi_222 explicitly.
template <class X>
X mean_cartan_v_bracket(const Bundle<X>& f, long n) {
  const X& s = f.s;
  const X bs = f.b2 - s * s;
  const X sum = X(n + 1) * f.p2 / f.phi - X(n - 2) * s * f.p22 / f.m +
                (bs * f.p222 - X(3) * s * f.p22) / f.delta;
  return f.rho * sum;
}

/// Expanded form of V with eta; sign = +1 reproduces the layout
/// "- (n-2)... + (n+1)..." and sign = -1 the flipped one.
template <class X>
X mean_cartan_v_expanded(const Bundle<X>& f, long n, int sign) {
  const X& s = f.s;
  const X bs = f.b2 - s * s;
  const X head = (bs * f.m * f.phi * f.p222 + X(n + 1) * f.m * f.m * f.phi) / f.delta;
  const X t1 = X(n - 2) * bs * s * f.phi * f.p22 * f.eta;
  const X t2 = X(n + 1) * f.m * (bs * f.p2 - s * f.phi) * f.eta;
  return sign > 0 ? head - t1 + t2 : head + t1 - t2;
}

}  // namespace finsler::symbolic
