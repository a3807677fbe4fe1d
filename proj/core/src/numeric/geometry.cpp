#include "finsler/numeric/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "finsler/symbolic/formulas.hpp"

namespace finsler::numeric {

namespace {

using Vec = std::vector<double>;

std::size_t at2(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }
std::size_t at3(int n, int i, int j, int k) { return static_cast<std::size_t>((i * n + j) * n + k); }
std::size_t at4(int n, int i, int j, int k, int l) { return static_cast<std::size_t>(((i * n + j) * n + k) * n + l); }

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Vec values(const std::vector<Jet>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

Vec invert(const Vec& m, int n) {
  std::vector<Jet> j(m.begin(), m.end());
  return values(inverse(j, n));
}

void check_point(const ChartMetric& metric, std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<std::size_t>(metric.dim());
  if (x.size() != n || y.size() != n) throw std::invalid_argument("point and vector must have the chart dimension");
  if (!metric.in_domain(x)) throw std::domain_error("x is outside the chart domain");
  if (max_abs(y) == 0.0) throw std::domain_error("y must be non-zero");
}

struct BaseValues {
  int n = 0;
  Vec a, a_inv, b, b_up;
  Vec da;  // d_k a_ij at (k n + i) n + j
  Vec db;  // d_j b_i at i n + j
  Vec gamma;
};

BaseValues base_values(const ChartMetric& metric, std::span<const double> x) {
  const int n = metric.dim();
  const JetSpace& sp = JetSpace::get(n, 0, 1, 0, 1);
  std::vector<Jet> X;
  for (int i = 0; i < n; ++i) X.push_back(Jet::variable(sp, i, x[static_cast<std::size_t>(i)]));
  std::vector<Jet> aJ, bJ;
  metric.fields(std::span<const Jet>(X), aJ, bJ);
  BaseValues bv;
  bv.n = n;
  bv.a = values(aJ);
  bv.b = values(bJ);
  bv.a_inv = invert(bv.a, n);
  bv.b_up.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) bv.b_up[static_cast<std::size_t>(i)] += bv.a_inv[at2(n, i, j)] * bv.b[static_cast<std::size_t>(j)];
  }
  bv.da.assign(static_cast<std::size_t>(n * n * n), 0.0);
  bv.db.assign(static_cast<std::size_t>(n * n), 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) bv.da[at3(n, k, i, j)] = aJ[at2(n, i, j)].derivative({k});
      bv.db[at2(n, i, k)] = bJ[static_cast<std::size_t>(i)].derivative({k});
    }
  }
  bv.gamma.assign(static_cast<std::size_t>(n * n * n), 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l) {
          acc += bv.a_inv[at2(n, k, l)] * (bv.da[at3(n, i, j, l)] + bv.da[at3(n, j, i, l)] - bv.da[at3(n, l, i, j)]);
        }
        bv.gamma[at3(n, k, i, j)] = 0.5 * acc;
      }
    }
  }
  return bv;
}

BetaInvariants invariants_from(const BaseValues& bv, std::span<const double> y) {
  const int n = bv.n;
  const auto N = static_cast<std::size_t>(n);
  BetaInvariants out;
  out.n = n;
  out.b_cov.assign(N * N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = bv.db[at2(n, i, j)];
      for (int k = 0; k < n; ++k) acc -= bv.gamma[at3(n, k, i, j)] * bv.b[static_cast<std::size_t>(k)];
      out.b_cov[at2(n, i, j)] = acc;
    }
  }
  out.r_ij.assign(N * N, 0.0);
  out.s_ij.assign(N * N, 0.0);
  double trace = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.r_ij[at2(n, i, j)] = 0.5 * (out.b_cov[at2(n, i, j)] + out.b_cov[at2(n, j, i)]);
      out.s_ij[at2(n, i, j)] = 0.5 * (out.b_cov[at2(n, i, j)] - out.b_cov[at2(n, j, i)]);
      trace += bv.a_inv[at2(n, i, j)] * out.b_cov[at2(n, i, j)];
    }
  }
  out.fitted_c = trace / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.conformal_residual =
          std::max(out.conformal_residual, std::abs(out.b_cov[at2(n, i, j)] - out.fitted_c * bv.a[at2(n, i, j)]));
    }
  }
  out.r_i.assign(N, 0.0);
  out.s_i.assign(N, 0.0);
  Vec s_low0(N, 0.0);  // s_ij y^j
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double yj = y[static_cast<std::size_t>(j)];
      const double bj = bv.b_up[static_cast<std::size_t>(j)];
      out.r00 += out.r_ij[at2(n, i, j)] * y[static_cast<std::size_t>(i)] * yj;
      out.r_i[static_cast<std::size_t>(i)] += bj * out.r_ij[at2(n, j, i)];
      out.s_i[static_cast<std::size_t>(i)] += bj * out.s_ij[at2(n, j, i)];
      s_low0[static_cast<std::size_t>(i)] += out.s_ij[at2(n, i, j)] * yj;
    }
  }
  out.r_up.assign(N, 0.0);
  out.s_up.assign(N, 0.0);
  out.s_up0.assign(N, 0.0);
  for (int i = 0; i < n; ++i) {
    const double yi = y[static_cast<std::size_t>(i)];
    out.r0 += out.r_i[static_cast<std::size_t>(i)] * yi;
    out.s0 += out.s_i[static_cast<std::size_t>(i)] * yi;
    out.r += out.r_i[static_cast<std::size_t>(i)] * bv.b_up[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const double aij = bv.a_inv[at2(n, i, j)];
      out.r_up[static_cast<std::size_t>(i)] += aij * out.r_i[static_cast<std::size_t>(j)];
      out.s_up[static_cast<std::size_t>(i)] += aij * out.s_i[static_cast<std::size_t>(j)];
      out.s_up0[static_cast<std::size_t>(i)] += aij * s_low0[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

// Everything derived from the jet of F^2 in all 2n variables.
struct JetStage {
  double F = 0.0;
  Vec g, g_inv, C, I, I_logdet, G, B, L, J, F_y;
  double det_g = 0.0;
};

JetStage jet_stage(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                   std::span<const double> y) {
  const int n = metric.dim();
  const auto N = static_cast<std::size_t>(n);
  const JetSpace& sp = JetSpace::get(n, n, 1, 5, 5);
  std::vector<Jet> X, Y;
  for (int i = 0; i < n; ++i) {
    X.push_back(Jet::variable(sp, i, x[static_cast<std::size_t>(i)]));
    Y.push_back(Jet::variable(sp, n + i, y[static_cast<std::size_t>(i)]));
  }
  std::vector<Jet> aJ, bJ;
  metric.fields(std::span<const Jet>(X), aJ, bJ);
  const std::vector<Jet> a_invJ = inverse(aJ, n);
  Jet alpha2(0.0), beta(0.0), b2(0.0);
  for (int i = 0; i < n; ++i) {
    beta += bJ[static_cast<std::size_t>(i)] * Y[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      alpha2 += aJ[at2(n, i, j)] * Y[static_cast<std::size_t>(i)] * Y[static_cast<std::size_t>(j)];
      b2 += a_invJ[at2(n, i, j)] * bJ[static_cast<std::size_t>(i)] * bJ[static_cast<std::size_t>(j)];
    }
  }
  const Jet alpha = sqrt(alpha2);
  const Jet phiJ = phi(b2, beta / alpha);
  const Jet F = alpha * phiJ;
  const Jet F2 = alpha2 * phiJ * phiJ;

  JetStage st;
  st.F = F.value();
  st.F_y.resize(N);
  for (int m = 0; m < n; ++m) st.F_y[static_cast<std::size_t>(m)] = F.derivative({n + m});

  std::vector<Jet> dF2y;
  for (int l = 0; l < n; ++l) dF2y.push_back(partial(F2, n + l));
  std::vector<Jet> gJ(N * N);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      gJ[at2(n, i, j)] = 0.5 * partial(dF2y[static_cast<std::size_t>(i)], n + j);
      gJ[at2(n, j, i)] = gJ[at2(n, i, j)];
    }
  }
  const std::vector<Jet> g_invJ = inverse(gJ, n);
  const Jet detJ = determinant(gJ, n);
  st.g = values(gJ);
  st.g_inv = values(g_invJ);
  st.det_g = detJ.value();

  st.C.assign(N * N * N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) st.C[at3(n, i, j, k)] = 0.25 * F2.derivative({n + i, n + j, n + k});
    }
  }
  st.I.assign(N, 0.0);
  st.I_logdet.assign(N, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) st.I[static_cast<std::size_t>(k)] += st.g_inv[at2(n, i, j)] * st.C[at3(n, i, j, k)];
    }
    st.I_logdet[static_cast<std::size_t>(k)] = 0.5 * detJ.derivative({n + k}) / st.det_g;
  }

  std::vector<Jet> T;
  for (int l = 0; l < n; ++l) {
    Jet t = -partial(F2, l);
    for (int m = 0; m < n; ++m) t += partial(dF2y[static_cast<std::size_t>(l)], m) * Y[static_cast<std::size_t>(m)];
    T.push_back(std::move(t));
  }
  std::vector<Jet> GJ;
  for (int i = 0; i < n; ++i) {
    Jet acc(0.0);
    for (int l = 0; l < n; ++l) acc += g_invJ[at2(n, i, l)] * T[static_cast<std::size_t>(l)];
    GJ.push_back(0.25 * acc);
  }
  st.G = values(GJ);

  st.B.assign(N * N * N * N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        for (int l = k; l < n; ++l) {
          const double v = GJ[static_cast<std::size_t>(i)].derivative({n + j, n + k, n + l});
          const int p[3] = {j, k, l};
          // Fill all orderings of (j, k, l).
          const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
          for (const auto& q : perm) st.B[at4(n, i, p[q[0]], p[q[1]], p[q[2]])] = v;
        }
      }
    }
  }
  st.L.assign(N * N * N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) acc += st.F_y[static_cast<std::size_t>(m)] * st.B[at4(n, m, i, j, k)];
        st.L[at3(n, i, j, k)] = -0.5 * st.F * acc;
      }
    }
  }
  st.J.assign(N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) st.J[static_cast<std::size_t>(i)] += st.g_inv[at2(n, j, k)] * st.L[at3(n, i, j, k)];
    }
  }
  return st;
}

struct ScalarStage {
  ScalarBundle sb;
  double W = 0.0;
  double V = 0.0;
};

ScalarStage scalar_stage(const PhiFunction& phi, double b2, double s, int n) {
  const BiSeries B = BiSeries::b2(b2);
  const BiSeries S = BiSeries::s(s);
  const auto f = symbolic::make_bundle(phi(B, S), B, S);
  const auto d = symbolic::eh_derivatives(f);
  ScalarStage out;
  out.sb = scalar_bundle(phi, b2, s);
  out.W = symbolic::mean_landsberg_w(f, d, n).value();
  out.V = symbolic::mean_cartan_v(f, n).value();
  return out;
}

}  // namespace

double norm(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

std::vector<double> christoffel(const ChartMetric& metric, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(metric.dim())) throw std::invalid_argument("point has the wrong dimension");
  return base_values(metric, x).gamma;
}

BetaInvariants beta_invariants(const ChartMetric& metric, std::span<const double> x, std::span<const double> y) {
  check_point(metric, x, y);
  return invariants_from(base_values(metric, x), y);
}

CurvatureReport curvature_report(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                 std::span<const double> y, double ctilde, const Tolerances& tol) {
  check_point(metric, x, y);
  const int n = metric.dim();
  const auto N = static_cast<std::size_t>(n);
  const BaseValues bv = base_values(metric, x);
  const BetaInvariants inv = invariants_from(bv, y);
  const JetStage st = jet_stage(metric, phi, x, y);

  CurvatureReport rep;
  rep.n = n;
  rep.x.assign(x.begin(), x.end());
  rep.y.assign(y.begin(), y.end());
  rep.ctilde = ctilde;
  rep.tol = tol;
  rep.F = st.F;

  double alpha2 = 0.0, beta = 0.0, b2 = 0.0;
  Vec ya(N, 0.0);  // a_ij y^j
  for (int i = 0; i < n; ++i) {
    beta += bv.b[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    b2 += bv.b[static_cast<std::size_t>(i)] * bv.b_up[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) ya[static_cast<std::size_t>(i)] += bv.a[at2(n, i, j)] * y[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < n; ++i) alpha2 += ya[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  const double alpha = std::sqrt(alpha2);
  const double s = beta / alpha;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.b = std::sqrt(b2);
  rep.s = s;

  const ScalarStage sc = scalar_stage(phi, b2, s, n);
  const auto& f = sc.sb.f;
  Vec l_up(N), l_low(N), dir(N);  // dir_j = b_j - s l_j
  for (std::size_t i = 0; i < N; ++i) {
    l_up[i] = y[i] / alpha;
    l_low[i] = ya[i] / alpha;
    dir[i] = bv.b[i] - s * l_low[i];
  }

  // Fundamental tensor.
  FundamentalTensor& ft = rep.fundamental;
  ft.g = st.g;
  ft.g_inv = st.g_inv;
  ft.det_g = st.det_g;
  ft.g_closed.assign(N * N, 0.0);
  ft.g_inv_closed.assign(N * N, 0.0);
  ft.g_inv_closed_plus.assign(N * N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
      ft.g_closed[at2(n, i, j)] = f.rho * bv.a[at2(n, i, j)] + f.rho0 * bv.b[I] * bv.b[J] +
                                  f.rho1 * (bv.b[I] * l_low[J] + bv.b[J] * l_low[I]) - s * f.rho1 * l_low[I] * l_low[J];
      const double common = bv.a_inv[at2(n, i, j)] + f.eta * bv.b_up[I] * bv.b_up[J] + f.eta1 * y[I] * y[J] / alpha2;
      const double cross = f.eta0 * (bv.b_up[I] * y[J] + bv.b_up[J] * y[I]);
      ft.g_inv_closed[at2(n, i, j)] = (common + cross / alpha) / f.rho;
      ft.g_inv_closed_plus[at2(n, i, j)] = (common + cross * alpha) / f.rho;
    }
  }
  double det_a = 1.0;
  {
    std::vector<Jet> aj(bv.a.begin(), bv.a.end());
    det_a = determinant(aj, n).value();
  }
  ft.det_closed = std::pow(f.phi, n + 1) * std::pow(f.m, n - 2) * f.delta * det_a;
  ft.res_g = max_abs_diff(ft.g, ft.g_closed) / max_abs(ft.g);
  ft.res_det = std::abs(ft.det_g - ft.det_closed) / std::abs(ft.det_g);
  auto inv_residual = [&](const Vec& gi) {
    double r = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += gi[at2(n, i, j)] * ft.g[at2(n, j, k)];
        r = std::max(r, std::abs(acc - (i == k ? 1.0 : 0.0)));
      }
    }
    return r;
  };
  ft.res_inv = inv_residual(ft.g_inv_closed);
  ft.res_inv_plus = inv_residual(ft.g_inv_closed_plus);

  // Cartan torsion.
  rep.C = st.C;
  rep.I = st.I;
  rep.I_logdet = st.I_logdet;
  rep.I_closed.resize(N);
  for (std::size_t j = 0; j < N; ++j) rep.I_closed[j] = sc.V / (2.0 * alpha * f.rho) * dir[j];
  rep.res_I = std::max({max_abs_diff(rep.I, rep.I_logdet), max_abs_diff(rep.I, rep.I_closed),
                        max_abs_diff(rep.I_logdet, rep.I_closed)});
  double yI = 0.0;
  for (std::size_t j = 0; j < N; ++j) yI += y[j] * rep.I[j];
  rep.res_yI = std::abs(yI);

  // Spray.
  rep.conformal_residual = inv.conformal_residual;
  rep.closed_conformal = inv.conformal_residual <= tol.conformal && std::abs(inv.fitted_c) > tol.conformal;
  rep.c = metric.conformal_factor(x).value_or(inv.fitted_c);
  rep.G = st.G;
  Vec G_alpha(N, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        G_alpha[static_cast<std::size_t>(i)] +=
            0.5 * bv.gamma[at3(n, i, j, k)] * y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k)];
      }
    }
  }
  const double spray_scale = std::max(max_abs(rep.G), 1e-6 * rep.F * rep.F);
  rep.G_general.resize(N);
  {
    const double common = -2.0 * alpha * f.Q * inv.s0 + inv.r00 + 2.0 * alpha2 * f.R * inv.r;
    const double rs0 = inv.r0 + inv.s0;
    for (std::size_t i = 0; i < N; ++i) {
      rep.G_general[i] = G_alpha[i] + alpha * f.Q * inv.s_up0[i] + (f.Theta * common + alpha * f.Omega * rs0) * l_up[i] +
                         (f.Psi * common + alpha * f.Pi * rs0) * bv.b_up[i] - alpha2 * f.R * (inv.r_up[i] + inv.s_up[i]);
    }
  }
  rep.res_spray_general = max_abs_diff(rep.G, rep.G_general) / spray_scale;
  if (rep.closed_conformal) {
    rep.G_structured.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      rep.G_structured[i] = G_alpha[i] + rep.c * alpha2 * (f.E * l_up[i] + f.H * bv.b_up[i]);
    }
    rep.res_spray = max_abs_diff(rep.G, rep.G_structured) / spray_scale;
  }

  // Berwald and Landsberg.
  rep.B = st.B;
  rep.L = st.L;
  rep.J = st.J;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += y[static_cast<std::size_t>(i)] * rep.L[at3(n, i, j, k)];
      rep.res_yL = std::max(rep.res_yL, std::abs(acc));
    }
  }
  if (rep.closed_conformal) {
    rep.J_closed.resize(N);
    const double scale = -rep.c * f.phi / (2.0 * f.rho) * sc.W;
    for (std::size_t j = 0; j < N; ++j) rep.J_closed[j] = scale * dir[j];
    rep.res_J = max_abs_diff(rep.J, rep.J_closed);
  }
  rep.J_plus.resize(N);
  for (std::size_t j = 0; j < N; ++j) rep.J_plus[j] = rep.J[j] + ctilde * rep.F * rep.I[j];

  rep.norm_B = norm(rep.B);
  rep.norm_J = norm(rep.J);
  rep.norm_J_plus = norm(rep.J_plus);
  rep.norm_I = norm(rep.I);
  return rep;
}

std::vector<std::string> CurvatureReport::failures() const {
  std::vector<std::string> out;
  auto check = [&](const char* name, double v, double t) {
    if (!(v <= t)) out.emplace_back(name);
  };
  check("g", fundamental.res_g, tol.alg);
  check("det_g", fundamental.res_det, tol.alg);
  check("g_inv", fundamental.res_inv, tol.alg);
  check("I", res_I, tol.cartan);
  check("yI", res_yI, tol.cartan);
  check("yL", res_yL, tol.cartan);
  check("G_general", res_spray_general, tol.spray);
  if (closed_conformal) {
    check("G_structured", res_spray, tol.spray);
    check("J", res_J, tol.third);
  }
  return out;
}

bool CurvatureReport::identities_hold() const { return failures().empty(); }

FundamentalTensor fundamental_tensor(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                     std::span<const double> y) {
  return curvature_report(metric, phi, x, y).fundamental;
}

CartanResult cartan_and_mean_cartan(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                    std::span<const double> y) {
  CurvatureReport r = curvature_report(metric, phi, x, y);
  return {std::move(r.C), std::move(r.I), std::move(r.I_logdet), std::move(r.I_closed)};
}

SprayResult spray(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                  std::span<const double> y, const Tolerances& tol) {
  CurvatureReport r = curvature_report(metric, phi, x, y, 0.0, tol);
  return {std::move(r.G), std::move(r.G_structured), std::move(r.G_general), r.res_spray};
}

std::vector<double> berwald_curvature(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                      std::span<const double> y) {
  return curvature_report(metric, phi, x, y).B;
}

LandsbergResult landsberg_and_mean(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                   std::span<const double> y, const Tolerances& tol) {
  CurvatureReport r = curvature_report(metric, phi, x, y, 0.0, tol);
  return {std::move(r.L), std::move(r.J), std::move(r.J_closed)};
}

std::vector<double> rimlc_residual(const ChartMetric& metric, const PhiFunction& phi, double ctilde,
                                   std::span<const double> x, std::span<const double> y) {
  return curvature_report(metric, phi, x, y, ctilde).J_plus;
}

}  // namespace finsler::numeric
