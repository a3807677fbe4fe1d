#pragma once

#include <span>
#include <string>
#include <vector>

#include "finsler/numeric/chart.hpp"
#include "finsler/numeric/phi_function.hpp"

namespace finsler::numeric {

/// Tensors are flat row-major vectors: Gamma^k_ij at (k n + i) n + j,
/// C_ijk and L_ijk at (i n + j) n + k, B^i_jkl at ((i n + j) n + k) n + l.

/// Levi-Civita symbols of a_ij. Throws std::domain_error for singular a.
std::vector<double> christoffel(const ChartMetric& metric, std::span<const double> x);

struct BetaInvariants {
  int n = 0;
  std::vector<double> b_cov;  // b_{i|j}
  std::vector<double> r_ij, s_ij;
  double r00 = 0.0, r0 = 0.0, r = 0.0;
  std::vector<double> r_i, r_up;  // r_i, r^i
  std::vector<double> s_up0;      // s^i_0
  std::vector<double> s_i, s_up;  // s_i, s^i
  double s0 = 0.0;
  /// a^{ij} b_{i|j} / n.
  double fitted_c = 0.0;
  /// max |b_{i|j} - fitted_c a_ij|.
  double conformal_residual = 0.0;
};

BetaInvariants beta_invariants(const ChartMetric& metric, std::span<const double> x, std::span<const double> y);

struct Tolerances {
  double alg = 1e-9;    // g, det g, g^{-1}
  double cartan = 1e-8; // mean Cartan paths
  double spray = 1e-7;  // spray, relative
  double third = 1e-6;  // mean Landsberg paths
  /// Largest conformal residual for which the structured paths are used.
  double conformal = 1e-6;
};

struct FundamentalTensor {
  std::vector<double> g, g_inv;
  double det_g = 0.0;
  /// Closed forms in rho, eta through the (alpha, beta) data.
  std::vector<double> g_closed, g_inv_closed, g_inv_closed_plus;
  double det_closed = 0.0;
  /// max |g - g_closed| / max |g|.
  double res_g = 0.0;
  /// |det g - det_closed| / |det g|.
  double res_det = 0.0;
  /// max |g_inv_closed g - id| with the alpha^-1 and the alpha^+1 cross term.
  double res_inv = 0.0;
  double res_inv_plus = 0.0;
};

struct CurvatureReport {
  int n = 0;
  std::vector<double> x, y;
  double F = 0.0, alpha = 0.0, beta = 0.0, b = 0.0, s = 0.0, ctilde = 0.0;

  FundamentalTensor fundamental;
  std::vector<double> C;
  /// g^{jk} C_ijk, from ln sqrt(det g), and from the closed form.
  std::vector<double> I, I_logdet, I_closed;

  bool closed_conformal = false;
  double c = 0.0;
  double conformal_residual = 0.0;

  /// Definitional; closed-conformal E, H form; general r, s form.
  std::vector<double> G, G_structured, G_general;
  std::vector<double> B;
  std::vector<double> L;
  /// g^{jk} L_ijk and the closed-form W path.
  std::vector<double> J, J_closed;
  /// J + ctilde F I.
  std::vector<double> J_plus;

  double res_I = 0.0;        // max pairwise |difference| of the three I paths
  double res_yI = 0.0;       // |y^j I_j|
  double res_spray = 0.0;    // definitional vs structured, relative
  double res_spray_general = 0.0;
  double res_J = 0.0;        // max |J - J_closed|
  double res_yL = 0.0;       // max_jk |y^i L_ijk|

  double norm_B = 0.0, norm_J = 0.0, norm_J_plus = 0.0, norm_I = 0.0;

  Tolerances tol;

  /// Every identity residual within its tolerance.
  bool identities_hold() const;
  /// Names of residuals over tolerance.
  std::vector<std::string> failures() const;
};

/// The full set of definitional and closed-form quantities at (x, y).
CurvatureReport curvature_report(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                 std::span<const double> y, double ctilde = 0.0, const Tolerances& tol = {});

FundamentalTensor fundamental_tensor(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                     std::span<const double> y);

struct CartanResult {
  std::vector<double> C, I, I_logdet, I_closed;
};
CartanResult cartan_and_mean_cartan(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                    std::span<const double> y);

struct SprayResult {
  std::vector<double> G, G_structured, G_general;
  double residual = 0.0;
};
SprayResult spray(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                  std::span<const double> y, const Tolerances& tol = {});

std::vector<double> berwald_curvature(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                      std::span<const double> y);

struct LandsbergResult {
  std::vector<double> L, J, J_closed;
};
LandsbergResult landsberg_and_mean(const ChartMetric& metric, const PhiFunction& phi, std::span<const double> x,
                                   std::span<const double> y, const Tolerances& tol = {});

/// J + ctilde F I.
std::vector<double> rimlc_residual(const ChartMetric& metric, const PhiFunction& phi, double ctilde,
                                   std::span<const double> x, std::span<const double> y);

double norm(std::span<const double> v);

}  // namespace finsler::numeric
