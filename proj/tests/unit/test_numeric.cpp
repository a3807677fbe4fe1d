#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/calibration.hpp"
#include "finsler/numeric/bi_series.hpp"
#include "finsler/numeric/geometry.hpp"

using namespace finsler::numeric;

namespace {

PhiPtr one_phi() {
  return make_phi("1", [](const auto& B, const auto& S) {
    using X = std::decay_t<decltype(S)>;
    return X(1.0) + 0.0 * B;
  });
}

PhiPtr randers_phi() {
  return make_phi("randers", [](const auto& B, const auto& S) {
    using std::sqrt;
    using X = std::decay_t<decltype(S)>;
    return (sqrt(X(1.0) - B + S * S) + S) / (X(1.0) - B);
  });
}

PhiPtr linear_phi(double k) {
  return make_phi("1+ks", [k](const auto& B, const auto& S) {
    using X = std::decay_t<decltype(S)>;
    return X(1.0) + k * S + 0.0 * B;
  });
}

// phi = 1/u + s/u^2 with u = b.
PhiPtr family_m1() {
  return make_phi("family", [](const auto& B, const auto& S) {
    using std::sqrt;
    const auto u = sqrt(B);
    return 1.0 / u + S / (u * u);
  });
}

// phi = 1/u + s/u^2 + s^2/u^3.
PhiPtr family_m2() {
  return make_phi("family2", [](const auto& B, const auto& S) {
    using std::sqrt;
    const auto u = sqrt(B);
    return 1.0 / u + S / (u * u) + S * S / (u * u * u);
  });
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Conformally flat metric delta_ij / (1 - |x|^2)^2.
ChartPtr conformal_chart(int n) {
  return make_chart("conformal", n, BallDomain{0.0, 0.8}, [](int dim, const auto* x, auto* a, auto* b) {
    using S = std::remove_cvref_t<decltype(*x)>;
    S r2(0.0);
    for (int i = 0; i < dim; ++i) r2 = r2 + x[i] * x[i];
    const S w = S(1.0) - r2;
    for (int i = 0; i < dim; ++i) {
      a[i * dim + i] = S(1.0) / (w * w);
      b[i] = x[i];
    }
  });
}

}  // namespace

TEST_CASE("jet arithmetic is exact on polynomials") {
  const JetSpace& sp = JetSpace::get(1, 2, 1, 5, 5);
  const Jet x = Jet::variable(sp, 0, 0.5);
  const Jet y = Jet::variable(sp, 1, -1.0);
  const Jet z = Jet::variable(sp, 2, 2.0);
  const Jet f = x * y * y + z * z * z - 3.0 * y * z;
  CHECK(f.value() == doctest::Approx(0.5 + 8.0 + 6.0));
  CHECK(f.derivative({1}) == doctest::Approx(2 * 0.5 * -1.0 - 3.0 * 2.0));
  CHECK(f.derivative({1, 1}) == doctest::Approx(1.0));
  CHECK(f.derivative({0, 1, 1}) == doctest::Approx(2.0));
  CHECK(f.derivative({2, 2, 2}) == doctest::Approx(6.0));
  CHECK(f.derivative({1, 2}) == doctest::Approx(-3.0));
  CHECK(partial(f, 2).derivative({2, 2}) == doctest::Approx(6.0));
}

TEST_CASE("jet validity orders drop under differentiation") {
  const JetSpace& sp = JetSpace::get(1, 1, 1, 5, 5);
  const Jet y = Jet::variable(sp, 1, 0.3);
  const Jet f = exp(y);
  CHECK(f.derivative({1, 1, 1, 1, 1}) == doctest::Approx(std::exp(0.3)));
  const Jet d = partial(partial(f, 1), 1);
  CHECK(d.orders().fiber == 3);
  CHECK(d.derivative({1, 1, 1}) == doctest::Approx(std::exp(0.3)));
  CHECK_THROWS_AS(d.derivative({1, 1, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(f.derivative({0, 0}), std::out_of_range);
}

TEST_CASE("jet elementary functions match their series") {
  const JetSpace& sp = JetSpace::get(0, 1, 0, 5, 5);
  const double a = 0.7;
  const Jet t = Jet::variable(sp, 0, a);
  CHECK(sqrt(t).derivative({0, 0}) == doctest::Approx(-0.25 * std::pow(a, -1.5)));
  CHECK(log(t).derivative({0, 0, 0}) == doctest::Approx(2.0 / (a * a * a)));
  CHECK(inv(t).derivative({0, 0, 0, 0}) == doctest::Approx(24.0 / std::pow(a, 5)));
  CHECK(pow(t, 2.5).derivative({0, 0, 0}) == doctest::Approx(2.5 * 1.5 * 0.5 * std::pow(a, -0.5)));
  CHECK((t / (1.0 + t)).derivative({0}) == doctest::Approx(1.0 / ((1 + a) * (1 + a))));
}

TEST_CASE("jet matrix inverse and determinant") {
  const JetSpace& sp = JetSpace::get(0, 2, 0, 5, 5);
  const Jet p = Jet::variable(sp, 0, 0.2);
  const Jet q = Jet::variable(sp, 1, -0.4);
  const std::vector<Jet> m{2.0 + p, q, p * q, 1.0 + q * q};
  const Jet det = determinant(m, 2);
  const Jet expect = (2.0 + p) * (1.0 + q * q) - q * p * q;
  for (std::size_t k = 0; k < sp.size(); ++k) CHECK(det.coeff(k) == doctest::Approx(expect.coeff(k)));
  const std::vector<Jet> mi = inverse(m, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Jet e = m[i * 2] * mi[j] + m[i * 2 + 1] * mi[2 + j];
      CHECK(e.value() == doctest::Approx(i == j ? 1.0 : 0.0));
      CHECK(std::abs(e.derivative({0, 1, 1})) < 1e-10);
    }
  }
}

TEST_CASE("jet derivatives agree with extrapolated finite differences") {
  int passed = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const calib::CaseResult r = calib::run_case(seed);
    CHECK_MESSAGE(r.pass, "seed " << seed << " worst " << r.worst);
    CHECK(r.checked > 0);
    passed += r.pass;
  }
  CHECK(passed == 30);
}

TEST_CASE("bi-series d_ds and d_db2") {
  const BiSeries b2 = BiSeries::b2(0.25);
  const BiSeries s = BiSeries::s(0.1);
  const BiSeries f = s * s * s + b2 * s;
  CHECK(d_ds(f).value() == doctest::Approx(3 * 0.01 + 0.25));
  CHECK(d_db2(f).value() == doctest::Approx(0.1));
  CHECK(d_ds(d_db2(f)).value() == doctest::Approx(1.0));
}

TEST_CASE("christoffel symbols") {
  const std::vector<double> x{0.1, -0.2, 0.3};
  const auto g0 = christoffel(*euclidean_chart(3, {0.0, 1.0}), x);
  CHECK(max_abs(g0) == 0.0);

  const std::vector<double> origin{0.0, 0.0, 0.0};
  CHECK(max_abs(christoffel(*klein_chart(3), origin)) < 1e-14);

  // Conformal metric e^{2f} delta with f = -ln(1 - |x|^2).
  const auto gc = christoffel(*conformal_chart(3), x);
  const double r2 = 0.14;
  std::vector<double> df(3);
  for (int i = 0; i < 3; ++i) df[i] = 2 * x[i] / (1 - r2);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double expect = (k == i ? df[j] : 0.0) + (k == j ? df[i] : 0.0) - (i == j ? df[k] : 0.0);
        CHECK(gc[(k * 3 + i) * 3 + j] == doctest::Approx(expect).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("christoffel symbols are metric compatible") {
  const auto chart = tilted_chart(3);
  const std::vector<double> x{0.1, 0.05, -0.12};
  const auto gam = christoffel(*chart, x);
  const double h = 1e-5;
  std::vector<double> a, b, ap, am;
  chart->fields(x, a, b);
  for (int l = 0; l < 3; ++l) {
    std::vector<double> xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    chart->fields(xp, ap, b);
    chart->fields(xm, am, b);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double da = (ap[i * 3 + j] - am[i * 3 + j]) / (2 * h);
        double rhs = 0.0;
        for (int k = 0; k < 3; ++k) rhs += a[k * 3 + j] * gam[(k * 3 + i) * 3 + l] + a[i * 3 + k] * gam[(k * 3 + j) * 3 + l];
        CHECK(da == doctest::Approx(rhs).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("beta invariants") {
  const std::vector<double> x{0.2, -0.1, 0.3}, y{1.0, 0.5, -0.7};
  const BetaInvariants e = beta_invariants(*euclidean_chart(3, {0.0, 1.0}), x, y);
  CHECK(e.fitted_c == doctest::Approx(1.0));
  CHECK(e.conformal_residual < 1e-14);
  CHECK(max_abs(e.s_ij) < 1e-14);

  const BetaInvariants k = beta_invariants(*klein_chart(3), x, y);
  CHECK(k.conformal_residual < 1e-8);
  CHECK(k.fitted_c == doctest::Approx(1.0 / std::sqrt(1.0 - 0.14)));

  const auto rot = make_chart("rot", 3, BallDomain{0.0, 1.0}, [](int dim, const auto* xx, auto* a, auto* b) {
    for (int i = 0; i < dim; ++i) a[i * dim + i] = 1.0;
    b[0] = xx[1];
  });
  const BetaInvariants r = beta_invariants(*rot, x, y);
  CHECK(std::abs(r.s_ij[0 * 3 + 1]) == doctest::Approx(0.5));
  CHECK(r.conformal_residual > 0.1);
}

TEST_CASE("fundamental tensor") {
  const auto chart = klein_chart(3);
  const std::vector<double> x{0.2, -0.1, 0.3}, y{1.0, 0.5, -0.7};
  const FundamentalTensor one = fundamental_tensor(*chart, *one_phi(), x, y);
  std::vector<double> a, b;
  chart->fields(x, a, b);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(one.g[i] == doctest::Approx(a[i]));

  const auto euc = euclidean_chart(3, {0.0, 0.8});
  const FundamentalTensor r = fundamental_tensor(*euc, *randers_phi(), x, y);
  CHECK(r.det_g > 0.0);
  CHECK(r.g[0] > 0.0);
  CHECK(r.g[0] * r.g[4] - r.g[1] * r.g[3] > 0.0);
  CHECK(r.res_g < 1e-10);
  CHECK(r.res_det < 1e-10);
  CHECK(r.res_inv < 1e-10);
  CHECK(r.res_inv_plus > 1e-3);
}

TEST_CASE("mean Cartan paths agree and annihilate y") {
  const auto euc = euclidean_chart(3, {0.0, 0.8});
  const std::vector<double> x{0.2, -0.1, 0.3}, y{1.0, 0.5, -0.7};
  const CartanResult c = cartan_and_mean_cartan(*euc, *randers_phi(), x, y);
  double yi = 0.0;
  for (int i = 0; i < 3; ++i) {
    CHECK(c.I[i] == doctest::Approx(c.I_logdet[i]).epsilon(1e-9));
    CHECK(c.I[i] == doctest::Approx(c.I_closed[i]).epsilon(1e-9));
    yi += y[i] * c.I[i];
  }
  CHECK(std::abs(yi) < 1e-10);
  CHECK(max_abs(cartan_and_mean_cartan(*euc, *one_phi(), x, y).I) < 1e-12);
}

TEST_CASE("spray paths and homogeneity") {
  const auto euc = euclidean_chart(3, {0.0, 0.8});
  const std::vector<double> x{0.2, -0.1, 0.3}, y{1.0, 0.5, -0.7};
  const SprayResult s = spray(*euc, *randers_phi(), x, y);
  CHECK(s.residual < 1e-7);
  for (int i = 0; i < 3; ++i) CHECK(s.G[i] == doctest::Approx(s.G_general[i]).epsilon(1e-9));

  for (double lambda : {2.0, 1.0 / 3.0}) {
    std::vector<double> ly = y;
    for (double& v : ly) v *= lambda;
    const SprayResult sl = spray(*euc, *randers_phi(), x, ly);
    for (int i = 0; i < 3; ++i) CHECK(sl.G[i] == doctest::Approx(lambda * lambda * s.G[i]).epsilon(1e-10));
    const FundamentalTensor f = fundamental_tensor(*euc, *randers_phi(), x, ly);
    const FundamentalTensor f1 = fundamental_tensor(*euc, *randers_phi(), x, y);
    for (std::size_t i = 0; i < f.g.size(); ++i) CHECK(f.g[i] == doctest::Approx(f1.g[i]).epsilon(1e-10));
  }
}

TEST_CASE("Berwald and Landsberg curvature") {
  const std::vector<double> x{0.35, -0.2, 0.4}, y{1.0, 0.5, -0.7};
  const auto euc = euclidean_chart(3, {0.3, 0.9});
  CHECK(norm(berwald_curvature(*euc, *randers_phi(), x, y)) > 1e-3);

  const LandsbergResult lr = landsberg_and_mean(*euc, *randers_phi(), x, y);
  CHECK(norm(lr.J) > 1e-3);
  for (int i = 0; i < 3; ++i) CHECK(lr.J[i] == doctest::Approx(lr.J_closed[i]).epsilon(1e-6));
  double yl = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      double sum = 0.0;
      for (int i = 0; i < 3; ++i) sum += y[i] * lr.L[(i * 3 + j) * 3 + k];
      yl = std::max(yl, std::abs(sum));
    }
  }
  CHECK(yl < 1e-9);

  const LandsbergResult fam = landsberg_and_mean(*euc, *family_m1(), x, y);
  CHECK(norm(fam.J) < 1e-7);
  CHECK(norm(berwald_curvature(*euc, *family_m1(), x, y)) < 1e-7);
  const LandsbergResult fam2 = landsberg_and_mean(*euc, *family_m2(), x, y);
  CHECK(norm(fam2.J) < 1e-7);
  CHECK(norm(berwald_curvature(*euc, *family_m2(), x, y)) < 1e-7);
}

TEST_CASE("rimlc residual is J + ctilde F I") {
  const auto euc = euclidean_chart(3, {0.3, 0.9});
  const std::vector<double> x{0.35, -0.2, 0.4}, y{1.0, 0.5, -0.7};
  const CurvatureReport rep = curvature_report(*euc, *family_m1(), x, y, 0.5);
  const auto res = rimlc_residual(*euc, *family_m1(), 0.5, x, y);
  for (int i = 0; i < 3; ++i) CHECK(res[i] == doctest::Approx(0.5 * rep.F * rep.I[i]).epsilon(1e-9));
  CHECK(rep.identities_hold());
  CHECK(rep.failures().empty());
}

TEST_CASE("convexity check") {
  const ConvexityVerdict one = convexity_check(*one_phi(), 1.5);
  CHECK(one.ok);
  CHECK(one.worst == doctest::Approx(1.0));
  CHECK(convexity_check(*randers_phi(), 0.9).ok);
  const PhiPtr bad = make_phi("1-3s^2", [](const auto& B, const auto& S) {
    using X = std::decay_t<decltype(S)>;
    return X(1.0) - 3.0 * S * S + 0.0 * B;
  });
  const ConvexityVerdict v = convexity_check(*bad, 1.0);
  CHECK_FALSE(v.ok);
  CHECK(v.worst < 0.0);
  CHECK_FALSE(convexity_check(*linear_phi(2.0), 0.9).ok);
  CHECK(convexity_check(*linear_phi(0.5), 0.9).ok);
}

TEST_CASE("scalar bundle at the edges s = +-b and s = 0") {
  const PhiPtr r = randers_phi();
  for (double sv : {-0.5, 0.0, 0.5}) {
    const ScalarBundle sb = scalar_bundle(*r, 0.25, sv);
    CHECK(std::isfinite(sb.f.phi));
    CHECK(sb.f.phi > 0.0);
    CHECK(std::isfinite(mean_cartan_v(*r, 0.25, sv, 3)));
    CHECK(std::isfinite(mean_landsberg_w(*r, 0.25, sv, 3)));
  }
  // Linear phi: W depends only on (n+1) and is finite at b = 0.
  CHECK(std::isfinite(mean_cartan_v(*linear_phi(0.5), 0.0, 0.0, 3)));
}
