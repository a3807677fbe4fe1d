// One PASS/FAIL line per acceptance criterion. Exits non-zero only when a
// criterion outside kKnownRed fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "../support/calibration.hpp"
#include "finsler/algebra/text_format.hpp"
#include "finsler/numeric/geometry.hpp"
#include "finsler/symbolic/conditions.hpp"
#include "finsler/symbolic/parametrized.hpp"
#include "finsler/zoo/zoo.hpp"

using namespace finsler;
using algebra::RatExpr;
using algebra::Rational;

namespace {

// Pinned tolerances.
constexpr double kTolDet = 1e-9;
constexpr double kTolInv = 1e-9;
constexpr double kMinInvPlusFailure = 1e-2;
constexpr double kTolIPaths = 1e-8;
constexpr double kTolYI = 1e-10;
constexpr double kTolSpray = 1e-7;
constexpr double kTolJPaths = 1e-6;
constexpr double kTolBerwald = 1e-7;
constexpr double kTolWeak = 1e-7;
constexpr double kMinJ = 1e-3;
constexpr double kMinJFraction = 0.9;
constexpr double kTolCtilde = 1e-7;
constexpr double kCtilde = 0.5;
constexpr double kTolCalibration = 1e-5;

constexpr int kPointsIdentity = 100;
constexpr int kPointsTheorem = 50;
constexpr int kCalibrationCases = 200;
constexpr std::uint64_t kSeed = 20240601;

// Criterion 9 is not reproduced: see the printed degree and constant.
const std::set<int> kKnownRed{9};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.2e", v); }

struct EntryReports {
  zoo::ZooEntry entry;
  std::vector<numeric::CurvatureReport> reports;
};

const std::vector<EntryReports>& identity_reports() {
  static const std::vector<EntryReports> data = [] {
    std::vector<EntryReports> out;
    for (int n : {2, 3, 4}) {
      for (zoo::ZooEntry& e : zoo::all_entries(n)) {
        EntryReports er{std::move(e), {}};
        for (const zoo::SamplePoint& p : zoo::sample_points(er.entry, kPointsIdentity, kSeed + n)) {
          er.reports.push_back(numeric::curvature_report(*er.entry.chart, *er.entry.phi, p.x, p.y));
        }
        out.push_back(std::move(er));
      }
    }
    return out;
  }();
  return data;
}

std::string label(const EntryReports& er) { return er.entry.name + "/n=" + std::to_string(er.entry.chart->dim()); }

Outcome c1_determinant() {
  double worst = 0.0;
  std::size_t count = 0;
  std::string where;
  for (const EntryReports& er : identity_reports()) {
    for (const auto& r : er.reports) {
      ++count;
      if (!(r.fundamental.res_det <= worst)) {
        worst = r.fundamental.res_det;
        where = label(er);
      }
    }
  }
  return {worst <= kTolDet, "max |det g - closed| / |det g| = " + sci(worst) + " (" + where + ") over " +
                                std::to_string(count) + " points, tol " + sci(kTolDet)};
}

Outcome c2_inverse() {
  double worst = 0.0;
  double weakest_plus = HUGE_VAL;
  std::string weakest_entry;
  for (const EntryReports& er : identity_reports()) {
    double entry_plus = 0.0;
    for (const auto& r : er.reports) {
      worst = std::max(worst, r.fundamental.res_inv);
      entry_plus = std::max(entry_plus, r.fundamental.res_inv_plus);
    }
    if (er.entry.name != "riemannian" && entry_plus < weakest_plus) {
      weakest_plus = entry_plus;
      weakest_entry = label(er);
    }
  }
  const bool ok = worst <= kTolInv && weakest_plus >= kMinInvPlusFailure;
  return {ok, "alpha^-1 form: max |g^ij g_jk - delta| = " + sci(worst) + " (tol " + sci(kTolInv) +
                  "); alpha^+1 form fails by at least " + sci(weakest_plus) + " on every non-Riemannian entry (" +
                  weakest_entry + " smallest, need >= " + sci(kMinInvPlusFailure) + ")"};
}

Outcome c3_mean_cartan() {
  double worst_paths = 0.0, worst_y = 0.0;
  for (const EntryReports& er : identity_reports()) {
    for (const auto& r : er.reports) {
      worst_paths = std::max(worst_paths, r.res_I);
      worst_y = std::max(worst_y, r.res_yI);
    }
  }
  return {worst_paths <= kTolIPaths && worst_y <= kTolYI,
          "max pairwise |I difference| = " + sci(worst_paths) + " (tol " + sci(kTolIPaths) + "), max |y^j I_j| = " +
              sci(worst_y) + " (tol " + sci(kTolYI) + ")"};
}

Outcome c4_spray() {
  double worst = 0.0;
  int entries = 0;
  for (const EntryReports& er : identity_reports()) {
    if (!er.entry.flags.closed_conformal) continue;
    ++entries;
    for (const auto& r : er.reports) worst = r.closed_conformal ? std::max(worst, r.res_spray) : HUGE_VAL;
  }
  return {worst <= kTolSpray, "max relative |G - G_structured| = " + sci(worst) + " over " + std::to_string(entries) +
                                  " closed-conformal entries, tol " + sci(kTolSpray)};
}

Outcome c5_mean_landsberg() {
  double worst = 0.0;
  for (const EntryReports& er : identity_reports()) {
    if (!er.entry.flags.closed_conformal) continue;
    for (const auto& r : er.reports) worst = r.closed_conformal ? std::max(worst, r.res_J) : HUGE_VAL;
  }
  return {worst <= kTolJPaths, "max |J - J_closed| = " + sci(worst) + ", tol " + sci(kTolJPaths)};
}

Outcome c6_theorem_forward() {
  bool symbolic_ok = true, numeric_ok = true;
  double worst_b = 0.0, worst_j = 0.0;
  for (int m = 1; m <= 6; ++m) {
    const auto a = zoo::admissible_constants(m);
    const symbolic::FamilyVerdict v = symbolic::verify_theorem_family(m, a, {2, 3, 4, 5});
    symbolic_ok = symbolic_ok && v.all_hold();
    const zoo::ZooEntry e = zoo::make_theorem_family(m, a);
    for (const zoo::SamplePoint& p : zoo::sample_points(e, kPointsTheorem, kSeed + 100 + m)) {
      const auto r = numeric::curvature_report(*e.chart, *e.phi, p.x, p.y);
      worst_b = std::max(worst_b, r.norm_B);
      worst_j = std::max(worst_j, r.norm_J);
    }
  }
  numeric_ok = worst_b <= kTolBerwald && worst_j <= kTolWeak;
  return {symbolic_ok && numeric_ok,
          std::string("m=1..6, a_k=5^-k: NE22=NH222=NP=NJFI_weak=0 for n=2..5 ") + (symbolic_ok ? "yes" : "NO") +
              "; max ||B|| = " + sci(worst_b) + ", max ||J|| = " + sci(worst_j) + " (tol " + sci(kTolWeak) + ")"};
}

Outcome c7_converse() {
  bool ok = true;
  std::string detail;
  for (const zoo::ZooEntry& e : {zoo::make_randers(), zoo::make_square()}) {
    const auto pts = zoo::sample_points(e, kPointsIdentity, kSeed + 200);
    int big = 0;
    for (const zoo::SamplePoint& p : pts) {
      big += numeric::curvature_report(*e.chart, *e.phi, p.x, p.y).norm_J >= kMinJ;
    }
    const double frac = static_cast<double>(big) / static_cast<double>(pts.size());
    const bool ne22_nonzero = !symbolic::weak_landsberg_conditions(*e.parametrized).ne22->holds();
    ok = ok && frac >= kMinJFraction && ne22_nonzero;
    detail += e.name + ": ||J|| >= " + sci(kMinJ) + " at " + fmt("%.0f", 100 * frac) + "% of points, NE22 " +
              (ne22_nonzero ? "!= 0" : "= 0") + "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

RatExpr c(int k, int order = 0) { return RatExpr::coefficient_function(k, order); }

Outcome c8_case1() {
  bool ok = true;
  std::optional<Rational> factor;
  for (long n = 2; n <= 5; ++n) {
    const symbolic::Njfi nj = symbolic::njfi(symbolic::PhiSpec::generic_polynomial(1), n, symbolic::NjfiForm::Split);
    if (nj.degree() != 2) return {false, "degree " + std::to_string(nj.degree()) + " at n=" + std::to_string(n)};
    const symbolic::CaseSplit v2 = symbolic::extract_case_coefficients(nj, 2);
    const RatExpr form_T = RatExpr(n + 1) * c(1).pow(3);
    const RatExpr form_C = RatExpr(n + 1) * RatExpr(2) * c(1) * (RatExpr(2) * c(1) * c(0, 1) - c(0) * c(1, 1));
    // v_2 = lambda * form with one rational lambda shared by C and T parts and all n.
    const RatExpr ratio = v2.f_T / form_T;
    if (!ratio.numerator().is_constant() || !ratio.denominator().is_constant()) return {false, "T part not a multiple"};
    Rational lambda(ratio.numerator().constant_value(), ratio.denominator().constant_value());
    lambda.canonicalize();
    ok = ok && v2.f_C == RatExpr(lambda) * form_C;
    if (factor && *factor != lambda) ok = false;
    factor = lambda;
  }
  return {ok, "v_2 = " + factor->get_str() +
                  " (n+1){2C c1[2c1c0' - c0c1'] + T c1^3} exactly for n=2..5 (overall factor from the numerator "
                  "normalization)"};
}

Outcome c9_case2() {
  const symbolic::Analysis an(symbolic::PhiSpec::generic_polynomial(2));
  bool ok = true;
  std::string detail;
  for (long n = 2; n <= 5; ++n) {
    const symbolic::LeadingTPart lt = symbolic::leading_t_part(an.njfi(n, symbolic::NjfiForm::Split), 2);
    if (!lt.monomial_in_cm) {
      ok = false;
      detail += "n=" + std::to_string(n) + ": leading T part not a monomial in c2; ";
      continue;
    }
    Rational kappa = lt.coefficient / Rational(n);
    kappa.canonicalize();
    ok = ok && lt.degree == 17 && kappa == 927 && lt.power == 9;
    detail += "n=" + std::to_string(n) + ": r=" + std::to_string(lt.degree) + ", T-part " + lt.coefficient.get_str() +
              " c2^" + std::to_string(lt.power) + " (kappa=" + kappa.get_str() + "); ";
  }
  detail += "expected r=17 and 927 n c2^9";
  return {ok, detail};
}

Outcome c10_odes() {
  const RatExpr u = RatExpr::u();
  bool ok = true;
  const std::vector<std::pair<Rational, Rational>> case1{{1, 1}, {3, -5}, {Rational(2, 7), Rational(9, 4)}};
  for (const auto& [a0, a1] : case1) {
    const auto r = symbolic::case_odes_residual(1, {RatExpr(a0) / u, RatExpr(a1) / u.pow(2)});
    ok = ok && r[0].is_zero() && r[1].is_zero();
  }
  std::string detail = "case 1 residuals zero: " + std::string(ok ? "yes" : "NO") + "; case 2 with a=(1,1,1): ";
  const auto r2 = symbolic::case_odes_residual(2, {RatExpr(1) / u, RatExpr(1) / u.pow(2), RatExpr(1) / u.pow(3)});
  for (std::size_t i = 0; i < r2.size(); ++i) {
    detail += "ODE" + std::to_string(i + 1) + " " + (r2[i].is_zero() ? "0" : algebra::to_text(r2[i])) + "; ";
  }
  // The first case-2 residual is (a0 + 2 a2)/u: zero only on a0 = -2 a2.
  const std::vector<std::array<Rational, 3>> case2{{1, 1, 1}, {-2, 5, 1}, {4, -1, Rational(-2)}, {3, 2, 7}};
  bool constraint = true;
  for (const auto& a : case2) {
    const auto r = symbolic::case_odes_residual(
        2, {RatExpr(a[0]) / u, RatExpr(a[1]) / u.pow(2), RatExpr(a[2]) / u.pow(3)});
    constraint = constraint && r[0] == RatExpr(a[0] + Rational(2) * a[2]) / u && r[1].is_zero() && r[2].is_zero();
  }
  ok = ok && constraint;
  detail += std::string("first case-2 ODE equals (a0+2a2)/u, forcing a0 = -2a2: ") + (constraint ? "yes" : "NO");
  return {ok, detail};
}

Outcome c11_ctilde() {
  double worst = 0.0, smallest_I = HUGE_VAL;
  std::size_t count = 0;
  for (int m : {1, 2, 3}) {
    const zoo::ZooEntry e = zoo::make_theorem_family(m, zoo::admissible_constants(m));
    for (const zoo::SamplePoint& p : zoo::sample_points(e, kPointsTheorem, kSeed + 300 + m)) {
      const auto r = numeric::curvature_report(*e.chart, *e.phi, p.x, p.y, kCtilde);
      worst = std::max(worst, std::abs(r.norm_J_plus - kCtilde * r.F * r.norm_I));
      smallest_I = std::min(smallest_I, r.norm_I);
      ++count;
    }
  }
  return {worst <= kTolCtilde && smallest_I > 0.0,
          "max | ||J + 0.5 F I|| - 0.5 F ||I|| | = " + sci(worst) + " over " + std::to_string(count) +
              " points (tol " + sci(kTolCtilde) + "); min ||I|| = " + sci(smallest_I) + " > 0, so only ctilde = 0 works"};
}

Outcome c12_calibration() {
  int passed = 0, checked = 0;
  double worst = 0.0;
  for (int k = 0; k < kCalibrationCases; ++k) {
    const calib::CaseResult r = calib::run_case(kSeed + static_cast<std::uint64_t>(k), kTolCalibration);
    passed += r.pass;
    checked += r.checked;
    worst = std::max(worst, r.worst);
  }
  return {passed == kCalibrationCases, std::to_string(passed) + "/" + std::to_string(kCalibrationCases) +
                                           " cases, " + std::to_string(checked) + " partials of order 1-3, max rel err " +
                                           sci(worst) + " (tol " + sci(kTolCalibration) + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"determinant identity", c1_determinant},
      {"inverse identity", c2_inverse},
      {"mean Cartan triple agreement", c3_mean_cartan},
      {"spray two-path agreement", c4_spray},
      {"mean Landsberg two-path agreement", c5_mean_landsberg},
      {"theorem forward direction", c6_theorem_forward},
      {"theorem converse content", c7_converse},
      {"case-1 coefficient", c8_case1},
      {"case-2 degree and structure", c9_case2},
      {"ODE solution checks", c10_odes},
      {"ctilde forcing", c11_ctilde},
      {"jet calibration", c12_calibration},
  };
  int unexpected = 0, failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (!kKnownRed.count(id)) ++unexpected;
    }
  }
  std::printf("%d/%zu criteria pass; %d known red; %d unexpected failures\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), failed - unexpected, unexpected);
  return unexpected == 0 ? 0 : 1;
}
