#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsler/symbolic/formulas.hpp"
#include "finsler/symbolic/phi_spec.hpp"

namespace finsler::symbolic {

using FundamentalBundle = Bundle<RatExpr>;

/// rho, rho_0, rho_1, eta, eta_0, eta_1, Q, R, Theta, Psi, Pi, Omega, E, H
/// and the phi derivatives they are built from.
FundamentalBundle fundamental_quantities(const PhiSpec& phi);

/// A curvature condition: the defining rational expression and its
/// canonical numerator. The condition holds identically iff the numerator is 0.
struct Condition {
  RatExpr expr;
  Polynomial numerator;

  bool holds() const { return numerator.is_zero(); }
  /// Degree of the numerator in s, -1 for the zero polynomial.
  int degree_s() const;
};

Condition make_condition(RatExpr expr);

struct ConditionSet {
  std::optional<Condition> ne22;
  std::optional<Condition> nh222;
  std::optional<Condition> np;
  std::optional<Condition> njfi;
};

/// How the two scalars are combined into the NJFI expression.
enum class NjfiForm {
  Factored,  // (phi / (2 rho)) (C W + T V)
  Split,     // C W + T (phi / (2 rho)) V
};

/// Variants of the mean Cartan scalar V.
enum class VForm {
  LogDet,           // s-derivative of ln det(g), the reference
  Bracket,          // the same written through phi_22, phi_222
  Expanded,         // eta form "- (n-2)... + (n+1)..."
  ExpandedFlipped,  // eta form with the last two signs flipped
};

/// Result of the NJFI computation for one n.
struct Njfi {
  long n = 0;
  NjfiForm form = NjfiForm::Factored;
  RatExpr expr;
  /// Numerator over a primitive denominator; polynomial in s.
  RatExpr numerator;
  /// [v_0, ..., v_r].
  std::vector<RatExpr> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// v_i = C f_C + T f_T.
struct CaseSplit {
  RatExpr f_C;
  RatExpr f_T;
};

/// Shared, lazily built state for all conditions of one phi.
class Analysis {
 public:
  explicit Analysis(PhiSpec phi);

  const PhiSpec& phi() const { return phi_; }
  const FundamentalBundle& bundle() const { return bundle_; }
  const EHDerivatives<RatExpr>& eh() const;

  ConditionSet weak_landsberg_conditions() const;
  RatExpr mean_landsberg_scalar(long n) const;
  RatExpr mean_cartan_scalar(long n, VForm form = VForm::LogDet) const;
  Njfi njfi(long n, NjfiForm form = NjfiForm::Factored) const;

 private:
  PhiSpec phi_;
  FundamentalBundle bundle_;
  mutable std::optional<EHDerivatives<RatExpr>> eh_;
};

ConditionSet weak_landsberg_conditions(const PhiSpec& phi);
RatExpr mean_landsberg_scalar(const PhiSpec& phi, long n);
RatExpr mean_cartan_scalar(const PhiSpec& phi, long n, VForm form = VForm::LogDet);
Njfi njfi(const PhiSpec& phi, long n, NjfiForm form = NjfiForm::Factored);

/// Splits v_i into its C and T parts; (0, 0) beyond the degree. Throws
/// algebra::AlgebraError when v_i is not of the form C f_C + T f_T.
CaseSplit extract_case_coefficients(const Njfi& njfi, int i);

/// Left sides of the coefficient ODEs. Case 1 takes [c_0, c_1]:
///   c_0 c_1' - 2 c_1 c_0',  2 b^2 c_0' + c_0.
/// Case 2 takes [c_0, c_1, c_2]:
///   2 b^2 c_2 + c_0,  2 c_1 c_2' - 3 c_2 c_1',  c_2 (2 b^2 c_2' + 3 c_2 - 3 c_0') + c_0 c_2'.
/// Primes are d/d(b^2).
std::vector<RatExpr> case_odes_residual(int which, const std::vector<RatExpr>& c);

/// Verdict for one n.
struct NVerdict {
  long n = 0;
  bool ne22 = false;
  bool nh222 = false;
  bool np = false;
  bool njfi_weak = false;  // NJFI with T = 0 vanishes
  int deg_ne22 = -1;
  int deg_nh222 = -1;
  int deg_np = -1;
  int deg_njfi = -1;
  /// Non-vanishing numerators by condition name.
  std::vector<std::pair<std::string, RatExpr>> residuals;

  bool all_hold() const { return ne22 && nh222 && np && njfi_weak; }
};

struct FamilyVerdict {
  PhiSpec phi;
  std::vector<NVerdict> per_n;
  /// ODE case (1 or 2) checked, 0 when m > 2.
  int ode_case = 0;
  std::vector<RatExpr> ode_residuals;

  bool all_hold() const;
};

std::vector<NVerdict> verify_conditions(const PhiSpec& phi, const std::vector<long>& ns);
FamilyVerdict verify_theorem_family(int m, const std::vector<Rational>& a, const std::vector<long>& ns);

/// Structure of the T-part of the leading NJFI coefficient for a generic
/// polynomial phi of degree m: f_T = coefficient * c_m^power when it is a
/// single monomial in c_m.
struct LeadingTPart {
  long n = 0;
  int degree = -1;
  RatExpr f_T;
  bool monomial_in_cm = false;
  Rational coefficient;
  int power = 0;
};

LeadingTPart leading_t_part(const Njfi& njfi, int m);

/// Coefficients p_0.. of the polynomial through the points (ns[i], values[i]).
std::vector<Rational> interpolate_in_n(const std::vector<long>& ns, const std::vector<Rational>& values);

}  // namespace finsler::symbolic
