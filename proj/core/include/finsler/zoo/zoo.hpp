#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finsler/numeric/geometry.hpp"
#include "finsler/symbolic/parametrized.hpp"
#include "finsler/symbolic/phi_spec.hpp"

namespace finsler::zoo {

struct ExpectedFlags {
  bool closed_conformal = true;
  bool berwald_expected = false;
  bool weak_landsberg_expected = false;
};

/// Raised when an entry fails convexity or contradicts its expected flags.
class ZooError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A phi candidate for a metric given in closed form, with how well it
/// reproduces that metric.
struct PhiCandidate {
  std::string label;
  numeric::PhiPtr phi;
  numeric::ChartPtr chart;
  double max_rel_error = 0.0;
  bool reproduces = false;
};

struct ZooEntry {
  std::string name;
  std::string params;
  std::string citation;
  /// Exact phi when it is rational in (s, u).
  std::optional<symbolic::PhiSpec> spec;
  /// Rational parametrization for phi with square roots.
  std::optional<symbolic::ParametrizedPhi> parametrized;
  numeric::PhiPtr phi;
  numeric::ChartPtr chart;
  ExpectedFlags flags;
  /// Convexity is checked for b in [b_min, b0).
  double b_min = 0.0;
  double b0 = 1.0;
  numeric::ConvexityVerdict convexity;
  /// Convex inside |s| < b but degenerate at |s| = b.
  bool boundary_degenerate = false;
  std::vector<PhiCandidate> candidates;
};

ZooEntry make_riemannian(int n = 3);
ZooEntry make_randers(int n = 3);
ZooEntry make_square(int n = 3);
/// Berwald's metric on the unit ball, written over the Klein model with the
/// corrected phi = (sqrt(1 + b^2) + s)^2; candidates record the probe.
ZooEntry make_berwald_example(int n = 3);
/// c_k = a_k / u^(k+1) on the Euclidean annulus [b_min, b0).
ZooEntry make_theorem_family(int m, const std::vector<symbolic::Rational>& a, int n = 3,
                             symbolic::SampleDomain domain = {0.3, 0.9});
/// Concrete polynomial phi over the Euclidean chart on the b range of the PhiSpec,
/// with no curvature expectations.
ZooEntry make_polynomial_entry(const symbolic::PhiSpec& spec, std::string params, int n = 3);

/// Berwald's metric evaluated directly from its closed form.
double berwald_closed_form(std::span<const double> x, std::span<const double> y);

/// Built-in entries in listing order.
std::vector<ZooEntry> all_entries(int n = 3);
std::vector<std::string> entry_names();
/// Throws std::invalid_argument for unknown names.
ZooEntry entry_by_name(const std::string& name, int n = 3);

/// Constants a_k = 5^-k, admissible for every m.
std::vector<symbolic::Rational> admissible_constants(int m);

struct SamplePoint {
  std::vector<double> x, y;
};

/// Points drawn uniformly from the chart domain with |y| in [0.5, 2],
/// rejecting those where min(phi, phi - s phi_2, Delta) < margin. Below about
/// 1e-2 roundoff in the fourth and fifth y-derivatives dominates near |s| = b.
std::vector<SamplePoint> sample_points(const ZooEntry& entry, int count, std::uint64_t seed, double margin = 1e-2);

/// Whether a report is consistent with the entry's expected flags.
struct FlagCheck {
  bool ok = true;
  std::vector<std::string> problems;
};
FlagCheck check_flags(const ZooEntry& entry, const numeric::CurvatureReport& report, double tol = 1e-7);

}  // namespace finsler::zoo
