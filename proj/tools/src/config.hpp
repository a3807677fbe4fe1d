#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finsler/numeric/geometry.hpp"
#include "finsler/symbolic/phi_spec.hpp"

namespace finsler::cli {

/// Bad flags, values or metric parameters; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Report, Verify, Scan, ZooList };
enum class Format { Json, Csv };

struct Selector {
  enum class Kind { None, Zoo, Family, Poly } kind = Kind::None;
  std::string zoo;
  int m = 0;
  std::vector<symbolic::Rational> a;
  /// Coefficient texts c_0..c_m.
  std::vector<std::string> poly;
  /// Parameters as given on the command line.
  std::string text;
};

struct RunConfig {
  Command command = Command::ZooList;
  Selector selector;
  std::vector<long> ns{3};
  int points = 0;  // 0 picks the command default
  std::uint64_t seed = 1;
  numeric::Tolerances tol;
  double ctilde = 0.0;
  std::string out;
  Format format = Format::Json;
};

/// Parses argv. Returns the config, or the exit code when parsing ends the
/// run (help, usage error); messages go to the given streams.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// "c0=1", "c1=1/u^2", ... into a polynomial phi on b in [0.3, 0.9].
symbolic::PhiSpec poly_spec(const std::vector<std::string>& coeffs);

/// A coefficient as a RatExpr: "num: ... / den: ..." or polynomials joined by '/'.
algebra::RatExpr parse_coefficient(const std::string& text);

/// FINSLER_LAB_THREADS capped by the hardware thread count.
int worker_threads();

}  // namespace finsler::cli
