#pragma once

#include <json.hpp>

#include <span>
#include <string>

namespace finsler::cli {

using Json = nlohmann::ordered_json;

/// %.17g, "null" for non-finite values in JSON and "nan"/"inf" in CSV.
std::string format_number(double v);

/// Pretty JSON with every float written to 17 significant digits. Arrays
/// of scalars stay on one line.
std::string dump(const Json& j);

/// Row-major data as nested arrays of the given rank over dimension n.
Json nested(std::span<const double> data, int n, int rank);

}  // namespace finsler::cli
