#pragma once

#include "finsler/numeric/geometry.hpp"
#include "finsler/symbolic/conditions.hpp"
#include "finsler/zoo/zoo.hpp"
#include "json_out.hpp"

namespace finsler::cli {

Json to_json(const numeric::Tolerances& tol);
Json to_json(const numeric::FundamentalTensor& f, int n);
/// Every CurvatureReport field under its own name, tensors nested row-major.
Json to_json(const numeric::CurvatureReport& r);
Json to_json(const numeric::ConvexityVerdict& v);
/// Name, parameters, phi, flags and convexity of an entry.
Json entry_summary(const zoo::ZooEntry& e);
/// {phi, n, conditions, degrees, residuals} plus residual names.
Json to_json(const symbolic::NVerdict& v, const std::string& phi_text);

/// One `zoo list` line.
std::string zoo_line(const zoo::ZooEntry& e);

}  // namespace finsler::cli
