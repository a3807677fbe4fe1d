#include "json_out.hpp"

#include <cmath>
#include <cstdio>

namespace finsler::cli {

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const Json& e : j) flat = flat && is_scalar(e);
      out += "[";
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += "\n" + pad;
        write(e, out, depth + 1);
        first = false;
      }
      if (!flat) out += "\n" + close;
      out += "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        out += "\n" + pad + Json(it.key()).dump() + ": ";
        write(it.value(), out, depth + 1);
        first = false;
      }
      out += "\n" + close + "}";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

Json nested(std::span<const double> data, int n, int rank) {
  if (rank <= 1) {
    Json arr = Json::array();
    for (double v : data) arr.push_back(v);
    return arr;
  }
  const std::size_t block = data.size() / static_cast<std::size_t>(n);
  Json arr = Json::array();
  for (int i = 0; i < n; ++i) arr.push_back(nested(data.subspan(static_cast<std::size_t>(i) * block, block), n, rank - 1));
  return arr;
}

}  // namespace finsler::cli
