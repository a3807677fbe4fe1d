#include "config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "finsler/algebra/errors.hpp"
#include "finsler/algebra/text_format.hpp"

namespace finsler::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("invalid " + what + ": '" + s + "'");
}

symbolic::Rational parse_rational(const std::string& s) {
  try {
    symbolic::Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid rational constant '" + s + "'");
  }
}

std::vector<long> parse_n_list(const std::string& s) {
  std::vector<long> ns;
  for (const std::string& tok : split(s, ',')) ns.push_back(parse_long(tok, "n"));
  if (ns.empty()) throw UsageError("--n needs at least one value");
  return ns;
}

void parse_family(const std::vector<std::string>& tokens, Selector& sel) {
  bool have_m = false, have_a = false;
  for (const std::string& t : tokens) {
    if (t.rfind("m=", 0) == 0) {
      sel.m = static_cast<int>(parse_long(t.substr(2), "m"));
      have_m = true;
    } else if (t.rfind("a=", 0) == 0) {
      for (const std::string& v : split(t.substr(2), ',')) sel.a.push_back(parse_rational(v));
      have_a = true;
    } else {
      throw UsageError("--family expects m=M a=LIST, got '" + t + "'");
    }
  }
  if (!have_m || !have_a) throw UsageError("--family expects m=M a=LIST");
  if (sel.m < 0) throw UsageError("m must be non-negative");
  if (sel.a.size() != static_cast<std::size_t>(sel.m) + 1) {
    throw UsageError("--family m=" + std::to_string(sel.m) + " needs " + std::to_string(sel.m + 1) + " constants");
  }
}

template <class T>
void require_positive(T v, const char* name) {
  if (!(v > 0)) throw UsageError(std::string(name) + " must be positive");
}

}  // namespace

algebra::RatExpr parse_coefficient(const std::string& text) {
  try {
    if (text.find("num:") != std::string::npos) return algebra::parse_rat_expr(text);
    const auto parts = split(text, '/');
    if (parts.empty()) throw UsageError("empty coefficient");
    algebra::RatExpr out(algebra::parse_polynomial(parts[0]));
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const algebra::Polynomial d = algebra::parse_polynomial(parts[i]);
      if (d.is_zero()) throw UsageError("division by zero in '" + text + "'");
      out = out / algebra::RatExpr(d);
    }
    return out;
  } catch (const algebra::AlgebraError& e) {
    throw UsageError("cannot parse coefficient '" + text + "': " + e.what());
  }
}

symbolic::PhiSpec poly_spec(const std::vector<std::string>& coeffs) {
  std::map<long, algebra::RatExpr> by_index;
  for (const std::string& t : coeffs) {
    const auto eq = t.find('=');
    if (t.empty() || t[0] != 'c' || eq == std::string::npos) throw UsageError("--poly expects cK=EXPR, got '" + t + "'");
    const long k = parse_long(t.substr(1, eq - 1), "coefficient index");
    if (k < 0 || by_index.count(k)) throw UsageError("bad or repeated coefficient index in '" + t + "'");
    by_index.emplace(k, parse_coefficient(t.substr(eq + 1)));
  }
  std::vector<algebra::RatExpr> cs;
  for (const auto& [k, v] : by_index) {
    if (k != static_cast<long>(cs.size())) throw UsageError("--poly coefficients must be c0..cm without gaps");
    cs.push_back(v);
  }
  try {
    const auto spec = symbolic::PhiSpec::polynomial(cs, {0.3, 0.9});
    if (spec.is_generic()) throw UsageError("--poly coefficients must be concrete functions of u");
    return spec;
  } catch (const symbolic::InvalidPhi& e) {
    throw UsageError(e.what());
  }
}

int worker_threads() {
  const int hw = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  const char* env = std::getenv("FINSLER_LAB_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  const long cap = parse_long(env, "FINSLER_LAB_THREADS");
  if (cap < 1) throw UsageError("FINSLER_LAB_THREADS must be a positive integer");
  return static_cast<int>(std::min<long>(cap, hw));
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CLI::App app{"Finsler (alpha, beta)-metric verification lab", "finsler_lab"};
  app.require_subcommand(1);

  std::string zoo, n_list, format, out_path;
  std::vector<std::string> family, poly;
  int points = 0;
  std::uint64_t seed = 1;
  double tol_alg = numeric::Tolerances{}.alg, tol_spray = numeric::Tolerances{}.spray,
         tol_third = numeric::Tolerances{}.third, ctilde = 0.0;

  auto add_common = [&](CLI::App* sub) {
    auto* oz = sub->add_option("--zoo", zoo, "built-in metric name (see `zoo list`)");
    auto* of = sub->add_option("--family", family, "theorem family: m=M a=A0,A1,...")->expected(2);
    auto* op = sub->add_option("--poly", poly, "polynomial phi: c0=EXPR c1=EXPR ...")->expected(1, -1);
    oz->excludes(of)->excludes(op);
    of->excludes(op);
    sub->add_option("--n", n_list, "dimension(s), comma separated");
    sub->add_option("--points", points, "number of sampled (x, y) points");
    sub->add_option("--seed", seed, "seed for sampled points");
    sub->add_option("--tol-alg", tol_alg, "tolerance for g, det g and g^-1 identities");
    sub->add_option("--tol-spray", tol_spray, "relative tolerance for spray paths");
    sub->add_option("--tol-third", tol_third, "tolerance for mean Landsberg paths");
    sub->add_option("--ctilde", ctilde, "constant in J + ctilde F I");
    sub->add_option("--out", out_path, "write output to PATH");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  CLI::App* report = app.add_subcommand("report", "curvature reports at sampled points");
  CLI::App* verify = app.add_subcommand("verify", "symbolic weak Landsberg verdicts for polynomial phi");
  CLI::App* scan = app.add_subcommand("scan", "CSV of curvature norms at sampled points");
  CLI::App* zoo_cmd = app.add_subcommand("zoo", "built-in metrics");
  CLI::App* zoo_list = zoo_cmd->add_subcommand("list", "list built-in metrics");
  zoo_cmd->require_subcommand(1);
  for (CLI::App* sub : {report, verify, scan}) add_common(sub);
  zoo_list->add_option("--n", n_list, "dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    return std::nullopt;
  }

  try {
    RunConfig cfg;
    if (report->parsed()) cfg.command = Command::Report;
    if (verify->parsed()) cfg.command = Command::Verify;
    if (scan->parsed()) cfg.command = Command::Scan;
    if (zoo_list->parsed()) cfg.command = Command::ZooList;

    Selector& sel = cfg.selector;
    if (!zoo.empty()) {
      sel.kind = Selector::Kind::Zoo;
      sel.zoo = zoo;
      sel.text = zoo;
    } else if (!family.empty()) {
      sel.kind = Selector::Kind::Family;
      parse_family(family, sel);
      sel.text = family[0] + " " + family[1];
    } else if (!poly.empty()) {
      sel.kind = Selector::Kind::Poly;
      sel.poly = poly;
      for (const std::string& p : poly) sel.text += (sel.text.empty() ? "" : " ") + p;
    }
    if (cfg.command != Command::ZooList && sel.kind == Selector::Kind::None) {
      throw UsageError("a metric selector is required: --zoo NAME, --family m=M a=LIST or --poly c0=...");
    }

    if (!n_list.empty()) cfg.ns = parse_n_list(n_list);
    const bool numeric_cmd = cfg.command != Command::Verify;
    for (long n : cfg.ns) {
      if (n < 2) throw UsageError("n must be at least 2");
      if (numeric_cmd && n > 6) throw UsageError("numeric commands support n up to 6");
      if (!numeric_cmd && n > 50) throw UsageError("verify supports n up to 50");
    }
    if (cfg.command == Command::Scan && cfg.ns.size() != 1) throw UsageError("scan takes a single n");
    if (points < 0 || (points == 0 && !zoo_list->parsed() && report->count("--points") + scan->count("--points") > 0)) {
      throw UsageError("--points must be positive");
    }
    cfg.points = points;
    cfg.seed = seed;
    require_positive(tol_alg, "--tol-alg");
    require_positive(tol_spray, "--tol-spray");
    require_positive(tol_third, "--tol-third");
    cfg.tol.alg = tol_alg;
    cfg.tol.spray = tol_spray;
    cfg.tol.third = tol_third;
    if (!std::isfinite(ctilde)) throw UsageError("--ctilde must be finite");
    cfg.ctilde = ctilde;
    cfg.out = out_path;
    if (format.empty()) {
      cfg.format = cfg.command == Command::Scan ? Format::Csv : Format::Json;
    } else {
      cfg.format = format == "csv" ? Format::Csv : Format::Json;
    }
    if (cfg.format == Format::Csv && (cfg.command == Command::Report || cfg.command == Command::Verify)) {
      throw UsageError("csv output is only available for scan");
    }
    exit_code = 0;
    return cfg;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    exit_code = 1;
    return std::nullopt;
  }
}

}  // namespace finsler::cli
