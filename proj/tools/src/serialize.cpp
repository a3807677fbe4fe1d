#include "serialize.hpp"

#include <cstdio>

#include "finsler/algebra/text_format.hpp"

namespace finsler::cli {

Json to_json(const numeric::Tolerances& tol) {
  return Json{{"alg", tol.alg}, {"cartan", tol.cartan}, {"spray", tol.spray}, {"third", tol.third},
              {"conformal", tol.conformal}};
}

Json to_json(const numeric::FundamentalTensor& f, int n) {
  return Json{{"g", nested(f.g, n, 2)},
              {"g_inv", nested(f.g_inv, n, 2)},
              {"det_g", f.det_g},
              {"g_closed", nested(f.g_closed, n, 2)},
              {"g_inv_closed", nested(f.g_inv_closed, n, 2)},
              {"g_inv_closed_plus", nested(f.g_inv_closed_plus, n, 2)},
              {"det_closed", f.det_closed},
              {"res_g", f.res_g},
              {"res_det", f.res_det},
              {"res_inv", f.res_inv},
              {"res_inv_plus", f.res_inv_plus}};
}

Json to_json(const numeric::CurvatureReport& r) {
  const int n = r.n;
  return Json{{"n", n},
              {"x", nested(r.x, n, 1)},
              {"y", nested(r.y, n, 1)},
              {"F", r.F},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"b", r.b},
              {"s", r.s},
              {"ctilde", r.ctilde},
              {"fundamental", to_json(r.fundamental, n)},
              {"C", nested(r.C, n, 3)},
              {"I", nested(r.I, n, 1)},
              {"I_logdet", nested(r.I_logdet, n, 1)},
              {"I_closed", nested(r.I_closed, n, 1)},
              {"closed_conformal", r.closed_conformal},
              {"c", r.c},
              {"conformal_residual", r.conformal_residual},
              {"G", nested(r.G, n, 1)},
              {"G_structured", nested(r.G_structured, n, 1)},
              {"G_general", nested(r.G_general, n, 1)},
              {"B", nested(r.B, n, 4)},
              {"L", nested(r.L, n, 3)},
              {"J", nested(r.J, n, 1)},
              {"J_closed", nested(r.J_closed, n, 1)},
              {"J_plus", nested(r.J_plus, n, 1)},
              {"res_I", r.res_I},
              {"res_yI", r.res_yI},
              {"res_spray", r.res_spray},
              {"res_spray_general", r.res_spray_general},
              {"res_J", r.res_J},
              {"res_yL", r.res_yL},
              {"norm_B", r.norm_B},
              {"norm_J", r.norm_J},
              {"norm_J_plus", r.norm_J_plus},
              {"norm_I", r.norm_I},
              {"tol", to_json(r.tol)}};
}

Json to_json(const numeric::ConvexityVerdict& v) {
  return Json{{"ok", v.ok},           {"worst", v.worst},
              {"worst_b", v.worst_b}, {"worst_s", v.worst_s},
              {"worst_term", v.worst_term}, {"interior_ok", v.interior_ok},
              {"interior_worst", v.interior_worst}};
}

Json entry_summary(const zoo::ZooEntry& e) {
  Json j{{"name", e.name},
         {"params", e.params},
         {"citation", e.citation},
         {"phi", e.phi->text()},
         {"chart", e.chart->name()},
         {"flags",
          {{"closed_conformal", e.flags.closed_conformal},
           {"berwald_expected", e.flags.berwald_expected},
           {"weak_landsberg_expected", e.flags.weak_landsberg_expected}}},
         {"b_range", {e.b_min, e.b0}},
         {"convexity", to_json(e.convexity)},
         {"boundary_degenerate", e.boundary_degenerate}};
  if (!e.candidates.empty()) {
    Json cands = Json::array();
    for (const zoo::PhiCandidate& c : e.candidates) {
      cands.push_back(Json{{"label", c.label}, {"max_rel_error", c.max_rel_error}, {"reproduces", c.reproduces}});
    }
    j["candidates"] = cands;
  }
  return j;
}

Json to_json(const symbolic::NVerdict& v, const std::string& phi_text) {
  Json residuals = Json::array();
  Json names = Json::array();
  for (const auto& [name, expr] : v.residuals) {
    names.push_back(name);
    residuals.push_back(algebra::to_text(expr));
  }
  return Json{{"phi", phi_text},
              {"n", v.n},
              {"conditions", {{"NE22", v.ne22}, {"NH222", v.nh222}, {"NP", v.np}, {"NJFI_weak", v.njfi_weak}}},
              {"degrees", {{"NE22", v.deg_ne22}, {"NH222", v.deg_nh222}, {"NP", v.deg_np}, {"NJFI", v.deg_njfi}}},
              {"residuals", residuals},
              {"residual_names", names}};
}

std::string zoo_line(const zoo::ZooEntry& e) {
  const char* convexity = e.convexity.ok ? "convex" : (e.boundary_degenerate ? "boundary-degenerate" : "not-convex");
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-11s %-16s closed_conformal=%d berwald=%d weak_landsberg=%d %s", e.name.c_str(),
                e.params.empty() ? "-" : e.params.c_str(), e.flags.closed_conformal, e.flags.berwald_expected,
                e.flags.weak_landsberg_expected, convexity);
  return buf;
}

}  // namespace finsler::cli
