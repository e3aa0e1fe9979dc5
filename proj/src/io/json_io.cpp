#include "bgg/io/json_io.hpp"

#include "bgg/sym/errors.hpp"

namespace bgg::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string expr_string(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(what) + " must be an expression string");
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

tractor::Slot slot_from(const json& j, const sym::ParseOptions& opts) {
  std::string s = expr_string(j, "tractor slot");
  if (s == "unknown") return tractor::Slot::unknown();
  return sym::parse_rat(s, opts);
}

}  // namespace

void SymbolOptions::merge(const json& j) {
  if (!j.is_object()) return;
  if (j.contains("functions"))
    for (auto& s : string_array(j.at("functions"), "functions")) functions.push_back(s);
  if (j.contains("fields"))
    for (auto& s : string_array(j.at("fields"), "fields")) fields.push_back(s);
}

sym::ParseOptions parse_options(const frame::Chart& chart, const SymbolOptions& syms) {
  sym::ParseOptions o = chart.parse_options();
  o.functions = syms.functions;
  o.fields = syms.fields;
  return o;
}

frame::Chart chart_from_json(const json& j) {
  if (j.is_object() && j.contains("chart")) {
    auto names = string_array(j.at("chart"), "chart");
    if (names.size() != 5) throw InputError("chart must name 5 coordinates");
    return frame::Chart::of(names);
  }
  return frame::Chart::monge();
}

frame::Frame235 frame_from_json(const json& j, const SymbolOptions& syms_in,
                                const frame::FrameOptions& opts) {
  if (!j.is_object()) throw InputError("frame document must be a JSON object");
  SymbolOptions syms = syms_in;
  syms.merge(j);
  frame::Chart chart = chart_from_json(j);
  sym::ParseOptions po = parse_options(chart, syms);

  if (j.contains("monge_F")) {
    if (!(chart == frame::Chart::monge()))
      throw InputError("monge_F requires the chart (x, y, p, q, z)");
    return frame::Frame235::monge(sym::parse_rat(expr_string(j.at("monge_F"), "monge_F"), po), opts);
  }
  const json& fr = require(j, "frame");
  if (!fr.is_array() || fr.size() != 2) throw InputError("frame must hold two vector fields");
  std::vector<frame::VectorField> e;
  for (const auto& v : fr) {
    if (!v.is_array() || v.size() != chart.size())
      throw InputError("each frame field needs one coefficient per chart coordinate");
    std::vector<sym::RatExpr> c;
    for (const auto& x : v) c.push_back(sym::parse_rat(expr_string(x, "frame coefficient"), po));
    e.emplace_back(chart, std::move(c));
  }
  std::vector<sym::RatExpr> guards;
  if (j.contains("guards"))
    for (const auto& g : string_array(j.at("guards"), "guards")) guards.push_back(sym::parse_rat(g, po));
  return frame::Frame235::general(chart, e[0], e[1], std::move(guards), opts);
}

sym::RatExpr density_from_json(const json& j, const frame::Chart& chart, const SymbolOptions& syms_in) {
  SymbolOptions syms = syms_in;
  syms.merge(j);
  return sym::parse_rat(expr_string(require(j, "sigma"), "sigma"), parse_options(chart, syms));
}

json to_json(const sym::RatExpr& e) { return to_string(e); }

json to_json(const frame::Sym2& s) {
  return json{{"11", to_json(s.a11)}, {"12", to_json(s.a12)}, {"22", to_json(s.a22)}};
}

json to_json(const frame::VectorField& v) {
  json a = json::array();
  for (const auto& c : v.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const frame::Connection& c) {
  json o = json::object();
  for (int d = 0; d < 2; ++d)
    for (int g = 0; g < 2; ++g)
      for (int b = 0; b < 2; ++b)
        o["Gamma^" + std::to_string(d + 1) + "_" + std::to_string(g + 1) + std::to_string(b + 1)] =
            to_json(c(d, g, b));
  return o;
}

json to_json(const sym::ZeroVerdict& z) {
  return json{{"zero", z.zero}, {"probabilistic", z.probabilistic}};
}

json to_json(const tractor::TractorSlots& t) {
  auto s = [](const tractor::Slot& x) { return json(tractor::to_string(x)); };
  return json{{"chi", s(t.chi)},
              {"phi", {s(t.phi[0]), s(t.phi[1])}},
              {"upsilon", s(t.upsilon)},
              {"tau", {s(t.tau[0]), s(t.tau[1])}},
              {"sigma", s(t.sigma)}};
}

json to_json(const g2::Report& r) {
  json o = json::object();
  for (const auto& c : r.checks) o[c.name] = json{{"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
  return o;
}

tractor::TractorSlots tractor_from_json(const json& j, const sym::ParseOptions& opts) {
  tractor::TractorSlots t;
  t.chi = slot_from(require(j, "chi"), opts);
  t.upsilon = slot_from(require(j, "upsilon"), opts);
  t.sigma = slot_from(require(j, "sigma"), opts);
  const json& phi = require(j, "phi");
  const json& tau = require(j, "tau");
  if (!phi.is_array() || phi.size() != 2 || !tau.is_array() || tau.size() != 2)
    throw InputError("phi and tau must hold two slots each");
  for (int a = 0; a < 2; ++a) {
    t.phi[a] = slot_from(phi[a], opts);
    t.tau[a] = slot_from(tau[a], opts);
  }
  return t;
}

}  // namespace bgg::io
