#pragma once

// JSON forms of frames, densities and results. Expressions travel as grammar
// strings.
//
//   Monge frame:   {"chart": [...], "monge_F": "..."}
//   general frame: {"chart": [...], "frame": [[5 exprs], [5 exprs]], "guards": [...]}
//   density:       {"sigma": "..."}
//
// "chart" defaults to (x, y, p, q, z). Optional "functions" and "fields"
// arrays declare opaque symbols for the parser.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "bgg/frame/frame235.hpp"
#include "bgg/g2/g2.hpp"
#include "bgg/sym/eval.hpp"
#include "bgg/tractor/tractor.hpp"

namespace bgg::io {

using json = nlohmann::json;

struct SymbolOptions {
  std::vector<std::string> functions;
  std::vector<std::string> fields;

  // Merges the "functions"/"fields" arrays of j.
  void merge(const json& j);
};

sym::ParseOptions parse_options(const frame::Chart& chart, const SymbolOptions& syms);

// Chart named by j["chart"], or the Monge chart.
frame::Chart chart_from_json(const json& j);

frame::Frame235 frame_from_json(const json& j, const SymbolOptions& syms = {},
                                const frame::FrameOptions& opts = {});
sym::RatExpr density_from_json(const json& j, const frame::Chart& chart,
                               const SymbolOptions& syms = {});

json to_json(const sym::RatExpr& e);
json to_json(const frame::Sym2& s);  // {"11", "12", "22"}
json to_json(const frame::VectorField& v);
json to_json(const frame::Connection& c);  // "Gamma^d_{cb}" keys, 1-based
json to_json(const sym::ZeroVerdict& z);
json to_json(const tractor::TractorSlots& t);
json to_json(const g2::Report& r);

// Inverse of to_json(TractorSlots); "unknown" marks an unknown slot.
tractor::TractorSlots tractor_from_json(const json& j, const sym::ParseOptions& opts);

}  // namespace bgg::io
