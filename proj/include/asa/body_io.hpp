#pragma once

// JSON body specs and result serialization.
//
//   {"kind": "polygon", "vertices": [[x, y], ...]}
//   {"kind": "smooth", "support": {"constant": a0, "cos": [...], "sin": [...]}, "grid": M}
//   {"kind": "smooth", "support": {"samples": [h_0, ..., h_{M-1}]}}
//
// Loaders throw Error(ParseError) on malformed JSON and Error(InvalidBody)
// naming the failed invariant when the body itself is rejected.

#include <span>
#include <string>

#include <json.hpp>

#include "asa/axioms.hpp"
#include "asa/constructions.hpp"
#include "asa/extrapolate.hpp"
#include "asa/geometry.hpp"

namespace asa::io {

ConvexBody body_from_json(const nlohmann::json& j);
ConvexBody parse_body(const std::string& text);
ConvexBody load_body(const std::string& path);

nlohmann::json to_json(const Polygon& p);
/// Smooth bodies are written as support samples on their grid.
nlohmann::json to_json(const ConvexBody& k);
/// Polygon spec plus a "metadata" object (t, kind, residual, containment).
nlohmann::json to_json(const FamilyResult& r);
nlohmann::json to_json(const AxiomVerdict& v);
nlohmann::json to_json(std::span<const AxiomVerdict> verdicts);
nlohmann::json to_json(const ConvergenceReport& r);

/// Shortest decimal form that reads back to the same double ("%.17g").
std::string format_double(double v);

}  // namespace asa::io
