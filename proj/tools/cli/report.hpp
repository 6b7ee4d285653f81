#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "singhodge/hodge.hpp"
#include "singhodge/monodromy.hpp"
#include "singhodge/newton.hpp"
#include "singhodge/poly.hpp"

namespace singhodge::cli {

using json = nlohmann::ordered_json;

struct AnalyzeOptions {
    bool assume_nondegenerate = false;
};

/// Runs the full geometric pipeline on a polynomial and assembles the
/// analysis report. Parse errors propagate; NotConvenient does not throw --
/// the report carries convenient=false and the Jordan fields are absent.
json analyze_report(const std::string& poly_text, const AnalyzeOptions& opts = {});

/// Tables-only report from user-supplied Jordan data (assumed valid).
json jordan_report(const JordanBlockData& j);

// JSON encodings of the domain objects (shared by the report and the
// fixture corpus).
json face_to_json(const Face& f);
json laurent_to_json(const LaurentPolynomialZ& p);
json weight_table_to_json(const WeightTable& t);
json milnor_table_to_json(const std::map<int, std::int64_t>& table);
json jordan_blocks_to_json(const JordanBlockData& j);

/// Reads {"n": int, "blocks": [{"eigenvalue": "k/m", "size": s, "count": c}]}.
/// Throws InvalidJordanData on malformed input.
JordanBlockData jordan_from_json(const json& doc);

/// Markdown rendering of a report; `color` adds ANSI escapes.
std::string render_markdown(const json& report, bool color);

}  // namespace singhodge::cli
