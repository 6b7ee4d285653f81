#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace singhodge::cli {

namespace {

std::int64_t to_i64(const Int& x) { return x.convert_to<std::int64_t>(); }

json int_vector_to_json(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_i64(x));
    return a;
}

json exponent_vector_to_json(const ExponentVector& v) {
    json a = json::array();
    for (Exponent e : v) a.push_back(e);
    return a;
}

const char* verdict_name(FaceVerdict v) {
    switch (v) {
        case FaceVerdict::NonDegenerate: return "NonDegenerate";
        case FaceVerdict::Degenerate: return "Degenerate";
        case FaceVerdict::Assumed: return "Assumed";
    }
    return "?";
}

std::string face_label(const Face& f) {
    std::ostringstream os;
    os << "dim-" << f.dim << " face {";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (std::size_t j = 0; j < f.vertices[i].size(); ++j) {
            if (j) os << ",";
            os << f.vertices[i][j];
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

}  // namespace

json face_to_json(const Face& f) {
    json o;
    o["dim"] = f.dim;
    json verts = json::array();
    for (const auto& v : f.vertices) verts.push_back(exponent_vector_to_json(v));
    o["vertices"] = verts;
    o["normal"] = int_vector_to_json(f.normal);
    o["offset"] = to_i64(f.offset);
    return o;
}

json laurent_to_json(const LaurentPolynomialZ& p) {
    json coeffs = json::object();
    for (const auto& [d, c] : p.coeffs()) coeffs[std::to_string(d)] = c;
    json o;
    o["coeffs"] = coeffs;
    return o;
}

json weight_table_to_json(const WeightTable& t) {
    json rows = json::array();
    for (const auto& [kr, dim] : t.entries) rows.push_back({{"k", kr.first}, {"r", kr.second}, {"dim", dim}});
    return rows;
}

json milnor_table_to_json(const std::map<int, std::int64_t>& table) {
    json rows = json::array();
    for (const auto& [r, dim] : table) rows.push_back({{"r", r}, {"dim", dim}});
    return rows;
}

json jordan_blocks_to_json(const JordanBlockData& j) {
    json blocks = json::array();
    for (const auto& [key, cnt] : j.blocks)
        blocks.push_back({{"eigenvalue", key.first.str()}, {"size", key.second}, {"count", cnt}});
    json o;
    o["n"] = j.n;
    o["blocks"] = blocks;
    return o;
}

JordanBlockData jordan_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw InvalidJordanData("Jordan data must be {\"n\": int, \"blocks\": [...]}");
    JordanBlockData j;
    j.n = doc["n"].get<int>();
    if (doc.contains("blocks")) {
        if (!doc["blocks"].is_array()) throw InvalidJordanData("\"blocks\" must be an array");
        for (const auto& b : doc["blocks"]) {
            if (!b.is_object() || !b.contains("eigenvalue") || !b.contains("size") || !b.contains("count"))
                throw InvalidJordanData("each block needs eigenvalue, size, count");
            if (!b["eigenvalue"].is_string() || !b["size"].is_number_integer() || !b["count"].is_number_integer())
                throw InvalidJordanData("block fields have the wrong types (eigenvalues are exact \"k/m\" strings)");
            j.add(Eigenvalue::parse(b["eigenvalue"].get<std::string>()), b["size"].get<int>(),
                  b["count"].get<std::int64_t>());
        }
    }
    return j;
}

namespace {

// Weight tables, VP polynomials and stalk dimensions from complete Jordan
// data; shared by the jordan subcommand and the analyze paths that can
// complete the data (n=2 and the smooth-point case).
void emit_full_tables(json& report, const JordanBlockData& j) {
    const int n = j.n;
    json tables;
    json milnor = json::array();
    for (const Eigenvalue& lambda : j.eigenvalues()) {
        milnor.push_back(
            {{"eigenvalue", lambda.str()}, {"table", milnor_table_to_json(milnor_weight_table(j, lambda))}});
    }
    tables["milnor_fiber"] = milnor;
    tables["ic_stalk"] = weight_table_to_json(ic_stalk_weight_table(n, j));
    if (n >= 3) tables["link"] = weight_table_to_json(link_weight_table(n, j));
    report["weight_tables"] = tables;

    json vp;
    vp["milnor_fiber"] = laurent_to_json(vp_milnor_fiber(j));
    if (n >= 3) vp["ic_stalk"] = laurent_to_json(vp_ic_stalk(n, j));
    report["vp_polynomials"] = vp;

    const std::int64_t n0 = invariant_dimension_N0(j);
    json stalk = json::array();
    for (const auto& [k, dim] : stalk_cohomology_dims(n, n0)) stalk.push_back({{"k", k}, {"dim", dim}});
    report["stalk_cohomology"] = stalk;
    report["N0"] = n0;
    report["milnor_number"] = milnor_number(j);
}

json purity_to_json(const PurityVerdict& v) {
    json o;
    o["pure"] = v.pure;
    o["witnesses"] = v.witnesses;
    return o;
}

}  // namespace

json analyze_report(const std::string& poly_text, const AnalyzeOptions& opts) {
    const SparsePolynomial p = parse_polynomial(poly_text);
    const int n = p.n;
    const auto supp = support(p);

    json report;
    report["input"] = poly_text;
    report["n"] = n;
    json warnings = json::array();

    const bool smooth = has_linear_term(p);
    report["smooth_at_0"] = smooth;
    if (smooth) warnings.push_back("0 is a smooth point (linear term present); invariant tables are trivial");

    const bool convenient = is_convenient(supp, n);
    report["convenient"] = convenient;

    const NewtonPolyhedron np = newton_polyhedron(supp, n);
    const NewtonBoundary boundary = newton_boundary(np);

    const auto [flat, witness] = is_flat(boundary);
    report["flat"] = flat;
    if (flat) {
        report["flat_witness"] = {{"normal", int_vector_to_json(witness->normal)},
                                  {"offset", to_i64(witness->offset)}};
    }

    if (const auto qh = is_quasi_homogeneous(supp, n)) {
        report["quasi_homogeneous"] = {{"weights", int_vector_to_json(qh->weights)},
                                       {"degree", to_i64(qh->degree)}};
    } else {
        report["quasi_homogeneous"] = nullptr;
    }

    json nondeg = json::array();
    if (opts.assume_nondegenerate) {
        for (const Face& f : boundary.faces)
            nondeg.push_back({{"face", face_to_json(f)}, {"verdict", "Assumed"}});
        warnings.push_back("non-degeneracy assumed for all faces (--assume-nondegenerate)");
    } else {
        const NondegeneracyReport ndr = check_nondegeneracy(p, Scope::AtZero);
        for (const auto& [face, verdict] : ndr.verdicts) {
            nondeg.push_back({{"face", face_to_json(face)}, {"verdict", verdict_name(verdict)}});
            if (verdict == FaceVerdict::Assumed)
                warnings.push_back("non-degeneracy assumed (not verified) for " + face_label(face));
            if (verdict == FaceVerdict::Degenerate)
                warnings.push_back("degenerate face " + face_label(face) +
                                   ": the Newton-boundary formulas need non-degeneracy at 0");
        }
    }
    report["nondegeneracy"] = nondeg;

    json ivs = json::array();
    for (const InteriorVertexData& iv : interior_vertices(boundary))
        ivs.push_back({{"q", exponent_vector_to_json(iv.q)}, {"d", iv.d}});
    report["interior_vertices"] = ivs;
    const std::int64_t pif = pi_f(boundary);
    report["pi_f"] = pif;

    if (n < 2) {
        warnings.push_back("n = 1: monodromy and Hodge outputs need n >= 2; geometric fields only");
        report["warnings"] = warnings;
        return report;
    }

    if (smooth) {
        // Trivial monodromy: empty Jordan data is complete.
        JordanBlockData j;
        j.n = n;
        json completed = jordan_blocks_to_json(j);
        completed["flags"] = json::array({"smooth-point"});
        report["completed_jordan"] = completed;
        emit_full_tables(report, j);
        if (n >= 3) {
            report["purity"] = purity_to_json(purity_verdict(n, j, std::nullopt));
        } else {
            report["purity"] = {{"pure", true}, {"witnesses", {"n=2: the stalk is concentrated in weight 0"}}};
        }
        report["warnings"] = warnings;
        return report;
    }

    if (!convenient) {
        warnings.push_back("not convenient: the Jordan-block and weight-table formulas do not apply");
        report["warnings"] = warnings;
        return report;
    }

    const PartialJordanData partial = jordan_from_geometry(boundary, n);
    json pj;
    pj["top_distances"] = json::array();
    for (std::int64_t d : partial.top_distances) pj["top_distances"].push_back(d);
    pj["sub_top_for_one"] = partial.sub_top_for_one;
    report["partial_jordan"] = pj;

    if (n == 2) {
        // J^1_1 = Pi_f pins the whole eigenvalue-1 part for n = 2.
        JordanBlockData j;
        j.n = 2;
        j.add(Eigenvalue::one(), 1, pif);
        json completed = jordan_blocks_to_json(j);
        completed["flags"] = json::array({"eigenvalue-1-determined-by-geometry"});
        report["completed_jordan"] = completed;

        json tables;
        tables["milnor_fiber"] =
            json::array({{{"eigenvalue", "0/1"}, {"table", milnor_table_to_json(milnor_weight_table(j, Eigenvalue::one()))}}});
        tables["ic_stalk"] = weight_table_to_json(ic_stalk_weight_table(2, j));
        report["weight_tables"] = tables;
        const std::int64_t n0 = invariant_dimension_N0(j);
        json stalk = json::array();
        for (const auto& [k, dim] : stalk_cohomology_dims(2, n0)) stalk.push_back({{"k", k}, {"dim", dim}});
        report["stalk_cohomology"] = stalk;
        report["N0"] = n0;
        report["purity"] = {{"pure", true}, {"witnesses", {"n=2: the stalk is concentrated in weight 0"}}};
        report["warnings"] = warnings;
        return report;
    }

    // n >= 3: the geometry pins J^1_{n-1} = Pi_f, and flatness additionally
    // forces J^1_s = 0 for s >= 2; J^1_1 stays unknown, so full tables are
    // not emitted -- explicit unknown markers instead of guessed zeros.
    if (flat) {
        json completed;
        completed["n"] = n;
        json blocks = json::array();
        blocks.push_back({{"eigenvalue", "0/1"}, {"size", 1}, {"count", "unknown"}});
        for (int s = 2; s <= n - 1; ++s) blocks.push_back({{"eigenvalue", "0/1"}, {"size", s}, {"count", 0}});
        completed["blocks"] = blocks;
        completed["flags"] = json::array({"completed-by-flatness"});
        report["completed_jordan"] = completed;
    }

    json partial_rows = json::array();
    partial_rows.push_back({{"k", 0}, {"r", 0}, {"dim", 1}});
    for (int r = 0; r <= n - 2; ++r) {
        const int s = n - r - 1;  // Gr^W_r H^{n-2} = J^1_s
        json row = {{"k", n - 2}, {"r", r}};
        if (s == n - 1) {
            row["dim"] = pif;
        } else if (flat && s >= 2) {
            row["dim"] = 0;
        } else {
            row["dim"] = "unknown";
        }
        partial_rows.push_back(row);
    }
    report["ic_stalk_partial"] = partial_rows;
    warnings.push_back("J^1_s for s < n-1 is not determined by the formulas implemented here; "
                       "supply full Jordan data via the jordan subcommand for complete tables");

    report["purity"] = purity_to_json(purity_verdict(n, std::nullopt, flat));
    report["warnings"] = warnings;
    return report;
}

json jordan_report(const JordanBlockData& j) {
    json report;
    report["n"] = j.n;
    report["jordan"] = jordan_blocks_to_json(j);
    emit_full_tables(report, j);
    if (j.n >= 3) {
        report["purity"] = purity_to_json(purity_verdict(j.n, j, std::nullopt));
    } else {
        report["purity"] = {{"pure", true}, {"witnesses", {"n=2: the stalk is concentrated in weight 0"}}};
    }
    return report;
}

}  // namespace singhodge::cli
