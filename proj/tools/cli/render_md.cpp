#include <sstream>

#include "report.hpp"

namespace singhodge::cli {

namespace {

struct Ansi {
    bool on;
    std::string bold(const std::string& s) const { return on ? "\033[1m" + s + "\033[0m" : s; }
    std::string green(const std::string& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
    std::string red(const std::string& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
};

std::string yesno(const Ansi& ansi, bool b) { return b ? ansi.green("yes") : ansi.red("no"); }

std::string list(const json& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i].dump();
    }
    return os.str();
}

void render_table_rows(std::ostringstream& os, const json& rows) {
    os << "| k | r | dim |\n|---|---|-----|\n";
    for (const auto& row : rows)
        os << "| " << row["k"].dump() << " | " << row["r"].dump() << " | " << row["dim"].dump() << " |\n";
    os << "\n";
}

}  // namespace

std::string render_markdown(const json& report, bool color) {
    const Ansi ansi{color};
    std::ostringstream os;
    if (report.contains("input")) {
        os << ansi.bold("# Analysis of ") << "`" << report["input"].get<std::string>() << "`\n\n";
    } else {
        os << ansi.bold("# Jordan-data report") << "\n\n";
    }
    os << "- n: " << report["n"].dump() << "\n";
    for (const char* key : {"smooth_at_0", "convenient", "flat"}) {
        if (report.contains(key)) os << "- " << key << ": " << yesno(ansi, report[key].get<bool>()) << "\n";
    }
    if (report.contains("flat_witness"))
        os << "- flat witness: normal " << list(report["flat_witness"]["normal"]) << ", offset "
           << report["flat_witness"]["offset"].dump() << "\n";
    if (report.contains("quasi_homogeneous")) {
        if (report["quasi_homogeneous"].is_null()) {
            os << "- quasi-homogeneous: " << ansi.red("no") << "\n";
        } else {
            os << "- quasi-homogeneous: weights " << list(report["quasi_homogeneous"]["weights"]) << ", degree "
               << report["quasi_homogeneous"]["degree"].dump() << "\n";
        }
    }
    if (report.contains("pi_f")) os << "- Pi_f: " << report["pi_f"].dump() << "\n";
    if (report.contains("interior_vertices")) {
        os << "- interior vertices:";
        if (report["interior_vertices"].empty()) os << " none";
        for (const auto& iv : report["interior_vertices"])
            os << " q=" << list(iv["q"]) << " (d=" << iv["d"].dump() << ")";
        os << "\n";
    }
    if (report.contains("N0")) os << "- N0: " << report["N0"].dump() << "\n";
    if (report.contains("milnor_number")) os << "- Milnor number: " << report["milnor_number"].dump() << "\n";
    if (report.contains("purity"))
        os << "- purity: " << (report["purity"]["pure"].get<bool>() ? ansi.green("pure") : ansi.red("impure"))
           << "\n";
    os << "\n";

    if (report.contains("nondegeneracy")) {
        os << ansi.bold("## Non-degeneracy") << "\n\n| face | verdict |\n|------|---------|\n";
        for (const auto& entry : report["nondegeneracy"]) {
            os << "| dim " << entry["face"]["dim"].dump() << " " << list(entry["face"]["vertices"]) << " | "
               << entry["verdict"].get<std::string>() << " |\n";
        }
        os << "\n";
    }
    if (report.contains("weight_tables")) {
        const auto& tables = report["weight_tables"];
        if (tables.contains("milnor_fiber")) {
            for (const auto& mt : tables["milnor_fiber"]) {
                os << ansi.bold("## Milnor fiber weights, eigenvalue " + mt["eigenvalue"].get<std::string>())
                   << "\n\n| r | dim |\n|---|-----|\n";
                for (const auto& row : mt["table"])
                    os << "| " << row["r"].dump() << " | " << row["dim"].dump() << " |\n";
                os << "\n";
            }
        }
        if (tables.contains("ic_stalk")) {
            os << ansi.bold("## IC stalk weights") << "\n\n";
            render_table_rows(os, tables["ic_stalk"]);
        }
        if (tables.contains("link")) {
            os << ansi.bold("## Link weights") << "\n\n";
            render_table_rows(os, tables["link"]);
        }
    }
    if (report.contains("ic_stalk_partial")) {
        os << ansi.bold("## IC stalk weights (partial)") << "\n\n";
        render_table_rows(os, report["ic_stalk_partial"]);
    }
    if (report.contains("vp_polynomials")) {
        os << ansi.bold("## Virtual Poincare polynomials") << "\n\n";
        for (const auto& [name, poly] : report["vp_polynomials"].items())
            os << "- " << name << ": " << poly["coeffs"].dump() << "\n";
        os << "\n";
    }
    if (report.contains("warnings") && !report["warnings"].empty()) {
        os << ansi.bold("## Warnings") << "\n\n";
        for (const auto& w : report["warnings"]) os << "- " << w.get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace singhodge::cli
