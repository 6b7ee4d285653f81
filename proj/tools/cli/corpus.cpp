#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <vector>

#include "report.hpp"

namespace singhodge::cli {

namespace {

namespace fs = std::filesystem;

// Subset match: every key of `expected` must be present and match in
// `actual`; arrays compare exactly, objects recursively.
bool subset_match(const json& expected, const json& actual, std::string& path) {
    if (expected.is_object()) {
        if (!actual.is_object()) return false;
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key)) {
                path += "." + key + " (missing)";
                return false;
            }
            std::string sub = path + "." + key;
            if (!subset_match(value, actual[key], sub)) {
                path = sub;
                return false;
            }
        }
        return true;
    }
    return expected == actual;
}

}  // namespace

int run_corpus(const std::string& dir, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(dir)) {
        err << "corpus: not a directory: " << dir << "\n";
        return 5;
    }
    std::vector<fs::path> fixtures;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json" && entry.path().string().find(".report.json") == std::string::npos)
            fixtures.push_back(entry.path());
    }
    std::sort(fixtures.begin(), fixtures.end());
    if (fixtures.empty()) {
        out << "corpus: no fixtures found in " << dir << " (trivial pass)\n";
        return 0;
    }

    std::vector<std::string> failures;
    for (const fs::path& fixture_path : fixtures) {
        std::ifstream in(fixture_path);
        json fixture;
        std::string name = fixture_path.filename().string();
        std::string status;
        try {
            fixture = json::parse(in);
            name = fixture.value("name", name);
            const json report = analyze_report(fixture.at("polynomial").get<std::string>());
            const fs::path report_path = fs::path(fixture_path).replace_extension(".report.json");
            std::ofstream rout(report_path);
            rout << report.dump(2) << "\n";

            bool ok = true;
            std::string diff;
            if (fixture.contains("n") && report["n"] != fixture["n"]) {
                ok = false;
                diff = ".n: expected " + fixture["n"].dump() + ", got " + report["n"].dump();
            }
            if (ok && fixture.contains("expected")) {
                std::string path;
                if (!subset_match(fixture["expected"], report, path)) {
                    ok = false;
                    diff = path + ": expected " + fixture["expected"].dump() + " to be a subset of the report";
                }
            }
            status = ok ? "pass" : "FAIL " + diff;
            if (!ok) failures.push_back(name);
        } catch (const std::exception& e) {
            status = std::string("FAIL (") + e.what() + ")";
            failures.push_back(name);
        }
        out << name << ": " << status << "\n";
    }
    out << (fixtures.size() - failures.size()) << "/" << fixtures.size() << " fixtures pass\n";
    if (!failures.empty()) {
        err << "failing fixtures:";
        for (const std::string& f : failures) err << " " << f;
        err << "\n";
        return 5;
    }
    return 0;
}

}  // namespace singhodge::cli
