#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "corpus.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace singhodge::cli {

namespace {

bool ansi_enabled() {
    const char* env = std::getenv("SINGHODGE_COLOR");
    return env != nullptr && std::string(env) != "0" && std::string(env) != "";
}

void print_report(const json& report, const std::string& format, std::ostream& out) {
    if (format == "md") {
        out << render_markdown(report, ansi_enabled());
    } else {
        out << report.dump(2) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton-boundary invariants and weight-graded dimensions of "
                 "isolated hypersurface singularities, in exact arithmetic"};
    app.require_subcommand(1);

    std::string poly_text, poly_file, format = "json";
    bool assume_nondeg = false;
    auto* analyze = app.add_subcommand("analyze", "Analyze a convenient Newton-non-degenerate polynomial");
    auto* poly_opt = analyze->add_option("--poly", poly_text, "Polynomial, e.g. \"y^4 + x*y + x^3\"");
    auto* file_opt = analyze->add_option("--file", poly_file, "File containing the polynomial")
                         ->check(CLI::ExistingFile);
    poly_opt->excludes(file_opt);
    analyze->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    analyze->add_flag("--assume-nondegenerate", assume_nondeg, "Skip the non-degeneracy checks");

    std::string jordan_file;
    int jordan_n = 0;
    auto* jordan = app.add_subcommand("jordan", "Weight tables from a Jordan-block data file");
    jordan->add_option("--file", jordan_file, "Jordan data JSON file")->required()->check(CLI::ExistingFile);
    jordan->add_option("--n", jordan_n, "Ambient dimension n >= 2")->required();

    std::uint64_t seed = 0;
    int iters = 200;
    auto* verify = app.add_subcommand("verify", "Randomized identity and oracle checks");
    verify->add_option("--seed", seed, "RNG seed (default 0)");
    verify->add_option("--iters", iters, "Iterations (default 200)");

    std::string corpus_dir;
    auto* corpus = app.add_subcommand("corpus", "Run the fixture corpus in a directory");
    corpus->add_option("--dir", corpus_dir, "Directory of fixture JSON files")->required();

    std::vector<const char*> argv;
    argv.push_back("singhodge");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        const int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code;
    }

    try {
        if (analyze->parsed()) {
            if (poly_text.empty() && poly_file.empty()) {
                err << "analyze: one of --poly or --file is required\n";
                return 1;
            }
            if (!poly_file.empty()) {
                std::ifstream in(poly_file);
                std::ostringstream buffer;
                buffer << in.rdbuf();
                poly_text = buffer.str();
                while (!poly_text.empty() && std::isspace(static_cast<unsigned char>(poly_text.back())))
                    poly_text.pop_back();
            }
            AnalyzeOptions opts;
            opts.assume_nondegenerate = assume_nondeg;
            const json report = analyze_report(poly_text, opts);
            print_report(report, format, out);
            const bool smooth = report["smooth_at_0"].get<bool>();
            const bool convenient = report["convenient"].get<bool>();
            return (!convenient && !smooth) ? 2 : 0;
        }
        if (jordan->parsed()) {
            std::ifstream in(jordan_file);
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::parse_error& e) {
                err << "jordan: invalid JSON: " << e.what() << "\n";
                return 3;
            }
            if (doc.contains("n") && doc["n"].is_number_integer() && doc["n"].get<int>() != jordan_n) {
                err << "jordan: --n " << jordan_n << " contradicts the file's n = " << doc["n"] << "\n";
                return 3;
            }
            doc["n"] = jordan_n;
            const JordanBlockData data = jordan_from_json(doc);
            if (data.n < 2) {
                err << "jordan: n must be >= 2\n";
                return 3;
            }
            const auto violations = validate_jordan_data(data);
            if (!violations.empty()) {
                err << "invalid Jordan data:\n";
                for (const std::string& v : violations) err << "  - " << v << "\n";
                return 3;
            }
            print_report(jordan_report(data), format, out);
            return 0;
        }
        if (verify->parsed()) return run_verify(seed, iters, out, err);
        if (corpus->parsed()) return run_corpus(corpus_dir, out, err);
    } catch (const SyntaxError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const NonzeroConstantTerm& e) {
        err << "parse error: nonzero constant term: " << e.what() << "\n";
        return 1;
    } catch (const EmptyPolynomial& e) {
        err << "parse error: empty polynomial: " << e.what() << "\n";
        return 1;
    } catch (const InvalidJordanData& e) {
        err << "invalid Jordan data: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}

}  // namespace singhodge::cli
