// zukcrit: decide Żuk's spectral criterion for a generating set or graph.
//
// Reads one input document, builds the graph G(S), computes the walk
// Laplacian spectrum with an exact engine (characteristic polynomial +
// Sturm isolation) cross-checked by a numeric Jacobi engine, and reports
// where the spectral gap lambda_1 stands against 1/2.
//
// Exit codes: 0 ok (or --assert-holds satisfied), 1 input error,
// 2 internal inconsistency, 3 --assert-holds unmet.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "zuk/errors.hpp"
#include "zuk/pipeline.hpp"
#include "zuk/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitAssert = 3;

struct CliConfig {
    std::string input_path;
    std::string batch_dir;
    std::string json_path;
    std::string dot_path;
    std::string charpoly_path;
    bool exact_only = false;
    bool numeric_only = false;
    bool both = false;
    std::string precision_text;
    std::string tolerance_text;
    bool symmetrize = false;
    bool assert_holds = false;
    bool stamp = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zuk::input_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw zuk::input_error("cannot write output file '" + path + "'");
    out << content;
}

zuk::RunOptions make_options(const CliConfig& cfg) {
    zuk::RunOptions opt;
    int engines = int(cfg.exact_only) + int(cfg.numeric_only) + int(cfg.both);
    if (engines > 1) throw zuk::input_error("choose at most one of --exact/--numeric/--both");
    if (cfg.exact_only) opt.engine = zuk::EngineMode::exact_only;
    if (cfg.numeric_only) opt.engine = zuk::EngineMode::numeric_only;
    if (cfg.numeric_only && cfg.assert_holds)
        throw zuk::input_error("--assert-holds needs the exact engine; drop --numeric");
    if (!cfg.precision_text.empty()) {
        opt.precision = zuk::parse_rational(cfg.precision_text);
        if (!(opt.precision > 0)) throw zuk::input_error("--precision must be positive");
    }
    if (!cfg.tolerance_text.empty()) {
        opt.tolerance = zuk::parse_rational(cfg.tolerance_text);
        if (!(opt.tolerance > 0)) throw zuk::input_error("--tolerance must be positive");
    }
    opt.symmetrize = cfg.symmetrize;
    return opt;
}

struct RunOutputs {
    std::string text;
    std::string json;
    std::string dot;
    std::string charpoly;
    zuk::VerdictKind kind = zuk::VerdictKind::inapplicable;
    bool has_verdict = false;
};

RunOutputs run_one(const std::string& document, const zuk::RunOptions& opt, bool stamp) {
    zuk::InputSpec spec = zuk::parse_input(document);
    zuk::RunResult result = zuk::run_pipeline(spec, opt);
    RunOutputs out;
    out.text = zuk::render_text(result, opt, stamp);
    out.json = zuk::render_json(result, opt, stamp);
    out.dot = zuk::to_dot(result.graph);
    if (result.report.char_polynomial)
        out.charpoly = zuk::render_charpoly_file(*result.report.char_polynomial);
    if (result.verdict) {
        out.has_verdict = true;
        out.kind = result.verdict->kind;
    }
    return out;
}

int single_run(const CliConfig& cfg) {
    zuk::RunOptions opt = make_options(cfg);
    RunOutputs out = run_one(read_file(cfg.input_path), opt, cfg.stamp);
    if (!cfg.json_path.empty()) write_file(cfg.json_path, out.json);
    if (!cfg.dot_path.empty()) write_file(cfg.dot_path, out.dot);
    if (!cfg.charpoly_path.empty()) {
        if (out.charpoly.empty())
            throw zuk::input_error("--emit-charpoly: no characteristic polynomial was computed");
        write_file(cfg.charpoly_path, out.charpoly);
    }
    std::cout << out.text;
    if (cfg.assert_holds && (!out.has_verdict || out.kind != zuk::VerdictKind::holds))
        return kExitAssert;
    return kExitOk;
}

// Per-file isolation: each input yields <input>.report.txt and
// <input>.report.json next to it; outputs are byte-identical to what a
// sequential single run would produce.
int batch_run(const CliConfig& cfg) {
    if (!cfg.json_path.empty() || !cfg.dot_path.empty() || !cfg.charpoly_path.empty())
        throw zuk::input_error("--json/--emit-dot/--emit-charpoly are per-file in --batch mode");
    zuk::RunOptions opt = make_options(cfg);

    std::vector<std::string> inputs;
    for (const auto& entry : std::filesystem::directory_iterator(cfg.batch_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt" &&
            entry.path().string().find(".report.") == std::string::npos)
            inputs.push_back(entry.path().string());
    std::sort(inputs.begin(), inputs.end());
    if (inputs.empty()) throw zuk::input_error("no *.txt inputs in '" + cfg.batch_dir + "'");

    struct FileResult {
        std::string line;
        int code = kExitOk;
    };
    auto process = [&](const std::string& path) -> FileResult {
        try {
            RunOutputs out = run_one(read_file(path), opt, cfg.stamp);
            write_file(path + ".report.txt", out.text);
            write_file(path + ".report.json", out.json);
            std::string kind = out.has_verdict ? zuk::verdict_kind_name(out.kind) : "(no verdict)";
            int code = kExitOk;
            if (cfg.assert_holds && (!out.has_verdict || out.kind != zuk::VerdictKind::holds))
                code = kExitAssert;
            return {path + ": " + kind, code};
        } catch (const zuk::input_error& e) {
            return {path + ": error: input: " + e.what(), kExitInput};
        } catch (const zuk::internal_error& e) {
            return {path + ": error: internal: " + e.what(), kExitInternal};
        }
    };

    std::vector<std::future<FileResult>> futures;
    futures.reserve(inputs.size());
    for (const auto& path : inputs)
        futures.push_back(std::async(std::launch::async, process, path));

    int exit_code = kExitOk;
    auto severity = [](int code) { return code == kExitInternal ? 3 : code == kExitInput ? 2
                                          : code == kExitAssert ? 1 : 0; };
    for (auto& f : futures) {
        FileResult r = f.get();
        std::cout << r.line << "\n";
        if (severity(r.code) > severity(exit_code)) exit_code = r.code;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"decide Żuk's spectral criterion from a generating set or an explicit graph"};
    app.add_option("input", cfg.input_path, "input document (see README for the format)");
    app.add_option("--batch", cfg.batch_dir, "process every *.txt in a directory");
    app.add_flag("--exact", cfg.exact_only, "exact engine only");
    app.add_flag("--numeric", cfg.numeric_only, "numeric engine only (no verdict)");
    app.add_flag("--both", cfg.both, "both engines with cross-check (default)");
    app.add_option("--precision", cfg.precision_text,
                   "root isolation width, exact rational (default 1/10^12)");
    app.add_option("--tolerance", cfg.tolerance_text,
                   "exact-vs-numeric cross-check bound (default 1/10^9)");
    app.add_flag("--symmetrize", cfg.symmetrize, "add missing inverses instead of rejecting");
    app.add_option("--json", cfg.json_path, "write the JSON report here");
    app.add_option("--emit-dot", cfg.dot_path, "write the DOT export here");
    app.add_option("--emit-charpoly", cfg.charpoly_path,
                   "write the characteristic polynomial here");
    app.add_flag("--assert-holds", cfg.assert_holds, "exit 0 only when the verdict is 'holds'");
    app.add_flag("--stamp", cfg.stamp, "add a generation timestamp to reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (!cfg.batch_dir.empty() && !cfg.input_path.empty())
            throw zuk::input_error("give either an input file or --batch, not both");
        if (cfg.batch_dir.empty() && cfg.input_path.empty())
            throw zuk::input_error("no input file given (or use --batch DIR)");
        return cfg.batch_dir.empty() ? single_run(cfg) : batch_run(cfg);
    } catch (const zuk::input_error& e) {
        std::cerr << "zukcrit: error: input: " << e.what() << "\n";
        return kExitInput;
    } catch (const zuk::internal_error& e) {
        std::cerr << "zukcrit: error: internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "zukcrit: error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
}
