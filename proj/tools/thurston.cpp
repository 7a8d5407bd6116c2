#include "thurston/report.hpp"
#include "thurston/table.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace thurston;
namespace rp = thurston::report;

constexpr char kDigitsEnv[] = "THURSTON_DIGITS";

int default_digits() {
    if (const char* env = std::getenv(kDigitsEnv)) {
        try {
            const int d = std::stoi(env);
            if (d >= PrecisionContext::kMinDigits) return d;
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring " << kDigitsEnv << "='" << env << "'\n";
    }
    return RunOptions{}.start_digits;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Request {
    std::string combinatorics;
    double tol = RunOptions{}.tol;
    int max_iter = RunOptions{}.max_iter;
    int digits = 0;
    int max_digits = RunOptions{}.max_digits;
    bool trace = false;
    int plot = 0;
    std::string out;
    std::string plot_out;
    std::string format = "json";
    std::string from;
};

void add_run_flags(CLI::App* cmd, Request& rq) {
    cmd->add_option("--tol", rq.tol, "target fit error")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", rq.max_iter, "iteration limit")->check(CLI::PositiveNumber);
    cmd->add_option("--digits", rq.digits, "starting decimal digits")->check(CLI::Range(15, 100000));
    cmd->add_option("--max-digits", rq.max_digits, "precision ceiling")->check(CLI::Range(15, 100000));
    cmd->add_flag("--trace", rq.trace, "include every step in the result");
}

int with_combinatorics(const std::string& text, Combinatorics& out) {
    try {
        out = parse(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return rp::kParseError;
    } catch (const CombinatoricsError& e) {
        std::cerr << "invalid combinatorics: " << e.what() << "\n";
        return rp::kInvalidCombinatorics;
    }
    return rp::kOk;
}

int cmd_validate(const Request& rq) {
    Combinatorics c({0, 0});
    if (const int code = with_combinatorics(rq.combinatorics, c); code != rp::kOk) return code;
    const rp::ValidationSummary v = rp::summarize(c);
    emit(rq.format == "json" ? nlohmann::json(v).dump(2) : rp::to_text(v), rq.out);
    return v.pass ? rp::kOk : rp::kInvalidCombinatorics;
}

int run_document(const Request& rq, rp::ResultDocument& doc) {
    Combinatorics c({0, 0});
    if (const int code = with_combinatorics(rq.combinatorics, c); code != rp::kOk) return code;
    const rp::ValidationSummary v = rp::summarize(c);
    if (!v.pass) {
        std::cerr << rp::to_text(v);
        return rp::kInvalidCombinatorics;
    }
    RunOptions o;
    o.tol = rq.tol;
    o.max_iter = rq.max_iter;
    o.start_digits = rq.digits > 0 ? rq.digits : default_digits();
    o.max_digits = std::max(rq.max_digits, o.start_digits);
    o.trace = rq.trace;
    doc = rp::make_document(run(c, o));
    return doc.converged ? rp::kOk : rp::kNotConverged;
}

int cmd_run(const Request& rq) {
    rp::ResultDocument doc;
    const int code = run_document(rq, doc);
    if (code == rp::kParseError || code == rp::kInvalidCombinatorics) return code;
    emit(rq.format == "json" ? rp::serialize(doc) : rp::to_text(doc), rq.out);
    if (rq.plot > 0) {
        const std::string path = !rq.plot_out.empty() ? rq.plot_out : (rq.out.empty() ? "" : rq.out + ".csv");
        emit(rp::plot_csv(doc, rq.plot), path);
    }
    if (code == rp::kNotConverged) std::cerr << "not converged: " << doc.message << "\n";
    return code;
}

int cmd_plot(const Request& rq) {
    rp::ResultDocument doc;
    if (!rq.from.empty()) {
        doc = rp::deserialize(read_file(rq.from));
    } else if (!rq.combinatorics.empty()) {
        const int code = run_document(rq, doc);
        if (code == rp::kParseError || code == rp::kInvalidCombinatorics) return code;
        if (code == rp::kNotConverged) std::cerr << "warning: plotting an unconverged map\n";
    } else {
        std::cerr << "plot needs a combinatorics or --from RESULT.json\n";
        return rp::kFailure;
    }
    emit(rp::plot_csv(doc, rq.plot), rq.out);
    return rp::kOk;
}

int cmd_table(const Request& rq) {
    table::TableOptions o;
    o.start_digits = rq.digits > 0 ? rq.digits : default_digits();
    o.max_digits = std::max(rq.max_digits, o.start_digits);
    const auto results = table::run_table_parallel(table::reference_rows(), o);
    if (rq.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : results) {
            char dev[32];
            std::snprintf(dev, sizeof dev, "%.3g", r.max_deviation);
            char eps[32];
            std::snprintf(eps, sizeof eps, "%.6g", r.fit_error);
            rows.push_back({{"name", r.reference.name},
                            {"combinatorics", r.reference.combinatorics},
                            {"steps", r.reference.steps},
                            {"final_combinatorics", r.final_combinatorics},
                            {"coefficients", r.coefficients},
                            {"reference_coefficients", r.reference.coefficients},
                            {"fit_error", eps},
                            {"reference_error", r.reference.error},
                            {"iterations", r.iterations},
                            {"reference_iterations", r.reference.iterations},
                            {"max_deviation", dev},
                            {"framing_inconsistent_source", r.framing_inconsistent_source},
                            {"failure", r.failure ? nlohmann::json(*r.failure) : nlohmann::json(nullptr)}});
        }
        emit(rows.dump(2), rq.out);
    } else {
        emit(table::to_text(results), rq.out);
    }
    for (const auto& r : results) {
        if (r.failure) return rp::kNotConverged;
    }
    return rp::kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thurston pull-back for real critically finite polynomials"};
    app.require_subcommand(1);
    Request rq;

    auto* validate_cmd = app.add_subcommand("validate", "check a combinatorics");
    auto* run_cmd = app.add_subcommand("run", "compute the polynomial realizing a combinatorics");
    auto* plot_cmd = app.add_subcommand("plot", "sample a result on [0,1] as CSV");
    auto* table_cmd = app.add_subcommand("table", "recompute the reference coefficient table");

    for (auto* cmd : {validate_cmd, run_cmd, plot_cmd, table_cmd}) {
        cmd->add_option("--out", rq.out, "output file (default stdout)");
    }
    for (auto* cmd : {validate_cmd, run_cmd, table_cmd}) {
        cmd->add_option("--format", rq.format, "output format")->check(CLI::IsMember({"json", "text"}));
    }
    validate_cmd->add_option("combinatorics", rq.combinatorics, "e.g. 0,4,3,1,2,5")->required();

    run_cmd->add_option("combinatorics", rq.combinatorics, "e.g. 0,4,3,1,2,5")->required();
    add_run_flags(run_cmd, rq);
    run_cmd->add_option("--plot", rq.plot, "also emit N plot samples")->check(CLI::Range(2, 10000000));
    run_cmd->add_option("--plot-out", rq.plot_out, "plot CSV path (default OUT.csv or stdout)");

    rq.plot = 0;
    plot_cmd->add_option("combinatorics", rq.combinatorics, "combinatorics to run first");
    plot_cmd->add_option("--from", rq.from, "stored result document");
    add_run_flags(plot_cmd, rq);
    plot_cmd->add_option("--plot", rq.plot, "sample count")->check(CLI::Range(2, 10000000));

    table_cmd->add_option("--digits", rq.digits, "starting decimal digits")->check(CLI::Range(15, 100000));
    table_cmd->add_option("--max-digits", rq.max_digits, "precision ceiling")->check(CLI::Range(15, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : rp::kFailure;
    }

    try {
        if (*validate_cmd) return cmd_validate(rq);
        if (*run_cmd) return cmd_run(rq);
        if (*plot_cmd) {
            if (rq.plot == 0) rq.plot = 201;
            return cmd_plot(rq);
        }
        if (*table_cmd) {
            if (rq.format == "json" && table_cmd->count("--format") == 0) rq.format = "text";
            return cmd_table(rq);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return rp::kFailure;
    }
    return rp::kFailure;
}
