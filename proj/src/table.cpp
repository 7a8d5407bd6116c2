#include "thurston/table.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <sstream>

namespace thurston::table {

namespace {

constexpr char kQuintic[] = "0,2,6^2,4,3^3,1^2,4,7";
constexpr char kFramedAtOne[] = "6,2^4,3,4,5,1,0";

std::string fmt(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {"cubic", "0,4,3,1,2,5", {"0", "7.121692805", "-17.64597623", "11.52428342"}, "1.24e-8", 20, 0},
        {"quintic step 1", kQuintic, {"0", "15.332055", "-92.795911", "225.00679", "-242.71367", "96.170733"},
         "0.037*", 1, 1},
        {"quintic step 2", kQuintic, {"0", "18.069912", "-112.83091", "273.38011", "-292.41971", "114.80059"},
         "0.0038*", 2, 2},
        {"quintic limit", kQuintic, {"0", "18.163069", "-113.72167", "276.22221", "-296.09149", "116.42789"},
         "1.84e-6", 13, 0},
        {"exact cubic", "0,3,2,1,4", {"0", "6", "-15", "10"}, "1e-13", 14, 0},
        {"degree 7", "0,3^4,2^3,1,4",
         {"0", "0.20557075", "-181.7478872", "855.1404749", "-2244.547436", "3255.216137", "-2427.230116",
          "723.9632564"},
         "4.13e-8", 18, 0},
        {"framed at 1 step 1", kFramedAtOne, {"1", "-8.73730", "44.7494", "-110.928", "130.960", "-57.0449"},
         "0.0791*", 1, 1},
        {"framed at 1 step 2", kFramedAtOne, {"1", "-5.10905", "28.0816", "-74.57010", "93.9995", "-43.4011"},
         "0.0144*", 2, 2},
        {"framed at 1 step 3", kFramedAtOne, {"1", "-5.82395", "31.5803", "-82.7518", "102.974", "-46.9785"},
         "0.0021*", 3, 3},
        {"degree 6", "0,2,1,3,5,3^3,0",
         {"0", "7.494214522", "-97.01797994", "457.9211574", "-913.0123135", "811.6279094", "-267.0129879"},
         "3.54e-9", 25, 0},
        {"collapse quartic", "0,4,3,2,1,2,0", {"0", "7.45977893", "-32.0733758", "47.0904007", "-22.4768041"},
         "5.49e-9", 36, 0},
        {"collapse sextic", "0,1,5,0,2,1,7,1,0",
         {"0", "20.15184092", "-208.9317665", "827.5262978", "-1559.747539", "1400.650082", "-479.6489149"},
         "6.34e-8", 12, 0},
    };
    return rows;
}

double reference_sum(const ReferenceRow& row) {
    double s = 0.0;
    for (const auto& a : row.coefficients) s += std::stod(a);
    return s;
}

int framing_target(const Combinatorics& c) { return c.image(c.n()) == c.n() ? 1 : 0; }

bool framing_inconsistent(const ReferenceRow& row) {
    double scale = 1.0;
    for (const auto& a : row.coefficients) scale = std::max(scale, std::abs(std::stod(a)));
    const int target = framing_target(parse(row.combinatorics));
    return std::abs(reference_sum(row) - target) > 1e-5 * scale;
}

RowResult run_row(const ReferenceRow& row, const TableOptions& opts) {
    RowResult out;
    out.reference = row;
    out.framing_inconsistent_source = framing_inconsistent(row);
    try {
        const Combinatorics c = parse(row.combinatorics);
        RunOptions ro;
        // Fixed-step rows never stop early.
        ro.tol = row.steps > 0 ? 1e-300 : opts.tol;
        ro.max_iter = row.steps > 0 ? row.steps : opts.max_iter;
        ro.start_digits = opts.start_digits;
        ro.max_digits = opts.max_digits;
        ro.trace = row.steps > 0;
        ro.exec = Execution::serial;
        const RunResult r = run(c, ro);
        out.final_combinatorics = render(r.final_combinatorics);
        out.iterations = r.iterations;
        out.converged = r.converged;
        if (row.steps > 0) {
            if (static_cast<int>(r.trace.size()) < row.steps) {
                out.failure = "run stopped after " + std::to_string(r.trace.size()) + " steps: " + r.message;
                return out;
            }
            const StepRecord& s = r.trace[static_cast<std::size_t>(row.steps - 1)];
            out.coefficients = s.f.to_strings(s.digits);
            out.fit_error = s.fit_error.to_double();
        } else {
            out.coefficients = r.f.to_strings(r.digits);
            out.fit_error = r.fit_error.to_double();
            if (!r.converged) out.failure = "not converged: " + r.message;
        }
        if (out.coefficients.size() != row.coefficients.size()) {
            out.max_deviation = std::numeric_limits<double>::infinity();
        } else {
            const PrecisionContext ctx(opts.start_digits);
            for (std::size_t i = 0; i < row.coefficients.size(); ++i) {
                const double dev = abs(ctx.parse(out.coefficients[i]) - ctx.parse(row.coefficients[i])).to_double();
                out.max_deviation = std::max(out.max_deviation, dev);
            }
        }
    } catch (const std::exception& e) {
        out.failure = e.what();
    }
    return out;
}

std::vector<RowResult> run_table_serial(const std::vector<ReferenceRow>& rows, const TableOptions& opts) {
    std::vector<RowResult> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(run_row(row, opts));
    return out;
}

std::vector<RowResult> run_table_parallel(const std::vector<ReferenceRow>& rows, const TableOptions& opts) {
    std::vector<RowResult> out(rows.size());
    const auto count = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = run_row(rows[static_cast<std::size_t>(i)], opts);
    }
    return out;
}

std::string to_text(const std::vector<RowResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << "== " << r.reference.name << "  (" << r.reference.combinatorics << ")";
        if (r.reference.steps > 0) os << "  after step " << r.reference.steps;
        os << "\n";
        if (r.failure) os << "   failure: " << *r.failure << "\n";
        if (!r.final_combinatorics.empty() && r.final_combinatorics != render(parse(r.reference.combinatorics))) {
            os << "   simplified to " << r.final_combinatorics << "\n";
        }
        os << "   power  computed                reference       deviation\n";
        const std::size_t rows = std::max(r.coefficients.size(), r.reference.coefficients.size());
        for (std::size_t i = 0; i < rows; ++i) {
            const std::string got = i < r.coefficients.size() ? fmt(std::stod(r.coefficients[i]), 14) : "-";
            const std::string ref = i < r.reference.coefficients.size() ? r.reference.coefficients[i] : "-";
            std::string dev = "-";
            if (i < r.coefficients.size() && i < r.reference.coefficients.size()) {
                dev = fmt(std::abs(std::stod(r.coefficients[i]) - std::stod(ref)), 3);
            }
            char line[128];
            std::snprintf(line, sizeof line, "   x^%-3zu  %-22s  %-14s  %s\n", i, got.c_str(), ref.c_str(), dev.c_str());
            os << line;
        }
        os << "   fit error " << fmt(r.fit_error, 3) << " (reference " << r.reference.error << "), iterations "
           << r.iterations << " (reference " << r.reference.iterations << ")\n";
        os << "   max deviation " << fmt(r.max_deviation, 3) << "\n";
        if (r.framing_inconsistent_source) {
            os << "   framing-inconsistent in source: reference coefficients sum to " << fmt(reference_sum(r.reference), 8)
               << ", framing requires " << framing_target(parse(r.reference.combinatorics)) << "\n";
        }
    }
    return os.str();
}

}  // namespace thurston::table
