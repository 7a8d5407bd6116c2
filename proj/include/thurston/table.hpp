#pragma once

// Reference coefficient table and a batch harness that recomputes it.

#include "thurston/pullback.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thurston::table {

struct ReferenceRow {
    std::string name;
    std::string combinatorics;
    std::vector<std::string> coefficients;  // ascending powers, constant term included
    std::string error;                      // printed fit error
    int iterations = 0;                     // printed iteration count
    /// Compare after exactly this many steps; 0 compares the converged limit.
    int steps = 0;
};

const std::vector<ReferenceRow>& reference_rows();

/// Sum of the reference coefficients, i.e. the printed f(1).
double reference_sum(const ReferenceRow& row);
/// f(1) required by the framing: 1 when m_n = n, 0 otherwise.
int framing_target(const Combinatorics& c);
/// The printed coefficients violate the framing target.
bool framing_inconsistent(const ReferenceRow& row);

struct RowResult {
    ReferenceRow reference;
    std::vector<std::string> coefficients;
    std::string final_combinatorics;
    double fit_error = 0.0;
    int iterations = 0;
    bool converged = false;
    /// max_i |computed_i - reference_i|; infinite on a degree mismatch.
    double max_deviation = 0.0;
    bool framing_inconsistent_source = false;
    std::optional<std::string> failure;
};

struct TableOptions {
    double tol = 1e-12;
    int max_iter = 100;
    int start_digits = 40;
    int max_digits = 640;
};

RowResult run_row(const ReferenceRow& row, const TableOptions& opts = {});

/// Rows run concurrently; each run is sequential.
std::vector<RowResult> run_table_parallel(const std::vector<ReferenceRow>& rows, const TableOptions& opts = {});
std::vector<RowResult> run_table_serial(const std::vector<ReferenceRow>& rows, const TableOptions& opts = {});

std::string to_text(const std::vector<RowResult>& results);

}  // namespace thurston::table
