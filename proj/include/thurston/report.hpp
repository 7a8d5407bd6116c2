#pragma once

// Structured documents for validation and run results. Every number that
// comes out of the multiprecision engine is stored as a decimal string.

#include "thurston/pullback.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thurston::report {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInvalidCombinatorics = 2,
    kParseError = 3,
    kNotConverged = 4,
};

struct ValidationSummary {
    std::string combinatorics;
    bool pass = false;
    bool expansive = false;
    int degree = 0;
    bool distinct_neighbours = false;
    bool has_critical_point = false;
    bool framed = false;
    bool degrees_consistent = false;
    bool every_point_critical_or_postcritical = false;
    std::vector<int> turning_points;
    std::vector<int> critical_indices;
    std::vector<int> non_expansive_edges;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    friend bool operator==(const ValidationSummary&, const ValidationSummary&) = default;
};

ValidationSummary summarize(const Combinatorics& c);
std::string to_text(const ValidationSummary& v);

struct EscalationEntry {
    int step = 0;
    int from_digits = 0;
    int to_digits = 0;
    std::string reason;

    friend bool operator==(const EscalationEntry&, const EscalationEntry&) = default;
};

struct CollapseEntry {
    std::vector<std::vector<int>> groups;
    std::string simplified;
    int step = 0;

    friend bool operator==(const CollapseEntry&, const CollapseEntry&) = default;
};

struct TraceEntry {
    int step = 0;
    int digits = 0;
    std::string combinatorics;
    std::vector<std::string> coefficients;
    std::vector<std::string> marked_points;
    std::vector<std::string> critical_values;
    std::string fit_error;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct ResultDocument {
    std::string input;
    ValidationSummary validation;
    std::string final_combinatorics;
    int degree = 0;
    std::vector<std::string> coefficients;   // ascending powers
    std::vector<std::string> marked_points;  // x_0 .. x_n of the final combinatorics
    std::string mapping_pattern;
    std::string fit_error;
    int iterations = 0;
    bool converged = false;
    int digits = 0;
    std::vector<int> precision_history;
    std::vector<std::string> error_history;
    std::vector<EscalationEntry> escalations;
    std::optional<CollapseEntry> collapse;
    std::vector<TraceEntry> trace;
    std::string message;

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

ResultDocument make_document(const RunResult& r);

void to_json(nlohmann::json& j, const ValidationSummary& v);
void from_json(const nlohmann::json& j, ValidationSummary& v);
void to_json(nlohmann::json& j, const ResultDocument& d);
void from_json(const nlohmann::json& j, ResultDocument& d);

std::string serialize(const ResultDocument& d, int indent = 2);
/// Throws std::runtime_error on malformed input.
ResultDocument deserialize(const std::string& text);

std::string to_text(const ResultDocument& d);

/// The coefficient strings read back at the document's precision.
Polynomial polynomial_of(const ResultDocument& d);

/// "x,f(x)" rows for `samples` equally spaced points of [0,1] at 17
/// significant digits, then a "# marked" block "j,x,f(x),image,local_degree".
std::string plot_csv(const ResultDocument& d, int samples, Execution exec = Execution::parallel);

}  // namespace thurston::report
