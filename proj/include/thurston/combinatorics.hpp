#pragma once

// Combinatorics of critically finite real polynomial maps: the image index
// m_j of each marked point together with its local degree d_j.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thurston {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CombinatoricsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Combinatorics {
public:
    /// Local degrees default to 2 at turning points and 1 elsewhere.
    explicit Combinatorics(std::vector<int> images);
    Combinatorics(std::vector<int> images, std::vector<int> local_degrees);

    /// Number of marked intervals; there are n + 1 marked points.
    int n() const { return static_cast<int>(m_.size()) - 1; }
    const std::vector<int>& images() const { return m_; }
    const std::vector<int>& local_degrees() const { return d_; }
    int image(int j) const { return m_.at(static_cast<std::size_t>(j)); }
    int local_degree(int j) const { return d_.at(static_cast<std::size_t>(j)); }

    /// 1 + sum_j (d_j - 1)
    int total_degree() const;
    bool is_turning_point(int j) const;
    std::vector<int> turning_points() const;
    /// All j with d_j > 1, ascending.
    std::vector<int> critical_indices() const;
    /// Endpoint j in {0, n} lies on a cycle of j -> m_j.
    bool is_periodic(int j) const;

    friend bool operator==(const Combinatorics&, const Combinatorics&) = default;

private:
    std::vector<int> m_;
    std::vector<int> d_;
};

/// item ("," item)*, item = INT ("^" INT)?, whitespace ignored.
Combinatorics parse(std::string_view text);
/// Canonical form: superscripts only where d_j differs from the default.
std::string render(const Combinatorics& c);

struct EdgeClass {
    int left = 0;  // edge [left, left + 1]
    bool expansive = false;
};

struct ValidationReport {
    bool distinct_neighbours = false;  // condition 1
    bool has_critical_point = false;   // condition 2
    bool framed = false;               // condition 3
    bool degrees_consistent = false;   // condition 6
    bool every_point_critical_or_postcritical = false;  // condition 5 (advisory)
    std::vector<EdgeClass> edges;      // condition 4 (reported, not required)
    int total_degree = 0;
    std::vector<int> turning_points;
    std::vector<int> critical_indices;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool pass() const { return distinct_neighbours && has_critical_point && framed && degrees_consistent; }
    bool expansive() const;
    std::vector<int> non_expansive_edges() const;
};

ValidationReport validate(const Combinatorics& c);

/// Throws CombinatoricsError with the report's errors when validation fails.
void require_valid(const Combinatorics& c);

/// Per-edge expansiveness via reachability on the PL edge graph.
/// Requires conditions 1-3.
std::vector<EdgeClass> expansiveness(const Combinatorics& c);

enum class Orientation { decreasing = -1, increasing = 1 };

struct Lap {
    std::optional<int> left;   // turning-point index, nullopt = -inf
    std::optional<int> right;  // turning-point index, nullopt = +inf
    Orientation orientation = Orientation::increasing;

    bool contains(int j) const;
    friend bool operator==(const Lap&, const Lap&) = default;
};

/// Laps bounded by turning points only; first and last laps are unbounded.
std::vector<Lap> laps(const Combinatorics& c);
/// The lap containing index j; a turning point belongs to the lap on its left.
std::size_t lap_of(const std::vector<Lap>& ls, int j);

/// F(n x)/n for the PL model F with F(j) = m_j.
double pl_eval(const Combinatorics& c, double x);

struct OrbitStep {
    int index = 0;
    int local_degree = 1;
};

struct CriticalOrbit {
    int start = 0;
    std::vector<OrbitStep> path;  // start first, up to the first repeated index
    int cycle_entry = 0;          // the index the path returns to
    int period = 0;               // length of the terminal cycle
    int preperiod = 0;
};

struct MappingPattern {
    std::vector<CriticalOrbit> orbits;
    std::string text;
};

MappingPattern mapping_pattern(const Combinatorics& c);

/// Fuses each group of consecutive indices to one marked point. The fused
/// point has local degree 1 + sum (d_j - 1); images are remapped.
Combinatorics simplify(const Combinatorics& c, const std::vector<std::vector<int>>& merge_groups);

/// Index map old -> new induced by a merge; throws on malformed groups.
std::vector<int> merge_index_map(int n, const std::vector<std::vector<int>>& merge_groups);

}  // namespace thurston
