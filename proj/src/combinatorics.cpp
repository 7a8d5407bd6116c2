#include "thurston/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace thurston {

namespace {

std::vector<int> default_degrees(const std::vector<int>& m) {
    std::vector<int> d(m.size(), 1);
    for (std::size_t j = 1; j + 1 < m.size(); ++j) {
        if ((m[j] - m[j - 1]) * (m[j + 1] - m[j]) < 0) d[j] = 2;
    }
    return d;
}

void check_shape(const std::vector<int>& m, const std::vector<int>& d) {
    if (m.size() < 2) throw CombinatoricsError("combinatorics needs at least two marked points");
    if (d.size() != m.size()) throw CombinatoricsError("one local degree per marked point is required");
    const int n = static_cast<int>(m.size()) - 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < 0 || m[j] > n) {
            throw CombinatoricsError("image index " + std::to_string(m[j]) + " at position " + std::to_string(j) +
                                     " is outside 0.." + std::to_string(n));
        }
        if (d[j] < 1) {
            throw CombinatoricsError("local degree at position " + std::to_string(j) + " must be at least 1");
        }
    }
}

}  // namespace

Combinatorics::Combinatorics(std::vector<int> images) : m_(std::move(images)) {
    d_ = default_degrees(m_);
    check_shape(m_, d_);
}

Combinatorics::Combinatorics(std::vector<int> images, std::vector<int> local_degrees)
    : m_(std::move(images)), d_(std::move(local_degrees)) {
    check_shape(m_, d_);
}

int Combinatorics::total_degree() const {
    return std::accumulate(d_.begin(), d_.end(), 1, [](int acc, int dj) { return acc + dj - 1; });
}

bool Combinatorics::is_turning_point(int j) const {
    if (j <= 0 || j >= n()) return false;
    const auto k = static_cast<std::size_t>(j);
    return (m_[k] - m_[k - 1]) * (m_[k + 1] - m_[k]) < 0;
}

std::vector<int> Combinatorics::turning_points() const {
    std::vector<int> out;
    for (int j = 1; j < n(); ++j) {
        if (is_turning_point(j)) out.push_back(j);
    }
    return out;
}

std::vector<int> Combinatorics::critical_indices() const {
    std::vector<int> out;
    for (int j = 0; j <= n(); ++j) {
        if (local_degree(j) > 1) out.push_back(j);
    }
    return out;
}

bool Combinatorics::is_periodic(int j) const {
    int k = j;
    for (int step = 0; step <= n() + 1; ++step) {
        k = image(k);
        if (k == j) return true;
    }
    return false;
}

Combinatorics parse(std::string_view text) {
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    }
    if (compact.empty()) throw ParseError("empty combinatorics");

    std::vector<int> m;
    std::vector<std::optional<int>> explicit_degree;

    auto read_int = [&](std::size_t& pos, const char* what) {
        int value = 0;
        const char* first = compact.data() + pos;
        const char* last = compact.data() + compact.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
            throw ParseError(std::string("expected ") + what + " at column " + std::to_string(pos + 1) + " in '" +
                             compact + "'");
        }
        pos += static_cast<std::size_t>(ptr - first);
        return value;
    };

    std::size_t pos = 0;
    while (true) {
        m.push_back(read_int(pos, "an integer"));
        std::optional<int> degree;
        if (pos < compact.size() && compact[pos] == '^') {
            ++pos;
            degree = read_int(pos, "a local degree");
            if (*degree < 1) throw ParseError("local degree must be at least 1, got " + std::to_string(*degree));
        }
        explicit_degree.push_back(degree);
        if (pos == compact.size()) break;
        if (compact[pos] != ',') {
            throw ParseError("unexpected '" + std::string(1, compact[pos]) + "' at column " + std::to_string(pos + 1));
        }
        ++pos;
    }

    if (m.size() < 2) throw ParseError("combinatorics needs at least two entries");
    const int n = static_cast<int>(m.size()) - 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < 0 || m[j] > n) {
            throw ParseError("index " + std::to_string(m[j]) + " at position " + std::to_string(j) +
                             " out of range 0.." + std::to_string(n));
        }
    }
    std::vector<int> d = default_degrees(m);
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (explicit_degree[j]) d[j] = *explicit_degree[j];
    }
    return Combinatorics(std::move(m), std::move(d));
}

std::string render(const Combinatorics& c) {
    const auto defaults = default_degrees(c.images());
    std::ostringstream os;
    for (int j = 0; j <= c.n(); ++j) {
        if (j > 0) os << ',';
        os << c.image(j);
        if (c.local_degree(j) != defaults[static_cast<std::size_t>(j)]) os << '^' << c.local_degree(j);
    }
    return os.str();
}

bool ValidationReport::expansive() const {
    return std::all_of(edges.begin(), edges.end(), [](const EdgeClass& e) { return e.expansive; });
}

std::vector<int> ValidationReport::non_expansive_edges() const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (!e.expansive) out.push_back(e.left);
    }
    return out;
}

std::vector<EdgeClass> expansiveness(const Combinatorics& c) {
    const int n = c.n();
    // Edge e = [e, e+1] maps onto the consecutive edges spanned by its endpoint images.
    auto successors = [&](int e) {
        const int lo = std::min(c.image(e), c.image(e + 1));
        const int hi = std::max(c.image(e), c.image(e + 1));
        std::vector<int> out;
        for (int k = lo; k < hi; ++k) out.push_back(k);
        return out;
    };
    auto has_critical_end = [&](int e) { return c.local_degree(e) > 1 || c.local_degree(e + 1) > 1; };

    std::vector<EdgeClass> result;
    for (int e = 0; e < n; ++e) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{e};
        seen[static_cast<std::size_t>(e)] = 1;
        bool expansive = false;
        while (!stack.empty() && !expansive) {
            const int cur = stack.back();
            stack.pop_back();
            if (has_critical_end(cur)) {
                expansive = true;
                break;
            }
            for (int next : successors(cur)) {
                if (!seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = 1;
                    stack.push_back(next);
                }
            }
        }
        result.push_back({e, expansive});
    }
    return result;
}

ValidationReport validate(const Combinatorics& c) {
    ValidationReport r;
    const int n = c.n();
    r.total_degree = c.total_degree();
    r.turning_points = c.turning_points();
    r.critical_indices = c.critical_indices();

    r.distinct_neighbours = true;
    for (int j = 0; j < n; ++j) {
        if (c.image(j) == c.image(j + 1)) {
            r.distinct_neighbours = false;
            r.errors.push_back("condition 1: m_" + std::to_string(j) + " = m_" + std::to_string(j + 1) + " = " +
                               std::to_string(c.image(j)));
        }
    }

    r.has_critical_point = r.total_degree >= 2;
    if (!r.has_critical_point) r.errors.push_back("condition 2: no critical point (degree < 2)");

    auto framed_end = [&](int j) { return c.image(j) == 0 || c.image(j) == n; };
    r.framed = framed_end(0) && framed_end(n);
    if (!r.framed) {
        r.errors.push_back("condition 3: framing violated (m_0 and m_n must be 0 or " + std::to_string(n) + ")");
    }

    r.degrees_consistent = true;
    for (int j = 1; j < n; ++j) {
        const bool turning = c.is_turning_point(j);
        const bool even = c.local_degree(j) % 2 == 0;
        if (turning != even) {
            r.degrees_consistent = false;
            r.errors.push_back("condition 6: local degree " + std::to_string(c.local_degree(j)) + " at index " +
                               std::to_string(j) + (turning ? " must be even (turning point)" : " must be odd"));
        }
    }
    for (int j : {0, n}) {
        if (c.local_degree(j) % 2 == 0) {
            r.degrees_consistent = false;
            r.errors.push_back("condition 6: endpoint " + std::to_string(j) + " must have odd local degree");
        } else if (r.framed && c.local_degree(j) != 1 && c.is_periodic(j)) {
            r.degrees_consistent = false;
            r.errors.push_back("condition 6: periodic endpoint " + std::to_string(j) + " must have local degree 1");
        }
    }

    // Condition 5 (advisory): each interior index is critical or postcritical.
    std::vector<char> covered(static_cast<std::size_t>(n + 1), 0);
    for (int j : r.critical_indices) {
        int k = j;
        for (int step = 0; step <= n + 1; ++step) {
            k = c.image(k);
            if (covered[static_cast<std::size_t>(k)]) break;
            covered[static_cast<std::size_t>(k)] = 1;
        }
        covered[static_cast<std::size_t>(j)] = 1;
    }
    r.every_point_critical_or_postcritical = true;
    for (int j = 1; j < n; ++j) {
        if (!covered[static_cast<std::size_t>(j)]) {
            r.every_point_critical_or_postcritical = false;
            r.warnings.push_back("index " + std::to_string(j) + " is neither critical nor postcritical");
        }
    }

    if (r.distinct_neighbours && r.framed) {
        r.edges = expansiveness(c);
        for (const auto& e : r.edges) {
            if (!e.expansive) {
                r.warnings.push_back("edge [" + std::to_string(e.left) + "," + std::to_string(e.left + 1) +
                                     "] not expansive");
            }
        }
    }
    return r;
}

void require_valid(const Combinatorics& c) {
    const auto report = validate(c);
    if (report.pass()) return;
    std::string msg = "invalid combinatorics " + render(c);
    for (const auto& e : report.errors) msg += "; " + e;
    throw CombinatoricsError(msg);
}

bool Lap::contains(int j) const {
    return (!left || *left < j) && (!right || j <= *right);
}

std::vector<Lap> laps(const Combinatorics& c) {
    const auto turning = c.turning_points();
    std::vector<Lap> out;
    std::optional<int> left;
    for (int t : turning) {
        const int from = left ? *left : 0;
        out.push_back({left, t, c.image(t) > c.image(from) ? Orientation::increasing : Orientation::decreasing});
        left = t;
    }
    const int from = left ? *left : 0;
    out.push_back({left, std::nullopt,
                   c.image(c.n()) > c.image(from) ? Orientation::increasing : Orientation::decreasing});
    return out;
}

std::size_t lap_of(const std::vector<Lap>& ls, int j) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].contains(j)) return i;
    }
    return ls.size() - 1;
}

double pl_eval(const Combinatorics& c, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("pl_eval: x must lie in [0,1]");
    const int n = c.n();
    double t = x * n;
    const double nearest = std::round(t);
    if (std::abs(t - nearest) <= 1e-12 * n) t = nearest;
    const int j = std::min(static_cast<int>(std::floor(t)), n - 1);
    const double frac = t - j;
    const double F = c.image(j) + frac * (c.image(j + 1) - c.image(j));
    return F / n;
}

MappingPattern mapping_pattern(const Combinatorics& c) {
    MappingPattern pattern;
    std::set<int> shown;
    std::ostringstream text;
    auto label = [&](int j) {
        std::string s = std::to_string(j);
        if (c.local_degree(j) > 1) s += "[" + std::to_string(c.local_degree(j)) + "]";
        return s;
    };
    for (int start : c.critical_indices()) {
        CriticalOrbit orbit;
        orbit.start = start;
        std::vector<int> seen;
        int k = start;
        while (std::find(seen.begin(), seen.end(), k) == seen.end()) {
            seen.push_back(k);
            orbit.path.push_back({k, c.local_degree(k)});
            k = c.image(k);
        }
        orbit.cycle_entry = k;
        const auto entry = std::find(seen.begin(), seen.end(), k);
        orbit.preperiod = static_cast<int>(entry - seen.begin());
        orbit.period = static_cast<int>(seen.end() - entry);
        pattern.orbits.push_back(orbit);

        if (shown.count(start)) continue;
        if (!text.str().empty()) text << "; ";
        for (const auto& step : orbit.path) {
            text << label(step.index) << " -> ";
            shown.insert(step.index);
        }
        text << label(orbit.cycle_entry);
        text << (orbit.period == 1 ? " (fixed)" : " (period " + std::to_string(orbit.period) + ")");
    }
    pattern.text = text.str();
    return pattern;
}

std::vector<int> merge_index_map(int n, const std::vector<std::vector<int>>& merge_groups) {
    std::vector<int> group_of(static_cast<std::size_t>(n + 1), -1);
    for (std::size_t g = 0; g < merge_groups.size(); ++g) {
        auto group = merge_groups[g];
        if (group.empty()) throw CombinatoricsError("empty merge group");
        std::sort(group.begin(), group.end());
        for (std::size_t i = 0; i < group.size(); ++i) {
            const int j = group[i];
            if (j < 0 || j > n) throw CombinatoricsError("merge index " + std::to_string(j) + " out of range");
            if (i > 0 && j != group[i - 1] + 1) throw CombinatoricsError("merge group is not consecutive");
            if (group_of[static_cast<std::size_t>(j)] != -1) {
                throw CombinatoricsError("index " + std::to_string(j) + " appears in two merge groups");
            }
            group_of[static_cast<std::size_t>(j)] = static_cast<int>(g);
        }
    }
    std::vector<int> remap(static_cast<std::size_t>(n + 1));
    int next = -1;
    for (int j = 0; j <= n; ++j) {
        const int g = group_of[static_cast<std::size_t>(j)];
        if (j == 0 || g == -1 || g != group_of[static_cast<std::size_t>(j - 1)]) ++next;
        remap[static_cast<std::size_t>(j)] = next;
    }
    return remap;
}

Combinatorics simplify(const Combinatorics& c, const std::vector<std::vector<int>>& merge_groups) {
    const int n = c.n();
    const auto remap = merge_index_map(n, merge_groups);
    const int new_n = remap.back();
    if (new_n < 1) throw CombinatoricsError("merge leaves fewer than two marked points");

    std::vector<int> images(static_cast<std::size_t>(new_n + 1), -1);
    std::vector<int> degrees(static_cast<std::size_t>(new_n + 1), 1);
    for (int j = 0; j <= n; ++j) {
        const auto target = static_cast<std::size_t>(remap[static_cast<std::size_t>(j)]);
        const int img = remap[static_cast<std::size_t>(c.image(j))];
        if (images[target] == -1) {
            images[target] = img;
        } else if (images[target] != img) {
            throw CombinatoricsError("inconsistent merge: images of fused point " + std::to_string(target) +
                                     " do not land in a single merged point");
        }
        degrees[target] += c.local_degree(j) - 1;
    }
    return Combinatorics(std::move(images), std::move(degrees));
}

}  // namespace thurston
