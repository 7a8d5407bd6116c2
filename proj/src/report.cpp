#include "thurston/report.hpp"

#include "thurston/kernels.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace thurston::report {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> strings_of(const RealVector& xs, int digits) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.str(digits));
    return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string join_ints(const std::vector<int>& items) {
    std::vector<std::string> s;
    for (int v : items) s.push_back(std::to_string(v));
    return join(s, ",");
}

}  // namespace

ValidationSummary summarize(const Combinatorics& c) {
    const ValidationReport r = validate(c);
    ValidationSummary v;
    v.combinatorics = render(c);
    v.pass = r.pass();
    v.expansive = r.pass() && r.expansive();
    v.degree = r.total_degree;
    v.distinct_neighbours = r.distinct_neighbours;
    v.has_critical_point = r.has_critical_point;
    v.framed = r.framed;
    v.degrees_consistent = r.degrees_consistent;
    v.every_point_critical_or_postcritical = r.every_point_critical_or_postcritical;
    v.turning_points = r.turning_points;
    v.critical_indices = r.critical_indices;
    v.non_expansive_edges = r.non_expansive_edges();
    v.errors = r.errors;
    v.warnings = r.warnings;
    return v;
}

std::string to_text(const ValidationSummary& v) {
    std::ostringstream os;
    os << "combinatorics: " << v.combinatorics << "\n";
    os << "valid: " << (v.pass ? "yes" : "no") << "\n";
    if (v.pass) os << "expansive: " << (v.expansive ? "yes" : "no") << ", degree " << v.degree << "\n";
    os << "turning points: " << join_ints(v.turning_points) << "\n";
    os << "critical indices: " << join_ints(v.critical_indices) << "\n";
    for (const auto& e : v.errors) os << "error: " << e << "\n";
    for (const auto& w : v.warnings) os << "warning: " << w << "\n";
    return os.str();
}

ResultDocument make_document(const RunResult& r) {
    ResultDocument d;
    d.input = render(r.input);
    d.validation = summarize(r.input);
    d.final_combinatorics = render(r.final_combinatorics);
    d.degree = r.f.degree();
    d.digits = r.digits;
    d.coefficients = r.f.to_strings(r.digits);
    d.marked_points = strings_of(r.x, r.digits);
    d.mapping_pattern = mapping_pattern(r.final_combinatorics).text;
    d.fit_error = r.fit_error.str(6);
    d.iterations = r.iterations;
    d.converged = r.converged;
    d.precision_history = r.precision_history;
    for (double e : r.error_history) d.error_history.push_back(format_double(e));
    for (const auto& e : r.escalations) d.escalations.push_back({e.step, e.from_digits, e.to_digits, e.reason});
    if (r.collapse) d.collapse = CollapseEntry{r.collapse->groups, render(r.collapse->simplified), r.collapse->step};
    for (const auto& s : r.trace) {
        d.trace.push_back({s.step, s.digits, s.combinatorics, s.f.to_strings(s.digits), strings_of(s.x, s.digits),
                           strings_of(s.critical_values, s.digits), s.fit_error.str(6)});
    }
    d.message = r.message;
    return d;
}

void to_json(json& j, const ValidationSummary& v) {
    j = json{{"combinatorics", v.combinatorics},
             {"pass", v.pass},
             {"expansive", v.expansive},
             {"degree", v.degree},
             {"conditions",
              {{"distinct_neighbours", v.distinct_neighbours},
               {"has_critical_point", v.has_critical_point},
               {"framed", v.framed},
               {"degrees_consistent", v.degrees_consistent},
               {"every_point_critical_or_postcritical", v.every_point_critical_or_postcritical}}},
             {"turning_points", v.turning_points},
             {"critical_indices", v.critical_indices},
             {"non_expansive_edges", v.non_expansive_edges},
             {"errors", v.errors},
             {"warnings", v.warnings}};
}

void from_json(const json& j, ValidationSummary& v) {
    j.at("combinatorics").get_to(v.combinatorics);
    j.at("pass").get_to(v.pass);
    j.at("expansive").get_to(v.expansive);
    j.at("degree").get_to(v.degree);
    const json& c = j.at("conditions");
    c.at("distinct_neighbours").get_to(v.distinct_neighbours);
    c.at("has_critical_point").get_to(v.has_critical_point);
    c.at("framed").get_to(v.framed);
    c.at("degrees_consistent").get_to(v.degrees_consistent);
    c.at("every_point_critical_or_postcritical").get_to(v.every_point_critical_or_postcritical);
    j.at("turning_points").get_to(v.turning_points);
    j.at("critical_indices").get_to(v.critical_indices);
    j.at("non_expansive_edges").get_to(v.non_expansive_edges);
    j.at("errors").get_to(v.errors);
    j.at("warnings").get_to(v.warnings);
}

void to_json(json& j, const ResultDocument& d) {
    json escalations = json::array();
    for (const auto& e : d.escalations) {
        escalations.push_back(
            {{"step", e.step}, {"from_digits", e.from_digits}, {"to_digits", e.to_digits}, {"reason", e.reason}});
    }
    json trace = json::array();
    for (const auto& t : d.trace) {
        trace.push_back({{"step", t.step},
                         {"digits", t.digits},
                         {"combinatorics", t.combinatorics},
                         {"coefficients", t.coefficients},
                         {"marked_points", t.marked_points},
                         {"critical_values", t.critical_values},
                         {"fit_error", t.fit_error}});
    }
    json collapse = nullptr;
    if (d.collapse) {
        collapse = {{"groups", d.collapse->groups}, {"simplified", d.collapse->simplified}, {"step", d.collapse->step}};
    }
    j = json{{"input", d.input},
             {"validation", d.validation},
             {"final_combinatorics", d.final_combinatorics},
             {"degree", d.degree},
             {"coefficients", d.coefficients},
             {"marked_points", d.marked_points},
             {"mapping_pattern", d.mapping_pattern},
             {"fit_error", d.fit_error},
             {"iterations", d.iterations},
             {"converged", d.converged},
             {"digits", d.digits},
             {"precision_history", d.precision_history},
             {"error_history", d.error_history},
             {"escalations", escalations},
             {"collapse", collapse},
             {"trace", trace},
             {"message", d.message}};
}

void from_json(const json& j, ResultDocument& d) {
    j.at("input").get_to(d.input);
    j.at("validation").get_to(d.validation);
    j.at("final_combinatorics").get_to(d.final_combinatorics);
    j.at("degree").get_to(d.degree);
    j.at("coefficients").get_to(d.coefficients);
    j.at("marked_points").get_to(d.marked_points);
    j.at("mapping_pattern").get_to(d.mapping_pattern);
    j.at("fit_error").get_to(d.fit_error);
    j.at("iterations").get_to(d.iterations);
    j.at("converged").get_to(d.converged);
    j.at("digits").get_to(d.digits);
    j.at("precision_history").get_to(d.precision_history);
    j.at("error_history").get_to(d.error_history);
    d.escalations.clear();
    for (const auto& e : j.at("escalations")) {
        d.escalations.push_back({e.at("step").get<int>(), e.at("from_digits").get<int>(),
                                 e.at("to_digits").get<int>(), e.at("reason").get<std::string>()});
    }
    d.collapse.reset();
    if (const json& c = j.at("collapse"); !c.is_null()) {
        d.collapse = CollapseEntry{c.at("groups").get<std::vector<std::vector<int>>>(),
                                   c.at("simplified").get<std::string>(), c.at("step").get<int>()};
    }
    d.trace.clear();
    for (const auto& t : j.at("trace")) {
        d.trace.push_back({t.at("step").get<int>(), t.at("digits").get<int>(),
                           t.at("combinatorics").get<std::string>(),
                           t.at("coefficients").get<std::vector<std::string>>(),
                           t.at("marked_points").get<std::vector<std::string>>(),
                           t.at("critical_values").get<std::vector<std::string>>(),
                           t.at("fit_error").get<std::string>()});
    }
    j.at("message").get_to(d.message);
}

std::string serialize(const ResultDocument& d, int indent) { return json(d).dump(indent); }

ResultDocument deserialize(const std::string& text) {
    try {
        return json::parse(text).get<ResultDocument>();
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed result document: ") + e.what());
    }
}

std::string to_text(const ResultDocument& d) {
    std::ostringstream os;
    os << "input: " << d.input << "\n";
    if (d.final_combinatorics != d.input) os << "final combinatorics: " << d.final_combinatorics << "\n";
    os << "degree: " << d.degree << "\n";
    os << "converged: " << (d.converged ? "yes" : "no") << " after " << d.iterations << " iterations\n";
    os << "fit error: " << d.fit_error << "\n";
    os << "digits: " << d.digits << "\n";
    os << "mapping pattern: " << d.mapping_pattern << "\n";
    os << "coefficients (ascending):\n";
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) os << "  x^" << i << ": " << d.coefficients[i] << "\n";
    os << "marked points:\n";
    for (std::size_t i = 0; i < d.marked_points.size(); ++i) os << "  x_" << i << " = " << d.marked_points[i] << "\n";
    for (const auto& e : d.escalations) {
        os << "precision escalated at step " << e.step << ": " << e.from_digits << " -> " << e.to_digits << " digits ("
           << e.reason << ")\n";
    }
    if (d.collapse) {
        os << "collapse at step " << d.collapse->step << ":";
        for (const auto& g : d.collapse->groups) os << " [" << join_ints(g) << "]";
        os << " -> " << d.collapse->simplified << "\n";
    }
    for (const auto& w : d.validation.warnings) os << "warning: " << w << "\n";
    if (!d.message.empty()) os << "message: " << d.message << "\n";
    return os.str();
}

Polynomial polynomial_of(const ResultDocument& d) {
    if (d.coefficients.empty()) throw std::runtime_error("result document has no coefficients");
    const PrecisionContext ctx(std::max(d.digits, PrecisionContext::kMinDigits));
    RealVector a;
    for (const auto& s : d.coefficients) a.push_back(ctx.parse(s));
    return Polynomial(std::move(a));
}

std::string plot_csv(const ResultDocument& d, int samples, Execution exec) {
    if (samples < 2) throw std::invalid_argument("plot needs at least 2 samples");
    const Polynomial f = polynomial_of(d);
    const PrecisionContext ctx(std::max(d.digits, PrecisionContext::kMinDigits));
    RealVector xs;
    xs.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) xs.push_back(ctx.ratio(k, samples - 1));
    const RealVector ys = exec == Execution::parallel ? kernels::sample_parallel(f, xs) : kernels::sample_serial(f, xs);

    std::ostringstream os;
    os << "x,f(x)\n";
    for (std::size_t k = 0; k < xs.size(); ++k) os << xs[k].str(17) << "," << ys[k].str(17) << "\n";

    const Combinatorics c = parse(d.final_combinatorics);
    os << "# marked\n";
    os << "j,x,f(x),image,local_degree\n";
    for (std::size_t j = 0; j < d.marked_points.size(); ++j) {
        const Real x = ctx.parse(d.marked_points[j]);
        const int jj = static_cast<int>(j);
        os << j << "," << x.str(17) << "," << f(x).str(17) << "," << c.image(jj) << "," << c.local_degree(jj) << "\n";
    }
    return os.str();
}

}  // namespace thurston::report
