#include "thurston/pullback.hpp"

#include "thurston/kernels.hpp"

#include <algorithm>

namespace thurston {

namespace {

std::size_t slot_of(const std::vector<int>& critical, int j) {
    const auto it = std::find(critical.begin(), critical.end(), j);
    if (it == critical.end()) throw std::logic_error("index " + std::to_string(j) + " is not critical");
    return static_cast<std::size_t>(it - critical.begin());
}

Real frame_target(const Combinatorics& c, int j, const PrecisionContext& ctx) {
    return c.image(j) == 0 ? ctx.zero() : ctx.one();
}

}  // namespace

MarkedConfiguration init_configuration(const Combinatorics& c, const PrecisionContext& ctx) {
    MarkedConfiguration cfg;
    for (int j = 0; j <= c.n(); ++j) cfg.x.push_back(ctx.ratio(j, c.n()));
    return cfg;
}

CriticalData critical_value_vector(const Combinatorics& c, const MarkedConfiguration& x) {
    CriticalData data;
    data.indices = c.critical_indices();
    for (int j : data.indices) {
        data.multiplicities.push_back(c.local_degree(j) - 1);
        data.values.values.push_back(x.x.at(static_cast<std::size_t>(c.image(j))));
    }
    return data;
}

int last_lap_orientation(const Combinatorics& c) {
    return static_cast<int>(laps(c).back().orientation);
}

RealizedMap mapmake(const Combinatorics& c, const CriticalData& data, const PrecisionContext& ctx,
                    const InversionOptions& opts) {
    return realize_critical_values(data.values, data.multiplicities, last_lap_orientation(c), ctx, opts);
}

NormalizedMap normalize(const Combinatorics& c, const RealizedMap& raw, const PrecisionContext& ctx) {
    const int n = c.n();
    const auto critical = c.critical_indices();
    const auto ls = laps(c);
    auto bound = [&](const std::optional<int>& turning) -> LapBound {
        if (!turning) return std::nullopt;
        return raw.critical_points[slot_of(critical, *turning)];
    };

    Real a;
    Real b;
    try {
        // A critical framing point is the corresponding critical point itself.
        if (c.local_degree(0) > 1) {
            a = raw.critical_points.front();
        } else {
            const Lap& first = ls.front();
            a = solve_monotone(raw.f, frame_target(c, 0, ctx), std::nullopt, bound(first.right),
                               static_cast<int>(first.orientation), ctx);
        }
        if (c.local_degree(n) > 1) {
            b = raw.critical_points.back();
        } else {
            const Lap& last = ls.back();
            b = solve_monotone(raw.f, frame_target(c, n, ctx), bound(last.left), std::nullopt,
                               static_cast<int>(last.orientation), ctx);
        }
    } catch (const RootSolveError& e) {
        throw NormalizationError(std::string("framing point not found: ") + e.what());
    }
    if (!(a < b)) throw NormalizationError("framing points out of order: A = " + a.str(12) + ", B = " + b.str(12));

    NormalizedMap out;
    const Real width = b - a;
    out.f = raw.f.compose_affine(a, width);
    for (const auto& cp : raw.critical_points) out.critical_points.push_back((cp - a) / width);
    out.frame_a = std::move(a);
    out.frame_b = std::move(b);
    return out;
}

MarkedConfiguration pullback_step(const Combinatorics& c, const NormalizedMap& map, const MarkedConfiguration& prev,
                                  const PrecisionContext& ctx, Execution exec) {
    const int n = c.n();
    const auto critical = c.critical_indices();
    const auto ls = laps(c);

    MarkedConfiguration next;
    next.step = prev.step + 1;
    next.x.assign(static_cast<std::size_t>(n + 1), ctx.zero());

    std::vector<kernels::LapSolveTask> tasks;
    std::vector<int> task_index;
    for (int j = 0; j <= n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        if (c.local_degree(j) > 1) {
            next.x[k] = map.critical_points[slot_of(critical, j)];
        } else if (j == 0) {
            next.x[k] = ctx.zero();
        } else if (j == n) {
            next.x[k] = ctx.one();
        } else {
            const Lap& lap = ls[lap_of(ls, j)];
            kernels::LapSolveTask task;
            task.target = prev.x.at(static_cast<std::size_t>(c.image(j)));
            if (lap.left) task.lo = map.critical_points[slot_of(critical, *lap.left)];
            if (lap.right) task.hi = map.critical_points[slot_of(critical, *lap.right)];
            task.orientation = static_cast<int>(lap.orientation);
            tasks.push_back(std::move(task));
            task_index.push_back(j);
        }
    }

    RealVector solved;
    try {
        solved = exec == Execution::parallel ? kernels::lap_solve_parallel(map.f, tasks, ctx)
                                             : kernels::lap_solve_serial(map.f, tasks, ctx);
    } catch (const RootSolveError& e) {
        throw PullbackError(std::string("pullback target outside its lap: ") + e.what());
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) next.x[static_cast<std::size_t>(task_index[t])] = std::move(solved[t]);

    const Real slack = ctx.tolerance() * 10L;
    for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        if (next.x[k + 1] < next.x[k] - slack) {
            throw PullbackError("pulled-back configuration not ordered at index " + std::to_string(j) + ": " +
                                next.x[k].str(12) + " > " + next.x[k + 1].str(12));
        }
    }
    return next;
}

Real fit_error(const Combinatorics& c, const Polynomial& f, const MarkedConfiguration& x) {
    Real sum = x.x.front() * 0L;
    for (int j = 0; j <= c.n(); ++j) {
        const Real diff = f(x.x[static_cast<std::size_t>(j)]) - x.x[static_cast<std::size_t>(c.image(j))];
        sum += diff * diff;
    }
    return sqrt(sum) / static_cast<long>(c.n());
}

std::vector<std::vector<int>> detect_collapse(const MarkedConfiguration& x, const Real& threshold) {
    std::vector<std::vector<int>> groups;
    std::vector<int> run;
    for (std::size_t j = 0; j + 1 < x.x.size(); ++j) {
        if (x.x[j + 1] - x.x[j] < threshold) {
            if (run.empty()) run.push_back(static_cast<int>(j));
            run.push_back(static_cast<int>(j + 1));
        } else if (!run.empty()) {
            groups.push_back(std::move(run));
            run.clear();
        }
    }
    if (!run.empty()) groups.push_back(std::move(run));
    return groups;
}

StepOutcome thurston_step(const Combinatorics& c, const MarkedConfiguration& x, const PrecisionContext& ctx,
                          Execution exec) {
    StepOutcome out;
    MarkedConfiguration here{ctx.adopt(x.x), x.step};
    out.critical = critical_value_vector(c, here);
    InversionOptions opts;
    opts.exec = exec;
    const RealizedMap raw = mapmake(c, out.critical, ctx, opts);
    out.inversion_method = raw.inversion.method;
    out.map = normalize(c, raw, ctx);
    out.next = pullback_step(c, out.map, here, ctx, exec);
    out.fit_error = fit_error(c, out.map.f, out.next);
    return out;
}

namespace {

// Keeps only groups whose internal edges are all non-expansive.
std::vector<std::vector<int>> collapsible(const std::vector<std::vector<int>>& groups,
                                          const std::vector<EdgeClass>& edges) {
    std::vector<std::vector<int>> out;
    for (const auto& g : groups) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < g.size(); ++i) {
            if (edges.at(static_cast<std::size_t>(g[i])).expansive) ok = false;
        }
        if (ok) out.push_back(g);
    }
    return out;
}

// Fused points sit at the mean of their members; the endpoints stay pinned.
MarkedConfiguration merged_configuration(const MarkedConfiguration& x, const std::vector<int>& remap, int new_n,
                                         const PrecisionContext& ctx) {
    MarkedConfiguration out;
    out.step = x.step;
    out.x.assign(static_cast<std::size_t>(new_n + 1), ctx.zero());
    std::vector<long> count(static_cast<std::size_t>(new_n + 1), 0);
    for (std::size_t j = 0; j < x.x.size(); ++j) {
        const auto t = static_cast<std::size_t>(remap[j]);
        out.x[t] += x.x[j];
        ++count[t];
    }
    for (std::size_t t = 0; t < out.x.size(); ++t) out.x[t] /= count[t];
    out.x.front() = ctx.zero();
    out.x.back() = ctx.one();
    return out;
}

}  // namespace

RunResult run(const Combinatorics& input, const RunOptions& opts) {
    RunResult result(input);
    require_valid(input);
    if (opts.tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (opts.start_digits < PrecisionContext::kMinDigits) {
        throw std::invalid_argument("start digits must be at least " + std::to_string(PrecisionContext::kMinDigits));
    }

    Combinatorics c = input;
    // origin[i] lists the input indices fused into current index i.
    std::vector<std::vector<int>> origin;
    for (int j = 0; j <= c.n(); ++j) origin.push_back({j});

    PrecisionContext ctx(opts.start_digits);
    const int max_digits = std::max(opts.max_digits, opts.start_digits);
    MarkedConfiguration x = init_configuration(c, ctx);
    std::vector<EdgeClass> edges = validate(c).edges;
    bool watch_collapse = !std::all_of(edges.begin(), edges.end(), [](const EdgeClass& e) { return e.expansive; });

    std::vector<Real> epoch;  // eps since the last precision change
    std::vector<std::vector<int>> pending;
    int pending_count = 0;

    auto escalate = [&](int step, const std::string& reason) {
        if (ctx.digits() >= max_digits) return false;
        const int to = std::min(ctx.digits() * 2, max_digits);
        result.escalations.push_back({step, ctx.digits(), to, reason});
        ctx = set_precision(ctx, to);
        x.x = ctx.adopt(x.x);
        epoch.clear();
        return true;
    };

    int step = 0;
    while (step < opts.max_iter) {
        const int attempt = step + 1;
        StepOutcome outcome;
        try {
            outcome = thurston_step(c, x, ctx, opts.exec);
        } catch (const std::exception& e) {
            if (escalate(attempt, std::string("solver failure: ") + e.what())) continue;
            result.message = "step " + std::to_string(attempt) + " failed at " + std::to_string(ctx.digits()) +
                             " digits: " + e.what();
            break;
        }

        const Real tol = ctx.make(opts.tol);
        // Non-expansive edges must collapse before a limit counts as converged.
        const bool done = outcome.fit_error <= tol && !watch_collapse;
        if (!done && opts.stall_window > 0 && static_cast<int>(epoch.size()) >= opts.stall_window) {
            const Real& reference = epoch[epoch.size() - static_cast<std::size_t>(opts.stall_window)];
            if (outcome.fit_error > reference * ctx.make(opts.stall_factor)) {
                if (escalate(attempt, "fit error stalled at " + outcome.fit_error.str(4))) continue;
            }
        }

        step = attempt;
        epoch.push_back(outcome.fit_error);
        result.precision_history.push_back(ctx.digits());
        result.error_history.push_back(outcome.fit_error.to_double());
        if (opts.trace) {
            result.trace.push_back({step, outcome.map.f, outcome.next.x, outcome.critical.values.values,
                                    outcome.fit_error, ctx.digits(), outcome.map.frame_a, outcome.map.frame_b,
                                    render(c)});
        }
        x = std::move(outcome.next);
        x.step = step;
        result.f = std::move(outcome.map.f);
        result.fit_error = outcome.fit_error;
        result.iterations = step;
        result.digits = ctx.digits();

        if (done) {
            result.converged = true;
            break;
        }

        if (watch_collapse) {
            const Real threshold = ctx.make(opts.collapse_threshold.value_or(1e-8 / c.n()));
            auto groups = collapsible(detect_collapse(x, threshold), edges);
            if (!groups.empty() && groups == pending) {
                ++pending_count;
            } else {
                pending = groups;
                pending_count = groups.empty() ? 0 : 1;
            }
            if (pending_count >= opts.collapse_window) {
                try {
                    Combinatorics simplified = simplify(c, pending);
                    if (validate(simplified).pass()) {
                        const auto remap = merge_index_map(c.n(), pending);
                        std::vector<std::vector<int>> next_origin(static_cast<std::size_t>(simplified.n() + 1));
                        for (int j = 0; j <= c.n(); ++j) {
                            auto& dst = next_origin[static_cast<std::size_t>(remap[static_cast<std::size_t>(j)])];
                            const auto& src = origin[static_cast<std::size_t>(j)];
                            dst.insert(dst.end(), src.begin(), src.end());
                        }
                        std::vector<std::vector<int>> input_groups;
                        for (const auto& o : next_origin) {
                            if (o.size() > 1) input_groups.push_back(o);
                        }
                        result.collapse = CollapseReport{input_groups, simplified, step};
                        x = merged_configuration(x, remap, simplified.n(), ctx);
                        origin = std::move(next_origin);
                        c = std::move(simplified);
                        result.final_combinatorics = c;
                        edges = validate(c).edges;
                        watch_collapse = !std::all_of(edges.begin(), edges.end(),
                                                      [](const EdgeClass& e) { return e.expansive; });
                        pending.clear();
                        pending_count = 0;
                        epoch.clear();
                    }
                } catch (const CombinatoricsError&) {
                    // images of the groups not yet consistent; keep iterating
                }
            }
        }
    }

    result.x = x.x;
    if (!result.converged && result.message.empty()) {
        result.message = "no convergence after " + std::to_string(result.iterations) + " iterations (eps = " +
                         result.fit_error.str(4) + ")";
    }
    return result;
}

}  // namespace thurston
