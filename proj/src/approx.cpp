#include "influence/approx.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "influence/propagation.hpp"
#include "influence/twins.hpp"

namespace influence {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

RatioSpec RatioSpec::preset(Preset p) {
    RatioSpec spec;
    spec.preset_ = p;
    switch (p) {
        case Preset::Log2:
            spec.name_ = "log2";
            break;
        case Preset::Sqrt:
            spec.name_ = "sqrt";
            break;
        case Preset::Linear:
            spec.name_ = "linear";
            break;
    }
    return spec;
}

RatioSpec RatioSpec::from_name(const std::string& name) {
    if (name == "log2") return preset(Preset::Log2);
    if (name == "sqrt") return preset(Preset::Sqrt);
    if (name == "linear") return preset(Preset::Linear);
    throw std::invalid_argument("unknown ratio preset: " + name);
}

RatioSpec RatioSpec::table(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("empty ratio table");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1])
            throw std::invalid_argument("ratio table must be monotone non-decreasing");
    RatioSpec spec;
    spec.tabulated_ = true;
    spec.table_ = std::move(values);
    spec.name_ = "table";
    return spec;
}

double RatioSpec::value(std::int64_t n) const {
    if (n < 1) throw std::domain_error("ratio functions are defined on positive integers");
    if (tabulated_) {
        if (n > static_cast<std::int64_t>(table_.size()))
            throw std::domain_error("n beyond tabulated ratio domain");
        return table_[static_cast<std::size_t>(n - 1)];
    }
    switch (preset_) {
        case Preset::Log2:
            return std::log2(static_cast<double>(n));
        case Preset::Sqrt:
            return std::sqrt(static_cast<double>(n));
        case Preset::Linear:
            return static_cast<double>(n);
    }
    return static_cast<double>(n);
}

std::int64_t RatioSpec::inverse(double y) const {
    if (tabulated_) {
        for (std::size_t i = 0; i < table_.size(); ++i)
            if (table_[i] >= y) return static_cast<std::int64_t>(i + 1);
        throw std::domain_error("y beyond tabulated ratio range");
    }
    if (value(1) >= y) return 1;
    std::int64_t hi = 1;
    const std::int64_t limit = std::int64_t{1} << 62;
    while (value(hi) < y) {
        if (hi >= limit) throw std::domain_error("inverse query out of range");
        hi *= 2;
    }
    std::int64_t lo = hi / 2;  // value(lo) < y <= value(hi)
    while (lo + 1 < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (value(mid) >= y)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

SolveResult twin_approx_open(const Graph& graph, int k) {
    if (k < 0 || k > graph.vertex_count()) throw std::invalid_argument("budget k outside [0, n]");
    auto start = Clock::now();
    ThresholdAssignment thr = assign_thresholds(graph, ThresholdScheme::Unanimity);
    TwinPartition partition = false_twin_classes(graph);

    // Degree-0 classes are skipped: their members activate for free with any
    // seed set, so they are counted by the final propagation instead.
    const TwinClass* best = nullptr;
    std::uint64_t examined = 0;
    for (const TwinClass& cls : partition.classes) {
        ++examined;
        if (cls.common_degree < 1 || cls.common_degree > k) continue;
        if (best == nullptr) {
            best = &cls;
            continue;
        }
        if (cls.members.size() != best->members.size()) {
            if (cls.members.size() > best->members.size()) best = &cls;
        } else if (cls.common_degree != best->common_degree) {
            if (cls.common_degree < best->common_degree) best = &cls;
        } else if (cls.members.front() < best->members.front()) {
            best = &cls;
        }
    }

    SolveResult result;
    if (best != nullptr) result.seeds = best->neighborhood;
    result.open_value = static_cast<int>(sigma_open(graph, thr, result.seeds).size());
    result.closed_value = result.open_value + static_cast<int>(result.seeds.size());
    result.exact = false;
    result.explored = examined;
    result.elapsed_ms = ms_since(start);
    return result;
}

SolveResult closed_from_open(const Graph& graph, const ThresholdAssignment& thr, int k,
                             const OpenSolver& solver) {
    if (k < 0 || k > graph.vertex_count()) throw std::invalid_argument("budget k outside [0, n]");
    auto start = Clock::now();
    SolveResult inner = solver(graph, thr, k);
    VertexSet seeds = inner.seeds;
    if (static_cast<int>(seeds.size()) > k)
        throw std::invalid_argument("open solver returned more than k seeds");

    VertexSet closed = sigma_closed(graph, thr, seeds);
    // Pad to exactly k seeds. Vertices outside sigma[S] are preferred: they
    // cannot turn an already activated vertex into a seed.
    for (int pass = 0; pass < 2 && static_cast<int>(seeds.size()) < k; ++pass) {
        for (VertexId v = 0; v < graph.vertex_count() && static_cast<int>(seeds.size()) < k; ++v) {
            if (contains(seeds, v)) continue;
            if (pass == 0 && contains(closed, v)) continue;
            seeds.insert(std::lower_bound(seeds.begin(), seeds.end(), v), v);
        }
    }

    SolveResult result;
    result.seeds = seeds;
    result.open_value = static_cast<int>(sigma_open(graph, thr, seeds).size());
    result.closed_value = result.open_value + static_cast<int>(seeds.size());
    result.exact = inner.exact;
    result.explored = inner.explored;
    result.elapsed_ms = ms_since(start);
    return result;
}

GreedyResult bounded_degree_approx(const Graph& graph, int k) {
    if (k < 0 || k > graph.vertex_count()) throw std::invalid_argument("budget k outside [0, n]");
    if (graph.max_degree() < 1)
        throw std::invalid_argument("bounded-degree greedy requires max degree >= 1");
    auto start = Clock::now();
    ThresholdAssignment thr = assign_thresholds(graph, ThresholdScheme::Unanimity);

    VertexSet seeds;
    VertexSet picks;
    int budget = k;
    std::uint64_t examined = 0;
    while (true) {
        VertexId best = -1;
        int best_cost = 0;
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            if (contains(seeds, v) || contains(picks, v)) continue;
            // Never seed an earlier pick: that would move it out of the
            // open set.
            if (!sets_disjoint(graph.neighbors(v), picks)) continue;
            ++examined;
            int cost = static_cast<int>(set_difference(graph.neighbors(v), seeds).size());
            if (cost > budget) continue;
            if (best < 0 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best < 0) break;
        seeds = set_union(seeds, graph.neighbors(best));
        budget -= best_cost;
        picks.insert(std::lower_bound(picks.begin(), picks.end(), best), best);
    }

    GreedyResult out;
    out.picks = picks;
    out.result.seeds = seeds;
    out.result.open_value = static_cast<int>(sigma_open(graph, thr, seeds).size());
    out.result.closed_value = out.result.open_value + static_cast<int>(seeds.size());
    out.result.exact = false;
    out.result.explored = examined;
    out.result.elapsed_ms = ms_since(start);
    return out;
}

FptRatioResult fpt_ratio_approx(const Graph& graph, int k, const RatioSpec& ratio,
                                const SolverOptions& options) {
    const int n = graph.vertex_count();
    if (k < 0 || k > n) throw std::invalid_argument("budget k outside [0, n]");
    double twin_ratio = k < 1024 ? std::ldexp(1.0, k) : std::numeric_limits<double>::infinity();
    double target = ratio.value(std::max<std::int64_t>(1, n));

    FptRatioResult out;
    if (twin_ratio <= target) {
        out.result = twin_approx_open(graph, k);
        out.used_exact = false;
    } else {
        Instance inst;
        inst.graph = graph;
        inst.thresholds = assign_thresholds(graph, ThresholdScheme::Unanimity);
        inst.k = k;
        out.result = solve_max_open_exact(inst, options);
        out.used_exact = true;
    }
    return out;
}

VertexSet max_independent_set_via_influence(const Graph& graph, const SolverOptions& options) {
    const int n = graph.vertex_count();
    Instance inst;
    inst.graph = graph;
    inst.thresholds = assign_thresholds(graph, ThresholdScheme::Unanimity);

    SolveResult best;
    best.open_value = -1;
    for (int k = 1; k <= n; ++k) {
        inst.k = k;
        SolveResult run = solve_max_open_exact(inst, options);
        if (run.open_value > best.open_value) best = run;
    }
    if (best.open_value < 0) return {};  // empty graph
    return sigma_open(graph, inst.thresholds, best.seeds);
}

VertexSet vertex_cover_from_influence(const Graph& graph, const VertexSet& seeds) {
    ThresholdAssignment thr = assign_thresholds(graph, ThresholdScheme::Unanimity);
    VertexSet open = sigma_open(graph, thr, seeds);
    VertexSet cover;
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        if (!contains(open, v)) cover.push_back(v);
    return cover;
}

}  // namespace influence
