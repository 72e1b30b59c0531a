#include "influence/oracles.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "influence/errors.hpp"
#include "influence/propagation.hpp"
#include "influence/subsets.hpp"

namespace influence {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VertexSet all_vertices(const Graph& g) {
    VertexSet v(g.vertex_count());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void check_budget(const Graph& g, int max_size, const SolverOptions& options) {
    std::uint64_t required = subsets_up_to(g.vertex_count(), max_size);
    if (required > options.cap) throw CapExceededError(required, options.cap);
}

struct BestSeeds {
    int value = -1;
    VertexSet seeds;

    void offer(int candidate_value, const VertexSet& candidate) {
        if (candidate_value > value || (candidate_value == value && lex_less(candidate, seeds))) {
            value = candidate_value;
            seeds = candidate;
        }
    }
};

// Exhaustive max over all |S| <= k of objective(S). Workers partition the
// candidate stream by rank; the merge reproduces the single-threaded result
// because the comparison (value, then lexicographic seeds) is a total order.
template <typename Objective>
BestSeeds max_over_seed_sets(const Graph& g, int k, const SolverOptions& options,
                             Objective&& objective) {
    const VertexSet pool = all_vertices(g);
    const int workers = std::max(1, options.workers);
    std::vector<BestSeeds> partial(workers);

    auto scan = [&](int worker_id) {
        std::uint64_t rank = 0;
        for_each_subset(pool, 0, k, [&](const VertexSet& seeds) {
            if (static_cast<int>(rank++ % workers) == worker_id)
                partial[worker_id].offer(objective(seeds), seeds);
            return true;
        });
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
        for (auto& t : threads) t.join();
    }

    BestSeeds best;
    for (const BestSeeds& p : partial)
        if (p.value >= 0) best.offer(p.value, p.seeds);
    return best;
}

SolveResult solve_exact(const Instance& instance, const SolverOptions& options, bool open_objective) {
    const Graph& g = instance.graph;
    if (instance.k < 0 || instance.k > g.vertex_count())
        throw std::invalid_argument("budget k outside [0, n]");
    check_budget(g, instance.k, options);
    auto start = Clock::now();

    BestSeeds best = max_over_seed_sets(g, instance.k, options, [&](const VertexSet& seeds) {
        VertexSet open = sigma_open(g, instance.thresholds, seeds);
        return static_cast<int>(open.size()) +
               (open_objective ? 0 : static_cast<int>(seeds.size()));
    });

    SolveResult result;
    result.seeds = best.seeds;
    result.open_value = static_cast<int>(sigma_open(g, instance.thresholds, best.seeds).size());
    result.closed_value = result.open_value + static_cast<int>(best.seeds.size());
    result.exact = true;
    result.explored = subsets_up_to(g.vertex_count(), instance.k);
    result.elapsed_ms = ms_since(start);
    return result;
}

}  // namespace

SolveResult solve_max_open_exact(const Instance& instance, const SolverOptions& options) {
    return solve_exact(instance, options, true);
}

SolveResult solve_max_closed_exact(const Instance& instance, const SolverOptions& options) {
    return solve_exact(instance, options, false);
}

DecisionResult decide_influence(const Instance& instance, const SolverOptions& options) {
    if (!instance.ell) throw std::invalid_argument("decision instance requires ell");
    const Graph& g = instance.graph;
    const int n = g.vertex_count();
    const int k = instance.k;
    const int ell = *instance.ell;
    if (k < 0 || k > n) throw std::invalid_argument("budget k outside [0, n]");
    auto start = Clock::now();

    DecisionResult result;
    if (ell <= 0) {
        result.yes = true;
        result.witness = VertexSet{};
        result.elapsed_ms = ms_since(start);
        return result;
    }

    // Under unanimity the open influence is at most k * max_degree plus the
    // degree-0 vertices, which activate for free. Beyond that bound the
    // answer is no without any search.
    if (matches_unanimity(g, instance.thresholds)) {
        int isolated = 0;
        for (VertexId v = 0; v < n; ++v)
            if (g.degree(v) == 0) ++isolated;
        if (static_cast<std::int64_t>(ell) >
            static_cast<std::int64_t>(k) * g.max_degree() + isolated) {
            result.yes = false;
            result.elapsed_ms = ms_since(start);
            return result;
        }
    }

    check_budget(g, k, options);
    const VertexSet pool = all_vertices(g);
    const int workers = std::max(1, options.workers);

    // Sizes are scanned k downward; a whole size class is processed before
    // deciding so that the reported witness and explored count do not depend
    // on the worker count.
    for (int size = k; size >= 0; --size) {
        std::vector<std::optional<VertexSet>> found(workers);
        auto scan = [&](int worker_id) {
            std::uint64_t rank = 0;
            for_each_combination(pool, size, [&](const VertexSet& seeds) {
                if (static_cast<int>(rank++ % workers) != worker_id) return true;
                VertexSet open = sigma_open(g, instance.thresholds, seeds);
                if (static_cast<int>(open.size()) >= ell) {
                    if (!found[worker_id] || lex_less(seeds, *found[worker_id]))
                        found[worker_id] = seeds;
                }
                return true;
            });
        };
        if (workers == 1) {
            scan(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
            for (auto& t : threads) t.join();
        }
        result.explored += binomial(n, size);
        std::optional<VertexSet> winner;
        for (const auto& f : found)
            if (f && (!winner || lex_less(*f, *winner))) winner = f;
        if (winner) {
            result.yes = true;
            result.witness = *winner;
            result.elapsed_ms = ms_since(start);
            return result;
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

namespace {

bool is_dominating(const Graph& g, const VertexSet& set) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (VertexId v : set) {
        covered[v] = 1;
        for (VertexId u : g.neighbors(v)) covered[u] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!g.has_edge(set[i], set[j])) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& set) {
    for (auto [u, v] : g.edges())
        if (!contains(set, u) && !contains(set, v)) return false;
    return true;
}

int induced_edge_count(const Graph& g, const VertexSet& set) {
    int count = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) ++count;
    return count;
}

}  // namespace

ClassicResult classic_brute_force(ClassicProblem problem, const Graph& graph, int k,
                                  const SolverOptions& options) {
    const int n = graph.vertex_count();
    if (k < 0) throw std::invalid_argument("negative budget k");
    // A clique of size k > n cannot exist, so that query is simply "no";
    // picking k > n vertices for the density objective is ill-posed.
    if (k > n && problem == ClassicProblem::DensestKSubgraph)
        throw std::invalid_argument("budget k exceeds the vertex count");
    auto start = Clock::now();
    const VertexSet pool = all_vertices(graph);
    ClassicResult result;

    switch (problem) {
        case ClassicProblem::DominatingSet: {
            k = std::min(k, n);
            check_budget(graph, k, options);
            for_each_subset(pool, 0, k, [&](const VertexSet& set) {
                ++result.explored;
                if (is_dominating(graph, set)) {
                    result.yes = true;
                    result.value = static_cast<int>(set.size());
                    result.witness = set;
                    return false;
                }
                return true;
            });
            break;
        }
        case ClassicProblem::Clique: {
            std::uint64_t required = binomial(n, k);
            if (required > options.cap) throw CapExceededError(required, options.cap);
            for_each_combination(pool, k, [&](const VertexSet& set) {
                ++result.explored;
                if (is_clique(graph, set)) {
                    result.yes = true;
                    result.value = static_cast<int>(set.size());
                    result.witness = set;
                    return false;
                }
                return true;
            });
            if (k == 0) {
                result.yes = true;  // the empty clique
                result.witness = {};
            }
            break;
        }
        case ClassicProblem::VertexCover: {
            std::uint64_t required = subsets_up_to(n, n);
            if (required > options.cap) throw CapExceededError(required, options.cap);
            for_each_subset(pool, 0, n, [&](const VertexSet& set) {
                ++result.explored;
                if (is_vertex_cover(graph, set)) {
                    result.yes = true;
                    result.value = static_cast<int>(set.size());
                    result.witness = set;
                    return false;
                }
                return true;
            });
            break;
        }
        case ClassicProblem::DensestKSubgraph: {
            std::uint64_t required = binomial(n, k);
            if (required > options.cap) throw CapExceededError(required, options.cap);
            int best = -1;
            for_each_combination(pool, k, [&](const VertexSet& set) {
                ++result.explored;
                int edges = induced_edge_count(graph, set);
                if (edges > best) {
                    best = edges;
                    result.witness = set;
                }
                return true;
            });
            result.yes = best >= 0;
            result.value = std::max(best, 0);
            break;
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

std::string classic_problem_name(ClassicProblem problem) {
    switch (problem) {
        case ClassicProblem::DominatingSet:
            return "dominating-set";
        case ClassicProblem::Clique:
            return "clique";
        case ClassicProblem::VertexCover:
            return "vertex-cover";
        case ClassicProblem::DensestKSubgraph:
            return "densest-k-subgraph";
    }
    return "unknown";
}

}  // namespace influence
