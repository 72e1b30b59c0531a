#include "influence/fpt.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>

#include "influence/errors.hpp"
#include "influence/propagation.hpp"
#include "influence/subsets.hpp"

namespace influence {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::atomic<std::uint64_t> containment_checks{0};

void check_containment(const Graph& graph, const RealizationQuery& query,
                       const RealizationWitness& witness) {
    VertexSet outer = graph.ball(query.v, 2 * query.alpha);
    for (VertexId v : witness.realization)
        if (!contains(outer, v))
            throw std::logic_error("realization escapes the 2*alpha ball around its anchor");
    containment_checks.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

std::uint64_t realization_containment_checks() {
    return containment_checks.load(std::memory_order_relaxed);
}

std::optional<RealizationWitness> is_realizing_vertex(const Graph& graph,
                                                      const RealizationQuery& query,
                                                      const SolverOptions& options) {
    if (query.alpha < 1) throw std::invalid_argument("alpha must be positive");
    if (!graph.valid_vertex(query.v)) throw std::invalid_argument("anchor vertex out of range");
    ThresholdAssignment thr = assign_thresholds(graph, ThresholdScheme::Unanimity);

    VertexSet ball = graph.ball(query.v, 2 * query.alpha - 1);
    std::uint64_t candidates = subsets_up_to(static_cast<int>(ball.size()), query.alpha);
    if (candidates > options.cap) throw CapExceededError(candidates, options.cap);

    std::optional<RealizationWitness> found;
    for_each_subset(ball, 1, query.alpha, [&](const VertexSet& seeds) {
        ActivationTrace trace = propagate(graph, thr, seeds);
        if (static_cast<int>(trace.final_open.size()) < query.beta) return true;
        if (!induced_connected(graph, trace.final_closed)) return true;
        found = RealizationWitness{seeds, trace.final_closed};
        return false;
    });
    if (found) check_containment(graph, query, *found);
    return found;
}

DecisionResult solve_connected_influence(const Graph& graph, int k, int ell,
                                         const SolverOptions& options) {
    if (k < 1) throw std::invalid_argument("connected decision requires k >= 1");
    auto start = Clock::now();
    DecisionResult result;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        auto witness = is_realizing_vertex(graph, {v, k, ell}, options);
        ++result.explored;
        if (witness) {
            result.yes = true;
            result.witness = witness->seed_subset;
            break;
        }
    }
    result.elapsed_ms = ms_since(start);
    return result;
}

std::vector<PairProfile> enumerate_pair_profiles(int k, int ell, int x) {
    if (x < 1 || x > k) return {};
    std::vector<PairProfile> out;
    for (const auto& ks : compositions(k, x, 1)) {
        for (const auto& ls : compositions(ell, x, 0)) {
            PairProfile profile;
            profile.x = x;
            profile.pairs.reserve(static_cast<std::size_t>(x));
            for (int i = 0; i < x; ++i) profile.pairs.emplace_back(ks[i], ls[i]);
            out.push_back(std::move(profile));
        }
    }
    return out;
}

namespace {

// State shared across the profile loop for one decision run on the core
// (isolate-free) graph.
struct CoreSearch {
    const Graph& graph;
    ThresholdAssignment thr;
    SolverOptions options;
    std::uint64_t explored = 0;

    // Realizing-vertex answers are profile-independent, so they are memoized
    // per (anchor, alpha, beta).
    struct MemoEntry {
        bool realizing = false;
        VertexSet seeds;
        VertexSet closed;
    };
    std::map<std::tuple<VertexId, int, int>, MemoEntry> memo;

    explicit CoreSearch(const Graph& g, const SolverOptions& opts)
        : graph(g), thr(assign_thresholds(g, ThresholdScheme::Unanimity)), options(opts) {}

    const MemoEntry& realizing(VertexId v, int alpha, int beta) {
        auto key = std::make_tuple(v, alpha, beta);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto witness = is_realizing_vertex(graph, {v, alpha, beta}, options);
        ++explored;
        MemoEntry entry;
        if (witness) {
            entry.realizing = true;
            entry.seeds = witness->seed_subset;
            entry.closed = witness->realization;
        }
        return memo.emplace(key, std::move(entry)).first->second;
    }
};

struct Candidate {
    VertexSet seeds;
    VertexSet closed;
};

// Valid realizations of (alpha, beta) inside the kept subgraph, deduplicated
// by closed set. Connectivity implies the ball condition, so seed subsets are
// enumerated over all kept vertices directly.
std::vector<Candidate> collect_candidates(CoreSearch& search, const VertexSet& kept,
                                          const std::vector<char>& frozen, int alpha, int beta) {
    std::vector<Candidate> out;
    std::vector<VertexSet> seen_closed;
    std::uint64_t budget = subsets_up_to(static_cast<int>(kept.size()), alpha);
    if (budget > search.options.cap) throw CapExceededError(budget, search.options.cap);
    for_each_subset(kept, 1, alpha, [&](const VertexSet& seeds) {
        ++search.explored;
        ActivationTrace trace = propagate_frozen(search.graph, search.thr, seeds, frozen);
        if (static_cast<int>(trace.final_open.size()) < beta) return true;
        if (!induced_connected(search.graph, trace.final_closed)) return true;
        for (const VertexSet& c : seen_closed)
            if (c == trace.final_closed) return true;
        seen_closed.push_back(trace.final_closed);
        out.push_back({seeds, trace.final_closed});
        return true;
    });
    return out;
}

bool assign_disjoint(const std::vector<std::vector<Candidate>>& lists, std::size_t depth,
                     std::vector<const Candidate*>& chosen) {
    if (depth == lists.size()) return true;
    for (const Candidate& cand : lists[depth]) {
        bool clash = false;
        for (std::size_t i = 0; i < depth && !clash; ++i)
            clash = !sets_disjoint(chosen[i]->closed, cand.closed);
        if (clash) continue;
        chosen[depth] = &cand;
        if (assign_disjoint(lists, depth + 1, chosen)) return true;
    }
    return false;
}

// 2 * x * delta^(4k), saturating. A saturated threshold classifies every
// pair as few-realizations, i.e. into the exhaustive stage.
std::uint64_t few_realizations_threshold(int x, int delta, int k) {
    const std::uint64_t limit = std::uint64_t{1} << 60;
    std::uint64_t power = 1;
    for (int i = 0; i < 4 * k; ++i) {
        if (power > limit / std::max(1, delta)) return limit;
        power *= static_cast<std::uint64_t>(std::max(1, delta));
    }
    std::uint64_t factor = static_cast<std::uint64_t>(2) * static_cast<std::uint64_t>(x);
    if (power > limit / factor) return limit;
    return factor * power;
}

}  // namespace

FptDecision solve_influence_fpt(const Graph& graph, int k, int ell, const SolverOptions& options) {
    auto start = Clock::now();
    FptDecision out;
    const int n = graph.vertex_count();
    if (k < 0 || k > n) throw std::invalid_argument("budget k outside [0, n]");

    // Degree-0 vertices activate unconditionally and are useless as seeds;
    // credit them against ell and run the search on the rest.
    VertexSet core_vertices;
    int free_activations = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (graph.degree(v) == 0)
            ++free_activations;
        else
            core_vertices.push_back(v);
    }
    const int target = std::max(0, ell - free_activations);

    ThresholdAssignment full_thr = assign_thresholds(graph, ThresholdScheme::Unanimity);
    auto finish_yes = [&](VertexSet witness, std::optional<PairProfile> profile) {
        out.decision.yes = true;
        out.decision.witness = std::move(witness);
        out.accepted = std::move(profile);
        out.decision.elapsed_ms = ms_since(start);
    };

    if (target == 0) {
        finish_yes({}, std::nullopt);
        return out;
    }
    if (k == 0) {
        out.decision.elapsed_ms = ms_since(start);
        return out;
    }

    Graph core = induced_subgraph(graph, core_vertices);
    const int delta = core.max_degree();
    if (static_cast<std::int64_t>(target) > static_cast<std::int64_t>(k) * delta) {
        out.decision.elapsed_ms = ms_since(start);
        return out;  // open influence is capped by k * delta on the core
    }

    CoreSearch search(core, options);
    const int nc = core.vertex_count();

    for (int x = 1; x <= k; ++x) {
        for (PairProfile& profile : enumerate_pair_profiles(k, target, x)) {
            // Realizability table and per-pair counts.
            std::vector<std::vector<char>> table(static_cast<std::size_t>(nc),
                                                 std::vector<char>(static_cast<std::size_t>(x)));
            std::vector<std::uint64_t> counts(static_cast<std::size_t>(x), 0);
            for (VertexId v = 0; v < nc; ++v) {
                for (int i = 0; i < x; ++i) {
                    const auto& entry =
                        search.realizing(v, profile.pairs[i].first, profile.pairs[i].second);
                    table[v][i] = entry.realizing;
                    if (entry.realizing) ++counts[i];
                }
            }

            const std::uint64_t threshold = few_realizations_threshold(x, delta, k);
            std::vector<int> few, many;
            for (int i = 0; i < x; ++i)
                (counts[i] <= threshold ? few : many).push_back(i);

            // Drop vertices that realize none of the few-realization pairs.
            std::vector<char> frozen(static_cast<std::size_t>(nc), 1);
            VertexSet kept;
            for (VertexId v = 0; v < nc; ++v) {
                for (int i : few) {
                    if (table[v][i]) {
                        frozen[v] = 0;
                        kept.push_back(v);
                        break;
                    }
                }
            }

            // Brute-force pairwise disjoint realizations for the
            // few-realization pairs inside the kept subgraph.
            std::vector<std::vector<Candidate>> lists;
            bool feasible = true;
            for (int i : few) {
                lists.push_back(collect_candidates(search, kept, frozen, profile.pairs[i].first,
                                                   profile.pairs[i].second));
                if (lists.back().empty()) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            std::vector<const Candidate*> chosen(lists.size(), nullptr);
            if (!assign_disjoint(lists, 0, chosen)) continue;

            std::vector<VertexSet> placed;
            VertexSet combined_seeds;
            for (const Candidate* c : chosen) {
                placed.push_back(c->closed);
                combined_seeds = set_union(combined_seeds, c->seeds);
            }

            // Pairs with many realizations: place stored witnesses greedily,
            // scanning anchors in ascending order and keeping realizations
            // disjoint from everything placed so far.
            bool placed_all = true;
            for (int j : many) {
                bool done = false;
                for (VertexId v = 0; v < nc && !done; ++v) {
                    const auto& entry =
                        search.realizing(v, profile.pairs[j].first, profile.pairs[j].second);
                    if (!entry.realizing) continue;
                    bool clash = false;
                    for (const VertexSet& p : placed)
                        if (!sets_disjoint(p, entry.closed)) {
                            clash = true;
                            break;
                        }
                    if (clash) continue;
                    placed.push_back(entry.closed);
                    combined_seeds = set_union(combined_seeds, entry.seeds);
                    done = true;
                }
                if (!done) {
                    placed_all = false;
                    break;
                }
            }
            if (!placed_all) continue;

            // Map core seeds back and re-verify on the original graph; an
            // accepting profile must survive an actual propagation.
            VertexSet witness;
            for (VertexId v : combined_seeds) witness.push_back(core_vertices[v]);
            VertexSet open = sigma_open(graph, full_thr, witness);
            if (static_cast<int>(open.size()) >= ell) {
                out.decision.explored = search.explored;
                finish_yes(std::move(witness), profile);
                return out;
            }
        }
    }

    out.decision.explored = search.explored;
    out.decision.elapsed_ms = ms_since(start);
    return out;
}

}  // namespace influence
