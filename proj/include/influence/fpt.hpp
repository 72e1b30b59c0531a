#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "influence/graph.hpp"
#include "influence/oracles.hpp"
#include "influence/types.hpp"

namespace influence {

/// Query: can a connected activation region worth beta open activations be
/// anchored at v with at most alpha seeds drawn from N^{2*alpha-1}[v]?
struct RealizationQuery {
    VertexId v = 0;
    int alpha = 1;  // seed budget of the component
    int beta = 0;   // required open activation count
};

struct RealizationWitness {
    VertexSet seed_subset;  // |.| <= alpha, inside N^{2*alpha-1}[v]
    VertexSet realization;  // sigma[seed_subset]; connected, inside N^{2*alpha}[v]
};

// Enumerates candidate seed subsets of N^{2*alpha-1}[v] (sizes 1..alpha,
// ascending, lexicographic) and returns the first one activating at least
// beta vertices with a connected closed activation set. Unanimity thresholds
// are derived from the graph. Every returned witness is checked against the
// ball containment realization <= N^{2*alpha}[v]; a violation is an internal
// error. Throws CapExceededError when the ball admits more candidate subsets
// than options.cap.
std::optional<RealizationWitness> is_realizing_vertex(const Graph& graph,
                                                      const RealizationQuery& query,
                                                      const SolverOptions& options = {});

// Connected variant: yes iff some vertex realizes the pair (k, ell).
DecisionResult solve_connected_influence(const Graph& graph, int k, int ell,
                                         const SolverOptions& options = {});

/// Split of the budget and target across the connected components of the
/// activation region: x components, component i gets k_i >= 1 seeds and must
/// contribute ell_i >= 0 open activations.
struct PairProfile {
    int x = 0;
    std::vector<std::pair<int, int>> pairs;  // (k_i, ell_i)
};

// All ordered splits with sum k_i = k (k_i >= 1) and sum ell_i = ell
// (ell_i >= 0), in ascending lexicographic order (k-split first, then
// ell-split). Empty when x > k.
std::vector<PairProfile> enumerate_pair_profiles(int k, int ell, int x);

struct FptDecision {
    DecisionResult decision;
    std::optional<PairProfile> accepted;  // the (x, profile) that answered yes
};

// Decision procedure for unanimity thresholds parameterized by the budget and
// the maximum degree. Enumerates component-count guesses and pair profiles;
// per profile it tabulates realizing vertices, separates pairs with few
// realizations, deletes vertices useless to those pairs, brute-forces
// vertex-disjoint realizations for the few-realization pairs and places the
// remaining pairs greedily. Every yes is backed by a concrete seed set that
// re-propagates to at least ell open activations. Degree-0 vertices activate
// for free and are credited against ell before the search.
FptDecision solve_influence_fpt(const Graph& graph, int k, int ell,
                                const SolverOptions& options = {});

// Number of realization witnesses whose ball containment has been verified
// since process start. Violations throw std::logic_error inside
// is_realizing_vertex, so a positive count with no throw certifies the
// containment property for every witness produced.
std::uint64_t realization_containment_checks();

}  // namespace influence
