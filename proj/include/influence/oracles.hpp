#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "influence/instance.hpp"
#include "influence/types.hpp"

namespace influence {

inline constexpr std::uint64_t kDefaultExplorationCap = 10'000'000;

struct SolverOptions {
    std::uint64_t cap = kDefaultExplorationCap;
    int workers = 1;
};

/// Outcome of a maximization run. closed_value always equals
/// open_value + |seeds| since seeds never appear in the open set.
struct SolveResult {
    VertexSet seeds;
    int open_value = 0;
    int closed_value = 0;
    bool exact = false;
    std::uint64_t explored = 0;
    double elapsed_ms = 0.0;
};

struct DecisionResult {
    bool yes = false;
    std::optional<VertexSet> witness;
    std::uint64_t explored = 0;
    double elapsed_ms = 0.0;
};

// Exhaustive maximization of the open influence |sigma(S)| over all seed
// sets of size at most instance.k. Ties break toward the lexicographically
// smallest seed set. Throws CapExceededError when the number of candidate
// sets exceeds options.cap.
SolveResult solve_max_open_exact(const Instance& instance, const SolverOptions& options = {});

// Same search with objective |sigma[S]|; the maximizer may differ from the
// open one.
SolveResult solve_max_closed_exact(const Instance& instance, const SolverOptions& options = {});

// Decides whether some |S| <= k reaches |sigma(S)| >= ell (instance.ell must
// be present). Scans seed-set sizes k downward; under unanimity thresholds
// instances with ell beyond k * max_degree plus the free activations from
// degree-0 vertices are rejected without search.
DecisionResult decide_influence(const Instance& instance, const SolverOptions& options = {});

enum class ClassicProblem { DominatingSet, Clique, VertexCover, DensestKSubgraph };

/// Answer of a classic brute-force solve. Decision problems (dominating set,
/// clique) fill `yes`; the two value problems (vertex cover minimum size,
/// densest-k-subgraph edge count) also fill `value`.
struct ClassicResult {
    bool yes = false;
    int value = 0;
    VertexSet witness;
    std::uint64_t explored = 0;
    double elapsed_ms = 0.0;
};

// dominating-set: is there D, |D| <= k, with N[D] = V?
// clique: is there a clique of size k?
// vertex-cover: minimum cover size and witness (k is ignored).
// densest-k-subgraph: maximum edge count induced by exactly k vertices.
ClassicResult classic_brute_force(ClassicProblem problem, const Graph& graph, int k,
                                  const SolverOptions& options = {});

std::string classic_problem_name(ClassicProblem problem);

}  // namespace influence
