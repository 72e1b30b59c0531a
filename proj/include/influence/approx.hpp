#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "influence/graph.hpp"
#include "influence/oracles.hpp"
#include "influence/types.hpp"

namespace influence {

/// Strictly increasing ratio function over positive integers, either a named
/// preset or a tabulated monotone sequence. Inverse queries answer the
/// smallest n with value(n) >= y, by doubling plus binary search.
class RatioSpec {
  public:
    enum class Preset { Log2, Sqrt, Linear };

    static RatioSpec preset(Preset p);
    static RatioSpec from_name(const std::string& name);  // "log2" | "sqrt" | "linear"
    static RatioSpec table(std::vector<double> values);   // values[i] = r(i + 1)

    double value(std::int64_t n) const;
    std::int64_t inverse(double y) const;
    const std::string& name() const { return name_; }

  private:
    RatioSpec() = default;

    bool tabulated_ = false;
    Preset preset_ = Preset::Linear;
    std::vector<double> table_;
    std::string name_;
};

// Seeds the common neighborhood of the largest false-twin class whose shared
// degree lies in [1, k]. The returned open value is within a factor 2^k of
// the optimum under unanimity thresholds, which the operation assigns itself.
// Tie-break between classes: size descending, common degree ascending, then
// smallest member.
SolveResult twin_approx_open(const Graph& graph, int k);

using OpenSolver =
    std::function<SolveResult(const Graph&, const ThresholdAssignment&, int k)>;

// Runs an open-influence solver, pads its seed set to exactly k vertices
// (preferring vertices outside the activated set so the open value cannot
// drop), re-propagates, and reports the closed objective. Any approximation
// ratio of the inner solver carries over to the closed objective.
SolveResult closed_from_open(const Graph& graph, const ThresholdAssignment& thr, int k,
                             const OpenSolver& solver);

struct GreedyResult {
    SolveResult result;
    // Vertices whose whole neighborhood was seeded; each is guaranteed to
    // activate, so result.open_value >= picks.size().
    VertexSet picks;
};

// Greedy for unanimity thresholds on bounded-degree graphs: repeatedly picks
// the unseeded vertex with the smallest not-yet-seeded neighborhood fitting
// the remaining budget (ties by index) and seeds that neighborhood. While an
// eligible vertex remains and the leftover budget covers a full neighborhood
// the loop cannot stop, so it completes at least floor(k / max_degree) picks
// unless the eligible pool runs dry first. Requires max_degree >= 1.
GreedyResult bounded_degree_approx(const Graph& graph, int k);

struct FptRatioResult {
    SolveResult result;
    bool used_exact = false;  // true when the brute-force branch ran
    std::string branch() const { return used_exact ? "brute-force" : "twin"; }
};

// Ratio-vs-budget switch for unanimity thresholds: when 2^k <= ratio(n) the
// twin approximation already meets ratio(n); otherwise n is small enough to
// solve exactly by brute force.
FptRatioResult fpt_ratio_approx(const Graph& graph, int k, const RatioSpec& ratio,
                                const SolverOptions& options = {});

// Best open-influence activation set over budgets 1..n under unanimity; the
// result is a maximum independent set of the graph.
VertexSet max_independent_set_via_influence(const Graph& graph, const SolverOptions& options = {});

// Complement of the activation set; always a vertex cover under unanimity.
VertexSet vertex_cover_from_influence(const Graph& graph, const VertexSet& seeds);

}  // namespace influence
