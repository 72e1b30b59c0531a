#pragma once

#include <string>
#include <vector>

#include "influence/graph.hpp"
#include "influence/thresholds.hpp"
#include "influence/types.hpp"

namespace influence {

/// Full record of one propagation run. rounds[r] holds the vertices first
/// activated at step r+1, in ascending order; the process halts at the first
/// empty round, which is not recorded.
struct ActivationTrace {
    VertexSet seeds;
    std::vector<VertexSet> rounds;
    VertexSet final_closed;  // seeds plus everything activated
    VertexSet final_open;    // final_closed minus seeds
};

// Synchronous threshold propagation: a round activates exactly the inactive
// vertices whose count of active neighbors reached their threshold after the
// previous round. Vertices with threshold 0 activate in round 1 even from an
// empty seed set. Deterministic and pure.
ActivationTrace propagate(const Graph& graph, const ThresholdAssignment& thr,
                          const VertexSet& seeds);

// Same process with a set of frozen vertices that can never activate (their
// thresholds still refer to the full graph). Seeds must not be frozen.
// frozen.size() must equal the vertex count.
ActivationTrace propagate_frozen(const Graph& graph, const ThresholdAssignment& thr,
                                 const VertexSet& seeds, const std::vector<char>& frozen);

// Activated vertices excluding the seeds.
VertexSet sigma_open(const Graph& graph, const ThresholdAssignment& thr, const VertexSet& seeds);

// Activated vertices including the seeds.
VertexSet sigma_closed(const Graph& graph, const ThresholdAssignment& thr, const VertexSet& seeds);

// Debug dump: one line per round listing newly activated indices.
std::string format_trace(const ActivationTrace& trace);

}  // namespace influence
