#pragma once

#include <vector>

#include "influence/graph.hpp"
#include "influence/types.hpp"

namespace influence {

/// Maximal group of vertices sharing one open neighborhood. Vertices of a
/// class are pairwise non-adjacent (false twins), since none can appear in
/// the common neighborhood without a self-loop.
struct TwinClass {
    VertexSet members;          // sorted
    VertexSet neighborhood;     // the common N(v)
    int common_degree = 0;      // |neighborhood|
};

struct TwinPartition {
    std::vector<TwinClass> classes;  // ordered by smallest member
};

// Partitions V by exact open-neighborhood equality.
TwinPartition false_twin_classes(const Graph& graph);

}  // namespace influence
