#include "influence/twins.hpp"

#include <algorithm>
#include <numeric>

namespace influence {

TwinPartition false_twin_classes(const Graph& graph) {
    const int n = graph.vertex_count();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (graph.neighbors(a) != graph.neighbors(b)) return graph.neighbors(a) < graph.neighbors(b);
        return a < b;
    });

    TwinPartition partition;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && graph.neighbors(order[j]) == graph.neighbors(order[i])) ++j;
        TwinClass cls;
        cls.members.assign(order.begin() + i, order.begin() + j);
        std::sort(cls.members.begin(), cls.members.end());
        cls.neighborhood = graph.neighbors(order[i]);
        cls.common_degree = static_cast<int>(cls.neighborhood.size());
        partition.classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(partition.classes.begin(), partition.classes.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.members.front() < b.members.front(); });
    return partition;
}

}  // namespace influence
