#include "influence/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace influence {

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::ball(VertexId v, int radius) const {
    std::vector<int> dist(vertex_count(), -1);
    VertexSet frontier{v};
    dist[v] = 0;
    VertexSet result{v};
    for (int d = 1; d <= radius && !frontier.empty(); ++d) {
        VertexSet next;
        for (VertexId u : frontier)
            for (VertexId w : adjacency_[u])
                if (dist[w] < 0) {
                    dist[w] = d;
                    next.push_back(w);
                }
        result.insert(result.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

VertexId GraphBuilder::add_vertex() {
    adjacency_.emplace_back();
    return static_cast<VertexId>(adjacency_.size()) - 1;
}

void GraphBuilder::add_vertices(int count) {
    adjacency_.resize(adjacency_.size() + static_cast<std::size_t>(count));
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
    const VertexSet& adj = adjacency_[u];
    return std::find(adj.begin(), adj.end(), v) != adj.end();
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
    const int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + ", " +
                                    std::to_string(v) + "}");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge {" + std::to_string(u) + ", " +
                                    std::to_string(v) + "}");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
}

Graph GraphBuilder::freeze() {
    Graph g;
    g.adjacency_ = std::move(adjacency_);
    g.edge_count_ = edge_count_;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(adj.size()));
    }
    adjacency_.clear();
    edge_count_ = 0;
    return g;
}

bool induced_connected(const Graph& g, const VertexSet& vertices) {
    if (vertices.empty()) return true;
    VertexSet stack{vertices.front()};
    VertexSet seen{vertices.front()};
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u)) {
            if (!contains(vertices, w) || contains(seen, w)) continue;
            seen.insert(std::lower_bound(seen.begin(), seen.end(), w), w);
            stack.push_back(w);
        }
    }
    return seen.size() == vertices.size();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder builder(a.vertex_count() + b.vertex_count());
    const VertexId shift = a.vertex_count();
    for (auto [u, v] : a.edges()) builder.add_edge(u, v);
    for (auto [u, v] : b.edges()) builder.add_edge(u + shift, v + shift);
    return builder.freeze();
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<VertexId> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<VertexId>(i);
    GraphBuilder builder(static_cast<int>(vertices.size()));
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) builder.add_edge(index[u], index[v]);
    return builder.freeze();
}

}  // namespace influence
