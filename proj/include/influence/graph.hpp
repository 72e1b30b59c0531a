#pragma once

#include <utility>
#include <vector>

#include "influence/types.hpp"

namespace influence {

/// Undirected simple graph over dense vertex indices. Immutable once built;
/// adjacency lists are sorted, symmetric, self-loop free and duplicate free.
class Graph {
  public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const { return max_degree_; }

    const VertexSet& neighbors(VertexId v) const { return adjacency_[v]; }

    bool has_edge(VertexId u, VertexId v) const { return contains(adjacency_[u], v); }

    bool valid_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

    // Edges as (u, v) pairs with u < v, in ascending order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    // All vertices at distance <= radius from v, including v itself. Sorted.
    VertexSet ball(VertexId v, int radius) const;

    bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

  private:
    friend class GraphBuilder;

    std::vector<VertexSet> adjacency_;
    int edge_count_ = 0;
    int max_degree_ = 0;
};

/// Single-owner mutable builder; validates edges as they are added and
/// produces an immutable Graph on freeze().
class GraphBuilder {
  public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) { add_vertices(n); }

    VertexId add_vertex();
    void add_vertices(int count);
    int vertex_count() const { return static_cast<int>(adjacency_.size()); }

    // Throws std::invalid_argument on out-of-range endpoints, self-loops and
    // duplicate edges.
    void add_edge(VertexId u, VertexId v);

    bool has_edge(VertexId u, VertexId v) const;

    Graph freeze();

  private:
    std::vector<VertexSet> adjacency_;  // unsorted until freeze
    int edge_count_ = 0;
};

// True when the subgraph induced by `vertices` (sorted set) is connected.
// The empty set counts as connected.
bool induced_connected(const Graph& g, const VertexSet& vertices);

// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Subgraph induced by `vertices` (sorted). Vertex i of the result corresponds
// to vertices[i] in g.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

}  // namespace influence
