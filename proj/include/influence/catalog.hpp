#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "influence/graph.hpp"

namespace influence::catalog {

// Maximum vertex count the catalog supports (edge masks fit 32 bits).
inline constexpr int kMaxCatalogN = 8;

// All simple graphs on exactly n vertices, one representative per isomorphism
// class, in a fixed deterministic order. Levels are built incrementally by
// vertex augmentation and deduplicated by an exact canonical form (minimum
// adjacency encoding over refinement-respecting vertex orders), then memoized
// per process.
const std::vector<Graph>& all_graphs(int n);

std::vector<Graph> connected_graphs(int n);
std::vector<Graph> graphs_with_max_degree(int n, int max_degree);
std::vector<Graph> connected_graphs_with_max_degree(int n, int max_degree);

bool is_connected(const Graph& g);

// Uniform random graph: each pair becomes an edge with probability p.
Graph random_graph(std::mt19937& rng, int n, double p);

// Random graph with exactly m edges (m <= C(n, 2)).
Graph random_graph_nm(std::mt19937& rng, int n, int m);

}  // namespace influence::catalog
