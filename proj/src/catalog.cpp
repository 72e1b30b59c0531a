#include "influence/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace influence::catalog {

namespace {

// Edge masks index pair (i, j), i < j, at bit j*(j-1)/2 + i; the encoding is
// independent of n so masks nest across levels.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline bool mask_edge(std::uint32_t mask, int i, int j) {
    if (i > j) std::swap(i, j);
    return (mask >> pair_bit(i, j)) & 1u;
}

struct AdjacencyLists {
    int n;
    std::vector<std::vector<int>> adj;

    AdjacencyLists(int n_, std::uint32_t mask) : n(n_), adj(n_) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (mask_edge(mask, i, j)) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
    }
};

// Iterated neighborhood-color refinement. Color classes are ordered by their
// invariant signatures, so the resulting ordered partition is preserved by
// every isomorphism.
std::vector<int> refine_colors(const AdjacencyLists& g) {
    std::vector<int> color(g.n);
    for (int v = 0; v < g.n; ++v) color[v] = static_cast<int>(g.adj[v].size());
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> signatures(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> sig;
            sig.push_back(color[v]);
            std::vector<int> neigh;
            for (int u : g.adj[v]) neigh.push_back(color[u]);
            std::sort(neigh.begin(), neigh.end());
            sig.insert(sig.end(), neigh.begin(), neigh.end());
            signatures[v] = {std::move(sig), v};
        }
        std::vector<std::vector<int>> distinct;
        for (const auto& [sig, v] : signatures) distinct.push_back(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(g.n);
        for (int v = 0; v < g.n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), signatures[v].first) -
                distinct.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::uint32_t encode_under_order(const AdjacencyLists& g, const std::vector<int>& order) {
    std::uint32_t mask = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            int u = order[i], v = order[j];
            bool edge = std::find(g.adj[u].begin(), g.adj[u].end(), v) != g.adj[u].end();
            if (edge) mask |= (1u << pair_bit(i, j));
        }
    return mask;
}

// Exact canonical form: minimum edge encoding over all vertex orders that
// list the refinement classes in signature order. Classes are usually tiny,
// so the product of within-class permutations stays small except for highly
// symmetric graphs, which are rare and still cheap at n <= 8.
std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    if (n <= 1) return 0;
    AdjacencyLists g(n, mask);
    std::vector<int> color = refine_colors(g);

    std::vector<std::vector<int>> classes;
    int classes_count = *std::max_element(color.begin(), color.end()) + 1;
    classes.resize(classes_count);
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);

    std::uint32_t best = ~0u;
    std::vector<int> order;
    order.reserve(n);
    // Odometer over per-class permutations.
    while (true) {
        order.clear();
        for (const auto& cls : classes) order.insert(order.end(), cls.begin(), cls.end());
        best = std::min(best, encode_under_order(g, order));
        int c = classes_count - 1;
        while (c >= 0 && !std::next_permutation(classes[c].begin(), classes[c].end())) --c;
        if (c < 0) break;
    }
    return best;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    GraphBuilder builder(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask_edge(mask, i, j)) builder.add_edge(i, j);
    return builder.freeze();
}

std::mutex catalog_mutex;
std::map<int, std::vector<std::uint32_t>> mask_levels;
std::map<int, std::vector<Graph>> graph_levels;

const std::vector<std::uint32_t>& masks_for(int n) {
    auto it = mask_levels.find(n);
    if (it != mask_levels.end()) return it->second;
    std::vector<std::uint32_t> level;
    if (n == 1) {
        level.push_back(0);
    } else {
        const auto& below = masks_for(n - 1);
        std::unordered_set<std::uint32_t> seen;
        // Every n-vertex graph arises from an (n-1)-vertex graph by attaching
        // one more vertex, so augmenting a complete level stays complete.
        for (std::uint32_t base : below) {
            for (std::uint32_t attach = 0; attach < (1u << (n - 1)); ++attach) {
                std::uint32_t mask = base;
                for (int i = 0; i < n - 1; ++i)
                    if ((attach >> i) & 1u) mask |= (1u << pair_bit(i, n - 1));
                seen.insert(canonical_mask(n, mask));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
    }
    return mask_levels.emplace(n, std::move(level)).first->second;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
    if (n < 1 || n > kMaxCatalogN)
        throw std::invalid_argument("catalog supports 1 <= n <= " + std::to_string(kMaxCatalogN));
    std::lock_guard<std::mutex> lock(catalog_mutex);
    auto it = graph_levels.find(n);
    if (it != graph_levels.end()) return it->second;
    std::vector<Graph> graphs;
    for (std::uint32_t mask : masks_for(n)) graphs.push_back(graph_from_mask(n, mask));
    return graph_levels.emplace(n, std::move(graphs)).first->second;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    VertexSet stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> graphs_with_max_degree(int n, int max_degree) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (g.max_degree() <= max_degree) out.push_back(g);
    return out;
}

std::vector<Graph> connected_graphs_with_max_degree(int n, int max_degree) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (g.max_degree() <= max_degree && is_connected(g)) out.push_back(g);
    return out;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    GraphBuilder builder(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) builder.add_edge(i, j);
    return builder.freeze();
}

Graph random_graph_nm(std::mt19937& rng, int n, int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    if (m < 0 || m > static_cast<int>(pairs.size()))
        throw std::invalid_argument("edge count out of range");
    std::shuffle(pairs.begin(), pairs.end(), rng);
    GraphBuilder builder(n);
    for (int e = 0; e < m; ++e) builder.add_edge(pairs[e].first, pairs[e].second);
    return builder.freeze();
}

}  // namespace influence::catalog
