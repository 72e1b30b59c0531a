#include "influence/propagation.hpp"

#include <sstream>
#include <stdexcept>

namespace influence {

namespace {

ActivationTrace run_propagation(const Graph& graph, const ThresholdAssignment& thr,
                                const VertexSet& seeds, const std::vector<char>* frozen) {
    const int n = graph.vertex_count();
    if (thr.size() != n) throw std::invalid_argument("threshold count does not match graph");
    if (!is_sorted_unique(seeds)) throw std::invalid_argument("seed set must be sorted and unique");
    for (VertexId v : seeds) {
        if (!graph.valid_vertex(v)) throw std::invalid_argument("seed vertex out of range");
        if (frozen && (*frozen)[v]) throw std::invalid_argument("seed vertex is frozen");
    }

    std::vector<char> active(n, 0);
    std::vector<int> active_neighbors(n, 0);
    for (VertexId v : seeds) active[v] = 1;
    for (VertexId v : seeds)
        for (VertexId u : graph.neighbors(v)) ++active_neighbors[u];

    ActivationTrace trace;
    trace.seeds = seeds;
    while (true) {
        VertexSet round;
        for (VertexId v = 0; v < n; ++v) {
            if (active[v]) continue;
            if (frozen && (*frozen)[v]) continue;
            if (active_neighbors[v] >= thr.value(v)) round.push_back(v);
        }
        if (round.empty()) break;
        for (VertexId v : round) active[v] = 1;
        for (VertexId v : round)
            for (VertexId u : graph.neighbors(v)) ++active_neighbors[u];
        trace.rounds.push_back(std::move(round));
    }

    for (VertexId v = 0; v < n; ++v)
        if (active[v]) trace.final_closed.push_back(v);
    trace.final_open = set_difference(trace.final_closed, seeds);
    return trace;
}

}  // namespace

ActivationTrace propagate(const Graph& graph, const ThresholdAssignment& thr,
                          const VertexSet& seeds) {
    return run_propagation(graph, thr, seeds, nullptr);
}

ActivationTrace propagate_frozen(const Graph& graph, const ThresholdAssignment& thr,
                                 const VertexSet& seeds, const std::vector<char>& frozen) {
    if (static_cast<int>(frozen.size()) != graph.vertex_count())
        throw std::invalid_argument("frozen mask size does not match graph");
    return run_propagation(graph, thr, seeds, &frozen);
}

VertexSet sigma_open(const Graph& graph, const ThresholdAssignment& thr, const VertexSet& seeds) {
    return propagate(graph, thr, seeds).final_open;
}

VertexSet sigma_closed(const Graph& graph, const ThresholdAssignment& thr, const VertexSet& seeds) {
    return propagate(graph, thr, seeds).final_closed;
}

std::string format_trace(const ActivationTrace& trace) {
    std::ostringstream out;
    for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
        out << "round " << (r + 1) << ":";
        for (VertexId v : trace.rounds[r]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace influence
