#include "influence/thresholds.hpp"

#include <stdexcept>

namespace influence {

ThresholdAssignment assign_thresholds(const Graph& graph, ThresholdScheme scheme) {
    ThresholdAssignment thr;
    thr.scheme = scheme;
    thr.values.resize(graph.vertex_count());
    switch (scheme) {
        case ThresholdScheme::Majority:
            for (VertexId v = 0; v < graph.vertex_count(); ++v)
                thr.values[v] = (graph.degree(v) + 1) / 2;
            break;
        case ThresholdScheme::Unanimity:
            for (VertexId v = 0; v < graph.vertex_count(); ++v) thr.values[v] = graph.degree(v);
            break;
        default:
            throw std::invalid_argument("only majority and unanimity thresholds can be derived");
    }
    return thr;
}

ThresholdAssignment make_constant_thresholds(std::vector<int> values, int cap) {
    for (int t : values)
        if (t > cap || t < 0)
            throw std::invalid_argument("constant-threshold value outside [0, " +
                                        std::to_string(cap) + "]");
    ThresholdAssignment thr;
    thr.values = std::move(values);
    thr.scheme = ThresholdScheme::Constant;
    thr.constant_cap = cap;
    return thr;
}

bool matches_unanimity(const Graph& graph, const ThresholdAssignment& thr) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        if (thr.values[v] != graph.degree(v)) return false;
    return true;
}

bool matches_majority(const Graph& graph, const ThresholdAssignment& thr) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        if (thr.values[v] != (graph.degree(v) + 1) / 2) return false;
    return true;
}

bool scheme_invariant_holds(const Graph& graph, const ThresholdAssignment& thr) {
    if (thr.size() != graph.vertex_count()) return false;
    switch (thr.scheme) {
        case ThresholdScheme::Majority:
            return matches_majority(graph, thr);
        case ThresholdScheme::Unanimity:
            return matches_unanimity(graph, thr);
        case ThresholdScheme::Constant:
            for (int t : thr.values)
                if (t > thr.constant_cap || t < 0) return false;
            return true;
        case ThresholdScheme::General:
            for (int t : thr.values)
                if (t < 0) return false;
            return true;
    }
    return false;
}

ThresholdScheme infer_scheme(const Graph& graph, const std::vector<int>& values) {
    ThresholdAssignment probe;
    probe.values = values;
    if (matches_unanimity(graph, probe)) return ThresholdScheme::Unanimity;
    if (matches_majority(graph, probe)) return ThresholdScheme::Majority;
    return ThresholdScheme::General;
}

std::string scheme_name(const ThresholdAssignment& thr) {
    switch (thr.scheme) {
        case ThresholdScheme::General:
            return "general";
        case ThresholdScheme::Majority:
            return "majority";
        case ThresholdScheme::Unanimity:
            return "unanimity";
        case ThresholdScheme::Constant:
            return "constant " + std::to_string(thr.constant_cap);
    }
    return "general";
}

}  // namespace influence
