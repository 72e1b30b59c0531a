#pragma once

#include <string>
#include <vector>

#include "influence/graph.hpp"
#include "influence/types.hpp"

namespace influence {

enum class ThresholdScheme { General, Majority, Unanimity, Constant };

/// Per-vertex activation thresholds plus the scheme they were derived from.
/// Degree-0 vertices get threshold 0 under majority and unanimity.
struct ThresholdAssignment {
    std::vector<int> values;
    ThresholdScheme scheme = ThresholdScheme::General;
    int constant_cap = 0;  // only meaningful for ThresholdScheme::Constant

    int value(VertexId v) const { return values[v]; }
    int size() const { return static_cast<int>(values.size()); }
};

// Derives majority (ceil(deg/2)) or unanimity (deg) thresholds from degrees.
// Only those two schemes can be derived; constant thresholds take explicit
// per-vertex values via make_constant_thresholds.
ThresholdAssignment assign_thresholds(const Graph& graph, ThresholdScheme scheme);

// Wraps explicit values as a constant-c assignment; validates values <= cap.
ThresholdAssignment make_constant_thresholds(std::vector<int> values, int cap);

bool matches_unanimity(const Graph& graph, const ThresholdAssignment& thr);
bool matches_majority(const Graph& graph, const ThresholdAssignment& thr);

// Checks the invariant tied to thr.scheme against the graph's degrees.
bool scheme_invariant_holds(const Graph& graph, const ThresholdAssignment& thr);

// Tags values with the strongest matching scheme: unanimity, then majority,
// then general. Used by the parser when no scheme directive is present.
ThresholdScheme infer_scheme(const Graph& graph, const std::vector<int>& values);

std::string scheme_name(const ThresholdAssignment& thr);

}  // namespace influence
