#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "influence/graph.hpp"
#include "influence/thresholds.hpp"

namespace influence {

/// A problem instance: graph, thresholds, seed budget k and, for the decision
/// problem, the activation target ell.
struct Instance {
    Graph graph;
    ThresholdAssignment thresholds;
    int k = 0;
    std::optional<int> ell;
};

// Parses the line-oriented instance format:
//
//   p influence <n> <m>
//   t <v> <theta>        one per vertex, required
//   e <u> <v>            m lines, 0-based indices
//
// Lines starting with 'c' are comments. Three comment directives are
// recognized so that serialize/parse round-trips every field:
//   c k <int>, c ell <int>, c scheme <general|majority|unanimity|constant C>
// Malformed input raises ParseError with the offending line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

// Emits the instance in the format above, vertices and edges in ascending
// order. Deterministic: equal instances serialize to identical bytes.
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

bool instances_equal(const Instance& a, const Instance& b);

}  // namespace influence
