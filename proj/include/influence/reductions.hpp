#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "influence/instance.hpp"
#include "influence/oracles.hpp"
#include "influence/types.hpp"

namespace influence {

enum class VertexRole {
    Top,
    Bottom,
    Gadget,
    Pending,
    Grid,
    Hub,
    EdgeVertex,
    Path,
    Copy,
};

/// Per-vertex origin label of a generated instance. Grid vertices carry their
/// (row, layer), edge-vertices their source endpoints and bundle index, path
/// vertices their (position, path) coordinates.
struct Provenance {
    VertexRole role = VertexRole::Copy;
    int a = -1;
    int b = -1;
    int c = -1;
};

std::string provenance_label(const Provenance& p);

struct ReductionParams {
    std::string kind;
    int k = 0;
    int L = 0;  // grid depth (majority construction)
    int P = 0;  // path count (constant-threshold construction)
    int Q = 0;  // pendings per path terminus
    std::int64_t expected_vertices = 0;
};

/// A generated instance plus everything needed to interpret it: provenance
/// per vertex, the forward solution mapping and the padding parameters used.
struct ReductionOutput {
    Instance instance;
    std::vector<Provenance> provenance;
    ReductionParams params;

    // Maps source vertex v to its top copy / clone in the instance.
    std::vector<VertexId> source_to_target;
    // Hub vertex joined to every mapped seed set (majority construction).
    VertexId hub = -1;
    bool map_includes_hub = false;

    // Image of a source-side solution as a seed set of the instance.
    VertexSet forward_map(const VertexSet& source_solution) const;
};

/// Shared scaffolding for the gadget constructions: a growing graph with
/// per-vertex provenance and optional explicit thresholds.
class GadgetBuilder {
  public:
    VertexId add_vertex(const Provenance& p, int threshold = 0);
    void add_edge(VertexId u, VertexId v) { graph_.add_edge(u, v); }
    int vertex_count() const { return graph_.vertex_count(); }

    GraphBuilder& graph() { return graph_; }
    std::vector<int>& thresholds() { return thresholds_; }
    const std::vector<Provenance>& provenance() const { return provenance_; }
    std::vector<Provenance>& provenance() { return provenance_; }

  private:
    GraphBuilder graph_;
    std::vector<int> thresholds_;
    std::vector<Provenance> provenance_;
};

// Bundle of `count` threshold-1 vertices adjacent to exactly u and v; acts as
// an edge of multiplicity `count`. Returns the ids created.
VertexSet add_ell_edge(GadgetBuilder& builder, VertexId u, VertexId v, int count);

/// The 4-cycle one-way coupler: activation passes from u to v but never back.
struct DirectedEdgeGadget {
    VertexId a, b, c, d;
};

// Cycle a-b-c-d-a with a adjacent to u and c adjacent to v; thresholds
// (1, 1, 2, 1). Seeding u activates the cycle and hands v one active
// neighbor; seeding v leaves the cycle dark.
DirectedEdgeGadget add_directed_edge_gadget(GadgetBuilder& builder, VertexId u, VertexId v);

// Bipartite double cover used by the hardness constructions: a top and a
// bottom copy per vertex, the pair edge {v_top, v_bottom}, and both cross
// edges per source edge. Tops need all their neighbors, bottoms need one.
// A dominating set of size k in the source maps to k tops that fully
// activate the instance.
ReductionOutput basic_reduction(const Graph& graph);

// Majority-threshold amplifier: the double cover with pair and cross edges
// replaced by (k+2)-bundles, a hub wired to every bottom by degree-matched
// bundles, an L-layer grid fed by the bottoms, and pending vertices that pad
// every majority threshold to exactly the intended trigger point. Activation
// of the grid (worth n*L + n^2 vertices) requires a size-k dominating set in
// the source plus the hub. Rejects graphs with isolated vertices.
ReductionOutput majority_hardness_instance(const Graph& graph, int k, int L);

// Thresholds-at-most-two amplifier: the double cover with every top-bottom
// edge replaced by a one-way coupler, P paths of length n-1 fed by the
// bottoms through couplers, and Q pendings per path terminus. The paths fully
// activate only when every bottom does, which needs a dominating set.
// Requires n >= 2.
ReductionOutput constant_threshold_instance(const Graph& graph, int k, int P, int Q);

// Clique tester: one copy per non-isolated source vertex and k+1 edge-vertices
// per edge, unanimity thresholds, target ell = (k+1) * C(k, 2). A k-clique is
// exactly a seed set activating ell edge-vertices. Isolated source vertices
// are dropped first; they cannot join a clique of size >= 2 but their copies
// would activate for free. Requires k >= 2.
ReductionOutput clique_reduction(const Graph& graph, int k);

// Densest-subgraph value copier: one copy per vertex, one edge-vertex per
// edge, and k+1 guard vertices adjacent to every copy, unanimity thresholds.
// For k < n the optimum open influence equals the densest-k-subgraph value.
ReductionOutput dks_reduction(const Graph& graph, int k);

enum class ReductionKind { Basic, Majority, Constant, Clique, Dks };

ReductionKind reduction_kind_from_name(const std::string& name);
std::string reduction_kind_name(ReductionKind kind);

struct VerifyOptions {
    std::uint64_t cap = kDefaultExplorationCap;
    // Deliberately corrupts one threshold in the generated instance so the
    // harness can prove it detects disagreements. Off by default.
    bool inject_fault = false;
};

struct VerifyReport {
    ReductionKind kind = ReductionKind::Basic;
    bool agree = false;
    // Decision kinds (basic, clique): yes/no per side. Value kind (dks):
    // optimal values per side.
    bool source_yes = false;
    bool target_yes = false;
    int source_value = 0;
    int target_value = 0;
    VertexSet source_witness;
    VertexSet target_witness;
    std::string detail;
};

// Runs the classic oracle on the source and the influence oracle on the
// generated instance and reports whether the reduction's equivalence holds:
//   basic:  size-k dominating set  <=>  k seeds fully activate the instance
//   clique: k-clique               <=>  (k, (k+1)*C(k,2))-decision
//   dks:    densest-k value        ==   exact open influence optimum (k < n)
VerifyReport verify_reduction(ReductionKind kind, const Graph& source, int k,
                              const VerifyOptions& options = {});

std::string format_verify_report(const VerifyReport& report);

}  // namespace influence
