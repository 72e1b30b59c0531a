#include <set>

#include "doctest.h"
#include "influence/catalog.hpp"
#include "influence/oracles.hpp"
#include "influence/propagation.hpp"
#include "influence/reductions.hpp"
#include "influence/subsets.hpp"
#include "reference.hpp"

using namespace influence;

namespace {

int count_role(const ReductionOutput& out, VertexRole role) {
    int count = 0;
    for (const auto& p : out.provenance) count += p.role == role ? 1 : 0;
    return count;
}

VertexSet vertices_with_role(const ReductionOutput& out, VertexRole role) {
    VertexSet set;
    for (std::size_t v = 0; v < out.provenance.size(); ++v)
        if (out.provenance[v].role == role) set.push_back(static_cast<VertexId>(v));
    return set;
}

bool fully_activates(const ReductionOutput& out, const VertexSet& seeds) {
    auto closed = sigma_closed(out.instance.graph, out.instance.thresholds, seeds);
    return static_cast<int>(closed.size()) == out.instance.graph.vertex_count();
}

}  // namespace

TEST_CASE("double cover of the example graph") {
    Graph g = fixtures::g5();
    ReductionOutput out = basic_reduction(g);
    CHECK(out.instance.graph.vertex_count() == 10);
    // pair edge per vertex plus both cross edges per source edge
    CHECK(out.instance.graph.edge_count() == 5 + 2 * 6);
    CHECK(count_role(out, VertexRole::Top) == 5);
    CHECK(count_role(out, VertexRole::Bottom) == 5);
    for (VertexId v = 0; v < 5; ++v) {
        CHECK(out.instance.thresholds.value(v) == out.instance.graph.degree(v));
        CHECK(out.instance.thresholds.value(v + 5) == 1);
    }

    // {v2, v4} dominates, so its top copies flood the instance in two rounds
    VertexSet seeds = out.forward_map({1, 3});
    CHECK(seeds == VertexSet{1, 3});
    auto trace = propagate(out.instance.graph, out.instance.thresholds, seeds);
    CHECK(trace.rounds.size() == 2);
    CHECK(static_cast<int>(trace.final_closed.size()) == 10);
}

TEST_CASE("double cover of a single vertex is one pair edge") {
    ReductionOutput out = basic_reduction(fixtures::edgeless(1));
    CHECK(out.instance.graph.vertex_count() == 2);
    CHECK(out.instance.graph.edge_count() == 1);
    CHECK(out.instance.thresholds.values == std::vector<int>{1, 1});
    CHECK(fully_activates(out, out.forward_map({0})));
}

TEST_CASE("no single top activates the double cover without a size-1 dominating set") {
    Graph g = fixtures::g5();
    CHECK(!classic_brute_force(ClassicProblem::DominatingSet, g, 1).yes);
    ReductionOutput out = basic_reduction(g);
    for (VertexId v = 0; v < out.instance.graph.vertex_count(); ++v)
        CHECK(!fully_activates(out, {v}));
}

TEST_CASE("a multiplicity-1 bundle is a single degree-2 connector") {
    GadgetBuilder builder;
    VertexId u = builder.add_vertex({VertexRole::Copy, 0, -1, -1}, 5);
    VertexId v = builder.add_vertex({VertexRole::Copy, 1, -1, -1}, 5);
    VertexSet created = add_ell_edge(builder, u, v, 1);
    REQUIRE(created.size() == 1);
    CHECK_THROWS_AS(add_ell_edge(builder, u, u, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_ell_edge(builder, u, v, 0), std::invalid_argument);
    Graph g = builder.graph().freeze();
    CHECK(g.degree(created[0]) == 2);
    CHECK(builder.thresholds()[created[0]] == 1);
}

TEST_CASE("bundles: count, wiring and one-sided activation") {
    GadgetBuilder builder;
    VertexId u = builder.add_vertex({VertexRole::Copy, 0, -1, -1}, 5);
    VertexId v = builder.add_vertex({VertexRole::Copy, 1, -1, -1}, 5);
    VertexSet created = add_ell_edge(builder, u, v, 3);
    CHECK(created.size() == 3);
    Graph g = builder.graph().freeze();
    for (VertexId w : created) {
        CHECK(g.degree(w) == 2);
        CHECK(g.has_edge(w, u));
        CHECK(g.has_edge(w, v));
    }
    // u alone lights the whole bundle; thresholds of u, v are unreachable
    ThresholdAssignment thr;
    thr.values = builder.thresholds();
    auto open = sigma_open(g, thr, {u});
    CHECK(open == created);
}

TEST_CASE("one-way coupler passes forward and blocks backward") {
    GadgetBuilder builder;
    VertexId u = builder.add_vertex({VertexRole::Copy, 0, -1, -1}, 99);
    VertexId v = builder.add_vertex({VertexRole::Copy, 1, -1, -1}, 1);
    DirectedEdgeGadget gadget = add_directed_edge_gadget(builder, u, v);
    Graph g = builder.graph().freeze();
    ThresholdAssignment thr;
    thr.values = builder.thresholds();

    SUBCASE("u active: the cycle fires a, then b and d, then c, then v") {
        auto trace = propagate(g, thr, {u});
        REQUIRE(trace.rounds.size() == 4);
        CHECK(trace.rounds[0] == VertexSet{gadget.a});
        CHECK(trace.rounds[1] == VertexSet{gadget.b, gadget.d});
        CHECK(trace.rounds[2] == VertexSet{gadget.c});
        CHECK(trace.rounds[3] == VertexSet{v});
    }
    SUBCASE("v active: nothing in the cycle moves") {
        thr.values[v] = 99;  // pin v so it only counts as a seed
        auto open = sigma_open(g, thr, {v});
        CHECK(open.empty());
    }
    SUBCASE("nothing active: nothing moves") {
        CHECK(sigma_open(g, thr, {}).empty());
    }
}

TEST_CASE("majority amplifier: yes side floods grid and pendings") {
    Graph g = fixtures::g5();
    auto ds = classic_brute_force(ClassicProblem::DominatingSet, g, 2);
    REQUIRE(ds.yes);
    for (int L = 1; L <= 3; ++L) {
        ReductionOutput out = majority_hardness_instance(g, 2, L);
        CHECK(out.params.expected_vertices == out.instance.graph.vertex_count());
        CHECK(out.instance.thresholds.scheme == ThresholdScheme::Majority);
        CHECK(scheme_invariant_holds(out.instance.graph, out.instance.thresholds));

        VertexSet seeds = out.forward_map(ds.witness);
        CHECK(seeds.size() == ds.witness.size() + 1);  // hub rides along
        auto closed = sigma_closed(out.instance.graph, out.instance.thresholds, seeds);

        VertexSet grid = vertices_with_role(out, VertexRole::Grid);
        CHECK(static_cast<int>(grid.size()) == 5 * L);
        CHECK(set_difference(grid, closed).empty());
        // grid pendings hang off the last layer
        int grid_pendings = 0;
        for (std::size_t v = 0; v < out.provenance.size(); ++v)
            if (out.provenance[v].role == VertexRole::Pending &&
                contains(grid, out.provenance[v].a) &&
                out.provenance[out.provenance[v].a].b == L) {
                ++grid_pendings;
                CHECK(contains(closed, static_cast<VertexId>(v)));
            }
        CHECK(grid_pendings == 25);
    }
}

TEST_CASE("majority amplifier: the grid climbs one layer per round") {
    Graph g = fixtures::g5();
    auto ds = classic_brute_force(ClassicProblem::DominatingSet, g, 2);
    const int L = 3;
    ReductionOutput out = majority_hardness_instance(g, 2, L);
    VertexSet seeds = out.forward_map(ds.witness);
    auto trace = propagate(out.instance.graph, out.instance.thresholds, seeds);
    REQUIRE(static_cast<int>(trace.rounds.size()) >= L + 3);

    auto first_round_of = [&](VertexId v) {
        for (std::size_t r = 0; r < trace.rounds.size(); ++r)
            if (contains(trace.rounds[r], v)) return static_cast<int>(r) + 1;
        return -1;
    };
    for (std::size_t v = 0; v < out.provenance.size(); ++v) {
        const Provenance& p = out.provenance[v];
        // bottoms fire in round 2, layer j of the grid in round j + 2, its
        // pendings one round after the last layer
        if (p.role == VertexRole::Bottom) CHECK(first_round_of(v) == 2);
        if (p.role == VertexRole::Grid) CHECK(first_round_of(v) == p.b + 2);
        if (p.role == VertexRole::Pending && out.provenance[p.a].role == VertexRole::Grid &&
            out.provenance[p.a].b == L)
            CHECK(first_round_of(v) == L + 3);
    }
}

TEST_CASE("majority amplifier: no side keeps the grid dark") {
    Graph g = fixtures::matching(2);  // 2K2 has no size-1 dominating set
    CHECK(!classic_brute_force(ClassicProblem::DominatingSet, g, 1).yes);
    ReductionOutput out = majority_hardness_instance(g, 1, 1);
    VertexSet grid = vertices_with_role(out, VertexRole::Grid);
    const VertexId hub = out.hub;
    // every size-2 seed set containing the hub leaves all grid vertices dark
    for (VertexId other = 0; other < out.instance.graph.vertex_count(); ++other) {
        if (other == hub) continue;
        VertexSet seeds = make_vertex_set({hub, other});
        auto open = sigma_open(out.instance.graph, out.instance.thresholds, seeds);
        CHECK(set_intersection(open, grid).empty());
    }
}

TEST_CASE("majority amplifier input validation") {
    CHECK_THROWS_AS(majority_hardness_instance(fixtures::edgeless(3), 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(majority_hardness_instance(fixtures::path3(), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(majority_hardness_instance(fixtures::path3(), 1, 0), std::invalid_argument);
}

TEST_CASE("constant-threshold amplifier: dominating seed reaches termini and pendings") {
    Graph g = fixtures::path3();  // {v2} dominates
    ReductionOutput out = constant_threshold_instance(g, 1, 2, 3);
    CHECK(out.params.expected_vertices == out.instance.graph.vertex_count());
    CHECK(out.instance.thresholds.scheme == ThresholdScheme::Constant);
    for (int t : out.instance.thresholds.values) CHECK(t <= 2);

    VertexSet seeds = out.forward_map({1});
    auto closed = sigma_closed(out.instance.graph, out.instance.thresholds, seeds);
    VertexSet pendings = vertices_with_role(out, VertexRole::Pending);
    CHECK(pendings.size() == 2 * 3);
    CHECK(set_difference(pendings, closed).empty());
    VertexSet paths = vertices_with_role(out, VertexRole::Path);
    CHECK(static_cast<int>(paths.size()) == 2 * 2);
    CHECK(set_difference(paths, closed).empty());
}

TEST_CASE("constant-threshold amplifier: bottoms fire in round 4, paths finish at n + 6") {
    Graph g = fixtures::path3();
    const int n = g.vertex_count();
    ReductionOutput out = constant_threshold_instance(g, 1, 2, 3);
    VertexSet seeds = out.forward_map({1});
    auto trace = propagate(out.instance.graph, out.instance.thresholds, seeds);
    auto first_round_of = [&](VertexId v) {
        for (std::size_t r = 0; r < trace.rounds.size(); ++r)
            if (contains(trace.rounds[r], v)) return static_cast<int>(r) + 1;
        return -1;
    };
    int last_path_round = 0, last_pending_round = 0;
    for (std::size_t v = 0; v < out.provenance.size(); ++v) {
        switch (out.provenance[v].role) {
            case VertexRole::Bottom:
                CHECK(first_round_of(v) == 4);
                break;
            case VertexRole::Path:
                last_path_round = std::max(last_path_round, first_round_of(v));
                break;
            case VertexRole::Pending:
                last_pending_round = std::max(last_pending_round, first_round_of(v));
                break;
            default:
                break;
        }
    }
    CHECK(last_path_round == n + 6);
    CHECK(last_pending_round == n + 7);
}

TEST_CASE("constant-threshold amplifier: without domination a seed wins one path at most") {
    // 2K2 has no size-1 dominating set, so no single seed completes the
    // paths; the most it can reach is the Q pendings of the path it sits on
    // (seeding a terminus directly still buys those).
    Graph g = fixtures::matching(2);
    ReductionOutput out = constant_threshold_instance(g, 1, 2, 1);
    const int P = 2, Q = 1;
    for (VertexId v = 0; v < out.instance.graph.vertex_count(); ++v) {
        auto open = sigma_open(out.instance.graph, out.instance.thresholds, {v});
        int pendings_hit = 0;
        std::set<int> paths_hit;
        for (VertexId w : open) {
            if (out.provenance[w].role != VertexRole::Pending) continue;
            ++pendings_hit;
            paths_hit.insert(out.provenance[out.provenance[w].a].b);
        }
        CHECK(pendings_hit <= Q);
        CHECK(static_cast<int>(paths_hit.size()) <= 1);
        CHECK(pendings_hit < P * Q);
    }
    // any bottom vertex stays dark from a non-dominating single top seed:
    // the other component's bottoms have no active coupler
    VertexSet bottoms = vertices_with_role(out, VertexRole::Bottom);
    auto open_from_top = sigma_open(out.instance.graph, out.instance.thresholds, {0});
    CHECK(set_intersection(open_from_top, bottoms).size() < bottoms.size());
}

TEST_CASE("constant-threshold amplifier input validation") {
    CHECK_THROWS_AS(constant_threshold_instance(fixtures::edgeless(1), 1, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(constant_threshold_instance(fixtures::path3(), 1, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("clique tester on the named graphs") {
    SUBCASE("path, k=2: an edge is a 2-clique") {
        ReductionOutput out = clique_reduction(fixtures::path3(), 2);
        CHECK(out.instance.graph.vertex_count() == 9);
        CHECK(out.instance.ell == 3);
        CHECK(out.instance.thresholds.scheme == ThresholdScheme::Unanimity);
        VertexSet seeds = out.forward_map({0, 1});
        auto open = sigma_open(out.instance.graph, out.instance.thresholds, seeds);
        CHECK(static_cast<int>(open.size()) >= 3);
        CHECK(decide_influence(out.instance).yes);
    }
    SUBCASE("triangle, k=3 activates every edge-vertex") {
        ReductionOutput out = clique_reduction(fixtures::triangle(), 3);
        CHECK(out.instance.ell == 12);
        VertexSet seeds = out.forward_map({0, 1, 2});
        auto open = sigma_open(out.instance.graph, out.instance.thresholds, seeds);
        CHECK(open.size() == 12);
        CHECK(decide_influence(out.instance).yes);
    }
    SUBCASE("path, k=3: eight edge-vertices fall short of twelve") {
        ReductionOutput out = clique_reduction(fixtures::path3(), 3);
        CHECK(out.instance.ell == 12);
        auto best = solve_max_open_exact(out.instance);
        CHECK(best.open_value == 8);
        CHECK(!decide_influence(out.instance).yes);
    }
    SUBCASE("isolated source vertices are dropped") {
        Graph g = disjoint_union(fixtures::path3(), fixtures::edgeless(2));
        ReductionOutput out = clique_reduction(g, 2);
        CHECK(count_role(out, VertexRole::Copy) == 3);
        CHECK_THROWS_AS(out.forward_map({3}), std::invalid_argument);
    }
}

TEST_CASE("densest-subgraph copier preserves the optimum") {
    SUBCASE("triangle, k=2") {
        ReductionOutput out = dks_reduction(fixtures::triangle(), 2);
        CHECK(solve_max_open_exact(out.instance).open_value == 1);
    }
    SUBCASE("edgeless graphs have value 0") {
        ReductionOutput out = dks_reduction(fixtures::edgeless(4), 2);
        CHECK(solve_max_open_exact(out.instance).open_value == 0);
    }
    SUBCASE("star, k=2") {
        ReductionOutput out = dks_reduction(fixtures::star3(), 2);
        CHECK(solve_max_open_exact(out.instance).open_value == 1);
        CHECK(classic_brute_force(ClassicProblem::DensestKSubgraph, fixtures::star3(), 2).value ==
              1);
    }
}

TEST_CASE("provenance is total and the forward map preserves size") {
    Graph g = fixtures::g5();
    for (const ReductionOutput& out :
         {basic_reduction(g), clique_reduction(g, 2), dks_reduction(g, 2)}) {
        CHECK(out.provenance.size() ==
              static_cast<std::size_t>(out.instance.graph.vertex_count()));
        CHECK(out.forward_map({0, 2}).size() == 2);
    }
    ReductionOutput majority = majority_hardness_instance(g, 2, 1);
    CHECK(majority.provenance.size() ==
          static_cast<std::size_t>(majority.instance.graph.vertex_count()));
    CHECK(majority.forward_map({0, 2}).size() == 3);  // hub included
}

TEST_CASE("verification harness agrees with itself and flags injected faults") {
    Graph g5 = fixtures::g5();
    auto basic = verify_reduction(ReductionKind::Basic, g5, 2);
    CHECK(basic.agree);
    CHECK(basic.source_yes);
    CHECK(basic.target_yes);

    auto clique = verify_reduction(ReductionKind::Clique, fixtures::path3(), 3);
    CHECK(clique.agree);
    CHECK(!clique.source_yes);
    CHECK(!clique.target_yes);

    auto dks = verify_reduction(ReductionKind::Dks, fixtures::triangle(), 2);
    CHECK(dks.agree);
    CHECK(dks.source_value == 1);

    VerifyOptions fault;
    fault.inject_fault = true;
    auto corrupted = verify_reduction(ReductionKind::Basic, g5, 2, fault);
    CHECK(!corrupted.agree);

    CHECK_THROWS_AS(verify_reduction(ReductionKind::Dks, fixtures::triangle(), 3),
                    std::invalid_argument);
}

TEST_CASE("reduction equivalences hold over the small catalogs") {
    SUBCASE("dominating set vs full activation, connected graphs") {
        for (int n = 1; n <= 5; ++n)
            for (const Graph& g : catalog::connected_graphs(n))
                for (int k = 0; k <= std::min(3, n); ++k)
                    CHECK(verify_reduction(ReductionKind::Basic, g, k).agree);
    }
    SUBCASE("clique vs decision, all graphs") {
        for (int n = 1; n <= 5; ++n)
            for (const Graph& g : catalog::all_graphs(n))
                for (int k = 2; k <= 3; ++k)
                    CHECK(verify_reduction(ReductionKind::Clique, g, k).agree);
    }
    SUBCASE("densest subgraph vs open optimum, all graphs") {
        for (int n = 2; n <= 4; ++n)
            for (const Graph& g : catalog::all_graphs(n))
                for (int k = 1; k < n && k <= 3; ++k)
                    CHECK(verify_reduction(ReductionKind::Dks, g, k).agree);
    }
}
