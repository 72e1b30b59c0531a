#include <random>

#include "doctest.h"
#include "influence/catalog.hpp"
#include "influence/propagation.hpp"
#include "reference.hpp"

using namespace influence;

namespace {

ThresholdAssignment unanimity(const Graph& g) {
    return assign_thresholds(g, ThresholdScheme::Unanimity);
}

}  // namespace

TEST_CASE("path with unanimity: center seed lights both leaves in one round") {
    Graph g = fixtures::path3();
    auto trace = propagate(g, unanimity(g), {1});
    REQUIRE(trace.rounds.size() == 1);
    CHECK(trace.rounds[0] == VertexSet{0, 2});
    CHECK(trace.final_open == VertexSet{0, 2});
    CHECK(trace.final_closed == VertexSet{0, 1, 2});
}

TEST_CASE("empty seeds activate nothing when every threshold is positive") {
    for (const Graph& g : {fixtures::path3(), fixtures::cycle4(), fixtures::g5()}) {
        auto trace = propagate(g, unanimity(g), {});
        CHECK(trace.rounds.empty());
        CHECK(trace.final_open.empty());
    }
}

TEST_CASE("4-cycle with majority thresholds cascades around the cycle") {
    Graph g = fixtures::cycle4();
    auto thr = assign_thresholds(g, ThresholdScheme::Majority);
    auto trace = propagate(g, thr, {0});
    REQUIRE(trace.rounds.size() == 2);
    CHECK(trace.rounds[0] == VertexSet{1, 3});
    CHECK(trace.rounds[1] == VertexSet{2});
    CHECK(trace.final_closed == VertexSet{0, 1, 2, 3});
}

TEST_CASE("threshold-0 vertices activate in round one even from empty seeds") {
    Graph g = fixtures::edgeless(3);
    auto trace = propagate(g, unanimity(g), {});
    REQUIRE(trace.rounds.size() == 1);
    CHECK(trace.rounds[0] == VertexSet{0, 1, 2});
}

TEST_CASE("open and closed activation sets") {
    Graph g = fixtures::path3();
    auto thr = unanimity(g);
    CHECK(sigma_open(g, thr, {0, 2}) == VertexSet{1});
    CHECK(sigma_open(g, thr, {0, 1, 2}).empty());  // seeds never count as open
    CHECK(sigma_closed(g, thr, {1}) == VertexSet{0, 1, 2});
    CHECK(sigma_closed(g, thr, {}).empty());

    Graph c4 = fixtures::cycle4();
    CHECK(sigma_open(c4, unanimity(c4), {1, 3}) == VertexSet{0, 2});
    CHECK(sigma_closed(c4, unanimity(c4), {1, 3}) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("trace invariants: disjoint rounds, consistent final sets") {
    std::mt19937 rng(11);
    for (int round = 0; round < 300; ++round) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = catalog::random_graph(rng, n, 0.4);
        std::vector<int> values(n);
        for (int& t : values) t = static_cast<int>(rng() % (g.max_degree() + 2));
        ThresholdAssignment thr;
        thr.values = values;
        VertexSet seeds;
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 3 == 0) seeds.push_back(v);

        auto trace = propagate(g, thr, seeds);
        CHECK(trace.rounds.size() <= static_cast<std::size_t>(n));
        VertexSet all = seeds;
        for (const auto& r : trace.rounds) {
            CHECK(!r.empty());
            CHECK(sets_disjoint(all, r));  // rounds disjoint from seeds and each other
            all = set_union(all, r);
        }
        CHECK(all == trace.final_closed);
        CHECK(set_difference(trace.final_closed, seeds) == trace.final_open);

        // cross-check the final set against the reference propagator
        std::set<VertexId> ref_seeds(seeds.begin(), seeds.end());
        auto ref_closed = ref::propagate_ref(g, values, ref_seeds);
        CHECK(VertexSet(ref_closed.begin(), ref_closed.end()) == trace.final_closed);
    }
}

TEST_CASE("activation is monotone in the seed set") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : catalog::connected_graphs(n)) {
            auto thr = unanimity(g);
            std::mt19937 rng(n);
            for (int round = 0; round < 30; ++round) {
                VertexSet small, big;
                for (VertexId v = 0; v < n; ++v) {
                    bool in_small = rng() % 4 == 0;
                    if (in_small) small.push_back(v);
                    if (in_small || rng() % 3 == 0) big.push_back(v);
                }
                auto closed_small = sigma_closed(g, thr, small);
                auto closed_big = sigma_closed(g, thr, big);
                CHECK(set_difference(closed_small, closed_big).empty());
            }
        }
    }
}

TEST_CASE("unanimity reaches its fixed point in one round with an independent open set") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : catalog::connected_graphs(n)) {
            auto thr = unanimity(g);
            // exhaustive over all seed sets up to size 3
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) > 3) continue;
                VertexSet seeds;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1u) seeds.push_back(v);
                auto trace = propagate(g, thr, seeds);
                CHECK(trace.rounds.size() <= 1);
                for (VertexId u : trace.final_open)
                    for (VertexId v : trace.final_open)
                        if (u < v) CHECK(!g.has_edge(u, v));
                CHECK(sets_disjoint(trace.final_open, seeds));
            }
        }
    }
}

TEST_CASE("closed count equals seed count plus open count") {
    std::mt19937 rng(23);
    for (int round = 0; round < 1000; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = catalog::random_graph(rng, n, 0.35);
        auto thr = rng() % 2 ? assign_thresholds(g, ThresholdScheme::Unanimity)
                             : assign_thresholds(g, ThresholdScheme::Majority);
        int k = static_cast<int>(rng() % (n + 1));
        VertexSet seeds;
        while (static_cast<int>(seeds.size()) < k) {
            VertexId v = static_cast<VertexId>(rng() % n);
            if (!contains(seeds, v)) seeds.insert(std::lower_bound(seeds.begin(), seeds.end(), v), v);
        }
        auto trace = propagate(g, thr, seeds);
        CHECK(trace.final_closed.size() == seeds.size() + trace.final_open.size());
    }
}

TEST_CASE("frozen vertices never activate") {
    Graph g = fixtures::path3();
    auto thr = unanimity(g);
    std::vector<char> frozen{0, 0, 1};  // freeze one leaf
    auto trace = propagate_frozen(g, thr, {1}, frozen);
    CHECK(trace.final_open == VertexSet{0});
    CHECK_THROWS_AS(propagate_frozen(g, thr, {2}, frozen), std::invalid_argument);
}

TEST_CASE("trace dump lists one ascending line per round") {
    Graph g = fixtures::cycle4();
    auto trace = propagate(g, assign_thresholds(g, ThresholdScheme::Majority), {0});
    CHECK(format_trace(trace) == "round 1: 1 3\nround 2: 2\n");
}
