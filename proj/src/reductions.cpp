#include "influence/reductions.hpp"

#include <sstream>
#include <stdexcept>

#include "influence/propagation.hpp"
#include "influence/subsets.hpp"

namespace influence {

std::string provenance_label(const Provenance& p) {
    std::ostringstream out;
    switch (p.role) {
        case VertexRole::Top:
            out << "top " << p.a;
            break;
        case VertexRole::Bottom:
            out << "bottom " << p.a;
            break;
        case VertexRole::Gadget:
            out << "gadget " << p.a << " " << p.b << " " << p.c;
            break;
        case VertexRole::Pending:
            out << "pending " << p.a;
            break;
        case VertexRole::Grid:
            out << "grid " << p.a << " " << p.b;
            break;
        case VertexRole::Hub:
            out << "hub";
            break;
        case VertexRole::EdgeVertex:
            out << "edge-vertex " << p.a << " " << p.b << " " << p.c;
            break;
        case VertexRole::Path:
            out << "path " << p.a << " " << p.b;
            break;
        case VertexRole::Copy:
            out << "copy " << p.a;
            break;
    }
    return out.str();
}

VertexSet ReductionOutput::forward_map(const VertexSet& source_solution) const {
    VertexSet seeds;
    for (VertexId v : source_solution) {
        if (v < 0 || v >= static_cast<VertexId>(source_to_target.size()) ||
            source_to_target[v] < 0)
            throw std::invalid_argument("source vertex " + std::to_string(v) +
                                        " has no image in the instance");
        seeds.push_back(source_to_target[v]);
    }
    if (map_includes_hub) seeds.push_back(hub);
    return make_vertex_set(std::move(seeds));
}

VertexId GadgetBuilder::add_vertex(const Provenance& p, int threshold) {
    VertexId id = graph_.add_vertex();
    thresholds_.push_back(threshold);
    provenance_.push_back(p);
    return id;
}

VertexSet add_ell_edge(GadgetBuilder& builder, VertexId u, VertexId v, int count) {
    if (count < 1) throw std::invalid_argument("bundle multiplicity must be >= 1");
    if (u == v) throw std::invalid_argument("bundle endpoints must differ");
    VertexSet created;
    for (int i = 1; i <= count; ++i) {
        VertexId w = builder.add_vertex({VertexRole::Gadget, u, v, i}, 1);
        builder.add_edge(w, u);
        builder.add_edge(w, v);
        created.push_back(w);
    }
    return created;
}

DirectedEdgeGadget add_directed_edge_gadget(GadgetBuilder& builder, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("coupler endpoints must differ");
    DirectedEdgeGadget g;
    g.a = builder.add_vertex({VertexRole::Gadget, u, v, 1}, 1);
    g.b = builder.add_vertex({VertexRole::Gadget, u, v, 2}, 1);
    g.c = builder.add_vertex({VertexRole::Gadget, u, v, 3}, 2);
    g.d = builder.add_vertex({VertexRole::Gadget, u, v, 4}, 1);
    builder.add_edge(g.a, g.b);
    builder.add_edge(g.b, g.c);
    builder.add_edge(g.c, g.d);
    builder.add_edge(g.d, g.a);
    builder.add_edge(g.a, u);
    builder.add_edge(g.c, v);
    return g;
}

ReductionOutput basic_reduction(const Graph& graph) {
    const int n = graph.vertex_count();
    GadgetBuilder builder;
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Top, v, -1, -1});
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Bottom, v, -1, -1});
    auto top = [](VertexId v) { return v; };
    auto bottom = [n](VertexId v) { return v + n; };

    for (VertexId v = 0; v < n; ++v) builder.add_edge(top(v), bottom(v));
    for (auto [u, v] : graph.edges()) {
        builder.add_edge(top(u), bottom(v));
        builder.add_edge(top(v), bottom(u));
    }

    ReductionOutput out;
    out.instance.graph = builder.graph().freeze();
    out.instance.thresholds.scheme = ThresholdScheme::General;
    out.instance.thresholds.values.resize(out.instance.graph.vertex_count());
    for (VertexId v = 0; v < n; ++v) {
        out.instance.thresholds.values[top(v)] = out.instance.graph.degree(top(v));
        out.instance.thresholds.values[bottom(v)] = 1;
    }
    out.provenance = builder.provenance();
    out.params.kind = "basic";
    out.params.expected_vertices = 2 * n;
    out.source_to_target.resize(n);
    for (VertexId v = 0; v < n; ++v) out.source_to_target[v] = top(v);
    return out;
}

ReductionOutput majority_hardness_instance(const Graph& graph, int k, int L) {
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    if (n < 1) throw std::invalid_argument("source graph must be non-empty");
    if (k < 1 || L < 1) throw std::invalid_argument("requires k >= 1 and L >= 1");
    for (VertexId v = 0; v < n; ++v)
        if (graph.degree(v) == 0)
            throw std::invalid_argument("source graph must have no isolated vertices");

    const int bundle = k + 2;
    GadgetBuilder builder;
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Top, v, -1, -1});
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Bottom, v, -1, -1});
    auto top = [](VertexId v) { return v; };
    auto bottom = [n](VertexId v) { return v + n; };
    VertexId hub = builder.add_vertex({VertexRole::Hub, -1, -1, -1});

    // Every top-bottom adjacency becomes a (k+2)-bundle: the pair edge and
    // both cross edges per source edge.
    for (VertexId v = 0; v < n; ++v) add_ell_edge(builder, top(v), bottom(v), bundle);
    for (auto [u, v] : graph.edges()) {
        add_ell_edge(builder, top(u), bottom(v), bundle);
        add_ell_edge(builder, top(v), bottom(u), bundle);
    }

    // Hub-to-bottom bundles sized so that a seeded hub plus one activated
    // bundle from a dominating top meets each bottom's majority threshold
    // exactly.
    for (VertexId v = 0; v < n; ++v)
        add_ell_edge(builder, hub, bottom(v), n + bundle * (graph.degree(v) - 1));

    // Grid: layer 1 hangs off all bottoms and the hub; consecutive layers are
    // fully joined.
    std::vector<std::vector<VertexId>> grid(L);
    for (int j = 0; j < L; ++j) {
        grid[j].resize(n);
        for (int i = 0; i < n; ++i)
            grid[j][i] = builder.add_vertex({VertexRole::Grid, i + 1, j + 1, -1});
        for (int i = 0; i < n; ++i) {
            if (j == 0) {
                for (VertexId v = 0; v < n; ++v) builder.add_edge(grid[0][i], bottom(v));
                builder.add_edge(grid[0][i], hub);
            } else {
                for (int t = 0; t < n; ++t) builder.add_edge(grid[j][i], grid[j - 1][t]);
            }
        }
    }

    auto add_pendings = [&](VertexId anchor, std::int64_t count) {
        for (std::int64_t i = 0; i < count; ++i) {
            VertexId p = builder.add_vertex({VertexRole::Pending, anchor, -1, -1});
            builder.add_edge(p, anchor);
        }
    };
    for (int i = 0; i < n; ++i) add_pendings(grid[L - 1][i], n);
    for (VertexId v = 0; v < n; ++v)
        add_pendings(top(v), static_cast<std::int64_t>(graph.degree(v) + 1) * bundle);
    add_pendings(hub, static_cast<std::int64_t>(n) + static_cast<std::int64_t>(n) * n +
                          static_cast<std::int64_t>(bundle) * (2 * m - n));

    ReductionOutput out;
    out.instance.graph = builder.graph().freeze();
    out.instance.thresholds = assign_thresholds(out.instance.graph, ThresholdScheme::Majority);
    out.instance.k = k + 1;  // the mapped solution is k tops plus the hub
    out.provenance = builder.provenance();
    out.params.kind = "majority";
    out.params.k = k;
    out.params.L = L;
    out.params.expected_vertices = 3LL * n + 1 + 3LL * n * n + static_cast<std::int64_t>(n) * L +
                                   8LL * m * bundle;
    if (out.params.expected_vertices != out.instance.graph.vertex_count())
        throw std::logic_error("majority construction size mismatch");
    out.source_to_target.resize(n);
    for (VertexId v = 0; v < n; ++v) out.source_to_target[v] = top(v);
    out.hub = hub;
    out.map_includes_hub = true;
    return out;
}

ReductionOutput constant_threshold_instance(const Graph& graph, int k, int P, int Q) {
    const int n = graph.vertex_count();
    if (n < 2) throw std::invalid_argument("requires a source graph with n >= 2");
    if (k < 1 || P < 1 || Q < 1) throw std::invalid_argument("requires k, P, Q >= 1");

    GadgetBuilder builder;
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Top, v, -1, -1}, 2);
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Bottom, v, -1, -1}, 1);
    auto top = [](VertexId v) { return v; };
    auto bottom = [n](VertexId v) { return v + n; };

    // One-way couplers replace every top-bottom adjacency, oriented from the
    // tops down.
    for (VertexId v = 0; v < n; ++v) add_directed_edge_gadget(builder, top(v), bottom(v));
    for (auto [u, v] : graph.edges()) {
        add_directed_edge_gadget(builder, top(u), bottom(v));
        add_directed_edge_gadget(builder, top(v), bottom(u));
    }

    // P paths of n-1 threshold-2 vertices; position t is fed by a coupler
    // from one bottom (positions beyond the first) or from the first two
    // bottoms (position 0), so a path completes only when all bottoms fire.
    for (int j = 1; j <= P; ++j) {
        std::vector<VertexId> path(n - 1);
        for (int i = 1; i <= n - 1; ++i) {
            path[i - 1] = builder.add_vertex({VertexRole::Path, i, j, -1}, 2);
            if (i >= 2) builder.add_edge(path[i - 2], path[i - 1]);
        }
        add_directed_edge_gadget(builder, bottom(0), path[0]);
        for (VertexId b = 1; b < n; ++b)
            add_directed_edge_gadget(builder, bottom(b), path[b - 1]);
        for (int q = 0; q < Q; ++q) {
            VertexId p = builder.add_vertex({VertexRole::Pending, path[n - 2], -1, -1}, 1);
            builder.add_edge(p, path[n - 2]);
        }
    }

    ReductionOutput out;
    out.instance.graph = builder.graph().freeze();
    out.instance.thresholds = make_constant_thresholds(builder.thresholds(), 2);
    out.instance.k = k;
    out.provenance = builder.provenance();
    out.params.kind = "constant";
    out.params.k = k;
    out.params.P = P;
    out.params.Q = Q;
    // 2n covers, 4 coupler vertices per pair edge, per cross direction and
    // per bottom-to-path feed, plus the paths and their pendings.
    out.params.expected_vertices =
        2LL * n + 4LL * (n + 2LL * graph.edge_count()) +
        static_cast<std::int64_t>(P) * ((n - 1) + 4LL * n + Q);
    if (out.params.expected_vertices != out.instance.graph.vertex_count())
        throw std::logic_error("constant-threshold construction size mismatch");
    out.source_to_target.resize(n);
    for (VertexId v = 0; v < n; ++v) out.source_to_target[v] = top(v);
    return out;
}

ReductionOutput clique_reduction(const Graph& graph, int k) {
    if (k < 2) throw std::invalid_argument("clique reduction requires k >= 2");
    const int n = graph.vertex_count();

    ReductionOutput out;
    out.source_to_target.assign(n, -1);
    GadgetBuilder builder;
    for (VertexId v = 0; v < n; ++v) {
        if (graph.degree(v) == 0) continue;  // irrelevant to any clique of size >= 2
        out.source_to_target[v] = builder.add_vertex({VertexRole::Copy, v, -1, -1});
    }
    for (auto [u, v] : graph.edges()) {
        for (int b = 1; b <= k + 1; ++b) {
            VertexId e = builder.add_vertex({VertexRole::EdgeVertex, u, v, b});
            builder.add_edge(e, out.source_to_target[u]);
            builder.add_edge(e, out.source_to_target[v]);
        }
    }

    out.instance.graph = builder.graph().freeze();
    out.instance.thresholds = assign_thresholds(out.instance.graph, ThresholdScheme::Unanimity);
    out.instance.k = std::min(k, out.instance.graph.vertex_count());
    out.instance.ell = static_cast<int>((k + 1) * binomial(k, 2));
    out.provenance = builder.provenance();
    out.params.kind = "clique";
    out.params.k = k;
    out.params.expected_vertices = out.instance.graph.vertex_count();
    return out;
}

ReductionOutput dks_reduction(const Graph& graph, int k) {
    if (k < 1) throw std::invalid_argument("densest-subgraph reduction requires k >= 1");
    const int n = graph.vertex_count();

    GadgetBuilder builder;
    for (VertexId v = 0; v < n; ++v) builder.add_vertex({VertexRole::Copy, v, -1, -1});
    for (auto [u, v] : graph.edges()) {
        VertexId e = builder.add_vertex({VertexRole::EdgeVertex, u, v, 1});
        builder.add_edge(e, u);
        builder.add_edge(e, v);
    }
    for (int b = 1; b <= k + 1; ++b) {
        VertexId guard = builder.add_vertex({VertexRole::Gadget, b, -1, -1});
        for (VertexId v = 0; v < n; ++v) builder.add_edge(guard, v);
    }

    ReductionOutput out;
    out.instance.graph = builder.graph().freeze();
    out.instance.thresholds = assign_thresholds(out.instance.graph, ThresholdScheme::Unanimity);
    out.instance.k = k;
    out.provenance = builder.provenance();
    out.params.kind = "dks";
    out.params.k = k;
    out.params.expected_vertices = static_cast<std::int64_t>(n) + graph.edge_count() + k + 1;
    if (out.params.expected_vertices != out.instance.graph.vertex_count())
        throw std::logic_error("densest-subgraph construction size mismatch");
    out.source_to_target.resize(n);
    for (VertexId v = 0; v < n; ++v) out.source_to_target[v] = v;
    return out;
}

ReductionKind reduction_kind_from_name(const std::string& name) {
    if (name == "basic") return ReductionKind::Basic;
    if (name == "majority") return ReductionKind::Majority;
    if (name == "constant") return ReductionKind::Constant;
    if (name == "clique") return ReductionKind::Clique;
    if (name == "dks") return ReductionKind::Dks;
    throw std::invalid_argument("unknown reduction kind: " + name);
}

std::string reduction_kind_name(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Basic:
            return "basic";
        case ReductionKind::Majority:
            return "majority";
        case ReductionKind::Constant:
            return "constant";
        case ReductionKind::Clique:
            return "clique";
        case ReductionKind::Dks:
            return "dks";
    }
    return "unknown";
}

namespace {

void corrupt_first_of_role(ReductionOutput& out, VertexRole role, int new_threshold) {
    for (std::size_t v = 0; v < out.provenance.size(); ++v) {
        if (out.provenance[v].role == role) {
            out.instance.thresholds.values[v] = new_threshold;
            out.instance.thresholds.scheme = ThresholdScheme::General;
            return;
        }
    }
    throw std::logic_error("no vertex with the requested role to corrupt");
}

}  // namespace

VerifyReport verify_reduction(ReductionKind kind, const Graph& source, int k,
                              const VerifyOptions& options) {
    SolverOptions solver{options.cap, 1};
    VerifyReport report;
    report.kind = kind;

    switch (kind) {
        case ReductionKind::Basic: {
            ClassicResult ds =
                classic_brute_force(ClassicProblem::DominatingSet, source, k, solver);
            ReductionOutput red = basic_reduction(source);
            if (options.inject_fault) {
                // Raising a bottom threshold to 2 is not always detectable
                // (two seeded dominators still cover it), so the self-test
                // pins the first bottom above its degree: it can then only
                // be active as a seed, which breaks every yes-instance with
                // a spare-budget-free dominating set.
                for (std::size_t v = 0; v < red.provenance.size(); ++v)
                    if (red.provenance[v].role == VertexRole::Bottom) {
                        corrupt_first_of_role(
                            red, VertexRole::Bottom,
                            red.instance.graph.degree(static_cast<VertexId>(v)) + 1);
                        break;
                    }
            }
            red.instance.k = k;
            SolveResult closed = solve_max_closed_exact(red.instance, solver);
            report.source_yes = ds.yes;
            report.target_yes = closed.closed_value == red.instance.graph.vertex_count();
            report.agree = report.source_yes == report.target_yes;
            report.source_witness = ds.witness;
            if (report.target_yes) report.target_witness = closed.seeds;
            report.detail = "dominating set vs full activation";
            break;
        }
        case ReductionKind::Clique: {
            ClassicResult clique = classic_brute_force(ClassicProblem::Clique, source, k, solver);
            ReductionOutput red = clique_reduction(source, k);
            if (options.inject_fault && red.instance.graph.vertex_count() > 0) {
                for (std::size_t v = 0; v < red.provenance.size(); ++v)
                    if (red.provenance[v].role == VertexRole::EdgeVertex) {
                        red.instance.thresholds.values[v] += 1;
                        red.instance.thresholds.scheme = ThresholdScheme::General;
                        break;
                    }
            }
            DecisionResult decision = decide_influence(red.instance, solver);
            report.source_yes = clique.yes;
            report.target_yes = decision.yes;
            report.agree = report.source_yes == report.target_yes;
            report.source_witness = clique.witness;
            if (decision.witness) report.target_witness = *decision.witness;
            report.detail = "k-clique vs (k, (k+1)*C(k,2))-decision";
            break;
        }
        case ReductionKind::Dks: {
            if (k >= source.vertex_count())
                throw std::invalid_argument(
                    "densest-subgraph verification requires k < n: with every copy seedable "
                    "the guard vertices activate and break value preservation");
            ClassicResult dks =
                classic_brute_force(ClassicProblem::DensestKSubgraph, source, k, solver);
            ReductionOutput red = dks_reduction(source, k);
            if (options.inject_fault && source.edge_count() > 0) {
                for (std::size_t v = 0; v < red.provenance.size(); ++v)
                    if (red.provenance[v].role == VertexRole::EdgeVertex) {
                        red.instance.thresholds.values[v] = 1;
                        red.instance.thresholds.scheme = ThresholdScheme::General;
                        break;
                    }
            }
            SolveResult open = solve_max_open_exact(red.instance, solver);
            report.source_value = dks.value;
            report.target_value = open.open_value;
            report.agree = report.source_value == report.target_value;
            report.source_witness = dks.witness;
            report.target_witness = open.seeds;
            report.detail = "densest-k-subgraph value vs open influence optimum";
            break;
        }
        default:
            throw std::invalid_argument("verification supports basic, clique and dks");
    }
    return report;
}

std::string format_verify_report(const VerifyReport& report) {
    std::ostringstream out;
    out << "kind: " << reduction_kind_name(report.kind) << "\n";
    out << "check: " << report.detail << "\n";
    if (report.kind == ReductionKind::Dks) {
        out << "source value: " << report.source_value << "\n";
        out << "target value: " << report.target_value << "\n";
    } else {
        out << "source answer: " << (report.source_yes ? "yes" : "no") << "\n";
        out << "target answer: " << (report.target_yes ? "yes" : "no") << "\n";
    }
    auto dump = [&](const char* name, const VertexSet& set) {
        out << name << ":";
        for (VertexId v : set) out << " " << v;
        out << "\n";
    };
    dump("source witness", report.source_witness);
    dump("target witness", report.target_witness);
    out << "agree: " << (report.agree ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace influence
