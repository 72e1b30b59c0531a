#include "influence/records.hpp"

#include <sstream>

#include "json.hpp"

namespace influence {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json base_record(const RecordMeta& meta) {
    ordered_json doc;
    doc["problem"] = meta.problem;
    doc["n"] = meta.n;
    doc["m"] = meta.m;
    doc["k"] = meta.k;
    if (meta.ell)
        doc["ell"] = *meta.ell;
    else
        doc["ell"] = nullptr;
    return doc;
}

double round_ms(double ms) { return ms < 0 ? 0.0 : ms; }

}  // namespace

RecordMeta meta_for(const std::string& problem, const Instance& inst) {
    RecordMeta meta;
    meta.problem = problem;
    meta.n = inst.graph.vertex_count();
    meta.m = inst.graph.edge_count();
    meta.k = inst.k;
    meta.ell = inst.ell;
    return meta;
}

std::string solve_record(const RecordMeta& meta, const SolveResult& result,
                         const std::string& extra_key, const std::string& extra_value) {
    ordered_json doc = base_record(meta);
    doc["value"] = meta.problem == "max-closed-influence" ? result.closed_value : result.open_value;
    doc["witness"] = result.seeds;
    doc["explored"] = result.explored;
    doc["elapsed-ms"] = round_ms(result.elapsed_ms);
    doc["exact"] = result.exact;
    if (!extra_key.empty()) doc[extra_key] = extra_value;
    return doc.dump();
}

std::string decision_record(const RecordMeta& meta, const DecisionResult& result,
                            const std::optional<PairProfile>& accepted) {
    ordered_json doc = base_record(meta);
    doc["value"] = result.yes ? 1 : 0;
    doc["witness"] = result.witness ? ordered_json(*result.witness) : ordered_json(nullptr);
    doc["explored"] = result.explored;
    doc["elapsed-ms"] = round_ms(result.elapsed_ms);
    if (accepted) {
        doc["x"] = accepted->x;
        ordered_json pairs = ordered_json::array();
        for (auto [ki, li] : accepted->pairs) pairs.push_back(ordered_json::array({ki, li}));
        doc["profile"] = pairs;
    }
    return doc.dump();
}

std::string set_record(const RecordMeta& meta, const VertexSet& set, double elapsed_ms) {
    ordered_json doc = base_record(meta);
    doc["value"] = set.size();
    doc["witness"] = set;
    doc["explored"] = 0;
    doc["elapsed-ms"] = round_ms(elapsed_ms);
    return doc.dump();
}

std::string provenance_sidecar(const ReductionOutput& output) {
    std::ostringstream out;
    for (std::size_t v = 0; v < output.provenance.size(); ++v)
        out << v << "\t" << provenance_label(output.provenance[v]) << "\n";
    return out.str();
}

}  // namespace influence
