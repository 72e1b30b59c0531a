#pragma once

#include <optional>
#include <string>

#include "influence/fpt.hpp"
#include "influence/instance.hpp"
#include "influence/oracles.hpp"
#include "influence/reductions.hpp"

namespace influence {

/// Context shared by every result record: what was solved on which instance.
struct RecordMeta {
    std::string problem;
    int n = 0;
    int m = 0;
    int k = 0;
    std::optional<int> ell;
};

RecordMeta meta_for(const std::string& problem, const Instance& inst);

// One-object JSON documents with the fields problem, n, m, k, ell, value,
// witness, explored, elapsed-ms (plus record-specific extras).
std::string solve_record(const RecordMeta& meta, const SolveResult& result,
                         const std::string& extra_key = {}, const std::string& extra_value = {});
std::string decision_record(const RecordMeta& meta, const DecisionResult& result,
                            const std::optional<PairProfile>& accepted = std::nullopt);
std::string set_record(const RecordMeta& meta, const VertexSet& set, double elapsed_ms);

// Sidecar format: one line per vertex, "<index>\t<label>".
std::string provenance_sidecar(const ReductionOutput& output);

}  // namespace influence
