// JSON result documents, dimension-table files, text tables, hashing and the
// BCWB_THREADS-capped parallel map.  All output is byte-deterministic for a
// fixed input, whatever the thread count.

#pragma once

#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "bcwb/diamond.hpp"
#include "bcwb/invariants.hpp"

namespace bcwb {

inline constexpr const char* kSchemaVersion = "bcwb/1";

// BCWB_THREADS when set (must parse as a positive integer), otherwise the
// hardware concurrency clamped to 8.
int thread_limit();

// Index-parallel map; results must be written by index so evaluation order
// cannot leak into the output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

std::string sha256_hex(const std::string& data);

nlohmann::json report_to_json(const InvariantReport& report);
nlohmann::json map_summary_to_json(const MapSummary& ms);

nlohmann::json dim_tables_to_json(const DimTables& tables);
DimTables dim_tables_from_json(const nlohmann::json& j);
HodgeDiamond hodge_diamond_from_json(const nlohmann::json& j);
SurfaceData surface_data_from_json(const nlohmann::json& j);

// Which pieces `compute` should produce.  Default is everything.
struct ComputeSelection {
    bool full = true;
    std::vector<std::pair<int, int>> bc;            // --bc p q
    std::vector<std::array<int, 3>> hyper;          // --hyper k p q
    std::vector<std::pair<int, int>> trunc;         // --trunc k p
    bool maps_c = true;
    bool maps_i = true;
};

// The ResultDocument of one model run: schema version, model identity with
// source hash, invariant tables, map summaries and structural checks.
nlohmann::json compute_document(const CohomologyEngine& engine, const std::string& source,
                                const ComputeSelection& selection);

std::string document_to_table_text(const nlohmann::json& doc);

// Canonical serialization used everywhere a document goes to disk.
std::string dump_json(const nlohmann::json& j);

}  // namespace bcwb
