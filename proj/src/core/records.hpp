#pragma once
// JSON serialization of results and reports, with 12-significant-digit
// numeric normalization so records round-trip bit-identically.
#include <string>

#include <json.hpp>

#include "core/bounds.hpp"
#include "core/observables.hpp"
#include "core/optimizer.hpp"
#include "core/registry.hpp"
#include "core/state.hpp"

namespace eur::records {

using Json = nlohmann::ordered_json;

// Current schema version of emitted artifacts.
extern const char* const kSchemaVersion;

// Normalizes a double to 12 significant digits (the precision stored in
// records).
double round12(double v);
Json num(double v);

Json vec_to_json(const Vec& v);                 // [[re, im], ...]
Json params_to_json(const StateParams& p);      // {"angles": [...], "phases": [...]}
Json set_to_json(const ObservableSet& set);
Json result_to_json(const OptimizationResult& r);
Json bound_report_to_json(const BoundReport& rep);
Json case_results_to_json(const std::vector<CaseResult>& rows);

// Writes content to path via a temporary file and an atomic rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace eur::records
