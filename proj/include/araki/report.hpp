#pragma once

#include <string>

#include <json.hpp>

#include "araki/check_result.hpp"
#include "araki/search.hpp"

namespace araki {

// Shortest exact formatting is not enough for the report contract:
// numeric fields carry 17 significant digits so replays compare bitwise.
std::string format_double(double v);

nlohmann::ordered_json params_to_json(const ExponentParams& p);
ExponentParams params_from_json(const nlohmann::json& j);

// Structured record serialization (state files, payload exchange).
nlohmann::ordered_json record_to_json(const SearchRecord& r, bool with_payload);
SearchRecord record_from_json(const nlohmann::json& j);

// Canonical line-delimited report form: fixed key order, 17-digit
// numerics, no timestamps. Identical flags + seed produce identical
// bytes.
std::string record_to_report_line(const SearchRecord& r);

// Lossy convenience export: one row per check, diagnostics dropped.
std::string record_csv_header();
std::string record_to_csv(const SearchRecord& r);

// Wraps a bare CheckResult (e.g. a divergence ordering row) so it can
// flow through the same report pipeline.
SearchRecord record_from_check(const CheckResult& c);

}  // namespace araki
