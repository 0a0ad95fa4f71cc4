#pragma once

/**
 * @file report.hpp
 * @brief JSON projections of the library's report types. All big integers
 *        serialize as decimal strings; key order is insertion order and
 *        identical inputs give byte-identical documents.
 */

#include <json.hpp>

#include "cyclo/scenarios.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

std::string big_str(const BigInt& v);

Json to_json(const FFElem& e);
Json to_json(const SplitContext& ctx);
Json to_json(const SplitReport& rep);
Json to_json(const VerifyReport& rep);
Json to_json(const WitnessResult& res);
Json to_json(const RegularityReport& rep);
Json to_json(const P3ScanResult& res);
Json to_json(const RankResult& res);

/// Standard CLI envelope; `timing` is null unless a measured duration is
/// supplied (reports must be byte-identical across runs by default).
Json make_envelope(const std::string& command, Json inputs, Json results,
                   std::optional<double> timing_seconds = std::nullopt);

}  // namespace cyclo
