#pragma once

#include "dal/conjecture.hpp"
#include "dal/constructions.hpp"
#include "dal/search.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace dal {

using Json = nlohmann::ordered_json;

inline constexpr int certificate_format_version = 1;

/// Certificate kinds. Every document carries format_version, command, kind
/// and payload; graph and D where they apply.
namespace kind {
inline constexpr const char * construction = "ConstructionVerified";
inline constexpr const char * verification = "Verification";
inline constexpr const char * found = "Found";
inline constexpr const char * exhausted = "ExhaustedNone";
inline constexpr const char * budget = "BudgetExceeded";
inline constexpr const char * twins = "TwinObstruction";
inline constexpr const char * feasibility = "Feasibility";
inline constexpr const char * scan_report = "ScanReport";
} // namespace kind

auto graph_json(const Graph & g) -> Json;
auto classification_json(const Classification & c) -> Json;
auto target_json(const TargetSpec & t) -> Json;

auto construction_certificate(const std::vector<std::string> & command, const ConstructionResult & r) -> Json;
auto verification_certificate(const std::vector<std::string> & command, const Graph & g, const Labeling & f,
        const WeightProfile & p) -> Json;
auto search_certificate(const std::vector<std::string> & command, const Graph & g, const TargetSpec & target,
        const SearchOptions & options, const SearchOutcome & outcome) -> Json;
auto twin_certificate(const std::vector<std::string> & command, const Graph & g, const TwinCertificate & twins) -> Json;
auto feasibility_certificate(const std::vector<std::string> & command, const FeasibleParams & params) -> Json;
auto scan_certificate(const std::vector<std::string> & command, const ScanOptions & options, const ScanReport & report) -> Json;

struct RecheckResult
{
    bool ok = true;
    std::string reason;
};

/// Re-derives a certificate's claims from its own contents. With
/// `rerun_search`, ExhaustedNone certificates are re-searched under the
/// recorded pruning configuration and must reproduce the node count.
auto recheck_certificate(const Json & certificate, bool rerun_search = true) -> RecheckResult;

} // namespace dal
