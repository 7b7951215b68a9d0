#pragma once

// Machine-readable reports: {"tool_version", "input", "results", "checks"}.

#include "cicy/serialize.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cicy {

const char* tool_version();

struct Check {
    std::string name;
    Json expected;
    Json got;
    std::string provenance; ///< "published", "derived", "trivial"
    std::string source;     ///< where the expected value comes from; may be empty
    bool pass = false;

    friend bool operator==(const Check&, const Check&) = default;
};

/// pass = (expected == got).
Check make_check(std::string name, Json expected, Json got, std::string provenance, std::string source = {});

struct Report {
    std::string tool_version;
    Json input;
    Json results = Json::object();
    std::vector<Check> checks;

    bool all_pass() const;
    friend bool operator==(const Report&, const Report&) = default;
};

Json report_to_json(const Report& report);
Report report_from_json(const Json& value);
std::string emit(const Report& report);
Report parse_report(std::string_view text);

/// Shape, flags and dimension; the single check is "valid".
Report validate_report(const ConfigurationMatrix& cfg, const std::string& input);

/// e, b2 (or the reason it is unavailable), Hodge numbers for CICY 3-folds and
/// the Hilbert polynomial with values for l = 0..5. The polarization defaults
/// to all ones.
Report invariants_report(const ConfigurationMatrix& cfg, const std::string& input,
                         const std::optional<MultiDegree>& polarization = std::nullopt);

/// Every contraction site, or only the given 0-based row (PreconditionError if
/// that row is not a site).
Report transition_report(const ConfigurationMatrix& cfg, const std::string& input,
                         std::optional<std::size_t> row = std::nullopt);

struct ConnectOutcome {
    Report report;
    TransitionChain chain;
};

ConnectOutcome connect_report(const ConfigurationMatrix& cfg, const std::string& input);

Report verify_chain_report(const TransitionChain& chain, const std::string& input);

} // namespace cicy
