#pragma once

// JSON encodings shared by the chain files and the reports.

#include "cicy/web.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace cicy {

using Json = nlohmann::json;

/// Numbers that fit in 64 bits become JSON integers, larger ones decimal strings.
Json integer_to_json(const Integer& value);
/// Accepts either encoding; throws InvalidArgument otherwise.
Integer integer_from_json(const Json& value);

/// The text matrix format split into lines.
Json matrix_to_json(const ConfigurationMatrix& cfg);
ConfigurationMatrix matrix_from_json(const Json& lines);

Json transition_report_to_json(const TransitionReport& report);
TransitionReport transition_report_from_json(const Json& value);

/// Chain document: {"start", "end", "steps": [...]}; step parameters are 1-based.
Json chain_to_json(const TransitionChain& chain);
/// Throws InvalidArgument on a malformed document. Keys and reports are taken
/// from the file as recorded; nothing is re-derived.
TransitionChain chain_from_json(const Json& document);

std::string dump_chain(const TransitionChain& chain);
TransitionChain load_chain(std::string_view text);

} // namespace cicy
