#pragma once

// The built-in worked examples and their expected values.

#include "cicy/report.hpp"

#include <string>
#include <vector>

namespace cicy {

struct CatalogEntry {
    std::string name;
    std::string description;
    std::vector<ConfigurationMatrix> matrices;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Throws InvalidArgument for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// Runs one entry. Exceptions from the computations propagate.
std::vector<Check> run_catalog_entry(const std::string& name);

/// The stored quintic-to-C1111 chain: four splits and one contraction.
TransitionChain quintic_web_chain();

/// Runs the named entries (all when empty), concurrently when asked; results
/// keep the requested order. Entry failures are recorded, not thrown.
Report catalog_report(const std::vector<std::string>& names = {}, bool concurrent = false);

Json catalog_listing();

} // namespace cicy
