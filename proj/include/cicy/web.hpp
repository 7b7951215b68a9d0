#pragma once

// Chains of splittings and contractions through the CICY web, and the
// deterministic walk from any non-block-diagonal CICY to C_1111.

#include "cicy/configuration.hpp"
#include "cicy/transitions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cicy {

struct ChainStep {
    enum class Kind { Split, Contract };

    Kind kind = Kind::Split;
    // Split parameters.
    std::size_t column = 0;
    int n = 0;
    std::vector<MultiDegree> parts;
    // Contract parameters.
    std::size_t row = 0;
    std::vector<std::size_t> one_columns;

    CanonicalKey before;
    CanonicalKey after;
    /// The concrete matrix produced by the step.
    std::optional<ConfigurationMatrix> result;
    /// Present for contract steps.
    std::optional<TransitionReport> report;
};

struct TransitionChain {
    ConfigurationMatrix start;
    std::vector<ChainStep> steps;
    ConfigurationMatrix end;
};

/// Re-execution result of a single step. Split steps carry the report of the
/// reverse contraction at the new row.
struct StepCheck {
    std::size_t index = 0;
    ChainStep::Kind kind = ChainStep::Kind::Split;
    ConfigurationMatrix before;
    ConfigurationMatrix after;
    TransitionReport report;
};

struct ChainFailure {
    std::size_t step = 0; ///< 0-based; equals steps.size() for end-point problems
    std::string condition;
    bool consistency = false; ///< two independent Euler computations disagreed
};

struct ChainReport {
    std::vector<StepCheck> steps;
    std::optional<ChainFailure> failure;
    Integer total_odps = 0;

    bool ok() const { return !failure.has_value(); }
};

/// [1 || 2] four times.
ConfigurationMatrix c1111();

ChainStep make_split_step(const ConfigurationMatrix& before, std::size_t column, int n,
                          std::vector<MultiDegree> parts);
ChainStep make_contract_step(const ConfigurationMatrix& before, std::size_t row, bool with_report = true);

/// Applies a step's parameters to a concrete matrix (no key checks).
ConfigurationMatrix apply_step(const ConfigurationMatrix& before, const ChainStep& step);

/// Splits big rows down to 0/1 entries, contracts them away, then collapses the
/// P^1 rows. Throws PreconditionError unless the input is a normalized, valid,
/// non-block-diagonal CICY 3-fold; throws InternalError if C_1111 is not reached.
TransitionChain connect_to_c1111(const ConfigurationMatrix& cfg);

/// Re-executes every step and checks legality, CICY-ness, non-block-diagonality,
/// key continuity and the Euler bookkeeping e(split) - e(contracted) = 2N.
ChainReport verify_chain(const TransitionChain& chain);

/// The same path walked backwards. `start` (equivalent to chain.end) fixes the
/// concrete starting matrix; defaults to chain.end.
TransitionChain reverse_chain(const TransitionChain& chain,
                              const std::optional<ConfigurationMatrix>& start = std::nullopt);

/// first followed by second; second is re-based onto first.end.
TransitionChain concatenate(const TransitionChain& first, const TransitionChain& second);

/// A chain from a to b through C_1111.
TransitionChain connect(const ConfigurationMatrix& a, const ConfigurationMatrix& b);

/// Deterministic pseudo-random normalized non-block-diagonal CICY 3-fold with at
/// most max_rows rows, max_columns columns and every n_i <= max_n.
ConfigurationMatrix random_cicy(std::uint64_t seed, int max_rows, int max_columns, int max_n);

} // namespace cicy
