#include "cicy/web.hpp"

#include "cicy/error.hpp"
#include "cicy/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cicy {

namespace {

bool is_normalized(const ConfigurationMatrix& cfg)
{
    for (std::size_t j = 0; j < cfg.columns(); ++j)
        if (cfg.column_sum(j) < 2)
            return false;
    return true;
}

// Sum over rows with n_i >= 2 of max(q - 1, 0).
int big_entry_excess(const ConfigurationMatrix& cfg)
{
    int total = 0;
    for (std::size_t i = 0; i < cfg.rows(); ++i)
        if (cfg.n(i) >= 2)
            for (int q : cfg.row(i))
                total += std::max(q - 1, 0);
    return total;
}

int big_row_dimension(const ConfigurationMatrix& cfg)
{
    int total = 0;
    for (std::size_t i = 0; i < cfg.rows(); ++i)
        if (cfg.n(i) >= 2)
            total += cfg.n(i);
    return total;
}

ChainStep translate_step(const ChainStep& step, const Isomorphism& iso)
{
    ChainStep out = step;
    if (step.kind == ChainStep::Kind::Split) {
        out.column = iso.column_map.at(step.column);
        for (std::size_t p = 0; p < step.parts.size(); ++p) {
            std::vector<int> mapped(step.parts[p].size());
            for (std::size_t r = 0; r < mapped.size(); ++r)
                mapped[iso.row_map.at(r)] = step.parts[p][r];
            out.parts[p] = MultiDegree(std::move(mapped));
        }
    } else {
        out.row = iso.row_map.at(step.row);
        for (auto& c : out.one_columns)
            c = iso.column_map.at(c);
        std::sort(out.one_columns.begin(), out.one_columns.end());
    }
    return out;
}

// Replays steps (expressed on `original` concretes) starting from an equivalent matrix.
TransitionChain rebase(const TransitionChain& chain, const ConfigurationMatrix& start)
{
    TransitionChain out{start, {}, start};
    ConfigurationMatrix original = chain.start;
    ConfigurationMatrix current = start;
    for (const auto& step : chain.steps) {
        auto iso = find_isomorphism(original, current);
        ChainStep moved = translate_step(step, iso);
        ChainStep rebuilt = moved.kind == ChainStep::Kind::Split
                                ? make_split_step(current, moved.column, moved.n, moved.parts)
                                : make_contract_step(current, moved.row, step.report.has_value());
        original = apply_step(original, step);
        current = *rebuilt.result;
        out.steps.push_back(std::move(rebuilt));
    }
    out.end = current;
    return out;
}

} // namespace

ConfigurationMatrix c1111()
{
    return ConfigurationMatrix({1, 1, 1, 1}, {{2}, {2}, {2}, {2}});
}

ChainStep make_split_step(const ConfigurationMatrix& before, std::size_t column, int n,
                          std::vector<MultiDegree> parts)
{
    ChainStep step;
    step.kind = ChainStep::Kind::Split;
    step.column = column;
    step.n = n;
    step.parts = std::move(parts);
    step.result = split(before, column, n, step.parts);
    step.before = canonical_key(before);
    step.after = canonical_key(*step.result);
    return step;
}

ChainStep make_contract_step(const ConfigurationMatrix& before, std::size_t row, bool with_report)
{
    ContractionSite site(before, row);
    ChainStep step;
    step.kind = ChainStep::Kind::Contract;
    step.row = row;
    step.one_columns = site.one_columns();
    step.result = contract(site);
    step.before = canonical_key(before);
    step.after = canonical_key(*step.result);
    if (with_report)
        step.report = analyze(site);
    return step;
}

ConfigurationMatrix apply_step(const ConfigurationMatrix& before, const ChainStep& step)
{
    if (step.kind == ChainStep::Kind::Split)
        return split(before, step.column, step.n, step.parts);
    ContractionSite site(before, step.row);
    if (site.one_columns() != step.one_columns)
        throw InvalidArgument("contract step lists one-columns that do not match row " +
                              std::to_string(step.row + 1));
    return contract(site);
}

TransitionChain connect_to_c1111(const ConfigurationMatrix& cfg)
{
    if (!cfg.is_valid())
        throw PreconditionError("connect_to_c1111 needs a valid configuration matrix");
    if (!is_cicy(cfg))
        throw PreconditionError("connect_to_c1111 needs a CICY 3-fold configuration");
    if (!is_normalized(cfg))
        throw PreconditionError("connect_to_c1111 needs a normalized configuration (column sums >= 2)");
    if (is_block_diagonal(cfg))
        throw PreconditionError("connect_to_c1111 needs a non-block-diagonal configuration");

    TransitionChain chain{cfg, {}, cfg};
    ConfigurationMatrix current = cfg;
    auto push = [&](ChainStep step) {
        current = *step.result;
        chain.steps.push_back(std::move(step));
    };

    for (;;) {
        // Split an entry >= 2 of a big row off into a [1 || 1 1] device.
        std::optional<std::pair<std::size_t, std::size_t>> entry;
        for (std::size_t i = 0; i < current.rows() && !entry; ++i)
            if (current.n(i) >= 2)
                for (std::size_t j = 0; j < current.columns() && !entry; ++j)
                    if (current.entry(i, j) >= 2)
                        entry.emplace(i, j);
        if (entry) {
            auto [i, j] = *entry;
            MultiDegree unit(std::vector<int>(current.rows(), 0));
            unit[i] = 1;
            int before = big_entry_excess(current);
            push(make_split_step(current, j, 1, {current.column(j) - unit, unit}));
            if (big_entry_excess(current) >= before)
                throw InternalError("splitting phase did not decrease its measure");
            continue;
        }

        // A big row with only 0/1 entries is a contraction site.
        std::optional<std::size_t> big_row;
        for (std::size_t i = 0; i < current.rows(); ++i)
            if (current.n(i) >= 2) {
                big_row = i;
                break;
            }
        if (big_row) {
            if (!is_contraction_row(current, *big_row))
                throw InternalError("big row " + std::to_string(*big_row + 1) +
                                    " is not a contraction site after flattening");
            int before = big_row_dimension(current);
            push(make_contract_step(current, *big_row));
            if (big_row_dimension(current) >= before)
                throw InternalError("contraction phase did not decrease its measure");
            continue;
        }

        // Only P^1 rows remain: collapse the (1, 1) rows.
        std::optional<std::size_t> p1_row;
        for (std::size_t i = 0; i < current.rows(); ++i)
            if (is_contraction_row(current, i)) {
                p1_row = i;
                break;
            }
        if (!p1_row)
            break;
        push(make_contract_step(current, *p1_row));
    }

    chain.end = current;
    if (canonical_key(current) != canonical_key(c1111()))
        throw InternalError("web walk ended at a configuration other than C1111:\n" + current.render());
    return chain;
}

ChainReport verify_chain(const TransitionChain& chain)
{
    ChainReport report;
    auto fail = [&](std::size_t step, std::string condition, bool consistency = false) {
        report.failure = ChainFailure{step, std::move(condition), consistency};
        return report;
    };
    auto check_member = [](const ConfigurationMatrix& m, const char* which) -> std::optional<std::string> {
        if (!m.is_valid())
            return std::string(which) + " matrix is not valid";
        if (!is_cicy(m))
            return std::string(which) + " matrix is not a CICY 3-fold";
        if (is_block_diagonal(m))
            return std::string(which) + " matrix is block-diagonal";
        return std::nullopt;
    };

    if (auto problem = check_member(chain.start, "start"))
        return fail(0, *problem);

    ConfigurationMatrix current = chain.start;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ChainStep& step = chain.steps[i];
        if (canonical_key(current) != step.before)
            return fail(i, "recorded 'before' key does not match the matrix reached so far");

        std::optional<ConfigurationMatrix> after;
        try {
            after = apply_step(current, step);
        } catch (const Error& e) {
            return fail(i, std::string("illegal step: ") + e.what());
        }
        if (auto problem = check_member(*after, "resulting"))
            return fail(i, *problem);
        if (canonical_key(*after) != step.after)
            return fail(i, "recorded 'after' key does not match the resulting matrix");

        StepCheck check{i, step.kind, current, *after, {}};
        try {
            if (step.kind == ChainStep::Kind::Contract) {
                check.report = analyze(ContractionSite(current, step.row));
                if (step.report && !(*step.report == check.report))
                    return fail(i, "recorded transition report differs from the recomputed one");
                report.total_odps += check.report.odp_count;
            } else {
                check.report = analyze(ContractionSite(*after, after->rows() - 1));
            }
        } catch (const ConsistencyError& e) {
            return fail(i, std::string("conifold certification failed: ") + e.what(), true);
        } catch (const Error& e) {
            return fail(i, std::string("transition analysis failed: ") + e.what());
        }
        if (!check.report.conifold_certified)
            return fail(i, "transition is not certified");

        report.steps.push_back(std::move(check));
        current = std::move(*after);
    }
    if (canonical_key(current) != canonical_key(chain.end))
        return fail(chain.steps.size(), "chain does not end at its recorded end matrix");
    return report;
}

TransitionChain reverse_chain(const TransitionChain& chain, const std::optional<ConfigurationMatrix>& start)
{
    std::vector<ConfigurationMatrix> concrete{chain.start};
    for (const auto& step : chain.steps)
        concrete.push_back(apply_step(concrete.back(), step));

    ConfigurationMatrix current = start.value_or(chain.end);
    TransitionChain out{current, {}, current};
    for (std::size_t t = chain.steps.size(); t-- > 0;) {
        const ChainStep& step = chain.steps[t];
        const ConfigurationMatrix& before = concrete[t];
        const ConfigurationMatrix& after = concrete[t + 1];

        // The inverse move, in the indexing of `after`.
        ChainStep inverse;
        if (step.kind == ChainStep::Kind::Split) {
            inverse.kind = ChainStep::Kind::Contract;
            inverse.row = after.rows() - 1;
            for (int p = 0; p <= step.n; ++p)
                inverse.one_columns.push_back(step.column + static_cast<std::size_t>(p));
        } else {
            inverse.kind = ChainStep::Kind::Split;
            inverse.column = step.one_columns.front();
            inverse.n = before.n(step.row);
            for (std::size_t c : step.one_columns) {
                std::vector<int> part;
                for (std::size_t r = 0; r < before.rows(); ++r)
                    if (r != step.row)
                        part.push_back(before.entry(r, c));
                inverse.parts.emplace_back(std::move(part));
            }
        }

        ChainStep moved = translate_step(inverse, find_isomorphism(after, current));
        ChainStep built = moved.kind == ChainStep::Kind::Split
                              ? make_split_step(current, moved.column, moved.n, moved.parts)
                              : make_contract_step(current, moved.row);
        current = *built.result;
        out.steps.push_back(std::move(built));
    }
    out.end = current;
    return out;
}

TransitionChain concatenate(const TransitionChain& first, const TransitionChain& second)
{
    TransitionChain tail = rebase(second, first.end);
    TransitionChain out = first;
    for (auto& step : tail.steps)
        out.steps.push_back(std::move(step));
    out.end = tail.end;
    return out;
}

TransitionChain connect(const ConfigurationMatrix& a, const ConfigurationMatrix& b)
{
    return concatenate(connect_to_c1111(a), reverse_chain(connect_to_c1111(b)));
}

// ---------------------------------------------------------------------------
// Generator

namespace {

std::vector<ConfigurationMatrix> seed_matrices()
{
    return {
        c1111(),
        ConfigurationMatrix({4}, {{5}}),
        ConfigurationMatrix({2, 2}, {{3}, {3}}),
        ConfigurationMatrix({3, 1}, {{4}, {2}}),
        ConfigurationMatrix({5}, {{3, 3}}),
        ConfigurationMatrix({5}, {{4, 2}}),
        ConfigurationMatrix({6}, {{3, 2, 2}}),
        ConfigurationMatrix({7}, {{2, 2, 2, 2}}),
        ConfigurationMatrix({2, 2, 1}, {{3, 0}, {0, 3}, {1, 1}}),
        ConfigurationMatrix({2, 3, 1}, {{1, 1, 1}, {1, 1, 2}, {0, 0, 2}}),
        ConfigurationMatrix({4, 2, 2}, {{3, 1, 1, 0, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}}),
    };
}

bool fits(const ConfigurationMatrix& cfg, int max_rows, int max_columns, int max_n)
{
    if (static_cast<int>(cfg.rows()) > max_rows || static_cast<int>(cfg.columns()) > max_columns)
        return false;
    for (int n : cfg.dimensions())
        if (n > max_n)
            return false;
    return true;
}

// Distributes the column into n + 1 nonzero nonnegative parts.
std::optional<std::vector<MultiDegree>> random_parts(const MultiDegree& column, int n, std::mt19937_64& rng)
{
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < column.size(); ++i)
        for (int u = 0; u < column[i]; ++u)
            units.push_back(i);
    if (units.size() < static_cast<std::size_t>(n) + 1)
        return std::nullopt;
    std::shuffle(units.begin(), units.end(), rng);
    std::vector<MultiDegree> parts(n + 1, MultiDegree(std::vector<int>(column.size(), 0)));
    std::uniform_int_distribution<int> pick(0, n);
    for (std::size_t u = 0; u < units.size(); ++u) {
        int part = u <= static_cast<std::size_t>(n) ? static_cast<int>(u) : pick(rng);
        parts[part][units[u]] += 1;
    }
    return parts;
}

} // namespace

ConfigurationMatrix random_cicy(std::uint64_t seed, int max_rows, int max_columns, int max_n)
{
    if (max_rows < 1 || max_columns < 1 || max_n < 1)
        throw InvalidArgument("random_cicy bounds must be >= 1");
    std::mt19937_64 rng(seed);

    std::vector<ConfigurationMatrix> seeds;
    for (auto& s : seed_matrices())
        if (fits(s, max_rows, max_columns, max_n))
            seeds.push_back(std::move(s));
    if (seeds.empty())
        return c1111();

    ConfigurationMatrix current = seeds[std::uniform_int_distribution<std::size_t>(0, seeds.size() - 1)(rng)];
    const int moves = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int move = 0; move < moves; ++move) {
        auto sites = find_contraction_sites(current);
        std::bernoulli_distribution prefer_contract(0.25);
        if (!sites.empty() && prefer_contract(rng)) {
            const auto& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
            auto next = contract(site);
            if (!is_block_diagonal(next))
                current = std::move(next);
            continue;
        }

        int room_rows = max_rows - static_cast<int>(current.rows());
        int room_columns = max_columns - static_cast<int>(current.columns());
        int top_n = std::min(max_n, room_columns);
        if (room_rows < 1 || top_n < 1)
            continue;
        auto column = std::uniform_int_distribution<std::size_t>(0, current.columns() - 1)(rng);
        int n = std::uniform_int_distribution<int>(1, top_n)(rng);
        auto parts = random_parts(current.column(column), n, rng);
        if (!parts)
            continue;
        current = split(current, column, n, *parts);
    }

    std::vector<std::size_t> rows(current.rows()), columns(current.columns());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(columns.begin(), columns.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(columns.begin(), columns.end(), rng);
    current = permute(current, rows, columns);

    if (!is_cicy(current) || is_block_diagonal(current) || !is_normalized(current))
        throw InternalError("random_cicy produced an unexpected configuration:\n" + current.render());
    return current;
}

} // namespace cicy
