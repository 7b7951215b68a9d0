#include "cicy/catalog.hpp"
#include "cicy/error.hpp"
#include "cicy/invariants.hpp"
#include "cicy/serialize.hpp"
#include "cicy/web.hpp"

#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

using namespace cicy;

namespace {

const ConfigurationMatrix quintic({4}, {{5}});
const ConfigurationMatrix quintic_split({4, 1}, {{4, 1}, {1, 1}});
const ConfigurationMatrix example_split({2, 3, 1}, {{1, 1, 1}, {1, 1, 2}, {0, 0, 2}});
const ConfigurationMatrix double_solid({3, 1}, {{4}, {2}});
const ConfigurationMatrix betti_matrix({4, 2, 2}, {{3, 1, 1, 0, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}});
const ConfigurationMatrix schoen({2, 2, 1}, {{3, 0}, {0, 3}, {1, 1}});

ConfigurationMatrix shuffle(const ConfigurationMatrix& cfg, std::mt19937_64& rng)
{
    std::vector<std::size_t> rows(cfg.rows()), cols(cfg.columns());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    return permute(cfg, rows, cols);
}

void check_chain(const TransitionChain& chain)
{
    auto report = verify_chain(chain);
    INFO(chain.start.render());
    if (report.failure)
        INFO("step ", report.failure->step, ": ", report.failure->condition);
    CHECK(report.ok());
    ConfigurationMatrix current = chain.start;
    for (const auto& step : chain.steps) {
        auto next = apply_step(current, step);
        CHECK(euler_number(next) <= 0);
        if (step.kind == ChainStep::Kind::Contract) {
            REQUIRE(step.report);
            CHECK(euler_number(current) - euler_number(next) == 2 * step.report->odp_count);
        }
        current = next;
    }
}

} // namespace

TEST_CASE("connect_to_c1111 on the worked examples")
{
    const auto hub = canonical_key(c1111());
    for (const auto& m : {quintic, double_solid, example_split, betti_matrix, schoen}) {
        auto chain = connect_to_c1111(m);
        CHECK(canonical_key(chain.end) == hub);
        CHECK(chain.start == m);
        check_chain(chain);
    }
    auto trivial = connect_to_c1111(c1111());
    CHECK(trivial.steps.empty());
    CHECK(verify_chain(trivial).ok());
}

TEST_CASE("connect_to_c1111 preconditions")
{
    CHECK_THROWS_AS(connect_to_c1111(ConfigurationMatrix({1, 2}, {{2, 0}, {0, 3}})), PreconditionError);
    CHECK_THROWS_AS(connect_to_c1111(ConfigurationMatrix({4}, {{4}})), PreconditionError);
    CHECK_THROWS_AS(connect_to_c1111(ConfigurationMatrix({1, 3}, {{2, 0}, {0, 4}})), PreconditionError);
    CHECK_THROWS_AS(connect_to_c1111(ConfigurationMatrix({5}, {{5, 1}})), PreconditionError);
}

TEST_CASE("the first split of the quintic walk is the 16-ODP split")
{
    auto chain = connect_to_c1111(quintic);
    REQUIRE(!chain.steps.empty());
    const auto& first = chain.steps.front();
    CHECK(first.kind == ChainStep::Kind::Split);
    CHECK(first.after == canonical_key(quintic_split));
}

TEST_CASE("stored quintic chain")
{
    auto chain = quintic_web_chain();
    CHECK(chain.steps.size() == 5);
    auto report = verify_chain(chain);
    CHECK(report.ok());
    CHECK(canonical_key(chain.end) == canonical_key(c1111()));
    CHECK(canonical_key(chain.end) == canonical_key(connect_to_c1111(quintic).end));

    auto back = reverse_chain(chain);
    auto back_report = verify_chain(back);
    CHECK(back_report.ok());
    CHECK(canonical_key(back.end) == canonical_key(quintic));
    const auto& last = back.steps.back();
    REQUIRE(last.kind == ChainStep::Kind::Contract);
    REQUIRE(last.report);
    CHECK(last.report->odp_count == 16);
    CHECK(last.before == canonical_key(quintic_split));
}

TEST_CASE("verify_chain reports corrupted steps")
{
    auto chain = quintic_web_chain();
    auto bad_parts = chain;
    bad_parts.steps[1].parts[0][0] += 1;
    auto r1 = verify_chain(bad_parts);
    REQUIRE(r1.failure);
    CHECK(r1.failure->step == 1);

    auto bad_key = chain;
    std::swap(bad_key.steps[2].after, bad_key.steps[3].after);
    auto r2 = verify_chain(bad_key);
    REQUIRE(r2.failure);
    CHECK(r2.failure->step == 2);

    auto bad_report = chain;
    bad_report.steps[4].report->odp_count += 1;
    auto r3 = verify_chain(bad_report);
    REQUIRE(r3.failure);
    CHECK(r3.failure->step == 4);

    auto bad_end = chain;
    bad_end.end = quintic;
    auto r4 = verify_chain(bad_end);
    REQUIRE(r4.failure);
    CHECK(r4.failure->step == 5);

    auto bad_row = chain;
    bad_row.steps[4].row = 1;
    CHECK_FALSE(verify_chain(bad_row).ok());
}

TEST_CASE("connect builds verified A to B chains through the hub")
{
    std::vector<std::pair<ConfigurationMatrix, ConfigurationMatrix>> pairs{
        {quintic, double_solid}, {schoen, betti_matrix}, {example_split, quintic}};
    for (const auto& [a, b] : pairs) {
        auto chain = connect(a, b);
        CHECK(chain.start == a);
        CHECK(canonical_key(chain.end) == canonical_key(b));
        CHECK(verify_chain(chain).ok());
    }
}

TEST_CASE("chain JSON round trip")
{
    auto chain = connect_to_c1111(example_split);
    auto text = dump_chain(chain);
    auto loaded = load_chain(text);
    CHECK(loaded.start == chain.start);
    CHECK(loaded.end == chain.end);
    REQUIRE(loaded.steps.size() == chain.steps.size());
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        CHECK(loaded.steps[i].kind == chain.steps[i].kind);
        CHECK(loaded.steps[i].before == chain.steps[i].before);
        CHECK(loaded.steps[i].after == chain.steps[i].after);
        CHECK(loaded.steps[i].result == chain.steps[i].result);
        CHECK(loaded.steps[i].report == chain.steps[i].report);
    }
    CHECK(dump_chain(loaded) == text);
    CHECK(verify_chain(loaded).ok());

    auto doc = chain_to_json(chain);
    doc["steps"][0]["parts"][0][0] = 99;
    CHECK_FALSE(verify_chain(chain_from_json(doc)).ok());
    CHECK_THROWS_AS(load_chain("{\"start\": []"), ParseError);
    CHECK_THROWS_AS(load_chain("{\"start\": [\"4 | 5\"]}"), InvalidArgument);
}

TEST_CASE("random_cicy")
{
    CHECK(random_cicy(5, 7, 9, 4) == random_cicy(5, 7, 9, 4));
    CHECK(random_cicy(1, 1, 1, 1) == c1111());
    CHECK_THROWS_AS(random_cicy(1, 0, 1, 1), InvalidArgument);
    std::set<CanonicalKey> distinct;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto m = random_cicy(seed, 7, 9, 5);
        CHECK(is_cicy(m));
        CHECK_FALSE(is_block_diagonal(m));
        CHECK(validate(m).column_sums_at_least_two);
        CHECK(m.rows() <= 7);
        CHECK(m.columns() <= 9);
        for (int n : m.dimensions())
            CHECK(n <= 5);
        distinct.insert(canonical_key(m));
    }
    CHECK(distinct.size() > 30);
}

TEST_CASE("200 random CICYs connect to C1111 with verified chains")
{
    const auto hub = canonical_key(c1111());
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        auto m = random_cicy(seed, 7, 9, 5);
        auto chain = connect_to_c1111(m);
        CHECK(canonical_key(chain.end) == hub);
        check_chain(chain);
    }
}

TEST_CASE("chain endpoints are stable under input permutation")
{
    std::mt19937_64 rng(71);
    const auto hub = canonical_key(c1111());
    for (int t = 0; t < 20; ++t) {
        auto m = shuffle(random_cicy(rng(), 6, 8, 4), rng);
        CHECK(canonical_key(connect_to_c1111(m).end) == hub);
    }
}
