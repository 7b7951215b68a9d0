#include "cicy/configuration.hpp"
#include "cicy/error.hpp"
#include "cicy/web.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <numeric>
#include <random>

using namespace cicy;

namespace {

const ConfigurationMatrix quintic({4}, {{5}});
const ConfigurationMatrix example_split({2, 3, 1}, {{1, 1, 1}, {1, 1, 2}, {0, 0, 2}});
const ConfigurationMatrix double_solid({3, 1}, {{4}, {2}});
const ConfigurationMatrix betti_matrix({4, 2, 2}, {{3, 1, 1, 0, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}});

ConfigurationMatrix shuffle(const ConfigurationMatrix& cfg, std::mt19937_64& rng)
{
    std::vector<std::size_t> rows(cfg.rows()), cols(cfg.columns());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    return permute(cfg, rows, cols);
}

ConfigurationMatrix random_matrix(std::mt19937_64& rng, int max_rows, int max_cols)
{
    int k = std::uniform_int_distribution<int>(1, max_rows)(rng);
    int m = std::uniform_int_distribution<int>(1, max_cols)(rng);
    std::vector<int> dims;
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < k; ++i) {
        dims.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
        std::vector<int> row;
        for (int j = 0; j < m; ++j)
            row.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
        rows.push_back(row);
    }
    return ConfigurationMatrix(dims, rows);
}

} // namespace

TEST_CASE("construction checks shape")
{
    CHECK_THROWS_AS(ConfigurationMatrix({1, 1}, {{2}, {1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(ConfigurationMatrix({1}, {{}}), InvalidArgument);
    CHECK_THROWS_AS(ConfigurationMatrix({}, {}), InvalidArgument);
    CHECK_THROWS_AS(ConfigurationMatrix({0}, {{1}}), InvalidArgument);
}

TEST_CASE("parse and render")
{
    auto cfg = parse_configuration("# quintic split\n\n4 | 4 1\n  1 | 1 1\n");
    CHECK(cfg == ConfigurationMatrix({4, 1}, {{4, 1}, {1, 1}}));
    CHECK(cfg.render() == "4 | 4 1\n1 | 1 1\n");
    CHECK(parse_configuration(cfg.render()) == cfg);

    try {
        parse_configuration("2 | 1 1 1\n3 | 1 1\n");
        FAIL("ragged rows accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_configuration("4 5\n"), ParseError);
    CHECK_THROWS_AS(parse_configuration("4 | 5 x\n"), ParseError);
    CHECK_THROWS_AS(parse_configuration("# nothing\n"), ParseError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 5, 6);
        CHECK(parse_configuration(m.render()) == m);
    }
}

TEST_CASE("validate")
{
    auto q = validate(quintic);
    CHECK(q.dimension == 3);
    CHECK(q.calabi_yau);
    CHECK(q.valid());
    CHECK(is_cicy(quintic));

    auto c = validate(c1111());
    CHECK(c.dimension == 3);
    CHECK(c.calabi_yau);
    CHECK_FALSE(c.block_diagonal);

    auto h = validate(ConfigurationMatrix({1}, {{1}}));
    CHECK_FALSE(h.column_sums_at_least_two);
    CHECK(h.short_columns == std::vector<std::size_t>{0});

    CHECK(is_cicy(example_split));
    CHECK(is_cicy(double_solid));
    CHECK_FALSE(is_cicy(ConfigurationMatrix({4}, {{4}})));
    CHECK_FALSE(ConfigurationMatrix({2}, {{-1, 0}}).is_valid());

    auto blocks = validate(ConfigurationMatrix({1, 1}, {{2, 0}, {0, 2}}));
    CHECK(blocks.block_diagonal);
    CHECK(blocks.forbidden_block);
    CHECK(blocks.valid() == false);
}

TEST_CASE("is_block_diagonal")
{
    CHECK(is_block_diagonal(ConfigurationMatrix({1, 1}, {{2, 0}, {0, 2}})));
    CHECK_FALSE(is_block_diagonal(c1111()));
    CHECK_FALSE(is_block_diagonal(betti_matrix));
    CHECK(has_forbidden_block(ConfigurationMatrix({1, 3}, {{2, 0}, {0, 4}})));
    CHECK_FALSE(has_forbidden_block(c1111()));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 5, 5);
        CHECK(is_block_diagonal(m) == is_block_diagonal(shuffle(m, rng)));
    }
}

TEST_CASE("normalize")
{
    auto n = normalize(ConfigurationMatrix({4}, {{5, 1}}));
    CHECK(n == ConfigurationMatrix({3}, {{5}}));
    CHECK(n.dimension() == 2);
    CHECK(normalize(quintic) == quintic);
    auto pair = ConfigurationMatrix({1, 1}, {{1, 1}, {1, 1}});
    CHECK(normalize(pair) == pair);
    CHECK_THROWS_AS(normalize(ConfigurationMatrix({1}, {{1}})), PreconditionError);
    CHECK_THROWS_AS(normalize(ConfigurationMatrix({1, 2}, {{1, 2}, {0, 0}})), PreconditionError);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_matrix(rng, 4, 4);
        if (!m.is_valid())
            continue;
        try {
            auto r = normalize(m);
            CHECK(r.dimension() == m.dimension());
            CHECK(validate(r).column_sums_at_least_two);
            CHECK(normalize(r) == r);
        } catch (const PreconditionError&) {
        }
    }
}

TEST_CASE("canonical key agrees with brute force")
{
    std::mt19937_64 rng(17);
    std::vector<ConfigurationMatrix> seen;
    for (int trial = 0; trial < 400; ++trial) {
        auto m = random_matrix(rng, 4, 5);
        auto form = canonical_form(m);
        CHECK(oracle::serialize(form.matrix) == oracle::brute_canonical(m));
        CHECK(permute(m, form.row_order, form.column_order) == form.matrix);
        seen.push_back(m);
    }
    for (std::size_t a = 0; a < 60; ++a)
        for (std::size_t b = a + 1; b < 60; ++b)
            CHECK((canonical_key(seen[a]) == canonical_key(seen[b])) ==
                  (oracle::brute_canonical(seen[a]) == oracle::brute_canonical(seen[b])));
}

TEST_CASE("canonical key is invariant under 100 shuffles")
{
    std::mt19937_64 rng(21);
    std::vector<ConfigurationMatrix> mats{quintic, example_split, double_solid, betti_matrix, c1111(),
                                          ConfigurationMatrix({1, 1, 1, 1, 1, 1},
                                                              {{1, 1, 0, 0, 0},
                                                               {1, 0, 1, 0, 0},
                                                               {0, 1, 0, 1, 0},
                                                               {0, 0, 1, 0, 1},
                                                               {0, 0, 0, 1, 1},
                                                               {1, 0, 0, 0, 1}})};
    for (const auto& m : mats) {
        auto key = canonical_key(m);
        for (int s = 0; s < 100; ++s) {
            auto shuffled = shuffle(m, rng);
            CHECK(canonical_key(shuffled) == key);
            auto iso = find_isomorphism(m, shuffled);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                CHECK(shuffled.n(iso.row_map[i]) == m.n(i));
                for (std::size_t j = 0; j < m.columns(); ++j)
                    CHECK(shuffled.entry(iso.row_map[i], iso.column_map[j]) == m.entry(i, j));
            }
        }
    }
    CHECK(canonical_key(ConfigurationMatrix({1, 1}, {{2}, {2}})) != canonical_key(ConfigurationMatrix({2}, {{3}})));
    CHECK_THROWS_AS(find_isomorphism(quintic, double_solid), PreconditionError);
}

TEST_CASE("the six matrices of the quintic web chain have distinct keys")
{
    std::vector<ConfigurationMatrix> chain{
        quintic,
        ConfigurationMatrix({4, 1}, {{4, 1}, {1, 1}}),
        ConfigurationMatrix({4, 1, 1}, {{3, 1, 1}, {1, 1, 0}, {1, 0, 1}}),
        ConfigurationMatrix({4, 1, 1, 1}, {{2, 1, 1, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}),
        ConfigurationMatrix({4, 1, 1, 1, 1},
                            {{1, 1, 1, 1, 1}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 0, 1}}),
        c1111(),
    };
    for (std::size_t a = 0; a < chain.size(); ++a)
        for (std::size_t b = a + 1; b < chain.size(); ++b)
            CHECK(canonical_key(chain[a]) != canonical_key(chain[b]));
}
