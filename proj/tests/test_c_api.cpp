// Exercises the shared library through its C header only.

#include "cicy/cicy.h"

#include "doctest.h"
#include "json.hpp"

#include <string>

namespace {

struct Handle {
    cicy_config* p = nullptr;
    ~Handle() { cicy_config_destroy(p); }
};

std::string take(char* s)
{
    std::string out = s ? s : "";
    cicy_free_string(s);
    return out;
}

Handle parse(const char* text)
{
    Handle h;
    REQUIRE(cicy_config_parse(text, &h.p) == CICY_OK);
    return h;
}

std::string decimal(cicy_status (*f)(const cicy_config*, char**), const cicy_config* cfg)
{
    char* out = nullptr;
    REQUIRE(f(cfg, &out) == CICY_OK);
    return take(out);
}

} // namespace

TEST_CASE("c api: version and status names")
{
    CHECK(std::string(cicy_version()) == "1.0.0");
    CHECK(std::string(cicy_status_name(CICY_OK)) == "ok");
    CHECK(std::string(cicy_status_name(CICY_ERR_CONSISTENCY)) == "consistency failure");
}

TEST_CASE("c api: parse, shape, entries, render")
{
    auto h = parse("4 | 4 1\n1 | 1 1\n");
    size_t rows = 0, cols = 0;
    REQUIRE(cicy_config_shape(h.p, &rows, &cols) == CICY_OK);
    CHECK(rows == 2);
    CHECK(cols == 2);
    int v = 0;
    REQUIRE(cicy_config_entry(h.p, 1, 1, &v) == CICY_OK);
    CHECK(v == 4);
    REQUIRE(cicy_config_entry(h.p, 2, 2, &v) == CICY_OK);
    CHECK(v == 1);
    CHECK(cicy_config_entry(h.p, 0, 1, &v) == CICY_ERR_INVALID_ARGUMENT);
    CHECK(cicy_config_entry(h.p, 3, 1, &v) == CICY_ERR_INVALID_ARGUMENT);
    int n = 0, d = 0;
    REQUIRE(cicy_config_ambient_dimension(h.p, 2, &n) == CICY_OK);
    CHECK(n == 1);
    REQUIRE(cicy_config_dimension(h.p, &d) == CICY_OK);
    CHECK(d == 3);
    char* text = nullptr;
    REQUIRE(cicy_config_render(h.p, &text) == CICY_OK);
    CHECK(take(text) == "4 | 4 1\n1 | 1 1\n");
}

TEST_CASE("c api: errors set last_error")
{
    cicy_config* p = nullptr;
    CHECK(cicy_config_parse("4 | 5\n1 | 1 1\n", &p) == CICY_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(std::string(cicy_last_error()).find("line 2") != std::string::npos);

    CHECK(cicy_config_parse(nullptr, &p) == CICY_ERR_INVALID_ARGUMENT);

    const int dims[] = {4};
    const int degs[] = {5};
    REQUIRE(cicy_config_create(1, 1, dims, degs, &p) == CICY_OK);
    char* out = nullptr;
    CHECK(cicy_betti2(p, &out) == CICY_OK);
    CHECK(take(out) == "1");
    CHECK(std::string(cicy_last_error()).empty());
    CHECK(cicy_odp_count(p, 1, &out) == CICY_ERR_PRECONDITION);
    CHECK(!std::string(cicy_last_error()).empty());
    cicy_config_destroy(p);
}

TEST_CASE("c api: invariants")
{
    auto quintic = parse("4 | 5");
    auto split = parse("4 | 4 1\n1 | 1 1");
    CHECK(decimal(cicy_euler_number, quintic.p) == "-200");
    CHECK(decimal(cicy_euler_number, split.p) == "-168");
    CHECK(decimal(cicy_betti2, split.p) == "2");
    char* out = nullptr;
    REQUIRE(cicy_odp_count(split.p, 2, &out) == CICY_OK);
    CHECK(take(out) == "16");

    Handle contracted;
    REQUIRE(cicy_contract(split.p, 2, &contracted.p) == CICY_OK);
    int eq = 0;
    REQUIRE(cicy_config_equivalent(contracted.p, quintic.p, &eq) == CICY_OK);
    CHECK(eq == 1);

    int flag = 0;
    REQUIRE(cicy_config_is_cicy(split.p, &flag) == CICY_OK);
    CHECK(flag == 1);
    REQUIRE(cicy_config_is_block_diagonal(split.p, &flag) == CICY_OK);
    CHECK(flag == 0);
}

TEST_CASE("c api: canonical keys and clones")
{
    auto a = parse("4 | 4 1\n1 | 1 1");
    auto b = parse("1 | 1 1\n4 | 1 4");
    char* ka = nullptr;
    char* kb = nullptr;
    REQUIRE(cicy_config_canonical_key(a.p, &ka) == CICY_OK);
    REQUIRE(cicy_config_canonical_key(b.p, &kb) == CICY_OK);
    CHECK(take(ka) == take(kb));

    Handle c;
    REQUIRE(cicy_config_clone(a.p, &c.p) == CICY_OK);
    int eq = 0;
    REQUIRE(cicy_config_equivalent(a.p, c.p, &eq) == CICY_OK);
    CHECK(eq == 1);
}

TEST_CASE("c api: reports")
{
    auto split = parse("4 | 4 1\n1 | 1 1");
    char* json = nullptr;
    REQUIRE(cicy_report_transition(split.p, "split.txt", 0, &json) == CICY_OK);
    auto r = nlohmann::json::parse(take(json));
    CHECK(r["tool_version"] == "1.0.0");
    CHECK(r["input"]["source"] == "split.txt");
    REQUIRE(r["results"]["sites"].size() == 1);
    CHECK(r["results"]["sites"][0]["odp_count"] == 16);
    for (const auto& c : r["checks"])
        CHECK(c["pass"] == true);

    REQUIRE(cicy_report_invariants(split.p, "split.txt", nullptr, 0, &json) == CICY_OK);
    r = nlohmann::json::parse(take(json));
    CHECK(r["results"]["euler_number"] == -168);
    const int bad_polarization[] = {1};
    CHECK(cicy_report_invariants(split.p, "split.txt", bad_polarization, 1, &json) ==
          CICY_ERR_INVALID_ARGUMENT);

    REQUIRE(cicy_report_validate(split.p, "split.txt", &json) == CICY_OK);
    r = nlohmann::json::parse(take(json));
    CHECK(r["results"]["valid"] == true);
}

TEST_CASE("c api: connect and verify-chain")
{
    auto start = parse("3 | 4\n1 | 2");
    char* json = nullptr;
    char* chain = nullptr;
    REQUIRE(cicy_report_connect(start.p, "double.txt", &json, &chain) == CICY_OK);
    auto report = nlohmann::json::parse(take(json));
    CHECK(report["results"]["verified"] == true);
    std::string chain_text = take(chain);

    REQUIRE(cicy_report_verify_chain(chain_text.c_str(), "chain.json", &json) == CICY_OK);
    report = nlohmann::json::parse(take(json));
    CHECK(report["results"]["verified"] == true);

    auto doc = nlohmann::json::parse(chain_text);
    doc["steps"][0]["after_key"] = doc["steps"][0]["before_key"];
    CHECK(cicy_report_verify_chain(doc.dump().c_str(), "bad.json", &json) == CICY_OK);
    report = nlohmann::json::parse(take(json));
    CHECK(report["results"]["verified"] == false);
    CHECK(report["results"]["failure"]["step"] == 1);

    json = nullptr;
    CHECK(cicy_report_verify_chain("{ not json", "broken.json", &json) == CICY_ERR_PARSE);
    CHECK(json == nullptr);
}

TEST_CASE("c api: catalog")
{
    char* json = nullptr;
    REQUIRE(cicy_catalog_list(&json) == CICY_OK);
    auto list = nlohmann::json::parse(take(json));
    CHECK(list.size() == 6);
    REQUIRE(cicy_report_catalog("quintic-web", 0, &json) == CICY_OK);
    auto r = nlohmann::json::parse(take(json));
    for (const auto& c : r["checks"])
        CHECK(c["pass"] == true);
    CHECK(cicy_report_catalog("no-such-entry", 0, &json) == CICY_ERR_INVALID_ARGUMENT);
}
