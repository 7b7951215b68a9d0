#include "cicy/catalog.hpp"

#include "cicy/error.hpp"
#include "cicy/invariants.hpp"

#include <future>

namespace cicy {

namespace {

const ConfigurationMatrix quintic({4}, {{5}});
const ConfigurationMatrix quintic_split({4, 1}, {{4, 1}, {1, 1}});
const ConfigurationMatrix example_split({2, 3, 1}, {{1, 1, 1}, {1, 1, 2}, {0, 0, 2}});
const ConfigurationMatrix double_solid({3, 1}, {{4}, {2}});
const ConfigurationMatrix octic_surface({3}, {{8}});
const ConfigurationMatrix betti_matrix({4, 2, 2}, {{3, 1, 1, 0, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}});
const ConfigurationMatrix betti_surface({2, 2}, {{1, 1}, {1, 1}});
const ConfigurationMatrix schoen({2, 2, 1}, {{3, 0}, {0, 3}, {1, 1}});
const ConfigurationMatrix bicubic({2, 2}, {{3}, {3}});

Json chi_at_zero(const ConfigurationMatrix& cfg)
{
    MultiDegree ones(std::vector<int>(cfg.rows(), 1));
    return integer_to_json(hilbert_polynomial(cfg, ones).value(0));
}

Json lines(const ConfigurationMatrix& cfg)
{
    return matrix_to_json(cfg);
}

std::vector<Check> run_quintic_web()
{
    std::vector<Check> out;
    const char* src = "quintic split into P4 x P1";
    ConfigurationMatrix split_result = split(quintic, 0, 1, {MultiDegree{4}, MultiDegree{1}});
    out.push_back(make_check("split of [4 | 5]", lines(quintic_split), lines(split_result), "published", src));

    ContractionSite site(quintic_split, 1);
    TransitionReport report = analyze(site);
    out.push_back(make_check("odp_count", 16, integer_to_json(report.odp_count), "published", src));
    out.push_back(make_check("euler_number(split)", -168, integer_to_json(report.euler_resolved), "derived",
                             "Gauss-Bonnet in the Chow ring of P4 x P1"));
    out.push_back(make_check("euler_number(quintic)", -200, integer_to_json(report.euler_smoothed), "derived",
                             "classical quintic value"));
    out.push_back(make_check("euler difference = 2N", 32,
                             integer_to_json(report.euler_resolved - report.euler_smoothed), "derived",
                             "2 * 16"));
    out.push_back(make_check("conifold certified", true, report.conifold_certified, "published", src));
    out.push_back(make_check("chi(O_X) of quintic", 0, chi_at_zero(quintic), "trivial",
                             "holomorphic Euler characteristic of a CY 3-fold"));

    TransitionChain chain = quintic_web_chain();
    ChainReport forward = verify_chain(chain);
    out.push_back(make_check("stored chain verifies", true, forward.ok(), "published",
                             "quintic to C1111 by formal correspondences"));
    out.push_back(make_check("stored chain ends at C1111", matrix_to_json(canonical_form(c1111()).matrix),
                             matrix_to_json(canonical_form(chain.end).matrix), "published",
                             "quintic to C1111 by formal correspondences"));

    TransitionChain backward = reverse_chain(chain);
    ChainReport reversed = verify_chain(backward);
    out.push_back(make_check("reversed chain verifies", true, reversed.ok(), "derived", "reversal of the stored chain"));
    Json last_n = nullptr;
    if (!backward.steps.empty() && backward.steps.back().report)
        last_n = integer_to_json(backward.steps.back().report->odp_count);
    out.push_back(make_check("reversed chain: final contraction N", 16, last_n, "published", src));
    return out;
}

std::vector<Check> run_example_3_7()
{
    std::vector<Check> out;
    const char* src = "split of [[3 | 4],[1 | 2]] along a P2 row";
    ContractionSite site(example_split, 0);
    TransitionReport report = analyze(site);
    out.push_back(make_check("euler_number(split)", -112, integer_to_json(report.euler_resolved), "published", src));
    out.push_back(make_check("euler_number(contracted)", -168, integer_to_json(report.euler_smoothed), "published",
                             src));
    out.push_back(make_check("contracted matrix", lines(double_solid), lines(contract(site)), "published", src));
    out.push_back(make_check("odp_count", 28, integer_to_json(report.odp_count), "published",
                             "coefficient of s^3 t"));
    out.push_back(make_check("euler difference = 2N", 56,
                             integer_to_json(report.euler_resolved - report.euler_smoothed), "published", src));

    AmbientSpace p = site.reduced_ambient();
    ChowClass c = chern_of_sum(p, site.e_bundles());
    out.push_back(make_check("c1(E)", "4*s1 + 2*s2", c.graded_part(1).to_string(), "published", src));
    out.push_back(make_check("c2(E)", "5*s1^2 + 4*s1*s2", c.graded_part(2).to_string(), "published", src));
    out.push_back(make_check("c3(E)", "2*s1^3 + 2*s1^2*s2", c.graded_part(3).to_string(), "published", src));
    out.push_back(make_check("chi(O_X)", 0, chi_at_zero(example_split), "trivial",
                             "holomorphic Euler characteristic of a CY 3-fold"));
    return out;
}

std::vector<Check> run_double_solid()
{
    std::vector<Check> out;
    const char* src = "double solid branched along an octic";
    AmbientSpace p3{3};
    std::vector<MultiDegree> quartics{MultiDegree{4}, MultiDegree{4}, MultiDegree{4}};
    Integer points = ci_point_count(p3, quartics);
    Integer e_p3 = integrate(tangent_chern(p3));
    Integer e_octic = euler_number(octic_surface);
    Integer e_singular = double_cover_euler(e_p3, e_octic);
    Integer e_double_solid = euler_number(double_solid);

    out.push_back(make_check("ci_point_count(P3; 4, 4, 4)", 64, integer_to_json(points), "published", src));
    out.push_back(make_check("e(P3)", 4, integer_to_json(e_p3), "trivial", "top Chern class of P3"));
    out.push_back(make_check("euler_number([3 | 8])", 304, integer_to_json(e_octic), "derived",
                             "(1 + 4h + 6h^2)(1 - 8h + 64h^2) times 8h"));
    out.push_back(make_check("double_cover_euler(4, 304)", -296, integer_to_json(e_singular), "published", src));
    out.push_back(make_check("euler_number([[3 | 4],[1 | 2]])", -168, integer_to_json(e_double_solid), "published",
                             src));
    out.push_back(make_check("euler difference", 128, integer_to_json(e_double_solid - e_singular), "published",
                             "128 = 2 * 64"));
    out.push_back(make_check("2 * points", 128, integer_to_json(2 * points), "published", "128 = 2 * 64"));
    out.push_back(make_check("contraction sites", 0, find_contraction_sites(double_solid).size(), "trivial",
                             "the P1 row entry is 2"));
    return out;
}

std::vector<Check> run_betti_example()
{
    std::vector<Check> out;
    const char* src = "b2 by the Lefschetz exact sequence";
    out.push_back(make_check("betti2", 5, integer_to_json(betti2(betti_matrix)), "published", src));
    out.push_back(make_check("euler_number(surface piece)", 6, integer_to_json(euler_number(betti_surface)),
                             "published", src));
    out.push_back(make_check("betti2(surface piece)", 4, integer_to_json(betti2(betti_surface)), "published",
                             "b2 = e - 2 for the surface piece"));
    out.push_back(make_check("euler_number", -72, integer_to_json(euler_number(betti_matrix)), "derived",
                             "Gauss-Bonnet in the Chow ring of P4 x P2 x P2"));
    HodgePair h = hodge_numbers(betti_matrix);
    out.push_back(make_check("h21", 41, integer_to_json(h.h21), "derived", "h11 - e/2"));
    out.push_back(make_check("chi(O_X)", 0, chi_at_zero(betti_matrix), "trivial",
                             "holomorphic Euler characteristic of a CY 3-fold"));
    return out;
}

std::vector<Check> run_c1111()
{
    std::vector<Check> out;
    ConfigurationMatrix c = c1111();
    out.push_back(make_check("is_cicy", true, is_cicy(c), "published", "terminal configuration C1111"));
    out.push_back(make_check("block_diagonal", false, is_block_diagonal(c), "trivial", "a single column"));
    out.push_back(make_check("euler_number", -128, integer_to_json(euler_number(c)), "derived",
                             "64 - 192 + 384 - 384 over (P1)^4"));
    out.push_back(make_check("betti2", 4, integer_to_json(betti2(c)), "derived", "m = 1, b2 = k"));
    HodgePair h = hodge_numbers(c);
    out.push_back(make_check("hodge", Json::array({4, 68}), Json::array({integer_to_json(h.h11), integer_to_json(h.h21)}), "derived",
                             "h21 = h11 - e/2"));
    out.push_back(make_check("chi(O_X)", 0, chi_at_zero(c), "trivial",
                             "holomorphic Euler characteristic of a CY 3-fold"));
    return out;
}

std::vector<Check> run_schoen()
{
    std::vector<Check> out;
    const char* src = "fiber products of rational elliptic surfaces";
    out.push_back(make_check("is_cicy(split)", true, is_cicy(schoen), "published", src));
    out.push_back(make_check("is_cicy(contracted)", true, is_cicy(bicubic), "published", src));
    out.push_back(make_check("split is block-diagonal", false, is_block_diagonal(schoen), "trivial", src));
    auto sites = find_contraction_sites(schoen);
    out.push_back(make_check("contraction sites", 1, sites.size(), "published", src));
    if (sites.empty())
        return out;
    const ContractionSite& site = sites.front();
    out.push_back(make_check("site row", 3, site.row() + 1, "published", src));
    out.push_back(make_check("contracts to the bicubic", matrix_to_json(canonical_form(bicubic).matrix),
                             matrix_to_json(canonical_form(contract(site)).matrix), "published", src));
    TransitionReport report = analyze(site);
    out.push_back(make_check("euler_number(split)", 0, integer_to_json(report.euler_resolved), "derived",
                             "Gauss-Bonnet in the Chow ring of P2 x P2 x P1"));
    out.push_back(make_check("euler_number(bicubic)", -162, integer_to_json(report.euler_smoothed), "derived",
                             "Gauss-Bonnet in the Chow ring of P2 x P2"));
    out.push_back(make_check("odp_count", 81, integer_to_json(report.odp_count), "derived",
                             "c2(E)^2 - c1(E) c3(E) with E = O(3,0) + O(0,3)"));
    out.push_back(make_check("betti2(split)", 19, integer_to_json(betti2(schoen)), "derived",
                             "b2 by the Lefschetz exact sequence"));
    out.push_back(make_check("chi(O_X)", 0, chi_at_zero(schoen), "trivial",
                             "holomorphic Euler characteristic of a CY 3-fold"));
    return out;
}

struct Runner {
    CatalogEntry entry;
    std::vector<Check> (*run)();
};

const std::vector<Runner>& runners()
{
    static const std::vector<Runner> all{
        {{"quintic-web", "quintic [4 | 5], its 16-ODP split and the chain to C1111", {quintic, quintic_split}},
         &run_quintic_web},
        {{"example-3-7", "P2-row split of the double solid configuration", {example_split, double_solid}},
         &run_example_3_7},
        {{"double-solid", "double solid over P3 branched along an octic (composite recipe)",
          {double_solid, octic_surface}},
         &run_double_solid},
        {{"betti-example", "b2 = 5 via the Lefschetz recursion", {betti_matrix, betti_surface}},
         &run_betti_example},
        {{"c1111", "terminal configuration C1111", {c1111()}}, &run_c1111},
        {{"schoen-fiber-product", "fiber product of rational elliptic surfaces and the bicubic", {schoen, bicubic}},
         &run_schoen},
    };
    return all;
}

const Runner& runner(const std::string& name)
{
    for (const auto& r : runners())
        if (r.entry.name == name)
            return r;
    throw InvalidArgument("unknown catalog entry '" + name + "'");
}

struct EntryOutcome {
    std::string name;
    std::vector<Check> checks;
    std::string error;
    std::string error_kind;
};

EntryOutcome run_guarded(const std::string& name)
{
    EntryOutcome outcome{name, {}, {}, {}};
    try {
        outcome.checks = runner(name).run();
    } catch (const ConsistencyError& e) {
        outcome.error = e.what();
        outcome.error_kind = "consistency";
    } catch (const std::exception& e) {
        outcome.error = e.what();
        outcome.error_kind = "error";
    }
    return outcome;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& r : runners())
            out.push_back(r.entry);
        return out;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name)
{
    return runner(name).entry;
}

std::vector<Check> run_catalog_entry(const std::string& name)
{
    return runner(name).run();
}

TransitionChain quintic_web_chain()
{
    TransitionChain chain{quintic, {}, quintic};
    auto push = [&](ChainStep step) {
        chain.end = *step.result;
        chain.steps.push_back(std::move(step));
    };
    push(make_split_step(chain.end, 0, 1, {MultiDegree{4}, MultiDegree{1}}));
    push(make_split_step(chain.end, 0, 1, {MultiDegree{3, 1}, MultiDegree{1, 0}}));
    push(make_split_step(chain.end, 0, 1, {MultiDegree{2, 1, 1}, MultiDegree{1, 0, 0}}));
    push(make_split_step(chain.end, 0, 1, {MultiDegree{1, 1, 1, 1}, MultiDegree{1, 0, 0, 0}}));
    push(make_contract_step(chain.end, 0));
    return chain;
}

Report catalog_report(const std::vector<std::string>& names, bool concurrent)
{
    std::vector<std::string> selected = names;
    if (selected.empty())
        for (const auto& e : catalog_entries())
            selected.push_back(e.name);
    for (const auto& name : selected)
        runner(name);

    std::vector<EntryOutcome> outcomes;
    if (concurrent) {
        std::vector<std::future<EntryOutcome>> pending;
        for (const auto& name : selected)
            pending.push_back(std::async(std::launch::async, run_guarded, name));
        for (auto& f : pending)
            outcomes.push_back(f.get());
    } else {
        for (const auto& name : selected)
            outcomes.push_back(run_guarded(name));
    }

    Report report;
    report.tool_version = tool_version();
    report.input = {{"catalog", selected}};
    Json entries = Json::array();
    for (auto& outcome : outcomes) {
        bool pass = outcome.error.empty();
        for (auto& check : outcome.checks) {
            pass = pass && check.pass;
            check.name = outcome.name + ": " + check.name;
            report.checks.push_back(std::move(check));
        }
        Json entry{{"name", outcome.name}, {"pass", pass}};
        if (!outcome.error.empty()) {
            entry["error"] = outcome.error;
            entry["error_kind"] = outcome.error_kind;
        }
        entries.push_back(std::move(entry));
    }
    report.results["entries"] = std::move(entries);
    return report;
}

Json catalog_listing()
{
    Json out = Json::array();
    for (const auto& e : catalog_entries()) {
        Json matrices = Json::array();
        for (const auto& m : e.matrices)
            matrices.push_back(matrix_to_json(m));
        out.push_back({{"name", e.name}, {"description", e.description}, {"matrices", matrices}});
    }
    return out;
}

} // namespace cicy
