#include "cicy/report.hpp"

#include "cicy/error.hpp"
#include "cicy/invariants.hpp"

#include <algorithm>

namespace cicy {

namespace {

Json one_based(const std::vector<std::size_t>& indices)
{
    Json out = Json::array();
    for (auto i : indices)
        out.push_back(i + 1);
    return out;
}

Report make_report(const ConfigurationMatrix& cfg, const std::string& input)
{
    Report report;
    report.tool_version = tool_version();
    report.input = {{"source", input}, {"matrix", matrix_to_json(cfg)}};
    return report;
}

Json site_json(const ContractionSite& site, const TransitionReport& tr)
{
    Json out = transition_report_to_json(tr);
    out["row"] = site.row() + 1;
    out["n"] = site.config().n(site.row());
    out["one_columns"] = one_based(site.one_columns());
    out["contracted"] = matrix_to_json(contract(site));
    return out;
}

Json step_check_json(const StepCheck& check)
{
    Json out = transition_report_to_json(check.report);
    out["step"] = check.index + 1;
    out["kind"] = check.kind == ChainStep::Kind::Split ? "split" : "contract";
    out["matrix"] = matrix_to_json(check.after);
    return out;
}

void add_chain_verification(Report& report, const TransitionChain& chain, const ChainReport& verified)
{
    Json steps = Json::array();
    for (const auto& s : verified.steps)
        steps.push_back(step_check_json(s));
    report.results["steps"] = std::move(steps);
    report.results["step_count"] = chain.steps.size();
    report.results["total_odps"] = integer_to_json(verified.total_odps);
    report.results["verified"] = verified.ok();
    if (verified.failure)
        report.results["failure"] = {{"step", verified.failure->step + 1},
                                     {"condition", verified.failure->condition},
                                     {"consistency", verified.failure->consistency}};
    report.results["assumptions"] = Json::array(
        {"general members of every intermediate configuration are smooth (not checked)"});
    report.checks.push_back(make_check("chain verified", true, verified.ok(), "trivial"));
}

} // namespace

const char* tool_version()
{
    return "1.0.0";
}

Check make_check(std::string name, Json expected, Json got, std::string provenance, std::string source)
{
    Check check{std::move(name), std::move(expected), std::move(got), std::move(provenance), std::move(source), false};
    check.pass = check.expected == check.got;
    return check;
}

bool Report::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json report_to_json(const Report& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry{{"name", c.name},
                   {"expected", c.expected},
                   {"got", c.got},
                   {"provenance", c.provenance},
                   {"pass", c.pass}};
        if (!c.source.empty())
            entry["source"] = c.source;
        checks.push_back(std::move(entry));
    }
    return {{"tool_version", report.tool_version},
            {"input", report.input},
            {"results", report.results},
            {"checks", checks}};
}

Report report_from_json(const Json& value)
{
    try {
        Report report;
        report.tool_version = value.at("tool_version").get<std::string>();
        report.input = value.at("input");
        report.results = value.at("results");
        for (const auto& c : value.at("checks")) {
            report.checks.push_back(Check{c.at("name").get<std::string>(), c.at("expected"), c.at("got"),
                                          c.at("provenance").get<std::string>(), c.value("source", ""),
                                          c.at("pass").get<bool>()});
        }
        return report;
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("report: ") + e.what());
    }
}

std::string emit(const Report& report)
{
    return report_to_json(report).dump(2) + "\n";
}

Report parse_report(std::string_view text)
{
    try {
        return report_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("report: ") + e.what());
    }
}

Report validate_report(const ConfigurationMatrix& cfg, const std::string& input)
{
    Report report = make_report(cfg, input);
    ValidationReport v = validate(cfg);
    report.results = {
        {"ambient", cfg.ambient().to_string()},
        {"rows", cfg.rows()},
        {"columns", cfg.columns()},
        {"dimension", v.dimension},
        {"nonnegative", v.nonnegative},
        {"normalized", v.column_sums_at_least_two},
        {"calabi_yau", v.calabi_yau},
        {"cicy", v.valid() && is_cicy(cfg)},
        {"block_diagonal", v.block_diagonal},
        {"forbidden_block", v.forbidden_block},
        {"short_columns", one_based(v.short_columns)},
        {"non_cy_rows", one_based(v.non_cy_rows)},
        {"valid", v.valid()},
    };
    report.checks.push_back(make_check("valid", true, v.valid(), "trivial"));
    return report;
}

Report invariants_report(const ConfigurationMatrix& cfg, const std::string& input,
                         const std::optional<MultiDegree>& polarization)
{
    if (!cfg.is_valid())
        throw PreconditionError("invariants need a valid configuration matrix (nonnegative entries, d >= 1)");
    Report report = make_report(cfg, input);
    const bool cicy = is_cicy(cfg);
    Integer e = euler_number(cfg);
    report.results["ambient"] = cfg.ambient().to_string();
    report.results["dimension"] = cfg.dimension();
    report.results["cicy"] = cicy;
    report.results["euler_number"] = integer_to_json(e);

    std::optional<Integer> b2;
    try {
        b2 = betti2(cfg);
        report.results["betti2"] = integer_to_json(*b2);
    } catch (const PreconditionError& err) {
        report.results["betti2_error"] = err.what();
    } catch (const UnsupportedError& err) {
        report.results["betti2_error"] = err.what();
    }
    if (cicy && b2) {
        HodgePair h = hodge_numbers(cfg);
        report.results["hodge"] = {{"h11", integer_to_json(h.h11)}, {"h21", integer_to_json(h.h21)}};
        report.checks.push_back(make_check("e = 2(h11 - h21)", integer_to_json(e),
                                           integer_to_json(2 * (h.h11 - h.h21)), "trivial"));
    }

    MultiDegree pol = polarization.value_or(MultiDegree(std::vector<int>(cfg.rows(), 1)));
    HilbertPolynomial hp = hilbert_polynomial(cfg, pol);
    Json coefficients = Json::array();
    for (const auto& c : hp.coefficients())
        coefficients.push_back(c.str());
    Json values = Json::array();
    for (long l = 0; l <= 5; ++l)
        values.push_back({{"l", l}, {"chi", integer_to_json(hp.value(l))}});
    report.results["hilbert"] = {{"polarization", pol.values()},
                                 {"polynomial", hp.to_string()},
                                 {"coefficients", coefficients},
                                 {"values", values}};
    if (cicy)
        report.checks.push_back(make_check("chi(O_X) = 0", 0, integer_to_json(hp.value(0)), "trivial"));
    return report;
}

Report transition_report(const ConfigurationMatrix& cfg, const std::string& input, std::optional<std::size_t> row)
{
    if (!cfg.is_valid() || !is_cicy(cfg))
        throw PreconditionError("transition analysis needs a valid CICY 3-fold configuration");
    std::vector<ContractionSite> sites;
    if (row)
        sites.emplace_back(cfg, *row);
    else
        sites = find_contraction_sites(cfg);

    Report report = make_report(cfg, input);
    Json out = Json::array();
    for (const auto& site : sites) {
        TransitionReport tr = analyze(site);
        out.push_back(site_json(site, tr));
        report.checks.push_back(make_check("row " + std::to_string(site.row() + 1) + ": e difference = 2N",
                                           integer_to_json(2 * tr.odp_count),
                                           integer_to_json(tr.euler_resolved - tr.euler_smoothed), "derived"));
    }
    report.results["sites"] = std::move(out);
    if (sites.empty())
        report.results["message"] = "no contraction sites";
    return report;
}

ConnectOutcome connect_report(const ConfigurationMatrix& cfg, const std::string& input)
{
    ConnectOutcome outcome{make_report(cfg, input), connect_to_c1111(cfg)};
    Report& report = outcome.report;
    ChainReport verified = verify_chain(outcome.chain);
    report.results["start"] = matrix_to_json(outcome.chain.start);
    report.results["end"] = matrix_to_json(outcome.chain.end);
    add_chain_verification(report, outcome.chain, verified);
    report.checks.push_back(make_check("ends at C1111", matrix_to_json(canonical_form(c1111()).matrix),
                                       matrix_to_json(canonical_form(outcome.chain.end).matrix), "trivial"));
    return outcome;
}

Report verify_chain_report(const TransitionChain& chain, const std::string& input)
{
    Report report;
    report.tool_version = tool_version();
    report.input = {{"source", input}, {"start", matrix_to_json(chain.start)}, {"end", matrix_to_json(chain.end)}};
    add_chain_verification(report, chain, verify_chain(chain));
    return report;
}

} // namespace cicy
