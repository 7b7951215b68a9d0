// cicy: command-line front end over libcicy.

#include "cicy/cicy.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kConsistency = 3 };

struct Style {
    bool color = false;
    std::string pass() const { return color ? "\033[32mpass\033[0m" : "pass"; }
    std::string fail() const { return color ? "\033[31mFAIL\033[0m" : "FAIL"; }
};

Style style;

struct Options {
    std::string path;
    bool json_out = false;
    std::string polarization;
    std::size_t row = 0;
    bool all = false;
    std::string emit_chain;
    std::string run;
    bool run_all = false;
    bool list = false;
    bool sequential = false;
    std::uint64_t seed = 0;
    int max_rows = 7, max_columns = 9, max_n = 4;
};

struct Failure {
    int code;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cicy: cannot open " << path << "\n";
        throw Failure{kFailed};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int exit_code(cicy_status status)
{
    switch (status) {
    case CICY_OK: return kOk;
    case CICY_ERR_CONSISTENCY:
    case CICY_ERR_INTERNAL: return kConsistency;
    default: return kFailed;
    }
}

void check_status(cicy_status status)
{
    if (status == CICY_OK)
        return;
    std::cerr << "cicy: " << cicy_status_name(status) << ": " << cicy_last_error() << "\n";
    throw Failure{exit_code(status)};
}

struct Owned {
    char* p = nullptr;
    ~Owned() { cicy_free_string(p); }
    std::string str() const { return p ? p : ""; }
};

using ConfigHandle = std::unique_ptr<cicy_config, decltype(&cicy_config_destroy)>;

ConfigHandle load_config(const std::string& path)
{
    std::string text = read_input(path);
    cicy_config* raw = nullptr;
    check_status(cicy_config_parse(text.c_str(), &raw));
    return ConfigHandle(raw, &cicy_config_destroy);
}

std::string text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    if (v.is_null())
        return "-";
    return v.dump();
}

void print_matrix(const json& lines, const std::string& indent = "  ")
{
    for (const auto& line : lines)
        std::cout << indent << line.get<std::string>() << "\n";
}

void print_rows(const std::vector<std::pair<std::string, std::string>>& rows)
{
    std::size_t width = 0;
    for (const auto& [k, v] : rows)
        width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : body)
            width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::cout << std::left << std::setw(static_cast<int>(width[c]))
                      << cells[c] << (c + 1 < cells.size() ? "  " : "");
        }
        std::cout << "\n";
    };
    line(header);
    for (const auto& row : body)
        line(row);
}

// Returns kFailed when some check fails.
int print_checks(const json& report)
{
    const auto& checks = report.at("checks");
    int code = kOk;
    if (checks.empty())
        return code;
    std::cout << "\n";
    std::vector<std::vector<std::string>> body;
    for (const auto& c : checks)
        body.push_back({c.at("name").get<std::string>(), text(c.at("expected")), text(c.at("got")),
                        c.at("provenance").get<std::string>(), ""});
    // Status is colored, so it is printed outside the width computation.
    std::vector<std::string> header{"check", "expected", "got", "provenance", "status"};
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : body)
            width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t c = 0; c + 1 < header.size(); ++c)
        std::cout << std::left << std::setw(static_cast<int>(width[c])) << header[c] << "  ";
    std::cout << "status\n";
    for (std::size_t r = 0; r < body.size(); ++r) {
        for (std::size_t c = 0; c + 1 < header.size(); ++c)
            std::cout << std::left << std::setw(static_cast<int>(width[c])) << body[r][c] << "  ";
        bool pass = checks[r].at("pass").get<bool>();
        std::cout << (pass ? style.pass() : style.fail()) << "\n";
        if (!pass)
            code = kFailed;
    }
    return code;
}

int finish(const std::string& raw, bool json_out, int status_code, void (*human)(const json&))
{
    json report = json::parse(raw);
    int checks = kOk;
    if (json_out) {
        std::cout << raw;
        for (const auto& c : report.at("checks"))
            if (!c.at("pass").get<bool>())
                checks = kFailed;
    } else {
        human(report);
        checks = print_checks(report);
    }
    return status_code != kOk ? status_code : checks;
}

void human_validate(const json& r)
{
    const auto& res = r.at("results");
    print_matrix(r.at("input").at("matrix"));
    std::cout << "\n";
    auto list = [](const json& v) { return v.empty() ? std::string("none") : v.dump(); };
    print_rows({
        {"ambient", res.at("ambient").get<std::string>()},
        {"shape", text(res.at("rows")) + " x " + text(res.at("columns"))},
        {"dimension", text(res.at("dimension"))},
        {"nonnegative", text(res.at("nonnegative"))},
        {"normalized", text(res.at("normalized"))},
        {"calabi-yau", text(res.at("calabi_yau"))},
        {"cicy", text(res.at("cicy"))},
        {"block-diagonal", text(res.at("block_diagonal"))},
        {"[1 | 2] block", text(res.at("forbidden_block"))},
        {"short columns", list(res.at("short_columns"))},
        {"non-CY rows", list(res.at("non_cy_rows"))},
        {"valid", text(res.at("valid"))},
    });
}

void human_invariants(const json& r)
{
    const auto& res = r.at("results");
    print_matrix(r.at("input").at("matrix"));
    std::cout << "\n";
    std::vector<std::pair<std::string, std::string>> rows{
        {"ambient", res.at("ambient").get<std::string>()},
        {"dimension", text(res.at("dimension"))},
        {"cicy", text(res.at("cicy"))},
        {"euler_number", text(res.at("euler_number"))},
    };
    if (res.contains("betti2"))
        rows.emplace_back("betti2", text(res.at("betti2")));
    else
        rows.emplace_back("betti2", "unavailable: " + text(res.at("betti2_error")));
    if (res.contains("hodge"))
        rows.emplace_back("h11, h21", text(res["hodge"]["h11"]) + ", " + text(res["hodge"]["h21"]));
    const auto& h = res.at("hilbert");
    rows.emplace_back("polarization", h.at("polarization").dump());
    rows.emplace_back("hilbert", h.at("polynomial").get<std::string>());
    print_rows(rows);
    std::cout << "\n";
    std::vector<std::vector<std::string>> body;
    for (const auto& v : h.at("values"))
        body.push_back({text(v.at("l")), text(v.at("chi"))});
    print_table({"l", "chi(O_X(l))"}, body);
}

void human_transition(const json& r)
{
    const auto& res = r.at("results");
    print_matrix(r.at("input").at("matrix"));
    if (res.contains("message")) {
        std::cout << "\n" << res.at("message").get<std::string>() << "\n";
        return;
    }
    for (const auto& s : res.at("sites")) {
        std::cout << "\nrow " << s.at("row") << " (P" << s.at("n") << ", one columns " << s.at("one_columns").dump()
                  << ")\n";
        print_rows({
            {"  odp_count", text(s.at("odp_count"))},
            {"  euler before", text(s.at("euler_before"))},
            {"  euler after", text(s.at("euler_after"))},
            {"  certified", text(s.at("conifold_certified"))},
            {"  ineffective", text(s.at("ineffective"))},
        });
        std::cout << "  contracted:\n";
        print_matrix(s.at("contracted"), "    ");
    }
}

void print_chain_steps(const json& res)
{
    std::vector<std::vector<std::string>> body;
    for (const auto& s : res.at("steps"))
        body.push_back({text(s.at("step")), text(s.at("kind")), text(s.at("odp_count")), text(s.at("euler_before")),
                        text(s.at("euler_after")), text(s.at("ineffective"))});
    if (!body.empty())
        print_table({"step", "kind", "N", "e(resolved)", "e(smoothed)", "ineffective"}, body);
    std::cout << "\n";
    print_rows({{"steps", text(res.at("step_count"))},
                {"total ODPs", text(res.at("total_odps"))},
                {"verified", text(res.at("verified"))}});
    if (res.contains("failure"))
        std::cout << "failure at step " << res["failure"]["step"] << ": "
                  << res["failure"]["condition"].get<std::string>() << "\n";
}

void human_connect(const json& r)
{
    const auto& res = r.at("results");
    std::cout << "start:\n";
    print_matrix(res.at("start"));
    std::cout << "end:\n";
    print_matrix(res.at("end"));
    std::cout << "\n";
    print_chain_steps(res);
}

void human_verify(const json& r)
{
    const auto& res = r.at("results");
    std::cout << "start:\n";
    print_matrix(r.at("input").at("start"));
    std::cout << "end:\n";
    print_matrix(r.at("input").at("end"));
    std::cout << "\n";
    print_chain_steps(res);
}

void human_catalog(const json& r)
{
    std::vector<std::vector<std::string>> body;
    for (const auto& e : r.at("results").at("entries"))
        body.push_back({e.at("name").get<std::string>(), e.at("pass").get<bool>() ? "pass" : "FAIL",
                        e.value("error", "")});
    print_table({"entry", "result", "error"}, body);
}

std::vector<int> parse_polarization(const std::string& spec)
{
    std::vector<int> out;
    std::stringstream in(spec);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            std::cerr << "cicy: --polarization expects comma-separated integers, got '" << spec << "'\n";
            throw Failure{kUsage};
        }
    }
    return out;
}

int cmd_validate(const Options& o)
{
    std::string raw_text = read_input(o.path);
    cicy_config* raw = nullptr;
    cicy_status status = cicy_config_parse(raw_text.c_str(), &raw);
    if (status == CICY_ERR_PARSE || status == CICY_ERR_INVALID_ARGUMENT) {
        std::cerr << "cicy: " << o.path << ": " << cicy_last_error() << "\n";
        return kFailed;
    }
    check_status(status);
    ConfigHandle cfg(raw, &cicy_config_destroy);
    Owned out;
    check_status(cicy_report_validate(cfg.get(), o.path.c_str(), &out.p));
    return finish(out.str(), o.json_out, kOk, human_validate);
}

int cmd_invariants(const Options& o)
{
    auto cfg = load_config(o.path);
    std::vector<int> pol;
    if (!o.polarization.empty()) {
        pol = parse_polarization(o.polarization);
        std::size_t rows = 0;
        check_status(cicy_config_shape(cfg.get(), &rows, nullptr));
        if (pol.size() != rows) {
            std::cerr << "cicy: --polarization needs " << rows << " entries\n";
            return kUsage;
        }
    }
    Owned out;
    check_status(cicy_report_invariants(cfg.get(), o.path.c_str(), pol.empty() ? nullptr : pol.data(), pol.size(),
                                        &out.p));
    return finish(out.str(), o.json_out, kOk, human_invariants);
}

int cmd_transition(const Options& o)
{
    auto cfg = load_config(o.path);
    Owned out;
    check_status(cicy_report_transition(cfg.get(), o.path.c_str(), o.all ? 0 : o.row, &out.p));
    return finish(out.str(), o.json_out, kOk, human_transition);
}

int cmd_connect(const Options& o)
{
    auto cfg = load_config(o.path);
    Owned out, chain;
    cicy_status status = cicy_report_connect(cfg.get(), o.path.c_str(), &out.p, &chain.p);
    if (status != CICY_OK && !out.p)
        check_status(status);
    if (status != CICY_OK)
        std::cerr << "cicy: " << cicy_last_error() << "\n";
    if (!o.emit_chain.empty() && chain.p) {
        std::ofstream file(o.emit_chain);
        if (!file) {
            std::cerr << "cicy: cannot write " << o.emit_chain << "\n";
            return kFailed;
        }
        file << chain.str();
    }
    return finish(out.str(), o.json_out, exit_code(status), human_connect);
}

int cmd_verify_chain(const Options& o)
{
    std::string document = read_input(o.path);
    Owned out;
    cicy_status status = cicy_report_verify_chain(document.c_str(), o.path.c_str(), &out.p);
    if (status != CICY_OK && !out.p)
        check_status(status);
    if (status != CICY_OK)
        std::cerr << "cicy: " << cicy_last_error() << "\n";
    return finish(out.str(), o.json_out, exit_code(status), human_verify);
}

int cmd_catalog(const Options& o)
{
    if (o.list) {
        Owned out;
        check_status(cicy_catalog_list(&out.p));
        if (o.json_out) {
            std::cout << out.str();
            return kOk;
        }
        std::vector<std::vector<std::string>> body;
        for (const auto& e : json::parse(out.str()))
            body.push_back({e.at("name").get<std::string>(), e.at("description").get<std::string>()});
        print_table({"entry", "description"}, body);
        return kOk;
    }
    Owned out;
    cicy_status status = cicy_report_catalog(o.run_all ? nullptr : o.run.c_str(), o.sequential ? 0 : 1, &out.p);
    if (status != CICY_OK && !out.p)
        check_status(status);
    if (status != CICY_OK)
        std::cerr << "cicy: " << cicy_last_error() << "\n";
    return finish(out.str(), o.json_out, exit_code(status), human_catalog);
}

int cmd_random(const Options& o)
{
    cicy_config* raw = nullptr;
    check_status(cicy_config_random(o.seed, o.max_rows, o.max_columns, o.max_n, &raw));
    ConfigHandle cfg(raw, &cicy_config_destroy);
    Owned out;
    check_status(cicy_config_render(cfg.get(), &out.p));
    std::cout << "# random_cicy seed " << o.seed << "\n" << out.str();
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    const char* no_color = std::getenv("CICY_NO_COLOR");
    style.color = isatty(STDOUT_FILENO) && !(no_color && *no_color);

    CLI::App app{"Exact invariants, conifold transitions and web chains of CICY 3-folds"};
    app.set_version_flag("--version", std::string(cicy_version()));
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", o.path, what)->required();
        sub->add_flag("--json", o.json_out, "Print the JSON report");
    };

    auto* validate = app.add_subcommand("validate", "Check a configuration matrix");
    input(validate, "Matrix file ('-' for stdin)");

    auto* invariants = app.add_subcommand("invariants", "Euler number, b2, Hodge numbers, Hilbert polynomial");
    input(invariants, "Matrix file ('-' for stdin)");
    invariants->add_option("--polarization", o.polarization, "Ample multidegree d1,...,dk (default all ones)");

    auto* transition = app.add_subcommand("transition", "Analyze determinantal contractions");
    input(transition, "Matrix file ('-' for stdin)");
    auto* row = transition->add_option("--row", o.row, "Contraction row (1-based)")->check(CLI::PositiveNumber);
    auto* all = transition->add_flag("--all", o.all, "Every contraction site");
    row->excludes(all);
    transition->callback([&] {
        if (!o.all && o.row == 0)
            throw CLI::ValidationError("transition", "give --row i or --all");
    });

    auto* connect = app.add_subcommand("connect", "Connect to C1111 through splittings and contractions");
    input(connect, "Matrix file ('-' for stdin)");
    connect->add_option("--emit-chain", o.emit_chain, "Write the chain JSON here");

    auto* verify = app.add_subcommand("verify-chain", "Re-execute and certify a chain JSON file");
    input(verify, "Chain file ('-' for stdin)");

    auto* catalog = app.add_subcommand("catalog", "Built-in worked examples");
    catalog->add_flag("--json", o.json_out, "Print the JSON report");
    auto* list = catalog->add_flag("--list", o.list, "List entries");
    auto* run = catalog->add_option("--run", o.run, "Run one entry");
    auto* run_all = catalog->add_flag("--run-all", o.run_all, "Run every entry");
    catalog->add_flag("--sequential", o.sequential, "Run entries one after another");
    list->excludes(run)->excludes(run_all);
    run->excludes(run_all);
    catalog->callback([&] {
        if (!o.list && o.run.empty() && !o.run_all)
            throw CLI::ValidationError("catalog", "give --list, --run NAME or --run-all");
    });

    auto* random = app.add_subcommand("random", "Print a pseudo-random CICY configuration");
    random->add_option("--seed", o.seed, "Generator seed");
    random->add_option("--max-rows", o.max_rows, "Row bound")->check(CLI::PositiveNumber);
    random->add_option("--max-columns", o.max_columns, "Column bound")->check(CLI::PositiveNumber);
    random->add_option("--max-n", o.max_n, "Bound on every n_i")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate)
            return cmd_validate(o);
        if (*invariants)
            return cmd_invariants(o);
        if (*transition)
            return cmd_transition(o);
        if (*connect)
            return cmd_connect(o);
        if (*verify)
            return cmd_verify_chain(o);
        if (*catalog)
            return cmd_catalog(o);
        if (*random)
            return cmd_random(o);
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "cicy: " << e.what() << "\n";
        return kConsistency;
    }
    return kUsage;
}
