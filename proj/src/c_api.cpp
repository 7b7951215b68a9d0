#include "cicy/cicy.h"

#include "cicy/catalog.hpp"
#include "cicy/error.hpp"
#include "cicy/invariants.hpp"
#include "cicy/report.hpp"

#include <cstring>
#include <new>

struct cicy_config {
    cicy::ConfigurationMatrix matrix;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
cicy_status guarded(F&& body)
{
    last_error.clear();
    try {
        return body();
    } catch (const cicy::ParseError& e) {
        last_error = e.what();
        return CICY_ERR_PARSE;
    } catch (const cicy::InvalidArgument& e) {
        last_error = e.what();
        return CICY_ERR_INVALID_ARGUMENT;
    } catch (const cicy::PreconditionError& e) {
        last_error = e.what();
        return CICY_ERR_PRECONDITION;
    } catch (const cicy::UnsupportedError& e) {
        last_error = e.what();
        return CICY_ERR_UNSUPPORTED;
    } catch (const cicy::ConsistencyError& e) {
        last_error = e.what();
        return CICY_ERR_CONSISTENCY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CICY_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown exception";
        return CICY_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (!p)
        throw cicy::InvalidArgument(std::string(what) + " must not be NULL");
}

std::size_t zero_based(std::size_t index, const char* what)
{
    if (index == 0)
        throw cicy::InvalidArgument(std::string(what) + " is 1-based");
    return index - 1;
}

cicy_status emit_decimal(const cicy::Integer& value, char** out)
{
    *out = copy_string(value.str());
    return CICY_OK;
}

cicy_status chain_status(const cicy::Report& report, bool any_failure)
{
    if (!report.results.contains("failure"))
        return CICY_OK;
    if (any_failure || report.results["failure"].value("consistency", false)) {
        last_error = "chain verification failed: " + report.results["failure"].value("condition", "");
        return CICY_ERR_CONSISTENCY;
    }
    return CICY_OK;
}

} // namespace

extern "C" {

const char* cicy_version(void)
{
    return cicy::tool_version();
}

const char* cicy_status_name(cicy_status status)
{
    switch (status) {
    case CICY_OK: return "ok";
    case CICY_ERR_PARSE: return "parse error";
    case CICY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CICY_ERR_PRECONDITION: return "precondition failed";
    case CICY_ERR_UNSUPPORTED: return "unsupported";
    case CICY_ERR_CONSISTENCY: return "consistency failure";
    case CICY_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cicy_last_error(void)
{
    return last_error.c_str();
}

void cicy_free_string(char* s)
{
    std::free(s);
}

cicy_status cicy_config_parse(const char* text, cicy_config** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new cicy_config{cicy::parse_configuration(text)};
        return CICY_OK;
    });
}

cicy_status cicy_config_create(size_t rows, size_t columns, const int* dimensions, const int* degrees,
                               cicy_config** out)
{
    return guarded([&] {
        require(dimensions, "dimensions");
        require(degrees, "degrees");
        require(out, "out");
        std::vector<int> dims(dimensions, dimensions + rows);
        std::vector<std::vector<int>> matrix;
        for (std::size_t i = 0; i < rows; ++i)
            matrix.emplace_back(degrees + i * columns, degrees + (i + 1) * columns);
        *out = new cicy_config{cicy::ConfigurationMatrix(std::move(dims), std::move(matrix))};
        return CICY_OK;
    });
}

cicy_status cicy_config_random(uint64_t seed, int max_rows, int max_columns, int max_n, cicy_config** out)
{
    return guarded([&] {
        require(out, "out");
        *out = new cicy_config{cicy::random_cicy(seed, max_rows, max_columns, max_n)};
        return CICY_OK;
    });
}

cicy_status cicy_config_clone(const cicy_config* cfg, cicy_config** out)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = new cicy_config{cfg->matrix};
        return CICY_OK;
    });
}

void cicy_config_destroy(cicy_config* cfg)
{
    delete cfg;
}

cicy_status cicy_config_shape(const cicy_config* cfg, size_t* rows, size_t* columns)
{
    return guarded([&] {
        require(cfg, "cfg");
        if (rows)
            *rows = cfg->matrix.rows();
        if (columns)
            *columns = cfg->matrix.columns();
        return CICY_OK;
    });
}

cicy_status cicy_config_entry(const cicy_config* cfg, size_t row, size_t column, int* value)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(value, "value");
        std::size_t i = zero_based(row, "row"), j = zero_based(column, "column");
        if (i >= cfg->matrix.rows() || j >= cfg->matrix.columns())
            throw cicy::InvalidArgument("entry index out of range");
        *value = cfg->matrix.entry(i, j);
        return CICY_OK;
    });
}

cicy_status cicy_config_ambient_dimension(const cicy_config* cfg, size_t row, int* n)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(n, "n");
        std::size_t i = zero_based(row, "row");
        if (i >= cfg->matrix.rows())
            throw cicy::InvalidArgument("row out of range");
        *n = cfg->matrix.n(i);
        return CICY_OK;
    });
}

cicy_status cicy_config_dimension(const cicy_config* cfg, int* d)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(d, "d");
        *d = cfg->matrix.dimension();
        return CICY_OK;
    });
}

cicy_status cicy_config_render(const cicy_config* cfg, char** out)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = copy_string(cfg->matrix.render());
        return CICY_OK;
    });
}

cicy_status cicy_config_is_valid(const cicy_config* cfg, int* out)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = cfg->matrix.is_valid() ? 1 : 0;
        return CICY_OK;
    });
}

cicy_status cicy_config_is_cicy(const cicy_config* cfg, int* out)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = cicy::is_cicy(cfg->matrix) ? 1 : 0;
        return CICY_OK;
    });
}

cicy_status cicy_config_is_block_diagonal(const cicy_config* cfg, int* out)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = cicy::is_block_diagonal(cfg->matrix) ? 1 : 0;
        return CICY_OK;
    });
}

cicy_status cicy_config_canonical_key(const cicy_config* cfg, char** hex)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(hex, "hex");
        *hex = copy_string(cicy::canonical_key(cfg->matrix).hex());
        return CICY_OK;
    });
}

cicy_status cicy_config_equivalent(const cicy_config* a, const cicy_config* b, int* out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = cicy::canonical_key(a->matrix) == cicy::canonical_key(b->matrix) ? 1 : 0;
        return CICY_OK;
    });
}

cicy_status cicy_euler_number(const cicy_config* cfg, char** decimal)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(decimal, "decimal");
        return emit_decimal(cicy::euler_number(cfg->matrix), decimal);
    });
}

cicy_status cicy_betti2(const cicy_config* cfg, char** decimal)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(decimal, "decimal");
        return emit_decimal(cicy::betti2(cfg->matrix), decimal);
    });
}

cicy_status cicy_odp_count(const cicy_config* cfg, size_t row, char** decimal)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(decimal, "decimal");
        cicy::ContractionSite site(cfg->matrix, zero_based(row, "row"));
        return emit_decimal(cicy::odp_count(site), decimal);
    });
}

cicy_status cicy_contract(const cicy_config* cfg, size_t row, cicy_config** out)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        cicy::ContractionSite site(cfg->matrix, zero_based(row, "row"));
        *out = new cicy_config{cicy::contract(site)};
        return CICY_OK;
    });
}

cicy_status cicy_report_validate(const cicy_config* cfg, const char* input, char** json)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(json, "json");
        *json = copy_string(cicy::emit(cicy::validate_report(cfg->matrix, input ? input : "")));
        return CICY_OK;
    });
}

cicy_status cicy_report_invariants(const cicy_config* cfg, const char* input, const int* polarization,
                                   size_t polarization_length, char** json)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(json, "json");
        std::optional<cicy::MultiDegree> pol;
        if (polarization) {
            if (polarization_length != cfg->matrix.rows())
                throw cicy::InvalidArgument("polarization needs " + std::to_string(cfg->matrix.rows()) +
                                            " entries, got " + std::to_string(polarization_length));
            pol = cicy::MultiDegree(std::vector<int>(polarization, polarization + polarization_length));
        }
        *json = copy_string(cicy::emit(cicy::invariants_report(cfg->matrix, input ? input : "", pol)));
        return CICY_OK;
    });
}

cicy_status cicy_report_transition(const cicy_config* cfg, const char* input, size_t row, char** json)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(json, "json");
        std::optional<std::size_t> selected;
        if (row != 0)
            selected = row - 1;
        *json = copy_string(cicy::emit(cicy::transition_report(cfg->matrix, input ? input : "", selected)));
        return CICY_OK;
    });
}

cicy_status cicy_report_connect(const cicy_config* cfg, const char* input, char** json, char** chain_json)
{
    return guarded([&] {
        require(cfg, "cfg");
        require(json, "json");
        auto outcome = cicy::connect_report(cfg->matrix, input ? input : "");
        *json = copy_string(cicy::emit(outcome.report));
        if (chain_json)
            *chain_json = copy_string(cicy::dump_chain(outcome.chain));
        return chain_status(outcome.report, true);
    });
}

cicy_status cicy_report_verify_chain(const char* chain_json, const char* input, char** json)
{
    return guarded([&] {
        require(chain_json, "chain_json");
        require(json, "json");
        auto report = cicy::verify_chain_report(cicy::load_chain(chain_json), input ? input : "");
        *json = copy_string(cicy::emit(report));
        return chain_status(report, false);
    });
}

cicy_status cicy_catalog_list(char** json)
{
    return guarded([&] {
        require(json, "json");
        *json = copy_string(cicy::catalog_listing().dump(2) + "\n");
        return CICY_OK;
    });
}

cicy_status cicy_report_catalog(const char* name, int concurrent, char** json)
{
    return guarded([&] {
        require(json, "json");
        std::vector<std::string> names;
        if (name)
            names.emplace_back(name);
        auto report = cicy::catalog_report(names, concurrent != 0);
        *json = copy_string(cicy::emit(report));
        for (const auto& entry : report.results["entries"])
            if (entry.value("error_kind", "") == "consistency") {
                last_error = entry.value("error", "");
                return CICY_ERR_CONSISTENCY;
            }
        return CICY_OK;
    });
}

} // extern "C"
