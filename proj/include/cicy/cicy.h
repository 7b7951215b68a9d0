#ifndef CICY_CICY_H
#define CICY_CICY_H

/* C interface to the CICY toolkit. Strings returned through char** outputs are
 * owned by the caller and released with cicy_free_string. Row and column
 * arguments are 1-based, as in the CLI and the JSON documents. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CICY_API __declspec(dllexport)
#elif defined(CICY_BUILDING_LIBRARY)
#  define CICY_API __attribute__((visibility("default")))
#else
#  define CICY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cicy_config cicy_config;

typedef enum cicy_status {
    CICY_OK = 0,
    CICY_ERR_PARSE = 1,
    CICY_ERR_INVALID_ARGUMENT = 2,
    CICY_ERR_PRECONDITION = 3,
    CICY_ERR_UNSUPPORTED = 4,
    CICY_ERR_CONSISTENCY = 5,
    CICY_ERR_INTERNAL = 6
} cicy_status;

CICY_API const char* cicy_version(void);
CICY_API const char* cicy_status_name(cicy_status status);

/* Message of the last failing call on this thread; "" if none. */
CICY_API const char* cicy_last_error(void);

CICY_API void cicy_free_string(char* s);

/* Construction and inspection. */
CICY_API cicy_status cicy_config_parse(const char* text, cicy_config** out);
/* degrees is row-major, rows x columns. */
CICY_API cicy_status cicy_config_create(size_t rows, size_t columns, const int* dimensions, const int* degrees,
                                        cicy_config** out);
CICY_API cicy_status cicy_config_random(uint64_t seed, int max_rows, int max_columns, int max_n,
                                        cicy_config** out);
CICY_API cicy_status cicy_config_clone(const cicy_config* cfg, cicy_config** out);
CICY_API void cicy_config_destroy(cicy_config* cfg);

CICY_API cicy_status cicy_config_shape(const cicy_config* cfg, size_t* rows, size_t* columns);
CICY_API cicy_status cicy_config_entry(const cicy_config* cfg, size_t row, size_t column, int* value);
CICY_API cicy_status cicy_config_ambient_dimension(const cicy_config* cfg, size_t row, int* n);
CICY_API cicy_status cicy_config_dimension(const cicy_config* cfg, int* d);
CICY_API cicy_status cicy_config_render(const cicy_config* cfg, char** out);
CICY_API cicy_status cicy_config_is_valid(const cicy_config* cfg, int* out);
CICY_API cicy_status cicy_config_is_cicy(const cicy_config* cfg, int* out);
CICY_API cicy_status cicy_config_is_block_diagonal(const cicy_config* cfg, int* out);
CICY_API cicy_status cicy_config_canonical_key(const cicy_config* cfg, char** hex);
CICY_API cicy_status cicy_config_equivalent(const cicy_config* a, const cicy_config* b, int* out);

/* Operations; integers are returned as decimal strings. */
CICY_API cicy_status cicy_euler_number(const cicy_config* cfg, char** decimal);
CICY_API cicy_status cicy_betti2(const cicy_config* cfg, char** decimal);
CICY_API cicy_status cicy_odp_count(const cicy_config* cfg, size_t row, char** decimal);
CICY_API cicy_status cicy_contract(const cicy_config* cfg, size_t row, cicy_config** out);

/* JSON reports. connect and verify-chain still produce their report when they
 * return CICY_ERR_CONSISTENCY: any verification failure for connect, a
 * disagreement of the two Euler computations for verify-chain. Other
 * verification failures of a supplied chain show up as failed checks. */
CICY_API cicy_status cicy_report_validate(const cicy_config* cfg, const char* input, char** json);
/* polarization may be NULL (all ones); otherwise length must equal the row count. */
CICY_API cicy_status cicy_report_invariants(const cicy_config* cfg, const char* input, const int* polarization,
                                            size_t polarization_length, char** json);
/* row = 0 analyzes every contraction site. */
CICY_API cicy_status cicy_report_transition(const cicy_config* cfg, const char* input, size_t row, char** json);
/* chain_json may be NULL. */
CICY_API cicy_status cicy_report_connect(const cicy_config* cfg, const char* input, char** json,
                                         char** chain_json);
CICY_API cicy_status cicy_report_verify_chain(const char* chain_json, const char* input, char** json);
CICY_API cicy_status cicy_catalog_list(char** json);
/* name = NULL runs every entry. */
CICY_API cicy_status cicy_report_catalog(const char* name, int concurrent, char** json);

#ifdef __cplusplus
}
#endif

#endif
