#ifndef WQO_WQO_H
#define WQO_WQO_H

#include <stdint.h>

#if defined(_WIN32)
#define WQO_API __declspec(dllexport)
#else
#define WQO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WQO_OK = 0,
  WQO_ERR_INVALID_INPUT = 1,
  WQO_ERR_SIZE_CAP = 2,
  WQO_ERR_OVERFLOW = 3,
  WQO_ERR_UNKNOWN_NAME = 4,
  WQO_ERR_UNSUPPORTED = 5,
  WQO_ERR_INTERNAL = 99
} wqo_status;

typedef enum {
  WQO_KIND_ORDER = 1,
  WQO_KIND_SYSTEM = 2,
  WQO_KIND_RELATION = 3,
  WQO_KIND_BARRIER = 4
} wqo_kind;

typedef struct wqo_structure wqo_structure;

/* Strings returned through char** out-parameters are owned by the caller and
   released with wqo_string_free. */

WQO_API const char* wqo_version(void);
/* Message of the last failed call on this thread; "" when none. */
WQO_API const char* wqo_last_error(void);
WQO_API void wqo_string_free(char* s);

/* Parses inline JSON or a path to a JSON file. truncate <= 0 keeps the
   truncation named in the input. */
WQO_API wqo_status wqo_structure_parse(wqo_kind kind, const char* json_or_path, int truncate,
                                       wqo_structure** out);
WQO_API void wqo_structure_free(wqo_structure* s);
WQO_API wqo_kind wqo_structure_kind(const wqo_structure* s);

/* target is one of dim, otp, ot, qo, ss, finclass, image. `second` is only
   used by image (relation first, system second) and may be NULL otherwise.
   The result is a JSON object with a "value" field holding its text form. */
WQO_API wqo_status wqo_eval(const char* target, const wqo_structure* first, const wqo_structure* second,
                            char** out_json);

/* dim and finite-thickness profiles of a set system JSON rebuilt at each
   truncation n1..n2. */
WQO_API wqo_status wqo_profile(const char* system_json, int n1, int n2, char** out_json);
/* Attestations of a catalog entry over truncations n1..n2. */
WQO_API wqo_status wqo_attest(const char* name, int n1, int n2, char** out_json);

/* Runs one named check. size <= 0 uses the check's default. A failing check
   still returns WQO_OK; its report has "status": "fail". */
WQO_API wqo_status wqo_check_run(const char* name, uint64_t seed, int size, char** out_json);
/* Runs every check (or those of one module when `only` is not NULL). */
WQO_API wqo_status wqo_suite_run(uint64_t seed, const char* only, int parallel, int timing, char** out_json);
/* Space-separated check names in suite order. */
WQO_API wqo_status wqo_check_names(char** out);

/* Ordinals in text form, e.g. "w^2*3 + w + 4". */
WQO_API wqo_status wqo_ordinal_normalize(const char* a, char** out);
WQO_API wqo_status wqo_ordinal_add(const char* a, const char* b, char** out);
WQO_API wqo_status wqo_ordinal_mul(const char* a, const char* b, char** out);
/* *out is -1, 0 or 1. */
WQO_API wqo_status wqo_ordinal_compare(const char* a, const char* b, int* out);

#ifdef __cplusplus
}
#endif

#endif
