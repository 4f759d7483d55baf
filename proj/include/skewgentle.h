/* C interface to the skew-gentle finiteness toolkit.
 *
 * All functions return an sg_status code; 0 means success. Results are
 * returned as heap-allocated JSON strings (release with sg_string_free) or
 * as opaque presentation handles (release with sg_presentation_free).
 * sg_last_error_message() describes the most recent failure on the calling
 * thread.
 */

#ifndef SKEWGENTLE_H
#define SKEWGENTLE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sg_presentation sg_presentation;

typedef enum sg_status {
  SG_OK = 0,
  SG_VALIDATION_REJECTED = 1,
  SG_PARSE_ERROR = 2,
  SG_SCHEMA_ERROR = 3,
  SG_INTERNAL_INCONSISTENCY = 4,
  SG_INVALID_INPUT = 5,
  SG_UNKNOWN_FIXTURE = 6,
  SG_BAD_PARAMS = 7,
  SG_OTHER_ERROR = 99
} sg_status;

/* construction */
sg_status sg_presentation_parse(const char* json_text, sg_presentation** out);
/* params_json: {"n": int, "r": int, "m": int} as applicable, or null/empty */
sg_status sg_presentation_example(const char* name, const char* params_json,
                                  sg_presentation** out);
sg_status sg_presentation_random(unsigned long long seed, int max_vertices, int allow_special,
                                 sg_presentation** out);
void sg_presentation_free(sg_presentation* p);

/* serialization of the presentation itself */
sg_status sg_presentation_json(const sg_presentation* p, char** out_json);

/* operations; each returns a JSON document */
sg_status sg_validate_json(const sg_presentation* p, char** out_json);
sg_status sg_analyze_json(const sg_presentation* p, const char* options_json, char** out_json);
sg_status sg_strings_json(const sg_presentation* p, int max_length, char** out_json);
sg_status sg_bands_json(const sg_presentation* p, int max_period, char** out_json);
sg_status sg_surface_json(const sg_presentation* p, char** out_json);
sg_status sg_decide_json(const sg_presentation* p, const char* options_json, char** out_json);
sg_status sg_dual_json(const sg_presentation* p, char** out_json);
sg_status sg_specialize_json(const sg_presentation* p, char** out_json);
/* subset_json: array of boundary indices; writes the separating-curve winding */
sg_status sg_scc_winding(const sg_presentation* p, const char* subset_json, long long* out);

void sg_string_free(char* s);
const char* sg_last_error_message(void);

#ifdef __cplusplus
}
#endif

#endif /* SKEWGENTLE_H */
