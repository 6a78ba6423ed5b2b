#ifndef GMR_H
#define GMR_H

/* C interface to the generalized matrix ring library. Handles are opaque;
 * every function that can fail returns a gmr_status and leaves a message
 * for gmr_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmr_status {
  GMR_OK = 0,
  GMR_VIOLATION = 1,
  GMR_INVALID_INPUT = 2,
  GMR_RESOURCE_LIMIT = 3,
  GMR_INTERNAL_ERROR = 4
} gmr_status;

typedef enum gmr_format { GMR_FORMAT_TEXT = 0, GMR_FORMAT_JSON = 1 } gmr_format;

typedef struct gmr_spec gmr_spec;
typedef struct gmr_report gmr_report;

/* Zero caps mean "use the spec's value". String fields may be NULL. */
typedef struct gmr_options {
  const char* command; /* check | radical | ideals | quotient | components | verify */
  const char* method;  /* radical */
  const char* flavor;  /* ideals */
  const char* ideal;   /* quotient */
  const char* suite;   /* verify */
  uint64_t max_order;
  uint64_t max_lattice;
  uint64_t max_radical;
  int timing;
} gmr_options;

const char* gmr_version(void);
const char* gmr_last_error(void);

void gmr_options_init(gmr_options* opts);

/* Parses and validates a spec; *out is NULL on failure. */
gmr_status gmr_spec_parse(const char* text, size_t len, gmr_spec** out);
/* Canonical JSON echo of a parsed spec, owned by the handle. */
const char* gmr_spec_canonical(const gmr_spec* spec);
void gmr_spec_free(gmr_spec* spec);

/* Runs a command. A report is produced whenever the arguments are usable,
 * including for specs that fail to parse; the return value equals the
 * report's status. */
gmr_status gmr_run(const char* spec_text, size_t len, const char* spec_name, const gmr_options* opts,
                   gmr_report** out);

gmr_status gmr_report_status(const gmr_report* report);
/* Rendered report, owned by the handle and valid until the next render or free. */
const char* gmr_report_render(gmr_report* report, gmr_format format);
void gmr_report_free(gmr_report* report);

#ifdef __cplusplus
}
#endif

#endif
