/* famalg: exact-arithmetic kit for semigroup-indexed operator families,
 * family algebras and their cohomology.
 *
 * C interface of the shared library. A workspace is loaded from a JSON
 * document and driven by JSON command requests; every result is returned as a
 * JSON report string owned by the library (release with famalg_free_string).
 * All handles are opaque; functions return status codes and never throw.
 */
#ifndef FAMALG_H
#define FAMALG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct famalg_workspace famalg_workspace;

typedef enum famalg_status {
  FAMALG_OK = 0,
  FAMALG_ERROR_IO = 1,           /* file not readable */
  FAMALG_ERROR_PARSE = 2,        /* malformed workspace or request */
  FAMALG_ERROR_UNKNOWN_OBJECT = 3,
  FAMALG_ERROR_PRECONDITION = 4, /* an operation's precondition failed */
  FAMALG_ERROR_RESOURCE = 5,     /* configured resource bound exceeded */
  FAMALG_ERROR_BAD_ARGUMENT = 6, /* null pointers and similar misuse */
  FAMALG_ERROR_INTERNAL = 7
} famalg_status;

/* Loads a workspace from a JSON file / from JSON text. On success *out owns
 * the handle; release it with famalg_workspace_close. */
famalg_status famalg_workspace_open(const char* path, famalg_workspace** out);
famalg_status famalg_workspace_parse(const char* json_text, famalg_workspace** out);
void famalg_workspace_close(famalg_workspace* ws);

/* Runs one command request, e.g. {"cmd":"validate","object":"T"}. Construct
 * requests add objects to the workspace. On success *report_json carries the
 * report document. Verdict failures are reported inside the document, not as
 * a status code. */
famalg_status famalg_run(famalg_workspace* ws, const char* request_json, char** report_json);

/* Runs the workspace's embedded command list; the report is a JSON array. */
famalg_status famalg_run_all(famalg_workspace* ws, char** report_json);

/* 1 when every verdict in the report (object or array) passed, 0 when some
 * verdict failed, -1 on malformed input. */
int famalg_report_all_passed(const char* report_json);

/* Renders a report document as human-readable text. */
famalg_status famalg_render_text(const char* report_json, char** text_out);

/* Message for the most recent failure on this thread; empty string if none. */
const char* famalg_last_error(void);

void famalg_free_string(char* s);
const char* famalg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FAMALG_H */
