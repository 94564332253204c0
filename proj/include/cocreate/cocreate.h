#ifndef COCREATE_H
#define COCREATE_H

/* C interface of the layout co-creation engine.
 *
 * Documents cross the boundary as UTF-8 JSON strings. Strings returned through
 * `char** out` belong to the caller and are released with cc_string_free.
 * Every call returns a cc_status; on failure cc_last_error() holds the
 * message for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT = 1,
  CC_INVALID_ROOM = 2,
  CC_IO = 3,
  CC_SCHEMA_ERROR = 4,
  CC_UNKNOWN_ATTRIBUTE = 5,
  CC_PAGE_OUT_OF_RANGE = 6,
  CC_DEGENERATE_STROKE = 7,
  CC_NO_INTENT = 8,
  CC_MISSING_DEIXIS = 9,
  CC_MISSING_TARGET = 10,
  CC_BACKEND_UNAVAILABLE = 11,
  CC_SCHEMA_VIOLATION = 12,
  CC_DECODE_ERROR = 13,
  CC_PLACEMENT_EXHAUSTED = 14,
  CC_NO_CANDIDATES = 15,
  CC_NO_SPEC_FOR_LABEL = 16,
  CC_UNKNOWN_SESSION = 17,
  CC_UNKNOWN_WORKSPACE = 18,
  CC_UNKNOWN_INSTANCE = 19,
  CC_UNKNOWN_WIREFRAME = 20,
  CC_UNKNOWN_SUGGESTION = 21,
  CC_ALREADY_RESOLVED = 22,
  CC_SUGGESTION_EXPIRED = 23,
  CC_PASTE_BLOCKED = 24,
  CC_OUT_OF_BOUNDS = 25,
  CC_INTERNAL = 99
} cc_status;

typedef struct cc_engine cc_engine_t;
typedef struct cc_service cc_service_t;

/* Name of a status ("PasteBlocked"); never NULL. */
CC_API const char* cc_status_name(cc_status status);
/* Message of the last failed call on this thread; "" after a success. */
CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* Loads catalog, prior table and synonym documents. A NULL path selects the
 * file of that name in $COCREATE_DATA_DIR. */
CC_API cc_status cc_engine_open(const char* catalog_path, const char* priors_path, const char* synonyms_path,
                                cc_engine_t** out);
CC_API void cc_engine_close(cc_engine_t* engine);

/* Room document -> workspace document furnished by scene completion. */
CC_API cc_status cc_generate(cc_engine_t* engine, const char* room_json, uint64_t seed, char** out_workspace_json);
/* Workspace document -> the same workspace with its wireframes populated. */
CC_API cc_status cc_populate(cc_engine_t* engine, const char* workspace_json, uint64_t seed,
                             char** out_workspace_json);
/* Workspace document -> the same workspace with objects turned into wireframes. */
CC_API cc_status cc_abstract(cc_engine_t* engine, const char* workspace_json, char** out_workspace_json);
/* Workspace document and optional goals document -> validation report.
 * `all_passed` (may be NULL) receives 1 when every check passed. */
CC_API cc_status cc_validate(cc_engine_t* engine, const char* workspace_json, const char* goals_json,
                             char** out_report_json, int* all_passed);
/* Command document {text, pointer?, stroke?, selection?} -> parse result. */
CC_API cc_status cc_parse(cc_engine_t* engine, const char* command_json, char** out_result_json);
/* Workspace document -> top-down SVG image. */
CC_API cc_status cc_render(cc_engine_t* engine, const char* workspace_json, char** out_svg);

/* Service over the engine's catalog and priors. `config_json` may be NULL or
 * {"rooms_dir", "persist_dir", "backend": "host:port"}; the LLM parser is
 * configured from the environment. The engine must outlive the service. */
CC_API cc_status cc_service_open(cc_engine_t* engine, const char* config_json, cc_service_t** out);
CC_API void cc_service_close(cc_service_t* service);
/* One protocol request. `query_json` is an object of strings or NULL, `body_json`
 * may be NULL. Protocol errors are reported through `out_status`, not the
 * return value. */
CC_API cc_status cc_service_handle(cc_service_t* service, const char* method, const char* path,
                                   const char* query_json, const char* body_json, int* out_status,
                                   char** out_body_json);
/* Serves HTTP until cc_service_stop. `on_bound` (may be NULL) receives the
 * port before serving starts; port 0 picks a free one. */
CC_API cc_status cc_service_serve(cc_service_t* service, const char* host, int port,
                                  void (*on_bound)(int bound_port, void* user), void* user);
CC_API void cc_service_stop(cc_service_t* service);

#ifdef __cplusplus
}
#endif

#endif
