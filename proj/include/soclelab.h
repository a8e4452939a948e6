#ifndef SOCLELAB_H
#define SOCLELAB_H

/* C interface to the socle-filtration library.
 *
 * All requests and responses are JSON strings.  A request is an object with
 * a "command" key ("spectra", "socle", or "verify") plus command parameters;
 * the response is an object with deterministic (sorted) keys, so parsing a
 * response and re-serializing it reproduces the bytes exactly.
 *
 * Conventions shared with the CLI: rationals are "p/q" strings, K-types are
 * bracketed integer tuples like "[3,1]", sigma characters are "s00".."s11",
 * factor ids are "g0".."g11", "g0p".."g4p", "g0pp".
 *
 * Commands:
 *   {"command":"spectra","group":"sp2","lambda":[2,1],
 *    "modules":["g9"],"bound":3}
 *      -> {"table":[{"module":"g9","rows":[{"irreducible":...,
 *         "ktype":"[l1,l2]","standard":...}, ...]}], ...}
 *   {"command":"socle","group":"sl3","sigma":"s10","nu":["1","0","-1"]}
 *     (or "lambda":[1,0,-1] with "nu_word":["r12"], a Weyl word applied to
 *      the dominant lambda left to right, in place of "nu")
 *      -> {"status":"ok","floors":[[...bottom...],...],"ascii":"...", ...}
 *         or {"status":"ambiguous","survivors":[...], ...}
 *   {"command":"verify","group":"sl3"}  /  {"command":"verify",
 *    "suite":"oracle"}
 *      -> {"status":"ok"|"fail","passed":N,"total":M,"cases":[...]}
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct soclelab_ctx soclelab_ctx;

/* Return codes of soclelab_request. */
enum {
  SOCLELAB_OK = 0,
  SOCLELAB_INVALID_INPUT = 1, /* malformed request or parameters */
  SOCLELAB_AMBIGUOUS = 2,     /* socle inference has several survivors */
  SOCLELAB_MISMATCH = 3,      /* a verify case failed */
  SOCLELAB_INTERNAL = 4       /* unexpected internal failure */
};

/* Creates a context.  data_dir overrides the data directory used for the
 * catalog and golden files; pass NULL to use the SOCLELAB_DATA environment
 * variable or the built-in default.  Returns NULL only on allocation
 * failure. */
soclelab_ctx* soclelab_create(const char* data_dir);

void soclelab_destroy(soclelab_ctx* ctx);

/* Executes one JSON request.  On every return except SOCLELAB_INVALID_INPUT
 * with an unparsable request, *response receives a malloc'd JSON string the
 * caller releases with soclelab_free_string.  For SOCLELAB_AMBIGUOUS and
 * SOCLELAB_MISMATCH the response carries the full report. */
int soclelab_request(soclelab_ctx* ctx, const char* request,
                     char** response);

void soclelab_free_string(char* s);

/* Message for the most recent failing soclelab_request on this context;
 * valid until the next request or soclelab_destroy. */
const char* soclelab_last_error(const soclelab_ctx* ctx);

#ifdef __cplusplus
}
#endif

#endif /* SOCLELAB_H */
