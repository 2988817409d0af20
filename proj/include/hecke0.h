#ifndef HECKE0_H
#define HECKE0_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, shared with the CLI exit codes. */
#define HK_OK 0
#define HK_VERIFY_FAILED 1
#define HK_SIZE_LIMIT 2
#define HK_UNAVAILABLE 3
#define HK_USAGE 4

typedef struct hk_ctx hk_ctx;

const char* hk_version(void);

/* max_n <= 0 and seed == 0 keep the defaults (12 and 1). */
hk_ctx* hk_ctx_new(int max_n, uint64_t seed);
void hk_ctx_free(hk_ctx* ctx);

/* Message for the most recent failed call on this context; empty string
 * after a success. */
const char* hk_last_error(const hk_ctx* ctx);

/* Report calls return a malloc'd NUL-terminated string (release it with
 * hk_string_free) and set *status to an HK_ code.  On failure they return
 * NULL and leave the message in hk_last_error.
 *
 * Compositions and partitions are passed as comma separated parts, e.g.
 * "1,2,1"; NULL or "" means absent.  format is pretty | json | csv. */

/* Descent class numbers for one class (alpha nonempty) or all classes of n;
 * q > 0 adds the (q,t) layer at that prime power. */
char* hk_ribbon_report(hk_ctx* ctx, int n, const char* alpha, int64_t q,
                       const char* format, int* status);

/* module: regular | coinvariant | projective | simple | springer | flag.
 * mode: plain | t | q | qt. */
char* hk_characteristic_report(hk_ctx* ctx, const char* module, int n,
                               const char* alpha, const char* mu, int64_t q,
                               const char* mode, const char* format, int* status);

/* Runs a named verification suite; n, q, trials <= 0 pick suite defaults.
 * *status is HK_VERIFY_FAILED when the suite ran and found a failure. */
char* hk_verify_suite(hk_ctx* ctx, const char* suite, int n, int64_t q,
                      int trials, const char* format, int* status);

/* Comma separated list of the verification suite names. */
char* hk_suite_list(hk_ctx* ctx, int* status);

void hk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HECKE0_H */
