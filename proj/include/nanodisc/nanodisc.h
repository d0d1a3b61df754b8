/* C interface to the nanodisc fullerene toolkit.
 *
 * All functions returning nd_status leave a message retrievable through
 * nd_last_error() on failure; messages are per thread. Strings handed out
 * through char** parameters are NUL-terminated and must be released with
 * nd_string_free(). Handles are immutable after creation and may be read
 * from several threads at once.
 */
#ifndef NANODISC_H
#define NANODISC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ND_BUILDING_LIBRARY)
#define ND_API __attribute__((visibility("default")))
#else
#define ND_API
#endif

typedef enum nd_status {
  ND_OK = 0,
  ND_ERR_INVALID_ARGUMENT = 1,
  ND_ERR_MALFORMED_INPUT = 2,
  ND_ERR_CORRUPT = 3,
  ND_ERR_IO = 4,
  ND_ERR_INTERNAL = 5
} nd_status;

typedef enum nd_lemma2_mode {
  ND_LEMMA2_AUTO = 0, /* exhaustive up to 200 vertices, sampled above */
  ND_LEMMA2_EXHAUSTIVE = 1,
  ND_LEMMA2_SAMPLED = 2,
  ND_LEMMA2_SKIP = 3
} nd_lemma2_mode;

typedef enum nd_layer {
  ND_LAYER_FULLERENE = 0,    /* D_{r,t} */
  ND_LAYER_TRIANGULATION = 1 /* its dual D*_{r,t} */
} nd_layer;

typedef enum nd_format {
  ND_FORMAT_GRAPH6 = 0,
  ND_FORMAT_DOT = 1,
  ND_FORMAT_ADJACENCY = 2,
  ND_FORMAT_FACES = 3,
  ND_FORMAT_CERTIFICATE_JSON = 4
} nd_format;

typedef struct nd_nanodisc nd_nanodisc;
typedef struct nd_certificate nd_certificate;
typedef struct nd_scan nd_scan;

typedef struct nd_counts {
  size_t vertices;
  size_t edges;
  size_t faces;
} nd_counts;

typedef struct nd_certificate_info {
  int r;
  int t;
  long long n;
  int diameter;
  int witness_a;
  int witness_b;
  long long theorem1_bound;
  long long conjecture_bound;
  double lower_bound;
  int counterexample; /* diameter < conjecture_bound */
  int all_pass;
} nd_certificate_info;

ND_API const char* nd_version(void);
ND_API const char* nd_last_error(void);
ND_API const char* nd_status_string(nd_status status);
ND_API void nd_string_free(char* text);

/* Builds D*_{r,t} and its dual D_{r,t}; requires r >= 2, 1 <= t <= r-1. */
ND_API nd_status nd_nanodisc_create(int r, int t, nd_nanodisc** out);
ND_API void nd_nanodisc_destroy(nd_nanodisc* disc);
ND_API nd_status nd_nanodisc_counts(const nd_nanodisc* disc, nd_layer layer, nd_counts* out);
/* ND_FORMAT_CERTIFICATE_JSON certifies the fullerene with ND_LEMMA2_AUTO. */
ND_API nd_status nd_nanodisc_export(const nd_nanodisc* disc, nd_layer layer, nd_format format,
                                    char** out_text, size_t* out_len);
ND_API nd_status nd_nanodisc_diameter(const nd_nanodisc* disc, nd_layer layer, int* value,
                                      int* witness_a, int* witness_b);

ND_API nd_status nd_certify(int r, int t, nd_lemma2_mode mode, nd_certificate** out);
ND_API void nd_certificate_destroy(nd_certificate* cert);
ND_API nd_status nd_certificate_get_info(const nd_certificate* cert, nd_certificate_info* out);
ND_API nd_status nd_certificate_to_json(const nd_certificate* cert, char** out_text,
                                        size_t* out_len);

/* Certificates for every (r,t) with 2 <= r <= r_max, ordered by (n, t). */
ND_API nd_status nd_scan_run(int r_max, nd_lemma2_mode mode, nd_scan** out);
ND_API void nd_scan_destroy(nd_scan* scan);
ND_API size_t nd_scan_count(const nd_scan* scan);
/* Borrowed pointer, valid while the scan lives. NULL if out of range. */
ND_API const nd_certificate* nd_scan_certificate(const nd_scan* scan, size_t index);
/* Smallest counterexample order, or 0 if there is none. */
ND_API long long nd_scan_minimum_counterexample(const nd_scan* scan);
ND_API int nd_scan_all_pass(const nd_scan* scan);
ND_API nd_status nd_scan_to_text(const nd_scan* scan, int as_json, char** out_text,
                                 size_t* out_len);

/* Checks a graph6-encoded graph as a fullerene. `rotation_text` (adjacency
 * text format, may be NULL) supplies the embedding; otherwise it is
 * recovered. On ND_OK, *all_pass tells whether every check passed. */
ND_API nd_status nd_check_input(const char* graph6, size_t graph6_len, const char* rotation_text,
                                size_t rotation_len, nd_lemma2_mode mode, char** report_json,
                                size_t* report_len, int* all_pass);

/* Encodes / decodes graph6 through the adjacency text format. */
ND_API nd_status nd_graph6_from_adjacency(const char* adjacency_text, size_t len, char** out_text,
                                          size_t* out_len);
ND_API nd_status nd_graph6_to_adjacency(const char* graph6, size_t len, char** out_text,
                                        size_t* out_len);

#ifdef __cplusplus
}
#endif

#endif /* NANODISC_H */
