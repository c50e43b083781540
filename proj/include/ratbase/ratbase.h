/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the rational base numeration library.
 *
 * Every function returns an rb_status. On failure a description is available
 * from rb_last_error_message() on the calling thread. Strings returned through
 * `char **out` are owned by the caller and released with rb_string_free().
 * Integers that may be large (nodes, values) travel as decimal strings.
 */

#ifndef RATBASE_RATBASE_H
#define RATBASE_RATBASE_H

#include <stddef.h>
#include <stdint.h>

#if defined(RATBASE_BUILDING_LIBRARY)
#define RB_API __attribute__((visibility("default")))
#else
#define RB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rb_base rb_base;

typedef enum rb_status {
  RB_OK = 0,
  RB_ERR_INVALID_ARGUMENT = 1,
  RB_ERR_INVALID_BASE = 2,
  RB_ERR_DIGIT_OUT_OF_ALPHABET = 3,
  RB_ERR_LENGTH_MISMATCH = 4,
  RB_ERR_FRONTIER_CAP = 5,
  RB_ERR_REGIME = 6,
  RB_ERR_DEPTH_CAP = 7,
  RB_ERR_PARSE = 8,
  RB_ERR_INTERNAL = 9
} rb_status;

typedef enum rb_format {
  RB_FORMAT_TEXT = 0,
  RB_FORMAT_JSON = 1,
  RB_FORMAT_CSV = 2,
  RB_FORMAT_DOT = 3,
  RB_FORMAT_SVG = 4
} rb_format;

typedef enum rb_word_kind { RB_WORD_BOTTOM = 0, RB_WORD_TOP = 1, RB_WORD_SPAN = 2 } rb_word_kind;

typedef enum rb_render_kind {
  RB_RENDER_TREE = 0,       /* T_z: dot graph, or fractal svg */
  RB_RENDER_SPAN = 1,       /* S_z: dot graph, or fractal svg with deleted edges dashed */
  RB_RENDER_FRACTAL = 2,    /* svg only */
  RB_RENDER_TRANSDUCER = 3  /* dot only */
} rb_render_kind;

typedef struct rb_refine_options {
  size_t max_depth;
  size_t tail_depth;
  size_t frontier_cap;
  unsigned precision;
  int contraction;
  int intervals;
} rb_refine_options;

typedef struct rb_dimension_options {
  size_t max_depth;
  size_t frontier_cap;
  unsigned precision;
} rb_dimension_options;

typedef struct rb_check_options {
  uint64_t max_node;
  size_t prefix_len;
  size_t tail_depth;
  size_t frontier_cap;
} rb_check_options;

typedef struct rb_render_options {
  size_t frontier_cap;
  unsigned precision;
  double x_step;
  double y_scale;
  double margin;
  int span_overlay; /* fractal kind only */
} rb_render_options;

RB_API void rb_refine_options_init(rb_refine_options *o);
RB_API void rb_dimension_options_init(rb_dimension_options *o);
RB_API void rb_check_options_init(rb_check_options *o);
RB_API void rb_render_options_init(rb_render_options *o);

RB_API const char *rb_version(void);
RB_API const char *rb_status_name(rb_status s);
RB_API const char *rb_last_error_message(void);
RB_API void rb_string_free(char *s);

RB_API rb_status rb_format_parse(const char *name, rb_format *out);
RB_API rb_status rb_word_kind_parse(const char *name, rb_word_kind *out);
RB_API rb_status rb_render_kind_parse(const char *name, rb_render_kind *out);

/* p and q are decimal strings. */
RB_API rb_status rb_base_create(const char *p, const char *q, rb_base **out);
/* "p/q" */
RB_API rb_status rb_base_parse(const char *text, rb_base **out);
RB_API void rb_base_free(rb_base *base);
RB_API rb_status rb_base_to_string(const rb_base *base, char **out);
RB_API rb_status rb_base_is_large(const rb_base *base, int *out);

/* Representation of n in compact digit notation ("" for 0). */
RB_API rb_status rb_encode(const rb_base *base, const char *n, char **out);
/* Value of a finite word, "n" or "num/den". */
RB_API rb_status rb_eval_word(const rb_base *base, const char *word, char **out);

/* First k letters of the bottom, top or span word of n, written to out[0..k). */
RB_API rb_status rb_word_prefix(const rb_base *base, const char *n, rb_word_kind kind, size_t k, int64_t *out);
/* Runs D_{z,start} (or its inverse) on len letters of B_q. */
RB_API rb_status rb_transduce(const rb_base *base, const char *start, const int64_t *input, size_t len,
                              int inverse, int64_t *out);

RB_API rb_status rb_convert_int_report(const rb_base *base, const char *n, rb_format format, char **out);
RB_API rb_status rb_convert_word_report(const rb_base *base, const char *word, rb_format format, char **out);
RB_API rb_status rb_word_report(const rb_base *base, const char *n, rb_word_kind kind, size_t k, rb_format format,
                                char **out);
RB_API rb_status rb_node_record_json(const rb_base *base, const char *n, size_t k, char **out);
RB_API rb_status rb_transduce_report(const rb_base *base, const char *start, const char *input, int inverse,
                                     rb_format format, char **out);
RB_API rb_status rb_verify_transducer(const rb_base *base, const char *start, const char *from, const char *to,
                                      size_t k, rb_format format, char **out, int *passed);
RB_API rb_status rb_psi_table(const rb_base *base, rb_format format, char **out);
RB_API rb_status rb_refine_report(const rb_base *base, const rb_refine_options *options, rb_format format,
                                  char **out);
RB_API rb_status rb_dimension_report(const rb_base *base, const rb_dimension_options *options, rb_format format,
                                     char **out);
/* suite is a suite name or "all"; *passed is 0 when a check fails. */
RB_API rb_status rb_check_report(const rb_base *base, const char *suite, const rb_check_options *options,
                                 rb_format format, char **out, int *passed);
RB_API rb_status rb_render(const rb_base *base, rb_render_kind kind, size_t depth, const rb_render_options *options,
                           rb_format format, char **out);

#ifdef __cplusplus
}
#endif

#endif /* RATBASE_RATBASE_H */
