/*
 * omclab: oriented matroid circuit polytopes, exact arithmetic.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return an omc_status; on failure the
 * message is available from omc_last_error() on the same thread. Strings
 * returned through char** out-parameters are heap allocated and must be
 * released with omc_string_free(). Numbers inside JSON output are decimal
 * strings ("3", "-1/2").
 */
#ifndef OMCLAB_OMCLAB_H
#define OMCLAB_OMCLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(OMCLAB_BUILDING)
#    define OMC_API __declspec(dllexport)
#  else
#    define OMC_API __declspec(dllimport)
#  endif
#else
#  define OMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum omc_status {
  OMC_OK = 0,
  OMC_ERR_INVALID = 1,  /* null handle or bad argument */
  OMC_ERR_PARSE = 2,    /* malformed input text */
  OMC_ERR_GUARD = 3,    /* size limit exceeded */
  OMC_ERR_MISMATCH = 4, /* a consistency or oracle check failed */
  OMC_ERR_DOMAIN = 5,   /* mathematically invalid request */
  OMC_ERR_INTERNAL = 6
} omc_status;

typedef enum omc_input_kind {
  OMC_INPUT_AUTO = 0, /* JSON array: matrix; JSON object: digraph or polytope; else CSV */
  OMC_INPUT_MATRIX = 1,
  OMC_INPUT_DIGRAPH = 2,
  OMC_INPUT_POLYTOPE = 3
} omc_input_kind;

typedef struct omc_circuits omc_circuits;
typedef struct omc_polytope omc_polytope;

OMC_API const char* omc_version(void);
OMC_API const char* omc_last_error(void);
OMC_API const char* omc_status_name(omc_status status);
OMC_API void omc_string_free(char* s);

/* ---- circuits ---------------------------------------------------------- */

/* Circuits (dual = 0) or cocircuits (dual != 0) of a matrix or digraph. */
OMC_API omc_status omc_circuits_from_text(const char* text, omc_input_kind kind, int dual,
                                          omc_circuits** out);
OMC_API void omc_circuits_free(omc_circuits* c);
OMC_API size_t omc_circuits_count(const omc_circuits* c);
OMC_API size_t omc_circuits_ground_size(const omc_circuits* c);
/* Signed set i as a sign string "(+,-,0)". */
OMC_API omc_status omc_circuits_get(const omc_circuits* c, size_t i, char** out);
OMC_API omc_status omc_circuits_to_json(const omc_circuits* c, char** out);
/* *passed is 1 when axioms C0-C3 hold; the JSON names the failing axiom. */
OMC_API omc_status omc_circuits_validate(const omc_circuits* c, int* passed, char** report_json);

/* ---- polytopes --------------------------------------------------------- */

OMC_API omc_status omc_polytope_from_circuits(const omc_circuits* c, omc_polytope** out);
OMC_API omc_status omc_polytope_from_json(const char* text, omc_polytope** out);
OMC_API void omc_polytope_free(omc_polytope* p);
OMC_API size_t omc_polytope_ambient_dim(const omc_polytope* p);
OMC_API size_t omc_polytope_vertex_count(const omc_polytope* p);
OMC_API omc_status omc_polytope_dimension(const omc_polytope* p, size_t* out);
OMC_API omc_status omc_polytope_to_json(const omc_polytope* p, char** out);
OMC_API omc_status omc_polytope_facets_json(const omc_polytope* p, char** out);
/* Fails with OMC_ERR_GUARD when the dimension exceeds max_dim. */
OMC_API omc_status omc_polytope_faces_json(const omc_polytope* p, size_t max_dim, char** out);
OMC_API omc_status omc_polytope_lattice_count(const omc_polytope* p, unsigned t, char** out);
OMC_API omc_status omc_polytope_ehrhart_json(const omc_polytope* p, char** out);
OMC_API omc_status omc_polytope_certify(const omc_polytope* p, int* passed);

/* ---- reports (used by the command line tool) ---------------------------- */
/*
 * Each report is a JSON object echoing the inputs, the requested output and
 * a "checks" array. When a check fails the report is still produced and the
 * status is OMC_ERR_MISMATCH.
 */

/* Circuit listing with axiom validation; verify cross-checks constructors. */
OMC_API omc_status omc_report_circuits(const char* text, omc_input_kind kind, int dual, int verify,
                                       char** out);
/* what: "dim", "facets", "faces", "ehrhart", "hstar" or "count" (uses t). */
OMC_API omc_status omc_report_polytope(const char* text, omc_input_kind kind, int dual, const char* what,
                                       unsigned t, int verify, size_t max_face_dim, char** out);
/* what: "vertices", "fpoly", "ehrhart", "faces" or "sep-dual-check". */
OMC_API omc_status omc_report_family(unsigned n, const char* what, int verify, size_t max_face_dim,
                                     char** out);
/* One element (sigma in cycle or one-line notation) or, with sigma NULL, the
 * class table of S_n. */
OMC_API omc_status omc_report_equivariant(unsigned n, const char* sigma, int verify, char** out);
/* Runs the bundled reproduction checks against the fixture directory. */
OMC_API omc_status omc_report_reproduce(const char* fixture_dir, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OMCLAB_OMCLAB_H */
