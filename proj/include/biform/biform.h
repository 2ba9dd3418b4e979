#ifndef BIFORM_H
#define BIFORM_H

/* C interface to the biform library. Every function returning biform_status
   leaves a message in biform_last_error() on failure. Strings handed out
   through char** must be released with biform_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define BIFORM_API __declspec(dllexport)
#else
#define BIFORM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum biform_status {
  BIFORM_OK = 0,
  BIFORM_ERR_INVALID_ARGUMENT = 1,
  BIFORM_ERR_PARSE = 2,
  BIFORM_ERR_BOUNDS = 3,
  BIFORM_ERR_NONCONFORMING = 4,
  BIFORM_ERR_INTERNAL = 5
} biform_status;

/* Flags for biform_certify. */
#define BIFORM_CERTIFY_FAULT_GAMMA_SIGN 1u

typedef struct biform_basis biform_basis;
typedef struct biform_form biform_form;
typedef struct biform_mesh biform_mesh;
typedef struct biform_report biform_report;

BIFORM_API const char* biform_version(void);
/* Message of the last failure on this thread, "" if none. */
BIFORM_API const char* biform_last_error(void);
BIFORM_API const char* biform_status_name(biform_status status);
BIFORM_API void biform_string_free(char* s);

/* Dimension table of the degree-r space on T^n; n in 2..8, r in 0..8. */
BIFORM_API biform_status biform_dims_json(int n, int r, char** out_json);

/* Basis of degree r on T^n. With face != NULL only the elements whose
   traces on that face survive are kept. */
BIFORM_API biform_status biform_basis_create(int n, int r, const int* face, size_t face_len,
                                             biform_basis** out);
BIFORM_API size_t biform_basis_size(const biform_basis* basis);
/* Short label of element i, e.g. "l0*beta(0,1,2)". */
BIFORM_API biform_status biform_basis_describe(const biform_basis* basis, size_t i, char** out);
BIFORM_API biform_status biform_basis_to_json(const biform_basis* basis, char** out_json);
BIFORM_API void biform_basis_destroy(biform_basis* basis);

/* Constant symmetric (2,2)-forms. */
BIFORM_API biform_status biform_form_from_json(const char* json, biform_form** out);
BIFORM_API biform_status biform_form_to_json(const biform_form* form, char** out_json);
BIFORM_API biform_status biform_form_is_bianchi(const biform_form* form, int* out);
BIFORM_API biform_status biform_form_split(const biform_form* form, biform_form** kernel_part,
                                           biform_form** lambda4_part);
BIFORM_API void biform_form_destroy(biform_form* form);
/* Parse a form, split it, emit both parts. */
BIFORM_API biform_status biform_split_json(const char* json, char** out_json);

BIFORM_API biform_status biform_mesh_from_json(const char* json, biform_mesh** out);
BIFORM_API size_t biform_mesh_cell_count(const biform_mesh* mesh);
/* DoF table at degree r; with check_continuity != 0 the trace comparison on
   shared faces is run too and *continuity_ok receives its verdict. */
BIFORM_API biform_status biform_mesh_dof_json(const biform_mesh* mesh, int r, int check_continuity,
                                              char** out_json, int* continuity_ok);
BIFORM_API void biform_mesh_destroy(biform_mesh* mesh);

/* Constant checks for n = 2..n_max, polynomial checks for n <= min(n_max, 4)
   and r = 0..r_max. A failing check is not an error: inspect the report. */
BIFORM_API biform_status biform_certify(int n_max, int r_max, unsigned flags, biform_report** out);
BIFORM_API int biform_report_passed(const biform_report* report);
BIFORM_API size_t biform_report_size(const biform_report* report);
BIFORM_API biform_status biform_report_to_json(const biform_report* report, char** out_json);
BIFORM_API biform_status biform_report_to_text(const biform_report* report, char** out_text);
BIFORM_API void biform_report_destroy(biform_report* report);

#ifdef __cplusplus
}
#endif

#endif
