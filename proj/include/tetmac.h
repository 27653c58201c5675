/* C interface to the tetmac tetrahedron quality library.
 *
 * Every fallible call returns a tetmac_status; on failure a one-line message
 * is available from tetmac_last_error() until the next call on the same
 * thread. Handles are opaque and owned by the caller (free with the matching
 * *_free function). Strings returned through char** are freed with
 * tetmac_string_free. Angles are radians throughout.
 */
#ifndef TETMAC_H
#define TETMAC_H

#include <stddef.h>

#if defined(TETMAC_BUILDING_LIBRARY)
#define TETMAC_API __attribute__((visibility("default")))
#else
#define TETMAC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tetmac_status {
  TETMAC_OK = 0,
  TETMAC_ERR_DEGENERATE_INPUT = 1,
  TETMAC_ERR_INVALID_GAMMA = 2,
  TETMAC_ERR_INVALID_BOUND = 3,
  TETMAC_ERR_INADMISSIBLE_EXPONENTS = 4,
  TETMAC_ERR_SOLVE_FAILURE = 5,
  TETMAC_ERR_PARSE = 6,
  TETMAC_ERR_INDEX = 7,
  TETMAC_ERR_DIMENSION = 8,
  TETMAC_ERR_IO = 9,
  TETMAC_ERR_INVALID_ARGUMENT = 10,
  TETMAC_ERR_INTERNAL = 11
} tetmac_status;

typedef enum tetmac_format { TETMAC_FORMAT_CSV = 0, TETMAC_FORMAT_JSON = 1 } tetmac_format;

typedef enum tetmac_angle_unit { TETMAC_RADIANS = 0, TETMAC_DEGREES = 1 } tetmac_angle_unit;

typedef enum tetmac_family_kind {
  TETMAC_FAMILY_CORNER_STRETCH = 0,
  TETMAC_FAMILY_PLANAR_COLLAPSE = 1,
  TETMAC_FAMILY_NEEDLE = 2
} tetmac_family_kind;

/* vertices[i] plays the role of P_{i+1}. */
typedef struct tetmac_tetrahedron {
  double vertices[4][3];
} tetmac_tetrahedron;

typedef struct tetmac_quality {
  double h_T;
  double volume;
  double R_T;
  double H_T;
  double ratio_R;
  double ratio_H;
  double rho_T;
  double shape_ratio;
  double max_face_angle;
  double max_dihedral;
  double max_angle;
} tetmac_quality;

typedef struct tetmac_classification {
  int type;    /* 1 or 2 */
  int role[4]; /* role[r] = input vertex acting as P_{r+1} */
  double alpha1;
  double alpha2;
  double alpha3;
  int e1[2];
  int e2[2];
} tetmac_classification;

typedef struct tetmac_forward_result {
  double gamma_max;
  double C1;
  double sin_delta;
  double delta;
  double C0;
  double D;
} tetmac_forward_result;

typedef struct tetmac_backward_result {
  double D;
  double M;
  double gamma_M;
  double gamma_half_M;
  double type1_dihedral;
  double type2_dihedral;
  double gamma_type1;
  double gamma_type2;
  double gamma_uniform;
} tetmac_backward_result;

typedef struct tetmac_theorem_result {
  double ratio_H;
  double max_angle;
  double D;
  double gamma_uniform;
  int forward_ok;
  int backward_ok;
} tetmac_theorem_result;

typedef struct tetmac_mesh tetmac_mesh;
typedef struct tetmac_report tetmac_report;
typedef struct tetmac_table tetmac_table;

TETMAC_API const char* tetmac_version(void);
TETMAC_API const char* tetmac_status_name(tetmac_status status);
TETMAC_API const char* tetmac_last_error(void);
TETMAC_API void tetmac_string_free(char* s);

/* Single elements */
TETMAC_API tetmac_status tetmac_quality_metrics(const tetmac_tetrahedron* t, tetmac_quality* out);
TETMAC_API tetmac_status tetmac_classify(const tetmac_tetrahedron* t, tetmac_classification* out);
TETMAC_API tetmac_status tetmac_max_angle(const tetmac_tetrahedron* t, double* out);
TETMAC_API tetmac_status tetmac_satisfies_mac(const tetmac_tetrahedron* t, double gamma, int* out);
TETMAC_API tetmac_status tetmac_theorem_check(const tetmac_tetrahedron* t,
                                              tetmac_theorem_result* out);

/* Constant maps between an angle bound and an H_T/h_T bound */
TETMAC_API tetmac_status tetmac_forward_constants(double gamma_max,
                                                  tetmac_forward_result* out);
TETMAC_API tetmac_status tetmac_backward_constants(double D, tetmac_backward_result* out);

/* Meshes */
TETMAC_API tetmac_status tetmac_mesh_from_node_ele(const char* node_text, const char* ele_text,
                                                   tetmac_mesh** out);
TETMAC_API tetmac_status tetmac_mesh_from_json(const char* text, tetmac_mesh** out);
TETMAC_API tetmac_status tetmac_mesh_read_node_ele(const char* node_path, const char* ele_path,
                                                   tetmac_mesh** out);
TETMAC_API tetmac_status tetmac_mesh_read_json(const char* path, tetmac_mesh** out);
TETMAC_API size_t tetmac_mesh_vertex_count(const tetmac_mesh* m);
TETMAC_API size_t tetmac_mesh_element_count(const tetmac_mesh* m);
TETMAC_API tetmac_status tetmac_mesh_to_json(const tetmac_mesh* m, char** out);
TETMAC_API void tetmac_mesh_free(tetmac_mesh* m);

/* Mesh reports */
TETMAC_API tetmac_status tetmac_analyze(const tetmac_mesh* m, const double* gammas,
                                        size_t gamma_count, tetmac_report** out);
TETMAC_API tetmac_status tetmac_report_render(const tetmac_report* r, tetmac_format format,
                                              tetmac_angle_unit unit, char** out);
TETMAC_API size_t tetmac_report_element_count(const tetmac_report* r);
TETMAC_API size_t tetmac_report_degenerate_count(const tetmac_report* r);
/* MAC violations at the smallest requested gamma (degenerate elements count). */
TETMAC_API size_t tetmac_report_strictest_violations(const tetmac_report* r);
TETMAC_API size_t tetmac_report_theorem_failures(const tetmac_report* r);
TETMAC_API void tetmac_report_free(tetmac_report* r);

/* Degeneration families and interpolation experiments */
TETMAC_API tetmac_status tetmac_family_kind_parse(const char* name, tetmac_family_kind* out);
TETMAC_API tetmac_status tetmac_family(tetmac_family_kind kind, double eps_start, double factor,
                                       int steps, tetmac_table** out);
/* p is 2 or INFINITY. fn_id names a registered test function (e.g. "sin123"). */
TETMAC_API tetmac_status tetmac_interp(tetmac_family_kind kind, double eps_start, double factor,
                                       int steps, int k, int m, double p, const char* fn_id,
                                       double c_probe, tetmac_table** out);
TETMAC_API size_t tetmac_table_rows(const tetmac_table* t);
TETMAC_API size_t tetmac_table_columns(const tetmac_table* t);
TETMAC_API const char* tetmac_table_column_name(const tetmac_table* t, size_t column);
TETMAC_API double tetmac_table_value(const tetmac_table* t, size_t row, size_t column);
TETMAC_API tetmac_status tetmac_table_render(const tetmac_table* t, tetmac_format format,
                                             tetmac_angle_unit unit, char** out);
TETMAC_API void tetmac_table_free(tetmac_table* t);

#ifdef __cplusplus
}
#endif

#endif /* TETMAC_H */
