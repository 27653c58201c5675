#include "tetmac.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "tetmac/classify.hpp"
#include "tetmac/errors.hpp"
#include "tetmac/family.hpp"
#include "tetmac/mac.hpp"
#include "tetmac/mesh_io.hpp"
#include "tetmac/report.hpp"

struct tetmac_mesh {
  tetmac::Mesh mesh;
};

struct tetmac_report {
  tetmac::MeshReport report;
};

struct tetmac_table {
  tetmac::Table table;
};

namespace {

thread_local std::string last_error;

tetmac_status status_of(tetmac::ErrorCode code) {
  using tetmac::ErrorCode;
  switch (code) {
    case ErrorCode::DegenerateInput: return TETMAC_ERR_DEGENERATE_INPUT;
    case ErrorCode::InvalidGamma: return TETMAC_ERR_INVALID_GAMMA;
    case ErrorCode::InvalidBound: return TETMAC_ERR_INVALID_BOUND;
    case ErrorCode::InadmissibleExponents: return TETMAC_ERR_INADMISSIBLE_EXPONENTS;
    case ErrorCode::SolveFailure: return TETMAC_ERR_SOLVE_FAILURE;
    case ErrorCode::ParseError: return TETMAC_ERR_PARSE;
    case ErrorCode::IndexError: return TETMAC_ERR_INDEX;
    case ErrorCode::DimensionError: return TETMAC_ERR_DIMENSION;
    case ErrorCode::IoError: return TETMAC_ERR_IO;
    case ErrorCode::InvalidArgument: return TETMAC_ERR_INVALID_ARGUMENT;
  }
  return TETMAC_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the thread's last error.
template <typename Fn>
tetmac_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return TETMAC_OK;
  } catch (const tetmac::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TETMAC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TETMAC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TETMAC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw tetmac::InvalidArgument(std::string(what) + " must not be null");
}

tetmac::Tetrahedron to_cpp(const tetmac_tetrahedron& t) {
  tetmac::Tetrahedron r;
  for (int i = 0; i < 4; ++i) r[i] = {t.vertices[i][0], t.vertices[i][1], t.vertices[i][2]};
  return r;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tetmac::AngleUnit to_cpp(tetmac_angle_unit unit) {
  return unit == TETMAC_DEGREES ? tetmac::AngleUnit::Degrees : tetmac::AngleUnit::Radians;
}

tetmac::FamilyKind to_cpp(tetmac_family_kind kind) {
  switch (kind) {
    case TETMAC_FAMILY_CORNER_STRETCH: return tetmac::FamilyKind::CornerStretch;
    case TETMAC_FAMILY_PLANAR_COLLAPSE: return tetmac::FamilyKind::PlanarCollapse;
    case TETMAC_FAMILY_NEEDLE: return tetmac::FamilyKind::Needle;
  }
  throw tetmac::InvalidArgument("unknown family kind");
}

void check_format(tetmac_format format) {
  if (format != TETMAC_FORMAT_CSV && format != TETMAC_FORMAT_JSON)
    throw tetmac::InvalidArgument("unknown output format");
}

}  // namespace

extern "C" {

TETMAC_API const char* tetmac_version(void) { return "0.1.0"; }

TETMAC_API const char* tetmac_status_name(tetmac_status status) {
  switch (status) {
    case TETMAC_OK: return "OK";
    case TETMAC_ERR_DEGENERATE_INPUT: return "DEGENERATE_INPUT";
    case TETMAC_ERR_INVALID_GAMMA: return "INVALID_GAMMA";
    case TETMAC_ERR_INVALID_BOUND: return "INVALID_BOUND";
    case TETMAC_ERR_INADMISSIBLE_EXPONENTS: return "INADMISSIBLE_EXPONENTS";
    case TETMAC_ERR_SOLVE_FAILURE: return "SOLVE_FAILURE";
    case TETMAC_ERR_PARSE: return "PARSE_ERROR";
    case TETMAC_ERR_INDEX: return "INDEX_ERROR";
    case TETMAC_ERR_DIMENSION: return "DIMENSION_ERROR";
    case TETMAC_ERR_IO: return "IO_ERROR";
    case TETMAC_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case TETMAC_ERR_INTERNAL: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

TETMAC_API const char* tetmac_last_error(void) { return last_error.c_str(); }

TETMAC_API void tetmac_string_free(char* s) { std::free(s); }

TETMAC_API tetmac_status tetmac_quality_metrics(const tetmac_tetrahedron* t, tetmac_quality* out) {
  return guarded([&] {
    require(t, "tetrahedron");
    require(out, "output");
    const auto q = tetmac::quality_metrics(to_cpp(*t));
    *out = {q.h_T,     q.volume, q.R_T,         q.H_T,            q.ratio_R,      q.ratio_H,
            q.rho_T,   q.shape_ratio,           q.max_face_angle, q.max_dihedral, q.max_angle};
  });
}

TETMAC_API tetmac_status tetmac_classify(const tetmac_tetrahedron* t, tetmac_classification* out) {
  return guarded([&] {
    require(t, "tetrahedron");
    require(out, "output");
    const auto c = tetmac::classify(to_cpp(*t));
    out->type = static_cast<int>(c.kind);
    for (int i = 0; i < 4; ++i) out->role[i] = c.role[i];
    out->alpha1 = c.alpha1;
    out->alpha2 = c.alpha2;
    out->alpha3 = c.alpha3;
    out->e1[0] = c.e1.first;
    out->e1[1] = c.e1.second;
    out->e2[0] = c.e2.first;
    out->e2[1] = c.e2.second;
  });
}

TETMAC_API tetmac_status tetmac_max_angle(const tetmac_tetrahedron* t, double* out) {
  return guarded([&] {
    require(t, "tetrahedron");
    require(out, "output");
    *out = tetmac::max_angle(to_cpp(*t));
  });
}

TETMAC_API tetmac_status tetmac_satisfies_mac(const tetmac_tetrahedron* t, double gamma, int* out) {
  return guarded([&] {
    require(t, "tetrahedron");
    require(out, "output");
    *out = tetmac::satisfies_mac(to_cpp(*t), gamma) ? 1 : 0;
  });
}

TETMAC_API tetmac_status tetmac_theorem_check(const tetmac_tetrahedron* t,
                                              tetmac_theorem_result* out) {
  return guarded([&] {
    require(t, "tetrahedron");
    require(out, "output");
    const auto r = tetmac::theorem_check(to_cpp(*t));
    *out = {r.ratio_H, r.max_angle, r.D, r.gamma_uniform, r.forward_ok ? 1 : 0,
            r.backward_ok ? 1 : 0};
  });
}

TETMAC_API tetmac_status tetmac_forward_constants(double gamma_max, tetmac_forward_result* out) {
  return guarded([&] {
    require(out, "output");
    const auto c = tetmac::forward_constants(gamma_max);
    *out = {c.gamma_max, c.C1, c.sin_delta, c.delta, c.C0, c.D};
  });
}

TETMAC_API tetmac_status tetmac_backward_constants(double D, tetmac_backward_result* out) {
  return guarded([&] {
    require(out, "output");
    const auto c = tetmac::backward_constants(D);
    *out = {c.D,           c.M,           c.gamma_M,          c.gamma_half_M, c.type1_dihedral,
            c.type2_dihedral, c.gamma_type1, c.gamma_type2, c.gamma_uniform};
  });
}

TETMAC_API tetmac_status tetmac_mesh_from_node_ele(const char* node_text, const char* ele_text,
                                                   tetmac_mesh** out) {
  return guarded([&] {
    require(node_text, "node text");
    require(ele_text, "ele text");
    require(out, "output");
    *out = new tetmac_mesh{tetmac::parse_node_ele(node_text, ele_text)};
  });
}

TETMAC_API tetmac_status tetmac_mesh_from_json(const char* text, tetmac_mesh** out) {
  return guarded([&] {
    require(text, "JSON text");
    require(out, "output");
    *out = new tetmac_mesh{tetmac::parse_json_mesh(text)};
  });
}

TETMAC_API tetmac_status tetmac_mesh_read_node_ele(const char* node_path, const char* ele_path,
                                                   tetmac_mesh** out) {
  return guarded([&] {
    require(node_path, "node path");
    require(ele_path, "ele path");
    require(out, "output");
    *out = new tetmac_mesh{tetmac::read_node_ele_files(node_path, ele_path)};
  });
}

TETMAC_API tetmac_status tetmac_mesh_read_json(const char* path, tetmac_mesh** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new tetmac_mesh{tetmac::read_json_mesh_file(path)};
  });
}

TETMAC_API size_t tetmac_mesh_vertex_count(const tetmac_mesh* m) {
  return m ? m->mesh.vertices.size() : 0;
}

TETMAC_API size_t tetmac_mesh_element_count(const tetmac_mesh* m) {
  return m ? m->mesh.elements.size() : 0;
}

TETMAC_API tetmac_status tetmac_mesh_to_json(const tetmac_mesh* m, char** out) {
  return guarded([&] {
    require(m, "mesh");
    require(out, "output");
    *out = duplicate(tetmac::serialize_json_mesh(m->mesh));
  });
}

TETMAC_API void tetmac_mesh_free(tetmac_mesh* m) { delete m; }

TETMAC_API tetmac_status tetmac_analyze(const tetmac_mesh* m, const double* gammas,
                                        size_t gamma_count, tetmac_report** out) {
  return guarded([&] {
    require(m, "mesh");
    require(out, "output");
    if (gamma_count > 0) require(gammas, "gammas");
    *out = new tetmac_report{
        tetmac::analyze_mesh(m->mesh, std::span<const double>(gammas, gamma_count))};
  });
}

TETMAC_API tetmac_status tetmac_report_render(const tetmac_report* r, tetmac_format format,
                                              tetmac_angle_unit unit, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "output");
    check_format(format);
    *out = duplicate(format == TETMAC_FORMAT_CSV ? tetmac::report_csv(r->report, to_cpp(unit))
                                                 : tetmac::report_json(r->report, to_cpp(unit)));
  });
}

TETMAC_API size_t tetmac_report_element_count(const tetmac_report* r) {
  return r ? r->report.rows.size() : 0;
}

TETMAC_API size_t tetmac_report_degenerate_count(const tetmac_report* r) {
  return r ? r->report.globals.degenerate : 0;
}

TETMAC_API size_t tetmac_report_strictest_violations(const tetmac_report* r) {
  return r ? r->report.strictest_violations() : 0;
}

TETMAC_API size_t tetmac_report_theorem_failures(const tetmac_report* r) {
  return r ? r->report.globals.theorem_failures : 0;
}

TETMAC_API void tetmac_report_free(tetmac_report* r) { delete r; }

TETMAC_API tetmac_status tetmac_family_kind_parse(const char* name, tetmac_family_kind* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    switch (tetmac::parse_family_kind(name)) {
      case tetmac::FamilyKind::CornerStretch: *out = TETMAC_FAMILY_CORNER_STRETCH; break;
      case tetmac::FamilyKind::PlanarCollapse: *out = TETMAC_FAMILY_PLANAR_COLLAPSE; break;
      case tetmac::FamilyKind::Needle: *out = TETMAC_FAMILY_NEEDLE; break;
    }
  });
}

TETMAC_API tetmac_status tetmac_family(tetmac_family_kind kind, double eps_start, double factor,
                                       int steps, tetmac_table** out) {
  return guarded([&] {
    require(out, "output");
    const tetmac::FamilySpec spec{to_cpp(kind), eps_start, factor, steps};
    *out = new tetmac_table{tetmac::family_table(tetmac::analyze_family(spec))};
  });
}

TETMAC_API tetmac_status tetmac_interp(tetmac_family_kind kind, double eps_start, double factor,
                                       int steps, int k, int m, double p, const char* fn_id,
                                       double c_probe, tetmac_table** out) {
  return guarded([&] {
    require(fn_id, "function id");
    require(out, "output");
    const tetmac::FamilySpec spec{to_cpp(kind), eps_start, factor, steps};
    const auto& f = tetmac::test_function(fn_id);
    *out = new tetmac_table{tetmac::interp_table(tetmac::run_experiment(spec, k, m, p, f, c_probe))};
  });
}

TETMAC_API size_t tetmac_table_rows(const tetmac_table* t) { return t ? t->table.rows.size() : 0; }

TETMAC_API size_t tetmac_table_columns(const tetmac_table* t) {
  return t ? t->table.columns.size() : 0;
}

TETMAC_API const char* tetmac_table_column_name(const tetmac_table* t, size_t column) {
  if (t == nullptr || column >= t->table.columns.size()) return nullptr;
  return t->table.columns[column].name.c_str();
}

TETMAC_API double tetmac_table_value(const tetmac_table* t, size_t row, size_t column) {
  if (t == nullptr || row >= t->table.rows.size() || column >= t->table.columns.size())
    return std::numeric_limits<double>::quiet_NaN();
  return t->table.rows[row][column];
}

TETMAC_API tetmac_status tetmac_table_render(const tetmac_table* t, tetmac_format format,
                                             tetmac_angle_unit unit, char** out) {
  return guarded([&] {
    require(t, "table");
    require(out, "output");
    check_format(format);
    *out = duplicate(format == TETMAC_FORMAT_CSV ? tetmac::table_csv(t->table, to_cpp(unit))
                                                 : tetmac::table_json(t->table, to_cpp(unit)));
  });
}

TETMAC_API void tetmac_table_free(tetmac_table* t) { delete t; }

}  // extern "C"
