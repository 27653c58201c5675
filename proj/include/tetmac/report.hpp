#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tetmac/classify.hpp"
#include "tetmac/family.hpp"
#include "tetmac/mac.hpp"
#include "tetmac/mesh_io.hpp"

namespace tetmac {

enum class AngleUnit { Radians, Degrees };

struct ElementRow {
  std::size_t id = 0;
  bool degenerate = false;
  ElementType type = ElementType::Type1;  // meaningless when degenerate
  QualityMetrics metrics;                 // every field +inf when degenerate
  std::vector<bool> mac_ok;               // one per requested gamma; false when degenerate
  bool forward_ok = false;
  bool backward_ok = false;
};

/// Counts per half-open bin [edges[i], edges[i+1]); values at or beyond the
/// last edge go to `overflow`, values below the first edge are not counted.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
  std::size_t overflow = 0;

  void add(double v);
};

struct MeshGlobals {
  std::size_t elements = 0;
  std::size_t degenerate = 0;
  double h = 0.0;            // max h_T over valid elements
  double R = 0.0;            // max R_T over valid elements
  double max_ratio_R = 0.0;
  double max_ratio_H = 0.0;
  double max_angle = 0.0;
  std::vector<std::size_t> violations;   // per gamma; degenerate elements count
  std::optional<double> suggested_gamma;  // backward bound at max H_T/h_T over valid elements
  std::size_t theorem_failures = 0;
  Histogram max_angle_histogram;  // radians, 10-degree bins
  Histogram ratio_R_histogram;    // decades from 1 to 1e6
};

struct MeshReport {
  std::vector<double> gammas;
  std::vector<ElementRow> rows;
  MeshGlobals globals;

  /// Violations at the smallest requested gamma (0 when no gamma was requested).
  std::size_t strictest_violations() const;
};

/// Per-element analysis in input order (run in parallel) plus the mesh-wide
/// maxima. Throws InvalidGamma for a gamma outside [pi/3, pi) and IndexError
/// for an invalid mesh; degenerate elements are data, not errors.
MeshReport analyze_mesh(const Mesh& m, std::span<const double> gammas);

std::string report_csv(const MeshReport& r, AngleUnit unit = AngleUnit::Radians);
std::string report_json(const MeshReport& r, AngleUnit unit = AngleUnit::Radians);

/// Column-typed numeric table used for family and experiment output.
struct Table {
  enum class Kind { Real, Integer, Boolean, Angle };
  struct Column {
    std::string name;
    Kind kind = Kind::Real;
  };
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
};

Table family_table(const std::vector<FamilyRow>& rows);
Table interp_table(const std::vector<InterpResult>& rows);

std::string table_csv(const Table& t, AngleUnit unit = AngleUnit::Radians);
std::string table_json(const Table& t, AngleUnit unit = AngleUnit::Radians);

/// "%.17g", with "inf"/"-inf"/"nan" for non-finite values.
std::string format_real(double v);

}  // namespace tetmac
