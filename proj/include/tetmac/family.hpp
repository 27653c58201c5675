#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tetmac/classify.hpp"
#include "tetmac/geometry.hpp"
#include "tetmac/mac.hpp"
#include "tetmac/test_functions.hpp"

namespace tetmac {

/// One-parameter degeneration families, eps in (0, 1]:
///   corner_stretch  (0,0,0) (1,0,0) (0,1,0) (0,0,eps)   right-angled, flattens; MAC(pi/2) holds
///   planar_collapse (0,0,0) (1,0,0) (0,1,0) (1,1,eps)   max angle tends to pi
///   needle          (0,0,0) (1,0,0) (0,eps,0) (0,0,eps) thin needle, bounded H_T/h_T
enum class FamilyKind { CornerStretch, PlanarCollapse, Needle };

FamilyKind parse_family_kind(std::string_view name);  // accepts '-' or '_' separators
std::string_view family_kind_name(FamilyKind kind);

/// Geometric schedule eps_i = start * factor^i, i = 0..steps-1.
struct FamilySpec {
  FamilyKind kind = FamilyKind::CornerStretch;
  double start = 1.0;
  double factor = 0.5;
  int steps = 11;
};

std::vector<double> eps_schedule(const FamilySpec& spec);
Tetrahedron family_member(FamilyKind kind, double eps);
std::vector<Tetrahedron> make_family(const FamilySpec& spec);

struct FamilyRow {
  double eps = 0.0;
  ElementType kind = ElementType::Type1;
  QualityMetrics metrics;
  TheoremCheck theorem;
};

std::vector<FamilyRow> analyze_family(const FamilySpec& spec);

struct InterpResult {
  double eps = 0.0;
  double h_T = 0.0;
  double ratio_R = 0.0;
  double error_seminorm = 0.0;  // |v - I v|_{W^{m,p}(T)}
  double seminorm_v = 0.0;      // |v|_{W^{k+1,p}(T)}
  double rhs = 0.0;             // c_probe (R_T/h_T)^m h_T^(k+1-m) |v|
  double normalized_constant = 0.0;
  double raw_constant = 0.0;    // error / (h_T^(k+1-m) |v|), no ratio factor
};

/// Interpolates f on every family member and reports the empirical constant of
/// |v - I v|_{m,p} <= C (R_T/h_T)^m h_T^(k+1-m) |v|_{k+1,p}. Members run in
/// parallel; results keep schedule order.
std::vector<InterpResult> run_experiment(const FamilySpec& spec, int k, int m, double p,
                                         const TestFunction& f, double c_probe = 1.0);

}  // namespace tetmac
