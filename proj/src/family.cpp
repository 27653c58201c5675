#include "tetmac/family.hpp"

#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "tetmac/errors.hpp"
#include "tetmac/interp.hpp"

namespace tetmac {

FamilyKind parse_family_kind(std::string_view name) {
  std::string n(name);
  for (auto& ch : n)
    if (ch == '-') ch = '_';
  if (n == "corner_stretch") return FamilyKind::CornerStretch;
  if (n == "planar_collapse") return FamilyKind::PlanarCollapse;
  if (n == "needle") return FamilyKind::Needle;
  throw InvalidArgument("unknown family kind '" + std::string(name) +
                        "' (expected corner-stretch, planar-collapse or needle)");
}

std::string_view family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CornerStretch: return "corner-stretch";
    case FamilyKind::PlanarCollapse: return "planar-collapse";
    case FamilyKind::Needle: return "needle";
  }
  return "unknown";
}

std::vector<double> eps_schedule(const FamilySpec& spec) {
  if (spec.steps < 1) throw InvalidArgument("family schedule needs at least one step");
  if (!(spec.factor > 0.0 && spec.factor <= 1.0))
    throw InvalidArgument("family factor must lie in (0, 1]");
  std::vector<double> eps;
  eps.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const double e = spec.start * std::pow(spec.factor, i);
    if (!(e > 0.0 && e <= 1.0)) {
      std::ostringstream msg;
      msg << "family parameter eps = " << e << " is outside (0, 1]";
      throw InvalidArgument(msg.str());
    }
    eps.push_back(e);
  }
  return eps;
}

Tetrahedron family_member(FamilyKind kind, double eps) {
  Tetrahedron t;
  switch (kind) {
    case FamilyKind::CornerStretch:
      t.vertices = {Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, eps}};
      break;
    case FamilyKind::PlanarCollapse:
      t.vertices = {Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, eps}};
      break;
    case FamilyKind::Needle:
      t.vertices = {Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, eps, 0}, Point3{0, 0, eps}};
      break;
  }
  if (is_degenerate(t)) {
    std::ostringstream msg;
    msg << family_kind_name(kind) << " member at eps = " << eps << " is degenerate";
    throw DegenerateInput(msg.str());
  }
  return t;
}

std::vector<Tetrahedron> make_family(const FamilySpec& spec) {
  std::vector<Tetrahedron> members;
  for (double e : eps_schedule(spec)) members.push_back(family_member(spec.kind, e));
  return members;
}

std::vector<FamilyRow> analyze_family(const FamilySpec& spec) {
  const auto eps = eps_schedule(spec);
  std::vector<FamilyRow> rows;
  for (double e : eps) {
    const Tetrahedron t = family_member(spec.kind, e);
    FamilyRow row;
    row.eps = e;
    const Classification c = classify(t);
    row.kind = c.kind;
    row.metrics = quality_metrics(t, c, angle_set(t));
    row.theorem = theorem_check(row.metrics.ratio_H, row.metrics.max_angle);
    rows.push_back(row);
  }
  return rows;
}

std::vector<InterpResult> run_experiment(const FamilySpec& spec, int k, int m, double p,
                                         const TestFunction& f, double c_probe) {
  require_admissible(k, m, p);
  require_supported_p(p);
  const auto eps = eps_schedule(spec);
  const auto members = make_family(spec);
  std::vector<InterpResult> results(members.size());

  detail::parallel_for(
      members.size(),
      [&](std::size_t i) {
        const Tetrahedron& t = members[i];
        const QualityMetrics q = quality_metrics(t);
        const LagrangeInterpolant interp = lagrange_interpolate(t, k, f);
        InterpResult r;
        r.eps = eps[i];
        r.h_T = q.h_T;
        r.ratio_R = q.ratio_R;
        r.error_seminorm = seminorm_error(t, f, interp, m, p);
        r.seminorm_v = function_seminorm(t, f, k + 1, p);
        const double h_scale = std::pow(q.h_T, k + 1 - m) * r.seminorm_v;
        const double ratio_scale = std::pow(q.ratio_R, m);
        r.rhs = c_probe * ratio_scale * h_scale;
        r.normalized_constant = r.error_seminorm / (ratio_scale * h_scale);
        r.raw_constant = r.error_seminorm / h_scale;
        results[i] = r;
      },
      1);
  return results;
}

}  // namespace tetmac
