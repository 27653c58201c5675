#include "tetmac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>
#include <numbers>

#include "parallel.hpp"
#include "tetmac/errors.hpp"

namespace tetmac {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

double to_unit(double radians, AngleUnit unit) {
  return unit == AngleUnit::Degrees ? radians * 180.0 / std::numbers::pi : radians;
}

const char* unit_name(AngleUnit unit) { return unit == AngleUnit::Degrees ? "deg" : "rad"; }

const char* boolean(bool b) { return b ? "true" : "false"; }

QualityMetrics infinite_metrics() {
  QualityMetrics q;
  q.h_T = q.volume = q.R_T = q.H_T = q.ratio_R = q.ratio_H = kInf;
  q.rho_T = q.shape_ratio = q.max_face_angle = q.max_dihedral = q.max_angle = kInf;
  return q;
}

ElementRow analyze_element(const Mesh& m, std::size_t id, std::span<const double> gammas) {
  ElementRow row;
  row.id = id;
  const Tetrahedron t = element(m, id);
  try {
    require_nondegenerate(t);
    const Classification c = classify(t);
    row.type = c.kind;
    row.metrics = quality_metrics(t, c, angle_set(t));
    for (double g : gammas) row.mac_ok.push_back(satisfies_mac(row.metrics.max_angle, g));
    const TheoremCheck check = theorem_check(row.metrics.ratio_H, row.metrics.max_angle);
    row.forward_ok = check.forward_ok;
    row.backward_ok = check.backward_ok;
  } catch (const DegenerateInput&) {
    row.degenerate = true;
    row.metrics = infinite_metrics();
    row.mac_ok.assign(gammas.size(), false);
  }
  return row;
}

Histogram make_histogram(std::vector<double> edges) {
  Histogram h;
  h.counts.assign(edges.size() - 1, 0);
  h.edges = std::move(edges);
  return h;
}

ordered_json histogram_json(const Histogram& h, bool angles, AngleUnit unit) {
  ordered_json edges = ordered_json::array();
  for (double e : h.edges) edges.push_back(angles ? to_unit(e, unit) : e);
  return ordered_json{{"edges", edges}, {"counts", h.counts}, {"overflow", h.overflow}};
}

std::string join_counts(const Histogram& h) {
  std::string s;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(h.counts[i]);
  }
  return s;
}

// Non-finite values become JSON null.
ordered_json real_json(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

}  // namespace

void Histogram::add(double v) {
  if (edges.empty() || v < edges.front()) return;
  if (v >= edges.back()) {
    ++overflow;
    return;
  }
  const auto it = std::upper_bound(edges.begin(), edges.end(), v);
  ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::size_t MeshReport::strictest_violations() const {
  if (gammas.empty()) return 0;
  const auto idx = std::min_element(gammas.begin(), gammas.end()) - gammas.begin();
  return globals.violations[static_cast<std::size_t>(idx)];
}

MeshReport analyze_mesh(const Mesh& m, std::span<const double> gammas) {
  validate(m);
  for (double g : gammas) require_gamma(g);

  MeshReport r;
  r.gammas.assign(gammas.begin(), gammas.end());
  r.rows.resize(m.elements.size());
  detail::parallel_for(m.elements.size(),
                       [&](std::size_t i) { r.rows[i] = analyze_element(m, i, gammas); });

  MeshGlobals& g = r.globals;
  g.elements = r.rows.size();
  g.violations.assign(gammas.size(), 0);
  std::vector<double> angle_edges;
  for (int d = 0; d <= 180; d += 10) angle_edges.push_back(d * std::numbers::pi / 180.0);
  g.max_angle_histogram = make_histogram(angle_edges);
  g.ratio_R_histogram = make_histogram({1.0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6});

  bool any_valid = false;
  for (const auto& row : r.rows) {
    for (std::size_t k = 0; k < gammas.size(); ++k)
      if (!row.mac_ok[k]) ++g.violations[k];
    if (row.degenerate) {
      ++g.degenerate;
      continue;
    }
    any_valid = true;
    const auto& q = row.metrics;
    g.h = std::max(g.h, q.h_T);
    g.R = std::max(g.R, q.R_T);
    g.max_ratio_R = std::max(g.max_ratio_R, q.ratio_R);
    g.max_ratio_H = std::max(g.max_ratio_H, q.ratio_H);
    g.max_angle = std::max(g.max_angle, q.max_angle);
    if (!(row.forward_ok && row.backward_ok)) ++g.theorem_failures;
    g.max_angle_histogram.add(q.max_angle);
    g.ratio_R_histogram.add(q.ratio_R);
  }
  if (any_valid) {
    g.suggested_gamma =
        backward_constants(std::max(g.max_ratio_H, 6.0 + kRatioFloorSlack)).gamma_uniform;
  }
  return r;
}

std::string report_csv(const MeshReport& r, AngleUnit unit) {
  const auto& g = r.globals;
  std::string out;
  auto meta = [&out](const std::string& key, const std::string& value) {
    out += "# " + key + "=" + value + "\n";
  };
  meta("angle_unit", unit_name(unit));
  std::string gammas, violations;
  for (std::size_t k = 0; k < r.gammas.size(); ++k) {
    if (k) {
      gammas += ';';
      violations += ';';
    }
    gammas += format_real(to_unit(r.gammas[k], unit));
    violations += std::to_string(g.violations[k]);
  }
  meta("gammas", gammas);
  meta("elements", std::to_string(g.elements));
  meta("degenerate", std::to_string(g.degenerate));
  meta("h", format_real(g.h));
  meta("R", format_real(g.R));
  meta("max_ratio_R", format_real(g.max_ratio_R));
  meta("max_ratio_H", format_real(g.max_ratio_H));
  meta("max_angle", format_real(to_unit(g.max_angle, unit)));
  meta("violations", violations);
  meta("suggested_gamma", g.suggested_gamma ? format_real(to_unit(*g.suggested_gamma, unit)) : "");
  meta("theorem_failures", std::to_string(g.theorem_failures));
  meta("max_angle_histogram", join_counts(g.max_angle_histogram) + "|" +
                                  std::to_string(g.max_angle_histogram.overflow));
  meta("ratio_R_histogram", join_counts(g.ratio_R_histogram) + "|" +
                                std::to_string(g.ratio_R_histogram.overflow));

  out += "element,degenerate,type,h_T,volume,R_T,H_T,ratio_R,ratio_H,rho_T,shape_ratio,"
         "max_face_angle,max_dihedral,max_angle";
  for (double gamma : r.gammas) out += ",mac_ok@" + format_real(to_unit(gamma, unit));
  out += ",forward_ok,backward_ok\n";

  for (const auto& row : r.rows) {
    const auto& q = row.metrics;
    out += std::to_string(row.id) + ',' + boolean(row.degenerate) + ',';
    out += row.degenerate ? "" : std::to_string(static_cast<int>(row.type));
    for (double v : {q.h_T, q.volume, q.R_T, q.H_T, q.ratio_R, q.ratio_H, q.rho_T, q.shape_ratio})
      out += ',' + format_real(v);
    for (double a : {q.max_face_angle, q.max_dihedral, q.max_angle})
      out += ',' + format_real(to_unit(a, unit));
    for (bool ok : row.mac_ok) out += std::string(",") + boolean(ok);
    out += std::string(",") + boolean(row.forward_ok) + ',' + boolean(row.backward_ok) + '\n';
  }
  return out;
}

std::string report_json(const MeshReport& r, AngleUnit unit) {
  const auto& g = r.globals;
  ordered_json gammas = ordered_json::array();
  for (double gamma : r.gammas) gammas.push_back(to_unit(gamma, unit));

  ordered_json globals;
  globals["elements"] = g.elements;
  globals["degenerate"] = g.degenerate;
  globals["h"] = g.h;
  globals["R"] = g.R;
  globals["max_ratio_R"] = g.max_ratio_R;
  globals["max_ratio_H"] = g.max_ratio_H;
  globals["max_angle"] = to_unit(g.max_angle, unit);
  globals["violations"] = g.violations;
  globals["suggested_gamma"] =
      g.suggested_gamma ? ordered_json(to_unit(*g.suggested_gamma, unit)) : ordered_json(nullptr);
  globals["theorem_failures"] = g.theorem_failures;
  globals["histograms"] = {{"max_angle", histogram_json(g.max_angle_histogram, true, unit)},
                           {"ratio_R", histogram_json(g.ratio_R_histogram, false, unit)}};

  ordered_json elements = ordered_json::array();
  for (const auto& row : r.rows) {
    const auto& q = row.metrics;
    ordered_json e;
    e["id"] = row.id;
    e["degenerate"] = row.degenerate;
    e["type"] = row.degenerate ? ordered_json(nullptr) : ordered_json(static_cast<int>(row.type));
    e["h_T"] = real_json(q.h_T);
    e["volume"] = real_json(q.volume);
    e["R_T"] = real_json(q.R_T);
    e["H_T"] = real_json(q.H_T);
    e["ratio_R"] = real_json(q.ratio_R);
    e["ratio_H"] = real_json(q.ratio_H);
    e["rho_T"] = real_json(q.rho_T);
    e["shape_ratio"] = real_json(q.shape_ratio);
    e["max_face_angle"] = real_json(to_unit(q.max_face_angle, unit));
    e["max_dihedral"] = real_json(to_unit(q.max_dihedral, unit));
    e["max_angle"] = real_json(to_unit(q.max_angle, unit));
    ordered_json mac = ordered_json::array();
    for (bool ok : row.mac_ok) mac.push_back(ok);
    e["mac_ok"] = mac;
    e["forward_ok"] = row.forward_ok;
    e["backward_ok"] = row.backward_ok;
    elements.push_back(std::move(e));
  }

  ordered_json doc;
  doc["angle_unit"] = unit_name(unit);
  doc["gammas"] = gammas;
  doc["globals"] = globals;
  doc["elements"] = elements;
  return doc.dump(2) + "\n";
}

Table family_table(const std::vector<FamilyRow>& rows) {
  using K = Table::Kind;
  Table t;
  t.columns = {{"index", K::Integer},       {"eps", K::Real},          {"h_T", K::Real},
               {"volume", K::Real},         {"type", K::Integer},      {"ratio_R", K::Real},
               {"ratio_H", K::Real},        {"shape_ratio", K::Real},  {"max_face_angle", K::Angle},
               {"max_dihedral", K::Angle},  {"max_angle", K::Angle},   {"forward_ok", K::Boolean},
               {"backward_ok", K::Boolean}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& q = r.metrics;
    t.rows.push_back({double(i), r.eps, q.h_T, q.volume, double(static_cast<int>(r.kind)), q.ratio_R,
                      q.ratio_H, q.shape_ratio, q.max_face_angle, q.max_dihedral, q.max_angle,
                      r.theorem.forward_ok ? 1.0 : 0.0, r.theorem.backward_ok ? 1.0 : 0.0});
  }
  return t;
}

Table interp_table(const std::vector<InterpResult>& rows) {
  using K = Table::Kind;
  Table t;
  t.columns = {{"index", K::Integer},       {"eps", K::Real},        {"h_T", K::Real},
               {"ratio_R", K::Real},        {"error", K::Real},      {"seminorm_v", K::Real},
               {"rhs", K::Real},            {"normalized_constant", K::Real},
               {"raw_constant", K::Real}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    t.rows.push_back({double(i), r.eps, r.h_T, r.ratio_R, r.error_seminorm, r.seminorm_v, r.rhs,
                      r.normalized_constant, r.raw_constant});
  }
  return t;
}

std::string table_csv(const Table& t, AngleUnit unit) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) out += (c ? "," : "") + t.columns[c].name;
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ',';
      switch (t.columns[c].kind) {
        case Table::Kind::Integer: out += std::to_string(static_cast<long long>(row[c])); break;
        case Table::Kind::Boolean: out += boolean(row[c] != 0.0); break;
        case Table::Kind::Angle: out += format_real(to_unit(row[c], unit)); break;
        case Table::Kind::Real: out += format_real(row[c]); break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string table_json(const Table& t, AngleUnit unit) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json o;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const auto& col = t.columns[c];
      switch (col.kind) {
        case Table::Kind::Integer: o[col.name] = static_cast<long long>(row[c]); break;
        case Table::Kind::Boolean: o[col.name] = row[c] != 0.0; break;
        case Table::Kind::Angle: o[col.name] = real_json(to_unit(row[c], unit)); break;
        case Table::Kind::Real: o[col.name] = real_json(row[c]); break;
      }
    }
    rows.push_back(std::move(o));
  }
  ordered_json doc;
  doc["angle_unit"] = unit_name(unit);
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace tetmac
