// tetmac command-line front end. Talks to the library exclusively through the C API.
//
//   tetmac analyze   --mesh m.node m.ele | m.json | - [--gamma 90deg ...] [--format csv|json]
//   tetmac constants --gamma 90deg | --ratio 12
//   tetmac family    --kind planar-collapse --eps 1 --factor 0.5 --steps 10
//   tetmac interp    --kind corner-stretch --k 1 --m 1 --p inf --fn sin123 --steps 10
//
// Exit codes: 0 clean, 2 MAC violations (analyze), 1 any error. Errors are one
// line on stderr: "tetmac: error: <CODE>: <message>".

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tetmac.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;

struct CliError {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(tetmac_status status) {
  throw CliError{tetmac_status_name(status), tetmac_last_error()};
}

void check(tetmac_status status) {
  if (status != TETMAC_OK) fail(status);
}

[[noreturn]] void usage(const std::string& message) { throw CliError{"USAGE", message}; }

struct StringDeleter {
  void operator()(char* s) const { tetmac_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MeshDeleter {
  void operator()(tetmac_mesh* m) const { tetmac_mesh_free(m); }
};
struct ReportDeleter {
  void operator()(tetmac_report* r) const { tetmac_report_free(r); }
};
struct TableDeleter {
  void operator()(tetmac_table* t) const { tetmac_table_free(t); }
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Radians by default; "deg" or "rad" suffixes select the unit explicitly.
double parse_angle(const std::string& text) {
  std::string number = text;
  double scale = 1.0;
  if (ends_with(number, "deg")) {
    number.resize(number.size() - 3);
    scale = std::numbers::pi / 180.0;
  } else if (ends_with(number, "rad")) {
    number.resize(number.size() - 3);
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size() || !std::isfinite(value))
    usage("cannot parse angle '" + text + "' (expected e.g. 1.5708, 1.5708rad or 90deg)");
  return value * scale;
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return INFINITY;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) usage("cannot parse exponent p = '" + text + "'");
  return value;
}

tetmac_format parse_format(const std::string& s) {
  if (s == "csv") return TETMAC_FORMAT_CSV;
  if (s == "json") return TETMAC_FORMAT_JSON;
  usage("unknown format '" + s + "' (csv or json)");
}

tetmac_angle_unit parse_unit(const std::string& s) {
  if (s == "rad") return TETMAC_RADIANS;
  if (s == "deg") return TETMAC_DEGREES;
  usage("unknown angle unit '" + s + "' (rad or deg)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{"IO_ERROR", "cannot open '" + out_path + "' for writing"};
  out << text;
  if (!out) throw CliError{"IO_ERROR", "error writing '" + out_path + "'"};
}

std::unique_ptr<tetmac_mesh, MeshDeleter> load_mesh(const std::vector<std::string>& paths) {
  tetmac_mesh* mesh = nullptr;
  if (paths.size() == 2) {
    check(tetmac_mesh_read_node_ele(paths[0].c_str(), paths[1].c_str(), &mesh));
  } else if (paths.size() == 1 && paths[0] == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    check(tetmac_mesh_from_json(text.c_str(), &mesh));
  } else if (paths.size() == 1 && ends_with(paths[0], ".json")) {
    check(tetmac_mesh_read_json(paths[0].c_str(), &mesh));
  } else if (paths.size() == 1 && ends_with(paths[0], ".node")) {
    const std::string ele = paths[0].substr(0, paths[0].size() - 5) + ".ele";
    check(tetmac_mesh_read_node_ele(paths[0].c_str(), ele.c_str(), &mesh));
  } else {
    usage("--mesh takes a .node/.ele pair, a .json file, or '-' for JSON on stdin");
  }
  return std::unique_ptr<tetmac_mesh, MeshDeleter>(mesh);
}

struct OutputOptions {
  std::string format = "csv";
  std::string out;
  std::string unit = "rad";

  void attach(CLI::App* cmd, const char* default_format) {
    format = default_format;
    cmd->add_option("--format", format, "Output format: csv or json")->capture_default_str();
    cmd->add_option("--out", out, "Output path (default: standard output)");
    cmd->add_option("--angle-unit", unit, "Unit for reported angles: rad or deg")
        ->capture_default_str();
  }
};

struct FamilyOptions {
  std::string kind;
  double eps = 1.0;
  double factor = 0.5;
  int steps = 10;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "corner-stretch, planar-collapse or needle")->required();
    cmd->add_option("--eps", eps, "First family parameter, in (0, 1]")->capture_default_str();
    cmd->add_option("--factor", factor, "Geometric schedule factor")->capture_default_str();
    cmd->add_option("--steps", steps, "Number of family members")->capture_default_str();
  }

  tetmac_family_kind parsed_kind() const {
    tetmac_family_kind k{};
    check(tetmac_family_kind_parse(kind.c_str(), &k));
    return k;
  }
};

int run_analyze(const std::vector<std::string>& mesh_paths, const std::vector<std::string>& gamma_text,
                const OutputOptions& opts) {
  std::vector<double> gammas;
  for (const auto& g : gamma_text) gammas.push_back(parse_angle(g));
  const auto format = parse_format(opts.format);
  const auto unit = parse_unit(opts.unit);

  auto mesh = load_mesh(mesh_paths);
  tetmac_report* raw = nullptr;
  check(tetmac_analyze(mesh.get(), gammas.data(), gammas.size(), &raw));
  std::unique_ptr<tetmac_report, ReportDeleter> report(raw);

  char* text = nullptr;
  check(tetmac_report_render(report.get(), format, unit, &text));
  emit(OwnedString(text).get(), opts.out);
  return tetmac_report_strictest_violations(report.get()) > 0 ? kExitViolations : kExitOk;
}

int run_constants(const std::optional<std::string>& gamma_text, const std::optional<double>& ratio,
                  const std::string& unit_text) {
  if (gamma_text.has_value() == ratio.has_value())
    usage("constants takes exactly one of --gamma or --ratio");
  const bool degrees = parse_unit(unit_text) == TETMAC_DEGREES;
  auto angle = [degrees](double rad) { return degrees ? rad * 180.0 / std::numbers::pi : rad; };

  nlohmann::ordered_json doc;
  doc["angle_unit"] = degrees ? "deg" : "rad";
  if (gamma_text) {
    tetmac_forward_result c{};
    check(tetmac_forward_constants(parse_angle(*gamma_text), &c));
    doc["direction"] = "forward";
    doc["gamma_max"] = angle(c.gamma_max);
    doc["C1"] = c.C1;
    doc["sin_delta"] = c.sin_delta;
    doc["delta"] = angle(c.delta);
    doc["C0"] = c.C0;
    doc["D"] = c.D;
  } else {
    tetmac_backward_result c{};
    check(tetmac_backward_constants(*ratio, &c));
    doc["direction"] = "backward";
    doc["D"] = c.D;
    doc["M"] = c.M;
    doc["gamma_M"] = angle(c.gamma_M);
    doc["gamma_half_M"] = angle(c.gamma_half_M);
    doc["type1_dihedral"] = angle(c.type1_dihedral);
    doc["type2_dihedral"] = angle(c.type2_dihedral);
    doc["gamma_type1"] = angle(c.gamma_type1);
    doc["gamma_type2"] = angle(c.gamma_type2);
    doc["gamma_uniform"] = angle(c.gamma_uniform);
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int render_table(tetmac_table* raw, const OutputOptions& opts) {
  std::unique_ptr<tetmac_table, TableDeleter> table(raw);
  char* text = nullptr;
  check(tetmac_table_render(table.get(), parse_format(opts.format), parse_unit(opts.unit), &text));
  emit(OwnedString(text).get(), opts.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetrahedron quality metrics and maximum angle condition checks"};
  app.require_subcommand(1);

  std::vector<std::string> mesh_paths;
  std::vector<std::string> gammas;
  OutputOptions analyze_out;
  auto* analyze = app.add_subcommand("analyze", "Per-element quality report for a mesh");
  analyze->add_option("--mesh", mesh_paths, "m.node m.ele | m.json | - (JSON on stdin)")
      ->required()
      ->expected(1, 2);
  analyze->add_option("--gamma", gammas, "MAC angle bound(s); radians or with a deg suffix")
      ->expected(1, -1);
  analyze_out.attach(analyze, "csv");

  std::optional<std::string> const_gamma;
  std::optional<double> const_ratio;
  std::string const_unit = "rad";
  auto* constants = app.add_subcommand("constants", "Constant maps between angle and ratio bounds");
  auto* g_opt = constants->add_option("--gamma", const_gamma, "Angle bound gamma_max -> D");
  auto* r_opt = constants->add_option("--ratio", const_ratio, "Ratio bound D -> gamma");
  g_opt->excludes(r_opt);
  constants->add_option("--angle-unit", const_unit, "Unit for reported angles: rad or deg");

  FamilyOptions family_opts;
  OutputOptions family_out;
  auto* family = app.add_subcommand("family", "Metrics along a degeneration family");
  family_opts.attach(family);
  family_out.attach(family, "csv");

  FamilyOptions interp_opts;
  OutputOptions interp_out;
  int k = 1;
  int m = 1;
  std::string p_text = "inf";
  std::string fn = "sin123";
  double c_probe = 1.0;
  auto* interp = app.add_subcommand("interp", "Interpolation error experiment along a family");
  interp_opts.attach(interp);
  interp->add_option("--k", k, "Interpolation degree (1 or 2)")->capture_default_str();
  interp->add_option("--m", m, "Seminorm order")->capture_default_str();
  interp->add_option("--p", p_text, "Exponent: 2 or inf")->capture_default_str();
  interp->add_option("--fn", fn, "Test function id")->capture_default_str();
  interp->add_option("--c-probe", c_probe, "Constant used for the rhs column")
      ->capture_default_str();
  interp_out.attach(interp, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& ch : msg)
      if (ch == '\n') ch = ' ';
    std::cerr << "tetmac: error: USAGE: " << msg << "\n";
    return kExitError;
  }

  try {
    if (*analyze) return run_analyze(mesh_paths, gammas, analyze_out);
    if (*constants) return run_constants(const_gamma, const_ratio, const_unit);
    if (*family) {
      tetmac_table* t = nullptr;
      check(tetmac_family(family_opts.parsed_kind(), family_opts.eps, family_opts.factor,
                          family_opts.steps, &t));
      return render_table(t, family_out);
    }
    if (*interp) {
      tetmac_table* t = nullptr;
      check(tetmac_interp(interp_opts.parsed_kind(), interp_opts.eps, interp_opts.factor,
                          interp_opts.steps, k, m, parse_exponent(p_text), fn.c_str(), c_probe, &t));
      return render_table(t, interp_out);
    }
  } catch (const CliError& e) {
    std::cerr << "tetmac: error: " << e.code << ": " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
