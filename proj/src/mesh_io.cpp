#include "tetmac/mesh_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tetmac/errors.hpp"

namespace tetmac {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty, comment-stripped lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
  }
  return lines;
}

long long to_integer(std::string_view tok, std::size_t line, const char* file) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(std::string(file) + ": expected an integer, got '" + std::string(tok) + "'",
                     line);
  return v;
}

double to_real(std::string_view tok, std::size_t line, const char* file) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || !std::isfinite(v))
    throw ParseError(std::string(file) + ": expected a finite number, got '" + std::string(tok) + "'",
                     line);
  return v;
}

void check_distinct(const std::array<std::size_t, 4>& e, std::size_t line, std::size_t id) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (e[a] == e[b])
        throw ParseError("element " + std::to_string(id) + " repeats vertex " + std::to_string(e[a]),
                         line);
}

}  // namespace

void validate(const Mesh& m) {
  for (std::size_t id = 0; id < m.elements.size(); ++id) {
    const auto& e = m.elements[id];
    for (auto v : e)
      if (v >= m.vertices.size())
        throw IndexError("element " + std::to_string(id) + " references vertex " +
                         std::to_string(v) + " of " + std::to_string(m.vertices.size()));
    check_distinct(e, 0, id);
  }
}

Tetrahedron element(const Mesh& m, std::size_t e) {
  Tetrahedron t;
  for (int k = 0; k < 4; ++k) t[k] = m.vertices.at(m.elements.at(e)[k]);
  return t;
}

Mesh parse_node_ele(std::string_view node_text, std::string_view ele_text) {
  static constexpr const char* kNode = "node file";
  static constexpr const char* kEle = "ele file";
  const auto nodes = tokenize(node_text);
  if (nodes.empty()) throw ParseError("node file: missing header");
  const auto& nh = nodes.front();
  if (nh.tokens.size() < 2 || nh.tokens.size() > 4)
    throw ParseError("node file: header must be '<#points> <dim> [<#attributes> <#markers>]'",
                     nh.number);
  const long long npoints = to_integer(nh.tokens[0], nh.number, kNode);
  const long long dim = to_integer(nh.tokens[1], nh.number, kNode);
  const long long nattr = nh.tokens.size() > 2 ? to_integer(nh.tokens[2], nh.number, kNode) : 0;
  const long long nmark = nh.tokens.size() > 3 ? to_integer(nh.tokens[3], nh.number, kNode) : 0;
  if (dim != 3) throw DimensionError("node file: dimension " + std::to_string(dim) + " (need 3)", nh.number);
  if (npoints < 0 || nattr < 0 || nmark < 0 || nmark > 1)
    throw ParseError("node file: invalid header counts", nh.number);
  if (static_cast<long long>(nodes.size()) - 1 != npoints)
    throw ParseError("node file: header declares " + std::to_string(npoints) + " points, found " +
                         std::to_string(nodes.size() - 1),
                     nodes.size() > 1 ? nodes.back().number : nh.number);

  Mesh m;
  m.vertices.reserve(static_cast<std::size_t>(npoints));
  long long first_id = 0;
  const std::size_t point_tokens = static_cast<std::size_t>(4 + nattr + nmark);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto& l = nodes[i];
    if (l.tokens.size() != point_tokens)
      throw ParseError("node file: expected " + std::to_string(point_tokens) + " fields, found " +
                           std::to_string(l.tokens.size()),
                       l.number);
    const long long id = to_integer(l.tokens[0], l.number, kNode);
    if (i == 1) {
      first_id = id;
      if (id != 0 && id != 1) throw ParseError("node file: first point index must be 0 or 1", l.number);
    } else if (id != first_id + static_cast<long long>(i) - 1) {
      throw ParseError("node file: point indices must be consecutive", l.number);
    }
    m.vertices.push_back({to_real(l.tokens[1], l.number, kNode), to_real(l.tokens[2], l.number, kNode),
                          to_real(l.tokens[3], l.number, kNode)});
  }

  const auto eles = tokenize(ele_text);
  if (eles.empty()) throw ParseError("ele file: missing header");
  const auto& eh = eles.front();
  if (eh.tokens.size() < 2 || eh.tokens.size() > 3)
    throw ParseError("ele file: header must be '<#tets> <nodes-per-tet> [<#attributes>]'", eh.number);
  const long long ntets = to_integer(eh.tokens[0], eh.number, kEle);
  const long long per = to_integer(eh.tokens[1], eh.number, kEle);
  const long long eattr = eh.tokens.size() > 2 ? to_integer(eh.tokens[2], eh.number, kEle) : 0;
  if (per != 4) throw ParseError("ele file: nodes per tetrahedron must be 4", eh.number);
  if (ntets < 0 || eattr < 0) throw ParseError("ele file: invalid header counts", eh.number);
  if (static_cast<long long>(eles.size()) - 1 != ntets)
    throw ParseError("ele file: header declares " + std::to_string(ntets) + " tetrahedra, found " +
                         std::to_string(eles.size() - 1),
                     eles.size() > 1 ? eles.back().number : eh.number);

  const std::size_t ele_tokens = static_cast<std::size_t>(5 + eattr);
  std::vector<std::array<long long, 4>> refs;
  bool references_zero = false;
  for (std::size_t i = 1; i < eles.size(); ++i) {
    const auto& l = eles[i];
    if (l.tokens.size() != ele_tokens)
      throw ParseError("ele file: expected " + std::to_string(ele_tokens) + " fields, found " +
                           std::to_string(l.tokens.size()),
                       l.number);
    std::array<long long, 4> r{};
    for (int k = 0; k < 4; ++k) {
      r[k] = to_integer(l.tokens[1 + k], l.number, kEle);
      references_zero = references_zero || r[k] == 0;
    }
    refs.push_back(r);
  }

  const long long base = (first_id == 0 && !m.vertices.empty()) || references_zero ? 0 : 1;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const std::size_t line = eles[i + 1].number;
    std::array<std::size_t, 4> e{};
    for (int k = 0; k < 4; ++k) {
      const long long pos = refs[i][k] - base;
      if (pos < 0 || pos >= static_cast<long long>(m.vertices.size()))
        throw IndexError("ele file: vertex " + std::to_string(refs[i][k]) + " out of range (" +
                             std::to_string(m.vertices.size()) + " points, base " +
                             std::to_string(base) + ")",
                         line);
      e[k] = static_cast<std::size_t>(pos);
    }
    check_distinct(e, line, i);
    m.elements.push_back(e);
  }
  return m;
}

Mesh parse_json_mesh(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("tets"))
    throw ParseError("mesh JSON must be an object with \"vertices\" and \"tets\"");
  const auto& verts = doc["vertices"];
  const auto& tets = doc["tets"];
  if (!verts.is_array() || !tets.is_array())
    throw ParseError("\"vertices\" and \"tets\" must be arrays");

  Mesh m;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& v = verts[i];
    if (!v.is_array() || v.size() != 3)
      throw ParseError("vertex " + std::to_string(i) + " must be an array of 3 numbers");
    std::array<double, 3> c{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!v[k].is_number() || !std::isfinite(v[k].get<double>()))
        throw ParseError("vertex " + std::to_string(i) + " has a non-finite coordinate");
      c[k] = v[k].get<double>();
    }
    m.vertices.push_back({c[0], c[1], c[2]});
  }
  for (std::size_t i = 0; i < tets.size(); ++i) {
    const auto& t = tets[i];
    if (!t.is_array() || t.size() != 4)
      throw ParseError("tet " + std::to_string(i) + " must be an array of 4 indices");
    std::array<std::size_t, 4> e{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!t[k].is_number_integer() || t[k].get<long long>() < 0)
        throw ParseError("tet " + std::to_string(i) + " has a non-integer or negative index");
      e[k] = t[k].get<std::size_t>();
    }
    m.elements.push_back(e);
  }
  validate(m);
  return m;
}

std::string serialize_json_mesh(const Mesh& m) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& p : m.vertices) verts.push_back({p.x, p.y, p.z});
  nlohmann::json tets = nlohmann::json::array();
  for (const auto& e : m.elements) tets.push_back({e[0], e[1], e[2], e[3]});
  return nlohmann::json{{"vertices", verts}, {"tets", tets}}.dump();
}

std::string serialize_node(const Mesh& m, int base) {
  std::string out = std::to_string(m.vertices.size()) + " 3 0 0\n";
  char buf[128];
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const auto& p = m.vertices[i];
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g %.17g\n", i + static_cast<std::size_t>(base),
                  p.x, p.y, p.z);
    out += buf;
  }
  return out;
}

std::string serialize_ele(const Mesh& m, int base) {
  std::string out = std::to_string(m.elements.size()) + " 4 0\n";
  const auto b = static_cast<std::size_t>(base);
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    const auto& e = m.elements[i];
    out += std::to_string(i + b) + ' ' + std::to_string(e[0] + b) + ' ' + std::to_string(e[1] + b) +
           ' ' + std::to_string(e[2] + b) + ' ' + std::to_string(e[3] + b) + '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

Mesh read_node_ele_files(const std::string& node_path, const std::string& ele_path) {
  return parse_node_ele(read_text_file(node_path), read_text_file(ele_path));
}

Mesh read_json_mesh_file(const std::string& path) { return parse_json_mesh(read_text_file(path)); }

}  // namespace tetmac
