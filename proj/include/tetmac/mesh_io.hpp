#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tetmac/geometry.hpp"

namespace tetmac {

/// Vertex coordinates plus tetrahedra as 0-based vertex indices.
struct Mesh {
  std::vector<Point3> vertices;
  std::vector<std::array<std::size_t, 4>> elements;

  friend bool operator==(const Mesh&, const Mesh&) = default;
};

/// Checks index ranges (IndexError) and repeated vertices within an element (ParseError).
void validate(const Mesh& m);

Tetrahedron element(const Mesh& m, std::size_t e);

/// TetGen-style .node/.ele text. Attributes and boundary markers are read and
/// dropped; '#' starts a comment. The index base is 0 if the node file starts
/// at 0 or any element references vertex 0, otherwise 1.
Mesh parse_node_ele(std::string_view node_text, std::string_view ele_text);

/// {"vertices": [[x,y,z], ...], "tets": [[i,j,k,l], ...]} with 0-based indices.
Mesh parse_json_mesh(std::string_view text);

std::string serialize_json_mesh(const Mesh& m);
std::string serialize_node(const Mesh& m, int base = 1);
std::string serialize_ele(const Mesh& m, int base = 1);

std::string read_text_file(const std::string& path);  // IoError on failure
Mesh read_node_ele_files(const std::string& node_path, const std::string& ele_path);
Mesh read_json_mesh_file(const std::string& path);

}  // namespace tetmac
