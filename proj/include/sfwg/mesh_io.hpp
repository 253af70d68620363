#ifndef SFWG_MESH_IO_HPP
#define SFWG_MESH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sfwg/mesh.hpp"

namespace sfwg {

/// Parse failure; message carries the 1-based line number and the section.
struct MeshParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain-text mesh format with sections VERTICES / EDGES / ELEMENTS and
/// full-precision decimal coordinates: read(write(m)) is bit-identical.
void write_mesh(const Mesh& mesh, std::ostream& os);
void write_mesh(const Mesh& mesh, const std::string& path);

Mesh read_mesh(std::istream& is);
Mesh read_mesh(const std::string& path);

}  // namespace sfwg

#endif
