#pragma once

// Piecewise-linear realisation of the surface: the cone over the cube centre
// as initial disk, its images under S^Q in the torus R^n / (4Z)^n, and the
// vertex-incidence embeddedness oracle.
//
// All coordinates are doubled so that every point is an integer: cube
// vertices become odd, cube centres even. The torus is the grid Z_8^n.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubeloop/group.hpp"
#include "cubeloop/jordan.hpp"
#include "cubeloop/reflection.hpp"

namespace cubeloop {

using DoubledPoint = std::vector<int>;

struct ConeDisk {
  int dim = 0;
  DoubledPoint apex;                // the cube centre
  std::vector<DoubledPoint> rim;    // walk vertices in order
  std::size_t triangle_count() const { return rim.size(); }
  // Triangle i is (apex, rim[i], rim[i + 1 mod m]).
  std::array<DoubledPoint, 3> triangle(std::size_t i) const;
};

ConeDisk cone_disk(const JordanPath& path);

// Image of the cone disk under (v, rho), lying in the unit cube centred at v
// with v in {0,1,2,3}^n. Coordinates are not reduced, so each patch sits
// inside the fundamental domain [-1/2, 7/2]^n.
struct Patch {
  QuotientElement element;
  DoubledPoint apex;
  std::vector<DoubledPoint> rim;
};

struct PatchSet {
  int dim = 0;
  std::vector<Patch> patches;  // one per closure element, closure order
  std::size_t triangle_count() const;
};

PatchSet expand_patches(const JordanPath& path, const ClosureSet& closure);

// Deduplicated mesh on the torus: coordinates reduced into [0, 8) (doubled).
struct TorusMesh {
  int dim = 0;
  std::vector<DoubledPoint> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::size_t> patch_of_triangle;
};

TorusMesh build_torus_mesh(const PatchSet& patches);

struct IncidenceVerdict {
  int max_multiplicity = 0;
  bool embedded = false;
  // multiplicity -> number of tessellation vertices of the torus with it;
  // key 0 counts vertices touched by no patch.
  std::map<int, std::uint64_t> histogram;
};

// Counts, for every vertex of the unit-cube tessellation of the torus, the
// patches having it on their boundary. Embedded iff no vertex reaches 8.
IncidenceVerdict vertex_incidence_verdict(const JordanPath& path, const ClosureSet& closure);

enum class MeshFormat { Obj, Json };

std::optional<MeshFormat> parse_mesh_format(std::string_view name);

struct ExportOptions {
  MeshFormat format = MeshFormat::Obj;
  // 1-based axis dropped for OBJ output; n = 4 defaults to axis 4.
  std::optional<int> drop_axis;
  // Set for surfaces known to self-intersect; recorded in the output.
  std::optional<std::string> warning;
};

// OBJ: one `g patch_<k>` group per patch, coordinates in the fundamental
// domain with one decimal. JSON: exact doubled coordinates on the torus.
// Throws BadProjection when OBJ output would not be three-dimensional.
std::string export_mesh(const PatchSet& patches, const ExportOptions& options);

}  // namespace cubeloop
