#include "cubeloop/geom.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cubeloop/error.hpp"

namespace cubeloop {

std::array<DoubledPoint, 3> ConeDisk::triangle(std::size_t i) const {
  return {apex, rim[i], rim[(i + 1) % rim.size()]};
}

ConeDisk cone_disk(const JordanPath& path) {
  ConeDisk disk;
  disk.dim = path.dim();
  disk.apex.assign(path.dim(), 0);
  for (Vertex v : path.vertices()) disk.rim.push_back(doubled_coordinates(v, path.dim()));
  return disk;
}

std::size_t PatchSet::triangle_count() const {
  std::size_t t = 0;
  for (const auto& p : patches) t += p.rim.size();
  return t;
}

namespace {

DoubledPoint place(const QuotientElement& e, const DoubledPoint& x) {
  DoubledPoint out(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    const int axis = static_cast<int>(a) + 1;
    const int sign = e.rotation().flips(axis) ? -1 : 1;
    out[a] = 2 * e.coordinate(axis) + sign * x[a];
  }
  return out;
}

DoubledPoint reduce_torus(DoubledPoint p) {
  for (int& x : p) x = ((x % 8) + 8) % 8;
  return p;
}

}  // namespace

PatchSet expand_patches(const JordanPath& path, const ClosureSet& closure) {
  if (closure.dim() != path.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "closure and path dimensions differ");
  }
  const ConeDisk disk = cone_disk(path);
  PatchSet out;
  out.dim = path.dim();
  out.patches.reserve(closure.order());
  for (const auto& e : closure.elements()) {
    Patch p{e, place(e, disk.apex), {}};
    p.rim.reserve(disk.rim.size());
    for (const auto& x : disk.rim) p.rim.push_back(place(e, x));
    out.patches.push_back(std::move(p));
  }
  return out;
}

TorusMesh build_torus_mesh(const PatchSet& patches) {
  TorusMesh mesh;
  mesh.dim = patches.dim;
  std::map<DoubledPoint, std::size_t> index;
  auto id = [&](const DoubledPoint& p) {
    auto r = reduce_torus(p);
    auto [it, inserted] = index.try_emplace(r, mesh.vertices.size());
    if (inserted) mesh.vertices.push_back(std::move(r));
    return it->second;
  };
  for (std::size_t k = 0; k < patches.patches.size(); ++k) {
    const auto& p = patches.patches[k];
    const std::size_t apex = id(p.apex);
    const std::size_t m = p.rim.size();
    std::vector<std::size_t> rim(m);
    for (std::size_t i = 0; i < m; ++i) rim[i] = id(p.rim[i]);
    for (std::size_t i = 0; i < m; ++i) {
      mesh.triangles.push_back({apex, rim[i], rim[(i + 1) % m]});
      mesh.patch_of_triangle.push_back(k);
    }
  }
  return mesh;
}

IncidenceVerdict vertex_incidence_verdict(const JordanPath& path, const ClosureSet& closure) {
  const int n = path.dim();
  if (closure.dim() != n) throw Error(ErrorCode::DimensionMismatch, "closure and path dimensions differ");
  // Tessellation vertices have odd doubled coordinates 1,3,5,7: base-4 index.
  const std::uint64_t vertex_count = std::uint64_t{1} << (2 * n);
  std::vector<int> multiplicity(vertex_count, 0);
  const ConeDisk disk = cone_disk(path);
  for (const auto& e : closure.elements()) {
    for (const auto& x : disk.rim) {
      const auto p = reduce_torus(place(e, x));
      std::uint64_t key = 0;
      for (int a = n - 1; a >= 0; --a) key = key * 4 + static_cast<std::uint64_t>(p[a] / 2);
      ++multiplicity[key];
    }
  }
  IncidenceVerdict out;
  for (int c : multiplicity) {
    ++out.histogram[c];
    out.max_multiplicity = std::max(out.max_multiplicity, c);
  }
  out.embedded = out.max_multiplicity < 8;
  return out;
}

std::optional<MeshFormat> parse_mesh_format(std::string_view name) {
  if (name == "obj") return MeshFormat::Obj;
  if (name == "json") return MeshFormat::Json;
  return std::nullopt;
}

namespace {

std::string obj_coordinate(int doubled) {
  // Doubled coordinates are integers; halving leaves .0 or .5.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", doubled / 2.0);
  return buf;
}

std::string export_obj(const PatchSet& patches, const ExportOptions& options) {
  const int n = patches.dim;
  std::optional<int> drop = options.drop_axis;
  if (!drop && n == 4) drop = 4;
  if (drop && (*drop < 1 || *drop > n)) {
    throw Error(ErrorCode::BadProjection, "axis " + std::to_string(*drop) + " out of range");
  }
  const int effective = n - (drop ? 1 : 0);
  if (effective != 3) {
    throw Error(ErrorCode::BadProjection,
                "OBJ needs 3 coordinates, dimension " + std::to_string(n) +
                    (drop ? " minus one dropped axis" : "") + " gives " + std::to_string(effective));
  }

  std::ostringstream os;
  os << "# periodic surface patches, dimension " << n;
  if (drop) os << ", axis " << *drop << " dropped";
  os << '\n';
  if (options.warning) os << "# warning: " << *options.warning << '\n';

  std::map<DoubledPoint, std::size_t> index;
  std::size_t next = 1;
  auto emit = [&](const DoubledPoint& p) {
    DoubledPoint q;
    for (int a = 0; a < n; ++a) {
      if (!drop || a + 1 != *drop) q.push_back(p[a]);
    }
    auto [it, inserted] = index.try_emplace(q, next);
    if (inserted) {
      os << "v " << obj_coordinate(q[0]) << ' ' << obj_coordinate(q[1]) << ' ' << obj_coordinate(q[2]) << '\n';
      ++next;
    }
    return it->second;
  };

  for (std::size_t k = 0; k < patches.patches.size(); ++k) {
    const auto& p = patches.patches[k];
    os << "g patch_" << k << '\n';
    const std::size_t apex = emit(p.apex);
    std::vector<std::size_t> rim;
    for (const auto& x : p.rim) rim.push_back(emit(x));
    for (std::size_t i = 0; i < rim.size(); ++i) {
      os << "f " << apex << ' ' << rim[i] << ' ' << rim[(i + 1) % rim.size()] << '\n';
    }
  }
  return os.str();
}

std::string export_json(const PatchSet& patches, const ExportOptions& options) {
  if (options.drop_axis) {
    throw Error(ErrorCode::BadProjection, "JSON meshes keep every coordinate");
  }
  const TorusMesh mesh = build_torus_mesh(patches);
  nlohmann::json j;
  j["dim"] = mesh.dim;
  j["coordinate_scale"] = 2;
  j["torus_period"] = 8;
  j["vertices"] = mesh.vertices;
  j["triangles"] = mesh.triangles;
  j["patch_of_triangle"] = mesh.patch_of_triangle;
  j["warning"] = options.warning ? nlohmann::json(*options.warning) : nlohmann::json(nullptr);
  return j.dump() + "\n";
}

}  // namespace

std::string export_mesh(const PatchSet& patches, const ExportOptions& options) {
  switch (options.format) {
    case MeshFormat::Obj: return export_obj(patches, options);
    case MeshFormat::Json: return export_json(patches, options);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown mesh format");
}

}  // namespace cubeloop
