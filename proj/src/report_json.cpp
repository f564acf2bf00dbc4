#include "cubeloop/report_json.hpp"

#include <sstream>

namespace cubeloop {

namespace {

using nlohmann::json;

template <class T>
json nullable(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json family_json(const std::optional<FamilySpec>& f) {
  if (!f) return nullptr;
  json j{{"name", to_string(f->family)}, {"dim", f->dim}};
  if (f->family == Family::GammaB || f->family == Family::GammaC) j["alpha"] = f->alpha;
  if (f->family != Family::DSeries && f->family != Family::Sharp) j["beta"] = f->beta;
  return j;
}

json checks_json(const std::optional<OracleChecks>& c) {
  if (!c) return nullptr;
  return {
      {"closure_order", nullable(c->closure_order)},
      {"closure_embedded", nullable(c->closure_embedded)},
      {"large_cube_fill", nullable(c->large_cube_fill)},
      {"large_cubes_equal", nullable(c->large_cubes_equal)},
      {"max_vertex_multiplicity", nullable(c->max_vertex_multiplicity)},
      {"geometric_embedded", nullable(c->geometric_embedded)},
  };
}

std::string vec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

json report_json(const SurfaceReport& r, const std::optional<FamilySpec>& family) {
  json j;
  j["schema"] = kReportSchema;
  j["dim"] = r.dim;
  j["word"] = r.word.spaced();
  j["canonical"] = r.canonical.word().spaced();
  if (r.dim <= 9) {
    j["word_compact"] = r.word.compact();
    j["canonical_compact"] = r.canonical.word().compact();
  }
  j["m"] = r.length;
  j["embedded"] = r.embedded;
  j["s_q_order"] = r.s_q_order;
  j["lattice_basis"] = r.lattice.basis_components();
  j["lattice_order"] = r.lattice.order();
  j["lambda0_order"] = r.lambda0_order;
  j["exceptional"] = nullable(r.exceptional);
  j["orientable_sigma"] = r.orientable.sigma;
  j["orientable_quotient_lambda0"] = r.orientable.quotient_lambda0;
  j["orientable_quotient_2z"] = r.orientable.quotient_two_z;
  j["euler_char"] = nullable(r.euler);
  j["genus"] = nullable(r.genus);

  json syms = json::array();
  for (const auto& s : r.symmetries) {
    syms.push_back({{"sigma", s.sigma.components()}, {"orientation", to_string(s.orientation)}});
  }
  j["symmetries"] = syms;
  j["gaps"] = r.gaps.gaps;
  j["bounds"] = {
      {"status", to_string(r.bounds.status)},
      {"violated", to_string(r.bounds.violated)},
      {"limit", r.bounds.limit},
      {"per_direction", to_string(r.direction_bounds.status)},
      {"overfull_direction", r.direction_bounds.overfull_direction == 0
                                 ? json(nullptr)
                                 : json(r.direction_bounds.overfull_direction)},
      {"zero_coordinates", r.direction_bounds.zero_coordinates},
  };
  j["family"] = family_json(family);
  j["oracle_checks"] = checks_json(r.checks);
  j["notes"] = r.notes;
  return j;
}

std::string render_text(const SurfaceReport& r, const std::optional<FamilySpec>& family) {
  std::ostringstream os;
  if (family) {
    os << "family      " << to_string(family->family) << " n=" << family->dim;
    if (family->family == Family::GammaB || family->family == Family::GammaC) os << " alpha=" << family->alpha;
    if (family->family != Family::DSeries && family->family != Family::Sharp) os << " beta=" << family->beta;
    os << '\n';
  }
  os << "word        " << r.word.spaced() << '\n';
  os << "canonical   " << r.canonical.word().spaced();
  if (r.dim <= 9) os << "  (" << r.canonical.word().compact() << ')';
  os << '\n';
  os << "n, m        " << r.dim << ", " << r.length << '\n';
  os << "embedded    " << (r.embedded ? "yes" : "no") << '\n';
  os << "|S^Q|       " << r.s_q_order << '\n';
  os << "lattice     order " << r.lattice.order() << ", basis";
  if (r.lattice.rank() == 0) os << " (none)";
  for (const auto& row : r.lattice.basis_components()) {
    std::vector<int> twice(row);
    for (int& x : twice) x *= 2;
    os << ' ' << vec(twice);
  }
  os << '\n';
  os << "|Lambda^0|  " << r.lambda0_order << '\n';
  if (r.exceptional) os << "exceptional " << vec(*r.exceptional) << '\n';
  os << "orientable  sigma=" << (r.orientable.sigma ? "yes" : "no")
     << " quotient/Lambda0=" << (r.orientable.quotient_lambda0 ? "yes" : "no")
     << " quotient/2Z=" << (r.orientable.quotient_two_z ? "yes" : "no") << '\n';
  if (r.euler) os << "euler       " << *r.euler << '\n';
  if (r.genus) os << "genus       " << *r.genus << '\n';
  if (!r.symmetries.empty()) {
    os << "symmetries ";
    for (const auto& s : r.symmetries) os << ' ' << vec(s.sigma.components()) << ' ' << to_string(s.orientation);
    os << '\n';
  }
  os << "edge bound  " << to_string(r.bounds.status);
  if (r.bounds.violated != BoundKind::None) os << " (" << to_string(r.bounds.violated) << ", limit " << r.bounds.limit << ')';
  os << '\n';
  if (r.direction_bounds.status != Admissibility::NotApplicable) {
    os << "directions  " << to_string(r.direction_bounds.status);
    if (r.direction_bounds.overfull_direction != 0) os << " (direction " << r.direction_bounds.overfull_direction << ')';
    os << '\n';
  }
  if (r.checks) {
    const auto& c = *r.checks;
    if (c.closure_order) {
      os << "oracle      closure |S^Q|=" << *c.closure_order << " |L|=" << *c.large_cube_fill
         << " large cubes equal=" << (*c.large_cubes_equal ? "yes" : "no") << '\n';
    }
    if (c.max_vertex_multiplicity) {
      os << "oracle      max vertex multiplicity " << *c.max_vertex_multiplicity << '\n';
    }
  }
  for (const auto& note : r.notes) os << "note        " << note << '\n';
  return os.str();
}

}  // namespace cubeloop
