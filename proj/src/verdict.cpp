#include "cubeloop/verdict.hpp"

#include <algorithm>

#include "cubeloop/error.hpp"
#include "cubeloop/geom.hpp"
#include "cubeloop/reflection.hpp"

namespace cubeloop {

namespace {

std::uint64_t embedded_lattice_order(int n) { return n % 2 == 0 ? 4 : 8; }

std::uint64_t embedded_s_q_order(int n) { return std::uint64_t{1} << (n + 2); }

void require(bool condition, const std::string& what, const JordanPath& path) {
  if (!condition) throw InvariantViolation(what + " for " + path.word().to_string());
}

OracleChecks run_oracles(const JordanPath& path, const TwoLattice& lattice, std::uint64_t s_q_order,
                         bool embedded, const VerifyOptions& verify) {
  const int n = path.dim();
  OracleChecks checks;
  const ClosureSet group = closure(generators(path));

  if (verify.closure) {
    const std::uint64_t order = group.order();
    checks.closure_order = order;
    checks.closure_embedded = order == embedded_s_q_order(n);
    require(order == s_q_order, "closure order differs from |H| * |lattice|", path);
    require(*checks.closure_embedded == embedded, "closure verdict differs from lattice verdict", path);
    require(order == embedded_s_q_order(n) || order >= 2 * embedded_s_q_order(n),
            "closure order strictly between 2^(n+2) and 2^(n+3)", path);
    require(order <= u_quotient_order(n), "closure exceeds U^Q", path);

    const FilledCubeMap cubes = filled_cubes(group);
    checks.large_cubes_equal = cubes.counts_equal();
    checks.large_cube_fill = cubes.large_cube_counts.front();
    // The equal-fill property needs (+1/2,...,+1/2) on the path.
    if (path.base() == 0) {
      require(*checks.large_cubes_equal, "large cubes hold different numbers of filled cubes", path);
      require(order == (std::uint64_t{1} << n) * *checks.large_cube_fill, "|S^Q| != 2^n |L|", path);
    }

    for (Mask w : lattice.elements()) {
      require(group.contains(QuotientElement::from_planes(n, 0, w)),
              "lattice element missing from the closure", path);
    }
  }

  if (verify.geometric) {
    const IncidenceVerdict incidence = vertex_incidence_verdict(path, group);
    checks.max_vertex_multiplicity = incidence.max_multiplicity;
    checks.geometric_embedded = incidence.embedded;
    require(incidence.embedded == embedded, "vertex incidence verdict differs from lattice verdict", path);
    for (const auto& [mult, count] : incidence.histogram) {
      require(mult % 4 == 0, "vertex multiplicity not a multiple of four", path);
    }
  }
  return checks;
}

}  // namespace

EmbeddednessVerdict decide_embedded(const JordanPath& path, const VerifyOptions& verify) {
  const int n = path.dim();
  const TwoLattice lattice = lambda_q(path);
  EmbeddednessVerdict v;
  v.lattice_order = lattice.order();
  v.s_q_order = h_order(n) * v.lattice_order;
  v.embedded = v.lattice_order == embedded_lattice_order(n);
  if (verify.any()) v.checks = run_oracles(path, lattice, v.s_q_order, v.embedded, verify);
  return v;
}

OrientabilityFlags decide_orientable(const JordanPath& path) {
  if (path.dim() % 2 == 0) return {true, true, true};
  const TwoLattice l0 = lambda0(path);
  const QuotientElement e = exceptional_element(path);
  const bool orientable = !l0.contains_halved(e.high());
  return {orientable, orientable, false};
}

EulerGenus euler_genus(const JordanPath& path) {
  const int n = path.dim();
  const TwoLattice lattice = lambda_q(path);
  if (lattice.order() != embedded_lattice_order(n)) {
    throw Error(ErrorCode::SurfaceNotEmbedded,
                "Euler characteristic needs four patches at every vertex; " + path.word().to_string() +
                    " self-intersects");
  }
  EulerGenus out;
  const std::uint64_t s_q_order = h_order(n) * lattice.order();
  out.filled_cubes = s_q_order / lattice.order();
  // V - E + F per patch: m/4 vertices, m/2 edges, one face.
  const long long m = static_cast<long long>(path.length());
  const long long cubes = static_cast<long long>(out.filled_cubes);
  out.euler = cubes * (4 - m) / 4;
  if (n % 2 == 0) out.genus = 1 - out.euler / 2;
  return out;
}

std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::MaybeEmbedded: return "maybe_embedded";
    case Admissibility::RuledOut: return "ruled_out";
    case Admissibility::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::None: return "none";
    case BoundKind::SimpleCycle: return "simple_cycle";
    case BoundKind::EvenDimension: return "even_dimension";
    case BoundKind::OddDimensionHeuristic: return "odd_dimension_heuristic";
  }
  return "none";
}

BoundDiagnostic edge_bound(int dim, int length) {
  check_dim(dim);
  if (length < 2 * dim || length % 2 != 0) {
    throw Error(ErrorCode::BadParameters, "length must be even and at least 2n");
  }
  const long long cycle_limit = dim >= 62 ? (1LL << 62) : (1LL << dim);
  const int surface_limit = dim % 2 == 0 ? 4 * (dim - 1) : 8 * (dim - 3) + 18;
  const BoundKind surface_kind = dim % 2 == 0 ? BoundKind::EvenDimension : BoundKind::OddDimensionHeuristic;

  BoundDiagnostic d;
  if (length > cycle_limit) {
    d.status = Admissibility::RuledOut;
    d.violated = BoundKind::SimpleCycle;
    d.limit = static_cast<int>(cycle_limit);
  } else if (length > surface_limit) {
    d.status = Admissibility::RuledOut;
    d.violated = surface_kind;
    d.limit = surface_limit;
  } else {
    d.limit = static_cast<int>(std::min<long long>(cycle_limit, surface_limit));
  }
  return d;
}

DirectionDiagnostic per_direction_bound(const JordanPath& path) {
  DirectionDiagnostic d;
  if (path.dim() % 2 != 0) return d;
  d.status = Admissibility::MaybeEmbedded;
  const auto counts = path.word().counts();
  for (int beta = 1; beta <= path.dim(); ++beta) {
    if (counts[beta] > 4 && d.overfull_direction == 0) {
      d.status = Admissibility::RuledOut;
      d.overfull_direction = beta;
    }
    if (counts[beta] == 4) d.zero_coordinates.push_back(beta);
  }
  return d;
}

SurfaceReport report(const JordanPath& path, const ReportOptions& options) {
  const int n = path.dim();
  const EmbeddednessVerdict verdict = decide_embedded(path, options.verify);
  const TwoLattice l0 = lambda0(path);

  std::optional<std::vector<int>> exceptional;
  if (n % 2 == 1) exceptional = exceptional_element(path).translation();
  std::optional<long long> euler, genus;
  if (verdict.embedded) {
    const EulerGenus eg = euler_genus(path);
    euler = eg.euler;
    genus = eg.genus;
  }
  std::vector<PathSymmetry> symmetries;
  for (const auto& s : path_symmetries(path)) {
    if (!s.sigma.is_identity()) symmetries.push_back(s);
  }

  SurfaceReport r{
      .dim = n,
      .word = path.word(),
      .canonical = canonicalize(path.word()),
      .length = path.length(),
      .gaps = gap_invariant(path.word()),
      .lattice = lambda_q(path),
      .lambda0_order = l0.order(),
      .exceptional = std::move(exceptional),
      .s_q_order = verdict.s_q_order,
      .embedded = verdict.embedded,
      .orientable = decide_orientable(path),
      .euler = euler,
      .genus = genus,
      .symmetries = std::move(symmetries),
      .bounds = edge_bound(n, static_cast<int>(path.length())),
      .direction_bounds = per_direction_bound(path),
      .checks = verdict.checks,
      .notes = {},
  };

  if (path.base() == 0) r.notes.push_back("base vertex normalised to (+1/2,...,+1/2)");
  r.notes.push_back("lattice is the part determined by the path; an initial surface with extra "
                    "symmetries in H can add translations outside (2Z_4)^n");
  if (r.embedded && n % 2 == 0 &&
      std::any_of(r.symmetries.begin(), r.symmetries.end(), [](const PathSymmetry& s) {
        return s.orientation == SymmetryOrientation::Preserving;
      })) {
    r.notes.push_back("path has an orientation-preserving symmetry: if the initial surface shares "
                      "it, the genus over the full orientation-preserving lattice is smaller");
  }
  if (r.bounds.violated == BoundKind::OddDimensionHeuristic) {
    r.notes.push_back("odd-dimension edge bound is a heuristic");
  }
  return r;
}

}  // namespace cubeloop
