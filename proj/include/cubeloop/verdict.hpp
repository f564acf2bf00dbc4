#pragma once

// Embeddedness, orientability, Euler characteristic and edge-count bounds
// for the periodic surface generated by a Jordan path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeloop/jordan.hpp"
#include "cubeloop/lattice.hpp"

namespace cubeloop {

// Which brute-force oracles to run next to the lattice criterion. Any
// disagreement throws InvariantViolation.
struct VerifyOptions {
  bool closure = false;
  bool geometric = false;

  bool any() const { return closure || geometric; }
  static VerifyOptions all() { return {true, true}; }
};

struct OracleChecks {
  std::optional<std::uint64_t> closure_order;
  std::optional<bool> closure_embedded;
  std::optional<std::uint64_t> large_cube_fill;  // |L|
  std::optional<bool> large_cubes_equal;
  std::optional<int> max_vertex_multiplicity;
  std::optional<bool> geometric_embedded;
};

struct EmbeddednessVerdict {
  bool embedded = false;
  std::uint64_t lattice_order = 0;
  // |H| * |lattice|; equal to the closure order whenever that is computed.
  std::uint64_t s_q_order = 0;
  std::optional<OracleChecks> checks;
};

// Embedded iff |Lambda^Q cap (2Z_4)^n| is 4 (n even) or 8 (n odd).
EmbeddednessVerdict decide_embedded(const JordanPath& path, const VerifyOptions& verify = {});

struct OrientabilityFlags {
  bool sigma = false;               // the complete surface
  bool quotient_lambda0 = false;    // Sigma^Q / Lambda^0
  bool quotient_two_z = false;      // Sigma / (Lambda cap (2Z)^n)
};

OrientabilityFlags decide_orientable(const JordanPath& path);

struct EulerGenus {
  std::uint64_t filled_cubes = 0;  // in R^n / (Lambda cap (2Z)^n)
  long long euler = 0;
  std::optional<long long> genus;  // only for orientable quotients (even n)
};

// Throws SurfaceNotEmbedded for paths whose surface self-intersects.
EulerGenus euler_genus(const JordanPath& path);

enum class Admissibility { MaybeEmbedded, RuledOut, NotApplicable };

std::string_view to_string(Admissibility a);

enum class BoundKind {
  None,
  SimpleCycle,            // m > 2^n
  EvenDimension,          // n even, m > 4(n - 1)
  OddDimensionHeuristic,  // n odd, m > 8(n - 3) + 18
};

std::string_view to_string(BoundKind k);

struct BoundDiagnostic {
  Admissibility status = Admissibility::MaybeEmbedded;
  BoundKind violated = BoundKind::None;
  int limit = 0;  // the bound that applied (the tightest one checked)
};

BoundDiagnostic edge_bound(int dim, int length);

struct DirectionDiagnostic {
  Admissibility status = Admissibility::NotApplicable;
  int overfull_direction = 0;  // first direction with more than four edges
  // Directions with exactly four edges: every lattice element vanishes there
  // if the surface is embedded.
  std::vector<int> zero_coordinates;
};

DirectionDiagnostic per_direction_bound(const JordanPath& path);

struct ReportOptions {
  VerifyOptions verify;
};

// Built by report(); word, canonical form and lattice have no default state.
struct SurfaceReport {
  int dim = 0;
  DirectionWord word;
  CanonicalWord canonical;
  std::size_t length = 0;
  GapInvariant gaps;

  TwoLattice lattice;  // Lambda^Q cap (2Z_4)^n
  std::uint64_t lambda0_order = 0;
  std::optional<std::vector<int>> exceptional;  // odd n only
  std::uint64_t s_q_order = 0;
  bool embedded = false;
  OrientabilityFlags orientable;
  std::optional<long long> euler;
  std::optional<long long> genus;

  std::vector<PathSymmetry> symmetries;  // nontrivial only
  BoundDiagnostic bounds;
  DirectionDiagnostic direction_bounds;
  std::optional<OracleChecks> checks;
  std::vector<std::string> notes;
};

SurfaceReport report(const JordanPath& path, const ReportOptions& options = {});

}  // namespace cubeloop
