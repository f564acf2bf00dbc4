#pragma once

// Schwarz reflection generators of a Jordan path and the brute-force
// closure of the quotient group S^Q they generate.

#include <cstdint>
#include <span>
#include <vector>

#include "cubeloop/group.hpp"
#include "cubeloop/jordan.hpp"

namespace cubeloop {

// One generator per edge, in edge order.
struct GeneratorList {
  std::vector<QuotientElement> quotient;
  std::vector<AmbientElement> ambient;

  std::size_t size() const { return quotient.size(); }
};

// Edge i with midpoint q in direction beta yields tau_{2q - 2 q_beta e_beta} o rho^beta.
GeneratorList generators(const JordanPath& path);

// Largest dimension for which closure() allocates its 4^n-bit table.
inline constexpr int kMaxClosureDim = 12;

class ClosureSet {
public:
  int dim() const { return dim_; }
  std::uint64_t order() const { return elements_.size(); }
  // Breadth-first discovery order, identity first.
  std::span<const QuotientElement> elements() const { return elements_; }
  bool contains(const QuotientElement& e) const;

private:
  friend ClosureSet closure(std::span<const QuotientElement>);
  int dim_ = 0;
  std::vector<QuotientElement> elements_;
  std::vector<std::uint64_t> seen_;
};

// Worklist closure under compose_quotient starting from the identity.
ClosureSet closure(std::span<const QuotientElement> gens);
inline ClosureSet closure(const GeneratorList& gens) { return closure(gens.quotient); }

// Filled cubes of the torus and their distribution over the 2^n large cubes
// tau_a([-1/2, 3/2]^n), a in (2Z_4)^n.
struct FilledCubeMap {
  int dim = 0;
  std::vector<std::vector<int>> anchors;  // translational parts, closure order
  // Indexed by a/2 read as a bit mask.
  std::vector<std::uint64_t> large_cube_counts;

  bool counts_equal() const;
  // For odd n, all anchors share one coordinate-sum parity.
  bool single_colour() const;
};

FilledCubeMap filled_cubes(const ClosureSet& closure);

// Generator indices (0-based, at most four) whose ambient composition is
// (+-4 e_beta, id). Throws InvariantViolation when no such word exists.
std::vector<std::size_t> four_translation_witness(const JordanPath& path, int beta);

}  // namespace cubeloop
