#pragma once

// Even translation lattices in (2Z_4)^n, stored halved as subspaces of GF(2)^n.

#include <cstdint>
#include <span>
#include <vector>

#include "cubeloop/group.hpp"
#include "cubeloop/jordan.hpp"

namespace cubeloop {

// Element 2w of (2Z_4)^n, stored as w in GF(2)^n.
struct EvenVector {
  int dim = 0;
  Mask halved = 0;

  // Components in {0, 2}.
  std::vector<int> components() const;
  static EvenVector from_components(std::span<const int> v);  // throws BadVector

  friend bool operator==(const EvenVector&, const EvenVector&) = default;
};

// Subgroup of (2Z_4)^n. The basis is kept in reduced row echelon form, so two
// lattices compare equal exactly when they are the same subgroup.
class TwoLattice {
public:
  explicit TwoLattice(int dim);
  static TwoLattice span(int dim, std::span<const Mask> halved);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::uint64_t order() const { return std::uint64_t{1} << rows_.size(); }
  // Rows sorted by descending pivot bit.
  std::span<const Mask> basis() const { return rows_; }

  // Returns true when the rank grew.
  bool insert(Mask halved);
  bool insert(const EvenVector& v) { return insert(v.halved); }

  bool contains_halved(Mask halved) const;
  bool contains(const EvenVector& v) const { return v.dim == dim_ && contains_halved(v.halved); }
  // Takes a Z_4 vector; throws BadVector on odd entries.
  bool contains(std::span<const int> v) const;

  std::vector<Mask> elements() const;
  std::vector<std::vector<int>> basis_components() const;  // rows as 0/1 vectors

  friend bool operator==(const TwoLattice&, const TwoLattice&) = default;

private:
  Mask reduce(Mask v) const;

  int dim_;
  std::vector<Mask> rows_;
};

// T(s_i o s_j) for two distinct parallel edges (0-based indices): coordinate
// delta is 2 iff the forward arc strictly between them holds an odd number
// of delta-edges; the edge direction itself is 0.
EvenVector pair_generator(const JordanPath& path, std::size_t i, std::size_t j);

// Which parallel edge serves as the fixed generator s_beta^0.
enum class BaseEdge { First, Last };

std::vector<std::size_t> base_edges(const JordanPath& path, BaseEdge choice = BaseEdge::First);

// Lambda^0: generated by pair_generator(i, base edge of direction(i)).
TwoLattice lambda0(const JordanPath& path, BaseEdge choice = BaseEdge::First);

// s_1^0 o ... o s_n^0. Lies in (2Z_4)^n exactly when n is odd.
QuotientElement exceptional_element(const JordanPath& path, BaseEdge choice = BaseEdge::First);

// Lambda^Q intersected with (2Z_4)^n: Lambda^0, joined with the exceptional
// element when n is odd.
TwoLattice lambda_q(const JordanPath& path, BaseEdge choice = BaseEdge::First);

// Span of pair_generator over every parallel pair.
TwoLattice all_pairs_lattice(const JordanPath& path);

}  // namespace cubeloop
