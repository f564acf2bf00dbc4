#include "cubeloop/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>

#include "cubeloop/error.hpp"
#include "cubeloop/reflection.hpp"

namespace cubeloop {

std::vector<int> EvenVector::components() const {
  std::vector<int> out(dim);
  for (int a = 0; a < dim; ++a) out[a] = ((halved >> a) & 1U) ? 2 : 0;
  return out;
}

EvenVector EvenVector::from_components(std::span<const int> v) {
  const int dim = static_cast<int>(v.size());
  check_dim(dim);
  Mask h = 0;
  for (int a = 0; a < dim; ++a) {
    const int r = ((v[a] % 4) + 4) % 4;
    if (r % 2 != 0) throw Error(ErrorCode::BadVector, "odd coordinate " + std::to_string(v[a]));
    if (r == 2) h |= Mask{1} << a;
  }
  return EvenVector{dim, h};
}

// ---------------------------------------------------------------------------

TwoLattice::TwoLattice(int dim) : dim_(dim) { check_dim(dim); }

TwoLattice TwoLattice::span(int dim, std::span<const Mask> halved) {
  TwoLattice l(dim);
  for (Mask v : halved) l.insert(v);
  return l;
}

Mask TwoLattice::reduce(Mask v) const {
  for (Mask row : rows_) {
    const Mask pivot = std::bit_floor(row);
    if (v & pivot) v ^= row;
  }
  return v;
}

bool TwoLattice::insert(Mask halved) {
  if ((halved & ~full_mask(dim_)) != 0) throw Error(ErrorCode::BadVector, "vector exceeds dimension");
  const Mask v = reduce(halved);
  if (v == 0) return false;
  const Mask pivot = std::bit_floor(v);
  for (Mask& row : rows_) {
    if (row & pivot) row ^= v;
  }
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(), std::greater<>());
  return true;
}

bool TwoLattice::contains_halved(Mask halved) const {
  if ((halved & ~full_mask(dim_)) != 0) return false;
  return reduce(halved) == 0;
}

bool TwoLattice::contains(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from lattice dimension");
  }
  return contains(EvenVector::from_components(v));
}

std::vector<Mask> TwoLattice::elements() const {
  std::vector<Mask> out;
  const std::size_t r = rows_.size();
  out.reserve(std::size_t{1} << r);
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << r); ++sel) {
    Mask v = 0;
    for (std::size_t k = 0; k < r; ++k) {
      if ((sel >> k) & 1U) v ^= rows_[k];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> TwoLattice::basis_components() const {
  std::vector<std::vector<int>> out;
  for (Mask row : rows_) {
    std::vector<int> c(dim_);
    for (int a = 0; a < dim_; ++a) c[a] = (row >> a) & 1U;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_edge(const JordanPath& path, std::size_t i) {
  if (i >= path.length()) {
    throw Error(ErrorCode::BadEdgeIndex, "edge " + std::to_string(i) + " out of range");
  }
}

Mask arc_parity(const JordanPath& path, std::size_t from, std::size_t to) {
  const std::size_t m = path.length();
  Mask parity = 0;
  for (std::size_t k = (from + 1) % m; k != to; k = (k + 1) % m) parity ^= axis_bit(path.direction(k));
  return parity;
}

}  // namespace

EvenVector pair_generator(const JordanPath& path, std::size_t i, std::size_t j) {
  check_edge(path, i);
  check_edge(path, j);
  if (i == j) throw Error(ErrorCode::SameEdge, "edges must be distinct");
  const int beta = path.direction(i);
  if (path.direction(j) != beta) {
    throw Error(ErrorCode::NotParallel, "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                            " run in different directions");
  }
  const Mask forward = arc_parity(path, i, j);
  assert(((forward ^ arc_parity(path, j, i)) & ~axis_bit(beta)) == 0);
  return EvenVector{path.dim(), forward & ~axis_bit(beta)};
}

std::vector<std::size_t> base_edges(const JordanPath& path, BaseEdge choice) {
  const int n = path.dim();
  std::vector<std::size_t> base(n + 1, path.length());
  for (std::size_t i = 0; i < path.length(); ++i) {
    auto& b = base[path.direction(i)];
    if (choice == BaseEdge::Last || b == path.length()) b = i;
  }
  return base;
}

TwoLattice lambda0(const JordanPath& path, BaseEdge choice) {
  const auto base = base_edges(path, choice);
  TwoLattice l(path.dim());
  for (std::size_t i = 0; i < path.length(); ++i) {
    const std::size_t b = base[path.direction(i)];
    if (i != b) l.insert(pair_generator(path, i, b));
  }
  return l;
}

QuotientElement exceptional_element(const JordanPath& path, BaseEdge choice) {
  const auto base = base_edges(path, choice);
  const auto gens = generators(path);
  auto acc = QuotientElement::identity(path.dim());
  for (int beta = 1; beta <= path.dim(); ++beta) acc = compose_quotient(acc, gens.quotient[base[beta]]);
  return acc;
}

TwoLattice lambda_q(const JordanPath& path, BaseEdge choice) {
  TwoLattice l = lambda0(path, choice);
  if (path.dim() % 2 == 1) {
    const auto e = exceptional_element(path, choice);
    if (!e.is_even()) throw InvariantViolation("exceptional element has odd translation for odd n");
    l.insert(e.high());
  }
  return l;
}

TwoLattice all_pairs_lattice(const JordanPath& path) {
  TwoLattice l(path.dim());
  const std::size_t m = path.length();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (path.direction(i) == path.direction(j)) l.insert(pair_generator(path, i, j));
    }
  }
  return l;
}

}  // namespace cubeloop
