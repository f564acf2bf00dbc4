#include "cubeloop/reflection.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>

#include "cubeloop/error.hpp"

namespace cubeloop {

GeneratorList generators(const JordanPath& path) {
  const int n = path.dim();
  const auto verts = path.vertices();
  GeneratorList out;
  out.quotient.reserve(verts.size());
  out.ambient.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const int beta = path.direction(i);
    const Mask others = full_mask(n) & ~axis_bit(beta);
    // 2q has entries +-1 off the edge axis and 0 on it; -1 is 3 mod 4.
    const Mask negative = verts[i] & others;
    out.quotient.push_back(QuotientElement::from_planes(n, others, negative));

    AmbientElement g{std::vector<long long>(n, 0), Rotation::half_turn(n, beta)};
    for (int a = 1; a <= n; ++a) {
      if (a == beta) continue;
      g.translation[a - 1] = (negative & axis_bit(a)) ? -1 : 1;
    }
    out.ambient.push_back(std::move(g));
  }
  return out;
}

bool ClosureSet::contains(const QuotientElement& e) const {
  if (e.dim() != dim_) return false;
  const std::uint64_t k = e.packed();
  return (seen_[k >> 6] >> (k & 63)) & 1U;
}

ClosureSet closure(std::span<const QuotientElement> gens) {
  if (gens.empty()) throw Error(ErrorCode::BadParameters, "closure of an empty generator list");
  const int n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw Error(ErrorCode::DimensionMismatch, "generators of mixed dimension");
  }
  if (n > kMaxClosureDim) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "closure table limited to n <= " + std::to_string(kMaxClosureDim));
  }
  ClosureSet out;
  out.dim_ = n;
  const std::uint64_t table = std::uint64_t{1} << (2 * n);
  out.seen_.assign(std::max<std::uint64_t>(1, table / 64), 0);

  auto mark = [&](const QuotientElement& e) {
    const std::uint64_t k = e.packed();
    std::uint64_t& word = out.seen_[k >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  };

  const auto id = QuotientElement::identity(n);
  mark(id);
  out.elements_.push_back(id);
  for (std::size_t head = 0; head < out.elements_.size(); ++head) {
    const QuotientElement x = out.elements_[head];
    for (const auto& g : gens) {
      const auto y = compose_quotient(x, g);
      if (mark(y)) out.elements_.push_back(y);
    }
  }
  return out;
}

bool FilledCubeMap::counts_equal() const {
  return std::adjacent_find(large_cube_counts.begin(), large_cube_counts.end(),
                            std::not_equal_to<>()) == large_cube_counts.end();
}

bool FilledCubeMap::single_colour() const {
  if (anchors.empty()) return true;
  auto parity = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s % 2;
  };
  const int p = parity(anchors.front());
  return std::all_of(anchors.begin(), anchors.end(),
                     [&](const std::vector<int>& v) { return parity(v) == p; });
}

FilledCubeMap filled_cubes(const ClosureSet& closure) {
  FilledCubeMap out;
  out.dim = closure.dim();
  out.large_cube_counts.assign(std::size_t{1} << out.dim, 0);
  for (const auto& e : closure.elements()) {
    out.anchors.push_back(e.translation());
    // v - a in {0,1}^n with a even forces a_beta = 2 exactly when v_beta >= 2.
    ++out.large_cube_counts[e.high()];
  }
  return out;
}

namespace {

// Fixed-size ambient element for the witness search hot loop.
struct Affine {
  std::array<long long, kMaxDim> t{};
  Mask rho = 0;
};

Affine compose(const Affine& a, const Affine& b, int n) {
  Affine out;
  out.rho = a.rho ^ b.rho;
  for (int k = 0; k < n; ++k) out.t[k] = a.t[k] + (((a.rho >> k) & 1U) ? -b.t[k] : b.t[k]);
  return out;
}

bool is_four_translation(const Affine& e, int n, int beta) {
  if (e.rho != 0) return false;
  for (int a = 1; a <= n; ++a) {
    const long long t = e.t[a - 1];
    if (a == beta ? std::llabs(t) != 4 : t != 0) return false;
  }
  return true;
}

bool search(std::span<const Affine> gens, int n, int beta, const Affine& acc, std::size_t depth,
            std::vector<std::size_t>& word) {
  if (depth == word.size()) return is_four_translation(acc, n, beta);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    word[depth] = g;
    if (search(gens, n, beta, compose(acc, gens[g], n), depth + 1, word)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> four_translation_witness(const JordanPath& path, int beta) {
  const int n = path.dim();
  if (beta < 1 || beta > n) {
    throw Error(ErrorCode::BadLabel, "direction " + std::to_string(beta) + " out of range");
  }
  const auto list = generators(path);
  std::vector<Affine> gens(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    gens[i].rho = list.ambient[i].rotation.bits();
    std::copy(list.ambient[i].translation.begin(), list.ambient[i].translation.end(), gens[i].t.begin());
  }
  const Affine id;

  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::size_t> word(len);
    if (search(gens, n, beta, id, 0, word)) return word;
  }
  // Words s_a s_b s_a s_b first, then every other word of length four.
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Affine ab = compose(gens[a], gens[b], n);
      if (is_four_translation(compose(ab, ab, n), n, beta)) return {a, b, a, b};
    }
  }
  std::vector<std::size_t> word(4);
  if (search(gens, n, beta, id, 0, word)) return word;
  throw InvariantViolation("no generator word of length <= 4 composes to 4e_" + std::to_string(beta) +
                           " for " + path.word().to_string());
}

}  // namespace cubeloop
