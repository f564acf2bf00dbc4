#pragma once

// Arithmetic in G = Z^n x| H (sign changes composed with integer translations)
// and in its quotient U^Q modulo (4Z)^n.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cubeloop {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 16;

// One bit per coordinate; bit (a-1) belongs to coordinate a.
using Mask = std::uint32_t;

// Throws DimensionOutOfRange unless kMinDim <= dim <= kMaxDim.
void check_dim(int dim);

inline Mask full_mask(int dim) { return dim >= 32 ? ~Mask{0} : (Mask{1} << dim) - 1; }
inline Mask axis_bit(int axis) { return Mask{1} << (axis - 1); }

// Coordinatewise sign change x -> (-1)^rho x. Composition is addition in Z_2^n.
class Rotation {
public:
  Rotation() = default;
  Rotation(int dim, Mask bits);

  static Rotation identity(int dim) { return Rotation(dim, 0); }
  // The half-turn about the x_axis line: every coordinate but `axis` flips.
  static Rotation half_turn(int dim, int axis);
  static Rotation from_components(std::span<const int> bits);

  int dim() const { return dim_; }
  Mask bits() const { return bits_; }
  bool flips(int axis) const { return (bits_ >> (axis - 1)) & 1U; }
  int weight() const;
  bool is_identity() const { return bits_ == 0; }

  // Membership in H: all of Z_2^n for even n, the even-weight vectors for odd n.
  bool in_h() const;

  std::vector<int> components() const;

  Rotation operator+(const Rotation& other) const;
  friend bool operator==(const Rotation&, const Rotation&) = default;
  friend auto operator<=>(const Rotation&, const Rotation&) = default;

private:
  int dim_ = 0;
  Mask bits_ = 0;
};

// Element (v, rho) of G with v in Z^n.
struct AmbientElement {
  std::vector<long long> translation;
  Rotation rotation;

  static AmbientElement identity(int dim);

  int dim() const { return rotation.dim(); }
  // v mod 2 == rho and rho in H.
  bool in_u() const;

  friend bool operator==(const AmbientElement&, const AmbientElement&) = default;
};

// (a.v + (-1)^{a.rho} b.v, a.rho + b.rho).
AmbientElement compose_ambient(const AmbientElement& a, const AmbientElement& b);

// Element (v, v mod 2) of U^Q, v in Z_4^n. Packed as two bit planes:
// low = v mod 2 (which is also the rotational part), high = floor(v / 2).
class QuotientElement {
public:
  QuotientElement() = default;

  static QuotientElement identity(int dim);
  // Reduces every entry mod 4 (negative entries allowed). Throws NotInU when
  // the parity vector is outside H.
  static QuotientElement from_translation(std::span<const int> v);
  static QuotientElement from_planes(int dim, Mask low, Mask high);
  static QuotientElement from_packed(int dim, std::uint64_t packed);

  int dim() const { return dim_; }
  Mask low() const { return low_; }
  Mask high() const { return high_; }
  Rotation rotation() const { return Rotation(dim_, low_); }
  std::vector<int> translation() const;
  int coordinate(int axis) const;

  bool is_identity() const { return low_ == 0 && high_ == 0; }
  // Translational part lies in (2Z_4)^n, i.e. rotational part is trivial.
  bool is_even() const { return low_ == 0; }

  // Index into a table of size 4^n.
  std::uint64_t packed() const {
    return std::uint64_t{low_} | (std::uint64_t{high_} << dim_);
  }

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
  friend std::strong_ordering operator<=>(const QuotientElement& a, const QuotientElement& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.packed() <=> b.packed();
  }

private:
  QuotientElement(int dim, Mask low, Mask high) : dim_(dim), low_(low), high_(high) {}

  int dim_ = 0;
  Mask low_ = 0;
  Mask high_ = 0;
};

QuotientElement compose_quotient(const QuotientElement& a, const QuotientElement& b);

// Reduction U -> U^Q. Throws NotInU for elements outside U.
QuotientElement project(const AmbientElement& a);

// |H|: 2^n for even n, 2^(n-1) for odd n.
std::uint64_t h_order(int dim);

// |U^Q|: 2^(2n) for even n, 2^(2n-1) for odd n.
std::uint64_t u_quotient_order(int dim);

// Schwarz reflection generators of every edge of the cube, n * 2^(n-1) of them.
std::vector<QuotientElement> cube_edge_generators(int dim);

std::string to_string(const Rotation& r);
std::string to_string(const QuotientElement& e);

}  // namespace cubeloop
