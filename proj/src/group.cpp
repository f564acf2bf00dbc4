#include "cubeloop/group.hpp"

#include <bit>
#include <sstream>

#include "cubeloop/error.hpp"

namespace cubeloop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::NotInU: return "NotInU";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::BadWord: return "BadWord";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::MissingDirection: return "MissingDirection";
    case ErrorCode::BadEdgeIndex: return "BadEdgeIndex";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::SameEdge: return "SameEdge";
    case ErrorCode::BadVector: return "BadVector";
    case ErrorCode::SurfaceNotEmbedded: return "SurfaceNotEmbedded";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadQuery: return "BadQuery";
    case ErrorCode::BadProjection: return "BadProjection";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

void check_dim(int dim) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "dimension " + std::to_string(dim) + " outside [" + std::to_string(kMinDim) +
                    ", " + std::to_string(kMaxDim) + "]");
  }
}

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "operands of dimension " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Rotation

Rotation::Rotation(int dim, Mask bits) : dim_(dim), bits_(bits) {
  check_dim(dim);
  if ((bits & ~full_mask(dim)) != 0) {
    throw Error(ErrorCode::BadVector, "rotation bits exceed dimension");
  }
}

Rotation Rotation::half_turn(int dim, int axis) {
  check_dim(dim);
  if (axis < 1 || axis > dim) {
    throw Error(ErrorCode::BadLabel, "axis " + std::to_string(axis) + " out of range");
  }
  return Rotation(dim, full_mask(dim) & ~axis_bit(axis));
}

Rotation Rotation::from_components(std::span<const int> bits) {
  const int dim = static_cast<int>(bits.size());
  check_dim(dim);
  Mask m = 0;
  for (int a = 0; a < dim; ++a) {
    if (bits[a] != 0 && bits[a] != 1) {
      throw Error(ErrorCode::BadVector, "rotation component must be 0 or 1");
    }
    if (bits[a]) m |= Mask{1} << a;
  }
  return Rotation(dim, m);
}

int Rotation::weight() const { return std::popcount(bits_); }

bool Rotation::in_h() const { return dim_ % 2 == 0 || weight() % 2 == 0; }

std::vector<int> Rotation::components() const {
  std::vector<int> out(dim_);
  for (int a = 0; a < dim_; ++a) out[a] = (bits_ >> a) & 1U;
  return out;
}

Rotation Rotation::operator+(const Rotation& other) const {
  require_same_dim(dim_, other.dim_);
  return Rotation(dim_, bits_ ^ other.bits_);
}

// ---------------------------------------------------------------------------
// Ambient group

AmbientElement AmbientElement::identity(int dim) {
  return AmbientElement{std::vector<long long>(dim, 0), Rotation::identity(dim)};
}

bool AmbientElement::in_u() const {
  if (static_cast<int>(translation.size()) != dim()) return false;
  for (int a = 0; a < dim(); ++a) {
    const bool odd = (translation[a] % 2) != 0;
    if (odd != rotation.flips(a + 1)) return false;
  }
  return rotation.in_h();
}

AmbientElement compose_ambient(const AmbientElement& a, const AmbientElement& b) {
  require_same_dim(a.dim(), b.dim());
  require_same_dim(static_cast<int>(a.translation.size()), static_cast<int>(b.translation.size()));
  AmbientElement out{a.translation, a.rotation + b.rotation};
  for (int k = 0; k < a.dim(); ++k) {
    out.translation[k] += a.rotation.flips(k + 1) ? -b.translation[k] : b.translation[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient group

QuotientElement QuotientElement::identity(int dim) {
  check_dim(dim);
  return QuotientElement(dim, 0, 0);
}

QuotientElement QuotientElement::from_planes(int dim, Mask low, Mask high) {
  check_dim(dim);
  const Mask full = full_mask(dim);
  if ((low & ~full) != 0 || (high & ~full) != 0) {
    throw Error(ErrorCode::BadVector, "bit planes exceed dimension");
  }
  if (!Rotation(dim, low).in_h()) {
    throw Error(ErrorCode::NotInU, "parity vector not in H");
  }
  return QuotientElement(dim, low, high);
}

QuotientElement QuotientElement::from_packed(int dim, std::uint64_t packed) {
  check_dim(dim);
  const Mask full = full_mask(dim);
  return from_planes(dim, static_cast<Mask>(packed) & full, static_cast<Mask>(packed >> dim) & full);
}

QuotientElement QuotientElement::from_translation(std::span<const int> v) {
  const int dim = static_cast<int>(v.size());
  check_dim(dim);
  Mask low = 0;
  Mask high = 0;
  for (int a = 0; a < dim; ++a) {
    const int r = ((v[a] % 4) + 4) % 4;
    if (r & 1) low |= Mask{1} << a;
    if (r & 2) high |= Mask{1} << a;
  }
  return from_planes(dim, low, high);
}

std::vector<int> QuotientElement::translation() const {
  std::vector<int> out(dim_);
  for (int a = 0; a < dim_; ++a) out[a] = coordinate(a + 1);
  return out;
}

int QuotientElement::coordinate(int axis) const {
  const int bit = axis - 1;
  return static_cast<int>(((low_ >> bit) & 1U) | (((high_ >> bit) & 1U) << 1));
}

QuotientElement compose_quotient(const QuotientElement& a, const QuotientElement& b) {
  require_same_dim(a.dim(), b.dim());
  // Negating a Z_4 digit (l, h) gives (l, h ^ l); only coordinates where
  // a flips are negated. Addition of (l1, h1) + (l2, h2) carries l1 & l2.
  const Mask b_high = b.high() ^ (b.low() & a.low());
  const Mask low = a.low() ^ b.low();
  const Mask high = a.high() ^ b_high ^ (a.low() & b.low());
  return QuotientElement::from_planes(a.dim(), low, high);
}

QuotientElement project(const AmbientElement& a) {
  if (!a.in_u()) {
    throw Error(ErrorCode::NotInU, "element is not in U (v mod 2 must equal rho, rho in H)");
  }
  std::vector<int> v(a.dim());
  for (int k = 0; k < a.dim(); ++k) v[k] = static_cast<int>(((a.translation[k] % 4) + 4) % 4);
  return QuotientElement::from_translation(v);
}

std::uint64_t h_order(int dim) {
  check_dim(dim);
  return std::uint64_t{1} << (dim % 2 == 0 ? dim : dim - 1);
}

std::uint64_t u_quotient_order(int dim) {
  check_dim(dim);
  return std::uint64_t{1} << (dim % 2 == 0 ? 2 * dim : 2 * dim - 1);
}

std::vector<QuotientElement> cube_edge_generators(int dim) {
  check_dim(dim);
  std::vector<QuotientElement> out;
  const Mask full = full_mask(dim);
  for (int axis = 1; axis <= dim; ++axis) {
    const Mask others = full & ~axis_bit(axis);
    // Each edge in this direction is fixed by its other n-1 signs; a sign
    // of -1/2 contributes translation -1 = 3 mod 4.
    for (Mask signs = 0; signs <= full; ++signs) {
      if (signs & axis_bit(axis)) continue;
      out.push_back(QuotientElement::from_planes(dim, others, signs & others));
      if (signs == full) break;
    }
  }
  return out;
}

std::string to_string(const Rotation& r) {
  std::ostringstream os;
  os << '(';
  for (int a = 1; a <= r.dim(); ++a) os << (a > 1 ? "," : "") << (r.flips(a) ? 1 : 0);
  os << ')';
  return os.str();
}

std::string to_string(const QuotientElement& e) {
  std::ostringstream os;
  os << "((";
  for (int a = 1; a <= e.dim(); ++a) os << (a > 1 ? "," : "") << e.coordinate(a);
  os << "), " << to_string(e.rotation()) << ')';
  return os.str();
}

}  // namespace cubeloop
