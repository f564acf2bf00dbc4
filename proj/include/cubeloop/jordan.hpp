#pragma once

// Edge loops on the n-cube encoded as cyclic words of direction labels.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubeloop/group.hpp"

namespace cubeloop {

// Cyclic sequence of direction labels in 1..dim. Only the label range is
// enforced here; closedness and embeddedness are checked by validate().
class DirectionWord {
public:
  DirectionWord(int dim, std::vector<int> labels);

  // Accepts "12314234", "1 2 3 1 4 2 3 4" or "1,2,3". For dim <= 9 every
  // digit is a label and separators are ignored; for dim >= 10 the text must
  // be separated and each token is one label.
  static DirectionWord parse(std::string_view text, int dim);

  int dim() const { return dim_; }
  std::size_t length() const { return labels_.size(); }
  std::span<const int> labels() const { return labels_; }
  int operator[](std::size_t i) const { return labels_[i]; }

  // counts()[beta] = number of edges in direction beta; index 0 unused.
  std::vector<int> counts() const;

  DirectionWord rotated(std::size_t shift) const;
  DirectionWord reversed() const;
  // relabel[beta] is the new label for beta (index 0 unused).
  DirectionWord relabeled(std::span<const int> relabel) const;

  std::string compact() const;  // digits only; requires dim <= 9
  std::string spaced() const;
  std::string to_string() const { return dim_ <= 9 ? compact() : spaced(); }

  friend bool operator==(const DirectionWord&, const DirectionWord&) = default;
  friend auto operator<=>(const DirectionWord&, const DirectionWord&) = default;

private:
  int dim_;
  std::vector<int> labels_;
};

// Cube vertex as sign bits: bit (a-1) set means coordinate a is -1/2.
using Vertex = Mask;

// Doubled coordinates of a vertex: +1 or -1 per axis.
std::vector<int> doubled_coordinates(Vertex v, int dim);

// A certified Jordan path: closed, embedded, uses every direction.
class JordanPath {
public:
  int dim() const { return word_.dim(); }
  std::size_t length() const { return word_.length(); }
  const DirectionWord& word() const { return word_; }
  Vertex base() const { return vertices_.front(); }
  // Edge i (0-based) runs from vertices()[i] to vertices()[(i+1) % m] in
  // direction word()[i].
  std::span<const Vertex> vertices() const { return vertices_; }
  int direction(std::size_t edge) const { return word_[edge]; }

private:
  friend JordanPath validate(const DirectionWord&, std::optional<Vertex>);
  JordanPath(DirectionWord word, std::vector<Vertex> vertices)
      : word_(std::move(word)), vertices_(std::move(vertices)) {}

  DirectionWord word_;
  std::vector<Vertex> vertices_;
};

// Certifies closedness, coverage and embeddedness. The base vertex defaults
// to (+1/2, ..., +1/2). Errors: OddLength, NotClosed, MissingDirection,
// NotEmbedded (checked in that order).
JordanPath validate(const DirectionWord& word, std::optional<Vertex> base = std::nullopt);

std::vector<Vertex> walk_vertices(const JordanPath& path);

// Lexicographically minimal representative of the orbit under cyclic shift,
// reversal and relabelling, with labels renumbered by first occurrence.
class CanonicalWord {
public:
  const DirectionWord& word() const { return word_; }
  std::size_t length() const { return word_.length(); }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
  // Orders by length first, then lexicographically.
  friend std::strong_ordering operator<=>(const CanonicalWord& a, const CanonicalWord& b);

private:
  friend CanonicalWord canonicalize(const DirectionWord&);
  explicit CanonicalWord(DirectionWord w) : word_(std::move(w)) {}
  DirectionWord word_;
};

// Throws NotClosed when some label occurs an odd number of times.
CanonicalWord canonicalize(const DirectionWord& word);

bool equivalent(const DirectionWord& a, const DirectionWord& b);

// Per-label cyclic gap vectors, each reduced to its minimal rotation or
// reflection, collected as a sorted multiset.
struct GapInvariant {
  std::vector<std::vector<int>> gaps;

  friend bool operator==(const GapInvariant&, const GapInvariant&) = default;
};

GapInvariant gap_invariant(const DirectionWord& word);

enum class SymmetryOrientation { Preserving, Reversing, Undetermined };

std::string_view to_string(SymmetryOrientation o);

struct PathSymmetry {
  Rotation sigma;
  // Only decided for even n: preserving iff sigma has even weight.
  SymmetryOrientation orientation;
};

// All sign changes mapping the edge set of the path onto itself, identity
// first, then increasing bit patterns.
std::vector<PathSymmetry> path_symmetries(const JordanPath& path);

}  // namespace cubeloop
