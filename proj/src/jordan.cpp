#include "cubeloop/jordan.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "cubeloop/error.hpp"

namespace cubeloop {

DirectionWord::DirectionWord(int dim, std::vector<int> labels) : dim_(dim), labels_(std::move(labels)) {
  check_dim(dim);
  for (int l : labels_) {
    if (l < 1 || l > dim) {
      throw Error(ErrorCode::BadLabel,
                  "label " + std::to_string(l) + " outside 1.." + std::to_string(dim));
    }
  }
}

DirectionWord DirectionWord::parse(std::string_view text, int dim) {
  check_dim(dim);
  std::vector<int> labels;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };

  if (dim <= 9) {
    for (char c : text) {
      if (is_sep(c)) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::BadWord, std::string("unexpected character '") + c + "'");
      }
      labels.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc{} || ptr != text.data() + j) {
        throw Error(ErrorCode::BadWord, "bad label token '" + std::string(text.substr(i, j - i)) + "'");
      }
      labels.push_back(value);
      i = j;
    }
  }
  if (labels.empty()) throw Error(ErrorCode::BadWord, "empty word");
  return DirectionWord(dim, std::move(labels));
}

std::vector<int> DirectionWord::counts() const {
  std::vector<int> c(dim_ + 1, 0);
  for (int l : labels_) ++c[l];
  return c;
}

DirectionWord DirectionWord::rotated(std::size_t shift) const {
  std::vector<int> out(labels_.size());
  const std::size_t m = labels_.size();
  for (std::size_t i = 0; i < m; ++i) out[i] = labels_[(i + shift) % m];
  return DirectionWord(dim_, std::move(out));
}

DirectionWord DirectionWord::reversed() const {
  return DirectionWord(dim_, std::vector<int>(labels_.rbegin(), labels_.rend()));
}

DirectionWord DirectionWord::relabeled(std::span<const int> relabel) const {
  if (static_cast<int>(relabel.size()) != dim_ + 1) {
    throw Error(ErrorCode::BadParameters, "relabelling table must have dim + 1 entries");
  }
  std::vector<int> out;
  out.reserve(labels_.size());
  for (int l : labels_) out.push_back(relabel[l]);
  return DirectionWord(dim_, std::move(out));
}

std::string DirectionWord::compact() const {
  if (dim_ > 9) throw Error(ErrorCode::BadParameters, "compact form needs dim <= 9");
  std::string s;
  for (int l : labels_) s.push_back(static_cast<char>('0' + l));
  return s;
}

std::string DirectionWord::spaced() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(labels_[i]);
  }
  return s;
}

std::vector<int> doubled_coordinates(Vertex v, int dim) {
  std::vector<int> out(dim);
  for (int a = 0; a < dim; ++a) out[a] = ((v >> a) & 1U) ? -1 : 1;
  return out;
}

// ---------------------------------------------------------------------------

JordanPath validate(const DirectionWord& word, std::optional<Vertex> base) {
  const int n = word.dim();
  const std::size_t m = word.length();
  const Vertex start = base.value_or(0);
  if ((start & ~full_mask(n)) != 0) {
    throw Error(ErrorCode::BadParameters, "base vertex has bits beyond the dimension");
  }
  if (m % 2 != 0) {
    throw Error(ErrorCode::OddLength, "length " + std::to_string(m) + " is odd");
  }
  const auto counts = word.counts();
  for (int beta = 1; beta <= n; ++beta) {
    if (counts[beta] % 2 != 0) {
      throw Error(ErrorCode::NotClosed, "direction " + std::to_string(beta) + " occurs " +
                                            std::to_string(counts[beta]) + " times");
    }
  }
  for (int beta = 1; beta <= n; ++beta) {
    if (counts[beta] == 0) {
      throw Error(ErrorCode::MissingDirection, "direction " + std::to_string(beta) + " unused");
    }
  }

  std::vector<Vertex> vertices;
  vertices.reserve(m);
  std::set<Vertex> seen;
  Vertex cur = start;
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen.insert(cur).second) {
      throw Error(ErrorCode::NotEmbedded,
                  "vertex revisited after " + std::to_string(i) + " edges");
    }
    vertices.push_back(cur);
    cur ^= axis_bit(word[i]);
  }
  if (cur != start) {
    throw InvariantViolation("even label counts but the walk does not return to its start");
  }
  return JordanPath(word, std::move(vertices));
}

std::vector<Vertex> walk_vertices(const JordanPath& path) {
  return {path.vertices().begin(), path.vertices().end()};
}

// ---------------------------------------------------------------------------

std::strong_ordering operator<=>(const CanonicalWord& a, const CanonicalWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  const auto la = a.word_.labels();
  const auto lb = b.word_.labels();
  return std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end());
}

CanonicalWord canonicalize(const DirectionWord& word) {
  const auto counts = word.counts();
  for (int beta = 1; beta <= word.dim(); ++beta) {
    if (counts[beta] % 2 != 0) {
      throw Error(ErrorCode::NotClosed, "canonical form is defined on closed words only");
    }
  }
  const std::size_t m = word.length();
  const auto labels = word.labels();
  std::vector<int> best;
  std::vector<int> candidate(m);
  std::vector<int> relabel(word.dim() + 1);

  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t shift = 0; shift < m; ++shift) {
      std::fill(relabel.begin(), relabel.end(), 0);
      int next = 1;
      bool worse = false;
      bool better = best.empty();
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t idx = orientation == 0 ? (shift + i) % m : (shift + m - i) % m;
        int& r = relabel[labels[idx]];
        if (r == 0) r = next++;
        candidate[i] = r;
        if (!better) {
          if (candidate[i] < best[i]) better = true;
          else if (candidate[i] > best[i]) { worse = true; break; }
        }
      }
      if (!worse && better) best = candidate;
    }
  }
  return CanonicalWord(DirectionWord(word.dim(), std::move(best)));
}

bool equivalent(const DirectionWord& a, const DirectionWord& b) {
  return a.dim() == b.dim() && canonicalize(a) == canonicalize(b);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> minimal_dihedral(const std::vector<int>& v) {
  std::vector<int> best = v;
  const std::size_t k = v.size();
  std::vector<int> c(k);
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = orientation == 0 ? v[(s + i) % k] : v[(s + k - i) % k];
      }
      if (c < best) best = c;
    }
  }
  return best;
}

}  // namespace

GapInvariant gap_invariant(const DirectionWord& word) {
  const std::size_t m = word.length();
  GapInvariant inv;
  for (int beta = 1; beta <= word.dim(); ++beta) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) {
      if (word[i] == beta) pos.push_back(i);
    }
    if (pos.empty()) continue;
    std::vector<int> gaps;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      const std::size_t next = j + 1 < pos.size() ? pos[j + 1] : pos[0] + m;
      gaps.push_back(static_cast<int>(next - pos[j]));
    }
    inv.gaps.push_back(minimal_dihedral(gaps));
  }
  std::sort(inv.gaps.begin(), inv.gaps.end());
  return inv;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SymmetryOrientation o) {
  switch (o) {
    case SymmetryOrientation::Preserving: return "preserving";
    case SymmetryOrientation::Reversing: return "reversing";
    case SymmetryOrientation::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::vector<PathSymmetry> path_symmetries(const JordanPath& path) {
  const int n = path.dim();
  const auto verts = path.vertices();
  const std::size_t m = verts.size();

  // An edge is identified by its lower endpoint and direction.
  auto edge_key = [](Vertex a, Vertex b) {
    return std::pair<Vertex, Vertex>{std::min(a, b), std::max(a, b)};
  };
  std::set<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < m; ++i) edges.insert(edge_key(verts[i], verts[(i + 1) % m]));

  std::vector<PathSymmetry> out;
  const Mask full = full_mask(n);
  for (Mask sigma = 0;; ++sigma) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      ok = edges.count(edge_key(verts[i] ^ sigma, verts[(i + 1) % m] ^ sigma)) > 0;
    }
    if (ok) {
      Rotation r(n, sigma);
      SymmetryOrientation o = SymmetryOrientation::Undetermined;
      if (n % 2 == 0) {
        o = r.weight() % 2 == 0 ? SymmetryOrientation::Preserving : SymmetryOrientation::Reversing;
      }
      out.push_back({r, o});
    }
    if (sigma == full) break;
  }
  return out;
}

}  // namespace cubeloop
