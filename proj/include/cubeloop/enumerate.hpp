#pragma once

// Symmetry-reduced enumeration of Jordan paths and the explicit path families.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubeloop/jordan.hpp"
#include "cubeloop/verdict.hpp"

namespace cubeloop {

struct EnumerationQuery {
  int dim = 3;
  // Inclusive length range; 0 means "from 2n" / "up to 2^n".
  int min_length = 0;
  int max_length = 0;
  bool embedded_only = false;
  // Stop after the first length at which at least this many classes have
  // been collected, then truncate. 0 means no limit.
  std::size_t limit = 0;
  // Label of the first edge. With the default 1, labels are also introduced
  // in increasing order; any other value disables that reduction.
  int first_direction = 1;
  // Shards are the search prefixes of this many edges.
  int prefix_depth = 3;
};

// Throws BadQuery for malformed queries.
void check_query(const EnumerationQuery& query);

// Every symmetry class matching the query, sorted by (length, word).
// `jobs` worker threads share the prefix shards; the result is identical for
// every value of `jobs`.
std::vector<CanonicalWord> enumerate_paths(const EnumerationQuery& query, unsigned jobs = 1);

enum class Family { GammaA, GammaB, GammaC, DSeries, Sharp };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::DSeries;
  int dim = 3;
  int alpha = 0;  // GammaB, GammaC
  int beta = 0;   // GammaA, GammaB, GammaC
};

// Expands the arrow notation, e.g. D-series n = 5 gives 12345 12 543.
// Throws BadParameters outside 1 <= beta < n, 1 <= alpha < beta < n.
DirectionWord family_word(const FamilySpec& spec);

// All admissible parameter choices for one family in one dimension.
std::vector<FamilySpec> family_members(Family family, int dim);

// Lifts a seed path of dimension n to dimension `target_dim` by replacing
// the occurrences of `beta` alternately with beta (n+1) ... N and
// N ... (n+1) beta. Refuses seeds whose Lambda^0 is not of order 4.
DirectionWord expand_series(const JordanPath& seed, int target_dim, int beta);

struct SeriesEntry {
  std::string family;  // family name, or "lift" for expanded seeds
  int dim = 0;
  int alpha = 0;
  int beta = 0;                     // for lifts: the replaced label
  std::optional<std::string> seed;  // for lifts: the seed word
  SurfaceReport report;
};

// Reports for every family member with 4 <= n <= max_n (the D-series from
// n = 3), plus lifts of the three-dimensional seeds with |Lambda^0| = 4.
std::vector<SeriesEntry> series_check(int max_n);

}  // namespace cubeloop
