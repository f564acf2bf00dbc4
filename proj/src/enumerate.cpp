#include "cubeloop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "cubeloop/error.hpp"
#include "cubeloop/lattice.hpp"

namespace cubeloop {

namespace {

int max_cycle_length(int n) { return n >= 30 ? (1 << 30) : (1 << n); }

// Depth-first search for simple closed walks of one exact length through
// the vertex (+1/2,...,+1/2).
class CycleSearch {
public:
  CycleSearch(int dim, int length, bool reduce_labels, int first, bool cap_directions)
      : n_(dim), target_(length), reduce_labels_(reduce_labels), first_(first),
        cap_directions_(cap_directions), visited_((std::size_t{1} << dim) / 64 + 1, 0) {}

  // Prefixes of `depth` edges that can still be completed.
  std::vector<std::vector<int>> prefixes(int depth) {
    std::vector<std::vector<int>> out;
    stop_depth_ = depth;
    on_prefix_ = [&](const std::vector<int>& w) { out.push_back(w); };
    start({});
    on_prefix_ = nullptr;
    stop_depth_ = -1;
    return out;
  }

  // Runs the search below `prefix`, calling `emit` for each closed word.
  template <class Emit>
  void complete(const std::vector<int>& prefix, Emit&& emit) {
    emit_ = std::forward<Emit>(emit);
    start(prefix);
  }

private:
  bool is_visited(Vertex v) const { return (visited_[v >> 6] >> (v & 63)) & 1U; }
  void set_visited(Vertex v, bool on) {
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (on) visited_[v >> 6] |= bit;
    else visited_[v >> 6] &= ~bit;
  }

  int unused_labels() const {
    int k = 0;
    for (int l = 1; l <= n_; ++l) k += counts_[l] == 0;
    return k;
  }

  bool feasible(Vertex at, int placed) const {
    const int remaining = target_ - placed;
    return remaining >= std::popcount(at) + 2 * unused_labels();
  }

  void push(int label) {
    word_.push_back(label);
    ++counts_[label];
    used_ = std::max(used_, label);
    cur_ ^= axis_bit(label);
    set_visited(cur_, true);
  }

  void start(const std::vector<int>& prefix) {
    std::fill(visited_.begin(), visited_.end(), 0);
    counts_.fill(0);
    word_.clear();
    used_ = 0;
    cur_ = 0;
    set_visited(0, true);
    if (prefix.empty()) {
      // The first edge is fixed.
      push(first_);
    } else {
      for (int l : prefix) push(l);
    }
    if (!feasible(cur_, static_cast<int>(word_.size()))) return;
    dfs();
  }

  void dfs() {
    const int placed = static_cast<int>(word_.size());
    if (placed == stop_depth_) {
      on_prefix_(word_);
      return;
    }
    const int top = reduce_labels_ ? std::min(used_ + 1, n_) : n_;
    for (int label = 1; label <= top; ++label) {
      if (cap_directions_ && counts_[label] >= 4) continue;
      const Vertex next = cur_ ^ axis_bit(label);
      if (next == 0) {
        if (placed + 1 == target_) {
          ++counts_[label];
          const bool covered = unused_labels() == 0;
          --counts_[label];
          if (covered) {
            word_.push_back(label);
            emit_(word_);
            word_.pop_back();
          }
        }
        continue;
      }
      if (placed + 1 >= target_ || is_visited(next)) continue;

      const int saved_used = used_;
      const Vertex saved_cur = cur_;
      push(label);
      if (feasible(cur_, placed + 1)) dfs();
      set_visited(cur_, false);
      cur_ = saved_cur;
      used_ = saved_used;
      --counts_[label];
      word_.pop_back();
    }
  }

  int n_;
  int target_;
  bool reduce_labels_;
  int first_;
  bool cap_directions_;
  std::vector<std::uint64_t> visited_;
  std::array<int, kMaxDim + 1> counts_{};
  std::vector<int> word_;
  int used_ = 0;
  Vertex cur_ = 0;
  int stop_depth_ = -1;
  std::function<void(const std::vector<int>&)> on_prefix_;
  std::function<void(const std::vector<int>&)> emit_;
};

using ClassSet = std::set<std::vector<int>>;

ClassSet search_length(const EnumerationQuery& q, int length, unsigned jobs) {
  const bool reduce = q.first_direction == 1;
  const bool cap = q.embedded_only && q.dim % 2 == 0;
  const int depth = std::max(1, std::min(q.prefix_depth, length - 1));

  std::vector<std::vector<int>> shards =
      CycleSearch(q.dim, length, reduce, q.first_direction, cap).prefixes(depth);

  std::vector<ClassSet> found(shards.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    CycleSearch search(q.dim, length, reduce, q.first_direction, cap);
    for (std::size_t k = next++; k < shards.size(); k = next++) {
      ClassSet& out = found[k];
      search.complete(shards[k], [&](const std::vector<int>& w) {
        const auto c = canonicalize(DirectionWord(q.dim, w));
        out.emplace(c.word().labels().begin(), c.word().labels().end());
      });
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(shards.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ClassSet merged;
  for (auto& s : found) merged.merge(s);
  return merged;
}

}  // namespace

void check_query(const EnumerationQuery& q) {
  if (q.dim < kMinDim || q.dim > kMaxDim) {
    throw Error(ErrorCode::BadQuery, "dimension " + std::to_string(q.dim) + " out of range");
  }
  if (q.first_direction < 1 || q.first_direction > q.dim) {
    throw Error(ErrorCode::BadQuery, "first direction out of range");
  }
  const int lo = q.min_length == 0 ? 2 * q.dim : q.min_length;
  const int hi = q.max_length == 0 ? max_cycle_length(q.dim) : q.max_length;
  if (lo % 2 != 0 || hi % 2 != 0) throw Error(ErrorCode::BadQuery, "lengths must be even");
  if (lo < 2 * q.dim || hi > max_cycle_length(q.dim) || lo > hi) {
    throw Error(ErrorCode::BadQuery, "length range must lie in [2n, 2^n]");
  }
  if (q.prefix_depth < 1) throw Error(ErrorCode::BadQuery, "prefix depth must be positive");
}

std::vector<CanonicalWord> enumerate_paths(const EnumerationQuery& query, unsigned jobs) {
  check_query(query);
  const int n = query.dim;
  const int lo = query.min_length == 0 ? 2 * n : query.min_length;
  const int hi = query.max_length == 0 ? max_cycle_length(n) : query.max_length;

  std::vector<CanonicalWord> out;
  for (int m = lo; m <= hi; m += 2) {
    if (query.embedded_only && edge_bound(n, m).status == Admissibility::RuledOut) continue;
    for (const auto& labels : search_length(query, m, jobs)) {
      DirectionWord w(n, labels);
      if (query.embedded_only && !decide_embedded(validate(w)).embedded) continue;
      out.push_back(canonicalize(w));
    }
    if (query.limit != 0 && out.size() >= query.limit) break;
  }
  std::sort(out.begin(), out.end());
  if (query.limit != 0 && out.size() > query.limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(query.limit), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::GammaA: return "gamma-a";
    case Family::GammaB: return "gamma-b";
    case Family::GammaC: return "gamma-c";
    case Family::DSeries: return "d-series";
    case Family::Sharp: return "sharp";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::GammaA, Family::GammaB, Family::GammaC, Family::DSeries, Family::Sharp}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

namespace {

// Appends from, from +- 1, ..., to.
void run(std::vector<int>& w, int from, int to) {
  const int step = from <= to ? 1 : -1;
  for (int k = from;; k += step) {
    w.push_back(k);
    if (k == to) break;
  }
}

void bad(const FamilySpec& s, const std::string& why) {
  throw Error(ErrorCode::BadParameters, std::string(to_string(s.family)) + " in dimension " +
                                            std::to_string(s.dim) + ": " + why);
}

}  // namespace

DirectionWord family_word(const FamilySpec& s) {
  const int n = s.dim;
  if (n < 3 || n > kMaxDim) bad(s, "dimension must lie in [3, " + std::to_string(kMaxDim) + "]");
  auto need_beta = [&] {
    if (s.beta < 1 || s.beta >= n) bad(s, "need 1 <= beta < n");
  };
  auto need_alpha_beta = [&] {
    if (s.alpha < 1 || s.alpha >= s.beta || s.beta >= n) bad(s, "need 1 <= alpha < beta < n");
  };

  std::vector<int> w;
  switch (s.family) {
    case Family::GammaA:
      need_beta();
      run(w, 1, n);
      run(w, s.beta, 1);
      run(w, n, s.beta + 1);
      break;
    case Family::GammaB:
      need_alpha_beta();
      run(w, 1, n);
      run(w, s.alpha, 1);
      run(w, s.beta, s.alpha + 1);
      run(w, n, s.beta + 1);
      break;
    case Family::GammaC:
      need_alpha_beta();
      run(w, 1, n);
      run(w, s.beta, s.alpha + 1);
      run(w, s.alpha, 1);
      run(w, s.alpha + 1, s.beta);
      run(w, n, s.beta + 1);
      run(w, s.beta, s.alpha + 1);
      break;
    case Family::DSeries:
      run(w, 1, n);
      w.push_back(1);
      w.push_back(2);
      run(w, n, 3);
      break;
    case Family::Sharp:
      for (int half = 0; half < 2; ++half) {
        w.push_back(1);
        run(w, 3, n);
        w.push_back(2);
        run(w, n, 3);
      }
      break;
  }
  return DirectionWord(n, std::move(w));
}

std::vector<FamilySpec> family_members(Family family, int dim) {
  std::vector<FamilySpec> out;
  switch (family) {
    case Family::GammaA:
      for (int b = 1; b < dim; ++b) out.push_back({family, dim, 0, b});
      break;
    case Family::GammaB:
    case Family::GammaC:
      for (int b = 2; b < dim; ++b) {
        for (int a = 1; a < b; ++a) out.push_back({family, dim, a, b});
      }
      break;
    case Family::DSeries:
    case Family::Sharp:
      out.push_back({family, dim, 0, 0});
      break;
  }
  return out;
}

DirectionWord expand_series(const JordanPath& seed, int target_dim, int beta) {
  const int n = seed.dim();
  if (target_dim <= n || target_dim > kMaxDim) {
    throw Error(ErrorCode::BadParameters, "target dimension must exceed the seed dimension");
  }
  if (beta < 1 || beta > n) throw Error(ErrorCode::BadParameters, "label to replace out of range");
  if (lambda0(seed).order() != 4) {
    throw Error(ErrorCode::BadParameters, "seed " + seed.word().to_string() + " has |Lambda^0| = " +
                                              std::to_string(lambda0(seed).order()) + ", need 4");
  }
  std::vector<int> w;
  bool ascending = true;
  for (int label : seed.word().labels()) {
    if (label != beta) {
      w.push_back(label);
      continue;
    }
    if (ascending) {
      w.push_back(beta);
      run(w, n + 1, target_dim);
    } else {
      run(w, target_dim, n + 1);
      w.push_back(beta);
    }
    ascending = !ascending;
  }
  return DirectionWord(target_dim, std::move(w));
}

std::vector<SeriesEntry> series_check(int max_n) {
  if (max_n < 4 || max_n > kMaxDim) throw Error(ErrorCode::BadParameters, "max_n must lie in [4, 16]");
  std::vector<SeriesEntry> out;
  auto add = [&](std::string family, const DirectionWord& w, int alpha, int beta,
                 std::optional<std::string> seed) {
    out.push_back({std::move(family), w.dim(), alpha, beta, std::move(seed), report(validate(w))});
  };

  for (int n = 3; n <= max_n; ++n) {
    add(std::string(to_string(Family::DSeries)), family_word({Family::DSeries, n}), 0, 0, std::nullopt);
  }
  for (int n = 4; n <= max_n; ++n) {
    for (Family f : {Family::GammaA, Family::GammaB, Family::GammaC, Family::Sharp}) {
      for (const auto& spec : family_members(f, n)) {
        add(std::string(to_string(f)), family_word(spec), spec.alpha, spec.beta, std::nullopt);
      }
    }
  }
  for (const char* text : {"121323", "123123", "12321232"}) {
    const JordanPath seed = validate(DirectionWord::parse(text, 3));
    if (lambda0(seed).order() != 4) continue;
    for (int n = 4; n <= max_n; ++n) {
      for (int beta = 1; beta <= 3; ++beta) {
        add("lift", expand_series(seed, n, beta), 0, beta, std::string(text));
      }
    }
  }
  return out;
}

}  // namespace cubeloop
