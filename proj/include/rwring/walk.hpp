#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rwring/graph.hpp"
#include "rwring/rng.hpp"

namespace rwring {

// One ring-terminated walk. The trail lists every node in visit order,
// start first; the last entry repeats some earlier entry (the ring).
// ring_length counts transitions minus the first, so the shortest walk
// s -> v -> s has ring_length 1.
struct WalkOutcome {
  std::vector<NodeId> trail;
  std::uint32_t ring_length = 0;
};

enum class StartPolicy { uniform, degree_proportional };

struct RwlEstimate {
  double mean_length = 0.0;
  std::uint64_t walk_count = 0;
  double std_error = 0.0;
};

struct RwmEstimate {
  double q = 0.0;
  RwlEstimate l_g;
  RwlEstimate l_gr;
  std::uint32_t null_samples = 0;

  // Delta-method standard error of q from the two component estimates.
  double q_std_error() const;
};

// Expected ring length when every transition after the first closes the
// ring with probability 1/d, truncated at n transitions:
//   d - (d + n) * (1 - 1/d)^n
// This models walks on d-regular graphs whose short cycles are rare, where
// rings close almost exclusively by backtracking.
double expected_rwl_regular(std::uint64_t d, std::uint64_t n);

// Default sampling effort for length estimates: max(10n, 1e4).
std::uint64_t default_walks(NodeId n);

// Reusable walk scratch: one instance per thread, no allocation per walk.
template <class GraphT>
class RingWalker {
 public:
  explicit RingWalker(const GraphT& g) : g_(g), stamp_(g.node_count(), 0) {}

  // Runs one walk from `start`; returns the ring length. The trail stays
  // valid until the next call. Throws on an isolated start node.
  std::uint32_t walk(NodeId start, SplitMix64& rng) {
    if (g_.degree(start) == 0) throw std::invalid_argument("isolated start node");
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    trail_.clear();
    trail_.push_back(start);
    stamp_[start] = epoch_;
    NodeId current = start;
    std::uint32_t transitions = 0;
    for (;;) {
      auto row = g_.neighbors(current);
      NodeId next = row[rng.below(row.size())];
      ++transitions;
      trail_.push_back(next);
      if (stamp_[next] == epoch_) break;  // first revisit of any trail node
      stamp_[next] = epoch_;
      current = next;
    }
    // A self-loop taken on the very first transition closes immediately;
    // it scores as the minimal ring length 1.
    return transitions > 1 ? transitions - 1 : 1;
  }

  std::span<const NodeId> trail() const { return trail_; }

 private:
  const GraphT& g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> trail_;
};

template <class GraphT>
WalkOutcome walk_until_ring(const GraphT& g, NodeId start, SplitMix64& rng) {
  RingWalker<GraphT> walker(g);
  WalkOutcome out;
  out.ring_length = walker.walk(start, rng);
  out.trail.assign(walker.trail().begin(), walker.trail().end());
  return out;
}

namespace detail {

// Ring lengths are integers, so these sums are exact and merging is
// associative: any thread partition of the walk indices yields the same
// estimate as a single-threaded run.
struct WalkAccumulator {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;

  void add(std::uint64_t l) {
    ++count;
    sum += l;
    sum_sq += l * l;
  }
  void merge(const WalkAccumulator& o) {
    count += o.count;
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  RwlEstimate estimate() const;
};

template <class GraphT>
class StartSampler {
 public:
  StartSampler(const GraphT& g, StartPolicy policy) : g_(g), policy_(policy) {
    if (policy_ == StartPolicy::uniform) {
      for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) pool_.push_back(v);
      if (pool_.empty()) throw std::invalid_argument("all nodes are isolated");
    } else if (g.adjacency().empty()) {
      throw std::invalid_argument("all nodes are isolated");
    }
  }

  NodeId pick(SplitMix64& rng) const {
    if (policy_ == StartPolicy::uniform) return pool_[rng.below(pool_.size())];
    // Degree-proportional: a uniform adjacency slot, mapped to its owner.
    EdgeId slot = rng.below(g_.adjacency().size());
    const auto& off = g_.offsets();
    auto it = std::upper_bound(off.begin(), off.end(), slot);
    return static_cast<NodeId>((it - off.begin()) - 1);
  }

 private:
  const GraphT& g_;
  StartPolicy policy_;
  std::vector<NodeId> pool_;
};

// Exact membership set tuned for short trails: open addressing in a few
// cache lines, growing only on the rare long walk.
class SmallNodeSet {
 public:
  SmallNodeSet() : slots_(64, kEmpty) {}

  void clear() {
    std::fill(slots_.begin(), slots_.end(), kEmpty);
    count_ = 0;
  }

  // Returns true when v was absent (and is now inserted).
  bool insert(NodeId v) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t i = (static_cast<std::size_t>(v) * 2654435761u) & mask;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == v) return false;
      i = (i + 1) & mask;
    }
    slots_[i] = v;
    ++count_;
    return true;
  }

 private:
  static constexpr NodeId kEmpty = 0xffffffffu;

  void grow() {
    std::vector<NodeId> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    std::size_t mask = slots_.size() - 1;
    for (NodeId v : old) {
      if (v == kEmpty) continue;
      std::size_t i = (static_cast<std::size_t>(v) * 2654435761u) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = v;
    }
  }

  std::vector<NodeId> slots_;
  std::size_t count_ = 0;
};

// Length-only walk engine. Walks are interleaved in lanes so the next
// adjacency access of one walk is prefetched while the others advance;
// on graphs larger than cache this hides most of the memory latency.
// Each walk consumes its generator in the same order as RingWalker, so
// the accumulated estimate is identical to the one-walk-at-a-time path.
template <class GraphT>
void run_walk_range(const GraphT& g, const StartSampler<GraphT>& starts,
                    std::uint64_t lo, std::uint64_t hi, std::uint64_t seed,
                    WalkAccumulator& acc) {
  constexpr int kLanes = 16;
  struct Lane {
    SplitMix64 rng{0};
    SmallNodeSet visited;
    EdgeId slot = 0;
    NodeId current = 0;
    std::uint32_t transitions = 0;
    bool fetching_next = false;
    bool active = false;
  };

  const auto& offsets = g.offsets();
  const auto& adj = g.adjacency();
  std::uint64_t issued = lo;

  std::vector<Lane> lanes(kLanes);
  auto start_walk = [&](Lane& ln) {
    if (issued >= hi) {
      ln.active = false;
      return false;
    }
    ln.rng = SplitMix64(derive_seed(seed, streams::walk, issued++));
    ln.current = starts.pick(ln.rng);
    ln.visited.clear();
    ln.visited.insert(ln.current);
    ln.transitions = 0;
    ln.fetching_next = false;
    ln.active = true;
    __builtin_prefetch(&offsets[ln.current]);
    return true;
  };

  int active_count = 0;
  for (auto& ln : lanes)
    if (start_walk(ln)) ++active_count;

  while (active_count > 0) {
    for (auto& ln : lanes) {
      if (!ln.active) continue;
      if (!ln.fetching_next) {
        EdgeId begin = offsets[ln.current];
        ln.slot = begin + ln.rng.below(offsets[ln.current + 1] - begin);
        __builtin_prefetch(&adj[ln.slot]);
        ln.fetching_next = true;
      } else {
        NodeId next = adj[ln.slot];
        ++ln.transitions;
        if (!ln.visited.insert(next)) {  // revisit: the ring closed
          acc.add(ln.transitions > 1 ? ln.transitions - 1 : 1);
          if (!start_walk(ln)) --active_count;
        } else {
          ln.current = next;
          ln.fetching_next = false;
          __builtin_prefetch(&offsets[ln.current]);
        }
      }
    }
  }
}

template <class GraphT>
WalkAccumulator run_walks(const GraphT& g, const StartSampler<GraphT>& starts,
                          std::uint64_t walks, std::uint64_t seed, int threads) {
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, WalkAccumulator& acc) {
    run_walk_range(g, starts, lo, hi, seed, acc);
  };

  int t = std::max(1, threads);
  if (static_cast<std::uint64_t>(t) > walks) t = static_cast<int>(walks);
  if (t == 1) {
    WalkAccumulator acc;
    run_range(0, walks, acc);
    return acc;
  }
  std::vector<WalkAccumulator> parts(static_cast<std::size_t>(t));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t) - 1);
  std::uint64_t chunk = walks / t, extra = walks % t, lo = 0;
  for (int k = 0; k < t; ++k) {
    std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(k) < extra ? 1 : 0);
    if (k == t - 1) {
      run_range(lo, hi, parts[static_cast<std::size_t>(k)]);
    } else {
      pool.emplace_back(run_range, lo, hi, std::ref(parts[static_cast<std::size_t>(k)]));
    }
    lo = hi;
  }
  for (auto& th : pool) th.join();
  WalkAccumulator acc;
  for (const auto& p : parts) acc.merge(p);
  return acc;
}

}  // namespace detail

struct RwlOptions {
  std::uint64_t walks = 0;  // 0 = default_walks(n)
  StartPolicy starts = StartPolicy::uniform;
  std::uint64_t seed = 42;
  int threads = 1;
};

template <class GraphT>
RwlEstimate average_rwl(const GraphT& g, const RwlOptions& opt) {
  std::uint64_t walks = opt.walks ? opt.walks : default_walks(g.node_count());
  detail::StartSampler<GraphT> starts(g, opt.starts);
  return detail::run_walks(g, starts, walks, opt.seed, opt.threads).estimate();
}

struct RwmOptions {
  std::uint64_t walks = 0;  // 0 = default_walks(n), applied per estimate
  std::uint32_t null_samples = 3;
  StartPolicy starts = StartPolicy::uniform;
  std::uint64_t seed = 42;
  int threads = 1;
};

// q = 1 - L(G) / L(G_r), with L(G_r) pooled over configuration-model samples.
RwmEstimate random_walk_modularity(const Graph& g, const RwmOptions& opt);

// Same estimator with caller-supplied null graphs (used by tests to feed the
// graph back in as its own null).
RwmEstimate random_walk_modularity_with_nulls(const Graph& g,
                                              std::span<const MultiGraph> nulls,
                                              const RwmOptions& opt);

}  // namespace rwring
