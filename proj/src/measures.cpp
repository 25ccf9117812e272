#include "rwring/measures.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <queue>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "rwring/local.hpp"
#include "rwring/rng.hpp"

namespace rwring {

double newman_modularity(const Graph& g, const Partition& part) {
  if (g.edge_count() == 0) throw std::invalid_argument("newman_modularity: no edges");
  if (part.community.size() != g.node_count())
    throw std::invalid_argument("newman_modularity: partition does not cover graph");

  std::vector<std::uint64_t> internal(part.community_count, 0);
  std::vector<std::uint64_t> degree_sum(part.community_count, 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    NodeId c = part.community[v];
    if (c >= part.community_count)
      throw std::invalid_argument("newman_modularity: community id out of range");
    degree_sum[c] += g.degree(v);
    for (NodeId w : g.neighbors(v))
      if (v < w && part.community[w] == c) ++internal[c];
  }

  const double m = static_cast<double>(g.edge_count());
  const double two_m = 2.0 * m;
  double q = 0.0;
  for (NodeId c = 0; c < part.community_count; ++c) {
    double a = static_cast<double>(degree_sum[c]) / two_m;
    q += static_cast<double>(internal[c]) / m - a * a;
  }
  return q;
}

namespace {

struct MergeCandidate {
  double dq;
  NodeId a, b;  // a < b
};

struct CandidateOrder {
  // priority_queue keeps the largest on top; on equal gain the smaller id
  // pair wins.
  bool operator()(const MergeCandidate& x, const MergeCandidate& y) const {
    if (x.dq != y.dq) return x.dq < y.dq;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

}  // namespace

GreedyResult greedy_newman(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("greedy_newman: no edges");
  const NodeId n = g.node_count();
  const double m = static_cast<double>(g.edge_count());
  const double two_m2 = 2.0 * m * m;

  std::vector<std::unordered_map<NodeId, std::uint64_t>> between(n);
  std::vector<std::uint64_t> degree_sum(n);
  std::vector<NodeId> owner(n);  // current community of each original node
  std::vector<std::uint8_t> alive(n, 1);
  for (NodeId v = 0; v < n; ++v) {
    owner[v] = v;
    degree_sum[v] = g.degree(v);
    for (NodeId w : g.neighbors(v))
      if (v < w) {
        between[v][w] += 1;
        between[w][v] += 1;
      }
  }

  auto gain = [&](NodeId a, NodeId b, std::uint64_t w_ab) {
    return static_cast<double>(w_ab) / m -
           static_cast<double>(degree_sum[a]) * static_cast<double>(degree_sum[b]) /
               two_m2;
  };

  std::priority_queue<MergeCandidate, std::vector<MergeCandidate>, CandidateOrder> pq;
  for (NodeId v = 0; v < n; ++v)
    for (const auto& [w, cnt] : between[v])
      if (v < w) pq.push({gain(v, w, cnt), v, w});

  // Merged-node membership lists let us relabel at the end in O(n).
  std::vector<std::vector<NodeId>> members(n);
  for (NodeId v = 0; v < n; ++v) members[v] = {v};

  while (!pq.empty()) {
    MergeCandidate top = pq.top();
    pq.pop();
    if (!alive[top.a] || !alive[top.b]) continue;
    auto it = between[top.a].find(top.b);
    if (it == between[top.a].end()) continue;
    double current = gain(top.a, top.b, it->second);
    if (current != top.dq) continue;  // stale entry; fresh one is queued
    if (current <= 0.0) break;

    NodeId a = top.a, b = top.b;  // merge b into a, keeping the smaller id
    alive[b] = 0;
    degree_sum[a] += degree_sum[b];
    between[a].erase(b);
    for (const auto& [k, w_bk] : between[b]) {
      if (k == a) continue;
      between[k].erase(b);
      between[a][k] += w_bk;
      between[k][a] = between[a][k];
    }
    between[b].clear();
    members[a].insert(members[a].end(), members[b].begin(), members[b].end());
    members[b].clear();
    members[b].shrink_to_fit();
    for (const auto& [k, w_ak] : between[a]) {
      NodeId x = std::min(a, k), y = std::max(a, k);
      pq.push({gain(x, y, w_ak), x, y});
    }
  }

  GreedyResult result;
  result.partition.community.resize(n);
  NodeId next_id = 0;
  for (NodeId c = 0; c < n; ++c) {
    if (!alive[c]) continue;
    for (NodeId v : members[c]) result.partition.community[v] = next_id;
    ++next_id;
  }
  result.partition.community_count = next_id;
  result.q = newman_modularity(g, result.partition);
  return result;
}

ConductanceProfile conductance_profile(const Graph& g, std::span<const NodeId> seeds,
                                       std::uint64_t walks, std::uint64_t seed,
                                       int threads) {
  if (seeds.empty()) throw std::invalid_argument("conductance_profile: no seeds");
  ConductanceProfile profile;
  profile.entries.resize(seeds.size());
  profile.coverage = static_cast<double>(seeds.size()) /
                     static_cast<double>(g.node_count());

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      NodeId s = seeds[i];
      FindOptions opt;
      opt.walks = walks;
      opt.rank = 0;
      opt.seed = derive_seed(seed, streams::community, s);
      Community c = find_community(g, s, opt);
      profile.entries[i] = {s, c.conductance,
                           static_cast<std::uint32_t>(c.members.size())};
    }
  };

  int t = std::max(1, threads);
  if (static_cast<std::size_t>(t) > seeds.size())
    t = static_cast<int>(seeds.size());
  if (t == 1) {
    run_range(0, seeds.size());
    return profile;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  std::vector<std::thread> pool;
  std::size_t chunk = seeds.size() / static_cast<std::size_t>(t);
  std::size_t extra = seeds.size() % static_cast<std::size_t>(t);
  std::size_t lo = 0;
  for (int k = 0; k < t; ++k) {
    std::size_t hi = lo + chunk + (static_cast<std::size_t>(k) < extra ? 1 : 0);
    pool.emplace_back([&, lo, hi, k] {
      try {
        run_range(lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return profile;
}

double conductance_modularity(const ConductanceProfile& profile) {
  if (profile.entries.empty())
    throw std::invalid_argument("conductance_modularity: empty profile");
  std::vector<double> values;
  values.reserve(profile.entries.size());
  for (const auto& e : profile.entries) values.push_back(e.conductance);
  std::sort(values.begin(), values.end());

  const double count = static_cast<double>(values.size());
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    double c = values[i];
    double f = static_cast<double>(i + 1) / count;
    best = std::max(best, std::sqrt((1.0 - c) * f));
  }
  return best;
}

double similarity(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("similarity: empty set");
  std::unordered_set<NodeId> sa(a.begin(), a.end());
  std::unordered_set<NodeId> sb(b.begin(), b.end());
  const auto& small = sa.size() <= sb.size() ? sa : sb;
  const auto& large = sa.size() <= sb.size() ? sb : sa;
  std::size_t common = 0;
  for (NodeId v : small) common += large.count(v);
  return static_cast<double>(common) /
         std::sqrt(static_cast<double>(sa.size()) * static_cast<double>(sb.size()));
}

double best_match_score(const std::vector<std::vector<NodeId>>& truth,
                        const std::vector<std::vector<NodeId>>& found) {
  if (truth.empty()) throw std::invalid_argument("best_match_score: no ground truth");
  double total = 0.0;
  for (const auto& t : truth) {
    double best = 0.0;
    for (const auto& f : found) best = std::max(best, similarity(t, f));
    total += best;
  }
  return total / static_cast<double>(truth.size());
}

std::vector<NodeId> profile_seeds(const Graph& g, std::uint64_t sample_size,
                                  std::uint64_t seed) {
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) > 0) pool.push_back(v);
  if (pool.empty()) throw std::invalid_argument("profile_seeds: all nodes isolated");

  std::uint64_t want = sample_size;
  if (want == 0) want = g.node_count() <= 100000 ? pool.size() : 10000;
  if (want >= pool.size()) return pool;

  // Partial Fisher-Yates: first `want` entries are a uniform sample.
  SplitMix64 rng(derive_seed(seed, streams::seed_sample, 0));
  for (std::uint64_t i = 0; i < want; ++i) {
    std::uint64_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(want);
  std::sort(pool.begin(), pool.end());
  return pool;
}

ModularityReport full_report(const Graph& g, const ReportOptions& opt) {
  if (g.node_count() == 0) throw std::invalid_argument("full_report: empty graph");

  RwmOptions rwm_opt;
  rwm_opt.walks = opt.walks;
  rwm_opt.null_samples = opt.null_samples;
  rwm_opt.starts = opt.starts;
  rwm_opt.seed = derive_seed(opt.seed, streams::report, 0);
  rwm_opt.threads = opt.threads;
  RwmEstimate rwm = random_walk_modularity(g, rwm_opt);

  std::vector<NodeId> seeds = profile_seeds(g, opt.seed_sample, opt.seed);
  ConductanceProfile profile = conductance_profile(
      g, seeds, opt.community_walks, derive_seed(opt.seed, streams::report, 1),
      opt.threads);

  ModularityReport report;
  report.rwm = rwm.q;
  report.arl = rwm.l_g.mean_length;
  report.cm = conductance_modularity(profile);
  double sum_c = 0.0, sum_s = 0.0;
  for (const auto& e : profile.entries) {
    sum_c += e.conductance;
    sum_s += static_cast<double>(e.community_size);
  }
  report.avg_conductance = sum_c / static_cast<double>(profile.entries.size());
  report.avg_size = sum_s / static_cast<double>(profile.entries.size());
  if (g.node_count() <= opt.nm_threshold && g.edge_count() >= 1)
    report.newman = greedy_newman(g).q;
  return report;
}

}  // namespace rwring
