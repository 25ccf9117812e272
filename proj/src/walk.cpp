#include "rwring/walk.hpp"

#include <cmath>

#include "rwring/generators.hpp"

namespace rwring {

double expected_rwl_regular(std::uint64_t d, std::uint64_t n) {
  if (d < 1 || n < 1)
    throw std::invalid_argument("expected_rwl_regular: d and n must be >= 1");
  if (d == 1) return 1.0;
  double dd = static_cast<double>(d);
  // (1 - 1/d)^n in log space; underflows cleanly to 0 for large n.
  double tail = std::exp(static_cast<double>(n) * std::log1p(-1.0 / dd));
  return dd - (dd + static_cast<double>(n)) * tail;
}

std::uint64_t default_walks(NodeId n) {
  return std::max<std::uint64_t>(10ull * n, 10000ull);
}

namespace detail {

RwlEstimate WalkAccumulator::estimate() const {
  RwlEstimate est;
  est.walk_count = count;
  if (count == 0) return est;
  est.mean_length = static_cast<double>(sum) / static_cast<double>(count);
  if (count > 1) {
    long double c = static_cast<long double>(count);
    long double var =
        (static_cast<long double>(sum_sq) -
         static_cast<long double>(sum) * static_cast<long double>(sum) / c) /
        (c - 1.0L);
    if (var < 0) var = 0;
    est.std_error = static_cast<double>(std::sqrt(var / c));
  }
  return est;
}

}  // namespace detail

double RwmEstimate::q_std_error() const {
  double a = l_g.mean_length, b = l_gr.mean_length;
  if (a <= 0 || b <= 0) return 0.0;
  double ra = l_g.std_error / a;
  double rb = l_gr.std_error / b;
  return (a / b) * std::sqrt(ra * ra + rb * rb);
}

RwmEstimate random_walk_modularity_with_nulls(const Graph& g,
                                              std::span<const MultiGraph> nulls,
                                              const RwmOptions& opt) {
  if (nulls.empty())
    throw std::invalid_argument("random_walk_modularity: need at least one null sample");
  std::uint64_t walks = opt.walks ? opt.walks : default_walks(g.node_count());

  RwlOptions side;
  side.walks = walks;
  side.starts = opt.starts;
  side.threads = opt.threads;
  side.seed = derive_seed(opt.seed, streams::walk, 0);
  RwlEstimate l_g = average_rwl(g, side);

  detail::WalkAccumulator pooled;
  for (std::size_t j = 0; j < nulls.size(); ++j) {
    detail::StartSampler<MultiGraph> starts(nulls[j], opt.starts);
    auto acc = detail::run_walks(nulls[j], starts, walks,
                                 derive_seed(opt.seed, streams::null_walks, j),
                                 opt.threads);
    pooled.merge(acc);
  }

  RwmEstimate est;
  est.l_g = l_g;
  est.l_gr = pooled.estimate();
  est.null_samples = static_cast<std::uint32_t>(nulls.size());
  est.q = 1.0 - est.l_g.mean_length / est.l_gr.mean_length;
  return est;
}

RwmEstimate random_walk_modularity(const Graph& g, const RwmOptions& opt) {
  if (opt.null_samples < 1)
    throw std::invalid_argument("random_walk_modularity: null_samples must be >= 1");
  std::vector<MultiGraph> nulls;
  nulls.reserve(opt.null_samples);
  for (std::uint32_t j = 0; j < opt.null_samples; ++j)
    nulls.push_back(sample_configuration(g, derive_seed(opt.seed, streams::null_graph, j)));
  return random_walk_modularity_with_nulls(g, nulls, opt);
}

}  // namespace rwring
