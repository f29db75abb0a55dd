#include "graphrel/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "graphrel/counts.hpp"
#include "graphrel/tutte.hpp"
#include "parallel.hpp"

namespace graphrel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// floor(p * 2^53); a 53-bit draw u keeps an edge iff u < threshold.
std::uint64_t keep_threshold(const mpq_class& p) {
  mpz_class scaled = p.get_num();
  scaled <<= 53;
  mpz_class t;
  mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), p.get_den().get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(t.get_mpz_t()));
}

std::uint64_t run_batch(const SimpleGraph& g, int k, std::uint64_t threshold, std::uint64_t trials,
                        std::uint64_t batch_seed) {
  std::mt19937_64 rng(batch_seed);
  const int n = g.order();
  std::vector<int> parent(n);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = n;
    for (const auto& [u, v] : g.edges()) {
      if ((rng() >> 11) >= threshold) continue;
      int a = u;
      int b = v;
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      while (parent[b] != b) b = parent[b] = parent[parent[b]];
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --comps;
      }
    }
    if (comps <= k) ++hits;
  }
  return hits;
}

}  // namespace

McEstimate estimate(const SimpleGraph& g, int k, const mpq_class& p_in, std::uint64_t trials, std::uint64_t seed,
                    int workers) {
  const mpq_class p = lowest_terms(p_in);
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1], got " + p.get_str());
  if (k < 1) throw std::invalid_argument("component bound k must be >= 1");
  if (trials == 0) throw std::invalid_argument("need at least one trial");

  const std::uint64_t threshold = keep_threshold(p);
  const std::uint64_t batches = (trials + kTrialsPerBatch - 1) / kTrialsPerBatch;
  std::vector<std::uint64_t> hits(batches, 0);
  detail::parallel_for(batches, workers, [&](std::size_t b) {
    const std::uint64_t begin = b * kTrialsPerBatch;
    const std::uint64_t len = std::min(kTrialsPerBatch, trials - begin);
    hits[b] = run_batch(g, k, threshold, len, splitmix64(seed ^ splitmix64(b)));
  });

  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.successes = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  est.mean = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
  return est;
}

CrossCheckResult cross_check(const SimpleGraph& g, int k, const mpq_class& p, std::uint64_t trials,
                             std::uint64_t seed, double tolerance_sigmas, const std::optional<mpq_class>& exact,
                             int workers) {
  CrossCheckResult out;
  if (exact) {
    out.exact = lowest_terms(*exact);
  } else {
    const NTable table = is_connected(g) ? ntable_from_whitney(whitney(g), g.order(), g.size()) : ntable_bruteforce(g);
    out.exact = rel_eval(reliability(table, k), p);
  }
  out.estimate = estimate(g, k, p, trials, seed, workers);
  const double e = out.exact.get_d();
  const double null_stderr = std::sqrt(std::max(0.0, e * (1.0 - e)) / static_cast<double>(trials));
  out.sigma = std::max(out.estimate.stderr_, null_stderr);
  const double gap = std::abs(out.estimate.mean - e);
  if (out.sigma > 0) {
    out.deviation = gap / out.sigma;
    out.pass = gap <= tolerance_sigmas * out.sigma;
  } else {
    out.deviation = gap == 0 ? 0.0 : INFINITY;
    out.pass = gap == 0;
  }
  return out;
}

}  // namespace graphrel
