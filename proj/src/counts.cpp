#include "graphrel/counts.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphrel/tutte.hpp"

namespace graphrel {

namespace {

constexpr std::size_t kMaxBernsteinNodes = 1 << 16;

}  // namespace

NTable::NTable(int n, int m) : n_(n), m_(m), counts_(static_cast<std::size_t>(m + 1) * n) {
  if (n < 1 || m < 0) throw std::invalid_argument("NTable needs n >= 1 and m >= 0");
}

void NTable::check(int i, int j) const {
  if (i < 0 || i > m_ || j < 1 || j > n_) {
    throw std::out_of_range("NTable index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside i in [0, " + std::to_string(m_) + "], j in [1, " +
                            std::to_string(n_) + "]");
  }
}

const mpz_class& NTable::at(int i, int j) const {
  check(i, j);
  return counts_[static_cast<std::size_t>(i) * n_ + (j - 1)];
}

mpz_class& NTable::at(int i, int j) {
  check(i, j);
  return counts_[static_cast<std::size_t>(i) * n_ + (j - 1)];
}

mpz_class NTable::n_leq(int i, int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("component bound k=" + std::to_string(k) + " outside [1, n]");
  mpz_class s = 0;
  for (int j = 1; j <= k; ++j) s += at(i, j);
  return s;
}

mpz_class NTable::row_sum(int i) const { return n_leq(i, n_); }

mpz_class binomial(int m, int i) {
  mpz_class out;
  if (i < 0 || i > m) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
  return out;
}

NTable ntable_from_whitney(const BivarPoly& w, int n, int m) {
  NTable t(n, m);
  for (const auto& [e, c] : w.terms()) {
    const int j = e.x + 1;
    const int i = e.y + n - j;
    if (j > n || i < 0 || i > m) {
      throw ConsistencyError("Whitney term x^" + std::to_string(e.x) + " y^" + std::to_string(e.y) +
                             " has no (edges, components) cell for n=" + std::to_string(n) +
                             ", m=" + std::to_string(m));
    }
    t.at(i, j) = c;
  }
  for (int i = 0; i <= m; ++i) {
    if (t.row_sum(i) != binomial(m, i)) {
      throw ConsistencyError("N-table row " + std::to_string(i) + " sums to " + t.row_sum(i).get_str() +
                             ", expected C(" + std::to_string(m) + "," + std::to_string(i) + ")");
    }
  }
  return t;
}

NTable ntable_bruteforce(const SimpleGraph& g) {
  const auto census = subgraph_census(g, kBruteForceEdgeBudget);
  NTable t(g.order(), g.size());
  for (int i = 0; i <= g.size(); ++i) {
    for (int j = 1; j <= g.order(); ++j) t.at(i, j) = mpz_class(static_cast<unsigned long>(census[i][j]));
  }
  return t;
}

std::vector<mpz_class> mu_vector(const NTable& t) {
  std::vector<mpz_class> mu(t.edges() + 1);
  for (int i = 0; i <= t.edges(); ++i) mu[i] = binomial(t.edges(), i) - t.n_leq(i, 1);
  return mu;
}

std::strong_ordering mu_lex_compare(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  if (a.size() != b.size()) throw DimensionError("mu vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<mpz_class> ReliabilityPoly::power_basis() const {
  std::vector<mpz_class> out(m + 1, 0);
  for (int i = 0; i <= m; ++i) {
    for (int s = 0; s <= m - i; ++s) {
      const mpz_class term = bernstein[i] * binomial(m - i, s);
      if (s % 2 == 0) {
        out[i + s] += term;
      } else {
        out[i + s] -= term;
      }
    }
  }
  return out;
}

ReliabilityPoly reliability(const NTable& t, int k) {
  ReliabilityPoly rp;
  rp.m = t.edges();
  rp.k = k;
  rp.bernstein.resize(rp.m + 1);
  for (int i = 0; i <= rp.m; ++i) rp.bernstein[i] = t.n_leq(i, k);
  return rp;
}

mpq_class eval_bernstein_basis(std::span<const mpq_class> delta, const mpq_class& p_in) {
  const mpq_class p = lowest_terms(p_in);
  const int m = static_cast<int>(delta.size()) - 1;
  const mpq_class q = 1 - p;
  mpq_class sum = 0;
  std::vector<mpq_class> qp(m + 1);
  if (m >= 0) qp[0] = 1;
  for (int i = 1; i <= m; ++i) qp[i] = qp[i - 1] * q;
  mpq_class pp = 1;
  for (int i = 0; i <= m; ++i) {
    sum += delta[i] * pp * qp[m - i];
    pp *= p;
  }
  sum.canonicalize();
  return sum;
}

mpq_class rel_eval(const ReliabilityPoly& rp, const mpq_class& p_in) {
  const mpq_class p = lowest_terms(p_in);
  if (p < 0 || p > 1) throw std::invalid_argument("reliability needs p in [0, 1], got " + p.get_str());
  std::vector<mpq_class> coeffs(rp.bernstein.begin(), rp.bernstein.end());
  return eval_bernstein_basis(coeffs, p);
}

mpq_class reliability_via_tutte(const SimpleGraph& g, const BivarPoly& tutte, const mpq_class& p_in) {
  const mpq_class p = lowest_terms(p_in);
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("the Tutte route needs 0 < p < 1, got " + p.get_str());
  }
  if (!is_connected(g)) throw std::invalid_argument("the Tutte route needs a connected graph");
  const int n = g.order();
  const int m = g.size();
  const mpq_class q = 1 - p;
  mpq_class y0 = 1 / q;
  y0.canonicalize();
  mpq_class scale = 1;
  for (int i = 0; i < n - 1; ++i) scale *= p;
  for (int i = 0; i < m - n + 1; ++i) scale *= q;
  mpq_class out = scale * tutte.evaluate(1, y0);
  out.canonicalize();
  return out;
}

mpq_class reliability_via_tutte(const SimpleGraph& g, const mpq_class& p) {
  return reliability_via_tutte(g, tutte_dc(g), p);
}

std::optional<int> lambda_k(const NTable& t, int k) {
  if (k < 1 || k > t.vertices()) {
    throw std::out_of_range("lambda_k needs 1 <= k <= n, got k=" + std::to_string(k));
  }
  const int m = t.edges();
  for (int x = 0; x <= m; ++x) {
    if (t.n_leq(m - x, k) < binomial(m, m - x)) return x;
  }
  return std::nullopt;
}

mpz_class t_k(const NTable& t, int k) {
  if (k < 1 || k > t.vertices()) {
    throw std::out_of_range("t_k needs 1 <= k <= n, got k=" + std::to_string(k));
  }
  const int i = t.vertices() - k;
  if (i > t.edges()) return 0;
  return t.n_leq(i, k);
}

BernsteinResult bernstein_certify(std::span<const mpq_class> delta, int max_depth) {
  BernsteinResult result;
  result.verdict = BernsteinVerdict::NonnegativeOn01;
  if (delta.empty()) return result;
  const int m = static_cast<int>(delta.size()) - 1;

  struct Piece {
    std::vector<mpq_class> b;
    mpq_class lo;
    mpq_class hi;
    int depth;
  };
  std::vector<Piece> stack;
  {
    Piece root{std::vector<mpq_class>(m + 1), 0, 1, 0};
    for (int i = 0; i <= m; ++i) {
      root.b[i] = delta[i] / binomial(m, i);
      root.b[i].canonicalize();
    }
    stack.push_back(std::move(root));
  }

  bool unknown = false;
  std::size_t visited = 0;
  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    result.depth = std::max(result.depth, piece.depth);
    if (++visited > kMaxBernsteinNodes) {
      unknown = true;
      break;
    }
    // Endpoint control points are exact values of the polynomial.
    if (piece.b.front() < 0) {
      result.verdict = BernsteinVerdict::NegativeWitness;
      result.witness = piece.lo;
      return result;
    }
    if (piece.b.back() < 0) {
      result.verdict = BernsteinVerdict::NegativeWitness;
      result.witness = piece.hi;
      return result;
    }
    if (std::all_of(piece.b.begin(), piece.b.end(), [](const mpq_class& v) { return v >= 0; })) continue;
    if (piece.depth >= max_depth) {
      unknown = true;
      continue;
    }

    std::vector<mpq_class> work = piece.b;
    std::vector<mpq_class> left(m + 1);
    std::vector<mpq_class> right(m + 1);
    left[0] = work[0];
    right[m] = work[m];
    for (int level = 1; level <= m; ++level) {
      for (int i = 0; i + level <= m; ++i) {
        work[i] = (work[i] + work[i + 1]) / 2;
      }
      left[level] = work[0];
      right[m - level] = work[m - level];
    }
    mpq_class mid = (piece.lo + piece.hi) / 2;
    mid.canonicalize();
    stack.push_back({std::move(right), mid, piece.hi, piece.depth + 1});
    stack.push_back({std::move(left), piece.lo, mid, piece.depth + 1});
  }
  if (unknown) result.verdict = BernsteinVerdict::Unknown;
  return result;
}

}  // namespace graphrel
