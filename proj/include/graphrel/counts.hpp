#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "graphrel/bivar_poly.hpp"
#include "graphrel/graph.hpp"

namespace graphrel {

inline constexpr int kBruteForceEdgeBudget = 24;

// N_{i,j}: spanning subgraphs with exactly i edges and exactly j components,
// for i in 0..m and j in 1..n.
class NTable {
 public:
  NTable() = default;
  NTable(int n, int m);

  int vertices() const { return n_; }
  int edges() const { return m_; }

  const mpz_class& at(int i, int j) const;
  mpz_class& at(int i, int j);

  // N_i^(k) = sum over j = 1..k of N_{i,j}.
  mpz_class n_leq(int i, int k) const;
  mpz_class row_sum(int i) const;

  friend bool operator==(const NTable&, const NTable&) = default;

 private:
  void check(int i, int j) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<mpz_class> counts_;
};

// N_{i,j} = [x^(j-1) y^(i-n+j)] W. Throws ConsistencyError when a row does not
// sum to C(m, i).
NTable ntable_from_whitney(const BivarPoly& w, int n, int m);
// Direct enumeration of all 2^m edge subsets; m <= kBruteForceEdgeBudget.
NTable ntable_bruteforce(const SimpleGraph& g);

mpz_class binomial(int m, int i);

// mu_i = C(m, i) - N_i^(1).
std::vector<mpz_class> mu_vector(const NTable& t);
std::strong_ordering mu_lex_compare(std::span<const mpz_class> a, std::span<const mpz_class> b);

// R^(k)(p) in the basis p^i (1-p)^(m-i); coefficients are N_i^(k).
struct ReliabilityPoly {
  int m = 0;
  int k = 0;
  std::vector<mpz_class> bernstein;

  // Power-basis coefficients of p^0..p^m, for display.
  std::vector<mpz_class> power_basis() const;
};

ReliabilityPoly reliability(const NTable& t, int k);
// Throws std::invalid_argument for p outside [0, 1].
mpq_class rel_eval(const ReliabilityPoly& rp, const mpq_class& p);

// p^(n-1) (1-p)^(m-n+1) T_G(1, 1/(1-p)); needs 0 < p < 1 and g connected.
mpq_class reliability_via_tutte(const SimpleGraph& g, const BivarPoly& tutte, const mpq_class& p);
mpq_class reliability_via_tutte(const SimpleGraph& g, const mpq_class& p);

// min{ x >= 0 : N_{m-x}^(k) < C(m, m-x) }; nullopt when no removal leaves more
// than k components (k == n).
std::optional<int> lambda_k(const NTable& t, int k);
// t_k = N_{n-k}^(k).
mpz_class t_k(const NTable& t, int k);

enum class BernsteinVerdict { NonnegativeOn01, NegativeWitness, Unknown };

struct BernsteinResult {
  BernsteinVerdict verdict = BernsteinVerdict::Unknown;
  std::optional<mpq_class> witness;  // p with strictly negative value
  int depth = 0;                     // deepest subdivision level visited
};

// Sign certification on [0, 1] of sum delta_i p^i (1-p)^(m-i) by midpoint
// de Casteljau subdivision in exact rationals.
BernsteinResult bernstein_certify(std::span<const mpq_class> delta, int max_depth = 30);

// Exact value of sum delta_i p^i (1-p)^(m-i).
mpq_class eval_bernstein_basis(std::span<const mpq_class> delta, const mpq_class& p);

}  // namespace graphrel
