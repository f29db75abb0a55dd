#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphrel/bivar_poly.hpp"
#include "graphrel/graph.hpp"

namespace graphrel {

inline constexpr int kExpansionEdgeBudget = 26;

// Tutte polynomial by the subgraph expansion over all 2^m edge subsets.
BivarPoly tutte_expansion(const SimpleGraph& g);
// Whitney polynomial by the same expansion: sum of x^(r(G)-r(H)) y^(c(H)).
BivarPoly whitney_expansion(const SimpleGraph& g);

// Memo for deletion-contraction keyed by the canonical form of a minor.
// Safe for concurrent use; entries beyond `max_entries` are not stored.
class TutteMemo {
 public:
  explicit TutteMemo(std::size_t max_entries = 1'000'000) : max_entries_(max_entries) {}

  std::optional<BivarPoly> find(const std::string& key) const;
  void insert(const std::string& key, const BivarPoly& value);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, BivarPoly> table_;
  std::size_t max_entries_;
  mutable std::size_t hits_ = 0;
};

// Deletion-contraction. Loops contribute a factor y each, the graph splits
// into blocks (bridges contribute x), and a block's parallel class of
// multiplicity k between u and v expands as
//   T(G) = T(G - uv) + (1 + y + ... + y^(k-1)) T(G / uv).
BivarPoly tutte_dc(const MultiGraph& g, TutteMemo& memo);
BivarPoly tutte_dc(const MultiGraph& g);
BivarPoly tutte_dc(const SimpleGraph& g, TutteMemo& memo);
BivarPoly tutte_dc(const SimpleGraph& g);

// W_G(x, y) = T_G(x + 1, y + 1).
BivarPoly whitney(const SimpleGraph& g, TutteMemo& memo);
BivarPoly whitney(const SimpleGraph& g);

// [t_1, ..., t_n]: coefficients of W_G(x, 0). Requires g connected.
std::vector<mpz_class> forest_gen(const SimpleGraph& g);
std::vector<mpz_class> forest_gen_from_whitney(const BivarPoly& w, int n);

// W_G(0, 0). Requires g connected.
mpz_class tree_number(const SimpleGraph& g);
// Determinant of a reduced Laplacian by fraction-free elimination.
mpz_class tree_number_mtt(const SimpleGraph& g);

}  // namespace graphrel
