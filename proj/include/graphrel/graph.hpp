#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphrel/errors.hpp"

namespace graphrel {

inline constexpr int kMaxVertices = 62;

// Unordered pair stored with first <= second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Labeled simple graph on vertices 0..n-1. Edges are kept sorted; each
// vertex also carries an adjacency bitset.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  // Throws std::invalid_argument on loops, duplicates or labels outside [0, n).
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  SimpleGraph with_edge(int u, int v) const;
  SimpleGraph complement() const;
  // perm[v] is the new label of vertex v.
  SimpleGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

// Multiset of edges, loops allowed. Produced by deletion-contraction.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : n_(n) {}
  MultiGraph(int n, std::vector<Edge> edges);

  static MultiGraph from_simple(const SimpleGraph& g);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  int loop_count() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct Components {
  int count = 0;
  std::vector<int> label;  // vertex -> component id in 0..count-1
};

Components components(const SimpleGraph& g);
Components components(const MultiGraph& g);
bool is_connected(const SimpleGraph& g);

struct RankCorank {
  int rank = 0;
  int corank = 0;
};

RankCorank rank_corank(const SimpleGraph& g);
RankCorank rank_corank(const MultiGraph& g);

// census[i][j] is the number of spanning subgraphs with i edges and exactly j
// components (j in 0..n, column 0 unused unless n == 0). Exhaustive over all
// 2^m edge subsets; throws BudgetError when m > max_edges.
using SubgraphCensus = std::vector<std::vector<std::uint64_t>>;
SubgraphCensus subgraph_census(const SimpleGraph& g, int max_edges);

}  // namespace graphrel
