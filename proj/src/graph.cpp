#include "graphrel/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphrel {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

// Union-find without path compression so that unions can be rolled back.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), rank_(n, 0), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Returns true when a merge happened; push a history record either way.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back({-1, false});
      return false;
    }
    if (rank_[a] < rank_[b]) std::swap(a, b);
    const bool bumped = rank_[a] == rank_[b];
    parent_[b] = a;
    if (bumped) ++rank_[a];
    --count_;
    history_.push_back({b, bumped});
    return true;
  }

  void rollback() {
    const auto [child, bumped] = history_.back();
    history_.pop_back();
    if (child < 0) return;
    const int root = parent_[child];
    parent_[child] = child;
    if (bumped) --rank_[root];
    ++count_;
  }

  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int count_;
  std::vector<std::pair<int, bool>> history_;
};

void census_rec(const std::vector<Edge>& edges, std::size_t index, int chosen,
                RollbackDsu& dsu, SubgraphCensus& out) {
  if (index == edges.size()) {
    ++out[chosen][dsu.count()];
    return;
  }
  census_rec(edges, index + 1, chosen, dsu, out);
  dsu.unite(edges[index].first, edges[index].second);
  census_rec(edges, index + 1, chosen + 1, dsu, out);
  dsu.rollback();
}

Components label_components(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [u, v] : edges) {
    const int a = find(u);
    const int b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Components c;
  c.label.assign(n, -1);
  std::vector<int> root_id(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (root_id[r] < 0) root_id[r] = c.count++;
    c.label[v] = root_id[r];
  }
  return c;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
  check_order(n);
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") has a label outside [0, " + std::to_string(n) + ")");
    }
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (has_edge(a, b)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
    edges_.push_back(make_edge(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[v]); }

bool SimpleGraph::has_edge(int u, int v) const {
  return u != v && ((adj_[u] >> v) & 1U) != 0;
}

SimpleGraph SimpleGraph::with_edge(int u, int v) const {
  std::vector<Edge> e = edges_;
  e.push_back(make_edge(u, v));
  return SimpleGraph(n_, e);
}

SimpleGraph SimpleGraph::complement() const {
  std::vector<Edge> e;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) e.emplace_back(u, v);
    }
  }
  return SimpleGraph(n_, e);
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation length does not match vertex count");
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.push_back(make_edge(perm[u], perm[v]));
  return SimpleGraph(n_, e);
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
      throw std::invalid_argument("multigraph edge label outside [0, n)");
    }
    e = make_edge(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
}

MultiGraph MultiGraph::from_simple(const SimpleGraph& g) {
  return MultiGraph(g.order(), g.edges());
}

int MultiGraph::loop_count() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; }));
}

Components components(const SimpleGraph& g) { return label_components(g.order(), g.edges()); }

Components components(const MultiGraph& g) { return label_components(g.order(), g.edges()); }

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return false;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.order();
}

RankCorank rank_corank(const SimpleGraph& g) {
  const int kappa = components(g).count;
  return {g.order() - kappa, g.size() - g.order() + kappa};
}

RankCorank rank_corank(const MultiGraph& g) {
  const int kappa = components(g).count;
  return {g.order() - kappa, g.size() - g.order() + kappa};
}

SubgraphCensus subgraph_census(const SimpleGraph& g, int max_edges) {
  if (g.size() > max_edges) {
    throw BudgetError("exhaustive subgraph enumeration needs 2^" + std::to_string(g.size()) +
                      " subsets; budget is 2^" + std::to_string(max_edges));
  }
  SubgraphCensus out(g.size() + 1, std::vector<std::uint64_t>(g.order() + 1, 0));
  RollbackDsu dsu(g.order());
  census_rec(g.edges(), 0, 0, dsu, out);
  return out;
}

}  // namespace graphrel
