#include "graphrel/tutte.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "graphrel/canonical.hpp"

namespace graphrel {

namespace {

// Loopless multigraph as a symmetric multiplicity matrix.
struct Minor {
  int n = 0;
  std::vector<std::uint32_t> w;

  std::uint32_t at(int u, int v) const { return w[static_cast<std::size_t>(u) * n + v]; }
  std::uint32_t& at(int u, int v) { return w[static_cast<std::size_t>(u) * n + v]; }
};

Minor make_minor(int n) {
  Minor m;
  m.n = n;
  m.w.assign(static_cast<std::size_t>(n) * n, 0);
  return m;
}

Minor drop_isolated(const Minor& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v) {
    for (int u = 0; u < g.n; ++u) {
      if (g.at(v, u) != 0) {
        keep.push_back(v);
        break;
      }
    }
  }
  if (static_cast<int>(keep.size()) == g.n) return g;
  Minor out = make_minor(static_cast<int>(keep.size()));
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) out.at(i, j) = g.at(keep[i], keep[j]);
  }
  return out;
}

// 1 + y + ... + y^(k-1), optionally with x added (bridge class).
BivarPoly parallel_class(std::uint32_t k, bool with_x) {
  BivarPoly p;
  if (with_x) {
    p.add_term(1, 0, 1);
    for (std::uint32_t e = 1; e < k; ++e) p.add_term(0, static_cast<int>(e), 1);
  } else {
    for (std::uint32_t e = 0; e < k; ++e) p.add_term(0, static_cast<int>(e), 1);
  }
  return p;
}

// Edge sets of the blocks (maximal 2-connected pieces, bridges included).
std::vector<std::vector<Edge>> blocks(const Minor& g) {
  std::vector<int> disc(g.n, -1);
  std::vector<int> low(g.n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u = 0; u < g.n; ++u) {
      if (u == v || g.at(v, u) == 0 || u == parent) continue;
      if (disc[u] < 0) {
        stack.push_back(make_edge(v, u));
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<Edge> block;
          const Edge stop = make_edge(v, u);
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == stop) break;
          }
          out.push_back(std::move(block));
        }
      } else if (disc[u] < disc[v]) {
        stack.push_back(make_edge(v, u));
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return out;
}

Minor block_minor(const Minor& g, const std::vector<Edge>& block) {
  std::vector<int> verts;
  for (const auto& [u, v] : block) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  Minor out = make_minor(static_cast<int>(verts.size()));
  for (const auto& [u, v] : block) {
    out.at(index(u), index(v)) = out.at(index(v), index(u)) = g.at(u, v);
  }
  return out;
}

std::string memo_key(const Minor& g) {
  WeightedAdjacency wa;
  wa.n = g.n;
  wa.color.assign(g.n, 0);
  wa.weight = g.w;
  return canonical_labeling(wa).form.bytes;
}

BivarPoly tutte_minor(const Minor& input, TutteMemo& memo) {
  const Minor g = drop_isolated(input);
  if (g.n == 0) return BivarPoly::constant(1);
  if (g.n == 2) return parallel_class(g.at(0, 1), true);

  const std::string key = memo_key(g);
  if (auto hit = memo.find(key)) return *hit;

  BivarPoly result;
  const auto parts = blocks(g);
  if (parts.size() > 1) {
    result = BivarPoly::constant(1);
    for (const auto& block : parts) result = result * tutte_minor(block_minor(g, block), memo);
  } else {
    // 2-connected on >= 3 vertices: no class is a bridge class.
    int bu = -1;
    int bv = -1;
    std::uint32_t best = 0;
    for (int u = 0; u < g.n; ++u) {
      for (int v = u + 1; v < g.n; ++v) {
        if (g.at(u, v) > best) {
          best = g.at(u, v);
          bu = u;
          bv = v;
        }
      }
    }
    Minor deleted = g;
    deleted.at(bu, bv) = deleted.at(bv, bu) = 0;

    Minor contracted = make_minor(g.n - 1);
    auto map = [&](int v) { return v == bv ? bu : (v > bv ? v - 1 : v); };
    for (int u = 0; u < g.n; ++u) {
      for (int v = u + 1; v < g.n; ++v) {
        if ((u == bu && v == bv) || g.at(u, v) == 0) continue;
        const int a = map(u);
        const int b = map(v);
        contracted.at(a, b) += g.at(u, v);
        contracted.at(b, a) += g.at(u, v);
      }
    }
    result = tutte_minor(deleted, memo) + parallel_class(best, false) * tutte_minor(contracted, memo);
  }
  memo.insert(key, result);
  return result;
}

// (t - 1)^a expanded: coefficient of t^s is C(a, s) (-1)^(a - s).
std::vector<mpz_class> minus_one_power(int a) {
  std::vector<mpz_class> out(a + 1);
  for (int s = 0; s <= a; ++s) {
    mpz_bin_uiui(out[s].get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(s));
    if ((a - s) % 2 != 0) out[s] = -out[s];
  }
  return out;
}

void require_connected(const SimpleGraph& g, const char* what) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

}  // namespace

std::optional<BivarPoly> TutteMemo::find(const std::string& key) const {
  std::lock_guard lock(mu_);
  const auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void TutteMemo::insert(const std::string& key, const BivarPoly& value) {
  std::lock_guard lock(mu_);
  if (table_.size() >= max_entries_) return;
  table_.try_emplace(key, value);
}

std::size_t TutteMemo::size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

std::size_t TutteMemo::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

BivarPoly tutte_expansion(const SimpleGraph& g) {
  const auto census = subgraph_census(g, kExpansionEdgeBudget);
  const int n = g.order();
  const int kappa = components(g).count;
  BivarPoly out;
  for (int i = 0; i <= g.size(); ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::uint64_t count = census[i][j];
      if (count == 0) continue;
      const auto px = minus_one_power(j - kappa);
      const auto py = minus_one_power(i - n + j);
      const mpz_class c(static_cast<unsigned long>(count));
      for (std::size_t s = 0; s < px.size(); ++s) {
        for (std::size_t t = 0; t < py.size(); ++t) {
          out.add_term(static_cast<int>(s), static_cast<int>(t), c * px[s] * py[t]);
        }
      }
    }
  }
  return out;
}

BivarPoly whitney_expansion(const SimpleGraph& g) {
  const auto census = subgraph_census(g, kExpansionEdgeBudget);
  const int n = g.order();
  const int kappa = components(g).count;
  BivarPoly out;
  for (int i = 0; i <= g.size(); ++i) {
    for (int j = 1; j <= n; ++j) {
      if (census[i][j] != 0) {
        out.add_term(j - kappa, i - n + j, mpz_class(static_cast<unsigned long>(census[i][j])));
      }
    }
  }
  if (n == 0) out = BivarPoly::constant(1);
  return out;
}

BivarPoly tutte_dc(const MultiGraph& g, TutteMemo& memo) {
  Minor m = make_minor(g.order());
  int loops = 0;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      ++loops;
    } else {
      ++m.at(u, v);
      ++m.at(v, u);
    }
  }
  BivarPoly t = tutte_minor(m, memo);
  return loops == 0 ? t : t * BivarPoly::monomial(0, loops);
}

BivarPoly tutte_dc(const MultiGraph& g) {
  TutteMemo memo;
  return tutte_dc(g, memo);
}

BivarPoly tutte_dc(const SimpleGraph& g, TutteMemo& memo) { return tutte_dc(MultiGraph::from_simple(g), memo); }

BivarPoly tutte_dc(const SimpleGraph& g) {
  TutteMemo memo;
  return tutte_dc(g, memo);
}

BivarPoly whitney(const SimpleGraph& g, TutteMemo& memo) { return tutte_dc(g, memo).shifted(1, 1); }

BivarPoly whitney(const SimpleGraph& g) {
  TutteMemo memo;
  return whitney(g, memo);
}

std::vector<mpz_class> forest_gen_from_whitney(const BivarPoly& w, int n) {
  auto slice = w.y_zero_slice();
  slice.resize(n);
  return slice;
}

std::vector<mpz_class> forest_gen(const SimpleGraph& g) {
  require_connected(g, "forest_gen");
  return forest_gen_from_whitney(whitney(g), g.order());
}

mpz_class tree_number(const SimpleGraph& g) {
  require_connected(g, "tree_number");
  return whitney(g).coeff(0, 0);
}

mpz_class tree_number_mtt(const SimpleGraph& g) {
  require_connected(g, "tree_number_mtt");
  const int d = g.order() - 1;
  if (d == 0) return 1;
  std::vector<std::vector<mpz_class>> a(d, std::vector<mpz_class>(d, 0));
  for (int v = 0; v < d; ++v) a[v][v] = g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    if (u < d && v < d) {
      a[u][v] = -1;
      a[v][u] = -1;
    }
  }
  // Bareiss: every intermediate division is exact.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < d; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[d - 1][d - 1];
}

}  // namespace graphrel
