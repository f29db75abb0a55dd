#include "graphrel/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace graphrel {

namespace {

using Cells = std::vector<std::vector<int>>;

constexpr std::size_t kMaxStoredAutomorphisms = 256;

void append_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

class Canonizer {
 public:
  explicit Canonizer(const WeightedAdjacency& g) : g_(g) {}

  CanonicalLabeling run() {
    Cells cells;
    if (g_.n > 0) {
      std::vector<int> order(g_.n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return g_.color[a] < g_.color[b]; });
      for (int v : order) {
        if (cells.empty() || g_.color[cells.back().front()] != g_.color[v]) cells.emplace_back();
        cells.back().push_back(v);
      }
    }
    std::vector<int> fixed;
    visit(std::move(cells), fixed);

    CanonicalLabeling out;
    out.label.assign(g_.n, 0);
    for (int pos = 0; pos < g_.n; ++pos) out.label[best_lab_[pos]] = pos;
    out.form.bytes = best_;
    return out;
  }

 private:
  // Equitable refinement: split every cell by the multiset of
  // (neighbor cell, weight) pairs until the partition is stable.
  void refine(Cells& cells) const {
    std::vector<int> cell_of(g_.n);
    std::vector<std::uint64_t> sig;
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      }
      Cells next;
      next.reserve(cells.size());
      bool split = false;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint64_t>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          sig.clear();
          for (int u = 0; u < g_.n; ++u) {
            const std::uint32_t w = g_.at(v, u);
            if (u != v && w != 0) {
              sig.push_back((static_cast<std::uint64_t>(cell_of[u]) << 32) | w);
            }
          }
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(sig, v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) {
            if (i != 0) split = true;
            next.emplace_back();
          }
          next.back().push_back(keyed[i].second);
        }
      }
      cells = std::move(next);
      if (!split) return;
    }
  }

  std::string certificate(const std::vector<int>& lab) const {
    std::string out;
    out.reserve(4 + 4 * g_.n + 2 * g_.n * g_.n);
    append_u32(out, static_cast<std::uint32_t>(g_.n));
    for (int v : lab) append_u32(out, g_.color[v]);
    for (int i = 0; i < g_.n; ++i) {
      for (int j = i + 1; j < g_.n; ++j) append_u32(out, g_.at(lab[i], lab[j]));
    }
    return out;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> gamma(g_.n);
    for (int i = 0; i < g_.n; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  // Orbit representatives of the known automorphisms that fix `fixed` pointwise.
  std::vector<int> stabilizer_orbits(const std::vector<int>& fixed) const {
    std::vector<int> root(g_.n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < g_.n; ++v) root[v] = find(v);
    return root;
  }

  void visit(Cells cells, std::vector<int>& fixed) {
    refine(cells);
    if (cells.size() == static_cast<std::size_t>(g_.n)) {
      std::vector<int> lab;
      lab.reserve(g_.n);
      for (const auto& c : cells) lab.push_back(c.front());
      std::string cert = certificate(lab);
      if (!have_best_) {
        have_best_ = true;
        first_ = best_ = cert;
        first_lab_ = best_lab_ = lab;
      } else if (cert < best_) {
        best_ = std::move(cert);
        best_lab_ = std::move(lab);
      } else if (cert == best_) {
        record_automorphism(best_lab_, lab);
      } else if (cert == first_) {
        record_automorphism(first_lab_, lab);
      }
      return;
    }

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }

    std::vector<int> explored;
    for (int v : cells[target]) {
      if (!explored.empty()) {
        const auto orbit = stabilizer_orbits(fixed);
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](int u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c]) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      fixed.push_back(v);
      visit(std::move(child), fixed);
      fixed.pop_back();
      explored.push_back(v);
    }
  }

  const WeightedAdjacency& g_;
  bool have_best_ = false;
  std::string best_;
  std::string first_;
  std::vector<int> best_lab_;
  std::vector<int> first_lab_;
  std::vector<std::vector<int>> automorphisms_;
};

WeightedAdjacency to_weighted(const SimpleGraph& g) {
  WeightedAdjacency w;
  w.n = g.order();
  w.color.assign(w.n, 0);
  w.weight.assign(static_cast<std::size_t>(w.n) * w.n, 0);
  for (const auto& [u, v] : g.edges()) {
    w.weight[static_cast<std::size_t>(u) * w.n + v] = 1;
    w.weight[static_cast<std::size_t>(v) * w.n + u] = 1;
  }
  return w;
}

}  // namespace

CanonicalLabeling canonical_labeling(const WeightedAdjacency& g) { return Canonizer(g).run(); }

CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
  return canonical_labeling(to_weighted(g));
}

CanonicalForm canonical_form(const SimpleGraph& g) { return canonical_labeling(g).form; }

SimpleGraph canonical_graph(const SimpleGraph& g) {
  const auto lab = canonical_labeling(g);
  return g.relabeled(lab.label);
}

CanonicalForm canonical_form(const MultiGraph& g) {
  WeightedAdjacency w;
  w.n = g.order();
  w.color.assign(w.n, 0);
  w.weight.assign(static_cast<std::size_t>(w.n) * w.n, 0);
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      ++w.color[u];
    } else {
      ++w.weight[static_cast<std::size_t>(u) * w.n + v];
      ++w.weight[static_cast<std::size_t>(v) * w.n + u];
    }
  }
  return canonical_labeling(w).form;
}

}  // namespace graphrel
