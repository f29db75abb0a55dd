#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "graphrel/graph.hpp"

namespace graphrel {

// Isomorphism certificate: equal bytes exactly for isomorphic inputs.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Vertex-colored graph with symmetric nonnegative edge weights; the common
// input of the canonizer for simple graphs and multigraph minors.
struct WeightedAdjacency {
  int n = 0;
  std::vector<std::uint32_t> color;   // size n
  std::vector<std::uint32_t> weight;  // row-major n*n, symmetric, zero diagonal

  std::uint32_t at(int u, int v) const { return weight[static_cast<std::size_t>(u) * n + v]; }
};

struct CanonicalLabeling {
  std::vector<int> label;  // vertex -> canonical position
  CanonicalForm form;
};

// Individualization-refinement search returning the lexicographically least
// certificate over all leaves, pruned by automorphisms found along the way.
CanonicalLabeling canonical_labeling(const WeightedAdjacency& g);

CanonicalLabeling canonical_labeling(const SimpleGraph& g);
CanonicalForm canonical_form(const SimpleGraph& g);
// The relabeled copy of g whose vertex order is the canonical one.
SimpleGraph canonical_graph(const SimpleGraph& g);

// Loops become vertex colors, parallel classes become edge weights.
CanonicalForm canonical_form(const MultiGraph& g);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return std::hash<std::string>{}(f.bytes); }
};

}  // namespace graphrel
