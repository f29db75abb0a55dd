#include "graphrel/fixtures.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace graphrel::fixtures {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<Edge> bipartite_edges(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  }
  return e;
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(':');
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

int to_int(std::string_view token, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  require(ec == std::errc{} && ptr == token.data() + token.size(),
          "fixture \"" + std::string(spec) + "\": bad integer parameter");
  return value;
}

}  // namespace

SimpleGraph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return SimpleGraph(n, e);
}

SimpleGraph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return SimpleGraph(n, e);
}

SimpleGraph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return SimpleGraph(n, e);
}

SimpleGraph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs both sides nonempty");
  return SimpleGraph(a + b, bipartite_edges(a, b));
}

SimpleGraph complete_minus_matching(int n, int k) {
  require(n >= 1 && k >= 0 && 2 * k <= n, "complete_minus_matching needs 0 <= 2k <= n");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool matched = v == u + 1 && u % 2 == 0 && u < 2 * k;
      if (!matched) e.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, e);
}

SimpleGraph paw() { return SimpleGraph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

SimpleGraph figure1_g() {
  auto e = bipartite_edges(4, 4);
  e.emplace_back(0, 1);
  e.emplace_back(2, 3);
  return SimpleGraph(8, e);
}

SimpleGraph figure1_h() {
  auto e = bipartite_edges(4, 4);
  e.emplace_back(2, 3);
  e.emplace_back(6, 7);
  return SimpleGraph(8, e);
}

SimpleGraph by_name(std::string_view spec) {
  const auto parts = split_colon(spec);
  const std::string_view name = parts.front();
  const auto arity = parts.size() - 1;
  auto arg = [&](std::size_t i) { return to_int(parts[i + 1], spec); };
  auto expect = [&](std::size_t want) {
    require(arity == want, "fixture \"" + std::string(spec) + "\" expects " + std::to_string(want) +
                               " parameter(s)");
  };

  if (name == "figure1_G") return expect(0), figure1_g();
  if (name == "figure1_H") return expect(0), figure1_h();
  if (name == "paw") return expect(0), paw();
  if (name == "path") return expect(1), path(arg(0));
  if (name == "cycle") return expect(1), cycle(arg(0));
  if (name == "complete") return expect(1), complete(arg(0));
  if (name == "complete_bipartite") return expect(2), complete_bipartite(arg(0), arg(1));
  if (name == "complete_minus_matching") return expect(2), complete_minus_matching(arg(0), arg(1));
  throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
}

}  // namespace graphrel::fixtures
