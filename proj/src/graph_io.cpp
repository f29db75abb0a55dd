#include "graphrel/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace graphrel {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside [63, 126]", base + i);
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxVertices) {
    throw ParseError("graph6: multi-byte sizes (n > 62) are not supported", base);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 < body) {
    throw ParseError("graph6: truncated, expected " + std::to_string(body + 1) + " bytes", base + text.size());
  }
  if (text.size() - 1 > body) {
    throw ParseError("graph6: trailing bytes after adjacency data", base + 1 + body);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((last & pad_mask) != 0) {
      throw ParseError("graph6: nonzero padding bits", base + text.size() - 1);
    }
  }
  return SimpleGraph(n, edges);
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    int a = 0;
    int b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw ParseError("edge list: expected two integers on line " + std::to_string(line_no), line_no);
    }
    if (!have_header) {
      if (a < 0 || a > kMaxVertices) {
        throw ParseError("edge list: vertex count " + std::to_string(a) + " unsupported", line_no);
      }
      if (b < 0) throw ParseError("edge list: negative edge count on line " + std::to_string(line_no), line_no);
      n = a;
      m = b;
      have_header = true;
      seen.assign(n, std::vector<bool>(n, false));
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError("edge list: label out of range on line " + std::to_string(line_no), line_no);
    }
    if (a == b) throw ParseError("edge list: loop at vertex " + std::to_string(a) + " on line " +
                                     std::to_string(line_no), line_no);
    if (seen[a][b]) {
      throw ParseError("edge list: duplicate edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") on line " + std::to_string(line_no), line_no);
    }
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError("edge list: more than the declared " + std::to_string(m) + " edges", line_no);
    }
    seen[a][b] = seen[b][a] = true;
    edges.emplace_back(a, b);
  }
  if (!have_header) throw ParseError("edge list: missing \"n m\" header", line_no);
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError("edge list: declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()), line_no);
  }
  return SimpleGraph(n, edges);
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace graphrel
