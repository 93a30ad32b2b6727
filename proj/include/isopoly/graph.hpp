#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isopoly/permutation.hpp"
#include "isopoly/rational.hpp"
#include "isopoly/tensor.hpp"

namespace isopoly {

/// Raised by the text parsers; `where` names the offending byte offset
/// (graph6) or line number (edge list).
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, long long where_)
      : std::runtime_error(msg), where(where_) {}
  long long where;
};

/// Simple undirected graph on n labeled vertices. Edges are stored once in
/// canonical (min,max) order; loops and multi-edges are rejected.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  void add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("Graph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph::add_edge: loop");
    edges_.insert(std::minmax(u, v));
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    return edges_.count(std::minmax(u, v)) > 0;
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
      if (a == v || b == v) ++d;
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  int n_;
  std::set<std::pair<int, int>> edges_;
};

// ---------------------------------------------------------------------------
// graph6 (standard ASCII encoding, single graph, n < 63)

inline Graph parse_graph6(const std::string& text) {
  // Tolerate a trailing newline; everything else must be payload bytes.
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input", 0);
  const unsigned char first = static_cast<unsigned char>(s[0]);
  if (first == 126) throw ParseError("graph6: n >= 63 not supported", 0);
  if (first < 63 || first > 125) throw ParseError("graph6: malformed header byte", 0);
  const int n = first - 63;
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) - 1 < nbytes)
    throw ParseError("graph6: truncated bit field", static_cast<long long>(s.size()));
  if (static_cast<long long>(s.size()) - 1 > nbytes)
    throw ParseError("graph6: trailing bytes after bit field", 1 + nbytes);

  Graph g(n);
  long long bit = 0;
  // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const long long byte_idx = 1 + bit / 6;
      const unsigned char c = static_cast<unsigned char>(s[static_cast<std::size_t>(byte_idx)]);
      if (c < 63 || c > 126) throw ParseError("graph6: out-of-range byte", byte_idx);
      const int val = c - 63;
      if ((val >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero for a canonical encoding, but McKay's tools
  // always emit zeros, so any nonzero here means a corrupt byte.
  for (long long b = nbits; b < nbytes * 6; ++b) {
    const long long byte_idx = 1 + b / 6;
    const unsigned char c = static_cast<unsigned char>(s[static_cast<std::size_t>(byte_idx)]);
    if ((static_cast<int>(c - 63) >> (5 - b % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit", byte_idx);
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 63) throw std::invalid_argument("emit_graph6: n >= 63 not supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, fill = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        fill = 0;
      }
    }
  if (fill > 0) out.push_back(static_cast<char>(63 + (acc << (6 - fill))));
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list format: first line "n <count>", then "u v" lines, 1-based.

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long lineno = 0;
  int n = -1;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (n < 0) {
      if (tok != "n")
        throw ParseError("edge list: expected header \"n <count>\", line " + std::to_string(lineno),
                         lineno);
      if (!(ls >> n) || n < 0)
        throw ParseError("edge list: bad vertex count, line " + std::to_string(lineno), lineno);
      std::string rest;
      if (ls >> rest)
        throw ParseError("edge list: trailing token on header, line " + std::to_string(lineno),
                         lineno);
      g.emplace(n);
      continue;
    }
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v))
      throw ParseError("edge list: bad token, line " + std::to_string(lineno), lineno);
    std::string rest;
    if (es >> rest)
      throw ParseError("edge list: trailing token, line " + std::to_string(lineno), lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("vertex out of range, line " + std::to_string(lineno), lineno);
    if (u == v) throw ParseError("loop edge, line " + std::to_string(lineno), lineno);
    g->add_edge(u - 1, v - 1);  // duplicates collapse in the edge set
  }
  if (!g) throw ParseError("edge list: missing header line", 0);
  return *g;
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

enum class BuiltinKind { complete, path, cycle, empty };

inline Graph builtin_graph(BuiltinKind kind, int n) {
  if (n < 1) throw std::invalid_argument("builtin_graph: n must be >= 1");
  Graph g(n);
  switch (kind) {
    case BuiltinKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      break;
    case BuiltinKind::path:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case BuiltinKind::cycle:
      if (n < 3) throw std::invalid_argument("builtin_graph: cycle needs n >= 3");
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      break;
    case BuiltinKind::empty:
      break;
  }
  return g;
}

inline MatrixXr adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  MatrixXr a = MatrixXr::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

/// Relabels every edge {u,v} of H as {sigma(u), sigma(v)}. In matrix form the
/// result's adjacency is P^T A_H P for P = perm_matrix(sigma), equivalently
/// Q A_H Q^T with Q = perm_matrix(sigma^{-1}).
inline Graph permute_graph(const Permutation& sigma, const Graph& h) {
  if (sigma.size() != h.vertex_count())
    throw std::invalid_argument("permute_graph: dimension mismatch");
  Graph out(h.vertex_count());
  for (const auto& [u, v] : h.edges()) out.add_edge(sigma(u), sigma(v));
  return out;
}

/// Appends isolated vertices until the graph has n vertices.
inline Graph pad_graph(const Graph& g, int n) {
  if (n < g.vertex_count()) throw std::invalid_argument("pad_graph: target smaller than graph");
  Graph out(n);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

struct IsoWitness {
  Permutation sigma;  // maps H-vertices to G-vertices; sigma(H) is a subgraph of G
  int mapped_edges;   // |edges(sigma(H)) ∩ edges(G)|, = m(H) for a witness
};

/// Backtracking search for sigma with sigma(H) edgewise contained in G.
/// H-vertices are assigned in decreasing-degree order; candidates must have
/// enough G-degree and respect edges to already-assigned neighbours.
inline std::optional<IsoWitness> subgraph_iso_oracle(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("subgraph_iso_oracle: dimension mismatch (pad first)");
  const int n = g.vertex_count();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto backtrack = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int u = order[static_cast<std::size_t>(depth)];
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (h.degree(u) > g.degree(v)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int prev = order[static_cast<std::size_t>(d)];
        if (h.has_edge(u, prev) && !g.has_edge(v, image[static_cast<std::size_t>(prev)])) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(u)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (self(self, depth + 1)) return true;
      image[static_cast<std::size_t>(u)] = -1;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return std::nullopt;
  return IsoWitness{Permutation::from_image(image), h.edge_count()};
}

/// max over all sigma of |edges(sigma(H)) ∩ edges(G)|, by plain enumeration
/// with early exit at m(H). Used to report a value for oracle-backed
/// decisions; independent of the tensor machinery.
inline int max_mapped_edges(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("max_mapped_edges: dimension mismatch");
  const int m = h.edge_count();
  int best = 0;
  for_each_permutation(g.vertex_count(), [&](const Permutation& sigma) {
    if (best == m) return;
    int hit = 0;
    for (const auto& [u, v] : h.edges())
      if (g.has_edge(sigma(u), sigma(v))) ++hit;
    best = std::max(best, hit);
  });
  return best;
}

}  // namespace isopoly
