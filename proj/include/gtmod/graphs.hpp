#pragma once
// The graph Omega(v), its orientation, reduction and expansion.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.hpp"

namespace gtmod {

struct Edge {
  Index from, to;
  auto operator<=>(const Edge&) const = default;
};

class GtGraph {
 public:
  GtGraph() = default;
  GtGraph(int n, bool oriented) : n_(n), oriented_(oriented) {}
  int n() const { return n_; }
  bool oriented() const { return oriented_; }
  const std::set<Edge>& edges() const { return edges_; }
  void add(Index a, Index b) {
    if (!oriented_ && b < a) std::swap(a, b);
    edges_.insert({a, b});
  }
  bool has(Index a, Index b) const {
    if (!oriented_ && b < a) std::swap(a, b);
    return edges_.count({a, b}) > 0;
  }
  bool subgraph_of(const GtGraph& o) const {
    for (auto& e : edges_)
      if (!o.edges_.count(e)) return false;
    return true;
  }
  friend bool operator==(const GtGraph& a, const GtGraph& b) {
    return a.n_ == b.n_ && a.oriented_ == b.oriented_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const GtGraph& a, const GtGraph& b) { return a.edges_ < b.edges_; }

  std::string to_dot(const std::string& name = "G") const {
    std::ostringstream os;
    os << (oriented_ ? "digraph " : "graph ") << name << " {\n";
    for (int k = n_; k >= 1; --k) {
      os << "  { rank=same;";
      for (int i = 1; i <= k; ++i) os << " \"" << k << "," << i << "\";";
      os << " }\n";
    }
    for (auto& e : edges_)
      os << "  \"" << e.from.k << "," << e.from.i << "\" " << (oriented_ ? "->" : "--") << " \"" << e.to.k << ","
         << e.to.i << "\";\n";
    os << "}\n";
    return os.str();
  }
  std::string to_text() const {
    std::ostringstream os;
    for (auto& e : edges_)
      os << e.from.k << e.from.i << (oriented_ ? " -> " : " -- ") << e.to.k << e.to.i << "\n";
    return os.str();
  }

 private:
  int n_ = 0;
  bool oriented_ = false;
  std::set<Edge> edges_;
};

inline GtGraph graph_of(const Point& v) {
  int n = v.n();
  GtGraph g(n, false);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      for (int l = k; l <= std::min(n, k + 1); ++l)
        for (int j = 1; j <= l; ++j) {
          if (l == k && j <= i) continue;
          if (same_class(v.at(k, i), v.at(l, j))) g.add({k, i}, {l, j});
        }
  return g;
}

// Omega->(p): same row i -> j for i < j; between rows k, k-1 downward iff p_{k,i} - p_{k-1,j} >= 0
inline GtGraph orient(const Point& p) {
  GtGraph u = graph_of(p), g(p.n(), true);
  for (auto& e : u.edges()) {
    Index a = e.from, b = e.to;  // a < b
    if (a.k == b.k) {
      g.add(a, b);
      continue;
    }
    Index hi = a.k > b.k ? a : b, lo = a.k > b.k ? b : a;
    if (*int_diff(p.at(hi), p.at(lo)) >= 0) g.add(hi, lo);
    else g.add(lo, hi);
  }
  return g;
}

inline GtGraph orient(const Point& seed, const Shift& z) {
  if (!d_set_member(seed, z)) throw std::invalid_argument("shift not in D(v): " + z.to_string());
  return orient(seed + z);
}

struct PlusMinus {
  GtGraph plus, minus;  // undirected inter-row edges
};

inline PlusMinus split(const GtGraph& oriented) {
  PlusMinus r{GtGraph(oriented.n(), false), GtGraph(oriented.n(), false)};
  for (auto& e : oriented.edges()) {
    if (e.from.k == e.to.k) continue;
    if (e.from.k > e.to.k) r.plus.add(e.from, e.to);
    else r.minus.add(e.from, e.to);
  }
  return r;
}

inline GtGraph omega_plus(const Point& p) { return split(orient(p)).plus; }

namespace detail {
inline std::vector<std::vector<bool>> reach(const GtGraph& g) {
  int N = g.n() * (g.n() + 1) / 2;
  std::vector<std::vector<int>> adj(N);
  for (auto& e : g.edges()) adj[flat_index(e.from)].push_back(flat_index(e.to));
  std::vector<std::vector<bool>> r(N, std::vector<bool>(N, false));
  for (int s = 0; s < N; ++s) {
    std::vector<int> st{s};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (!r[s][y]) {
          r[s][y] = true;
          st.push_back(y);
        }
    }
  }
  return r;
}
inline std::vector<std::vector<bool>> acyclic_reach(const GtGraph& g) {
  auto r = reach(g);
  for (size_t a = 0; a < r.size(); ++a)
    if (r[a][a]) throw std::invalid_argument("graph has a directed cycle");
  return r;
}
}  // namespace detail

// vertices reachable from x (x included)
inline std::vector<Index> reachable_from(const GtGraph& g, Index x) {
  auto r = detail::reach(g);
  std::vector<Index> out{x};
  int N = static_cast<int>(r.size());
  for (int t = 0; t < N; ++t)
    if (r[flat_index(x)][t] && t != flat_index(x)) out.push_back(unflat_index(t));
  std::sort(out.begin(), out.end());
  return out;
}

// transitive reduction
inline GtGraph reduce(const GtGraph& g) {
  auto r = detail::acyclic_reach(g);
  GtGraph out(g.n(), true);
  for (auto& e : g.edges()) {
    int b = flat_index(e.to);
    bool implied = false;
    for (auto& f : g.edges())
      if (f.from == e.from && f.to != e.to && r[flat_index(f.to)][b]) {
        implied = true;
        break;
      }
    if (!implied) out.add(e.from, e.to);
  }
  return out;
}

// add every implied edge between rows at distance <= 1
inline GtGraph expand(const GtGraph& g) {
  auto r = detail::acyclic_reach(g);
  GtGraph out(g.n(), true);
  int N = static_cast<int>(r.size());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (r[a][b]) {
        Index x = unflat_index(a), y = unflat_index(b);
        if (std::abs(x.k - y.k) <= 1) out.add(x, y);
      }
  return out;
}

}  // namespace gtmod
