#pragma once
// Polyhedral cones P(Omega+) and the Verma support / essential support tests.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "graphs.hpp"

namespace gtmod {

// sum coef * z >= rhs
struct Inequality {
  std::map<Index, long> coef;
  long rhs = 0;
  bool holds(const Shift& z) const {
    long s = 0;
    for (auto& [x, c] : coef) s += c * z.at(x);
    return s >= rhs;
  }
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [x, c] : coef) {
      if (c == 0) continue;
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      long a = c < 0 ? -c : c;
      if (a != 1) os << a << "*";
      os << "z" << x.k << x.i;
      first = false;
    }
    if (first) os << "0";
    os << " >= " << rhs;
    return os.str();
  }
  auto operator<=>(const Inequality&) const = default;
};

struct Cone {
  int n = 0;
  std::vector<Inequality> inequalities;
  std::vector<Shift> generators;  // monoid generators when known
  bool contains(const Shift& z) const {
    for (auto& q : inequalities)
      if (!q.holds(z)) return false;
    return true;
  }
  std::string to_text() const {
    std::string s;
    for (auto& q : inequalities) s += q.to_string() + "\n";
    for (auto& g : generators) s += "generator " + g.to_string() + "\n";
    return s;
  }
};

// P(Omega+(v+w)) (closed) or its open variant with strict Omega- conditions
inline Cone cone_of(const Point& seed, const Shift& w, bool closed) {
  require_seed(seed);
  if (!d_set_member(seed, w)) throw std::invalid_argument("shift not in D(v): " + w.to_string());
  int n = seed.n();
  Cone c{n, {}, {}};
  GtGraph g = graph_of(seed);
  GtGraph plus = omega_plus(seed + w);
  for (auto& e : g.edges()) {
    if (e.from.k == e.to.k) continue;
    Index hi = e.from.k > e.to.k ? e.from : e.to, lo = e.from.k > e.to.k ? e.to : e.from;
    long d = *int_diff(seed.at(hi), seed.at(lo));
    Inequality q;
    bool in_plus = plus.has(hi, lo);
    if (!in_plus && closed) continue;
    long s = in_plus ? 1 : -1;
    if (hi.k < n) q.coef[hi] += s;
    q.coef[lo] -= s;
    q.rhs = in_plus ? -d : d + 1;
    c.inequalities.push_back(q);
  }
  auto ip = interval_partition_of(seed);
  for (int k = 1; k < n; ++k)
    for (auto& bl : ip.blocks(k))
      for (int i = bl.a; i < bl.b; ++i) {
        Inequality q;
        q.coef[{k, i}] = 1;
        q.coef[{k, i + 1}] = -1;
        c.inequalities.push_back(q);
      }
  if (closed && plus == omega_plus(seed)) {
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) {
        Shift gen(n);
        for (auto x : reachable_from(orient(seed), {k, i}))
          if (x.k < n) gen.at(x) = -1;
        c.generators.push_back(gen);
      }
  }
  return c;
}

// c^{k,i}: -1 on every vertex reachable from (k,i) in Omega->(v)
inline std::vector<Shift> seed_cone_generators(const Point& seed) {
  return cone_of(seed, Shift(seed.n()), true).generators;
}

inline long fo_bound(const Point& seed, const Shift& z) {
  if (!d_set_member(seed, z)) throw std::invalid_argument("shift not in D(v): " + z.to_string());
  return interval_partition_of(seed).group_order() / refined_partition(seed, z).group_order();
}

inline bool in_seed_cone(const Point& seed, const Shift& z) {
  return d_set_member(seed, z) && omega_plus(seed).subgraph_of(omega_plus(seed + z));
}

// z in P(Omega+(v)) whose stabilizer is the standard parabolic G (G refines I(v))
inline Shift parabolic_realization(const Point& seed, const IntervalPartition& G) {
  auto ip = interval_partition_of(seed);
  if (!G.refines(ip)) throw std::invalid_argument("subgroup is not a standard parabolic of S_pi");
  int n = seed.n();
  auto gens = seed_cone_generators(seed);
  Shift z(n);
  for (int k = 1; k < n; ++k)
    for (int i = 2; i <= k; ++i)
      if (ip.block_of(k, i).contains(i - 1) && !G.block_of(k, i).contains(i - 1))
        z += gens[flat_index({k, i})];
  return z;
}

// standard parabolic subgroups of S_pi, as interval partitions
inline std::vector<IntervalPartition> standard_parabolics(const Point& seed) {
  auto ip = interval_partition_of(seed);
  int n = seed.n();
  std::vector<Simple> cuts = group_simples(ip);
  std::vector<IntervalPartition> out;
  for (unsigned mask = 0; mask < (1u << cuts.size()); ++mask) {
    std::vector<std::vector<Block>> rows(n);
    for (int k = 1; k <= n; ++k) {
      int start = 1;
      for (int i = 1; i <= k; ++i) {
        bool join = false;
        for (size_t t = 0; t < cuts.size(); ++t)
          if (cuts[t].k == k && cuts[t].i == i && (mask >> t & 1)) join = true;
        if (!join) {
          rows[k - 1].push_back({start, i});
          start = i + 1;
        }
      }
    }
    out.push_back(IntervalPartition::from_blocks(rows));
  }
  return out;
}

// z_{k-1,j} <= z_{k,i} <= 0 for i <= j, k <= n-1, and z in D(0)
inline void require_verma_shift(const Shift& z) {
  if (!d_set_member(Point(z.n()), z)) throw std::invalid_argument("shift not in D(0): " + z.to_string());
}

inline bool verma_supp_test(const Shift& z) {
  require_verma_shift(z);
  int n = z.n();
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) {
      if (z.at(k, i) > 0) return false;
      if (i < k && z.at(k, i) < z.at(k, i + 1)) return false;
      if (k > 1)
        for (int j = i; j <= k - 1; ++j)
          if (z.at(k - 1, j) > z.at(k, i)) return false;
    }
  return true;
}

// 0 >= z_{n-1,1} >= ... >= z_{n-1,n-1} >= z_{n-2,1} >= ... >= z_{1,1}
inline bool verma_essupp_test(const Shift& z) {
  require_verma_shift(z);
  long prev = 0;
  for (int k = z.n() - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) {
      if (z.at(k, i) > prev) return false;
      prev = z.at(k, i);
    }
  return true;
}

// z_{k,i} = 1 - i
inline Shift staircase(int n) {
  Shift z(n);
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) z.at(k, i) = -(i - 1);
  return z;
}

// rank over Q of a family of shifts
inline int shift_rank(const std::vector<Shift>& gens) {
  if (gens.empty()) return 0;
  int n = gens.front().n();
  std::vector<std::vector<Q>> m;
  for (auto& g : gens) {
    std::vector<Q> row;
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) row.push_back(g.at(k, i));
    m.push_back(row);
  }
  int rank = 0, cols = m.front().size();
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int p = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) p = r;
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
      if (r != rank && m[r][c] != 0) {
        Q f = m[r][c] / m[rank][c];
        for (int t = c; t < cols; ++t) m[r][t] -= f * m[rank][t];
      }
    ++rank;
  }
  return rank;
}

// N-combinations of gens with coefficients <= bound
inline std::vector<Shift> monoid_span(const std::vector<Shift>& gens, long bound) {
  std::vector<Shift> out;
  if (gens.empty()) return out;
  int n = gens.front().n();
  std::function<void(size_t, Shift)> rec = [&](size_t t, Shift acc) {
    if (t == gens.size()) {
      out.push_back(acc);
      return;
    }
    for (long m = 0; m <= bound; ++m) {
      rec(t + 1, acc);
      acc += gens[t];
    }
  };
  rec(0, Shift(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// every shift with entries in [lo, hi] on rows < n
inline void for_each_in_box(int n, long lo, long hi, const std::function<void(const Shift&)>& f) {
  std::vector<Index> idx;
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) idx.push_back({k, i});
  Shift z(n);
  std::function<void(size_t)> rec = [&](size_t t) {
    if (t == idx.size()) {
      f(z);
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      z.at(idx[t]) = v;
      rec(t + 1);
    }
    z.at(idx[t]) = 0;
  };
  rec(0);
}

struct ConeFamilyMember {
  GtGraph plus;          // Omega+(v+z)
  Cone cone;             // closed cone of that graph
  std::vector<Shift> members;
};

// group the z in a box satisfying pred by their Omega+ graph; keep inclusion-minimal graphs when minimal
inline std::vector<ConeFamilyMember> cone_family(const Point& seed, long lo, long hi,
                                                 const std::function<bool(const Shift&)>& pred, bool minimal) {
  std::map<GtGraph, std::vector<Shift>> groups;
  for_each_in_box(seed.n(), lo, hi, [&](const Shift& z) {
    if (d_set_member(seed, z) && pred(z)) groups[omega_plus(seed + z)].push_back(z);
  });
  std::vector<ConeFamilyMember> out;
  for (auto& [g, zs] : groups) {
    if (minimal) {
      bool dominated = false;
      for (auto& [h, ws] : groups)
        if (!(h == g) && h.subgraph_of(g)) dominated = true;
      if (dominated) continue;
    }
    out.push_back({g, cone_of(seed, zs.front(), true), zs});
  }
  return out;
}

}  // namespace gtmod
