#pragma once
// Points, shifts, normal forms, seeds, the set D(v), shuffles.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "scalar.hpp"

namespace gtmod {

// triangular array; rows[k-1] has k entries
class Point {
 public:
  Point() = default;
  explicit Point(int n) : rows_(n) {
    for (int k = 1; k <= n; ++k) rows_[k - 1].assign(k, Affine());
  }
  static Point from_rows(std::vector<std::vector<Affine>> rows) {
    for (size_t k = 0; k < rows.size(); ++k)
      if (rows[k].size() != k + 1) throw std::invalid_argument("point row " + std::to_string(k + 1) + " has wrong length");
    Point p;
    p.rows_ = std::move(rows);
    return p;
  }
  int n() const { return static_cast<int>(rows_.size()); }
  const Affine& at(int k, int i) const { return rows_.at(k - 1).at(i - 1); }
  Affine& at(int k, int i) { return rows_.at(k - 1).at(i - 1); }
  const Affine& at(Index x) const { return at(x.k, x.i); }
  Affine& at(Index x) { return at(x.k, x.i); }
  const std::vector<Affine>& row(int k) const { return rows_.at(k - 1); }
  std::vector<Affine>& row(int k) { return rows_.at(k - 1); }
  const std::vector<std::vector<Affine>>& rows() const { return rows_; }
  friend bool operator==(const Point& a, const Point& b) { return a.rows_ == b.rows_; }
  std::string to_string() const {
    std::string s = "[";
    for (int k = n(); k >= 1; --k) {
      s += "[";
      for (int i = 1; i <= k; ++i) s += (i > 1 ? "," : "") + at(k, i).to_string();
      s += k > 1 ? "]," : "]";
    }
    return s + "]";
  }

 private:
  std::vector<std::vector<Affine>> rows_;
};

// integral shift; row n is always zero
class Shift {
 public:
  Shift() = default;
  explicit Shift(int n) : rows_(n) {
    for (int k = 1; k <= n; ++k) rows_[k - 1].assign(k, 0);
  }
  // rows 1..n-1 (row n may be given, must be zero)
  static Shift from_rows(int n, const std::vector<std::vector<long>>& rows) {
    if (static_cast<int>(rows.size()) != n - 1 && static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("shift has wrong number of rows");
    Shift z(n);
    for (size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].size() != k + 1) throw std::invalid_argument("shift row has wrong length");
      if (static_cast<int>(k) == n - 1) {
        for (long v : rows[k])
          if (v != 0) throw std::invalid_argument("shift must vanish on row n");
        continue;
      }
      z.rows_[k] = rows[k];
    }
    return z;
  }
  static Shift delta(int n, Index x, long s = 1) {
    if (x.k >= n) throw std::invalid_argument("delta outside rows 1..n-1");
    Shift z(n);
    z.at(x.k, x.i) = s;
    return z;
  }
  int n() const { return static_cast<int>(rows_.size()); }
  long at(int k, int i) const { return rows_.at(k - 1).at(i - 1); }
  long& at(int k, int i) { return rows_.at(k - 1).at(i - 1); }
  long at(Index x) const { return at(x.k, x.i); }
  long& at(Index x) { return at(x.k, x.i); }
  const std::vector<long>& row(int k) const { return rows_.at(k - 1); }
  std::vector<std::vector<long>> inner_rows() const {
    return {rows_.begin(), rows_.end() - (rows_.empty() ? 0 : 1)};
  }
  long norm1() const {
    long s = 0;
    for (auto& r : rows_)
      for (long v : r) s += v < 0 ? -v : v;
    return s;
  }
  Shift& operator+=(const Shift& o) {
    for (size_t k = 0; k < rows_.size(); ++k)
      for (size_t i = 0; i < rows_[k].size(); ++i) rows_[k][i] += o.rows_[k][i];
    return *this;
  }
  Shift& operator-=(const Shift& o) {
    for (size_t k = 0; k < rows_.size(); ++k)
      for (size_t i = 0; i < rows_[k].size(); ++i) rows_[k][i] -= o.rows_[k][i];
    return *this;
  }
  friend Shift operator+(Shift a, const Shift& b) { return a += b; }
  friend Shift operator-(Shift a, const Shift& b) { return a -= b; }
  friend Shift operator*(long s, Shift a) {
    for (auto& r : a.rows_)
      for (long& v : r) v *= s;
    return a;
  }
  auto operator<=>(const Shift&) const = default;
  std::string to_string() const {
    std::string s = "[";
    for (int k = 1; k < n(); ++k) {
      s += (k > 1 ? ",[" : "[");
      for (int i = 1; i <= k; ++i) s += (i > 1 ? "," : "") + std::to_string(at(k, i));
      s += "]";
    }
    return s + "]";
  }

 private:
  std::vector<std::vector<long>> rows_;
};

inline Point operator+(const Point& v, const Shift& z) {
  if (v.n() != z.n()) throw std::invalid_argument("rank mismatch");
  Point r = v;
  for (int k = 1; k < v.n(); ++k)
    for (int i = 1; i <= k; ++i) r.at(k, i) += Affine(z.at(k, i));
  return r;
}

// (sigma v)_{k, sigma(i)} = v_{k,i}
inline Point act(const Permutation& s, const Point& v) {
  Point r = v;
  for (int k = 1; k <= v.n(); ++k)
    for (int i = 1; i <= k; ++i) r.at(k, s(k, i)) = v.at(k, i);
  return r;
}
inline Shift act(const Permutation& s, const Shift& z) {
  Shift r = z;
  for (int k = 1; k <= z.n(); ++k)
    for (int i = 1; i <= k; ++i) r.at(k, s(k, i)) = z.at(k, i);
  return r;
}

struct Block {
  int a, b;  // [a, b], 1-based
  int size() const { return b - a + 1; }
  bool contains(int i) const { return a <= i && i <= b; }
  auto operator<=>(const Block&) const = default;
};

// interval partition of each row; also describes standard parabolic subgroups
class IntervalPartition {
 public:
  IntervalPartition() = default;
  explicit IntervalPartition(int n) : rows_(n) {
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= k; ++i) rows_[k - 1].push_back({i, i});
  }
  static IntervalPartition from_blocks(std::vector<std::vector<Block>> rows) {
    IntervalPartition p;
    for (size_t k = 0; k < rows.size(); ++k) {
      int next = 1;
      for (auto& bl : rows[k]) {
        if (bl.a != next || bl.b < bl.a) throw std::invalid_argument("not an interval partition");
        next = bl.b + 1;
      }
      if (next != static_cast<int>(k) + 2) throw std::invalid_argument("not an interval partition");
    }
    p.rows_ = std::move(rows);
    return p;
  }
  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<Block>& blocks(int k) const { return rows_.at(k - 1); }
  Block block_of(int k, int i) const {
    for (auto& bl : rows_.at(k - 1))
      if (bl.contains(i)) return bl;
    throw std::out_of_range("index outside row");
  }
  bool refines(const IntervalPartition& o) const {
    for (int k = 1; k <= n(); ++k)
      for (auto& bl : blocks(k)) {
        auto ob = o.block_of(k, bl.a);
        if (!ob.contains(bl.b)) return false;
      }
    return true;
  }
  // order of the parabolic subgroup
  long group_order() const {
    long r = 1;
    for (auto& row : rows_)
      for (auto& bl : row)
        for (int t = 2; t <= bl.size(); ++t) r *= t;
    return r;
  }
  auto operator<=>(const IntervalPartition&) const = default;
  std::string to_string() const {
    std::string s;
    for (int k = 1; k <= n(); ++k) {
      s += "row " + std::to_string(k) + ":";
      for (auto& bl : blocks(k)) s += " [" + std::to_string(bl.a) + "," + std::to_string(bl.b) + "]";
      s += "\n";
    }
    return s;
  }

 private:
  std::vector<std::vector<Block>> rows_;
};

struct NormalForm {
  Point point;
  Permutation sigma;  // sigma(v) = point
};

// group each row by Z-class in order of first appearance, sort each group descending
inline NormalForm normal_form(const Point& v) {
  int n = v.n();
  std::vector<std::vector<int>> img(n);
  Point w = v;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> groups;
    for (int i = 1; i <= k; ++i) {
      bool placed = false;
      for (auto& g : groups)
        if (same_class(v.at(k, g.front()), v.at(k, i))) {
          g.push_back(i);
          placed = true;
          break;
        }
      if (!placed) groups.push_back({i});
    }
    std::vector<int> order;
    for (auto& g : groups) {
      std::stable_sort(g.begin(), g.end(),
                       [&](int a, int b) { return *int_diff(v.at(k, a), v.at(k, b)) > 0; });
      order.insert(order.end(), g.begin(), g.end());
    }
    img[k - 1].resize(k);
    for (int pos = 0; pos < k; ++pos) {
      img[k - 1][order[pos] - 1] = pos + 1;
      w.at(k, pos + 1) = v.at(k, order[pos]);
    }
  }
  return {w, Permutation::from_rows(img)};
}

inline bool is_normal_form(const Point& v) {
  for (int k = 1; k <= v.n(); ++k) {
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        auto d = int_diff(v.at(k, i), v.at(k, j));
        if (!d) continue;
        if (*d < 0) return false;
        for (int t = i + 1; t < j; ++t) {
          auto d2 = int_diff(v.at(k, i), v.at(k, t));
          if (!d2) return false;
        }
      }
  }
  return true;
}

// connected components of Omega(v): edges between integrally related entries in rows at distance <= 1
inline std::vector<std::vector<Index>> omega_components(const Point& v) {
  int n = v.n();
  int N = n * (n + 1) / 2;
  std::vector<int> parent(N);
  for (int t = 0; t < N; ++t) parent[t] = t;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      for (int l = k; l <= std::min(n, k + 1); ++l)
        for (int j = 1; j <= l; ++j) {
          if (l == k && j <= i) continue;
          if (same_class(v.at(k, i), v.at(l, j)))
            parent[find(flat_index({k, i}))] = find(flat_index({l, j}));
        }
  std::map<int, std::vector<Index>> comp;
  for (int t = 0; t < N; ++t) comp[find(t)].push_back(unflat_index(t));
  std::vector<std::vector<Index>> r;
  for (auto& [root, c] : comp) r.push_back(c);
  return r;
}

// normal form; rows < n constant on each component; such entries <= row-n neighbours in it
inline bool is_seed(const Point& v) {
  if (!is_normal_form(v)) return false;
  int n = v.n();
  for (auto& comp : omega_components(v)) {
    std::optional<Affine> val;
    for (auto x : comp)
      if (x.k < n) {
        if (!val) val = v.at(x);
        else if (!(v.at(x) == *val)) return false;
      }
    if (!val) continue;
    for (auto x : comp)
      if (x.k == n && *int_diff(v.at(x), *val) < 0) return false;
  }
  return true;
}

struct SeedDecomposition {
  Point seed;
  Shift z;
  Permutation sigma;  // sigma(v) = seed + z
};

// each component below row n takes its minimal value
inline SeedDecomposition seed_of(const Point& v) {
  NormalForm nf = normal_form(v);
  Point s = nf.point;
  int n = v.n();
  for (auto& comp : omega_components(nf.point)) {
    Affine m = nf.point.at(comp.front());
    for (auto x : comp)
      if (*int_diff(nf.point.at(x), m) < 0) m = nf.point.at(x);
    for (auto x : comp)
      if (x.k < n) s.at(x) = m;
  }
  Shift z(n);
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) z.at(k, i) = *int_diff(nf.point.at(k, i), s.at(k, i));
  return {s, z, nf.sigma};
}

// orbit invariant: components meeting row n take the least row-n value in them,
// other components the class representative with constant part in [0,1);
// Z-class blocks of every row sorted canonically
inline Point canonical_seed(const Point& v) {
  Point w = normal_form(v).point;
  int n = v.n();
  Point s = w;
  for (auto& comp : omega_components(w)) {
    std::optional<Affine> m;
    for (auto x : comp)
      if (x.k == n && (!m || *int_diff(w.at(x), *m) < 0)) m = w.at(x);
    if (!m) {
      Affine a = w.at(comp.front());
      m = a - Affine(floor_q(a.constant()));
    }
    for (auto x : comp)
      if (x.k < n) s.at(x) = *m;
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Affine>> groups;
    for (auto& a : s.row(k)) {
      if (!groups.empty() && same_class(groups.back().front(), a)) groups.back().push_back(a);
      else groups.push_back({a});
    }
    std::stable_sort(groups.begin(), groups.end(), [](const auto& g, const auto& h) {
      Affine a = g.front() - Affine(floor_q(g.front().constant()));
      Affine b = h.front() - Affine(floor_q(h.front().constant()));
      return canonical_less(a, b);
    });
    std::vector<Affine> row;
    for (auto& g : groups) row.insert(row.end(), g.begin(), g.end());
    s.row(k) = row;
  }
  return s;
}

inline bool same_orbit(const Point& v, const Point& w) {
  return v.n() == w.n() && canonical_seed(v) == canonical_seed(w);
}

// I(v): maximal runs of equal entries in rows < n; singletons in row n
inline IntervalPartition interval_partition_of(const Point& v) {
  if (!is_normal_form(v)) throw std::invalid_argument("point is not in normal form");
  int n = v.n();
  std::vector<std::vector<Block>> rows(n);
  for (int k = 1; k <= n; ++k) {
    int i = 1;
    while (i <= k) {
      int j = i;
      if (k < n)
        while (j + 1 <= k && same_class(v.at(k, i), v.at(k, j + 1))) ++j;
      rows[k - 1].push_back({i, j});
      i = j + 1;
    }
  }
  return IntervalPartition::from_blocks(rows);
}

inline void require_seed(const Point& v) {
  if (!is_seed(v)) throw std::invalid_argument("point is not a seed: " + v.to_string());
}

inline bool d_set_member(const Point& seed, const Shift& z) {
  require_seed(seed);
  if (z.n() != seed.n()) throw std::invalid_argument("rank mismatch");
  auto ip = interval_partition_of(seed);
  for (int k = 1; k < seed.n(); ++k)
    for (auto& bl : ip.blocks(k))
      for (int i = bl.a; i < bl.b; ++i)
        if (z.at(k, i) < z.at(k, i + 1)) return false;
  return true;
}

// I(v,z): runs of equal z inside the blocks of I(v)
inline IntervalPartition refined_partition(const Point& seed, const Shift& z) {
  if (!d_set_member(seed, z)) throw std::invalid_argument("shift not in D(v)");
  auto ip = interval_partition_of(seed);
  std::vector<std::vector<Block>> rows(seed.n());
  for (int k = 1; k <= seed.n(); ++k)
    for (auto& bl : ip.blocks(k)) {
      int i = bl.a;
      while (i <= bl.b) {
        int j = i;
        while (j + 1 <= bl.b && z.at(k, j + 1) == z.at(k, i)) ++j;
        rows[k - 1].push_back({i, j});
        i = j + 1;
      }
    }
  return IntervalPartition::from_blocks(rows);
}

// all elements of the standard parabolic subgroup with the given orbits
inline std::vector<Permutation> group_elements(const IntervalPartition& p) {
  int n = p.n();
  std::vector<std::vector<std::vector<int>>> rowchoices(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> acc{{}};
    for (auto& bl : p.blocks(k)) {
      std::vector<int> seg(base.begin() + bl.a - 1, base.begin() + bl.b);
      std::vector<std::vector<int>> perms;
      do perms.push_back(seg);
      while (std::next_permutation(seg.begin(), seg.end()));
      std::vector<std::vector<int>> nxt;
      for (auto& a : acc)
        for (auto& q : perms) {
          auto c = a;
          c.insert(c.end(), q.begin(), q.end());
          nxt.push_back(c);
        }
      acc = std::move(nxt);
    }
    rowchoices[k - 1] = acc;
  }
  std::vector<Permutation> out;
  std::vector<std::vector<int>> cur(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(Permutation::from_rows(cur));
      return;
    }
    for (auto& r : rowchoices[k]) {
      cur[k] = r;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  return out;
}

inline bool in_group(const Permutation& s, const IntervalPartition& p) {
  for (int k = 1; k <= p.n(); ++k)
    for (int i = 1; i <= k; ++i)
      if (!p.block_of(k, i).contains(s(k, i))) return false;
  return true;
}

inline std::vector<Simple> group_simples(const IntervalPartition& p) {
  std::vector<Simple> r;
  for (int k = 1; k <= p.n(); ++k)
    for (auto& bl : p.blocks(k))
      for (int i = bl.a; i < bl.b; ++i) r.push_back({k, i});
  return r;
}

inline Permutation longest_element(const IntervalPartition& p) {
  std::vector<std::vector<int>> rows(p.n());
  for (int k = 1; k <= p.n(); ++k) {
    rows[k - 1].resize(k);
    for (auto& bl : p.blocks(k))
      for (int i = bl.a; i <= bl.b; ++i) rows[k - 1][i - 1] = bl.a + bl.b - i;
  }
  return Permutation::from_rows(rows);
}

// omega(I), alpha(I) = s_{b-1}...s_a, beta(I) = alpha(I)^{-1}, I = [a,b] in row k
inline Permutation omega_of(int n, int k, Block I) {
  IntervalPartition single(n);
  std::vector<std::vector<Block>> r;
  for (int l = 1; l <= n; ++l) {
    if (l != k) {
      r.push_back(single.blocks(l));
      continue;
    }
    std::vector<Block> row;
    for (int i = 1; i < I.a; ++i) row.push_back({i, i});
    row.push_back(I);
    for (int i = I.b + 1; i <= k; ++i) row.push_back({i, i});
    r.push_back(row);
  }
  return longest_element(IntervalPartition::from_blocks(r));
}
inline Permutation alpha_of(int n, int k, Block I) {
  Permutation p = Permutation::identity(n);
  for (int i = I.b - 1; i >= I.a; --i) p = p * Permutation::simple(n, {k, i});
  return p;
}
inline Permutation beta_of(int n, int k, Block I) { return alpha_of(n, k, I).inverse(); }

struct SeedData {
  Point seed;
  IntervalPartition blocks;  // I(v)
  long group_order;          // |S_pi|
};

inline SeedData seed_data(const Point& seed) {
  require_seed(seed);
  auto ip = interval_partition_of(seed);
  return {seed, ip, ip.group_order()};
}

// S_pi^z: elements increasing on every block of I(v,z)
inline bool is_shuffle(const Permutation& s, const Point& seed, const Shift& z) {
  auto ip = interval_partition_of(seed);
  if (!in_group(s, ip)) return false;
  auto rp = refined_partition(seed, z);
  for (int k = 1; k <= seed.n(); ++k)
    for (auto& bl : rp.blocks(k))
      for (int i = bl.a; i < bl.b; ++i)
        if (s(k, i) > s(k, i + 1)) return false;
  return true;
}

inline std::vector<Permutation> shuffles(const Point& seed, const Shift& z) {
  auto ip = interval_partition_of(seed);
  std::vector<Permutation> r;
  for (auto& s : group_elements(ip))
    if (is_shuffle(s, seed, z)) r.push_back(s);
  return r;
}

// sigma^z: sort sigma's values increasingly within each block of I(v,z)
inline Permutation shuffle_of(const Permutation& s, const Point& seed, const Shift& z) {
  auto rp = refined_partition(seed, z);
  auto rows = s.rows_one_based();
  for (int k = 1; k <= seed.n(); ++k)
    for (auto& bl : rp.blocks(k)) std::sort(rows[k - 1].begin() + bl.a - 1, rows[k - 1].begin() + bl.b);
  return Permutation::from_rows(rows);
}

// omega_0 prod omega(I) over blocks of I(v,z)
inline Permutation longest_shuffle(const Point& seed, const Shift& z) {
  auto ip = interval_partition_of(seed);
  auto rp = refined_partition(seed, z);
  Permutation w = longest_element(ip);
  return w * longest_element(rp);
}

struct DeltaStep {
  bool valid;
  Block block;  // block of I(v,z) containing the index
};

// whether z +/- delta^{k,i} stays in D(v), and the block of I(v,z) through (k,i)
inline DeltaStep delta_step_valid(const Point& seed, const Shift& z, Index x, int sign) {
  if (x.k >= seed.n()) throw std::invalid_argument("delta step on row n");
  auto rp = refined_partition(seed, z);
  Block I = rp.block_of(x.k, x.i);
  Shift u = z + Shift::delta(seed.n(), x, sign);
  return {d_set_member(seed, u), I};
}

struct OmegaFactorization {
  Permutation shuffle;  // element of S_pi^z
  Permutation factor;   // alpha(I) for '+', beta(I) for '-'
  Shift shifted;
};

// '+': omega_0^{z+delta^{k,a}} = sigma alpha(I); '-': omega_0^{z-delta^{k,b}} = tau beta(I)
inline OmegaFactorization omega_delta_factorization(const Point& seed, const Shift& z, int k, Block I, int sign) {
  auto rp = refined_partition(seed, z);
  bool found = false;
  for (auto& bl : rp.blocks(k))
    if (bl == I) found = true;
  if (!found) throw std::invalid_argument("interval is not a block of I(v,z)");
  int n = seed.n();
  Shift u = z + Shift::delta(n, {k, sign > 0 ? I.a : I.b}, sign > 0 ? 1 : -1);
  if (!d_set_member(seed, u)) throw std::invalid_argument("shifted tableau leaves D(v)");
  Permutation w = longest_shuffle(seed, u);
  Permutation f = sign > 0 ? alpha_of(n, k, I) : beta_of(n, k, I);
  Permutation s = w * f.inverse();
  if (!is_shuffle(s, seed, z)) throw std::logic_error("factorization left the shuffles");
  return {s, f, u};
}

}  // namespace gtmod
