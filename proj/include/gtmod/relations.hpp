#pragma once
// gl(n) relations on tableaux, highest weight tableaux, reachability certificates,
// and the structure of Gamma on a slice.

#include <optional>
#include <string>
#include <vector>

#include "module.hpp"

namespace gtmod {

struct RelationReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Chevalley-Serre relations on each given tableau
inline RelationReport verify_rep_relations(const UniversalModule& M, const std::vector<TableauKey>& keys) {
  RelationReport rep;
  int n = M.n();
  auto X = [&](int k, const TableauVector& t) { return M.act_E(k, k + 1, t); };
  auto Y = [&](int k, const TableauVector& t) { return M.act_E(k + 1, k, t); };
  auto H = [&](int k, const TableauVector& t) { return M.act_E(k, k, t); };
  auto check = [&](bool ok, const std::string& what, const TableauKey& key) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what + " on " + key.to_string());
  };
  for (auto& key : keys) {
    TableauVector t(key);
    for (int k = 1; k < n; ++k)
      for (int l = 1; l < n; ++l) {
        TableauVector c = X(k, Y(l, t)) - Y(l, X(k, t));
        TableauVector want = k == l ? H(k, t) - H(k + 1, t) : TableauVector();
        check(c == want, "[E" + std::to_string(k) + std::to_string(k + 1) + ",E" + std::to_string(l + 1) +
                             std::to_string(l) + "]",
              key);
      }
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k < n; ++k) {
        Scalar w = Scalar((j == k ? 1 : 0) - (j == k + 1 ? 1 : 0));
        check(H(j, X(k, t)) - X(k, H(j, t)) == X(k, t).scaled(w), "[H" + std::to_string(j) + ",X" + std::to_string(k) + "]", key);
        check(H(j, Y(k, t)) - Y(k, H(j, t)) == Y(k, t).scaled(-w), "[H" + std::to_string(j) + ",Y" + std::to_string(k) + "]", key);
      }
    for (int k = 1; k < n; ++k)
      for (int l = 1; l < n; ++l) {
        int d = std::abs(k - l);
        if (d >= 2) {
          check((X(k, X(l, t)) - X(l, X(k, t))).is_zero(), "[X" + std::to_string(k) + ",X" + std::to_string(l) + "]", key);
          check((Y(k, Y(l, t)) - Y(l, Y(k, t))).is_zero(), "[Y" + std::to_string(k) + ",Y" + std::to_string(l) + "]", key);
        } else if (d == 1) {
          TableauVector sx = X(k, X(k, X(l, t))) - X(k, X(l, X(k, t))).scaled(2) + X(l, X(k, X(k, t)));
          TableauVector sy = Y(k, Y(k, Y(l, t))) - Y(k, Y(l, Y(k, t))).scaled(2) + Y(l, Y(k, Y(k, t)));
          check(sx.is_zero(), "Serre X" + std::to_string(k) + "," + std::to_string(l), key);
          check(sy.is_zero(), "Serre Y" + std::to_string(k) + "," + std::to_string(l), key);
        }
      }
  }
  return rep;
}

// tableaux D_sigma(v+z) with z in D(v), max |z_{k,i}| <= depth
inline std::vector<TableauKey> tableaux_up_to(const UniversalModule& M, long depth) {
  std::vector<TableauKey> out;
  for_each_in_box(M.n(), -depth, depth, [&](const Shift& z) {
    if (!M.in_d(z)) return;
    for (auto& k : M.slice_basis(z)) out.push_back(k);
  });
  return out;
}

// lambda~ = lambda + rho~, rho~ = (0,-1,...,-(n-1))
inline std::vector<Affine> shifted_weight(const std::vector<Affine>& lambda) {
  std::vector<Affine> r = lambda;
  for (size_t j = 0; j < r.size(); ++j) r[j] -= Affine(static_cast<long>(j));
  return r;
}

inline bool is_dominant(const std::vector<Affine>& lt) {
  for (size_t i = 0; i < lt.size(); ++i)
    for (size_t j = i + 1; j < lt.size(); ++j) {
      auto d = int_diff(lt[i], lt[j]);
      if (d && *d < 0) return false;
    }
  return true;
}

// sigma in S_n as a one-line array (1-based); row k holds lambda~_{sigma^{-1}(1..k)}
inline Point hw_tableau(const std::vector<Affine>& lambda, const std::vector<int>& sigma) {
  int n = static_cast<int>(lambda.size());
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation has wrong size");
  auto lt = shifted_weight(lambda);
  if (!is_dominant(lt)) throw std::invalid_argument("lambda + rho~ is not dominant");
  std::vector<int> inv(n);
  std::vector<bool> seen(n, false);
  for (int j = 0; j < n; ++j) {
    if (sigma[j] < 1 || sigma[j] > n || seen[sigma[j] - 1]) throw std::invalid_argument("not a permutation");
    seen[sigma[j] - 1] = true;
    inv[sigma[j] - 1] = j;
  }
  std::vector<std::vector<Affine>> rows(n);
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j) rows[k - 1].push_back(lt[inv[j - 1]]);
  return normal_form(Point::from_rows(rows)).point;
}

// sigma . lambda = sigma(lambda~) - rho~
inline std::vector<Affine> dot_action(const std::vector<Affine>& lambda, const std::vector<int>& sigma) {
  auto lt = shifted_weight(lambda);
  int n = static_cast<int>(lambda.size());
  std::vector<Affine> r(n);
  for (int j = 0; j < n; ++j) r[sigma[j] - 1] = lt[j];
  for (int j = 0; j < n; ++j) r[j] += Affine(static_cast<long>(j));
  return r;
}

struct CertStep {
  Index at;
  int sign;  // +1 raise at (k,i), -1 lower
  Shift from, to;
  Scalar leading;  // e_I or f_I at the source; |J| for sweep steps
};

struct Certificate {
  Point seed;
  Shift start, target;
  std::vector<CertStep> steps;
};

namespace detail {
inline std::optional<CertStep> try_step(const Point& seed, const Shift& z, Index x, int sign) {
  Shift u = z + Shift::delta(seed.n(), x, sign);
  if (!d_set_member(seed, u)) return std::nullopt;
  Block I = refined_partition(seed, z).block_of(x.k, x.i);
  Point p = seed + z;
  Scalar lead = sign > 0 ? e_fun(x.k, I).evaluate(p) : f_fun(x.k, I).evaluate(p);
  if (lead.is_zero()) return std::nullopt;
  return CertStep{x, sign, z, u, lead};
}
}  // namespace detail

// path z -> y along delta steps, assuming Omega+(v+z) is contained in Omega+(v+y)
inline std::optional<Certificate> reachability_certificate(const Point& seed, const Shift& z, const Shift& y) {
  require_seed(seed);
  if (!d_set_member(seed, z) || !d_set_member(seed, y)) throw std::invalid_argument("shift not in D(v)");
  GtGraph target_plus = omega_plus(seed + y);
  if (!omega_plus(seed + z).subgraph_of(target_plus))
    throw std::invalid_argument("hypothesis fails: Omega+(v+z) is not contained in Omega+(v+y)");
  int n = seed.n();
  Certificate cert{seed, z, y, {}};
  Shift cur = z;
  while (!(cur == y)) {
    GtGraph oy = orient(seed + y);
    std::vector<std::pair<Index, int>> cands;
    std::vector<Index> lower, upper;
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) {
        if (cur.at(k, i) < y.at(k, i)) lower.push_back({k, i});
        if (cur.at(k, i) > y.at(k, i)) upper.push_back({k, i});
      }
    auto set_has = [](const std::vector<Index>& s, Index x) { return std::find(s.begin(), s.end(), x) != s.end(); };
    for (auto x : lower) {
      bool source = true;
      for (auto& e : oy.edges())
        if (e.to == x && set_has(lower, e.from)) source = false;
      if (source) cands.push_back({x, +1});
    }
    for (auto x : upper) {
      bool sink = true;
      for (auto& e : oy.edges())
        if (e.from == x && set_has(upper, e.to)) sink = false;
      if (sink) cands.push_back({x, -1});
    }
    std::optional<CertStep> chosen;
    for (auto [x, s] : cands) {
      auto st = detail::try_step(seed, cur, x, s);
      if (!st) continue;
      GtGraph mid = omega_plus(seed + st->to);
      if (!omega_plus(seed + cur).subgraph_of(mid) || !mid.subgraph_of(target_plus)) continue;
      chosen = st;
      break;
    }
    if (!chosen) return std::nullopt;
    cert.steps.push_back(*chosen);
    cur = chosen->to;
  }
  return cert;
}

// 0 -> staircase for v = 0: in rows l = 2..n-1, lower the last entry of the block of value m,
// l-1-|m| times for m = 0, -1, ...
inline Certificate support_sweep_certificate(int n) {
  Point seed(n);
  Shift cur(n);
  Certificate cert{seed, cur, staircase(n), {}};
  for (int l = 2; l <= n - 1; ++l)
    for (int m = 0; m >= -(l - 2); --m)
      for (int rep = 0; rep < l - 1 + m; ++rep) {
        int b = 0;
        for (int i = 1; i <= l; ++i)
          if (cur.at(l, i) == m) b = i;
        Block I = refined_partition(seed, cur).block_of(l, b);
        int J = 0;
        for (int j = 1; j < l; ++j)
          if (cur.at(l - 1, j) == m) ++J;
        Shift u = cur - Shift::delta(n, {l, b});
        if (J >= I.size() || !d_set_member(seed, u)) throw std::logic_error("sweep step failed");
        cert.steps.push_back({{l, b}, -1, cur, u, Scalar(J)});
        cur = u;
      }
  if (!(cur == cert.target)) throw std::logic_error("sweep did not reach the staircase");
  return cert;
}

// reduce a nonzero slice vector to a multiple of the classical tableau using Gamma
inline TableauVector reduce_to_classical(const UniversalModule& M, const Shift& z, TableauVector t) {
  int n = M.n();
  Point p = M.seed() + z;
  for (;;) {
    bool only_e = true;
    for (auto& [k, c] : t.terms())
      if (!k.sigma.is_identity()) only_e = false;
    if (only_e) return t;
    bool moved = false;
    for (int k = 1; k < n && !moved; ++k)
      for (int i = 1; i <= k && !moved; ++i) {
        TableauVector u = M.act_gamma(k, i, t) - t.scaled(gamma_value(k, i, p));
        if (!u.is_zero()) {
          t = u;
          moved = true;
        }
      }
    if (!moved) return t;
  }
}

struct ReplayResult {
  bool ok = false;
  std::string message;
};

// checks D_e(v+target) lies in U D_e(v+start) by following the steps
inline ReplayResult replay(const UniversalModule& M, const Certificate& cert) {
  TableauVector t = M.classical(cert.start);
  Shift cur = cert.start;
  for (auto& st : cert.steps) {
    TableauVector img = st.sign > 0 ? M.act_E(st.at.k, st.at.k + 1, t) : M.act_E(st.at.k + 1, st.at.k, t);
    img = M.project(M.seed() + st.to, img);
    if (img.is_zero()) return {false, "projection vanished at " + st.to.to_string()};
    t = reduce_to_classical(M, st.to, img);
    TableauKey e{st.to, Permutation::identity(M.n())};
    if (t.coeff(e).is_zero() || t.size() != 1) return {false, "no classical tableau at " + st.to.to_string()};
    cur = st.to;
  }
  if (!(cur == cert.target)) return {false, "path ends at " + cur.to_string()};
  return {true, "reached " + cur.to_string() + " in " + std::to_string(cert.steps.size()) + " steps"};
}

inline bool is_fully_critical(const Point& seed, const Shift& z) {
  return refined_partition(seed, z) == interval_partition_of(seed);
}

// (S_pi)_z as the blocks of I(v,z); order via group_order()
inline IntervalPartition stabilizer(const Point& seed, const Shift& z) {
  if (!d_set_member(seed, z)) throw std::invalid_argument("shift not in D(v): " + z.to_string());
  return refined_partition(seed, z);
}

inline TableauVector socle_generator(const UniversalModule& M) { return M.classical(Shift(M.n())); }

struct GammaSliceReport {
  bool triangular = true;
  bool unique_eigenvector = true;
  bool nilpotency = true;
  int exponent = 0;  // l(omega_0^z) + 1
  std::string detail;
};

// Gamma on the slice at z: triangularity, a unique joint eigenline D_e,
// and products of exponent many nilpotent parts vanish while exponent-1 do not all vanish
inline GammaSliceReport gamma_slice_structure(const UniversalModule& M, const Shift& z) {
  GammaSliceReport rep;
  int n = M.n();
  auto basis = M.slice_basis(z);
  int d = static_cast<int>(basis.size());
  rep.exponent = longest_shuffle(M.seed(), z).length() + 1;
  std::vector<Matrix<Scalar>> N;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      auto m = M.gamma_nilpotent_matrix(k, i, z);
      for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r)
          if (!m(r, c).is_zero() && !(basis[r].sigma.bruhat_leq(basis[c].sigma) && r != c)) {
            rep.triangular = false;
            rep.detail += "c" + std::to_string(k) + std::to_string(i) + " not triangular; ";
          }
      N.push_back(m);
    }
  auto ker = Matrix<Scalar>::vstack(N).kernel();
  int e_pos = -1;
  for (int c = 0; c < d; ++c)
    if (basis[c].sigma.is_identity()) e_pos = c;
  if (ker.size() != 1) rep.unique_eigenvector = false;
  else
    for (int c = 0; c < d; ++c)
      if (c != e_pos && !ker[0][c].is_zero()) rep.unique_eigenvector = false;
  // all products of `exponent` nilpotent parts vanish, some product of exponent-1 does not
  std::vector<Matrix<Scalar>> prods{Matrix<Scalar>::identity(d)};
  bool some_nonzero_before = false;
  for (int step = 1; step <= rep.exponent; ++step) {
    std::vector<Matrix<Scalar>> nxt;
    for (auto& P : prods)
      for (auto& m : N) {
        auto q = m * P;
        if (!q.is_zero()) nxt.push_back(q);
      }
    if (step == rep.exponent - 1) some_nonzero_before = !nxt.empty();
    prods = std::move(nxt);
  }
  if (rep.exponent == 1) some_nonzero_before = true;
  if (!prods.empty() || !some_nonzero_before) rep.nilpotency = false;
  return rep;
}

}  // namespace gtmod
