#pragma once
// The universal tableaux module V(T(v)) with basis D_sigma(v + z).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cones.hpp"
#include "linalg.hpp"
#include "polyops.hpp"

namespace gtmod {

struct TableauKey {
  Shift z;
  Permutation sigma;
  auto operator<=>(const TableauKey&) const = default;
  std::string to_string() const { return "D_" + sigma.to_string() + "(z=" + z.to_string() + ")"; }
};

class TableauVector {
 public:
  using Terms = std::map<TableauKey, Scalar>;
  TableauVector() = default;
  TableauVector(const TableauKey& k, const Scalar& c = Scalar(1)) { add(k, c); }  // NOLINT

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const TableauKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  void add(const TableauKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add(const TableauVector& o, const Scalar& c = Scalar(1)) {
    if (c.is_zero()) return;
    for (auto& [k, v] : o.terms_) add(k, v * c);
  }
  TableauVector& operator+=(const TableauVector& o) {
    add(o);
    return *this;
  }
  TableauVector& operator-=(const TableauVector& o) {
    add(o, Scalar(-1));
    return *this;
  }
  friend TableauVector operator+(TableauVector a, const TableauVector& b) { return a += b; }
  friend TableauVector operator-(TableauVector a, const TableauVector& b) { return a -= b; }
  TableauVector scaled(const Scalar& c) const {
    TableauVector r;
    r.add(*this, c);
    return r;
  }
  friend bool operator==(const TableauVector& a, const TableauVector& b) { return (a - b).is_zero(); }
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
      os << (first ? "" : " + ") << "(" << c << ")*" << k.to_string();
      first = false;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

struct ModuleOptions {
  // (-1)^{|I|-1} on the lowering action of a block I
  bool lowering_block_sign = true;
};

class UniversalModule {
 public:
  explicit UniversalModule(const Point& seed, ModuleOptions opt = {})
      : seed_(seed), opt_(opt), blocks_(interval_partition_of(seed)) {
    require_seed(seed);
    n_ = seed.n();
  }

  const Point& seed() const { return seed_; }
  int n() const { return n_; }
  const IntervalPartition& blocks() const { return blocks_; }

  bool in_d(const Shift& z) const { return d_set_member(seed_, z); }

  const std::set<Permutation>& shuffle_set(const Shift& z) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = shuffle_cache_.find(z);
      if (it != shuffle_cache_.end()) return it->second;
    }
    auto v = shuffles(seed_, z);
    std::set<Permutation> s(v.begin(), v.end());
    std::lock_guard<std::mutex> lk(mu_);
    return shuffle_cache_.emplace(z, std::move(s)).first->second;
  }

  bool is_basis_key(const TableauKey& t) const {
    return t.z.n() == n_ && t.sigma.n() == n_ && in_d(t.z) && shuffle_set(t.z).count(t.sigma) > 0;
  }
  TableauVector basis_vector(const Shift& z, const Permutation& sigma) const {
    TableauKey t{z, sigma};
    if (!is_basis_key(t)) throw std::invalid_argument("not a derivative tableau: " + t.to_string());
    return TableauVector(t);
  }
  TableauVector classical(const Shift& z) const { return basis_vector(z, Permutation::identity(n_)); }

  std::vector<TableauKey> slice_basis(const Shift& z) const {
    if (!in_d(z)) throw std::invalid_argument("shift not in D(v)");
    auto v = shuffles(seed_, z);
    std::vector<TableauKey> out;
    for (auto& s : v) out.push_back({z, s});
    return out;
  }

  std::vector<Scalar> cartan_weight(const Shift& z) const {
    Point p = seed_ + z;
    std::vector<Scalar> w;
    for (int k = 1; k <= n_; ++k) w.push_back(eval_poly(h_poly(k), p));
    return w;
  }

  // E_{p,q} on a vector
  TableauVector act_E(int p, int q, const TableauVector& t) const {
    if (p < 1 || q < 1 || p > n_ || q > n_) throw std::invalid_argument("E index out of range");
    if (p < q && q - p > 1)
      return act_E(p, q - 1, act_E(q - 1, q, t)) - act_E(q - 1, q, act_E(p, q - 1, t));
    if (p > q && p - q > 1)
      return act_E(p, p - 1, act_E(p - 1, q, t)) - act_E(p - 1, q, act_E(p, p - 1, t));
    TableauVector r;
    for (auto& [key, c] : t.terms()) r.add(act_simple(p, q, key), c);
    return r;
  }

  // c_{k,i} through gamma_{k,i}
  TableauVector act_gamma(int k, int i, const TableauVector& t) const {
    RationalFunction g{gamma_poly(k, i), XPoly(Q(1))};
    TableauVector r;
    for (auto& [key, c] : t.terms()) {
      Point p = seed_ + key.z;
      const PSFamily& fam = ps_family(key.sigma);
      Series s = taylor(g, p, fam.vars, key.sigma.length());
      auto& sh = shuffle_set(key.z);
      for (auto& [tau, op] : fam.ops) {
        if (!sh.count(tau)) continue;
        r.add(TableauKey{key.z, tau}, op.apply(s) * c);
      }
    }
    return r;
  }

  // c_{k,i} as sum of words E_{r1 r2} ... E_{ri r1}
  TableauVector act_gamma_words(int k, int i, const TableauVector& t) const {
    TableauVector r;
    for (int r1 = 1; r1 <= k; ++r1) {
      std::vector<TableauVector> u(k + 1);
      for (int s = 1; s <= k; ++s) u[s] = act_E(s, r1, t);
      for (int step = 1; step < i; ++step) {
        std::vector<TableauVector> nu(k + 1);
        for (int s = 1; s <= k; ++s)
          for (int q = 1; q <= k; ++q)
            if (!u[q].is_zero()) nu[s] += act_E(s, q, u[q]);
        u = std::move(nu);
      }
      r += u[r1];
    }
    return r;
  }

  // keep the terms whose character equals chi_v
  TableauVector project(const Point& v, const TableauVector& t) const {
    TableauVector r;
    for (auto& [key, c] : t.terms())
      if (same_character(seed_ + key.z, v)) r.add(key, c);
    return r;
  }

  // matrix of c_{k,i} - gamma_{k,i}(v+z) on the slice at z (columns = images)
  Matrix<Scalar> gamma_nilpotent_matrix(int k, int i, const Shift& z) const {
    auto basis = slice_basis(z);
    int d = static_cast<int>(basis.size());
    Matrix<Scalar> m(d, d);
    Scalar g = gamma_value(k, i, seed_ + z);
    for (int c = 0; c < d; ++c) {
      TableauVector img = act_gamma(k, i, TableauVector(basis[c]));
      for (int r = 0; r < d; ++r) m(r, c) = img.coeff(basis[r]);
      m(c, c) -= g;
    }
    return m;
  }

  static bool same_character(const Point& a, const Point& b) {
    if (a.n() != b.n()) return false;
    for (int k = 1; k <= a.n(); ++k) {
      auto x = a.row(k), y = b.row(k);
      auto lt = [](const Affine& p, const Affine& q) { return canonical_less(p, q); };
      std::sort(x.begin(), x.end(), lt);
      std::sort(y.begin(), y.end(), lt);
      if (!(x == y)) return false;
    }
    return true;
  }

 private:
  TableauVector act_simple(int p, int q, const TableauKey& key) const {
    auto ck = std::make_tuple(p, q, key);
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = memo_.find(ck);
      if (it != memo_.end()) return it->second;
    }
    TableauVector r;
    if (p == q) r = TableauVector(key, eval_poly(h_poly(p), seed_ + key.z));
    else if (q == p + 1) r = raise(p, key);
    else r = lower(q, key);
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(ck, r);
    return r;
  }

  TableauVector raise(int k, const TableauKey& key) const {
    TableauVector r;
    Point p = seed_ + key.z;
    auto rp = refined_partition(seed_, key.z);
    for (auto& I : rp.blocks(k)) {
      Shift u = key.z + Shift::delta(n_, {k, I.a});
      if (!in_d(u)) continue;
      Permutation w = key.sigma * alpha_of(n_, k, I);
      const PSFamily& fam = ps_family(w);
      Series s = taylor(e_fun(k, I), p, fam.vars, w.length());
      auto& sh = shuffle_set(u);
      for (auto& [tau, op] : fam.ops)
        if (sh.count(tau)) r.add(TableauKey{u, tau}, -op.apply(s));
    }
    return r;
  }

  TableauVector lower(int k, const TableauKey& key) const {
    TableauVector r;
    Point p = seed_ + key.z;
    auto rp = refined_partition(seed_, key.z);
    for (auto& I : rp.blocks(k)) {
      Shift u = key.z - Shift::delta(n_, {k, I.b});
      if (!in_d(u)) continue;
      Permutation w = key.sigma * beta_of(n_, k, I);
      const PSFamily& fam = ps_family(w);
      Series s = taylor(f_fun(k, I), p, fam.vars, w.length());
      Scalar sign = (opt_.lowering_block_sign && I.size() % 2 == 0) ? Scalar(-1) : Scalar(1);
      auto& sh = shuffle_set(u);
      for (auto& [tau, op] : fam.ops)
        if (sh.count(tau)) r.add(TableauKey{u, tau}, op.apply(s) * sign);
    }
    return r;
  }

  Point seed_;
  ModuleOptions opt_;
  IntervalPartition blocks_;
  int n_ = 0;
  mutable std::mutex mu_;
  mutable std::map<Shift, std::set<Permutation>> shuffle_cache_;
  mutable std::map<std::tuple<int, int, TableauKey>, TableauVector> memo_;
};

}  // namespace gtmod
