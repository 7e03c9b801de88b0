#pragma once
// Rational functions in the x_{k,i}, divided differences, Taylor expansion and
// operators D_{tau,sigma} from Leibniz expansion of divided differences.

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"

namespace gtmod {

using XPoly = Polynomial<Q>;
using Series = Polynomial<Scalar>;  // truncated power series in t_{k,i}

inline int xvar(int k, int i) { return flat_index({k, i}); }
inline XPoly X(int k, int i) { return XPoly::var(xvar(k, i)); }
inline std::string xname(int v) {
  Index x = unflat_index(v);
  return "x" + std::to_string(x.k) + std::to_string(x.i);
}

struct RationalFunction {
  XPoly num{Q(1)}, den{Q(1)};

  Scalar evaluate(const Point& p) const {
    std::function<Scalar(int)> val = [&](int v) { return Scalar(p.at(unflat_index(v))); };
    Scalar d = den.evaluate(val);
    if (d.is_zero()) throw std::domain_error("pole at " + p.to_string());
    return num.evaluate(val) / d;
  }
  std::string to_string() const {
    if (den == XPoly(Q(1))) return num.to_string(xname);
    return "(" + num.to_string(xname) + ")/(" + den.to_string(xname) + ")";
  }
};

// I = [a,b] in row k < n
inline RationalFunction e_fun(int k, Block I) {
  RationalFunction r;
  for (int j = 1; j <= k + 1; ++j) r.num *= X(k, I.a) - X(k + 1, j);
  for (int j = 1; j <= k; ++j)
    if (!I.contains(j)) r.den *= X(k, I.a) - X(k, j);
  return r;
}
inline RationalFunction f_fun(int k, Block I) {
  RationalFunction r;
  for (int j = 1; j <= k - 1; ++j) r.num *= X(k, I.b) - X(k - 1, j);
  for (int j = 1; j <= k; ++j)
    if (!I.contains(j)) r.den *= X(k, I.b) - X(k, j);
  return r;
}

inline XPoly h_poly(int k) {
  XPoly r(Q(k - 1));
  for (int i = 1; i <= k; ++i) r += X(k, i);
  for (int i = 1; i < k; ++i) r -= X(k - 1, i);
  return r;
}

// sum_j (x_{k,j} + k - 1)^i prod_{m != j} (x_{k,j} - x_{k,m} - 1)/(x_{k,j} - x_{k,m})
inline XPoly gamma_poly_uncached(int k, int i) {
  XPoly V(Q(1));
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) V *= X(k, a) - X(k, b);
  XPoly acc;
  for (int j = 1; j <= k; ++j) {
    XPoly t = (X(k, j) + XPoly(Q(k - 1))).pow(i);
    for (int m = 1; m <= k; ++m)
      if (m != j) t *= X(k, j) - X(k, m) - XPoly(Q(1));
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b)
        if (a != j && b != j) t *= X(k, a) - X(k, b);
    acc += (j % 2 == 1) ? t : -t;
  }
  auto q = acc.divide_exact(V);
  if (!q) throw std::logic_error("gamma numerator not divisible by the Vandermonde");
  return *q;
}

inline const XPoly& gamma_poly(int k, int i) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, XPoly> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find({k, i});
  if (it == cache.end()) it = cache.emplace(std::make_pair(k, i), gamma_poly_uncached(k, i)).first;
  return it->second;
}

inline Scalar eval_poly(const XPoly& f, const Point& p) {
  std::function<Scalar(int)> val = [&](int v) { return Scalar(p.at(unflat_index(v))); };
  return f.evaluate(val);
}

inline Scalar gamma_value(int k, int i, const Point& p) { return eval_poly(gamma_poly(k, i), p); }

// chi_v = chi_w
inline bool char_equal(const Point& v, const Point& w) {
  if (v.n() != w.n()) return false;
  for (int k = 1; k <= v.n(); ++k)
    for (int i = 1; i <= k; ++i)
      if (!(gamma_value(k, i, v) == gamma_value(k, i, w))) return false;
  return true;
}

// (f - s f)/(x_{k,i} - x_{k,i+1}), monomial by monomial
inline XPoly divided_difference(const XPoly& f, Simple s) {
  int a = xvar(s.k, s.i), b = xvar(s.k, s.i + 1);
  XPoly r;
  for (auto& [m, c] : f.terms()) {
    int p = mono_exp(m, a), q = mono_exp(m, b);
    if (p == q) continue;
    Monomial rest;
    for (auto& ve : m)
      if (ve.first != a && ve.first != b) rest.push_back(ve);
    int lo = std::min(p, q), d = std::max(p, q) - lo;
    Q sign = p > q ? Q(1) : Q(-1);
    for (int t = 0; t < d; ++t) {
      Monomial mm = rest;
      int ea = lo + d - 1 - t, eb = lo + t;
      if (ea > 0) mm.emplace_back(a, ea);
      if (eb > 0) mm.emplace_back(b, eb);
      std::sort(mm.begin(), mm.end());
      r.add_term(mm, c * sign);
    }
  }
  return r;
}

inline XPoly apply_simple(const XPoly& f, Simple s) { return f.swapped(xvar(s.k, s.i), xvar(s.k, s.i + 1)); }

inline RationalFunction divided_difference(const RationalFunction& f, Simple s) {
  RationalFunction sf{apply_simple(f.num, s), apply_simple(f.den, s)};
  XPoly num = f.num * sf.den - sf.num * f.den;
  XPoly lin = X(s.k, s.i) - X(s.k, s.i + 1);
  auto q = num.divide_exact(lin);
  if (!q) throw std::logic_error("divided difference not exact");
  RationalFunction r{*q, f.den * sf.den};
  if (auto d = r.num.divide_exact(r.den)) return {*d, XPoly(Q(1))};
  return r;
}

// d_sigma = d_{s_1} ... d_{s_l}
inline XPoly divided_difference(const XPoly& f, const Permutation& w) {
  auto word = w.reduced_word();
  XPoly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = divided_difference(r, *it);
  return r;
}

// Taylor expansion of f(p + t) in the variables vars up to total degree d
inline Series taylor(const XPoly& f, const Point& p, const std::set<int>& vars, int d) {
  Series out;
  std::map<int, Scalar> val;
  for (auto& [m, c] : f.terms()) {
    Series t{Scalar(c)};
    for (auto [v, e] : m) {
      auto it = val.find(v);
      if (it == val.end()) it = val.emplace(v, Scalar(p.at(unflat_index(v)))).first;
      const Scalar& pv = it->second;
      if (!vars.count(v)) {
        Scalar pw(1);
        for (int r = 0; r < e; ++r) pw *= pv;
        t = t.scaled(pw);
        continue;
      }
      Series b;
      Q binom = 1;
      std::vector<Scalar> pows(e + 1, Scalar(1));
      for (int r = 1; r <= e; ++r) pows[r] = pows[r - 1] * pv;
      for (int r = 0; r <= std::min(e, d); ++r) {
        if (r > 0) binom = binom * (e - r + 1) / r;
        Monomial mm;
        if (r > 0) mm.emplace_back(v, r);
        b.add_term(mm, Scalar(binom) * pows[e - r]);
      }
      t = Series::mul_truncated(t, b, d);
    }
    out += t;
  }
  return out;
}

inline Series taylor(const RationalFunction& f, const Point& p, const std::set<int>& vars, int d) {
  Series num = taylor(f.num, p, vars, d);
  if (f.den == XPoly(Q(1))) return num;
  Series den = taylor(f.den, p, vars, d);
  Scalar c0 = den.constant_term();
  if (c0.is_zero()) throw std::domain_error("pole at " + p.to_string());
  Scalar inv0 = c0.inverse();
  Series u = (den - Series(c0)).scaled(-inv0);  // 1/den = inv0 * sum u^m
  Series inv(Scalar(1)), pw(Scalar(1));
  for (int m = 1; m <= d; ++m) {
    pw = Series::mul_truncated(pw, u, d);
    if (pw.is_zero()) break;
    inv += pw;
  }
  return Series::mul_truncated(num, inv.scaled(inv0), d);
}

// D_{tau,sigma}: f -> sum_alpha moment(alpha) [t^alpha] f(p + t)
struct PSOperator {
  Permutation tau, sigma;
  int degree = 0;
  std::map<Monomial, Q> moments;

  Scalar apply(const Series& s) const {
    Scalar r(0);
    for (auto& [m, q] : moments) {
      Scalar c = s.coeff(m);
      if (!c.is_zero()) r += c * Scalar(q);
    }
    return r;
  }
  // coefficient of d^alpha in the differential-operator form
  Q differential_coefficient(const Monomial& alpha) const {
    auto it = moments.find(alpha);
    if (it == moments.end()) return 0;
    Q f = 1;
    for (auto [v, e] : alpha) f *= factorial_q(e);
    return it->second / f;
  }
  std::string to_string() const {
    std::string s;
    for (auto& [m, q] : moments) {
      Q c = differential_coefficient(m);
      if (c == 0) continue;
      s += (s.empty() ? "" : " + ") + c.get_str();
      for (auto [v, e] : m) s += "*d" + xname(v).substr(1) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return s.empty() ? "0" : s;
  }
};

struct PSFamily {
  Permutation sigma;
  std::set<int> vars;
  std::map<Permutation, PSOperator> ops;  // keyed by tau

  const PSOperator* find(const Permutation& tau) const {
    auto it = ops.find(tau);
    return it == ops.end() ? nullptr : &it->second;
  }
};

namespace detail {
inline void monomials_of_degree(const std::vector<int>& vars, int d, size_t from, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t t = from; t < vars.size(); ++t) {
    bool bumped = !cur.empty() && cur.back().first == vars[t];
    if (bumped) ++cur.back().second;
    else cur.emplace_back(vars[t], 1);
    monomials_of_degree(vars, d - 1, t, cur, out);
    if (bumped) --cur.back().second;
    else cur.pop_back();
  }
}
}  // namespace detail

// Leibniz: d_s(g m) = d_s(g) m + s(g) d_s(m), applied along a reduced word of sigma
inline PSFamily build_ps_family(const Permutation& sigma) {
  PSFamily fam;
  fam.sigma = sigma;
  auto word = sigma.reduced_word();
  for (auto s : word) {
    fam.vars.insert(xvar(s.k, s.i));
    fam.vars.insert(xvar(s.k, s.i + 1));
  }
  std::vector<int> vars(fam.vars.begin(), fam.vars.end());
  int n = sigma.n();
  int L = static_cast<int>(word.size());
  for (int d = 0; d <= L; ++d) {
    std::vector<Monomial> monos;
    Monomial cur;
    detail::monomials_of_degree(vars, d, 0, cur, monos);
    for (auto& alpha : monos) {
      std::map<Permutation, XPoly> C;
      C[Permutation::identity(n)] = XPoly::term(alpha, Q(1));
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::map<Permutation, XPoly> nxt;
        Permutation s = Permutation::simple(n, *it);
        for (auto& [tau, P] : C) {
          XPoly dp = divided_difference(P, *it);
          if (!dp.is_zero()) nxt[tau] += dp;
          Permutation st = s * tau;
          if (st.length() > tau.length()) nxt[st] += apply_simple(P, *it);
        }
        C.clear();
        for (auto& [tau, P] : nxt)
          if (!P.is_zero()) C.emplace(tau, std::move(P));
      }
      for (auto& [tau, P] : C) {
        Q c0 = P.constant_term();
        auto& op = fam.ops[tau];
        op.tau = tau;
        op.sigma = sigma;
        op.degree = L - tau.length();
        if (c0 != 0) op.moments[alpha] = c0;
      }
    }
  }
  return fam;
}

inline const PSFamily& ps_family(const Permutation& sigma) {
  static std::mutex mu;
  static std::map<Permutation, std::unique_ptr<PSFamily>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(sigma);
    if (it != cache.end()) return *it->second;
  }
  auto fam = std::make_unique<PSFamily>(build_ps_family(sigma));
  std::lock_guard<std::mutex> lk(mu);
  auto [it, inserted] = cache.emplace(sigma, std::move(fam));
  return *it->second;
}

// D_{tau,sigma}(f)(p); zero unless tau <= sigma
inline Scalar ps_apply(const Permutation& tau, const Permutation& sigma, const RationalFunction& f, const Point& p) {
  const PSFamily& fam = ps_family(sigma);
  const PSOperator* op = fam.find(tau);
  if (!op) return Scalar(0);
  return op->apply(taylor(f, p, fam.vars, sigma.length()));
}

}  // namespace gtmod
