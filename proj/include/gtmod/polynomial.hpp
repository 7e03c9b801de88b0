#pragma once
// Sparse multivariate polynomials over a coefficient ring.
// Variables are integer ids; lex order with smaller id = larger variable.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gtmod {

// (var, exponent), sorted by var, exponents > 0
using Monomial = std::vector<std::pair<int, int>>;

inline int mono_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

inline int mono_exp(const Monomial& m, int var) {
  for (auto& [v, e] : m)
    if (v == var) return e;
  return 0;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

// a / b if b divides a
inline std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && b[j].first < a[i].first) return std::nullopt;
    if (j < b.size() && b[j].first == a[i].first) {
      int e = a[i].second - b[j].second;
      if (e < 0) return std::nullopt;
      if (e > 0) r.emplace_back(a[i].first, e);
      ++i, ++j;
    } else {
      r.push_back(a[i++]);
    }
  }
  if (j < b.size()) return std::nullopt;
  return r;
}

// lex: >0 if a > b
inline int mono_lex_cmp(const Monomial& a, const Monomial& b) {
  size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? 1 : -1;
    if (a[i].second != b[i].second) return a[i].second > b[i].second ? 1 : -1;
  }
  if (i < a.size()) return 1;
  if (i < b.size()) return -1;
  return 0;
}

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_lex_cmp(a, b) > 0; }
};

template <class C>
class Polynomial {
 public:
  using Terms = std::map<Monomial, C, MonoGreater>;

  Polynomial() = default;
  Polynomial(const C& c) {  // NOLINT
    if (!(c == C(0))) terms_[{}] = c;
  }
  static Polynomial var(int v, int e = 1) {
    Polynomial p;
    p.terms_[{{v, e}}] = C(1);
    return p;
  }
  static Polynomial term(const Monomial& m, const C& c) {
    Polynomial p;
    if (!(c == C(0))) p.terms_[m] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  C constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? C(0) : it->second;
  }
  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const C& leading_coeff() const { return terms_.begin()->second; }

  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }

  void add_term(const Monomial& m, const C& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const C& s) const {
    Polynomial r;
    if (s == C(0)) return r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // drop monomials of total degree > d
  Polynomial truncated(int d) const {
    Polynomial r;
    for (auto& [m, c] : terms_)
      if (mono_degree(m) <= d) r.terms_.emplace(m, c);
    return r;
  }
  static Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int d) {
    Polynomial r;
    for (auto& [ma, ca] : a.terms_) {
      int da = mono_degree(ma);
      if (da > d) continue;
      for (auto& [mb, cb] : b.terms_)
        if (da + mono_degree(mb) <= d) r.add_term(mono_mul(ma, mb), ca * cb);
    }
    return r;
  }

  Polynomial pow(int e) const {
    Polynomial r(C(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // exact division; nullopt when d does not divide *this
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) return std::nullopt;
    Polynomial rem = *this, quo;
    const Monomial& lm = d.leading_monomial();
    const C& lc = d.leading_coeff();
    while (!rem.is_zero()) {
      auto qm = mono_div(rem.leading_monomial(), lm);
      if (!qm) return std::nullopt;
      C qc = rem.leading_coeff() / lc;
      quo.add_term(*qm, qc);
      rem -= d * term(*qm, qc);
    }
    return quo;
  }

  // swap two variables
  Polynomial swapped(int a, int b) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
      Monomial nm;
      for (auto [v, e] : m) nm.emplace_back(v == a ? b : (v == b ? a : v), e);
      std::sort(nm.begin(), nm.end());
      r.add_term(nm, c);
    }
    return r;
  }

  // rename variables through f
  Polynomial renamed(const std::function<int(int)>& f) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
      Monomial nm;
      for (auto [v, e] : m) nm.emplace_back(f(v), e);
      std::sort(nm.begin(), nm.end());
      Monomial merged;
      for (auto& ve : nm) {
        if (!merged.empty() && merged.back().first == ve.first) merged.back().second += ve.second;
        else merged.push_back(ve);
      }
      r.add_term(merged, c);
    }
    return r;
  }

  template <class V>
  V evaluate(const std::function<V(int)>& value) const {
    V acc(0);
    std::map<int, V> cache;
    for (auto& [m, c] : terms_) {
      V t(c);
      for (auto [v, e] : m) {
        auto it = cache.find(v);
        if (it == cache.end()) it = cache.emplace(v, value(v)).first;
        for (int i = 0; i < e; ++i) t = t * it->second;
      }
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      std::ostringstream cs;
      cs << c;
      std::string s = cs.str();
      bool neg = !s.empty() && s[0] == '-';
      if (neg) s = s.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      bool unit = (s == "1");
      if (!unit || m.empty()) os << s;
      bool star = !unit;
      for (auto [v, e] : m) {
        if (star) os << "*";
        star = true;
        os << name(v);
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

}  // namespace gtmod
