#pragma once
// Scalars: affine expressions q0 + sum q_j a_j in named parameters, and the
// field of rational functions in those parameters.

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace gtmod {

class ParamRegistry {
 public:
  static int id(const std::string& name) {
    auto& r = instance();
    std::lock_guard<std::mutex> lk(r.mu_);
    auto it = r.ids_.find(name);
    if (it != r.ids_.end()) return it->second;
    int k = static_cast<int>(r.names_.size());
    r.names_.push_back(name);
    r.ids_.emplace(name, k);
    return k;
  }
  static std::string name(int id) {
    auto& r = instance();
    std::lock_guard<std::mutex> lk(r.mu_);
    return r.names_.at(id);
  }

 private:
  static ParamRegistry& instance() {
    static ParamRegistry r;
    return r;
  }
  std::mutex mu_;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
};

// q0 + sum_j q_j * a_j
class Affine {
 public:
  Affine() = default;
  Affine(const Q& c) : c_(c) {}  // NOLINT
  Affine(long c) : c_(c) {}      // NOLINT
  Affine(int c) : c_(c) {}       // NOLINT
  static Affine param(const std::string& name, const Q& coef = 1) {
    Affine a;
    if (coef != 0) a.p_[name] = coef;
    return a;
  }

  const Q& constant() const { return c_; }
  const std::map<std::string, Q>& params() const { return p_; }
  bool is_rational() const { return p_.empty(); }

  Affine& operator+=(const Affine& o) {
    c_ += o.c_;
    for (auto& [k, v] : o.p_) {
      Q& x = p_[k];
      x += v;
      if (x == 0) p_.erase(k);
    }
    return *this;
  }
  Affine& operator-=(const Affine& o) { return *this += o * Q(-1); }
  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
  friend Affine operator*(Affine a, const Q& s) {
    if (s == 0) return Affine();
    a.c_ *= s;
    for (auto& [k, v] : a.p_) v *= s;
    return a;
  }
  Affine operator-() const { return *this * Q(-1); }
  friend bool operator==(const Affine& a, const Affine& b) { return a.c_ == b.c_ && a.p_ == b.p_; }

  // a - b when it is an integer
  friend std::optional<long> int_diff(const Affine& a, const Affine& b) {
    if (a.p_ != b.p_) return std::nullopt;
    Q d = a.c_ - b.c_;
    if (!is_integer(d)) return std::nullopt;
    return to_long(d);
  }
  friend bool same_class(const Affine& a, const Affine& b) { return int_diff(a, b).has_value(); }

  // total order used for canonical block ordering
  friend bool canonical_less(const Affine& a, const Affine& b) {
    if (a.p_ != b.p_) {
      auto ia = a.p_.begin(), ib = b.p_.begin();
      for (; ia != a.p_.end() && ib != b.p_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
      }
      return ia == a.p_.end() && ib != b.p_.end();
    }
    return a.c_ < b.c_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (auto& [k, v] : p_) {
      if (v < 0) os << "-";
      else if (any) os << "+";
      Q av = abs(v);
      if (av != 1) os << av.get_str() << "*";
      os << k;
      any = true;
    }
    if (c_ != 0 || p_.empty()) {
      if (any && c_ > 0) os << "+";
      os << c_.get_str();
    }
    return os.str();
  }

  // grammar: term (('+'|'-') term)*, term = q | q*name | name
  static Affine parse(const std::string& src) {
    std::string s;
    for (char ch : src)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    Affine r;
    size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        throw std::invalid_argument("bad scalar: " + src);
      }
      size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      std::string t = s.substr(pos, end - pos);
      if (t.empty()) throw std::invalid_argument("bad scalar: " + src);
      auto star = t.find('*');
      std::string coef = star == std::string::npos ? "" : t.substr(0, star);
      std::string name = star == std::string::npos ? t : t.substr(star + 1);
      if (star == std::string::npos && (std::isdigit(static_cast<unsigned char>(t[0])))) {
        r.c_ += parse_q(t) * sign;
      } else {
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
          throw std::invalid_argument("bad parameter in scalar: " + src);
        for (char ch : name)
          if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            throw std::invalid_argument("bad parameter in scalar: " + src);
        Q q = coef.empty() ? Q(1) : parse_q(coef);
        r += Affine::param(name, q * sign);
      }
      pos = end;
    }
    return r;
  }

 private:
  Q c_ = 0;
  std::map<std::string, Q> p_;
};

inline std::ostream& operator<<(std::ostream& os, const Affine& a) { return os << a.to_string(); }

using ParamPoly = Polynomial<Q>;

// Element of Q(a_1, a_2, ...): numerator over a product of monic factors.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Q& q) : q_(q) {}  // NOLINT
  Scalar(long q) : q_(q) {}      // NOLINT
  Scalar(int q) : q_(q) {}       // NOLINT
  explicit Scalar(const Affine& a) {
    if (a.is_rational()) {
      q_ = a.constant();
      return;
    }
    ParamPoly p(a.constant());
    for (auto& [k, v] : a.params()) p += ParamPoly::var(ParamRegistry::id(k)).scaled(v);
    *this = from_parts(std::move(p), {});
  }

  bool is_rational() const { return !g_; }
  const Q& rational() const {
    if (g_) throw std::domain_error("scalar is not rational: " + to_string());
    return q_;
  }
  bool is_zero() const { return !g_ && q_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.g_ && !b.g_) return Scalar(a.q_ + b.q_);
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    Parts pa = a.parts(), pb = b.parts();
    Factors den = pa.den;
    for (auto& [f, m] : pb.den) {
      auto it = find_factor(den, f);
      if (it == den.end()) den.emplace_back(f, m);
      else it->second = std::max(it->second, m);
    }
    ParamPoly num = pa.num * missing(den, pa.den) + pb.num * missing(den, pb.den);
    return from_parts(std::move(num), std::move(den));
  }
  Scalar operator-() const {
    if (!g_) return Scalar(-q_);
    Parts p = parts();
    return from_parts(-p.num, p.den);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.g_ && !b.g_) return Scalar(a.q_ * b.q_);
    if (a.is_zero() || b.is_zero()) return Scalar(0);
    Parts pa = a.parts(), pb = b.parts();
    Factors den = pa.den;
    for (auto& [f, m] : pb.den) {
      auto it = find_factor(den, f);
      if (it == den.end()) den.emplace_back(f, m);
      else it->second += m;
    }
    return from_parts(pa.num * pb.num, std::move(den));
  }
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (!g_) return Scalar(1 / q_);
    Parts p = parts();
    ParamPoly num(Q(1));
    for (auto& [f, m] : p.den) num = num * f.pow(m);
    if (p.num.is_constant()) return from_parts(num.scaled(1 / p.num.constant_term()), {});
    Q lc = p.num.leading_coeff();
    return from_parts(num.scaled(1 / lc), {{p.num.scaled(1 / lc), 1}});
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.g_ && !b.g_) return a.q_ == b.q_;
    return (a - b).is_zero();
  }

  std::string to_string() const {
    if (!g_) return q_.get_str();
    auto nm = [](int v) { return ParamRegistry::name(v); };
    std::string s = g_->num.to_string(nm);
    if (g_->den.empty()) return s;
    std::string d;
    for (auto& [f, m] : g_->den) {
      if (!d.empty()) d += "*";
      d += "(" + f.to_string(nm) + ")";
      if (m > 1) d += "^" + std::to_string(m);
    }
    return "(" + s + ")/(" + d + ")";
  }

 private:
  using Factors = std::vector<std::pair<ParamPoly, int>>;
  struct Parts {
    ParamPoly num;
    Factors den;
  };
  static Factors::iterator find_factor(Factors& fs, const ParamPoly& f) {
    for (auto it = fs.begin(); it != fs.end(); ++it)
      if (it->first == f) return it;
    return fs.end();
  }
  static ParamPoly missing(const Factors& full, const Factors& part) {
    ParamPoly r(Q(1));
    for (auto& [f, m] : full) {
      int have = 0;
      for (auto& [g, k] : part)
        if (g == f) have = k;
      if (m > have) r = r * f.pow(m - have);
    }
    return r;
  }
  Parts parts() const {
    if (!g_) return {ParamPoly(q_), {}};
    return *g_;
  }
  static Scalar from_parts(ParamPoly num, Factors den) {
    if (num.is_zero()) return Scalar(0);
    Factors kept;
    for (auto& [f, m] : den) {
      int k = m;
      while (k > 0) {
        auto qt = num.divide_exact(f);
        if (!qt) break;
        num = std::move(*qt);
        --k;
      }
      if (k > 0) kept.emplace_back(f, k);
    }
    Scalar s;
    if (kept.empty() && num.is_constant()) {
      s.q_ = num.constant_term();
      return s;
    }
    s.g_ = std::make_shared<const Parts>(Parts{std::move(num), std::move(kept)});
    return s;
  }

  Q q_ = 0;
  std::shared_ptr<const Parts> g_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gtmod
