#pragma once
// Elements of S_mu = S_1 x ... x S_n, one one-line array per row.

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtmod {

struct Index {
  int k = 1, i = 1;  // 1 <= i <= k
  auto operator<=>(const Index&) const = default;
};

inline int flat_index(Index x) { return (x.k - 1) * x.k / 2 + (x.i - 1); }
inline Index unflat_index(int f) {
  int k = 1;
  while (k * (k + 1) / 2 <= f) ++k;
  return {k, f - (k - 1) * k / 2 + 1};
}
inline std::string index_name(Index x) {
  return "(" + std::to_string(x.k) + "," + std::to_string(x.i) + ")";
}

// simple reflection swapping (k,i) and (k,i+1)
struct Simple {
  int k, i;
  auto operator<=>(const Simple&) const = default;
};

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n) {
    Permutation p;
    p.rows_.resize(n);
    for (int k = 1; k <= n; ++k) {
      p.rows_[k - 1].resize(k);
      std::iota(p.rows_[k - 1].begin(), p.rows_[k - 1].end(), 0);
    }
    return p;
  }
  static Permutation simple(int n, Simple s) {
    Permutation p = identity(n);
    if (s.k < 1 || s.k > n || s.i < 1 || s.i >= s.k) throw std::invalid_argument("bad simple reflection");
    std::swap(p.rows_[s.k - 1][s.i - 1], p.rows_[s.k - 1][s.i]);
    return p;
  }
  // 1-based one-line rows
  static Permutation from_rows(const std::vector<std::vector<int>>& rows) {
    Permutation p;
    p.rows_.resize(rows.size());
    for (size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].size() != k + 1) throw std::invalid_argument("permutation row has wrong length");
      std::vector<bool> seen(k + 1, false);
      for (int v : rows[k]) {
        if (v < 1 || v > static_cast<int>(k) + 1 || seen[v - 1])
          throw std::invalid_argument("row is not a permutation");
        seen[v - 1] = true;
        p.rows_[k].push_back(v - 1);
      }
    }
    return p;
  }
  // cycle in row k, 1-based entries
  static Permutation cycle(int n, int k, const std::vector<int>& c) {
    Permutation p = identity(n);
    for (size_t j = 0; j < c.size(); ++j) p.rows_[k - 1][c[j] - 1] = c[(j + 1) % c.size()] - 1;
    return p;
  }

  int n() const { return static_cast<int>(rows_.size()); }
  // sigma(i) in row k, 1-based
  int operator()(int k, int i) const { return rows_[k - 1][i - 1] + 1; }
  std::vector<std::vector<int>> rows_one_based() const {
    auto r = rows_;
    for (auto& row : r)
      for (int& v : row) ++v;
    return r;
  }

  // (a*b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
    Permutation r = a;
    for (size_t k = 0; k < a.rows_.size(); ++k)
      for (size_t i = 0; i < a.rows_[k].size(); ++i) r.rows_[k][i] = a.rows_[k][b.rows_[k][i]];
    return r;
  }
  Permutation inverse() const {
    Permutation r = *this;
    for (size_t k = 0; k < rows_.size(); ++k)
      for (size_t i = 0; i < rows_[k].size(); ++i) r.rows_[k][rows_[k][i]] = static_cast<int>(i);
    return r;
  }
  int length() const {
    int l = 0;
    for (auto& row : rows_)
      for (size_t a = 0; a < row.size(); ++a)
        for (size_t b = a + 1; b < row.size(); ++b)
          if (row[a] > row[b]) ++l;
    return l;
  }
  bool is_identity() const {
    for (auto& row : rows_)
      for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != static_cast<int>(i)) return false;
    return true;
  }
  // reduced word s_1 ... s_l with *this = s_1 * ... * s_l
  std::vector<Simple> reduced_word() const {
    Permutation p = *this;
    std::vector<Simple> rev;
    for (int k = 1; k <= n(); ++k) {
      auto& row = p.rows_[k - 1];
      bool again = true;
      while (again) {
        again = false;
        for (int i = 0; i + 1 < k; ++i)
          if (row[i] > row[i + 1]) {
            std::swap(row[i], row[i + 1]);
            rev.push_back({k, i + 1});
            again = true;
          }
      }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  // Bruhat order, rowwise rank criterion
  bool bruhat_leq(const Permutation& o) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      int m = static_cast<int>(rows_[k].size());
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          int a = 0, b = 0;
          for (int t = 0; t <= i; ++t) {
            if (rows_[k][t] >= j) ++a;
            if (o.rows_[k][t] >= j) ++b;
          }
          if (a > b) return false;
        }
    }
    return true;
  }

  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < rows_.size(); ++k) {
      if (k) os << ",";
      os << "[";
      for (size_t i = 0; i < rows_[k].size(); ++i) os << (i ? "," : "") << rows_[k][i] + 1;
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::vector<std::vector<int>> rows_;
};

}  // namespace gtmod
