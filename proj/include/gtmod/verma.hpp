#pragma once
// Brute-force Verma modules M(lambda) in a PBW basis and their Gelfand-Tsetlin
// decomposition by exact linear algebra.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cones.hpp"
#include "linalg.hpp"
#include "polyops.hpp"
#include "relations.hpp"

namespace gtmod {

// exponents of E_{j,i} (j > i) in lexicographic order of (j,i), applied to v_lambda
using PbwMonomial = std::vector<int>;

class VermaModule {
 public:
  using Vec = std::map<PbwMonomial, Q>;

  VermaModule(int n, std::vector<Q> lambda) : n_(n), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != n) throw std::invalid_argument("lambda has wrong length");
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        index_[{j, i}] = static_cast<int>(pairs_.size());
        pairs_.push_back({j, i});
      }
  }
  static std::vector<Q> minus_rho_tilde(int n) {
    std::vector<Q> l(n);
    for (int j = 0; j < n; ++j) l[j] = j;
    return l;
  }

  int n() const { return n_; }
  const std::vector<Q>& lambda() const { return lambda_; }
  const std::vector<std::pair<int, int>>& factors() const { return pairs_; }
  PbwMonomial vacuum() const { return PbwMonomial(pairs_.size(), 0); }

  std::vector<Q> weight(const PbwMonomial& m) const {
    std::vector<Q> w = lambda_;
    for (size_t t = 0; t < pairs_.size(); ++t) {
      w[pairs_[t].first - 1] += m[t];
      w[pairs_[t].second - 1] -= m[t];
    }
    return w;
  }
  static int depth(const PbwMonomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }
  int height(const PbwMonomial& m) const {
    int h = 0;
    for (size_t t = 0; t < pairs_.size(); ++t) h += m[t] * (pairs_[t].first - pairs_[t].second);
    return h;
  }

  // E_{p,q} on a PBW monomial
  Vec act(int p, int q, const PbwMonomial& m) const {
    if (p > q) return leftmul(index_.at({p, q}), m);
    auto key = std::make_tuple(p, q, m);
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = act_memo_.find(key);
      if (it != act_memo_.end()) return it->second;
    }
    Vec r;
    if (p == q) {
      Q w = weight(m)[p - 1];
      if (w != 0) r[m] = w;
    } else {
      int f = first_factor(m);
      if (f >= 0) {
        PbwMonomial rest = m;
        --rest[f];
        auto [a, b] = pairs_[f];
        // E_pq F rest = F (E_pq rest) + [E_pq, F] rest
        add_into(r, leftmul(f, act(p, q, rest)));
        if (q == a) add_into(r, act(p, b, rest));
        if (b == p) add_into(r, act(a, q, rest), Q(-1));
      }
    }
    std::lock_guard<std::mutex> lk(mu_);
    act_memo_.emplace(key, r);
    return r;
  }
  Vec act(int p, int q, const Vec& v) const {
    Vec r;
    for (auto& [m, c] : v) add_into(r, act(p, q, m), c);
    return r;
  }

  // monomials of height h, grouped by weight
  std::map<std::vector<Q>, std::vector<PbwMonomial>> blocks_of_height(int h) const {
    std::map<std::vector<Q>, std::vector<PbwMonomial>> out;
    PbwMonomial cur = vacuum();
    std::function<void(size_t, int)> rec = [&](size_t t, int left) {
      if (t == pairs_.size()) {
        if (left == 0) out[weight(cur)].push_back(cur);
        return;
      }
      int w = pairs_[t].first - pairs_[t].second;
      for (int e = 0; e * w <= left; ++e) {
        cur[t] = e;
        rec(t + 1, left - e * w);
      }
      cur[t] = 0;
    };
    rec(0, h);
    return out;
  }

  // matrix of c_{k,i} on a weight block (columns = images of basis monomials)
  QMatrix gamma_matrix(int k, int i, const std::vector<PbwMonomial>& basis) const {
    int d = static_cast<int>(basis.size());
    std::map<PbwMonomial, int> pos;
    for (int t = 0; t < d; ++t) pos[basis[t]] = t;
    QMatrix M(d, d);
    for (int c = 0; c < d; ++c) {
      Vec start{{basis[c], Q(1)}};
      Vec total;
      for (int r1 = 1; r1 <= k; ++r1) {
        std::vector<Vec> u(k + 1);
        for (int s = 1; s <= k; ++s) u[s] = act(s, r1, start);
        for (int step = 1; step < i; ++step) {
          std::vector<Vec> nu(k + 1);
          for (int s = 1; s <= k; ++s)
            for (int q = 1; q <= k; ++q)
              if (!u[q].empty()) add_into(nu[s], act(s, q, u[q]));
          u = std::move(nu);
        }
        add_into(total, u[r1]);
      }
      for (auto& [m, v] : total) {
        auto it = pos.find(m);
        if (it == pos.end()) throw std::logic_error("c_{k,i} left its weight block");
        M(it->second, c) = v;
      }
    }
    return M;
  }

  static void add_into(Vec& r, const Vec& v, const Q& c = Q(1)) {
    for (auto& [m, x] : v) {
      Q& y = r[m];
      y += x * c;
      if (y == 0) r.erase(m);
    }
  }

 private:
  int first_factor(const PbwMonomial& m) const {
    for (size_t t = 0; t < m.size(); ++t)
      if (m[t] > 0) return static_cast<int>(t);
    return -1;
  }
  // F_f * m in PBW order
  Vec leftmul(int f, const PbwMonomial& m) const {
    int g = first_factor(m);
    if (g < 0 || f <= g) {
      PbwMonomial r = m;
      ++r[f];
      return {{r, Q(1)}};
    }
    auto key = std::make_pair(f, m);
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = left_memo_.find(key);
      if (it != left_memo_.end()) return it->second;
    }
    PbwMonomial rest = m;
    --rest[g];
    // F G rest = G (F rest) + [F, G] rest
    Vec r;
    for (auto& [mm, c] : leftmul(f, rest)) add_into(r, leftmul(g, mm), c);
    auto [a, b] = pairs_[f];
    auto [cc, d] = pairs_[g];
    if (b == cc) add_into(r, leftmul(index_.at({a, d}), rest));
    if (d == a) add_into(r, leftmul(index_.at({cc, b}), rest), Q(-1));
    std::lock_guard<std::mutex> lk(mu_);
    left_memo_.emplace(key, r);
    return r;
  }
  Vec leftmul(int f, const Vec& v) const {
    Vec r;
    for (auto& [m, c] : v) add_into(r, leftmul(f, m), c);
    return r;
  }

  int n_;
  std::vector<Q> lambda_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> index_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, int, PbwMonomial>, Vec> act_memo_;
  mutable std::map<std::pair<int, PbwMonomial>, Vec> left_memo_;
};

// characteristic polynomial det(tI - A), coefficients from t^0 upward (Faddeev-LeVerrier)
inline std::vector<Q> char_poly(const QMatrix& A) {
  int d = A.rows();
  std::vector<Q> c(d + 1);
  c[d] = 1;
  QMatrix M(d, d);
  for (int k = 1; k <= d; ++k) {
    QMatrix AM = A * M;
    for (int i = 0; i < d; ++i) AM(i, i) += c[d - k + 1];
    M = AM;
    QMatrix AM2 = A * M;
    Q tr = 0;
    for (int i = 0; i < d; ++i) tr += AM2(i, i);
    c[d - k] = -tr / k;
  }
  return c;
}

struct CharacterEntry {
  Shift z;            // relative to the highest weight point
  Point point;        // normal form of the character
  std::vector<Q> cartan_weight;
  long multiplicity = 0;
};

struct VermaDecomposition {
  int n = 0;
  std::vector<Q> lambda;
  int depth = 0;
  Point base;  // HW(lambda, e)
  std::vector<CharacterEntry> entries;
  std::vector<std::vector<Q>> weights;  // explored Cartan weights
  std::vector<std::string> failures;
};

namespace detail {
// shifts z (rows < n) with |entries| <= bound and prescribed row sums
inline void shifts_with_row_sums(int n, long bound, const std::vector<long>& sums,
                                 const std::function<void(const Shift&)>& f) {
  Shift z(n);
  std::function<void(int, int, long)> rec = [&](int k, int i, long left) {
    if (k == n) {
      f(z);
      return;
    }
    if (i == k) {
      if (left < -bound || left > bound) return;
      z.at(k, i) = left;
      if (k + 1 < n) rec(k + 1, 1, sums[k]);
      else rec(k + 1, 1, 0);
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      z.at(k, i) = v;
      rec(k, i + 1, left - v);
    }
  };
  if (n == 1) {
    f(z);
    return;
  }
  rec(1, 1, sums[0]);
}
}  // namespace detail

// Gelfand-Tsetlin decomposition of the weight blocks of height <= depth
inline VermaDecomposition gt_decompose(const VermaModule& V, int depth, int jobs = 1) {
  int n = V.n();
  VermaDecomposition out;
  out.n = n;
  out.lambda = V.lambda();
  out.depth = depth;
  std::vector<Affine> lam;
  for (auto& q : V.lambda()) lam.push_back(Affine(q));
  std::vector<int> id(n);
  for (int j = 0; j < n; ++j) id[j] = j + 1;
  out.base = hw_tableau(lam, id);
  const Point& base = out.base;
  struct Task {
    std::vector<Q> weight;
    std::vector<PbwMonomial> basis;
  };
  std::vector<Task> tasks;
  for (int h = 0; h <= depth; ++h)
    for (auto& [w, basis] : V.blocks_of_height(h)) tasks.push_back({w, basis});

  std::vector<std::vector<CharacterEntry>> results(tasks.size());
  std::vector<std::string> errs(tasks.size());
  auto work = [&](size_t t) {
    const auto& task = tasks[t];
    int d = static_cast<int>(task.basis.size());
    std::vector<std::pair<Index, QMatrix>> C;
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= k; ++i) C.push_back({{k, i}, V.gamma_matrix(k, i, task.basis)});
    // generic combination
    QMatrix G(d, d);
    std::vector<Q> coef;
    for (size_t j = 0; j < C.size(); ++j) {
      coef.push_back(Q(static_cast<long>(2 * j + 3)));
      G = G + C[j].second.scaled(coef.back());
    }
    auto cp = char_poly(G);
    // row sums pinned by the Cartan weight: sum_{l<=k} (mu_l - (l-1))
    std::vector<long> sums(n);
    Q acc = 0;
    for (int k = 1; k <= n; ++k) {
      acc += task.weight[k - 1] - (k - 1);
      Q base_sum = 0;
      for (auto& a : base.row(k)) base_sum += a.constant();
      sums[k - 1] = to_long(acc - base_sum);
    }
    std::set<std::string> seen;
    long total = 0;
    detail::shifts_with_row_sums(n, depth, sums, [&](const Shift& z) {
      Point p = normal_form(base + z).point;
      if (!seen.insert(p.to_string()).second) return;
      Q g = 0;
      std::vector<Q> gam;
      for (size_t j = 0; j < C.size(); ++j) {
        gam.push_back(gamma_value(C[j].first.k, C[j].first.i, p).rational());
        g += coef[j] * gam.back();
      }
      Q val = 0;
      for (int e = d; e >= 0; --e) val = val * g + cp[e];
      if (val != 0) return;
      std::vector<QMatrix> pows;
      for (size_t j = 0; j < C.size(); ++j)
        pows.push_back((C[j].second - QMatrix::identity(d).scaled(gam[j])).pow(d));
      long mult = static_cast<long>(QMatrix::vstack(pows).kernel().size());
      if (mult == 0) return;
      Shift rel(n);
      for (int k = 1; k < n; ++k)
        for (int i = 1; i <= k; ++i) rel.at(k, i) = *int_diff(p.at(k, i), base.at(k, i));
      results[t].push_back({rel, p, task.weight, mult});
      total += mult;
    });
    if (total != d) {
      std::string w;
      for (auto& q : task.weight) w += q.get_str() + " ";
      errs[t] = "weight [" + w + "]: matched " + std::to_string(total) + " of " + std::to_string(d) + " dimensions";
    }
  };
  if (jobs <= 1) {
    for (size_t t = 0; t < tasks.size(); ++t) work(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (size_t t; (t = next++) < tasks.size();) work(t);
      });
    for (auto& th : pool) th.join();
  }
  for (size_t t = 0; t < tasks.size(); ++t) {
    out.weights.push_back(tasks[t].weight);
    for (auto& e : results[t]) out.entries.push_back(e);
    if (!errs[t].empty()) out.failures.push_back(errs[t]);
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CharacterEntry& a, const CharacterEntry& b) { return a.z < b.z; });
  return out;
}

struct PredictionReport {
  long characters = 0;
  long essential_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// support / essential support predictions for lambda = -rho~
inline PredictionReport compare_with_predictions(const VermaDecomposition& dec) {
  PredictionReport rep;
  int n = dec.n;
  Point zero(n);
  std::map<Shift, long> found;
  for (auto& e : dec.entries) found[e.z] = e.multiplicity;
  rep.characters = static_cast<long>(found.size());
  for (auto& [z, m] : found) {
    if (!verma_supp_test(z)) rep.mismatches.push_back("character outside the support cone: " + z.to_string());
    long fo = fo_bound(zero, z);
    if (verma_essupp_test(z)) {
      ++rep.essential_checked;
      if (m != fo)
        rep.mismatches.push_back("essential " + z.to_string() + " multiplicity " + std::to_string(m) + " != " +
                                 std::to_string(fo));
    } else if (m >= fo) {
      rep.mismatches.push_back("non-essential " + z.to_string() + " multiplicity " + std::to_string(m) +
                               " not below " + std::to_string(fo));
    }
  }
  // every predicted z at an explored weight is found
  std::set<std::vector<Q>> explored(dec.weights.begin(), dec.weights.end());
  for_each_in_box(n, -dec.depth, 0, [&](const Shift& z) {
    if (!d_set_member(zero, z) || !verma_supp_test(z)) return;
    UniversalModule M(zero);
    std::vector<Q> w;
    for (auto& s : M.cartan_weight(z)) w.push_back(s.rational());
    if (!explored.count(w)) return;
    if (!found.count(z)) rep.mismatches.push_back("predicted support point missing: " + z.to_string());
  });
  for (auto& f : dec.failures) rep.mismatches.push_back(f);
  return rep;
}

}  // namespace gtmod
