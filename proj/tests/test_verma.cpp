#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace gtmod;
using namespace testutil;

namespace {

using Vec = VermaModule::Vec;

Vec random_verma_vector(const VermaModule& V, int height) {
  std::vector<PbwMonomial> pool;
  for (int h = 0; h <= height; ++h)
    for (auto& [w, b] : V.blocks_of_height(h)) pool.insert(pool.end(), b.begin(), b.end());
  Vec v;
  for (int t = 0; t < 3; ++t) {
    Q c(uniform(-4, 4));
    if (c != 0) VermaModule::add_into(v, Vec{{pool[uniform(0, static_cast<long>(pool.size()) - 1)], c}});
  }
  return v;
}

Vec sub(Vec a, const Vec& b) {
  VermaModule::add_into(a, b, Q(-1));
  return a;
}

// cofactor-free Gaussian determinant
Q det(QMatrix A) {
  int d = A.rows();
  Q r = 1;
  for (int c = 0; c < d; ++c) {
    int p = c;
    while (p < d && A(p, c) == 0) ++p;
    if (p == d) return 0;
    if (p != c) {
      for (int j = 0; j < d; ++j) std::swap(A(p, j), A(c, j));
      r = -r;
    }
    r *= A(c, c);
    for (int i = c + 1; i < d; ++i) {
      Q f = A(i, c) / A(c, c);
      for (int j = c; j < d; ++j) A(i, j) -= f * A(c, j);
    }
  }
  return r;
}

long multiplicity_at(const VermaDecomposition& dec, const Shift& z) {
  for (auto& e : dec.entries)
    if (e.z == z) return e.multiplicity;
  return 0;
}

const VermaDecomposition& n3_depth(int depth) {
  static std::map<int, VermaDecomposition> memo;
  auto it = memo.find(depth);
  if (it == memo.end()) it = memo.emplace(depth, gt_decompose(VermaModule(3, VermaModule::minus_rho_tilde(3)), depth, 4)).first;
  return it->second;
}

}  // namespace

TEST(Verma, CartanAndHighestWeight) {
  std::vector<Q> lam{make_q(3, 2), Q(-1), Q(4)};
  VermaModule V(3, lam);
  for (int k = 1; k <= 3; ++k) {
    auto r = V.act(k, k, V.vacuum());
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.begin()->second, lam[k - 1]);
  }
  for (int k = 1; k < 3; ++k) EXPECT_TRUE(V.act(k, k + 1, V.vacuum()).empty());
  EXPECT_THROW(VermaModule(3, {Q(1)}), std::invalid_argument);
}

TEST(Verma, CommutatorIdentity) {
  for (int n : {3, 4}) {
    std::vector<Q> lam;
    for (int j = 0; j < n; ++j) lam.push_back(make_q(uniform(-3, 3), uniform(1, 3)));
    VermaModule V(n, lam);
    for (int t = 0; t < 100; ++t) {
      Vec v = random_verma_vector(V, 3);
      int p = static_cast<int>(uniform(1, n)), q = static_cast<int>(uniform(1, n));
      if (p == q) q = p % n + 1;
      Vec lhs = sub(V.act(p, q, V.act(q, p, v)), V.act(q, p, V.act(p, q, v)));
      EXPECT_EQ(lhs, sub(V.act(p, p, v), V.act(q, q, v))) << p << q;
    }
  }
}

TEST(Verma, BlockDimensionIsKostantCount) {
  VermaModule V(3, VermaModule::minus_rho_tilde(3));
  // partitions of a alpha1 + b alpha2 into {alpha1, alpha2, alpha1+alpha2}: 1 + min(a,b)
  for (int h = 0; h <= 5; ++h)
    for (auto& [w, basis] : V.blocks_of_height(h)) {
      long a = to_long(V.lambda()[0] - w[0]), b = to_long(w[2] - V.lambda()[2]);
      EXPECT_EQ(static_cast<long>(basis.size()), 1 + std::min(a, b));
    }
}

TEST(Verma, GammaMatricesCommuteAndActOnVacuum) {
  VermaModule V(3, VermaModule::minus_rho_tilde(3));
  for (int h = 0; h <= 4; ++h)
    for (auto& [w, basis] : V.blocks_of_height(h)) {
      std::vector<QMatrix> C;
      for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= k; ++i) C.push_back(V.gamma_matrix(k, i, basis));
      for (auto& A : C)
        for (auto& B : C) EXPECT_TRUE((A * B - B * A).is_zero());
    }
  std::vector<PbwMonomial> vac{V.vacuum()};
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= k; ++i)
      EXPECT_EQ(V.gamma_matrix(k, i, vac)(0, 0), gamma_value(k, i, Point(3)).rational());
}

TEST(Verma, CharPolyMatchesDeterminant) {
  for (int t = 0; t < 10; ++t) {
    int d = static_cast<int>(uniform(1, 5));
    QMatrix A(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) A(i, j) = make_q(uniform(-5, 5), uniform(1, 3));
    auto cp = char_poly(A);
    for (long x = -3; x <= 3; ++x) {
      Q val = 0;
      for (int e = d; e >= 0; --e) val = val * x + cp[e];
      EXPECT_EQ(val, det(QMatrix::identity(d).scaled(Q(x)) - A));
    }
  }
}

TEST(Verma, DepthZeroIsOneCharacter) {
  auto dec = gt_decompose(VermaModule(3, {Q(2), make_q(5, 2), Q(-1)}), 0);
  ASSERT_EQ(dec.entries.size(), 1u);
  EXPECT_EQ(dec.entries[0].z, Shift(3));
  EXPECT_EQ(dec.entries[0].multiplicity, 1);
  EXPECT_TRUE(dec.failures.empty());
}

TEST(Verma, MinusRhoN3) {
  const auto& dec = n3_depth(5);
  EXPECT_TRUE(dec.failures.empty());
  EXPECT_EQ(multiplicity_at(dec, Shift::from_rows(3, {{-1}, {0, -1}})), 2);
  auto rep = compare_with_predictions(dec);
  EXPECT_TRUE(rep.ok()) << (rep.mismatches.empty() ? "" : rep.mismatches.front());
  long mx = 0;
  for (auto& e : dec.entries) mx = std::max(mx, e.multiplicity);
  EXPECT_EQ(mx, 2);
}

TEST(Verma, MinusRhoN4Spots) {
  VermaModule V(4, VermaModule::minus_rho_tilde(4));
  auto dec = gt_decompose(V, 3, 4);
  EXPECT_TRUE(dec.failures.empty());
  EXPECT_EQ(multiplicity_at(dec, Shift::from_rows(4, {{0}, {0, -1}, {0, 0, 0}})), 1);
  long m21 = multiplicity_at(dec, Shift::from_rows(4, {{-1}, {0, -1}, {0, 0, -1}}));
  EXPECT_GE(m21, 1);
  EXPECT_LE(m21, 4);
  // weight lambda - alpha_{1,4}: four PBW monomials
  std::vector<Q> w = V.lambda();
  w[0] -= 1;
  w[3] += 1;
  long total = 0;
  for (auto& e : dec.entries)
    if (e.cartan_weight == w) total += e.multiplicity;
  EXPECT_EQ(total, 4);
}

// oracle multiplicities against the engine submodule generated by D_e(0)
TEST(Verma, OracleMatchesEngine) {
  const auto& dec = n3_depth(3);
  VermaModule V(3, VermaModule::minus_rho_tilde(3));
  UniversalModule M{Point(3)};
  std::map<std::vector<Q>, std::vector<TableauVector>> span;
  for (int h = 0; h <= 3; ++h)
    for (auto& [w, basis] : V.blocks_of_height(h))
      for (auto& m : basis) {
        TableauVector v = socle_generator(M);
        for (int t = static_cast<int>(m.size()) - 1; t >= 0; --t)
          for (int e = 0; e < m[t]; ++e) v = M.act_E(V.factors()[t].first, V.factors()[t].second, v);
        span[w].push_back(v);
      }
  ASSERT_FALSE(dec.entries.empty());
  for (auto& e : dec.entries) {
    std::vector<TableauVector> proj;
    std::map<TableauKey, int> row;
    for (auto& v : span[e.cartan_weight]) {
      proj.push_back(M.project(Point(3) + e.z, v));
      for (auto& [k, c] : proj.back().terms()) row.emplace(k, static_cast<int>(row.size()));
    }
    Matrix<Scalar> A(static_cast<int>(row.size()), static_cast<int>(proj.size()));
    for (size_t c = 0; c < proj.size(); ++c)
      for (auto& [k, x] : proj[c].terms()) A(row[k], static_cast<int>(c)) = x;
    long rank = static_cast<long>(proj.size()) - static_cast<long>(A.kernel().size());
    EXPECT_EQ(rank, e.multiplicity) << e.z.to_string();
  }
}
