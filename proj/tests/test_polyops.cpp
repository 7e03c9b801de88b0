#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace gtmod;
using namespace testutil;

namespace {

XPoly random_poly(const std::vector<int>& vars, int terms, int deg) {
  XPoly f;
  for (int t = 0; t < terms; ++t) {
    XPoly m(Q(uniform(-4, 4)));
    for (int d = 0; d < deg; ++d)
      if (uniform(0, 1)) m *= XPoly::var(vars[uniform(0, static_cast<long>(vars.size()) - 1)]);
    f += m;
  }
  return f;
}

Q eval_q(const XPoly& f, const Point& p) { return eval_poly(f, p).rational(); }

Point const_point(int n, long c) {
  std::vector<std::vector<Affine>> rows(n);
  for (int k = 1; k <= n; ++k) rows[k - 1].assign(k, Affine(c));
  return Point::from_rows(rows);
}

}  // namespace

TEST(Polyops, GammaClosedForms) {
  EXPECT_EQ(gamma_poly(1, 1), X(1, 1));
  EXPECT_EQ(gamma_poly(2, 1), X(2, 1) + X(2, 2) + XPoly(Q(1)));
  EXPECT_EQ(gamma_poly(3, 0), XPoly(Q(3)));
}

TEST(Polyops, GammaMatchesRationalSum) {
  // sum_j (x_j + k - 1)^i prod_{m != j} (1 - 1/(x_j - x_m)) at distinct rational points
  for (int t = 0; t < 30; ++t) {
    int k = 1 + t % 4;
    std::vector<std::vector<Affine>> rows(k);
    std::vector<Q> x;
    for (int r = 1; r <= k; ++r)
      for (int i = 1; i <= r; ++i) rows[r - 1].push_back(Affine(Q(uniform(-50, 50), 7) + Q(i * 100)));
    for (auto& a : rows[k - 1]) x.push_back(a.constant());
    Point p = Point::from_rows(rows);
    for (int i = 1; i <= k; ++i) {
      Q want = 0;
      for (int j = 0; j < k; ++j) {
        Q term = 1;
        for (int e = 0; e < i; ++e) term *= x[j] + (k - 1);
        for (int m = 0; m < k; ++m)
          if (m != j) term *= 1 - 1 / (x[j] - x[m]);
        want += term;
      }
      EXPECT_EQ(gamma_value(k, i, p).rational(), want) << k << "," << i;
    }
  }
}

TEST(Polyops, DividedDifferenceDefinition) {
  std::vector<int> vars{xvar(3, 1), xvar(3, 2), xvar(3, 3), xvar(2, 1)};
  for (int t = 0; t < 50; ++t) {
    XPoly f = random_poly(vars, 5, 4);
    for (int i = 1; i <= 2; ++i) {
      Simple s{3, i};
      XPoly d = divided_difference(f, s);
      EXPECT_EQ(d * (X(3, i) - X(3, i + 1)), f - apply_simple(f, s));
      EXPECT_TRUE(divided_difference(d, s).is_zero());
    }
    XPoly a = divided_difference(divided_difference(divided_difference(f, Simple{3, 1}), Simple{3, 2}), Simple{3, 1});
    XPoly b = divided_difference(divided_difference(divided_difference(f, Simple{3, 2}), Simple{3, 1}), Simple{3, 2});
    EXPECT_EQ(a, b);
  }
}

TEST(Polyops, RationalDividedDifference) {
  RationalFunction f = f_fun(3, Block{1, 1});
  RationalFunction d = divided_difference(f, Simple{3, 1});
  Point p = Point::from_rows({{Affine(make_q(1, 3))}, {Affine(2), Affine(make_q(5, 2))}, {Affine(7), Affine(11), Affine(-4)}});
  Point sp = p;
  std::swap(sp.at(3, 1), sp.at(3, 2));
  Scalar want = (f.evaluate(p) - f.evaluate(sp)) / (Scalar(p.at(3, 1)) - Scalar(p.at(3, 2)));
  EXPECT_EQ(d.evaluate(p), want);
}

// d_sigma(f g)(p) = sum_tau D_{tau,sigma}(f)(p) d_tau(g)(p) at points constant on the row
TEST(Polyops, OperatorLeibnizRule) {
  int n = 4;
  std::vector<int> vars{xvar(4, 1), xvar(4, 2), xvar(4, 3), xvar(4, 4), xvar(3, 1)};
  auto all = group_elements(IntervalPartition::from_blocks({{{1, 1}}, {{1, 2}}, {{1, 3}}, {{1, 4}}}));
  int checked = 0;
  for (auto& sigma : all) {
    if (sigma.length() > 4) continue;
    for (int t = 0; t < 3; ++t) {
      XPoly f = random_poly(vars, 4, 4), g = random_poly(vars, 6, 5);
      Point p = const_point(n, uniform(-2, 2));
      Q lhs = eval_q(divided_difference(f * g, sigma), p);
      Q rhs = 0;
      for (auto& tau : all) {
        if (!tau.bruhat_leq(sigma)) {
          EXPECT_TRUE(ps_apply(tau, sigma, RationalFunction{f, XPoly(Q(1))}, p).is_zero());
          continue;
        }
        rhs += ps_apply(tau, sigma, RationalFunction{f, XPoly(Q(1))}, p).rational() *
               eval_q(divided_difference(g, tau), p);
      }
      EXPECT_EQ(lhs, rhs) << sigma.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Polyops, SimpleReflectionOperators) {
  Permutation s = Permutation::simple(3, {3, 1});
  const PSFamily& fam = ps_family(s);
  const PSOperator* top = fam.find(s);
  const PSOperator* low = fam.find(Permutation::identity(3));
  ASSERT_TRUE(top && low);
  EXPECT_EQ(top->differential_coefficient({}), 1);
  EXPECT_EQ(low->differential_coefficient({{xvar(3, 1), 1}}), 1);
  EXPECT_EQ(low->differential_coefficient({{xvar(3, 2), 1}}), -1);
  EXPECT_EQ(low->degree, 1);
}

// coefficient of d_{k,b}^{|J|} in D_{sigma,beta(I)}, sigma = (a+|J| ... b), |J| < |I|;
// l(beta(I)) = |I| - 1 bounds the order, so |J| = |I| has no such term
TEST(Polyops, CycleOperatorLeadingCoefficient) {
  int n = 4, k = 3;
  for (int a = 1; a <= 2; ++a)
    for (int b = a + 1; b <= 3; ++b) {
      Block I{a, b};
      Permutation beta = beta_of(n, k, I);
      for (int J = 0; J <= b - a; ++J) {
        std::vector<int> cyc;
        for (int i = a + J; i <= b; ++i) cyc.push_back(i);
        Permutation sigma = cyc.size() > 1 ? Permutation::cycle(n, k, cyc) : Permutation::identity(n);
        EXPECT_EQ(beta.length(), b - a);
        const PSOperator* op = ps_family(beta).find(sigma);
        ASSERT_TRUE(op) << sigma.to_string() << " " << beta.to_string();
        EXPECT_EQ(op->degree, beta.length() - sigma.length());
        Monomial m;
        if (J) m.push_back({xvar(k, b), J});
        Q want = (J % 2 ? Q(-1) : Q(1)) / factorial_q(J);
        EXPECT_EQ(op->differential_coefficient(m), want) << "I=[" << a << "," << b << "] J=" << J;
      }
    }
}

TEST(Polyops, CharacterEquality) {
  Point v = Point::from_rows({{Affine(1)}, {Affine(0), Affine(2)}});
  Point w = Point::from_rows({{Affine(1)}, {Affine(2), Affine(0)}});
  EXPECT_TRUE(char_equal(v, w));
  w.at(1, 1) = Affine(0);
  EXPECT_FALSE(char_equal(v, w));
}
