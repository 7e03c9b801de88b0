#pragma once

#include <random>

#include "gtmod/gtmod.hpp"

namespace testutil {

using namespace gtmod;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}
inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// entries param + small integer, drawn from {0, a, b}
inline Point random_point(int n, int spread = 2, int params = 2) {
  static const char* names[] = {"", "a", "b", "c"};
  std::vector<std::vector<Affine>> rows(n);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      int p = static_cast<int>(uniform(0, params));
      Affine x(uniform(-spread, spread));
      if (p) x += Affine::param(names[p]);
      rows[k - 1].push_back(x);
    }
  return Point::from_rows(rows);
}

inline Point random_seed(int n) { return seed_of(random_point(n)).seed; }

inline Permutation random_perm(int n) {
  std::vector<std::vector<int>> rows(n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= k; ++i) rows[k - 1].push_back(i);
    std::shuffle(rows[k - 1].begin(), rows[k - 1].end(), rng());
  }
  return Permutation::from_rows(rows);
}

inline Shift random_shift(int n, long lo, long hi) {
  Shift z(n);
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) z.at(k, i) = uniform(lo, hi);
  return z;
}

inline std::vector<Shift> box_in_d(const Point& seed, long lo, long hi) {
  std::vector<Shift> out;
  for_each_in_box(seed.n(), lo, hi, [&](const Shift& z) {
    if (d_set_member(seed, z)) out.push_back(z);
  });
  return out;
}

}  // namespace testutil
