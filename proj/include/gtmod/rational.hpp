#pragma once
// Exact rationals backed by GMP.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace gtmod {

using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

inline long to_long(const Q& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer overflow");
  return q.get_num().get_si();
}

inline Q floor_q(const Q& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(f);
}

// "p" or "p/q"
inline Q parse_q(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw std::invalid_argument("bad rational: " + s);
  Q r;
  try {
    r.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + s);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

inline Q factorial_q(int m) {
  Q r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace gtmod
