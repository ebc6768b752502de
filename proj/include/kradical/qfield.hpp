#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "kradical/ball.hpp"

namespace kradical {

// Element x + y*sqrt(d) of a real or imaginary quadratic field. d is
// squarefree with |d| >= 2, or 0 for plain rationals; y == 0 forces d == 0
// so equal values compare equal regardless of how they were built. For
// d < 0 the embedding takes sqrt(d) to i*sqrt(|d|).
struct QuadExt {
  mpq_class x = 0, y = 0;
  long d = 0;

  QuadExt() = default;
  QuadExt(mpq_class xx, mpq_class yy, long dd)
      : x(std::move(xx)), y(std::move(yy)), d(dd) {
    if (y == 0) d = 0;
  }

  static QuadExt rational(mpq_class q) { return QuadExt(std::move(q), 0, 0); }
  static QuadExt root(long dd, mpq_class coeff = 1) {
    return QuadExt(0, std::move(coeff), dd);
  }

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_rational() const { return y == 0; }

  QuadExt conj_root() const { return QuadExt(x, -y, d); }
  mpq_class norm() const { return x * x - d * y * y; }
};

// True if the two values can live in one field (equal d, or either rational).
bool compatible(const QuadExt& a, const QuadExt& b);
// The common d of two compatible values.
long merged_d(const QuadExt& a, const QuadExt& b);

QuadExt operator+(const QuadExt& a, const QuadExt& b);
QuadExt operator-(const QuadExt& a, const QuadExt& b);
QuadExt operator*(const QuadExt& a, const QuadExt& b);
QuadExt operator/(const QuadExt& a, const QuadExt& b);
QuadExt operator-(const QuadExt& a);
bool operator==(const QuadExt& a, const QuadExt& b);
inline bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

ComplexBall quadext_ball(const QuadExt& a, long prec);
MpComplex quadext_mp(const QuadExt& a, long prec);
std::string to_string(const QuadExt& a);

// n = s^2 * m with m squarefree; returns {s, m}.
std::pair<unsigned long, unsigned long> squarefree_split(unsigned long n);

}  // namespace kradical
