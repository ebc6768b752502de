#pragma once

#include <cmath>
#include <limits>

namespace kradical {

// Nonnegative magnitude value m * 2^e used for ball radii and other rigorous
// upper bounds. All operations round up: the stored value always dominates
// the true one. Mantissa is kept in [0.5, 1) so the exponent alone orders
// values of similar mantissa.
struct Mag {
  double m = 0.0;
  long e = 0;

  bool is_zero() const { return m == 0.0; }

  static Mag zero() { return Mag{}; }

  // Upper bound for mm * 2^ee, bumping the mantissa to absorb rounding of
  // whatever double arithmetic produced mm.
  static Mag from_parts(double mm, long ee) {
    if (mm <= 0.0) return Mag{};
    int k = 0;
    double f = std::frexp(mm, &k);
    f = std::nextafter(std::nextafter(f, 2.0), 2.0);
    if (f >= 1.0) {
      f = 0.5;
      ++k;
    }
    return Mag{f, ee + k};
  }

  static Mag from_double(double v) { return from_parts(std::fabs(v), 0); }

  static Mag pow2(long ee) { return Mag{0.5, ee + 1}; }

  double to_double() const {
    if (is_zero()) return 0.0;
    if (e > 1020) return std::numeric_limits<double>::infinity();
    if (e < -1060) return std::ldexp(1.0, -1060);
    return std::ldexp(m, static_cast<int>(e));
  }
};

inline Mag operator+(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Mag& hi = (a.e >= b.e) ? a : b;
  const Mag& lo = (a.e >= b.e) ? b : a;
  long d = hi.e - lo.e;
  if (d > 80) return Mag::from_parts(hi.m + std::ldexp(1.0, -60), hi.e);
  return Mag::from_parts(hi.m + std::ldexp(lo.m, -static_cast<int>(d)), hi.e);
}

inline Mag operator*(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag{};
  return Mag::from_parts(a.m * b.m, a.e + b.e);
}

inline bool operator<(const Mag& a, const Mag& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  if (a.e != b.e) return a.e < b.e;
  return a.m < b.m;
}

inline bool operator<=(const Mag& a, const Mag& b) { return !(b < a); }

inline Mag mag_max(const Mag& a, const Mag& b) { return (a < b) ? b : a; }

inline Mag mag_scale2(const Mag& a, long ee) {
  if (a.is_zero()) return a;
  return Mag{a.m, a.e + ee};
}

}  // namespace kradical
