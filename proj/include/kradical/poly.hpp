#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "kradical/ball.hpp"
#include "kradical/scalar.hpp"

namespace kradical {

// Univariate polynomial, coefficients ascending. Always normalized: the
// leading coefficient is nonzero, the zero polynomial has no coefficients
// and degree -1.
struct Poly {
  std::vector<Scalar> c;

  Poly() = default;
  explicit Poly(std::vector<Scalar> cc) : c(std::move(cc)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_exact() const;

  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return Scalar();
    return c[i];
  }
  const Scalar& leading() const { return c.back(); }

  static Poly zero() { return Poly(); }
  static Poly constant(Scalar s);
  static Poly from_rationals(const std::vector<mpq_class>& v);
  // z^n
  static Poly power(int n);
  // Chebyshev polynomial T_n (cos(n t) = T_n(cos t)).
  static Poly chebyshev(int n);

  Poly derivative() const;

  QuadExt eval_exact(const QuadExt& z) const;
  ComplexBall eval_ball(const ComplexBall& z, long prec) const;
  MpComplex eval_mp(const MpComplex& z) const;

  std::string str() const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Scalar& s, const Poly& a);
bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

// h(g)
Poly compose(const Poly& h, const Poly& g);
Poly pow_poly(const Poly& a, int k);

// Exact-field kernel. All of these require is_exact() operands with
// compatible radicands and throw DomainError otherwise.
Poly monic(const Poly& a);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly gcd_exact(const Poly& a, const Poly& b);
// Squarefree decomposition: result[i] is the monic product of the roots of
// multiplicity i+1, so a = lc * prod result[i]^(i+1).
std::vector<Poly> yun_squarefree(const Poly& a);

}  // namespace kradical
