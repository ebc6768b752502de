#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "kradical/ball.hpp"
#include "kradical/qfield.hpp"

namespace kradical {

// Coefficient value: either exact in Q(sqrt(d)) or a certified numeric
// enclosure. Numeric scalars only arise from inputs that mix radicands;
// they are stored as a ball at the precision ceiling so every later
// working precision can be served by rounding down.
class Scalar {
 public:
  Scalar() : exact_(true), v_() {}
  explicit Scalar(QuadExt v) : exact_(true), v_(std::move(v)) {}
  static Scalar rational(mpq_class q) {
    return Scalar(QuadExt::rational(std::move(q)));
  }
  static Scalar from_long(long n) { return rational(mpq_class(n)); }
  static Scalar numeric(ComplexBall hi);

  bool is_exact() const { return exact_; }
  const QuadExt& exact() const;
  bool is_zero() const;
  // Enclosure at the given working precision.
  ComplexBall ball(long prec) const;
  // Plain midpoint value for the unverified numeric kernels.
  MpComplex mp(long prec) const;

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  bool exact_;
  QuadExt v_;      // valid when exact_
  ComplexBall hi_;  // valid when !exact_, at kPrecisionCeiling
};

inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

}  // namespace kradical
