#include "kradical/scalar.hpp"

#include "kradical/errors.hpp"

namespace kradical {

Scalar Scalar::numeric(ComplexBall hi) {
  Scalar s;
  s.exact_ = false;
  s.hi_ = std::move(hi);
  return s;
}

const QuadExt& Scalar::exact() const {
  if (!exact_) throw DomainError("exact value requested from numeric scalar");
  return v_;
}

bool Scalar::is_zero() const {
  return exact_ ? v_.is_zero() : hi_.contains_zero();
}

ComplexBall Scalar::ball(long prec) const {
  if (exact_) return quadext_ball(v_, prec);
  if (prec >= hi_.prec()) return hi_;
  return round_ball(hi_, prec);
}

MpComplex Scalar::mp(long prec) const { return ball(prec).mid; }

std::string Scalar::str() const {
  if (exact_) return to_string(v_);
  return to_string(hi_, 25);
}

namespace {

bool both_exact_compatible(const Scalar& a, const Scalar& b) {
  return a.is_exact() && b.is_exact() && compatible(a.exact(), b.exact());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (both_exact_compatible(a, b)) return Scalar(a.exact() + b.exact());
  return Scalar::numeric(a.ball(kPrecisionCeiling) + b.ball(kPrecisionCeiling));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (both_exact_compatible(a, b)) return Scalar(a.exact() - b.exact());
  return Scalar::numeric(a.ball(kPrecisionCeiling) - b.ball(kPrecisionCeiling));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (both_exact_compatible(a, b)) return Scalar(a.exact() * b.exact());
  return Scalar::numeric(a.ball(kPrecisionCeiling) * b.ball(kPrecisionCeiling));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (both_exact_compatible(a, b)) return Scalar(a.exact() / b.exact());
  return Scalar::numeric(a.ball(kPrecisionCeiling) / b.ball(kPrecisionCeiling));
}

Scalar operator-(const Scalar& a) {
  if (a.exact_) return Scalar(-a.v_);
  return Scalar::numeric(-a.hi_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  throw DomainError("equality test on numeric scalar");
}

}  // namespace kradical
