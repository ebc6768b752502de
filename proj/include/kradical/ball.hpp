#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <complex>
#include <string>
#include <utility>

#include "kradical/mag.hpp"

namespace kradical {

// RAII wrapper over a single mpfr_t. Plain floating point; rounding errors
// are tracked by the ball layer, not here.
class Mp {
 public:
  explicit Mp(long prec = 53) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Mp(const Mp& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mp(Mp&& o) noexcept {
    mpfr_init2(v_, 53);
    mpfr_swap(v_, o.v_);
  }
  Mp& operator=(const Mp& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mp& operator=(Mp&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }

  static Mp from_q(const mpq_class& q, long prec) {
    Mp r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static Mp from_si(long x, long prec) {
    Mp r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

// Complex number at a uniform precision, no radius. Used for the plain
// numeric kernels (root iteration, path tracking); certified statements go
// through ComplexBall.
struct MpComplex {
  Mp re, im;

  explicit MpComplex(long prec = 53) : re(prec), im(prec) {}
  MpComplex(Mp r, Mp i) : re(std::move(r)), im(std::move(i)) {}

  long prec() const { return re.prec(); }
  std::complex<double> d() const { return {re.d(), im.d()}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  static MpComplex from_q(const mpq_class& r, const mpq_class& i, long prec) {
    return MpComplex(Mp::from_q(r, prec), Mp::from_q(i, prec));
  }
  static MpComplex from_si(long r, long prec) {
    return MpComplex(Mp::from_si(r, prec), Mp(prec));
  }
  static MpComplex from_d(std::complex<double> z, long prec) {
    MpComplex c(prec);
    mpfr_set_d(c.re.get(), z.real(), MPFR_RNDN);
    mpfr_set_d(c.im.get(), z.imag(), MPFR_RNDN);
    return c;
  }
};

MpComplex operator+(const MpComplex& a, const MpComplex& b);
MpComplex operator-(const MpComplex& a, const MpComplex& b);
MpComplex operator*(const MpComplex& a, const MpComplex& b);
MpComplex operator/(const MpComplex& a, const MpComplex& b);
MpComplex operator-(const MpComplex& a);
MpComplex conj(const MpComplex& a);

// |a|^2 at a's precision.
Mp abs2(const MpComplex& a);
// Rigorous bounds on |a|.
Mag upper_abs(const MpComplex& a);
Mag lower_abs(const MpComplex& a);
// Rigorous bounds on |a - b|.
Mag dist_upper(const MpComplex& a, const MpComplex& b);
Mag dist_lower(const MpComplex& a, const MpComplex& b);

// Complex ball: certified enclosure mid +- rad (disc in C).
struct ComplexBall {
  MpComplex mid;
  Mag rad;

  explicit ComplexBall(long prec = 53) : mid(prec) {}
  explicit ComplexBall(MpComplex m, Mag r = Mag::zero())
      : mid(std::move(m)), rad(r) {}

  long prec() const { return mid.prec(); }

  static ComplexBall from_q(const mpq_class& re, const mpq_class& im,
                            long prec);
  static ComplexBall from_si(long re, long prec);
  // Enclosure of sqrt(n) for a nonnegative integer n.
  static ComplexBall sqrt_ui(unsigned long n, long prec);

  bool contains_zero() const;
  bool nonzero_certified() const;
  // True if the disc `inner` is contained in this disc.
  bool contains(const ComplexBall& inner) const;
  // True if the exact rational point re + im*i lies in this disc.
  bool contains_q(const mpq_class& re, const mpq_class& im) const;

  Mag upper() const;  // upper bound of |z| over the disc
  Mag lower() const;  // lower bound of |z| over the disc (0 if it straddles)
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a);
ComplexBall inv(const ComplexBall& a);
ComplexBall mul_si(const ComplexBall& a, long k);

bool disjoint(const ComplexBall& a, const ComplexBall& b);
bool overlaps(const ComplexBall& a, const ComplexBall& b);

// Round an enclosure to a lower working precision (keeps rigor).
ComplexBall round_ball(const ComplexBall& a, long prec);

// Decimal rendering "re+im*i (+-r)" with a fixed digit budget; deterministic
// for a given input, used by report serialization.
std::string to_string(const ComplexBall& a, int digits = 20);
std::string to_string_mp(const Mp& x, int digits = 20);

}  // namespace kradical
