#include "kradical/ball.hpp"

#include <algorithm>

#include "kradical/errors.hpp"

namespace kradical {

namespace {

// 1 ulp bound on the rounding error of the last mpfr operation that produced
// x with ternary value t at x's precision.
Mag round_err(mpfr_srcptr x, int t) {
  if (t == 0) return Mag::zero();
  if (mpfr_zero_p(x)) return Mag::pow2(mpfr_get_emin() + 2);
  return Mag::pow2(mpfr_get_exp(x) - mpfr_get_prec(x));
}

// Lower bound of lo - up where lo underestimates and up overestimates.
Mag mag_sub_lower(const Mag& lo, const Mag& up) {
  if (up.is_zero()) return lo;
  if (!(up < lo)) return Mag::zero();
  long d = lo.e - up.e;
  double s = lo.m;
  if (d <= 80) s -= std::ldexp(up.m, -static_cast<int>(d));
  s -= std::ldexp(1.0, -50);
  if (s <= 0.0) return Mag::zero();
  int k = 0;
  double f = std::frexp(s, &k);
  f = std::nextafter(std::nextafter(f, 0.0), 0.0);
  if (f < 0.5) {
    f = std::nextafter(1.0, 0.0);
    --k;
  }
  return Mag{f, lo.e + k};
}

Mag mag_div_upper(const Mag& num_up, const Mag& den_lo) {
  if (num_up.is_zero()) return Mag::zero();
  if (den_lo.is_zero()) throw DomainError("division by unseparated magnitude");
  return Mag::from_parts(num_up.m / den_lo.m, num_up.e - den_lo.e);
}

Mag mag_from_mpfr_upper(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Mag::zero();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x, MPFR_RNDA);
  return Mag::from_parts(std::fabs(d), e);
}

Mag mag_from_mpfr_lower(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Mag::zero();
  long e = 0;
  double d = std::fabs(mpfr_get_d_2exp(&e, x, MPFR_RNDZ));
  d = std::nextafter(std::nextafter(d, 0.0), 0.0);
  int k = 0;
  double f = std::frexp(d, &k);
  if (f <= 0.0) return Mag::zero();
  return Mag{f, e + k};
}

}  // namespace

MpComplex operator+(const MpComplex& a, const MpComplex& b) {
  long p = std::max(a.prec(), b.prec());
  MpComplex r(p);
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

MpComplex operator-(const MpComplex& a, const MpComplex& b) {
  long p = std::max(a.prec(), b.prec());
  MpComplex r(p);
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  long p = std::max(a.prec(), b.prec());
  MpComplex r(p);
  Mp t1(p), t2(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  return r;
}

MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  long p = std::max(a.prec(), b.prec());
  MpComplex r(p);
  Mp den(p), t1(p), t2(p);
  mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), t1.get(), den.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), t1.get(), den.get(), MPFR_RNDN);
  return r;
}

MpComplex operator-(const MpComplex& a) {
  MpComplex r(a.prec());
  mpfr_neg(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), a.im.get(), MPFR_RNDN);
  return r;
}

MpComplex conj(const MpComplex& a) {
  MpComplex r(a.prec());
  mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), a.im.get(), MPFR_RNDN);
  return r;
}

Mp abs2(const MpComplex& a) {
  long p = a.prec();
  Mp r(p), t(p);
  mpfr_mul(r.get(), a.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
  return r;
}

Mag upper_abs(const MpComplex& a) {
  Mp t(64);
  mpfr_hypot(t.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  return mag_from_mpfr_upper(t.get());
}

Mag lower_abs(const MpComplex& a) {
  Mp t(64);
  mpfr_hypot(t.get(), a.re.get(), a.im.get(), MPFR_RNDD);
  return mag_from_mpfr_lower(t.get());
}

namespace {

MpComplex sub_tracked(const MpComplex& a, const MpComplex& b, Mag& err) {
  long p = std::max(a.prec(), b.prec());
  MpComplex d(p);
  int t1 = mpfr_sub(d.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  int t2 = mpfr_sub(d.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  err = round_err(d.re.get(), t1) + round_err(d.im.get(), t2);
  return d;
}

}  // namespace

Mag dist_upper(const MpComplex& a, const MpComplex& b) {
  Mag err;
  MpComplex d = sub_tracked(a, b, err);
  return upper_abs(d) + err;
}

Mag dist_lower(const MpComplex& a, const MpComplex& b) {
  Mag err;
  MpComplex d = sub_tracked(a, b, err);
  return mag_sub_lower(lower_abs(d), err);
}

ComplexBall ComplexBall::from_q(const mpq_class& re, const mpq_class& im,
                                long prec) {
  ComplexBall r(prec);
  int t1 = mpfr_set_q(r.mid.re.get(), re.get_mpq_t(), MPFR_RNDN);
  int t2 = mpfr_set_q(r.mid.im.get(), im.get_mpq_t(), MPFR_RNDN);
  r.rad = round_err(r.mid.re.get(), t1) + round_err(r.mid.im.get(), t2);
  return r;
}

ComplexBall ComplexBall::from_si(long re, long prec) {
  ComplexBall r(prec);
  mpfr_set_si(r.mid.re.get(), re, MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::sqrt_ui(unsigned long n, long prec) {
  ComplexBall r(prec);
  int t = mpfr_sqrt_ui(r.mid.re.get(), n, MPFR_RNDN);
  r.rad = round_err(r.mid.re.get(), t);
  return r;
}

bool ComplexBall::contains_zero() const { return !(rad < lower_abs(mid)); }

bool ComplexBall::nonzero_certified() const { return rad < lower_abs(mid); }

bool ComplexBall::contains(const ComplexBall& inner) const {
  return dist_upper(mid, inner.mid) + inner.rad <= rad;
}

bool ComplexBall::contains_q(const mpq_class& re, const mpq_class& im) const {
  ComplexBall pt = from_q(re, im, prec() + 64);
  return contains(pt);
}

Mag ComplexBall::upper() const { return upper_abs(mid) + rad; }

Mag ComplexBall::lower() const { return mag_sub_lower(lower_abs(mid), rad); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  long p = std::max(a.prec(), b.prec());
  ComplexBall r(p);
  int t1 = mpfr_add(r.mid.re.get(), a.mid.re.get(), b.mid.re.get(), MPFR_RNDN);
  int t2 = mpfr_add(r.mid.im.get(), a.mid.im.get(), b.mid.im.get(), MPFR_RNDN);
  r.rad = a.rad + b.rad + round_err(r.mid.re.get(), t1) +
          round_err(r.mid.im.get(), t2);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  long p = std::max(a.prec(), b.prec());
  ComplexBall r(p);
  int t1 = mpfr_sub(r.mid.re.get(), a.mid.re.get(), b.mid.re.get(), MPFR_RNDN);
  int t2 = mpfr_sub(r.mid.im.get(), a.mid.im.get(), b.mid.im.get(), MPFR_RNDN);
  r.rad = a.rad + b.rad + round_err(r.mid.re.get(), t1) +
          round_err(r.mid.im.get(), t2);
  return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  long p = std::max(a.prec(), b.prec());
  ComplexBall r(p);
  Mp t1(p), t2(p);
  Mag err = Mag::zero();
  int t;
  t = mpfr_mul(t1.get(), a.mid.re.get(), b.mid.re.get(), MPFR_RNDN);
  err = err + round_err(t1.get(), t);
  t = mpfr_mul(t2.get(), a.mid.im.get(), b.mid.im.get(), MPFR_RNDN);
  err = err + round_err(t2.get(), t);
  t = mpfr_sub(r.mid.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  err = err + round_err(r.mid.re.get(), t);
  t = mpfr_mul(t1.get(), a.mid.re.get(), b.mid.im.get(), MPFR_RNDN);
  err = err + round_err(t1.get(), t);
  t = mpfr_mul(t2.get(), a.mid.im.get(), b.mid.re.get(), MPFR_RNDN);
  err = err + round_err(t2.get(), t);
  t = mpfr_add(r.mid.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  err = err + round_err(r.mid.im.get(), t);
  Mag ua = upper_abs(a.mid), ub = upper_abs(b.mid);
  r.rad = ua * b.rad + ub * a.rad + a.rad * b.rad + err;
  return r;
}

ComplexBall inv(const ComplexBall& a) {
  Mag la = lower_abs(a.mid);
  Mag gap = mag_sub_lower(la, a.rad);
  if (gap.is_zero())
    throw PrecisionError(2 * a.prec(),
                         "ball inversion: enclosure not separated from zero");
  long p = a.prec();
  ComplexBall r(p);
  MpComplex one(p);
  mpfr_set_si(one.re.get(), 1, MPFR_RNDN);
  r.mid = one / a.mid;
  // a posteriori residual: |w - 1/c| = |w c - 1| / |c|
  MpComplex w2(2 * p), c2(2 * p);
  mpfr_set(w2.re.get(), r.mid.re.get(), MPFR_RNDN);
  mpfr_set(w2.im.get(), r.mid.im.get(), MPFR_RNDN);
  mpfr_set(c2.re.get(), a.mid.re.get(), MPFR_RNDN);
  mpfr_set(c2.im.get(), a.mid.im.get(), MPFR_RNDN);
  MpComplex res = w2 * c2 - MpComplex::from_si(1, 2 * p);
  Mag cover = mag_scale2(upper_abs(w2) * upper_abs(c2), 5 - 2 * p);
  Mag center_err = mag_div_upper(upper_abs(res) + cover, la);
  // |1/z - 1/c| <= r / (|c| (|c| - r)) over the source disc
  r.rad = mag_div_upper(a.rad, la * gap) + center_err;
  return r;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  return a * inv(b);
}

ComplexBall operator-(const ComplexBall& a) {
  ComplexBall r(a.prec());
  mpfr_neg(r.mid.re.get(), a.mid.re.get(), MPFR_RNDN);
  mpfr_neg(r.mid.im.get(), a.mid.im.get(), MPFR_RNDN);
  r.rad = a.rad;
  return r;
}

ComplexBall mul_si(const ComplexBall& a, long k) {
  ComplexBall r(a.prec());
  int t1 = mpfr_mul_si(r.mid.re.get(), a.mid.re.get(), k, MPFR_RNDN);
  int t2 = mpfr_mul_si(r.mid.im.get(), a.mid.im.get(), k, MPFR_RNDN);
  long ak = (k < 0) ? -k : k;
  r.rad = a.rad * Mag::from_double(static_cast<double>(ak)) +
          round_err(r.mid.re.get(), t1) + round_err(r.mid.im.get(), t2);
  return r;
}

bool disjoint(const ComplexBall& a, const ComplexBall& b) {
  return (a.rad + b.rad) < dist_lower(a.mid, b.mid);
}

bool overlaps(const ComplexBall& a, const ComplexBall& b) {
  return dist_upper(a.mid, b.mid) <= a.rad + b.rad;
}

ComplexBall round_ball(const ComplexBall& a, long prec) {
  ComplexBall r(prec);
  int t1 = mpfr_set(r.mid.re.get(), a.mid.re.get(), MPFR_RNDN);
  int t2 = mpfr_set(r.mid.im.get(), a.mid.im.get(), MPFR_RNDN);
  r.rad = a.rad + round_err(r.mid.re.get(), t1) + round_err(r.mid.im.get(), t2);
  return r;
}

std::string to_string_mp(const Mp& x, int digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits - 1, x.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string to_string(const ComplexBall& a, int digits) {
  std::string out = to_string_mp(a.mid.re, digits);
  if (!a.mid.im.is_zero()) {
    std::string im = to_string_mp(a.mid.im, digits);
    if (!im.empty() && im[0] != '-') out += "+";
    out += im + "*i";
  }
  if (!a.rad.is_zero()) {
    out += " (+-2^" + std::to_string(a.rad.e) + ")";
  }
  return out;
}

}  // namespace kradical
