#include "kradical/qfield.hpp"

#include "kradical/errors.hpp"

namespace kradical {

bool compatible(const QuadExt& a, const QuadExt& b) {
  return a.d == 0 || b.d == 0 || a.d == b.d;
}

long merged_d(const QuadExt& a, const QuadExt& b) {
  if (!compatible(a, b))
    throw DomainError("values from different quadratic fields");
  return a.d != 0 ? a.d : b.d;
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  return QuadExt(a.x + b.x, a.y + b.y, merged_d(a, b));
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  return QuadExt(a.x - b.x, a.y - b.y, merged_d(a, b));
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  long d = merged_d(a, b);
  return QuadExt(a.x * b.x + d * (a.y * b.y), a.x * b.y + a.y * b.x, d);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  long d = merged_d(a, b);
  mpq_class n = b.norm();
  QuadExt num = a * b.conj_root();
  return QuadExt(num.x / n, num.y / n, d);
}

QuadExt operator-(const QuadExt& a) { return QuadExt(-a.x, -a.y, a.d); }

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (!compatible(a, b)) return false;
  return a.x == b.x && a.y == b.y;
}

ComplexBall quadext_ball(const QuadExt& a, long prec) {
  ComplexBall r = ComplexBall::from_q(a.x, 0, prec);
  if (a.y == 0) return r;
  unsigned long ad = static_cast<unsigned long>(a.d < 0 ? -a.d : a.d);
  ComplexBall s = ComplexBall::sqrt_ui(ad, prec);
  ComplexBall ys = ComplexBall::from_q(a.y, 0, prec) * s;
  if (a.d > 0) return r + ys;
  // sqrt(d) = i*sqrt(|d|): rotate ys by i
  ComplexBall rot(prec);
  mpfr_neg(rot.mid.re.get(), ys.mid.im.get(), MPFR_RNDN);
  mpfr_set(rot.mid.im.get(), ys.mid.re.get(), MPFR_RNDN);
  rot.rad = ys.rad;
  return r + rot;
}

MpComplex quadext_mp(const QuadExt& a, long prec) {
  ComplexBall b = quadext_ball(a, prec);
  return b.mid;
}

std::string to_string(const QuadExt& a) {
  if (a.is_rational()) return a.x.get_str();
  std::string s;
  if (a.x != 0) s = a.x.get_str();
  mpq_class ay = abs(a.y);
  if (a.y < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  if (ay != 1) s += ay.get_str() + "*";
  s += "sqrt(" + std::to_string(a.d) + ")";
  return s;
}

std::pair<unsigned long, unsigned long> squarefree_split(unsigned long n) {
  unsigned long s = 1, m = 1;
  for (unsigned long f = 2; f * f <= n; ++f) {
    unsigned long e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (unsigned long i = 0; i + 1 < e; i += 2) s *= f;
    if (e % 2) m *= f;
  }
  m *= n;
  return {s, m};
}

}  // namespace kradical
