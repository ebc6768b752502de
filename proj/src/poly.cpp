#include "kradical/poly.hpp"

#include <algorithm>

#include "kradical/errors.hpp"

namespace kradical {

bool Poly::is_exact() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Scalar& s) { return s.is_exact(); });
}

Poly Poly::constant(Scalar s) {
  Poly p;
  p.c.push_back(std::move(s));
  p.normalize();
  return p;
}

Poly Poly::from_rationals(const std::vector<mpq_class>& v) {
  Poly p;
  p.c.reserve(v.size());
  for (const auto& q : v) p.c.push_back(Scalar::rational(q));
  p.normalize();
  return p;
}

Poly Poly::power(int n) {
  Poly p;
  p.c.assign(n + 1, Scalar());
  p.c[n] = Scalar::from_long(1);
  return p;
}

Poly Poly::chebyshev(int n) {
  Poly t0 = constant(Scalar::from_long(1));
  if (n == 0) return t0;
  Poly t1 = power(1);
  Poly two_z = Scalar::from_long(2) * t1;
  for (int i = 1; i < n; ++i) {
    Poly t2 = two_z * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

Poly Poly::derivative() const {
  Poly p;
  for (int i = 1; i <= deg(); ++i)
    p.c.push_back(Scalar::from_long(i) * c[i]);
  p.normalize();
  return p;
}

QuadExt Poly::eval_exact(const QuadExt& z) const {
  QuadExt r;
  for (int i = deg(); i >= 0; --i) r = r * z + c[i].exact();
  return r;
}

ComplexBall Poly::eval_ball(const ComplexBall& z, long prec) const {
  ComplexBall r(prec);
  for (int i = deg(); i >= 0; --i) r = r * z + c[i].ball(prec);
  return r;
}

MpComplex Poly::eval_mp(const MpComplex& z) const {
  long prec = z.prec();
  MpComplex r(prec);
  for (int i = deg(); i >= 0; --i) r = r * z + c[i].mp(prec);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c[i].str();
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += "(" + cs + ")*";
    out += (i == 1) ? "z" : "z^" + std::to_string(i);
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i)
    r.c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i)
    r.c.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
  r.normalize();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Scalar());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  r.normalize();
  return r;
}

Poly operator*(const Scalar& s, const Poly& a) {
  Poly r;
  r.c.reserve(a.c.size());
  for (const auto& ci : a.c) r.c.push_back(s * ci);
  r.normalize();
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return false;
  for (int i = 0; i <= a.deg(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

Poly compose(const Poly& h, const Poly& g) {
  Poly r;
  for (int i = h.deg(); i >= 0; --i)
    r = r * g + Poly::constant(h.coeff(i));
  return r;
}

Poly pow_poly(const Poly& a, int k) {
  Poly r = Poly::constant(Scalar::from_long(1));
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

namespace {

void require_exact(const Poly& a, const char* what) {
  if (!a.is_exact())
    throw DomainError(std::string(what) + " requires exact coefficients");
}

}  // namespace

Poly monic(const Poly& a) {
  require_exact(a, "monic");
  if (a.is_zero()) return a;
  Scalar inv_lc = Scalar::from_long(1) / a.leading();
  return inv_lc * a;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_exact(a, "divrem");
  require_exact(b, "divrem");
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly q, r = a;
  q.c.assign(std::max(a.deg() - b.deg() + 1, 0), Scalar());
  Scalar inv_lc = Scalar::from_long(1) / b.leading();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    Scalar f = r.leading() * inv_lc;
    q.c[k] = f;
    Poly shifted = f * (Poly::power(k) * b);
    r = r - shifted;
  }
  q.normalize();
  return {q, r};
}

Poly gcd_exact(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return monic(x);
}

std::vector<Poly> yun_squarefree(const Poly& a) {
  require_exact(a, "squarefree decomposition");
  std::vector<Poly> out;
  if (a.deg() <= 0) return out;
  Poly f = monic(a);
  Poly fp = f.derivative();
  Poly g = gcd_exact(f, fp);
  Poly c = divrem(f, g).first;
  Poly d = divrem(fp, g).first - c.derivative();
  while (c.deg() > 0) {
    Poly s = gcd_exact(c, d);
    out.push_back(s);
    c = divrem(c, s).first;
    d = divrem(d, s).first - c.derivative();
  }
  return out;
}

}  // namespace kradical
