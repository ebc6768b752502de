#include "kradical/decompose.hpp"

#include "kradical/errors.hpp"
#include "kradical/parse.hpp"

namespace kradical {

std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& b) {
  if (b.is_zero() || !b.leading().is_exact() ||
      b.leading().exact() != QuadExt::rational(1))
    throw DomainError("divrem_monic requires a monic divisor");
  Poly q, r = a;
  q.c.assign(std::max(a.deg() - b.deg() + 1, 0), Scalar());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    Scalar f = r.leading();
    q.c[k] = f;
    r = r - f * (Poly::power(k) * b);
  }
  q.normalize();
  return {q, r};
}

namespace {

bool scalar_vanishes(const Scalar& s) {
  if (s.is_exact()) return s.exact().is_zero();
  return s.ball(kPrecisionCeiling).contains_zero();
}

bool poly_vanishes(const Poly& p) {
  for (const auto& s : p.c)
    if (!scalar_vanishes(s)) return false;
  return true;
}

// Monic inner candidate of degree r for a monic pt with zero subleading
// coefficient: coefficients are matched top-down against pt so that
// candidate^(n/r) agrees with pt on the top r+1 coefficients.
Poly inner_candidate(const Poly& pt, int r) {
  int n = pt.deg();
  int s = n / r;
  std::vector<Scalar> h(r + 1, Scalar());
  h[r] = Scalar::from_long(1);
  Scalar inv_s = Scalar::from_long(1) / Scalar::from_long(s);
  for (int k = 1; k <= r; ++k) {
    Poly hs = pow_poly(Poly(h), s);
    h[r - k] = (pt.coeff(n - k) - hs.coeff(n - k)) * inv_s;
  }
  return Poly(h);
}

// pt = sum b_j * inner^j with deg b_j < deg inner; decomposition succeeds
// iff every b_j is constant, and then outer = sum b_j w^j.
std::optional<Poly> outer_for(const Poly& pt, const Poly& inner) {
  Poly rest = pt;
  std::vector<Scalar> outer;
  while (!rest.is_zero()) {
    auto [q, b] = divrem_monic(rest, inner);
    for (int i = 1; i <= b.deg(); ++i)
      if (!scalar_vanishes(b.coeff(i))) return std::nullopt;
    outer.push_back(b.coeff(0));
    rest = std::move(q);
  }
  return Poly(std::move(outer));
}

void split_chain(const Poly& p, std::vector<Poly>& out) {
  auto w = is_decomposable(p);
  if (!w) {
    out.push_back(p);
    return;
  }
  split_chain(w->first, out);
  split_chain(w->second, out);
}

}  // namespace

std::optional<std::pair<Poly, Poly>> is_decomposable(const Poly& p) {
  int n = p.deg();
  if (n < 2) throw DomainError("is_decomposable requires degree >= 2");

  // affine-normalize: monic, zero subleading coefficient
  Scalar cn = p.leading();
  Scalar tau = -p.coeff(n - 1) / (Scalar::from_long(n) * cn);
  Poly shift(std::vector<Scalar>{tau, Scalar::from_long(1)});
  Poly pt = (Scalar::from_long(1) / cn) * compose(p, shift);
  if (pt.deg() != n)
    throw PrecisionError(2 * kPrecisionCeiling,
                         "leading coefficient lost in normalization");
  // these are exactly 1 and 0 by construction; pin them for the numeric path
  pt.c[n] = Scalar::from_long(1);
  pt.c[n - 1] = Scalar();
  pt.normalize();

  for (int r = 2; r < n; ++r) {
    if (n % r != 0) continue;
    Poly inner = inner_candidate(pt, r);
    auto outer = outer_for(pt, inner);
    if (!outer) continue;
    if (outer->deg() != n / r) continue;
    if (!poly_vanishes(compose(*outer, inner) - pt)) continue;
    // translate back to the original polynomial: p = g o h with
    // h = inner(z - tau), g = cn * outer
    Poly unshift(std::vector<Scalar>{-tau, Scalar::from_long(1)});
    Poly h = compose(inner, unshift);
    Poly g = cn * *outer;
    return std::make_pair(std::move(g), std::move(h));
  }
  return std::nullopt;
}

DecompositionChain decompose_full(const Poly& p) {
  if (p.deg() < 1) throw DomainError("decompose_full requires degree >= 1");
  DecompositionChain chain;
  if (p.deg() == 1) {
    chain.factors.push_back(p);
    return chain;
  }
  split_chain(p, chain.factors);
  return chain;
}

}  // namespace kradical
