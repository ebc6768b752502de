#include "kradical/roots.hpp"

#include <algorithm>
#include <cmath>

#include "kradical/errors.hpp"
#include "kradical/parse.hpp"

namespace kradical {

namespace {

double log2_abs(const MpComplex& a) {
  Mp t(64);
  mpfr_hypot(t.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  if (mpfr_zero_p(t.get())) return -1e18;
  long e = 0;
  double d = mpfr_get_d_2exp(&e, t.get(), MPFR_RNDN);
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

// Initial radii from the upper convex hull of (k, log2|a_k|): the segment
// joining hull vertices i < j contributes j - i guesses of radius
// (|a_i| / |a_j|)^(1/(j-i)).
std::vector<double> initial_log_radii(const std::vector<MpComplex>& monic) {
  int m = static_cast<int>(monic.size()) - 1;
  std::vector<std::pair<int, double>> pts;
  for (int k = 0; k <= m; ++k) {
    double l = log2_abs(monic[k]);
    if (l > -0.9e18) pts.push_back({k, l});
  }
  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      double cross = (b.second - a.second) * (p.first - a.first) -
                     (p.second - a.second) * (b.first - a.first);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<double> out;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    int i = hull[s].first, j = hull[s + 1].first;
    double lr = (hull[s].second - hull[s + 1].second) / (j - i);
    for (int t = i; t < j; ++t) out.push_back(lr);
  }
  while (static_cast<int>(out.size()) < m) out.push_back(0.0);
  return out;
}

std::vector<MpComplex> poly_mp_coeffs(const Poly& p, long prec) {
  std::vector<MpComplex> c;
  c.reserve(p.c.size());
  for (const auto& s : p.c) c.push_back(s.mp(prec));
  return c;
}

MpComplex horner(const std::vector<MpComplex>& c, const MpComplex& z) {
  long p = z.prec();
  MpComplex r(p);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * z + c[i];
  return r;
}

bool has_nan(const MpComplex& a) {
  return mpfr_nan_p(a.re.get()) || mpfr_nan_p(a.im.get());
}

}  // namespace

std::vector<MpComplex> aberth(const std::vector<MpComplex>& monic, long prec,
                              int max_iter) {
  int m = static_cast<int>(monic.size()) - 1;
  if (m < 1) return {};
  std::vector<MpComplex> dcoef;
  dcoef.reserve(m);
  for (int i = 1; i <= m; ++i) {
    MpComplex ci(prec);
    mpfr_mul_si(ci.re.get(), monic[i].re.get(), i, MPFR_RNDN);
    mpfr_mul_si(ci.im.get(), monic[i].im.get(), i, MPFR_RNDN);
    dcoef.push_back(std::move(ci));
  }

  std::vector<double> lr = initial_log_radii(monic);
  std::vector<MpComplex> z;
  z.reserve(m);
  const double golden = 0.6180339887498949;
  for (int i = 0; i < m; ++i) {
    double ang = 6.283185307179586 * std::fmod(golden * (i + 1), 1.0) + 0.31;
    double radius = std::exp2(std::min(std::max(lr[i], -500.0), 500.0));
    std::complex<double> g = std::polar(radius, ang);
    z.push_back(MpComplex::from_d(g, prec));
  }

  Mp stop(64);
  mpfr_set_ui_2exp(stop.get(), 1, -(prec - 8), MPFR_RNDN);

  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_small = true;
    for (int i = 0; i < m; ++i) {
      MpComplex pv = horner(monic, z[i]);
      MpComplex dv = horner(dcoef, z[i]);
      MpComplex n = pv / dv;
      if (has_nan(n)) {
        // derivative vanished at the guess: nudge deterministically
        MpComplex jit = MpComplex::from_d({1e-3 + 1e-4 * i, 1e-3}, prec);
        z[i] = z[i] + jit;
        all_small = false;
        continue;
      }
      MpComplex s(prec);
      MpComplex one = MpComplex::from_si(1, prec);
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        MpComplex diff = z[i] - z[j];
        if (diff.is_zero()) {
          MpComplex jit = MpComplex::from_d({0.0, 1e-5 * (j + 1)}, prec);
          diff = diff + jit;
        }
        s = s + one / diff;
      }
      MpComplex denom = MpComplex::from_si(1, prec) - n * s;
      MpComplex w = denom.is_zero() ? n : n / denom;
      if (has_nan(w)) w = n;
      z[i] = z[i] - w;
      // relative step size against |z|+1
      Mp zs(64), ws(64);
      mpfr_hypot(zs.get(), z[i].re.get(), z[i].im.get(), MPFR_RNDN);
      mpfr_add_ui(zs.get(), zs.get(), 1, MPFR_RNDN);
      mpfr_hypot(ws.get(), w.re.get(), w.im.get(), MPFR_RNDN);
      mpfr_div(ws.get(), ws.get(), zs.get(), MPFR_RNDN);
      if (mpfr_cmp(ws.get(), stop.get()) > 0) all_small = false;
    }
    if (all_small) break;
  }
  return z;
}

std::vector<ComplexBall> weierstrass_discs(
    const std::vector<ComplexBall>& coeffs, const std::vector<MpComplex>& pts,
    long prec) {
  int m = static_cast<int>(coeffs.size()) - 1;
  const ComplexBall& lc = coeffs[m];
  if (!lc.nonzero_certified())
    throw PrecisionError(2 * prec, "leading coefficient not certified nonzero");
  std::vector<ComplexBall> discs;
  discs.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    ComplexBall zi(pts[i]);
    ComplexBall num(prec);
    for (int k = m; k >= 0; --k) num = num * zi + coeffs[k];
    ComplexBall den = lc;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      den = den * (zi - ComplexBall(pts[j]));
    }
    ComplexBall w = num / den;
    ComplexBall d(pts[i]);
    d.rad = w.upper() * Mag::from_double(static_cast<double>(m));
    discs.push_back(std::move(d));
  }
  return discs;
}

std::vector<RootCluster> cluster_discs(const std::vector<MpComplex>& pts,
                                       const std::vector<ComplexBall>& discs,
                                       long prec) {
  size_t n = pts.size();
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!disjoint(discs[i], discs[j])) parent[find(i)] = find(j);

  std::vector<std::vector<size_t>> comps;
  std::vector<long> comp_of(n, -1);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(i);
  }

  std::vector<RootCluster> out;
  for (const auto& comp : comps) {
    MpComplex center(prec);
    for (size_t i : comp) center = center + pts[i];
    MpComplex cnt = MpComplex::from_si(static_cast<long>(comp.size()), prec);
    center = center / cnt;
    Mag rad = Mag::zero();
    for (size_t i : comp) {
      Mag r = dist_upper(center, pts[i]) + discs[i].rad;
      rad = mag_max(rad, r);
    }
    RootCluster rc;
    rc.z = ComplexBall(center, rad);
    rc.multiplicity = static_cast<int>(comp.size());
    out.push_back(std::move(rc));
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a,
                                       const RootCluster& b) {
    int c = mpfr_cmp(a.z.mid.re.get(), b.z.mid.re.get());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.z.mid.im.get(), b.z.mid.im.get()) < 0;
  });
  return out;
}

namespace {

std::vector<ComplexBall> ball_coeffs(const Poly& p, long prec) {
  std::vector<ComplexBall> c;
  c.reserve(p.c.size());
  for (const auto& s : p.c) c.push_back(s.ball(prec));
  return c;
}

std::vector<MpComplex> monic_mp(const Poly& p, long prec) {
  std::vector<MpComplex> c = poly_mp_coeffs(p, prec);
  MpComplex lc = c.back();
  for (auto& ci : c) ci = ci / lc;
  c.back() = MpComplex::from_si(1, prec);
  return c;
}

std::vector<RootCluster> roots_numeric(const Poly& p, long prec) {
  std::vector<MpComplex> pts = aberth(monic_mp(p, prec), prec);
  std::vector<ComplexBall> discs =
      weierstrass_discs(ball_coeffs(p, prec), pts, prec);
  return cluster_discs(pts, discs, prec);
}

}  // namespace

std::vector<RootCluster> roots(const Poly& p, long prec) {
  if (p.deg() < 1) throw DomainError("roots requires degree >= 1");
  if (!(p.is_exact() && poly_field_d(p).has_value()))
    return roots_numeric(p, prec);

  std::vector<RootCluster> all;
  auto sq = yun_squarefree(p);
  for (size_t e = 0; e < sq.size(); ++e) {
    if (sq[e].deg() < 1) continue;
    std::vector<MpComplex> pts = aberth(monic_mp(sq[e], prec), prec);
    std::vector<ComplexBall> discs =
        weierstrass_discs(ball_coeffs(sq[e], prec), pts, prec);
    std::vector<RootCluster> cl = cluster_discs(pts, discs, prec);
    if (cl.size() != static_cast<size_t>(sq[e].deg()))
      throw PrecisionError(2 * prec,
                           "squarefree roots not pairwise separated");
    for (auto& rc : cl) {
      rc.multiplicity = static_cast<int>(e + 1);
      all.push_back(std::move(rc));
    }
  }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!disjoint(all[i].z, all[j].z))
        throw PrecisionError(2 * prec, "root enclosures overlap across factors");
  std::sort(all.begin(), all.end(), [](const RootCluster& a,
                                       const RootCluster& b) {
    int c = mpfr_cmp(a.z.mid.re.get(), b.z.mid.re.get());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.z.mid.im.get(), b.z.mid.im.get()) < 0;
  });
  return all;
}

}  // namespace kradical
