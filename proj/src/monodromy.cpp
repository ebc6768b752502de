#include "kradical/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "kradical/roots.hpp"

namespace kradical {

namespace {

bool finite(const MpComplex& z) {
  return mpfr_number_p(z.re.get()) && mpfr_number_p(z.im.get());
}

Mp mp_from_d(double x, long prec) {
  Mp r(prec);
  mpfr_set_d(r.get(), x, MPFR_RNDN);
  return r;
}

MpComplex circle_point(const MpComplex& c, const Mp& r, const Mp& th) {
  long prec = c.prec();
  MpComplex out(prec);
  Mp t(prec);
  mpfr_cos(t.get(), th.get(), MPFR_RNDN);
  mpfr_mul(t.get(), t.get(), r.get(), MPFR_RNDN);
  mpfr_add(out.re.get(), c.re.get(), t.get(), MPFR_RNDN);
  mpfr_sin(t.get(), th.get(), MPFR_RNDN);
  mpfr_mul(t.get(), t.get(), r.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), c.im.get(), t.get(), MPFR_RNDN);
  return out;
}

std::vector<ComplexBall> coeff_balls(const Poly& p, long prec) {
  std::vector<ComplexBall> out;
  out.reserve(p.c.size());
  for (const Scalar& s : p.c) out.push_back(s.ball(prec));
  return out;
}

double seg_dist(std::complex<double> p, std::complex<double> a,
                std::complex<double> b) {
  std::complex<double> ab = b - a;
  std::complex<double> ap = p - a;
  double l2 = std::norm(ab);
  double t = 0.0;
  if (l2 > 0.0) t = std::clamp((ap * std::conj(ab)).real() / l2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Characteristic polynomial (in w) of multiplication by p on Q[z]/(s) for a
// monic squarefree s: its roots are exactly the values p(c) over the roots c
// of s, with the right coincidence multiplicities. Faddeev-LeVerrier keeps
// everything in the coefficient field.
Poly value_charpoly(const Poly& p, const Poly& s) {
  int k = s.deg();
  Poly r0 = divrem(p, s).second;
  std::vector<std::vector<Scalar>> mat(k, std::vector<Scalar>(k));
  std::vector<Scalar> col(k);
  for (int i = 0; i < k; ++i) col[i] = r0.coeff(i);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) mat[i][j] = col[i];
    if (j + 1 < k) {
      Scalar top = col[k - 1];
      for (int i = k - 1; i > 0; --i) col[i] = col[i - 1];
      col[0] = Scalar();
      if (!top.is_zero())
        for (int i = 0; i < k; ++i) col[i] = col[i] - top * s.coeff(i);
    }
  }

  auto matmul = [k](const std::vector<std::vector<Scalar>>& a,
                    const std::vector<std::vector<Scalar>>& b) {
    std::vector<std::vector<Scalar>> r(k, std::vector<Scalar>(k));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        if (a[i][l].is_zero()) continue;
        for (int j = 0; j < k; ++j)
          r[i][j] = r[i][j] + a[i][l] * b[l][j];
      }
    return r;
  };

  std::vector<Scalar> c(k + 1);
  c[0] = Scalar::from_long(1);
  std::vector<std::vector<Scalar>> acc = mat;
  for (int i = 1; i <= k; ++i) {
    if (i > 1) {
      for (int d = 0; d < k; ++d) acc[d][d] = acc[d][d] + c[i - 1];
      acc = matmul(mat, acc);
    }
    Scalar tr;
    for (int d = 0; d < k; ++d) tr = tr + acc[d][d];
    c[i] = Scalar() - tr / Scalar::from_long(i);
  }
  std::vector<Scalar> asc(k + 1);
  for (int i = 0; i <= k; ++i) asc[k - i] = c[i];
  return Poly(std::move(asc));
}

// One path segment the tracker walks: a straight leg or a full circle.
// The parameter runs over exact integer ticks 0..kTicks so step sizes can
// shrink far below any floating-point granularity of the piece; junction
// points are stored explicitly so consecutive pieces share the bit-identical
// parameter value.
constexpr uint64_t kTicks = uint64_t{1} << 60;

struct Piece {
  enum Kind { kSeg, kArc };
  Kind kind = kSeg;
  MpComplex a, b;    // segment endpoints
  MpComplex center;  // arc
  Mp r, th0;
  int dir = 1;
  MpComplex start, end;

  MpComplex at(uint64_t tick, long prec) const {
    if (tick == 0) return start;
    if (tick >= kTicks) return end;
    Mp t(prec);
    mpfr_set_uj(t.get(), tick, MPFR_RNDN);
    mpfr_div_2si(t.get(), t.get(), 60, MPFR_RNDN);
    if (kind == kSeg) {
      MpComplex out(prec);
      Mp d(prec);
      mpfr_sub(d.get(), b.re.get(), a.re.get(), MPFR_RNDN);
      mpfr_mul(d.get(), d.get(), t.get(), MPFR_RNDN);
      mpfr_add(out.re.get(), a.re.get(), d.get(), MPFR_RNDN);
      mpfr_sub(d.get(), b.im.get(), a.im.get(), MPFR_RNDN);
      mpfr_mul(d.get(), d.get(), t.get(), MPFR_RNDN);
      mpfr_add(out.im.get(), a.im.get(), d.get(), MPFR_RNDN);
      return out;
    }
    Mp th(prec);
    mpfr_const_pi(th.get(), MPFR_RNDN);
    mpfr_mul_2si(th.get(), th.get(), 1, MPFR_RNDN);
    mpfr_mul(th.get(), th.get(), t.get(), MPFR_RNDN);
    if (dir < 0) mpfr_neg(th.get(), th.get(), MPFR_RNDN);
    mpfr_add(th.get(), th.get(), th0.get(), MPFR_RNDN);
    return circle_point(center, r, th);
  }
};

std::vector<Piece> make_loop(const MpComplex& center, const Mp& r, int dir,
                             const MpComplex& base, long prec) {
  Mp th0(prec);
  MpComplex d = base - center;
  mpfr_atan2(th0.get(), d.im.get(), d.re.get(), MPFR_RNDN);
  MpComplex entry = circle_point(center, r, th0);

  Piece leg_in;
  leg_in.kind = Piece::kSeg;
  leg_in.a = base;
  leg_in.b = entry;
  leg_in.start = base;
  leg_in.end = entry;

  Piece arc;
  arc.kind = Piece::kArc;
  arc.center = center;
  arc.r = r;
  arc.th0 = th0;
  arc.dir = dir;
  arc.start = entry;
  arc.end = entry;

  Piece leg_out;
  leg_out.kind = Piece::kSeg;
  leg_out.a = entry;
  leg_out.b = base;
  leg_out.start = entry;
  leg_out.end = base;

  return {leg_in, arc, leg_out};
}

// Certified sheet transport. Each accepted step carries a Weierstrass disc
// certificate taken over a ball that covers the whole w-chord, so the n
// discs isolate one root each for every w on the step; unique disc overlap
// then links the fibers at the shared endpoint.
class LoopTracker {
 public:
  LoopTracker(const Poly& p, long prec)
      : p_(p), pd_(p.derivative()), prec_(prec), coeffs_(coeff_balls(p, prec)) {
    if (!coeffs_.back().nonzero_certified())
      throw PrecisionError(2 * prec,
                           "leading coefficient not certified nonzero");
  }

  Perm run(const std::vector<ComplexBall>& fiber,
           const std::vector<Piece>& pieces) {
    size_t n = fiber.size();
    std::vector<MpComplex> cur, prev;
    std::vector<Mag> rad;
    cur.reserve(n);
    for (const ComplexBall& b : fiber) {
      cur.push_back(b.mid);
      rad.push_back(b.rad);
    }
    prev = cur;
    MpComplex w_cur = pieces.front().start;
    MpComplex w_prev = w_cur;

    long budget = 200000;
    for (const Piece& pc : pieces) {
      const uint64_t hmax = kTicks >> (pc.kind == Piece::kArc ? 3 : 2);
      uint64_t t = 0, h = hmax;
      bool have_prev = false;
      while (t < kTicks) {
        if (--budget < 0)
          throw PrecisionError(2 * prec_,
                               "monodromy tracking exceeded its step budget");
        if (h > kTicks - t) h = kTicks - t;
        uint64_t t2 = t + h;
        MpComplex w2 = pc.at(t2, prec_);

        std::vector<MpComplex> pts = cur;
        if (have_prev) {
          MpComplex den = w_cur - w_prev;
          if (!den.is_zero()) {
            MpComplex f = (w2 - w_cur) / den;
            for (size_t i = 0; i < n; ++i)
              pts[i] = cur[i] + (cur[i] - prev[i]) * f;
          }
        }
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = newton(pts[i], w2);

        std::vector<Mag> nrad;
        std::vector<int> match;
        if (ok) ok = certify(cur, rad, pts, w_cur, w2, &nrad, &match);
        if (!ok) {
          h >>= 1;
          if (h == 0)
            throw PrecisionError(2 * prec_, "monodromy step size collapsed");
          continue;
        }

        prev = cur;
        w_prev = w_cur;
        have_prev = true;
        std::vector<MpComplex> nxt;
        std::vector<Mag> nr;
        nxt.reserve(n);
        nr.reserve(n);
        for (size_t i = 0; i < n; ++i) {
          nxt.push_back(pts[match[i]]);
          nr.push_back(nrad[match[i]]);
        }
        cur = std::move(nxt);
        rad = std::move(nr);
        w_cur = w2;
        t = t2;
        h = std::min(h << 1, hmax);
      }
    }

    // the end disc holds exactly one root of the base fiber, which lies in
    // exactly one start disc; a unique intersection pins that disc down
    std::vector<int> im(n, -1);
    for (size_t i = 0; i < n; ++i) {
      ComplexBall end(cur[i], rad[i]);
      int hit = -1;
      for (size_t j = 0; j < n; ++j)
        if (!disjoint(fiber[j], end)) hit = (hit < 0) ? static_cast<int>(j) : -2;
      if (hit < 0)
        throw PrecisionError(2 * prec_,
                             "sheet matching at loop end is ambiguous");
      im[i] = hit;
    }
    if (!valid_perm(im))
      throw PrecisionError(2 * prec_,
                           "sheet matching at loop end is ambiguous");
    return Perm{im};
  }

 private:
  bool newton(MpComplex& z, const MpComplex& w) const {
    for (int it = 0; it < 40; ++it) {
      if (!finite(z)) return false;
      MpComplex fz = p_.eval_mp(z) - w;
      MpComplex dz = pd_.eval_mp(z);
      if (lower_abs(dz).is_zero()) return false;
      MpComplex step = fz / dz;
      z = z - step;
      Mag target =
          mag_scale2(Mag::pow2(0) + upper_abs(z), -(prec_ - 16));
      if (upper_abs(step) < target) return true;
    }
    return false;
  }

  bool certify(const std::vector<MpComplex>& oldc, const std::vector<Mag>& oldr,
               const std::vector<MpComplex>& pts, const MpComplex& w1,
               const MpComplex& w2, std::vector<Mag>* nrad,
               std::vector<int>* match) const {
    size_t n = pts.size();
    for (const MpComplex& z : pts)
      if (!finite(z)) return false;
    ComplexBall wseg(w1, dist_upper(w1, w2));
    std::vector<ComplexBall> cf = coeffs_;
    cf[0] = cf[0] - wseg;
    std::vector<ComplexBall> discs;
    try {
      discs = weierstrass_discs(cf, pts, prec_);
    } catch (const PrecisionError&) {
      return false;
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (!disjoint(discs[i], discs[j])) return false;

    // both disc families are valid at w1, so the root in an old disc lies
    // in exactly one new disc; anything but a unique hit fails the step
    match->assign(n, -1);
    std::vector<char> used(n, 0);
    for (size_t i = 0; i < n; ++i) {
      ComplexBall ob(oldc[i], oldr[i]);
      int hit = -1;
      for (size_t j = 0; j < n; ++j) {
        if (!disjoint(ob, discs[j])) {
          if (hit >= 0) return false;
          hit = static_cast<int>(j);
        }
      }
      if (hit < 0 || used[hit]) return false;
      used[hit] = 1;
      (*match)[i] = hit;
    }
    nrad->resize(n);
    for (size_t i = 0; i < n; ++i) (*nrad)[i] = discs[i].rad;
    return true;
  }

  const Poly& p_;
  Poly pd_;
  long prec_;
  std::vector<ComplexBall> coeffs_;
};

}  // namespace

CriticalData critical_data(const Poly& p, long prec, unsigned seed) {
  if (p.deg() < 1) throw DomainError("critical_data needs degree >= 1");
  CriticalData cd;
  cd.prec = prec;
  cd.base = MpComplex::from_si(1, prec);
  cd.centroid = MpComplex(prec);
  if (p.deg() == 1) return cd;

  Poly pd = p.derivative();
  std::vector<RootCluster> cps = roots(pd, prec);
  std::vector<ComplexBall> im;
  im.reserve(cps.size());
  for (const RootCluster& c : cps) im.push_back(p.eval_ball(c.z, prec));

  std::vector<size_t> parent(cps.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < cps.size(); ++i)
    for (size_t j = i + 1; j < cps.size(); ++j)
      if (!disjoint(im[i], im[j])) parent[find(i)] = find(j);
  bool coincident = false;
  for (size_t i = 0; i < cps.size() && !coincident; ++i)
    coincident = find(i) != i;

  std::vector<CriticalCluster> cl;
  if (!coincident) {
    std::vector<Poly> yun;
    if (p.is_exact()) yun = yun_squarefree(pd);
    for (size_t i = 0; i < cps.size(); ++i) {
      CriticalCluster c;
      c.value = im[i];
      c.multiplicities = {cps[i].multiplicity + 1};
      if (p.is_exact() && cps[i].multiplicity <= static_cast<int>(yun.size())) {
        const Poly& f = yun[cps[i].multiplicity - 1];
        if (f.deg() == 1) {
          Scalar root = Scalar() - f.coeff(0);
          Scalar val(p.eval_exact(root.exact()));
          c.exact_value = val;
          c.value = val.ball(prec);
        }
      }
      cl.push_back(std::move(c));
    }
  } else {
    if (!p.is_exact())
      throw PrecisionError(2 * prec,
                           "coinciding critical values need exact coefficients");
    std::vector<Poly> yun = yun_squarefree(pd);
    int total = 0;
    for (const Poly& s : yun)
      if (s.deg() > 0) total += s.deg();
    if (total > 32)
      throw DomainError(
          "too many critical points to certify coinciding values");
    Poly vp = Poly::constant(Scalar::from_long(1));
    for (const Poly& s : yun)
      if (s.deg() > 0) vp = vp * value_charpoly(p, s);
    std::vector<RootCluster> vcl = roots(vp, prec);
    std::vector<Poly> yx = yun_squarefree(vp);

    std::vector<std::vector<int>> mults(vcl.size());
    for (size_t i = 0; i < cps.size(); ++i) {
      int hit = -1;
      for (size_t j = 0; j < vcl.size(); ++j) {
        if (!disjoint(im[i], vcl[j].z)) {
          if (hit >= 0) {
            hit = -2;
            break;
          }
          hit = static_cast<int>(j);
        }
      }
      if (hit < 0)
        throw PrecisionError(
            2 * prec, "cannot assign a critical point to a value cluster");
      mults[hit].push_back(cps[i].multiplicity + 1);
    }
    for (size_t j = 0; j < vcl.size(); ++j) {
      if (static_cast<int>(mults[j].size()) != vcl[j].multiplicity)
        throw PrecisionError(2 * prec,
                             "critical value cluster counts disagree");
      CriticalCluster c;
      c.value = vcl[j].z;
      std::sort(mults[j].rbegin(), mults[j].rend());
      c.multiplicities = std::move(mults[j]);
      if (vcl[j].multiplicity <= static_cast<int>(yx.size())) {
        const Poly& f = yx[vcl[j].multiplicity - 1];
        if (f.deg() == 1) {
          Scalar v = Scalar() - f.coeff(0);
          c.exact_value = v;
          c.value = v.ball(prec);
        }
      }
      cl.push_back(std::move(c));
    }
  }

  long rh = 0;
  for (const CriticalCluster& c : cl)
    for (int m : c.multiplicities) rh += m - 1;
  if (rh != p.deg() - 1)
    throw PrecisionError(2 * prec, "ramification does not sum to degree - 1");

  std::sort(cl.begin(), cl.end(),
            [](const CriticalCluster& a, const CriticalCluster& b) {
              int c = mpfr_cmp(a.value.mid.re.get(), b.value.mid.re.get());
              if (c != 0) return c < 0;
              return mpfr_cmp(a.value.mid.im.get(), b.value.mid.im.get()) < 0;
            });

  Mag mx = Mag::zero();
  for (const CriticalCluster& c : cl) mx = mag_max(mx, c.value.rad);
  for (size_t i = 0; i < cl.size(); ++i)
    for (size_t j = i + 1; j < cl.size(); ++j)
      if (!(mag_scale2(mx, 2) < dist_lower(cl[i].value.mid, cl[j].value.mid)))
        throw PrecisionError(
            2 * prec,
            "critical values closer than four times the enclosure radius");

  size_t m = cl.size();
  std::vector<std::complex<double>> v(m);
  std::complex<double> cen{0.0, 0.0};
  double maxabs = 0.0;
  for (size_t j = 0; j < m; ++j) {
    v[j] = cl[j].value.mid.d();
    cen += v[j];
    maxabs = std::max(maxabs, std::abs(v[j]));
  }
  cen /= static_cast<double>(m);
  double big = 2.0 * maxabs + 1.0;
  cd.centroid = MpComplex::from_d(cen, prec);

  const double phi = 0.61803398874989485;
  const double two_pi = 6.283185307179586;
  std::complex<double> bpt;
  bool found = false;
  for (int k = 0; k < 256 && !found; ++k) {
    double fr = (static_cast<double>(seed) + k + 1) * phi;
    fr -= std::floor(fr);
    std::complex<double> b =
        cen + big * std::complex<double>(std::cos(two_pi * fr),
                                         std::sin(two_pi * fr));
    std::complex<double> bfar = 2.0 * b - cen;
    bool ok = true;
    for (size_t j = 0; j < m && ok; ++j) {
      double isol = std::abs(b - v[j]);
      for (size_t l = 0; l < m; ++l)
        if (l != j) isol = std::min(isol, std::abs(v[j] - v[l]));
      for (size_t i = 0; i < m && ok; ++i)
        if (i != j && seg_dist(v[j], b, v[i]) < 0.25 * isol) ok = false;
      if (seg_dist(v[j], b, bfar) < 0.25 * isol) ok = false;
    }
    if (ok) {
      bpt = b;
      found = true;
    }
  }
  if (!found) throw DomainError("no admissible base direction found");
  cd.base = MpComplex::from_d(bpt, prec);

  std::complex<double> bfar = 2.0 * bpt - cen;
  cd.loop_radius.resize(m);
  for (size_t j = 0; j < m; ++j) {
    double isol = std::abs(bpt - v[j]);
    for (size_t l = 0; l < m; ++l)
      if (l != j) isol = std::min(isol, std::abs(v[j] - v[l]));
    double rr = 0.5 * isol;
    for (size_t i = 0; i < m; ++i)
      if (i != j) rr = std::min(rr, 0.5 * seg_dist(v[j], bpt, v[i]));
    rr = std::min(rr, 0.5 * seg_dist(v[j], bpt, bfar));
    cd.loop_radius[j] = rr;
  }
  for (size_t j = 0; j < m; ++j)
    for (size_t l = 0; l < m; ++l) {
      if (l == j) continue;
      Mag need = Mag::from_double(cd.loop_radius[j]) + cl[j].value.rad +
                 cl[l].value.rad;
      if (!(need < dist_lower(cl[j].value.mid, cl[l].value.mid)))
        throw PrecisionError(
            2 * prec, "loop radius does not certifiably isolate its value");
    }

  // The composition of the spider loops equals the full circle through the
  // base only when the loops are taken in counterclockwise departure order
  // starting at the outward cut (the ray from the base away from the
  // centroid, which no leg crosses). Angles are therefore measured relative
  // to that ray; sorting raw angles would split the departure cone whenever
  // it straddles the atan2 branch cut and compose a different (conjugate)
  // rotation of the tuple.
  double theta_out = std::atan2((bpt - cen).imag(), (bpt - cen).real());
  auto departure = [&](int x) {
    std::complex<double> dx = v[x] - bpt;
    double a = std::atan2(dx.imag(), dx.real()) - theta_out;
    a -= two_pi * std::floor(a / two_pi);
    return a;
  };
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return departure(x) < departure(y); });
  cd.values = std::move(cl);
  cd.loop_order = std::move(order);
  return cd;
}

MonodromyResult monodromy(const Poly& p, const CriticalData& cd) {
  if (p.deg() < 1) throw DomainError("monodromy needs degree >= 1");
  const long prec = cd.prec;
  const int n = p.deg();

  std::vector<Scalar> pc = p.c;
  pc[0] = pc[0] - Scalar::numeric(ComplexBall(cd.base));
  std::vector<RootCluster> rc = roots(Poly(std::move(pc)), prec);

  MonodromyResult mr;
  for (const RootCluster& c : rc) {
    if (c.multiplicity != 1)
      throw PrecisionError(2 * prec, "base fiber is not certifiably simple");
    mr.fiber.push_back(c.z);
  }
  if (static_cast<int>(mr.fiber.size()) != n)
    throw PrecisionError(2 * prec, "base fiber is not certifiably simple");
  if (n == 1) {
    mr.infinity_perm = Perm::identity(1);
    return mr;
  }

  LoopTracker tracker(p, prec);
  for (size_t j = 0; j < cd.values.size(); ++j) {
    Mp r = mp_from_d(cd.loop_radius[j], prec);
    std::vector<Piece> loop =
        make_loop(cd.values[j].value.mid, r, +1, cd.base, prec);
    Perm g = tracker.run(mr.fiber, loop);
    std::vector<int> lens;
    for (int len : g.cycle_lengths())
      if (len >= 2) lens.push_back(len);
    if (lens != cd.values[j].multiplicities)
      throw PrecisionError(
          2 * prec, "local cycle type disagrees with the multiplicities");
    mr.local_perms.push_back(std::move(g));
  }

  Perm prod = Perm::identity(n);
  for (int idx : cd.loop_order) prod = prod * mr.local_perms[idx];
  mr.infinity_perm = prod.inverse();

  MpComplex d = cd.base - cd.centroid;
  Mp rinf(prec);
  mpfr_hypot(rinf.get(), d.re.get(), d.im.get(), MPFR_RNDN);
  mpfr_mul_2si(rinf.get(), rinf.get(), 1, MPFR_RNDN);
  std::vector<Piece> big = make_loop(cd.centroid, rinf, -1, cd.base, prec);
  Perm tracked = tracker.run(mr.fiber, big);
  if (tracked != mr.infinity_perm)
    throw PrecisionError(2 * prec,
                         "infinity loop disagrees with the finite loops");
  if (mr.infinity_perm.cycle_lengths() != std::vector<int>{n})
    throw PrecisionError(2 * prec, "infinity permutation is not an n-cycle");
  return mr;
}

Passport passport(const MonodromyResult& mr) {
  Passport pp;
  for (const Perm& g : mr.local_perms)
    if (!g.is_identity()) pp.push_back(g.cycle_type());
  std::sort(pp.begin(), pp.end(), std::greater<std::string>());
  return pp;
}

std::string passport_str(const Passport& pp) {
  std::string out = "[";
  for (size_t i = 0; i < pp.size(); ++i) {
    if (i) out += ", ";
    out += pp[i];
  }
  out += "]";
  return out;
}

}  // namespace kradical
