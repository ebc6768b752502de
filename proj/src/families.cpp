#include "kradical/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "kradical/decompose.hpp"
#include "kradical/errors.hpp"
#include "kradical/projective.hpp"

namespace kradical {

namespace {

Scalar S(long num, long den = 1) {
  return Scalar::rational(mpq_class(num, den));
}

Poly from_rat(std::initializer_list<mpq_class> v) {
  return Poly::from_rationals(std::vector<mpq_class>(v));
}

// z^2 + c z + d as an exact polynomial
Poly quadratic(const Scalar& c, const Scalar& d) {
  return Poly(std::vector<Scalar>{d, c, S(1)});
}

Fixture make_deg6() {
  Fixture fx;
  fx.id = "deg6";
  fx.poly = Poly::power(4) * quadratic(S(6), S(25));
  fx.degree = 6;
  fx.passport = {"4^1 1^2", "2^2 1^2"};
  fx.group_order = 120;
  fx.group_name = "PGL(2,5)";
  fx.minimal_k = 5;
  fx.critical_values = {S(0), S(-50000, 27)};
  return fx;
}

Fixture make_deg10() {
  Fixture fx;
  fx.id = "deg10";
  fx.poly = pow_poly(quadratic(S(0), S(-81, 500)), 4) *
            quadratic(S(1), S(189, 500));
  fx.degree = 10;
  fx.passport = {"4^2 1^2", "2^3 1^4"};
  fx.group_order = 1440;
  fx.group_name = "PGammaL(2,9)";
  fx.minimal_k = 6;
  mpz_class num = 16 * mpz_class("531441");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 5, 15);
  fx.critical_values = {S(0), Scalar::rational(mpq_class(num, den))};
  return fx;
}

Fixture make_deg8(int sign) {
  Fixture fx;
  fx.id = sign > 0 ? "deg8-plus" : "deg8-minus";
  Scalar c1(QuadExt(mpq_class(25, 64), mpq_class(22 * sign, 64), 2));
  Scalar c2(QuadExt(mpq_class(97, 64), mpq_class(54 * sign, 64), 2));
  fx.poly = pow_poly(quadratic(S(0), c1), 3) * quadratic(S(1), c2);
  fx.degree = 8;
  fx.passport = {"3^2 1^2", "2^3 1^2"};
  fx.group_order = 336;
  fx.group_name = "PGL(2,7)";
  fx.minimal_k = 7;
  return fx;
}

}  // namespace

Fixture fixture(const std::string& id) {
  if (id == "deg6") return make_deg6();
  if (id == "deg10") return make_deg10();
  if (id == "deg8-plus") return make_deg8(1);
  if (id == "deg8-minus") return make_deg8(-1);
  throw DomainError("unknown fixture id: " + id);
}

std::vector<std::string> fixture_ids() {
  return {"deg6", "deg10", "deg8-plus", "deg8-minus"};
}

Fixture fixture_deg15(int a_sign, const mpq_class& t) {
  if (t == 0) throw DomainError("the degree-15 family requires t != 0");
  if (a_sign != 1 && a_sign != -1)
    throw DomainError("a_sign selects one of the two roots, +1 or -1");

  // a is a root of a^2 - a + 4 = 0, i.e. (1 + a_sign sqrt(-15)) / 2
  QuadExt a(mpq_class(1, 2), mpq_class(a_sign, 2), -15);
  auto R = [](long n, long d = 1) { return QuadExt::rational(mpq_class(n, d)); };
  QuadExt T = QuadExt::rational(t);
  QuadExt t2 = T * T, t3 = t2 * T, t4 = t3 * T, t5 = t4 * T, t6 = t5 * T;

  std::vector<QuadExt> c(16);
  c[15] = R(1, 15);
  c[14] = R(0);
  c[13] = (a - R(1)) * T;
  c[12] = (a + R(7)) * T;
  c[11] = -((R(5) * a + R(21)) * t2);
  c[10] = R(2) * (R(37) * a - R(71)) * t2;
  c[9] = -((R(261) * a - R(349)) *
           (R(151598) * T + R(141075) * a - R(109260)) * t2 / R(3 * 151598));
  c[8] = -((R(649) * a + R(703)) * t3);
  c[7] = R(3) * (R(46) * a + R(239)) *
         (R(76579) * T + R(198260) * a - R(462560)) * t3 / R(76579);
  c[6] = -(R(4) * (R(548) * a - R(1939)) *
           (R(259891) * T + R(106365) * a - R(26420)) * t3 / R(259891));
  c[5] = R(3) * (R(1945) * a - R(1581)) *
         (R(7278308) * T + R(14685825) * a - R(113700500)) * t4 /
         R(5L * 7278308);
  c[4] = R(3) * (R(3233) * a + R(2051)) *
         (R(877444) * T + R(1339725) * a - R(2162500)) * t4 / R(877444);
  c[3] = R(9) * (R(9) * a - R(133)) *
         (R(3 * 16816) * t2 - R(162040) * a * T - R(320375) * a -
          R(1260960) * T + R(23500)) *
         t4 / R(16816);
  c[2] = R(9) * (R(403) * a - R(1559)) *
         (R(2 * 2554) * T + R(9165) * a - R(39620)) * t5 / R(2554);
  c[1] = -(R(135, 16) * (R(7) * a + R(5)) * (R(4) * T - R(75) * a - R(100)) *
           (R(4) * T + R(5) * a - R(4)) * t5);
  c[0] = R(675) * (a - R(8)) * (T - R(16)) * t6;

  Fixture fx;
  std::ostringstream id;
  id << "deg15-a" << (a_sign > 0 ? 1 : 2) << "-t" << t;
  fx.id = id.str();
  std::vector<Scalar> sc;
  sc.reserve(16);
  for (const QuadExt& q : c) sc.emplace_back(q);
  fx.poly = Poly(std::move(sc));
  fx.degree = 15;
  fx.group_order = 20160;
  fx.group_name = "PGL(4,2)";
  fx.minimal_k = 8;
  if (t == 1) fx.passport = {"2^6 1^3", "2^4 1^7", "2^4 1^7"};
  if (t == mpq_class(75, 4)) fx.passport = {"4^2 2^2 1^3", "2^6 1^3"};
  return fx;
}

namespace {

void note(EliminationReport* rep, bool ok, const std::string& line) {
  rep->ok = rep->ok && ok;
  rep->lines.push_back(line + (ok ? ": ok" : ": FAILED"));
}

EliminationReport replay_deg6() {
  EliminationReport rep;
  rep.family = "deg6";
  rep.ok = true;

  const long as[8] = {-3, -2, -1, 0, 1, 2, 3, 6};
  const long bs[8] = {-3, -2, -1, 1, 2, 3, 5, 25};
  bool closed_ok = true, branch_ok = true, deriv_ok = true;
  for (long ai : as)
    for (long bi : bs) {
      mpq_class a(ai), b(bi);
      Poly p = Poly::power(4) * from_rat({b, a, 1});
      Poly q2 = from_rat({4 * b, 5 * a, 6});
      deriv_ok = deriv_ok && p.derivative() == Poly::power(3) * q2;
      Poly r = divrem(p, q2).second;
      mpq_class closed =
          a * (96 * b - 25 * a * a) * (36 * b - 25 * a * a) / mpq_class(7776);
      closed_ok = closed_ok && r.coeff(1) == Scalar::rational(closed);
      bool vanish = ai == 0 || 96 * b == 25 * a * a || 36 * b == 25 * a * a;
      branch_ok = branch_ok && (r.coeff(1).is_zero() == vanish);
    }
  note(&rep, deriv_ok, "derivative splits off z^3 on the 8x8 grid");
  note(&rep, closed_ok,
       "remainder z-coefficient equals a(96b-25a^2)(36b-25a^2)/6^5");
  note(&rep, branch_ok, "coefficient vanishes exactly on the three branches");

  {
    mpq_class a(6), b(25);
    note(&rep, 36 * b == 25 * a * a, "(a,b) = (6,25) satisfies 36b = 25a^2");
  }

  Poly p0 = Poly::power(4) * from_rat({7, 0, 1});
  auto w = is_decomposable(p0);
  note(&rep, w.has_value() && w->second.deg() == 2,
       "a = 0 factors through a degree-2 inner polynomial");

  mpq_class a(4);
  mpq_class b = 25 * a * a / mpq_class(96);
  Poly q2 = from_rat({4 * b, 5 * a, 6});
  Poly sq = S(6) * pow_poly(from_rat({5 * a / 12, 1}), 2);
  note(&rep, q2 == sq, "96b = 25a^2 makes the quadratic a complete square");
  return rep;
}

EliminationReport replay_deg10() {
  EliminationReport rep;
  rep.family = "deg10";
  rep.ok = true;

  const long as[8] = {-3, -2, -1, 0, 1, 2, 3, 5};
  const long bs[8] = {-3, -2, -1, 1, 2, 3, 4, 5};
  bool deriv_ok = true;
  for (long ai : as)
    for (long bi : bs) {
      mpq_class a(ai), b(bi);
      Poly zz = from_rat({-a, 0, 1});
      Poly p = pow_poly(zz, 4) * from_rat({b, 1, 1});
      Poly q3 = from_rat({-a, 8 * b - 2 * a, 9, 10});
      deriv_ok = deriv_ok && p.derivative() == pow_poly(zz, 3) * q3;
    }
  note(&rep, deriv_ok,
       "derivative of (z^2-a)^4(z^2+z+b) is (z^2-a)^3 q3 on the 8x8 grid");

  {
    mpq_class a(-27, 100), b(27, 100);
    Poly q3 = from_rat({-a, 8 * b - 2 * a, 9, 10});
    Poly cube = S(10) * pow_poly(from_rat({mpq_class(3, 10), 1}), 3);
    note(&rep, q3 == cube, "a = -27/100 makes q3 the complete cube 10(z+3/10)^3");
    Poly p = pow_poly(from_rat({-a, 0, 1}), 4) * from_rat({b, 1, 1});
    note(&rep, divrem(p, q3).second.deg() <= 0,
         "remainder is constant on the cube branch");
  }
  {
    mpq_class a(81, 500), b(189, 500);
    Poly q3 = from_rat({-a, 8 * b - 2 * a, 9, 10});
    Poly p = pow_poly(from_rat({-a, 0, 1}), 4) * from_rat({b, 1, 1});
    note(&rep, divrem(p, q3).second.deg() <= 0,
         "remainder is constant at (a,b) = (81/500, 189/500)");
  }
  return rep;
}

EliminationReport replay_deg8() {
  EliminationReport rep;
  rep.family = "deg8";
  rep.ok = true;

  const long as[8] = {-3, -2, -1, 0, 1, 2, 3, 5};
  const long bs[8] = {-3, -2, -1, 1, 2, 3, 4, 5};
  bool deriv_ok = true;
  for (long ai : as)
    for (long bi : bs) {
      mpq_class a(ai), b(bi);
      Poly zz = from_rat({-a, 0, 1});
      Poly p = pow_poly(zz, 3) * from_rat({b, 1, 1});
      Poly q3 = from_rat({-a, 6 * b - 2 * a, 7, 8});
      deriv_ok = deriv_ok && p.derivative() == pow_poly(zz, 2) * q3;
    }
  note(&rep, deriv_ok,
       "derivative of (z^2-a)^3(z^2+z+b) is (z^2-a)^2 q3 on the 8x8 grid");

  {
    mpq_class a(-343, 1728), b(1421, 5184);
    Poly q3 = from_rat({-a, 6 * b - 2 * a, 7, 8});
    Poly cube = S(8) * pow_poly(from_rat({mpq_class(7, 24), 1}), 3);
    note(&rep, q3 == cube,
         "a = -343/1728 makes q3 the complete cube 8(z+7/24)^3");
    Poly p = pow_poly(from_rat({-a, 0, 1}), 3) * from_rat({b, 1, 1});
    note(&rep, divrem(p, q3).second.deg() <= 0,
         "remainder is constant on the cube branch");
  }

  QuadExt rp(mpq_class(-25, 64), mpq_class(22, 64), 2);
  QuadExt rm(mpq_class(-25, 64), mpq_class(-22, 64), 2);
  {
    QuadExt lhs = (QuadExt::rational(4096) * rp + QuadExt::rational(3200)) *
                      rp -
                  QuadExt::rational(343);
    QuadExt lhs2 = (QuadExt::rational(4096) * rm + QuadExt::rational(3200)) *
                       rm -
                   QuadExt::rational(343);
    note(&rep, lhs.is_zero() && lhs2.is_zero(),
         "(-25 +- 22 sqrt2)/64 are the exact roots of 4096a^2+3200a-343");
  }
  {
    long prec = 256;
    ComplexBall disc = ComplexBall::sqrt_ui(3200UL * 3200 + 4 * 4096 * 343,
                                            prec);
    ComplexBall b3200 = ComplexBall::from_si(-3200, prec);
    ComplexBall den = ComplexBall::from_si(8192, prec);
    ComplexBall up = (b3200 + disc) / den;
    ComplexBall dn = (b3200 - disc) / den;
    Mag tol = Mag::pow2(-100);
    bool num_ok = ((up - quadext_ball(rp, prec)).upper() < tol) &&
                  ((dn - quadext_ball(rm, prec)).upper() < tol);
    note(&rep, num_ok,
         "quadratic-formula roots match the surds within 2^-100");
  }
  for (int s : {1, -1}) {
    Scalar a(QuadExt(mpq_class(-25, 64), mpq_class(22 * s, 64), 2));
    Scalar b(QuadExt(mpq_class(97, 64), mpq_class(-54 * s, 64), 2));
    Poly zz(std::vector<Scalar>{S(0) - a, S(0), S(1)});
    Poly p = pow_poly(zz, 3) * quadratic(S(1), b);
    Poly q3(std::vector<Scalar>{S(0) - a, S(6) * b - S(2) * a, S(7), S(8)});
    note(&rep, divrem(p, q3).second.deg() <= 0,
         std::string("remainder is constant at the ") +
             (s > 0 ? "plus" : "minus") + " surd pair");
  }
  return rep;
}

}  // namespace

EliminationReport replay_elimination(const std::string& family) {
  if (family == "deg6") return replay_deg6();
  if (family == "deg10") return replay_deg10();
  if (family == "deg8") return replay_deg8();
  throw DomainError("unknown elimination family: " + family);
}

namespace {

std::string fail(const std::string& field, const std::string& got,
                 const std::string& want) {
  return field + ": got " + got + ", expected " + want;
}

}  // namespace

VerifyResult verify_fixture(const Fixture& fx, long prec) {
  VerifyResult res;
  res.id = fx.id;
  res.cert = decide_k(fx.poly, prec);

  if (res.cert.factors.size() != 1) {
    res.divergent = fail("decomposition",
                         std::to_string(res.cert.factors.size()) + " factors",
                         "1 factor");
    return res;
  }
  const FactorReport& fr = res.cert.factors[0];
  if (fr.degree != fx.degree) {
    res.divergent = fail("degree", std::to_string(fr.degree),
                         std::to_string(fx.degree));
    return res;
  }
  if (!fx.passport.empty() && fr.group.passport != fx.passport) {
    res.divergent = fail("passport", passport_str(fr.group.passport),
                         passport_str(fx.passport));
    return res;
  }
  if (!fr.group.primitive) {
    res.divergent = fail("primitive", "no", "yes");
    return res;
  }
  if (fr.group.order != fx.group_order) {
    res.divergent =
        fail("group order", fr.group.order.get_str(), fx.group_order.get_str());
    return res;
  }
  if (fr.group.name() != fx.group_name) {
    res.divergent = fail("group", fr.group.name(), fx.group_name);
    return res;
  }
  if (fr.k_factor != fx.minimal_k || res.cert.overall_k != fx.minimal_k) {
    res.divergent = fail("minimal k", std::to_string(res.cert.overall_k),
                         std::to_string(fx.minimal_k));
    return res;
  }
  if (!fx.critical_values.empty()) {
    CriticalData cd = critical_data(fx.poly, fr.prec_bits);
    if (cd.values.size() != fx.critical_values.size()) {
      res.divergent = fail("critical values", std::to_string(cd.values.size()),
                           std::to_string(fx.critical_values.size()));
      return res;
    }
    for (const Scalar& want : fx.critical_values) {
      int hits = 0;
      for (const CriticalCluster& c : cd.values) {
        if (c.exact_value.has_value()) {
          if (*c.exact_value == want) ++hits;
        } else if (!disjoint(c.value, want.ball(fr.prec_bits))) {
          ++hits;
        }
      }
      if (hits != 1) {
        res.divergent =
            fail("critical value " + want.str(),
                 std::to_string(hits) + " matches", "exactly 1 match");
        return res;
      }
    }
  }
  res.pass = true;
  return res;
}

Deg15Relation deg15_action_relation(const mpq_class& t, long prec) {
  Deg15Relation rel;
  rel.t = t;

  std::vector<std::vector<Perm>> tuples;
  rel.orders_match = true;
  rel.primitive = true;
  for (int sign : {1, -1}) {
    Fixture fx = fixture_deg15(sign, t);
    long bits = prec;
    for (;;) {
      try {
        CriticalData cd = critical_data(fx.poly, bits);
        MonodromyResult mr = monodromy(fx.poly, cd);
        std::vector<Perm> tuple;
        for (int j : cd.loop_order) tuple.push_back(mr.local_perms[j]);
        tuple.push_back(mr.infinity_perm);
        PermGroup g(fx.degree, tuple);
        rel.orders_match = rel.orders_match && g.order() == 20160;
        rel.primitive = rel.primitive && g.is_primitive();
        tuples.push_back(std::move(tuple));
        break;
      } catch (const PrecisionError& e) {
        if (bits >= kPrecisionCeiling) throw;
        bits = std::min(std::max(e.suggested_bits, 2 * bits),
                        kPrecisionCeiling);
      }
    }
  }

  // Branch points of the two covers correspond through conjugation of the
  // coefficients, but the canonical loop orders need not align, so the finite
  // entries are matched in every order; the infinity entry always stays last.
  std::vector<Perm> other = std::move(tuples[1]);
  Perm inf = other.back();
  other.pop_back();
  std::vector<int> idx(other.size());
  std::iota(idx.begin(), idx.end(), 0);
  rel.tuples_equivalent = false;
  do {
    std::vector<Perm> cand;
    cand.reserve(other.size() + 1);
    for (int i : idx) cand.push_back(other[i]);
    cand.push_back(inf);
    if (tuple_conjugator(tuples[0], cand).has_value()) {
      rel.tuples_equivalent = true;
      break;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return rel;
}

}  // namespace kradical
