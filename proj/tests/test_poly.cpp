#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kradical/errors.hpp"
#include "kradical/poly.hpp"

using namespace kradical;

namespace {

Poly from_longs(std::initializer_list<long> v) {
  std::vector<mpq_class> q;
  for (long x : v) q.emplace_back(x);
  return Poly::from_rationals(q);
}

}  // namespace

TEST_CASE("normalization strips leading zeros and tracks degree") {
  Poly p(std::vector<Scalar>{Scalar::from_long(1), Scalar::from_long(0),
                             Scalar::from_long(0)});
  CHECK(p.deg() == 0);
  CHECK(Poly::zero().deg() == -1);
  CHECK(Poly::zero().is_zero());
  CHECK(Poly::power(5).deg() == 5);
  CHECK(from_longs({0, 0, 3}).deg() == 2);
}

TEST_CASE("ring operations") {
  Poly a = from_longs({1, 2, 1});   // (z+1)^2
  Poly b = from_longs({-1, 1});     // z-1
  Poly p = a * b;                   // z^3 + z^2 - z - 1
  CHECK(p == from_longs({-1, -1, 1, 1}));
  CHECK(a + b == from_longs({0, 3, 1}));
  CHECK(a - a == Poly::zero());
  CHECK((Scalar::from_long(2) * b) == from_longs({-2, 2}));
  CHECK(p.derivative() == from_longs({-1, 2, 3}));
}

TEST_CASE("evaluation paths agree") {
  Poly p = from_longs({2, 0, -3, 1});  // z^3 - 3z^2 + 2
  QuadExt v = p.eval_exact(QuadExt::rational(mpq_class(1, 2)));
  // 1/8 - 3/4 + 2 = 11/8
  CHECK(v == QuadExt::rational(mpq_class(11, 8)));
  ComplexBall z = ComplexBall::from_q(mpq_class(1, 2), 0, 192);
  CHECK(p.eval_ball(z, 192).contains_q(mpq_class(11, 8), 0));
  MpComplex zm = MpComplex::from_q(mpq_class(1, 2), 0, 192);
  MpComplex w = p.eval_mp(zm);
  CHECK(mpfr_cmp_d(w.re.get(), 1.375) == 0);
}

TEST_CASE("composition and powers") {
  Poly g = from_longs({1, 0, 1});  // z^2 + 1
  Poly h = from_longs({0, 0, 1});  // z^2
  Poly f = compose(h, g);          // (z^2+1)^2
  CHECK(f == from_longs({1, 0, 2, 0, 1}));
  CHECK(pow_poly(g, 2) == f);
  CHECK(compose(g, Poly::power(1)) == g);
}

TEST_CASE("division with remainder inverts multiplication") {
  Poly a = from_longs({3, -2, 0, 5, 1});
  Poly b = from_longs({1, 4, 2});
  auto [q, r] = divrem(a, b);
  CHECK(q * b + r == a);
  CHECK(r.deg() < b.deg());
  auto [q2, r2] = divrem(a * b, b);
  CHECK(r2.is_zero());
  CHECK(q2 == a);
  CHECK_THROWS_AS((void)divrem(a, Poly::zero()), DomainError);
}

TEST_CASE("gcd and squarefree structure") {
  Poly s1 = from_longs({-1, 1});      // z - 1
  Poly s2 = from_longs({2, 1});       // z + 2
  Poly s3 = from_longs({1, 1, 1});    // z^2 + z + 1
  Poly f = s1 * pow_poly(s2, 2) * pow_poly(s3, 3);
  Poly g = gcd_exact(f, f.derivative());
  CHECK(divrem(f, g).second.is_zero());

  auto sq = yun_squarefree(Scalar::from_long(7) * f);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == s1);
  CHECK(sq[1] == s2);
  CHECK(sq[2] == s3);

  auto sq1 = yun_squarefree(s3);
  REQUIRE(sq1.size() == 1);
  CHECK(sq1[0] == s3);
}

TEST_CASE("gcd over a quadratic field") {
  // (z - sqrt2)(z + sqrt2) = z^2 - 2 shares z - sqrt2 with (z - sqrt2)(z - 1)
  Scalar r2(QuadExt::root(2));
  Poly a(std::vector<Scalar>{Scalar::from_long(-2), Scalar::from_long(0),
                             Scalar::from_long(1)});
  Poly b(std::vector<Scalar>{r2, Scalar::from_long(-1) - r2,
                             Scalar::from_long(1)});
  Poly g = gcd_exact(a, b);
  CHECK(g.deg() == 1);
  CHECK(g.coeff(0).exact() == -QuadExt::root(2));
}

TEST_CASE("chebyshev polynomials") {
  Poly t2 = Poly::chebyshev(2);
  CHECK(t2 == from_longs({-1, 0, 2}));
  Poly t6 = Poly::chebyshev(6);
  CHECK(t6 == compose(Poly::chebyshev(2), Poly::chebyshev(3)));
  CHECK(t6.eval_exact(QuadExt::rational(1)) == QuadExt::rational(1));
  CHECK(Poly::chebyshev(5).eval_exact(QuadExt::rational(-1)) ==
        QuadExt::rational(-1));
  CHECK(t6.deg() == 6);
  CHECK(t6.leading().exact() == QuadExt::rational(32));
}

TEST_CASE("exact kernel rejects numeric coefficients") {
  Scalar n = Scalar::numeric(ComplexBall::from_q(1, 1, kPrecisionCeiling));
  Poly p(std::vector<Scalar>{n, Scalar::from_long(1)});
  CHECK(!p.is_exact());
  CHECK_THROWS_AS((void)gcd_exact(p, p), DomainError);
  CHECK_THROWS_AS((void)yun_squarefree(p), DomainError);
}

TEST_CASE("rendering") {
  CHECK(from_longs({-1, 0, 2}).str() == "(2)*z^2 + -1");
  CHECK(Poly::zero().str() == "0");
  CHECK(Poly::power(1).str() == "z");
}

#include "kradical/parse.hpp"

TEST_CASE("parser handles the fixture expressions") {
  auto r = parse_poly("z^4*(z^2+6*z+25)");
  CHECK(r.poly.deg() == 6);
  CHECK(!r.numeric_only);
  CHECK(r.poly == from_longs({0, 0, 0, 0, 25, 6, 1}));

  auto id = parse_poly("z");
  CHECK(id.poly.deg() == 1);

  auto d8 = parse_poly(
      "(z^2+(25+22*sqrt(2))/64)^3*(z^2+z+(97+54*sqrt(2))/64)");
  CHECK(d8.poly.deg() == 8);
  CHECK(!d8.numeric_only);
  CHECK(poly_field_d(d8.poly) == 2);
  CHECK(d8.poly.coeff(8).exact() == QuadExt::rational(1));
  // constant term: ((25+22 sqrt2)/64)^3 * (97+54 sqrt2)/64
  QuadExt u(mpq_class(25, 64), mpq_class(22, 64), 2);
  QuadExt v(mpq_class(97, 64), mpq_class(54, 64), 2);
  CHECK(d8.poly.coeff(0).exact() == u * u * u * v);
}

TEST_CASE("parser whitespace, signs, and precedence") {
  CHECK(parse_poly(" z ^ 2 - 3 * z + 1/2 ").poly ==
        Poly::from_rationals({mpq_class(1, 2), mpq_class(-3), mpq_class(1)}));
  CHECK(parse_poly("z^2+-3").poly ==
        from_longs({-3, 0, 1}));
  CHECK(parse_poly("-2*z").poly == from_longs({0, -2}));
  CHECK(parse_poly("(z+1)^2").poly == from_longs({1, 2, 1}));
  CHECK(parse_poly("z*z*z").poly == Poly::power(3));
  CHECK(parse_poly("sqrt(8)*z").poly.coeff(1).exact() ==
        QuadExt::root(2, 2));
  CHECK(parse_poly("sqrt(9)*z").poly.coeff(1).exact() ==
        QuadExt::rational(3));
}

TEST_CASE("parser rejects malformed input with positions") {
  CHECK_THROWS_AS((void)parse_poly("z+"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("2*z)"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("z z"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("q^2"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("z^(2)"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("sqrt(-2)"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("1/0"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("(z+1)/z"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("5"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("z-z"), ParseError);
  CHECK_THROWS_AS((void)parse_poly(""), ParseError);
  try {
    (void)parse_poly("z^2 + $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 6);
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("mixed radicands downgrade to numeric with a warning") {
  auto r = parse_poly("z^2+sqrt(2)+sqrt(3)");
  CHECK(r.numeric_only);
  REQUIRE(r.warnings.size() == 1);
  // the constant is still a valid enclosure of sqrt2+sqrt3
  ComplexBall c = r.poly.coeff(0).ball(256);
  CHECK(!c.contains_zero());
  // distinct radicands in distinct coefficients also force numeric-only
  auto r2 = parse_poly("sqrt(2)*z^2+sqrt(3)");
  CHECK(r2.numeric_only);
  CHECK(r2.poly.is_exact());
  CHECK(!poly_field_d(r2.poly).has_value());
}

TEST_CASE("constant division at term level") {
  auto r = parse_poly("(2*z+4)/2");
  CHECK(r.poly == from_longs({2, 1}));
  CHECK(parse_poly("z/3").poly ==
        Poly::from_rationals({mpq_class(0), mpq_class(1, 3)}));
}
