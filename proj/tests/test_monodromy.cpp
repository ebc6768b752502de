#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "kradical/errors.hpp"
#include "kradical/monodromy.hpp"
#include "kradical/parse.hpp"
#include "kradical/permgroup.hpp"
#include "kradical/poly.hpp"

using namespace kradical;

namespace {

Poly from_longs(std::initializer_list<long> v) {
  std::vector<mpq_class> q;
  for (long x : v) q.emplace_back(x);
  return Poly::from_rationals(q);
}

Poly numeric_copy(const Poly& p) {
  std::vector<Scalar> c;
  for (const auto& s : p.c)
    c.push_back(Scalar::numeric(s.ball(kPrecisionCeiling)));
  return Poly(std::move(c));
}

MonodromyResult analyze(const Poly& p, long prec = kPrecisionDefault,
                        unsigned seed = 0) {
  return monodromy(p, critical_data(p, prec, seed));
}

long ramification_sum(const MonodromyResult& mr) {
  long s = 0;
  for (const Perm& g : mr.local_perms)
    for (int len : g.cycle_lengths())
      if (len >= 2) s += len - 1;
  return s;
}

bool product_relation(const MonodromyResult& mr, const CriticalData& cd) {
  Perm t = Perm::identity(mr.infinity_perm.n());
  for (int idx : cd.loop_order) t = t * mr.local_perms[idx];
  return (t * mr.infinity_perm).is_identity();
}

bool is_rational(const CriticalCluster& c, long num, long den) {
  return c.exact_value && c.exact_value->is_exact() &&
         c.exact_value->exact() == QuadExt::rational(mpq_class(num, den));
}

}  // namespace

TEST_CASE("z^2 swaps its two sheets") {
  Poly p = Poly::power(2);
  CriticalData cd = critical_data(p);
  REQUIRE(cd.values.size() == 1);
  CHECK(is_rational(cd.values[0], 0, 1));
  CHECK(cd.values[0].multiplicities == std::vector<int>{2});
  MonodromyResult mr = monodromy(p, cd);
  CHECK(mr.local_perms[0].cycle_type() == "2^1");
  CHECK(mr.infinity_perm.cycle_type() == "2^1");
  CHECK(passport(mr) == Passport{"2^1"});
}

TEST_CASE("z^5 has a single totally ramified value") {
  Poly p = Poly::power(5);
  CriticalData cd = critical_data(p);
  REQUIRE(cd.values.size() == 1);
  CHECK(cd.values[0].multiplicities == std::vector<int>{5});
  MonodromyResult mr = monodromy(p, cd);
  CHECK(mr.local_perms[0].cycle_lengths() == std::vector<int>{5});
  CHECK(mr.infinity_perm.cycle_lengths() == std::vector<int>{5});
  CHECK(product_relation(mr, cd));
}

TEST_CASE("cubic z^3 - 3z has two simple critical values") {
  Poly p = from_longs({0, -3, 0, 1});
  CriticalData cd = critical_data(p);
  REQUIRE(cd.values.size() == 2);
  CHECK(cd.values[0].value.contains_q(mpq_class(-2), mpq_class(0)));
  CHECK(cd.values[1].value.contains_q(mpq_class(2), mpq_class(0)));
  MonodromyResult mr = monodromy(p, cd);
  CHECK(passport(mr) == Passport{"2^1 1^1", "2^1 1^1"});
  CHECK(mr.infinity_perm.cycle_lengths() == std::vector<int>{3});
  CHECK(product_relation(mr, cd));
}

TEST_CASE("Chebyshev T4 merges the two critical points over -1") {
  Poly p = Poly::chebyshev(4);
  CriticalData cd = critical_data(p);
  REQUIRE(cd.values.size() == 2);
  CHECK(is_rational(cd.values[0], -1, 1));
  CHECK(is_rational(cd.values[1], 1, 1));
  CHECK(cd.values[0].multiplicities == std::vector<int>{2, 2});
  CHECK(cd.values[1].multiplicities == std::vector<int>{2});
  MonodromyResult mr = monodromy(p, cd);
  CHECK(passport(mr) == Passport{"2^2", "2^1 1^2"});
  CHECK(product_relation(mr, cd));
}

TEST_CASE("degree-6 sample z^4 (z^2 + 6z + 25)") {
  Poly p = from_longs({0, 0, 0, 0, 25, 6, 1});
  CriticalData cd = critical_data(p);
  REQUIRE(cd.values.size() == 2);
  CHECK(is_rational(cd.values[0], -50000, 27));
  CHECK(is_rational(cd.values[1], 0, 1));
  CHECK(cd.values[0].multiplicities == std::vector<int>{2, 2});
  CHECK(cd.values[1].multiplicities == std::vector<int>{4});
  MonodromyResult mr = monodromy(p, cd);
  CHECK(passport(mr) == Passport{"4^1 1^2", "2^2 1^2"});
  CHECK(mr.infinity_perm.cycle_lengths() == std::vector<int>{6});
  CHECK(product_relation(mr, cd));
  PermGroup g(6, mr.local_perms);
  CHECK(g.is_transitive());
  CHECK(g.order() == 120);
}

TEST_CASE("quadratic-field input merges values over Q(sqrt(2))") {
  // (z^2 + (25+22 sqrt 2)/64)^3 (z^2 + z + (97+54 sqrt 2)/64)
  Scalar c1(QuadExt(mpq_class(25, 64), mpq_class(22, 64), 2));
  Scalar c2(QuadExt(mpq_class(97, 64), mpq_class(54, 64), 2));
  Poly a(std::vector<Scalar>{c1, Scalar(), Scalar::from_long(1)});
  Poly b(std::vector<Scalar>{c2, Scalar::from_long(1), Scalar::from_long(1)});
  Poly p = pow_poly(a, 3) * b;
  REQUIRE(p.deg() == 8);
  CriticalData cd = critical_data(p);
  REQUIRE(cd.values.size() == 2);
  for (const auto& c : cd.values) CHECK(c.exact_value.has_value());
  MonodromyResult mr = monodromy(p, cd);
  CHECK(passport(mr) == Passport{"3^2 1^2", "2^3 1^2"});
  CHECK(product_relation(mr, cd));
}

TEST_CASE("numeric coefficients work when values stay separated") {
  Poly p = numeric_copy(from_longs({0, -3, 0, 1}));
  MonodromyResult mr = analyze(p);
  CHECK(passport(mr) == Passport{"2^1 1^1", "2^1 1^1"});
}

TEST_CASE("numeric coefficients with coinciding values fail honestly") {
  Poly p = numeric_copy(from_longs({0, 0, 0, 0, 25, 6, 1}));
  CHECK_THROWS_AS(critical_data(p), PrecisionError);
}

TEST_CASE("degree-1 input degenerates") {
  Poly p = from_longs({4, 3});
  CriticalData cd = critical_data(p);
  CHECK(cd.values.empty());
  MonodromyResult mr = monodromy(p, cd);
  CHECK(mr.local_perms.empty());
  CHECK(mr.fiber.size() == 1);
  CHECK(mr.infinity_perm == Perm::identity(1));
  CHECK(passport(mr).empty());
  CHECK(passport_str(passport(mr)) == "[]");
}

TEST_CASE("zero and constant inputs are rejected") {
  CHECK_THROWS_AS(critical_data(Poly::zero()), DomainError);
  CHECK_THROWS_AS(critical_data(Poly::constant(Scalar::from_long(5))),
                  DomainError);
}

TEST_CASE("passport text form sorts entries descending") {
  MonodromyResult mr;
  mr.local_perms.push_back(Perm::from_cycles(6, {{0, 1}}));
  mr.local_perms.push_back(Perm::from_cycles(6, {{0, 1, 2, 3}}));
  mr.local_perms.push_back(Perm::identity(6));
  mr.infinity_perm = Perm::identity(6);
  Passport pp = passport(mr);
  CHECK(pp == Passport{"4^1 1^2", "2^1 1^4"});
  CHECK(passport_str(pp) == "[4^1 1^2, 2^1 1^4]");
}

TEST_CASE("results are deterministic and stable under precision doubling") {
  Poly p = from_longs({3, -1, 0, 2, 1});
  CriticalData cd1 = critical_data(p, 256);
  CriticalData cd2 = critical_data(p, 256);
  MonodromyResult a = monodromy(p, cd1);
  MonodromyResult b = monodromy(p, cd2);
  REQUIRE(a.local_perms.size() == b.local_perms.size());
  for (size_t i = 0; i < a.local_perms.size(); ++i)
    CHECK(a.local_perms[i] == b.local_perms[i]);
  CHECK(a.infinity_perm == b.infinity_perm);

  MonodromyResult c = analyze(p, 512);
  CHECK(passport(c) == passport(a));
}

TEST_CASE("base angle seed changes the fiber, not the passport") {
  Poly p = from_longs({0, 0, 0, 0, 25, 6, 1});
  MonodromyResult a = analyze(p, kPrecisionDefault, 0);
  MonodromyResult b = analyze(p, kPrecisionDefault, 7);
  CHECK(passport(a) == passport(b));
  PermGroup ga(6, a.local_perms);
  PermGroup gb(6, b.local_perms);
  CHECK(ga.order() == gb.order());
}

TEST_CASE("random polynomials satisfy the covering invariants") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> deg(3, 8);
  int done = 0;
  while (done < 20) {
    int n = deg(rng);
    std::vector<mpq_class> c(n + 1);
    for (int i = 0; i < n; ++i) c[i] = coeff(rng);
    c[n] = 1;
    Poly p = Poly::from_rationals(c);
    if (p.deg() != n) continue;
    CriticalData cd = critical_data(p);
    MonodromyResult mr = monodromy(p, cd);
    CHECK(ramification_sum(mr) == n - 1);
    CHECK(mr.infinity_perm.cycle_lengths() == std::vector<int>{n});
    CHECK(product_relation(mr, cd));
    CHECK(PermGroup(n, mr.local_perms).is_transitive());
    ++done;
  }
}

TEST_CASE("parsed input runs end to end") {
  ParseResult pr = parse_poly("z^4*(z^2 + 6*z + 25)");
  MonodromyResult mr = analyze(pr.poly);
  CHECK(passport_str(passport(mr)) == "[4^1 1^2, 2^2 1^2]");
}

TEST_CASE("loop order stays consistent when departures straddle the cut") {
  // For this polynomial, seed 7 places the base so the departure cone
  // crosses the atan2 branch; ordering by raw angle instead of angle from
  // the outward ray used to compose a wrong rotation of the loop product
  // and fail against the tracked infinity circle at every precision.
  std::vector<mpq_class> c = {1,
                              mpq_class(3, 2),
                              mpq_class(-9, 2),
                              mpq_class(2, 3),
                              mpq_class(-9, 2),
                              -3,
                              mpq_class(-1, 3),
                              3};
  Poly p = Poly::from_rationals(c);
  MonodromyResult base = analyze(p, kPrecisionDefault, 0);
  MonodromyResult moved = analyze(p, kPrecisionDefault, 7);
  CHECK(passport(moved) == passport(base));
  CHECK(PermGroup(7, moved.local_perms).order() ==
        PermGroup(7, base.local_perms).order());
}
