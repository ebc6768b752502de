#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kradical/errors.hpp"
#include "kradical/perm.hpp"
#include "kradical/permgroup.hpp"

using namespace kradical;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Perm(im);
}

// Schreier generators for the stabilizer of 0, built from scratch so the
// stabilizer order can be computed independently of the group's own chain.
std::vector<Perm> stabilizer_gens(int n, const std::vector<Perm>& gens) {
  std::vector<Perm> reps(n);
  std::vector<char> seen(n, 0);
  std::vector<int> orb{0};
  seen[0] = 1;
  reps[0] = Perm::identity(n);
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens) {
      int q = g(orb[i]);
      if (!seen[q]) {
        seen[q] = 1;
        reps[q] = reps[orb[i]] * g;
        orb.push_back(q);
      }
    }
  std::vector<Perm> out;
  for (int p : orb)
    for (const Perm& g : gens) out.push_back(reps[p] * g * reps[g(p)].inverse());
  return out;
}

// A candidate block is a block iff every image under the group meets it
// in nothing or everything; images are explored by generator closure.
bool is_block(const std::set<int>& b, const std::vector<Perm>& gens) {
  std::set<std::set<int>> images{b};
  std::vector<std::set<int>> work{b};
  while (!work.empty()) {
    std::set<int> cur = work.back();
    work.pop_back();
    for (const Perm& g : gens) {
      std::set<int> img;
      for (int x : cur) img.insert(g(x));
      size_t common = 0;
      for (int x : img)
        if (b.count(x)) ++common;
      if (common != 0 && common != b.size()) return false;
      if (images.insert(img).second) work.push_back(img);
    }
  }
  return true;
}

bool brute_force_primitive(int n, const std::vector<Perm>& gens) {
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    // all size-d subsets containing 0
    std::vector<int> pick(d - 1);
    std::iota(pick.begin(), pick.end(), 1);
    for (;;) {
      std::set<int> b{0};
      for (int x : pick) b.insert(x);
      if (is_block(b, gens)) return false;
      int i = d - 2;
      while (i >= 0 && pick[i] == n - (d - 1) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < d - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("permutation basics follow the left-to-right convention") {
  Perm a = Perm::from_cycles(4, {{0, 1, 2}});
  Perm b = Perm::from_cycles(4, {{0, 1}});
  CHECK((a * b)(0) == 0);
  CHECK((b * a)(0) == 2);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.inverse()(1) == 0);
  CHECK(a.one_line() == "[1 2 0 3]");
  CHECK_THROWS(Perm::from_cycles(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS(Perm::from_cycles(3, {{0, 5}}));
}

TEST_CASE("cycle types list bases descending with fixed points") {
  CHECK(Perm::identity(6).cycle_type() == "1^6");
  CHECK(Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}).cycle_type() ==
        "10^1");
  CHECK(Perm::from_cycles(10, {{0, 1, 2, 3}, {4, 5, 6, 7}}).cycle_type() ==
        "4^2 1^2");
  Perm g = Perm::from_cycles(8, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(g.cycle_type() == "2^3 1^2");
  std::vector<int> lens = g.cycle_lengths();
  CHECK(lens == std::vector<int>{2, 2, 2, 1, 1});
}

TEST_CASE("stabilizer chain orders match known groups") {
  PermGroup c6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(c6.order() == 6);

  PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}),
                   Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(s4.order() == 24);

  PermGroup s8(8, {Perm::from_cycles(8, {{0, 1}}),
                   Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  CHECK(s8.order() == 40320);

  PermGroup a5(5, {Perm::from_cycles(5, {{0, 1, 2}}),
                   Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(a5.order() == 60);

  PermGroup d6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                   Perm::from_cycles(6, {{1, 5}, {2, 4}})});
  CHECK(d6.order() == 12);
}

TEST_CASE("linear fractional generators over five points give the classics") {
  // points 0..4 are the field, 5 is the point at infinity
  Perm shift(std::vector<int>{1, 2, 3, 4, 0, 5});       // x -> x+1
  Perm invert(std::vector<int>{5, 1, 3, 2, 4, 0});      // x -> 1/x
  Perm doubling(std::vector<int>{0, 2, 4, 1, 3, 5});    // x -> 2x
  PermGroup psl(6, {shift, invert});
  CHECK(psl.order() == 60);
  PermGroup pgl(6, {shift, invert, doubling});
  CHECK(pgl.order() == 120);
  CHECK(pgl.is_transitive());
  CHECK(pgl.is_primitive());
  CHECK(pgl.contains(shift * invert));
  CHECK(!psl.contains(doubling));
}

TEST_CASE("transitivity and primitivity recognize block structure") {
  PermGroup d6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                   Perm::from_cycles(6, {{1, 5}, {2, 4}})});
  CHECK(d6.is_transitive());
  CHECK(!d6.is_primitive());

  PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}),
                   Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(s4.is_primitive());

  PermGroup c6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(c6.is_transitive());
  CHECK(!c6.is_primitive());

  PermGroup c5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(c5.is_primitive());

  PermGroup fixed(4, {Perm::from_cycles(4, {{0, 1, 2}})});
  CHECK(!fixed.is_transitive());
  CHECK(!fixed.is_primitive());
}

TEST_CASE("element enumeration is complete and deterministic") {
  std::vector<Perm> gens{Perm::from_cycles(4, {{0, 1}}),
                         Perm::from_cycles(4, {{0, 1, 2, 3}})};
  PermGroup g1(4, gens), g2(4, gens);
  const auto& e1 = g1.elements();
  const auto& e2 = g2.elements();
  REQUIRE(e1.size() == 24);
  std::set<std::string> keys;
  for (const Perm& p : e1) keys.insert(p.key());
  CHECK(keys.size() == 24);
  for (size_t i = 0; i < e1.size(); ++i) CHECK(e1[i] == e2[i]);
}

TEST_CASE("conjugacy classes partition the group") {
  PermGroup c6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(c6.conjugacy_classes().size() == 6);
  for (const ConjClass& c : c6.conjugacy_classes()) CHECK(c.size == 1);

  PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}),
                   Perm::from_cycles(4, {{0, 1, 2, 3}})});
  const auto& cls = s4.conjugacy_classes();
  REQUIRE(cls.size() == 5);
  long sum = 0;
  for (const ConjClass& c : cls) {
    sum += c.size;
    CHECK(24 % c.size == 0);
  }
  CHECK(sum == 24);

  std::multiset<long> sizes;
  for (const ConjClass& c : cls) sizes.insert(c.size);
  CHECK(sizes == std::multiset<long>{1, 3, 6, 6, 8});
}

TEST_CASE("orbit-stabilizer consistency on random subgroups") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Perm> gens{random_perm(8, rng), random_perm(8, rng)};
    PermGroup g(8, gens);
    PermGroup stab(8, stabilizer_gens(8, gens));
    CHECK(g.order() == stab.order() * static_cast<long>(g.orbit(0).size()));
  }
}

TEST_CASE("primitivity agrees with brute-force block enumeration") {
  std::mt19937 rng(987654);
  int done = 0;
  while (done < 200) {
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<Perm> gens{random_perm(n, rng), random_perm(n, rng)};
    PermGroup g(n, gens);
    if (!g.is_transitive()) continue;
    CHECK(g.is_primitive() == brute_force_primitive(n, gens));
    ++done;
  }
}

TEST_CASE("rigidity counting is class-level data") {
  PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}),
                   Perm::from_cycles(4, {{0, 1, 2, 3}})});
  Perm c1 = Perm::from_cycles(4, {{0, 1, 2, 3}});
  Perm c2 = Perm::from_cycles(4, {{0, 1}});
  Perm c3 = (c1 * c2).inverse();
  RigidityCount a = rigidity_count(s4, c1, c2, c3);
  CHECK(a.raw >= 1);
  CHECK(a.orbits >= 1);

  // identical counts after replacing every representative by a conjugate
  Perm h = Perm::from_cycles(4, {{1, 3, 2}});
  RigidityCount b =
      rigidity_count(s4, conjugate(c1, h), conjugate(c2, h), conjugate(c3, h));
  CHECK(a.raw == b.raw);
  CHECK(a.orbits == b.orbits);

  Perm id = Perm::identity(4);
  RigidityCount triv = rigidity_count(s4, id, id, id);
  CHECK(triv.raw == 1);
  CHECK(triv.orbits == 1);
}

TEST_CASE("smallest proper subgroup indices on small groups") {
  PermGroup a5(5, {Perm::from_cycles(5, {{0, 1, 2}}),
                   Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(min_faithful_index(a5) == 5);

  PermGroup s4(4, {Perm::from_cycles(4, {{0, 1}}),
                   Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(min_faithful_index(s4) == 2);

  PermGroup c6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(min_faithful_index(c6) == 2);

  PermGroup c5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(min_faithful_index(c5) == 5);

  PermGroup c8(8, {Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  CHECK(min_faithful_index(c8) == 2);

  PermGroup a6(6, {Perm::from_cycles(6, {{0, 1, 2}}),
                   Perm::from_cycles(6, {{1, 2, 3, 4, 5}})});
  REQUIRE(a6.order() == 360);
  CHECK(min_faithful_index(a6) == 6);
}

TEST_CASE("scan and enumeration bounds are enforced") {
  PermGroup s10(10, {Perm::from_cycles(10, {{0, 1}}),
                     Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})});
  CHECK_THROWS_AS(s10.elements(), DomainError);
  CHECK_THROWS_AS(min_faithful_index(s10), DomainError);
  try {
    s10.elements();
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("1000000") != std::string::npos);
  }

  PermGroup wide(17, {Perm::from_cycles(17, {{0, 1}})});
  CHECK_THROWS_AS(min_faithful_index(wide), DomainError);
}
