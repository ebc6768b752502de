#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kradical/classifier.hpp"
#include "kradical/monodromy.hpp"
#include "kradical/poly.hpp"
#include "kradical/scalar.hpp"

namespace kradical {

// Everything the pipeline is expected to reproduce for one named polynomial.
// passport/critical_values are left empty where no exact expectation is
// pinned; order, name and k are always set.
struct Fixture {
  std::string id;
  Poly poly;
  int degree = 0;
  Passport passport;
  mpz_class group_order;
  std::string group_name;
  int minimal_k = 0;
  std::vector<Scalar> critical_values;
};

// ids: "deg6", "deg10", "deg8-plus", "deg8-minus"
Fixture fixture(const std::string& id);
std::vector<std::string> fixture_ids();

// The degree-15 family member g_t^a with a = (1 + a_sign*sqrt(-15))/2 and
// rational t != 0 (DomainError at t = 0). The passport expectation is set at
// t = 1 and t = 75/4 only; critical values are never pinned exactly.
Fixture fixture_deg15(int a_sign, const mpq_class& t);

// Replay of the printed elimination identities behind the fixture normal
// forms, on exact rational (or quadratic-field) arithmetic:
//   deg6  - remainder coefficient closed form over an 8x8 (a,b) grid, its
//           three vanishing branches, the square branch, the z^2 split at
//           a = 0, and (6,25) landing on the 36b = 25a^2 branch
//   deg10 - derivative identity over the grid, the complete-cube branch at
//           a = -27/100, constant remainder at (81/500, 189/500)
//   deg8  - derivative identity over the grid, the complete-cube branch at
//           a = -343/1728, the quadratic 4096a^2+3200a-343 splitting over
//           sqrt(2) exactly and numerically to 1e-30, constant remainder at
//           both surd pairs
struct EliminationReport {
  std::string family;
  bool ok = false;
  std::vector<std::string> lines;
};
EliminationReport replay_elimination(const std::string& family);

// Full-pipeline check of one fixture against its expectations. pass == false
// names the first divergent field in `divergent`; the certificate is kept
// for reporting either way.
struct VerifyResult {
  std::string id;
  bool pass = false;
  std::string divergent;
  KCertificate cert;
};
VerifyResult verify_fixture(const Fixture& fx, long prec = kPrecisionDefault);

// Computed relation between the two a-roots of the degree-15 family at one
// t: both monodromy groups have order 20160 and act primitively, and the
// local-permutation tuples of the two runs are tested for simultaneous
// conjugacy (over both orderings of the finite critical values). The two
// roots give mirror dessins, so inequivalent tuples match the two projective
// actions in an order the subgroup cannot name.
struct Deg15Relation {
  mpq_class t;
  bool orders_match = false;
  bool primitive = false;
  bool tuples_equivalent = false;
};
Deg15Relation deg15_action_relation(const mpq_class& t,
                                    long prec = kPrecisionDefault);

}  // namespace kradical
