#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kradical/monodromy.hpp"
#include "kradical/permgroup.hpp"
#include "kradical/poly.hpp"
#include "kradical/projective.hpp"

namespace kradical {

enum class GroupTag {
  kSymmetric,
  kAlternating,
  kCyclicPrime,
  kDihedralBetween,
  kPSL2_11,
  kM11,
  kM23,
  kProjective,
  kUnrecognized,
};

// Match of a monodromy group against the classification table, together with
// the evidence the lookup ran on. The (degree, order) pairs in the table are
// pairwise distinct at every degree, so that pair plus primitivity pins the
// row; the passport is recorded as corroboration, not used to disambiguate.
struct GroupId {
  GroupTag tag = GroupTag::kUnrecognized;
  int degree = 0;
  mpz_class order;
  bool primitive = false;
  Passport passport;
  // parameters of the projective case, meaningful when tag == kProjective
  GroupKind kind = GroupKind::kPGL;
  int d = 0;
  int q = 0;

  // "S_6", "A_7", "C_11", "D_11", "PGL(2,5)", "M11", ...
  std::string name() const;
  bool solvable() const;
  // "points-or-hyperplanes" for the degree-15 PGL(4,2) row, where the two
  // actions have the same image in S_15 and the subgroup alone cannot
  // decide; empty otherwise
  std::string action_note() const;
};

// Looks up (degree, order) in the frozen table. Verifies transitivity and
// the presence of a full cycle among the generators and their products
// (DomainError otherwise); anything off the table comes back with tag
// kUnrecognized, which by exhaustiveness of the classification signals a
// numerical failure upstream rather than a new group.
GroupId identify(const PermGroup& g, const Passport& pp);

// Minimal k such that the group is [k]-solvable: 1 for the solvable rows,
// the degree for the generic rows, and 5/6/7/8 for the four exceptional
// projective rows. DomainError on kUnrecognized.
int minimal_k(const GroupId& id);

struct PowerChebyshev {
  enum Kind { kPower, kChebyshev };
  Kind kind;
  int n;
};

// Witness that p is an affine conjugate of z^n (cyclic monodromy of order n)
// or of the Chebyshev polynomial T_n (dihedral monodromy of order 2n, n >= 3).
// Returns the class only, never the conjugation.
std::optional<PowerChebyshev> recognize_power_chebyshev(const Poly& p,
                                                        const MonodromyResult& mr);

struct FactorReport {
  Poly poly;
  int degree = 0;
  GroupId group;
  int k_group = 1;
  int k_factor = 1;   // min(degree, k_group)
  long prec_bits = 0; // precision at which the monodromy certified, 0 if none ran
};

// Full-pipeline verdict. factors follow the composition order of the chain
// (outermost first); composing them reproduces the input polynomial.
struct KCertificate {
  std::vector<FactorReport> factors;
  int overall_k = 1;
};

// Decomposes p, then per factor of degree >= 2 runs critical_data ->
// monodromy -> passport -> identify -> minimal_k, doubling the working
// precision on precision-insufficient failures up to the 4096-bit ceiling
// (the last failure propagates past it). Linear factors contribute k = 1
// with trivial group evidence. UnrecognizedGroupError aborts the run with
// the evidence in the message; seed perturbs the monodromy base point.
KCertificate decide_k(const Poly& p, long prec = kPrecisionDefault,
                      unsigned seed = 0);

// One row of the classification table as printable reference data.
struct GroupInfo {
  std::string name;
  int degree = 0;
  mpz_class order;
  int minimal_k = 0;
  std::string note;
};

// Lookup by printable name ("PGL(2,7)", "PGammaL(2,9)", "M11", "PSL(2,11)",
// "S_7", "A_9", ...). Accepts the M_11/M_23 underscore spelling too.
std::optional<GroupInfo> group_info(const std::string& name);

}  // namespace kradical
