#pragma once

#include <gmpxx.h>

#include <vector>

#include "kradical/perm.hpp"

namespace kradical {

struct ConjClass {
  Perm rep;
  long size = 0;
};

struct RigidityCount {
  long raw = 0;     // pairs (s1 in C1, s2 in C2) with (s1*s2)^-1 in C3
  long orbits = 0;  // orbits of those pairs under simultaneous conjugation
};

// Permutation group given by generators. The stabilizer chain uses the fixed
// base 0,1,2,... and a deterministic Schreier-Sims construction, so order,
// membership and enumeration order are reproducible across runs.
//
// Built chains may be shared read-only across threads; construction itself
// is single-threaded per group.
class PermGroup {
 public:
  static constexpr long kEnumerationBound = 1000000;

  PermGroup(int n, std::vector<Perm> generators);

  int degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const mpz_class& order() const;
  bool contains(const Perm& g) const;

  std::vector<int> orbit(int point) const;
  bool is_transitive() const;
  // intransitive groups are reported imprimitive
  bool is_primitive() const;

  // full element list in deterministic transversal-product order;
  // refuses above kEnumerationBound
  const std::vector<Perm>& elements() const;
  const std::vector<ConjClass>& conjugacy_classes() const;
  // conjugation closure of one element (no full enumeration)
  std::vector<Perm> conjugacy_class_of(const Perm& g) const;

 private:
  struct Level {
    std::vector<int> orbit;         // BFS discovery order, orbit[0] = base
    std::vector<Perm> transversal;  // by point; empty means not in orbit
    std::vector<int> gens;          // indices into sgens_ fixing 0..base-1
  };

  void build_chain() const;
  void rebuild_levels() const;
  bool find_violation(Perm* out) const;
  Perm sift(Perm g, int from) const;

  int n_;
  std::vector<Perm> gens_;

  mutable bool chain_built_ = false;
  mutable std::vector<Perm> sgens_;
  mutable std::vector<Level> levels_;
  mutable mpz_class order_;

  mutable bool elements_built_ = false;
  mutable std::vector<Perm> elements_;
  mutable bool classes_built_ = false;
  mutable std::vector<ConjClass> classes_;
};

// Counts solutions of s1*s2*s3 = 1 with s_i ranging over the conjugacy
// classes of the given representatives (all must lie in g).
RigidityCount rigidity_count(const PermGroup& g, const Perm& c1, const Perm& c2,
                             const Perm& c3);

// Smallest index of a proper subgroup, by a Sylow-seeded closure scan over
// subgroup candidates plus point stabilizers. The scan is exhaustive above
// each Sylow subgroup, so the result is exact whenever some prime divisor of
// |G| does not divide the minimal index; that holds for every group this is
// used to cross-check. Requires order <= 10^5 and degree <= 16.
long min_faithful_index(const PermGroup& g);

}  // namespace kradical
