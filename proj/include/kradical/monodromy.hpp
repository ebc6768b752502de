#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kradical/ball.hpp"
#include "kradical/errors.hpp"
#include "kradical/perm.hpp"
#include "kradical/poly.hpp"
#include "kradical/scalar.hpp"

namespace kradical {

// One critical value of p, as the merged cluster of images of critical
// points. multiplicities lists the local multiplicities (all >= 2) of the
// critical points above it, descending. exact_value is set when the cluster
// was certified exactly: coinciding images are merged only through an exact
// certificate (the characteristic polynomial of multiplication by p on the
// squarefree parts of p'), never by numeric proximity.
struct CriticalCluster {
  ComplexBall value;
  std::optional<Scalar> exact_value;
  std::vector<int> multiplicities;
};

// Critical values plus the loop geometry the tracker uses. The base point
// sits on the circle of radius 2 max|v| + 1 around the centroid of the
// critical values, at an angle chosen so every value keeps clear of the
// straight leg to every other value. loop_order lists value indices
// counterclockwise by departure angle of value - base, measured from the
// outward ray base - centroid. loop_radius[i] is certified to isolate
// value i from all the others.
struct CriticalData {
  std::vector<CriticalCluster> values;
  MpComplex base;
  MpComplex centroid;
  std::vector<int> loop_order;
  std::vector<double> loop_radius;
  long prec = kPrecisionDefault;
};

// Throws PrecisionError when value clusters can neither be certifiably
// separated nor exactly merged (always the case for coinciding values of a
// numeric-only input), DomainError for degree < 1. The seed only perturbs
// the base-point angle; results for a fixed (input, prec, seed) are
// deterministic.
CriticalData critical_data(const Poly& p, long prec = kPrecisionDefault,
                           unsigned seed = 0);

// fiber is the start fiber over the base point (sorted by real then
// imaginary part; sheet i = fiber[i]). local_perms[i] is the monodromy of
// the counterclockwise loop around values[i]; composing them in loop_order
// and appending infinity_perm gives the identity. infinity_perm is also
// computed independently by tracking a clockwise circle of twice the base
// radius, and the two must agree.
struct MonodromyResult {
  std::vector<ComplexBall> fiber;
  std::vector<Perm> local_perms;
  Perm infinity_perm;
};

// Certified sheet tracking along spider loops: secant predictor, Newton
// corrector, and a Weierstrass disc certificate over each accepted step
// (all n discs pairwise disjoint, else the step is halved). Degree 1 yields
// empty local_perms and the identity on one point. Throws PrecisionError
// when a step size collapses or sheet matching is ambiguous.
MonodromyResult monodromy(const Poly& p, const CriticalData& cd);

// Cycle types of the local permutations in text form ("4^1 1^2"), identity
// entries dropped, sorted lexicographically descending.
using Passport = std::vector<std::string>;

Passport passport(const MonodromyResult& mr);
std::string passport_str(const Passport& pp);

}  // namespace kradical
