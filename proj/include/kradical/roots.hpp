#pragma once

#include <vector>

#include "kradical/ball.hpp"
#include "kradical/poly.hpp"

namespace kradical {

// Certified root enclosure: the disc holds exactly `multiplicity` roots
// (counted with multiplicity) of the input polynomial.
struct RootCluster {
  ComplexBall z;
  int multiplicity = 1;
};

// All roots of p with certified enclosures and multiplicities. Exact inputs
// are split squarefree first so every multiplicity is exact; numeric-only
// inputs get their multiplicities from certified disc clustering. Throws
// PrecisionError (suggesting 2x) when enclosures cannot be separated.
std::vector<RootCluster> roots(const Poly& p, long prec);

// Plain Aberth-Ehrlich iteration on monic coefficients (ascending, the
// leading 1 included). No certification; used as the engine behind roots()
// and for seeding monodromy fibers. Deterministic for a given input.
std::vector<MpComplex> aberth(const std::vector<MpComplex>& monic,
                              long prec, int max_iter = 400);

// Weierstrass a-posteriori discs D(pts[i], n * |p(pts[i]) / prod_{j != i}
// (pts[i] - pts[j])|) for a degree-n p given as coefficient balls (made
// monic internally). Every connected component of their union contains
// exactly as many roots of p as it has discs.
std::vector<ComplexBall> weierstrass_discs(const std::vector<ComplexBall>& coeffs,
                                           const std::vector<MpComplex>& pts,
                                           long prec);

// Group discs into certifiably separated connected components; each cluster
// gets one enclosing ball and multiplicity = component size.
std::vector<RootCluster> cluster_discs(const std::vector<MpComplex>& pts,
                                       const std::vector<ComplexBall>& discs,
                                       long prec);

}  // namespace kradical
