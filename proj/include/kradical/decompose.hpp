#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kradical/poly.hpp"

namespace kradical {

// Composition chain factors[0] o factors[1] o ... o factors[m-1] = original.
// Factor degrees multiply to the original degree; every factor of degree
// >= 2 is indecomposable.
struct DecompositionChain {
  std::vector<Poly> factors;
};

// Witness p = g o h with 2 <= deg h < deg p, or nullopt when p is
// indecomposable. For each divisor r of deg p the unique monic inner
// candidate of degree r is built from the top coefficients (after the
// affine normalization to monic with zero subleading term) and the
// composition identity is tested exactly, or within ball width for
// numeric-only inputs.
std::optional<std::pair<Poly, Poly>> is_decomposable(const Poly& p);

DecompositionChain decompose_full(const Poly& p);

// Division a = q*b + r for a monic divisor b (leading coefficient an exact
// 1), valid for numeric coefficients as well.
std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& b);

}  // namespace kradical
