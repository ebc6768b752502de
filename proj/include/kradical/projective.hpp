#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kradical/perm.hpp"
#include "kradical/permgroup.hpp"

namespace kradical {

// Finite field with q in {2,3,4,5,7,8,9}, as explicit element tables.
// Elements are encoded 0..q-1 by base-p digits of the polynomial basis:
// F4 = F2[t]/(t^2+t+1), F8 = F2[t]/(t^3+t+1), F9 = F3[i]/(i^2+1) with
// i encoded as 3 (so a+bi <-> a+3b). The tables are validated against the
// field axioms at construction.
class SmallField {
 public:
  explicit SmallField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int ext_degree() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // a != 0
  int frob(int a) const { return frob_[a]; }  // x -> x^p
  int from_int(long n) const;  // embeds an integer into the prime field
  int primitive_element() const { return primitive_; }

 private:
  int q_, p_, e_, primitive_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

enum class ProjAction { kPoints, kHyperplanes };
enum class GroupKind { kPSL, kPGL, kPGammaL };

// Frozen labeling of the points of P^{d-1}(F_q). For d = 2 the labels are
// [0, 1, ..., q-1, infinity], with label x the point [x : 1] and label q the
// point [1 : 0]. For d >= 3 a point's canonical vector scales its highest
// nonzero coordinate to 1, and labels run in increasing sum(v_i q^i) order;
// over F_2 that is the binary order of the nonzero vectors. Hyperplanes
// (d >= 3) carry the same labeling through their normal functionals.
class ProjSpace {
 public:
  ProjSpace(int d, int q);

  const SmallField& field() const { return f_; }
  int dim() const { return d_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<int>& point(int label) const { return points_[label]; }
  int label_of(const std::vector<int>& v) const;  // any nonzero vector

  // permutation of labels induced by the d x d matrix (row-major), applied
  // after coordinatewise Frobenius when flagged; hyperplane labels transform
  // through the inverse transpose
  Perm matrix_perm(const std::vector<int>& m, bool frobenius,
                   ProjAction action) const;

 private:
  std::vector<int> canonical(std::vector<int> v) const;
  int value(const std::vector<int>& v) const;

  int d_;
  SmallField f_;
  std::vector<std::vector<int>> points_;
  std::vector<int> label_by_value_;
};

// x -> (ax+b)/(cx+d) on the q+1 labels of P^1(F_q); arguments are field
// element codes
Perm mobius(int a, int b, int c, int d, int q);
// same, applied after x -> x^p when frobenius is set
Perm semilinear(int a, int b, int c, int d, bool frobenius, int q);

// Generators of PSL/PGL/PGammaL(d, q) on the frozen labeling: elementary
// transvections, a primitive-element dilation for PGL, and the Frobenius map
// for PGammaL. Supported (d,q): d=2 q in {5,7,8,9}; d=3 q in {2,3,4};
// d=4 q=2; d=5 q=2. Hyperplane action requires d >= 3.
PermGroup standard_group(GroupKind kind, int d, int q,
                         ProjAction action = ProjAction::kPoints);

std::string group_name(GroupKind kind, int d, int q);

// The labeled generator pairs printed for the four exceptional fixtures:
// "deg6" {1/x, 2x+2} over F5, "deg10" {conj(x), (i conj(x) - 1)/(conj(x)+1)}
// over F9, "deg8-first" {1/x, 2-3x} and "deg8-second" {1/x, 1-3x} over F7.
std::vector<Perm> fixture_generators(const std::string& fixture_id);

// Conjugator h with h^-1 * a_i * h = b_i for every i, when one exists;
// requires the first tuple to generate a transitive group.
std::optional<Perm> tuple_conjugator(const std::vector<Perm>& a,
                                     const std::vector<Perm>& b);

}  // namespace kradical
