#pragma once

#include <string>
#include <vector>

namespace kradical {

// Permutation of {0..n-1}. Composition is left to right: (a*b) means apply
// a, then b, so (a*b)[x] = b[a[x]].
struct Perm {
  std::vector<int> im;

  Perm() = default;
  explicit Perm(std::vector<int> images) : im(std::move(images)) {}

  static Perm identity(int n) {
    Perm p;
    p.im.resize(n);
    for (int i = 0; i < n; ++i) p.im[i] = i;
    return p;
  }
  // cycles in the usual notation; unmentioned points are fixed
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(im.size()); }
  int operator()(int x) const { return im[x]; }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (im[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.im.resize(im.size());
    for (int i = 0; i < n(); ++i) r.im[im[i]] = i;
    return r;
  }

  // cycle lengths including fixed points, descending
  std::vector<int> cycle_lengths() const;
  // "a^i b^j" with bases descending, fixed points included (e.g. "4^1 1^2")
  std::string cycle_type() const;
  // one-line image array, e.g. "[2 0 1]"
  std::string one_line() const;
  // dense byte key for hashing
  std::string key() const { return std::string(im.begin(), im.end()); }
};

inline Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.im.resize(a.im.size());
  for (size_t i = 0; i < a.im.size(); ++i) r.im[i] = b.im[a.im[i]];
  return r;
}

inline bool operator==(const Perm& a, const Perm& b) { return a.im == b.im; }
inline bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

bool valid_perm(const std::vector<int>& images);

// conjugate of g by h: h^-1 * g * h
inline Perm conjugate(const Perm& g, const Perm& h) {
  return h.inverse() * g * h;
}

}  // namespace kradical
