#include "kradical/projective.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kradical/errors.hpp"

namespace kradical {

namespace {

struct FieldSpec {
  int p, e;
  std::vector<int> modulus;  // monic irreducible, ascending coefficients
};

FieldSpec field_spec(int q) {
  switch (q) {
    case 2: return {2, 1, {}};
    case 3: return {3, 1, {}};
    case 5: return {5, 1, {}};
    case 7: return {7, 1, {}};
    case 4: return {2, 2, {1, 1, 1}};
    case 8: return {2, 3, {1, 1, 0, 1}};
    case 9: return {3, 2, {1, 0, 1}};
    default:
      throw DomainError("unsupported field size " + std::to_string(q));
  }
}

std::vector<int> digits_of(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int code_of(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

SmallField::SmallField(int q) : q_(q) {
  FieldSpec spec = field_spec(q);
  p_ = spec.p;
  e_ = spec.e;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);
  for (int a = 0; a < q; ++a) {
    std::vector<int> da = digits_of(a, p_, e_);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = code_of(dn, p_);
    for (int b = 0; b < q; ++b) {
      std::vector<int> db = digits_of(b, p_, e_);
      std::vector<int> ds(e_);
      for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = code_of(ds, p_);
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int k = 2 * e_ - 2; k >= e_; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < e_; ++i)
          prod[k - e_ + i] = (prod[k - e_ + i] + c * (p_ - spec.modulus[i])) % p_;
      }
      prod.resize(e_);
      mul_[a * q + b] = code_of(prod, p_);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  for (int a = 0; a < q; ++a) {
    int r = a;
    for (int k = 1; k < p_; ++k) r = mul_[r * q + a];
    frob_[a] = r;
  }
  // construction-time self-check of the axioms the rest of the code leans on
  for (int a = 0; a < q; ++a) {
    if (a != 0 && (inv_[a] == 0 || mul_[a * q + inv_[a]] != 1))
      throw std::logic_error("field table lacks an inverse");
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] != add_[b * q + a] || mul_[a * q + b] != mul_[b * q + a])
        throw std::logic_error("field tables not commutative");
      if (frob_[add_[a * q + b]] != add_[frob_[a] * q + frob_[b]])
        throw std::logic_error("frobenius not additive");
      for (int c = 0; c < q; ++c) {
        if (mul_[a * q + add_[b * q + c]] !=
            add_[mul_[a * q + b] * q + mul_[a * q + c]])
          throw std::logic_error("field tables not distributive");
        if (mul_[mul_[a * q + b] * q + c] != mul_[a * q + mul_[b * q + c]])
          throw std::logic_error("field tables not associative");
      }
    }
  }
  primitive_ = 0;
  for (int a = 2; a < q && primitive_ == 0; ++a) {
    int r = a, ord = 1;
    while (r != 1) {
      r = mul_[r * q + a];
      ++ord;
    }
    if (ord == q - 1) primitive_ = a;
  }
  if (q == 2) primitive_ = 1;
  if (primitive_ == 0) throw std::logic_error("no primitive element found");
}

int SmallField::inv(int a) const {
  if (a == 0) throw DomainError("field inverse of zero");
  return inv_[a];
}

int SmallField::from_int(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<int>(r);
}

ProjSpace::ProjSpace(int d, int q) : d_(d), f_(q) {
  if (d < 2 || d > 5) throw DomainError("projective dimension out of range");
  int total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  label_by_value_.assign(total, -1);
  if (d == 2) {
    for (int x = 0; x < q; ++x) points_.push_back({x, 1});
    points_.push_back({1, 0});
  } else {
    for (int val = 1; val < total; ++val) {
      std::vector<int> v(d);
      int t = val;
      for (int i = 0; i < d; ++i) {
        v[i] = t % q;
        t /= q;
      }
      if (canonical(v) == v) points_.push_back(v);
    }
  }
  for (size_t i = 0; i < points_.size(); ++i)
    label_by_value_[value(points_[i])] = static_cast<int>(i);
}

std::vector<int> ProjSpace::canonical(std::vector<int> v) const {
  int lead = -1;
  for (int i = d_ - 1; i >= 0; --i)
    if (v[i] != 0) {
      lead = i;
      break;
    }
  if (lead < 0) throw DomainError("zero vector has no projective point");
  int s = f_.inv(v[lead]);
  for (int& x : v) x = f_.mul(x, s);
  return v;
}

int ProjSpace::value(const std::vector<int>& v) const {
  int val = 0;
  for (int i = d_ - 1; i >= 0; --i) val = val * f_.q() + v[i];
  return val;
}

int ProjSpace::label_of(const std::vector<int>& v) const {
  int lbl = label_by_value_[value(canonical(v))];
  if (lbl < 0) throw std::logic_error("unlabeled projective point");
  return lbl;
}

namespace {

std::vector<int> mat_inv(const SmallField& f, std::vector<int> m, int d) {
  std::vector<int> inv(d * d, 0);
  for (int i = 0; i < d; ++i) inv[i * d + i] = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (m[r * d + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("singular matrix");
    for (int j = 0; j < d; ++j) {
      std::swap(m[pivot * d + j], m[col * d + j]);
      std::swap(inv[pivot * d + j], inv[col * d + j]);
    }
    int s = f.inv(m[col * d + col]);
    for (int j = 0; j < d; ++j) {
      m[col * d + j] = f.mul(m[col * d + j], s);
      inv[col * d + j] = f.mul(inv[col * d + j], s);
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r * d + col] == 0) continue;
      int c = m[r * d + col];
      for (int j = 0; j < d; ++j) {
        m[r * d + j] = f.sub(m[r * d + j], f.mul(c, m[col * d + j]));
        inv[r * d + j] = f.sub(inv[r * d + j], f.mul(c, inv[col * d + j]));
      }
    }
  }
  return inv;
}

std::vector<int> mat_transpose(const std::vector<int>& m, int d) {
  std::vector<int> t(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[j * d + i] = m[i * d + j];
  return t;
}

}  // namespace

Perm ProjSpace::matrix_perm(const std::vector<int>& m, bool frobenius,
                            ProjAction action) const {
  if (static_cast<int>(m.size()) != d_ * d_)
    throw DomainError("matrix size does not match the space");
  std::vector<int> mm = m;
  if (action == ProjAction::kHyperplanes) {
    if (d_ < 3) throw DomainError("hyperplane action needs dimension >= 3");
    mm = mat_transpose(mat_inv(f_, mm, d_), d_);
  } else {
    mat_inv(f_, mm, d_);  // singularity check
  }
  std::vector<int> im(points_.size());
  for (size_t lbl = 0; lbl < points_.size(); ++lbl) {
    std::vector<int> v = points_[lbl];
    if (frobenius)
      for (int& x : v) x = f_.frob(x);
    std::vector<int> w(d_, 0);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        w[i] = f_.add(w[i], f_.mul(mm[i * d_ + j], v[j]));
    im[lbl] = label_of(w);
  }
  return Perm(im);
}

Perm mobius(int a, int b, int c, int d, int q) {
  ProjSpace space(2, q);
  return space.matrix_perm({a, b, c, d}, false, ProjAction::kPoints);
}

Perm semilinear(int a, int b, int c, int d, bool frobenius, int q) {
  ProjSpace space(2, q);
  return space.matrix_perm({a, b, c, d}, frobenius, ProjAction::kPoints);
}

namespace {

bool supported_dq(int d, int q) {
  if (d == 2) return q == 5 || q == 7 || q == 8 || q == 9;
  if (d == 3) return q == 2 || q == 3 || q == 4;
  if (d == 4 || d == 5) return q == 2;
  return false;
}

}  // namespace

PermGroup standard_group(GroupKind kind, int d, int q, ProjAction action) {
  if (!supported_dq(d, q))
    throw DomainError("unsupported projective group " +
                      group_name(kind, d, q));
  ProjSpace space(d, q);
  const SmallField& f = space.field();
  std::vector<Perm> gens;
  // elementary transvections I + lambda*E_ij over a basis of the field
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      // the basis element t^k is encoded p^k
      int lambda = 1;
      for (int k = 0; k < f.ext_degree(); ++k) {
        std::vector<int> m(d * d, 0);
        for (int t = 0; t < d; ++t) m[t * d + t] = 1;
        m[i * d + j] = lambda;
        gens.push_back(space.matrix_perm(m, false, action));
        lambda *= f.p();
      }
    }
  if (kind != GroupKind::kPSL) {
    std::vector<int> m(d * d, 0);
    for (int t = 0; t < d; ++t) m[t * d + t] = 1;
    m[0] = f.primitive_element();
    gens.push_back(space.matrix_perm(m, false, action));
  }
  if (kind == GroupKind::kPGammaL && f.ext_degree() > 1) {
    std::vector<int> m(d * d, 0);
    for (int t = 0; t < d; ++t) m[t * d + t] = 1;
    gens.push_back(space.matrix_perm(m, true, action));
  }
  return PermGroup(space.size(), gens);
}

std::string group_name(GroupKind kind, int d, int q) {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::kPSL: os << "PSL"; break;
    case GroupKind::kPGL: os << "PGL"; break;
    case GroupKind::kPGammaL: os << "PGammaL"; break;
  }
  os << '(' << d << ',' << q << ')';
  return os.str();
}

std::vector<Perm> fixture_generators(const std::string& fixture_id) {
  if (fixture_id == "deg6") {
    SmallField f(5);
    return {mobius(0, 1, 1, 0, 5),
            mobius(f.from_int(2), f.from_int(2), 0, 1, 5)};
  }
  if (fixture_id == "deg10") {
    // i is encoded 3 and -1 is 2 in F9
    return {semilinear(1, 0, 0, 1, true, 9), semilinear(3, 2, 1, 1, true, 9)};
  }
  if (fixture_id == "deg8-first") {
    SmallField f(7);
    return {mobius(0, 1, 1, 0, 7),
            mobius(f.from_int(-3), f.from_int(2), 0, 1, 7)};
  }
  if (fixture_id == "deg8-second") {
    SmallField f(7);
    return {mobius(0, 1, 1, 0, 7),
            mobius(f.from_int(-3), f.from_int(1), 0, 1, 7)};
  }
  throw DomainError("unknown fixture id " + fixture_id);
}

std::optional<Perm> tuple_conjugator(const std::vector<Perm>& a,
                                     const std::vector<Perm>& b) {
  if (a.empty() || a.size() != b.size()) return std::nullopt;
  int n = a[0].n();
  for (const Perm& g : b)
    if (g.n() != n) return std::nullopt;
  for (int c = 0; c < n; ++c) {
    std::vector<int> h(n, -1);
    h[0] = c;
    std::vector<int> work{0};
    bool ok = true;
    while (ok && !work.empty()) {
      int x = work.back();
      work.pop_back();
      for (size_t t = 0; t < a.size(); ++t) {
        int y = a[t](x);
        int hy = b[t](h[x]);
        if (h[y] < 0) {
          h[y] = hy;
          work.push_back(y);
        } else if (h[y] != hy) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    bool complete = true;
    for (int x : h)
      if (x < 0) complete = false;
    if (!complete || !valid_perm(h)) continue;
    Perm cand(h);
    bool match = true;
    for (size_t t = 0; t < a.size(); ++t)
      if (cand.inverse() * a[t] * cand != b[t]) {
        match = false;
        break;
      }
    if (match) return cand;
  }
  return std::nullopt;
}

}  // namespace kradical
