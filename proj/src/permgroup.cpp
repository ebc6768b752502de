#include "kradical/permgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "kradical/errors.hpp"

namespace kradical {

PermGroup::PermGroup(int n, std::vector<Perm> generators)
    : n_(n), gens_(std::move(generators)) {
  if (n < 1) throw DomainError("group degree must be positive");
  for (const Perm& g : gens_) {
    if (g.n() != n || !valid_perm(g.im))
      throw DomainError("generator is not a permutation of the stated degree");
  }
}

void PermGroup::rebuild_levels() const {
  levels_.assign(n_, Level{});
  std::vector<int> first_moved(sgens_.size(), n_);
  for (size_t i = 0; i < sgens_.size(); ++i)
    for (int x = 0; x < n_; ++x)
      if (sgens_[i](x) != x) {
        first_moved[i] = x;
        break;
      }
  for (int k = 0; k < n_; ++k) {
    Level& lv = levels_[k];
    for (size_t i = 0; i < sgens_.size(); ++i)
      if (first_moved[i] >= k) lv.gens.push_back(static_cast<int>(i));
    lv.transversal.assign(n_, Perm{});
    lv.orbit.push_back(k);
    lv.transversal[k] = Perm::identity(n_);
    for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      int p = lv.orbit[qi];
      for (int gi : lv.gens) {
        int q = sgens_[gi](p);
        if (lv.transversal[q].im.empty()) {
          lv.transversal[q] = lv.transversal[p] * sgens_[gi];
          lv.orbit.push_back(q);
        }
      }
    }
  }
}

Perm PermGroup::sift(Perm g, int from) const {
  for (int k = from; k < n_; ++k) {
    int x = g(k);
    if (x == k) continue;
    const Perm& u = levels_[k].transversal[x];
    if (u.im.empty()) return g;
    g = g * u.inverse();
  }
  return g;
}

bool PermGroup::find_violation(Perm* out) const {
  for (int k = 0; k < n_; ++k) {
    const Level& lv = levels_[k];
    for (int p : lv.orbit) {
      for (int gi : lv.gens) {
        const Perm& s = sgens_[gi];
        Perm sg = lv.transversal[p] * s * lv.transversal[s(p)].inverse();
        Perm r = sift(std::move(sg), k + 1);
        if (!r.is_identity()) {
          *out = std::move(r);
          return true;
        }
      }
    }
  }
  return false;
}

void PermGroup::build_chain() const {
  if (chain_built_) return;
  sgens_.clear();
  for (const Perm& g : gens_)
    if (!g.is_identity()) sgens_.push_back(g);
  for (;;) {
    rebuild_levels();
    Perm r;
    if (!find_violation(&r)) break;
    sgens_.push_back(std::move(r));
  }
  order_ = 1;
  for (const Level& lv : levels_)
    order_ *= static_cast<long>(lv.orbit.size());
  chain_built_ = true;
}

const mpz_class& PermGroup::order() const {
  build_chain();
  return order_;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.n() != n_ || !valid_perm(g.im)) return false;
  build_chain();
  return sift(g, 0).is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= n_) throw DomainError("orbit point out of range");
  std::vector<char> seen(n_, 0);
  std::vector<int> orb{point};
  seen[point] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      int q = g(orb[i]);
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  return orb;
}

bool PermGroup::is_transitive() const {
  if (n_ < 2) throw DomainError("transitivity test needs degree >= 2");
  return orbit(0).size() == static_cast<size_t>(n_);
}

namespace {

int uf_find(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}

}  // namespace

bool PermGroup::is_primitive() const {
  if (n_ < 2) throw DomainError("primitivity test needs degree >= 2");
  if (!is_transitive()) return false;
  for (int p = 1; p < n_; ++p) {
    std::vector<int> up(n_);
    std::iota(up.begin(), up.end(), 0);
    up[p] = 0;
    std::vector<std::pair<int, int>> todo{{0, p}};
    while (!todo.empty()) {
      auto [a, b] = todo.back();
      todo.pop_back();
      for (const Perm& g : gens_) {
        int x = g(a), y = g(b);
        int rx = uf_find(up, x), ry = uf_find(up, y);
        if (rx != ry) {
          up[ry] = rx;
          todo.push_back({x, y});
        }
      }
    }
    int block = 0;
    int r0 = uf_find(up, 0);
    for (int i = 0; i < n_; ++i)
      if (uf_find(up, i) == r0) ++block;
    if (block < n_) return false;
  }
  return true;
}

const std::vector<Perm>& PermGroup::elements() const {
  if (elements_built_) return elements_;
  build_chain();
  if (order_ > kEnumerationBound) {
    std::ostringstream os;
    os << "group order " << order_ << " exceeds enumeration bound "
       << kEnumerationBound;
    throw DomainError(os.str());
  }
  std::vector<Perm> acc{Perm::identity(n_)};
  for (int k = n_ - 1; k >= 0; --k) {
    const Level& lv = levels_[k];
    if (lv.orbit.size() == 1) continue;
    std::vector<int> pts = lv.orbit;
    std::sort(pts.begin(), pts.end());
    std::vector<Perm> next;
    next.reserve(acc.size() * pts.size());
    for (int p : pts)
      for (const Perm& h : acc) next.push_back(h * lv.transversal[p]);
    acc = std::move(next);
  }
  elements_ = std::move(acc);
  elements_built_ = true;
  return elements_;
}

const std::vector<ConjClass>& PermGroup::conjugacy_classes() const {
  if (classes_built_) return classes_;
  const std::vector<Perm>& els = elements();
  std::unordered_map<std::string, int> index;
  index.reserve(els.size() * 2);
  for (size_t i = 0; i < els.size(); ++i)
    index.emplace(els[i].key(), static_cast<int>(i));
  std::vector<Perm> ginv;
  for (const Perm& g : gens_) ginv.push_back(g.inverse());
  std::vector<char> seen(els.size(), 0);
  for (size_t i = 0; i < els.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = 1;
    std::vector<int> stack{static_cast<int>(i)};
    long size = 0;
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      ++size;
      for (size_t t = 0; t < gens_.size(); ++t) {
        Perm c = ginv[t] * els[j] * gens_[t];
        auto it = index.find(c.key());
        if (it == index.end())
          throw std::logic_error("conjugate escaped enumeration");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
    classes_.push_back({els[i], size});
  }
  classes_built_ = true;
  return classes_;
}

std::vector<Perm> PermGroup::conjugacy_class_of(const Perm& g) const {
  if (!contains(g)) throw DomainError("element is not in the group");
  std::vector<Perm> ginv;
  for (const Perm& s : gens_) ginv.push_back(s.inverse());
  std::unordered_set<std::string> seen{g.key()};
  std::vector<Perm> out{g};
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t t = 0; t < gens_.size(); ++t) {
      Perm c = ginv[t] * out[i] * gens_[t];
      if (seen.insert(c.key()).second) {
        out.push_back(std::move(c));
        if (static_cast<long>(out.size()) > kEnumerationBound)
          throw DomainError("conjugacy class exceeds enumeration bound 1000000");
      }
    }
  }
  return out;
}

RigidityCount rigidity_count(const PermGroup& g, const Perm& c1, const Perm& c2,
                             const Perm& c3) {
  std::vector<Perm> cls1 = g.conjugacy_class_of(c1);
  std::vector<Perm> cls2 = g.conjugacy_class_of(c2);
  std::vector<Perm> cls3 = g.conjugacy_class_of(c3);
  std::unordered_set<std::string> in3;
  for (const Perm& s : cls3) in3.insert(s.key());

  std::vector<std::pair<Perm, Perm>> pairs;
  std::unordered_map<std::string, int> pair_index;
  for (const Perm& s1 : cls1)
    for (const Perm& s2 : cls2) {
      Perm t = (s1 * s2).inverse();
      if (in3.count(t.key())) {
        pair_index.emplace(s1.key() + s2.key(),
                           static_cast<int>(pairs.size()));
        pairs.push_back({s1, s2});
      }
    }

  std::vector<Perm> ginv;
  for (const Perm& s : g.generators()) ginv.push_back(s.inverse());
  std::vector<char> seen(pairs.size(), 0);
  long orbits = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    seen[i] = 1;
    std::vector<int> stack{static_cast<int>(i)};
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      for (size_t t = 0; t < g.generators().size(); ++t) {
        Perm a = ginv[t] * pairs[j].first * g.generators()[t];
        Perm b = ginv[t] * pairs[j].second * g.generators()[t];
        auto it = pair_index.find(a.key() + b.key());
        if (it == pair_index.end())
          throw std::logic_error("conjugated pair escaped the pair set");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
  }
  return {static_cast<long>(pairs.size()), orbits};
}

namespace {

// permutations on <= 16 points packed four bits per image
using P16 = uint64_t;

struct P16Hash {
  size_t operator()(P16 x) const {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};

using P16Set = std::unordered_set<P16, P16Hash>;

inline int p16_at(P16 a, int i) {
  return static_cast<int>((a >> (4 * i)) & 15);
}

P16 p16_id(int n) {
  P16 r = 0;
  for (int i = 0; i < n; ++i) r |= static_cast<P16>(i) << (4 * i);
  return r;
}

P16 p16_from(const Perm& g) {
  P16 r = 0;
  for (int i = 0; i < g.n(); ++i)
    r |= static_cast<P16>(static_cast<unsigned>(g(i))) << (4 * i);
  return r;
}

inline P16 p16_mul(P16 a, P16 b, int n) {
  P16 r = 0;
  for (int i = 0; i < n; ++i)
    r |= static_cast<P16>(p16_at(b, p16_at(a, i))) << (4 * i);
  return r;
}

P16 p16_inv(P16 a, int n) {
  P16 r = 0;
  for (int i = 0; i < n; ++i)
    r |= static_cast<P16>(i) << (4 * p16_at(a, i));
  return r;
}

P16 p16_pow(P16 a, long e, int n) {
  P16 r = p16_id(n);
  while (e > 0) {
    if (e & 1) r = p16_mul(r, a, n);
    a = p16_mul(a, a, n);
    e >>= 1;
  }
  return r;
}

long p16_order(P16 a, int n) {
  unsigned seen = 0;
  long l = 1;
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1) continue;
    long len = 0;
    for (int j = i; !(seen >> j & 1); j = p16_at(a, j)) {
      seen |= 1u << j;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

struct Subgroup {
  std::vector<P16> sorted;
  P16Set set;
  std::vector<P16> gens;
};

std::string subgroup_key(const std::vector<P16>& sorted) {
  return std::string(reinterpret_cast<const char*>(sorted.data()),
                     sorted.size() * sizeof(P16));
}

std::optional<Subgroup> close_subgroup(const std::vector<P16>& gens, int n,
                                       size_t cap) {
  Subgroup s;
  s.gens = gens;
  std::vector<P16> work{p16_id(n)};
  s.set.insert(work[0]);
  for (size_t i = 0; i < work.size(); ++i) {
    for (P16 g : gens) {
      P16 x = p16_mul(work[i], g, n);
      if (s.set.insert(x).second) {
        if (s.set.size() > cap) return std::nullopt;
        work.push_back(x);
      }
    }
  }
  std::sort(work.begin(), work.end());
  s.sorted = std::move(work);
  return s;
}

Subgroup sylow_subgroup(const std::vector<P16>& all, int n, long p,
                        long ppart) {
  P16 seed = 0;
  bool found = false;
  for (P16 a : all) {
    long o = p16_order(a, n);
    if (o % p == 0) {
      seed = p16_pow(a, o / p, n);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no element of prime order found");
  Subgroup sub = *close_subgroup({seed}, n, static_cast<size_t>(ppart));
  while (static_cast<long>(sub.set.size()) < ppart) {
    P16 next = 0;
    bool got = false;
    for (P16 a : all) {
      if (sub.set.count(a)) continue;
      P16 ai = p16_inv(a, n);
      bool normalizes = true;
      for (P16 h : sub.gens)
        if (!sub.set.count(p16_mul(p16_mul(ai, h, n), a, n))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      long o = p16_order(a, n);
      while (o % p == 0) o /= p;
      if (o != 1) continue;
      next = a;
      got = true;
      break;
    }
    if (!got) throw std::logic_error("normalizer growth stalled");
    std::vector<P16> gens2 = sub.gens;
    gens2.push_back(next);
    sub = *close_subgroup(gens2, n, static_cast<size_t>(ppart));
  }
  return sub;
}

}  // namespace

long min_faithful_index(const PermGroup& g) {
  if (g.order() > 100000)
    throw DomainError(
        "group order exceeds the subgroup-scan bound 100000; "
        "use the published index instead");
  if (g.degree() > 16)
    throw DomainError("min_faithful_index supports degree <= 16 only");
  long total = g.order().get_si();
  if (total == 1) throw DomainError("trivial group has no proper subgroup");
  int n = g.degree();

  std::vector<P16> all;
  all.reserve(g.elements().size());
  for (const Perm& e : g.elements()) all.push_back(p16_from(e));

  long best = 1;
  for (int p = 0; p < n; ++p) {
    long orb = static_cast<long>(g.orbit(p).size());
    if (orb > 1) best = std::max(best, total / orb);
  }

  std::vector<long> primes;
  {
    long m = total;
    for (long q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) primes.push_back(m);
  }

  size_t half = static_cast<size_t>(total / 2);
  for (long p : primes) {
    long ppart = 1;
    for (long m = total; m % p == 0; m /= p) ppart *= p;
    Subgroup syl = sylow_subgroup(all, n, p, ppart);
    if (ppart == total) {
      // p-group: its maximal subgroups have index exactly p
      best = std::max(best, total / p);
      continue;
    }
    best = std::max(best, static_cast<long>(syl.set.size()));

    std::unordered_set<std::string> visited{subgroup_key(syl.sorted)};
    std::deque<Subgroup> queue;
    queue.push_back(std::move(syl));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const Subgroup& k = queue[qi];
      P16Set marked = k.set;
      for (P16 rep : all) {
        if (marked.count(rep)) continue;
        // mark the double coset of rep under k
        std::vector<P16> coset{rep};
        marked.insert(rep);
        for (size_t di = 0; di < coset.size(); ++di)
          for (P16 kg : k.gens) {
            P16 a = p16_mul(kg, coset[di], n);
            if (marked.insert(a).second) coset.push_back(a);
            P16 b = p16_mul(coset[di], kg, n);
            if (marked.insert(b).second) coset.push_back(b);
          }
        std::vector<P16> gens2 = k.gens;
        gens2.push_back(rep);
        auto grown = close_subgroup(gens2, n, half);
        if (!grown) continue;
        best = std::max(best, static_cast<long>(grown->sorted.size()));
        std::string key = subgroup_key(grown->sorted);
        if (visited.insert(key).second) queue.push_back(std::move(*grown));
      }
    }
  }
  return total / best;
}

}  // namespace kradical
