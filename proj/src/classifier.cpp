#include "kradical/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kradical/decompose.hpp"
#include "kradical/errors.hpp"

namespace kradical {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool full_cycle(const Perm& p) { return p.cycle_lengths().size() == 1; }

// the monodromy pipeline always passes the infinity permutation as a
// generator, so the scan normally stops at the first loop; the product
// forms cover generator tuples whose full cycle only appears composed
bool has_full_cycle(const PermGroup& g) {
  const std::vector<Perm>& gs = g.generators();
  for (const Perm& p : gs)
    if (full_cycle(p)) return true;
  for (const Perm& a : gs)
    for (const Perm& b : gs)
      if (full_cycle(a * b)) return true;
  Perm prod = Perm::identity(g.degree());
  for (const Perm& p : gs) prod = prod * p;
  return full_cycle(prod);
}

struct TableRow {
  int degree;
  long order;
  GroupTag tag;
  GroupKind kind;
  int d, q;
  int k;
};

constexpr GroupKind kGL = GroupKind::kPGL;
constexpr GroupKind kGam = GroupKind::kPGammaL;

const TableRow kTable[] = {
    {6, 120, GroupTag::kProjective, kGL, 2, 5, 5},
    {7, 168, GroupTag::kProjective, kGL, 3, 2, 7},
    {8, 336, GroupTag::kProjective, kGL, 2, 7, 7},
    {9, 1512, GroupTag::kProjective, kGam, 2, 8, 9},
    {10, 1440, GroupTag::kProjective, kGam, 2, 9, 6},
    {11, 660, GroupTag::kPSL2_11, kGL, 2, 11, 11},
    {11, 7920, GroupTag::kM11, kGL, 0, 0, 11},
    {13, 5616, GroupTag::kProjective, kGL, 3, 3, 13},
    {15, 20160, GroupTag::kProjective, kGL, 4, 2, 8},
    {21, 120960, GroupTag::kProjective, kGam, 3, 4, 21},
    {23, 10200960, GroupTag::kM23, kGL, 0, 0, 23},
    {31, 9999360, GroupTag::kProjective, kGL, 5, 2, 31},
};

}  // namespace

std::string GroupId::name() const {
  std::ostringstream os;
  switch (tag) {
    case GroupTag::kSymmetric: os << "S_" << degree; break;
    case GroupTag::kAlternating: os << "A_" << degree; break;
    case GroupTag::kCyclicPrime: os << "C_" << degree; break;
    case GroupTag::kDihedralBetween: os << "D_" << degree; break;
    case GroupTag::kPSL2_11: os << "PSL(2,11)"; break;
    case GroupTag::kM11: os << "M11"; break;
    case GroupTag::kM23: os << "M23"; break;
    case GroupTag::kProjective: os << group_name(kind, d, q); break;
    case GroupTag::kUnrecognized: os << "unrecognized"; break;
  }
  return os.str();
}

bool GroupId::solvable() const {
  switch (tag) {
    case GroupTag::kSymmetric: return degree <= 4;
    case GroupTag::kCyclicPrime:
    case GroupTag::kDihedralBetween: return true;
    default: return false;
  }
}

std::string GroupId::action_note() const {
  if (tag == GroupTag::kProjective && kind == GroupKind::kPGL && d == 4 &&
      q == 2)
    return "points-or-hyperplanes";
  return "";
}

GroupId identify(const PermGroup& g, const Passport& pp) {
  int n = g.degree();
  if (n < 1) throw DomainError("identify needs a nonempty action");
  if (!g.is_transitive())
    throw DomainError("monodromy group is not transitive");
  if (!has_full_cycle(g))
    throw DomainError("monodromy group lacks a full cycle");

  GroupId id;
  id.degree = n;
  id.order = g.order();
  id.primitive = n >= 2 ? g.is_primitive() : true;
  id.passport = pp;
  if (!id.primitive) return id;

  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  if (id.order == fact) {
    id.tag = GroupTag::kSymmetric;
    return id;
  }
  if (n >= 5 && n % 2 == 1 && id.order * 2 == fact) {
    id.tag = GroupTag::kAlternating;
    return id;
  }
  if (is_prime(n)) {
    if (id.order == n) {
      id.tag = GroupTag::kCyclicPrime;
      return id;
    }
    if (id.order == 2 * n) {
      id.tag = GroupTag::kDihedralBetween;
      return id;
    }
  }
  for (const TableRow& row : kTable) {
    if (row.degree == n && id.order == row.order) {
      id.tag = row.tag;
      if (row.tag == GroupTag::kProjective) {
        id.kind = row.kind;
        id.d = row.d;
        id.q = row.q;
      }
      return id;
    }
  }
  return id;
}

int minimal_k(const GroupId& id) {
  switch (id.tag) {
    case GroupTag::kSymmetric: return id.degree <= 4 ? 1 : id.degree;
    case GroupTag::kAlternating: return id.degree;
    case GroupTag::kCyclicPrime:
    case GroupTag::kDihedralBetween: return 1;
    case GroupTag::kPSL2_11:
    case GroupTag::kM11: return 11;
    case GroupTag::kM23: return 23;
    case GroupTag::kProjective:
      for (const TableRow& row : kTable)
        if (row.tag == GroupTag::kProjective && row.kind == id.kind &&
            row.d == id.d && row.q == id.q)
          return row.k;
      throw DomainError("projective parameters off the table");
    case GroupTag::kUnrecognized: break;
  }
  throw DomainError("minimal k is undefined for an unrecognized group");
}

std::optional<PowerChebyshev> recognize_power_chebyshev(
    const Poly& p, const MonodromyResult& mr) {
  int n = p.deg();
  if (n < 2 || static_cast<int>(mr.fiber.size()) != n) return std::nullopt;
  std::vector<Perm> gens = mr.local_perms;
  gens.push_back(mr.infinity_perm);
  PermGroup g(n, std::move(gens));
  if (g.order() == n) return PowerChebyshev{PowerChebyshev::kPower, n};
  if (n >= 3 && g.order() == 2 * n)
    return PowerChebyshev{PowerChebyshev::kChebyshev, n};
  return std::nullopt;
}

KCertificate decide_k(const Poly& p, long prec, unsigned seed) {
  if (p.deg() < 1) throw DomainError("decide_k needs degree >= 1");
  if (prec < 64 || prec > kPrecisionCeiling)
    throw DomainError("precision out of range");

  DecompositionChain chain = decompose_full(p);
  KCertificate cert;
  for (const Poly& f : chain.factors) {
    FactorReport fr;
    fr.poly = f;
    fr.degree = f.deg();
    if (fr.degree <= 1) {
      fr.group.tag = GroupTag::kSymmetric;
      fr.group.degree = 1;
      fr.group.order = 1;
      fr.group.primitive = true;
      fr.k_group = 1;
      fr.k_factor = 1;
      cert.factors.push_back(std::move(fr));
      continue;
    }
    long bits = prec;
    for (;;) {
      try {
        CriticalData cd = critical_data(f, bits, seed);
        MonodromyResult mr = monodromy(f, cd);
        Passport pp = passport(mr);
        std::vector<Perm> gens = mr.local_perms;
        gens.push_back(mr.infinity_perm);
        PermGroup g(fr.degree, std::move(gens));
        fr.group = identify(g, pp);
        fr.prec_bits = bits;
        break;
      } catch (const PrecisionError& e) {
        if (bits >= kPrecisionCeiling) throw;
        bits = std::min(std::max(e.suggested_bits, 2 * bits),
                        kPrecisionCeiling);
      }
    }
    if (fr.group.tag == GroupTag::kUnrecognized) {
      std::ostringstream os;
      os << "monodromy group off the classification table: degree "
         << fr.group.degree << ", order " << fr.group.order.get_str()
         << ", primitive " << (fr.group.primitive ? "yes" : "no")
         << ", passport " << passport_str(fr.group.passport)
         << "; the classification is exhaustive, so this signals a"
         << " numerical failure";
      throw UnrecognizedGroupError(os.str());
    }
    fr.k_group = minimal_k(fr.group);
    fr.k_factor = std::min(fr.degree, fr.k_group);
    cert.factors.push_back(std::move(fr));
  }
  cert.overall_k = 1;
  for (const FactorReport& fr : cert.factors)
    cert.overall_k = std::max(cert.overall_k, fr.k_factor);
  return cert;
}

namespace {

std::string canon_name(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '_') continue;
    r.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return r;
}

std::optional<GroupInfo> family_info(const std::string& canon) {
  if (canon.size() < 2) return std::nullopt;
  char fam = canon[0];
  if (fam != 's' && fam != 'a' && fam != 'c' && fam != 'd')
    return std::nullopt;
  for (size_t i = 1; i < canon.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(canon[i])))
      return std::nullopt;
  int n = std::stoi(canon.substr(1));
  GroupInfo gi;
  gi.degree = n;
  if (fam == 's') {
    if (n < 1) return std::nullopt;
    gi.name = "S_" + std::to_string(n);
    mpz_fac_ui(gi.order.get_mpz_t(), static_cast<unsigned long>(n));
    gi.minimal_k = n <= 4 ? 1 : n;
    if (n <= 4) gi.note = "solvable";
    return gi;
  }
  if (fam == 'a') {
    if (n < 5 || n % 2 == 0) return std::nullopt;
    gi.name = "A_" + std::to_string(n);
    mpz_fac_ui(gi.order.get_mpz_t(), static_cast<unsigned long>(n));
    gi.order /= 2;
    gi.minimal_k = n;
    return gi;
  }
  if (!is_prime(n)) return std::nullopt;
  gi.name = (fam == 'c' ? "C_" : "D_") + std::to_string(n);
  gi.order = fam == 'c' ? n : 2 * n;
  gi.minimal_k = 1;
  gi.note = "solvable";
  return gi;
}

}  // namespace

std::optional<GroupInfo> group_info(const std::string& name) {
  std::string canon = canon_name(name);
  for (const TableRow& row : kTable) {
    GroupId id;
    id.tag = row.tag;
    id.degree = row.degree;
    id.kind = row.kind;
    id.d = row.d;
    id.q = row.q;
    if (canon_name(id.name()) != canon) continue;
    GroupInfo gi;
    gi.name = id.name();
    gi.degree = row.degree;
    gi.order = row.order;
    gi.minimal_k = row.k;
    if (row.k < row.degree)
      gi.note = "exceptional: minimal k below the degree";
    if (row.tag == GroupTag::kProjective && row.d == 4 && row.q == 2)
      gi.note += "; point and hyperplane actions have the same image in S_15";
    if (row.tag == GroupTag::kProjective && row.kind == kGam && row.d == 2 &&
        row.q == 9)
      gi.note += "; classification band 6 <= k <= 9, minimal k is 6";
    return gi;
  }
  return family_info(canon);
}

}  // namespace kradical
