#include "kradical/parse.hpp"

#include <cctype>

#include "kradical/qfield.hpp"

namespace kradical {

namespace {

constexpr int kMaxDegree = 1024;
constexpr unsigned long kMaxExponent = 4096;

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& text) : s(text) { skip(); }

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return eof() ? '\0' : s[i]; }
  size_t pos() const { return i; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++i;
    skip();
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(i, std::string("expected '") + c + "' " + what);
  }
  bool accept_word(const char* w) {
    size_t n = std::char_traits<char>::length(w);
    if (s.compare(i, n, w) != 0) return false;
    i += n;
    skip();
    return true;
  }

  mpz_class digits(const char* what) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError(start, std::string("expected ") + what);
    mpz_class v(s.substr(start, i - start), 10);
    skip();
    return v;
  }

  unsigned long uint_bounded(unsigned long cap, const char* what) {
    size_t start = i;
    mpz_class v = digits(what);
    if (!v.fits_ulong_p() || v.get_ui() > cap)
      throw ParseError(start, std::string(what) + " too large");
    return v.get_ui();
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(const std::string& text) : lx(text) {}

  Poly parse_expr() {
    Poly p = parse_term();
    for (;;) {
      if (lx.accept('+'))
        p = p + parse_term();
      else if (lx.accept('-'))
        p = p - parse_term();
      else
        return p;
    }
  }

  Poly parse_term() {
    Poly p = parse_factor();
    for (;;) {
      if (lx.accept('*')) {
        Poly q = parse_factor();
        if (p.deg() + q.deg() > kMaxDegree)
          throw ParseError(lx.pos(), "degree limit exceeded");
        p = p * q;
      } else if (lx.peek() == '/') {
        size_t at = lx.pos();
        lx.accept('/');
        Poly q = parse_factor();
        if (q.deg() > 0)
          throw ParseError(at, "division by a non-constant expression");
        if (q.is_zero()) throw ParseError(at, "division by zero");
        p = (Scalar::from_long(1) / q.coeff(0)) * p;
      } else {
        return p;
      }
    }
  }

  Poly parse_factor() {
    Poly p = parse_base();
    if (lx.peek() == '^') {
      size_t at = lx.pos();
      lx.accept('^');
      unsigned long e = lx.uint_bounded(kMaxExponent, "exponent");
      if (p.deg() * static_cast<long>(e) > kMaxDegree)
        throw ParseError(at, "degree limit exceeded");
      p = pow_poly(p, static_cast<int>(e));
    }
    return p;
  }

  Poly parse_base() {
    size_t at = lx.pos();
    if (lx.accept('z')) return Poly::power(1);
    if (lx.accept_word("sqrt")) {
      lx.expect('(', "after sqrt");
      unsigned long n =
          lx.uint_bounded(1000000000UL, "radicand");
      lx.expect(')', "after radicand");
      auto [s, m] = squarefree_split(n);
      if (n == 0) return Poly::zero();
      if (m == 1) return Poly::constant(Scalar::rational(mpq_class(s)));
      return Poly::constant(Scalar(
          QuadExt::root(static_cast<long>(m), mpq_class(s))));
    }
    if (lx.accept('(')) {
      Poly p = parse_expr();
      lx.expect(')', "to close group");
      return p;
    }
    bool neg = false;
    if (lx.peek() == '-') {
      lx.accept('-');
      if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
        throw ParseError(lx.pos(), "expected digits after '-'");
      neg = true;
    }
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      mpz_class num = lx.digits("integer");
      if (neg) num = -num;
      mpz_class den = 1;
      if (lx.peek() == '/') {
        size_t slash = lx.pos();
        // only a literal denominator continues the rational token; a
        // non-digit after '/' is handled by the term level
        size_t save = lx.i;
        lx.accept('/');
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
          den = lx.digits("denominator");
          if (den == 0) throw ParseError(slash, "zero denominator");
        } else {
          lx.i = save;
        }
      }
      mpq_class q(num, den);
      q.canonicalize();
      return Poly::constant(Scalar::rational(q));
    }
    throw ParseError(at, "expected 'z', a number, sqrt(...), or '('");
  }
};

}  // namespace

ParseResult parse_poly(const std::string& expr, long precision) {
  if (precision < 64 || precision > kPrecisionCeiling)
    throw DomainError("precision out of range");
  Parser ps(expr);
  ParseResult out;
  out.poly = ps.parse_expr();
  if (!ps.lx.eof())
    throw ParseError(ps.lx.pos(), "unexpected trailing input");
  if (out.poly.deg() < 1)
    throw ParseError(0, "polynomial must have degree >= 1");
  if (!out.poly.is_exact() || !poly_field_d(out.poly).has_value()) {
    out.numeric_only = true;
    out.warnings.push_back(
        "coefficients mix incompatible radicands; running numeric-only");
  }
  return out;
}

std::optional<long> poly_field_d(const Poly& p) {
  long d = 0;
  for (const auto& s : p.c) {
    if (!s.is_exact()) return std::nullopt;
    long sd = s.exact().d;
    if (sd == 0) continue;
    if (d == 0)
      d = sd;
    else if (d != sd)
      return std::nullopt;
  }
  return d;
}

}  // namespace kradical
