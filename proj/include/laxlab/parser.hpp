// Expression text <-> NCExpr.
//
// Grammar (whitespace insignificant):
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+'|'-') unary | power
//   power  := factor ('^' int)* ('/' divisor)*
//   factor := number | 'i' | 'lam' | 'hbar' | 'alpha' | 'beta' | 'delta'
//           | generator '\''* | '[' expr ',' expr ']' ('_+' | '_-')?
//           | '(' expr ')'
//   divisor:= number | 'lam' ('^' int)? | '(' expr ')'   (central, invertible)
//
// Primes are z-derivatives. beta and delta are macros for i*hbar/4 and
// alpha - 1/2. g^-n is n copies of the inverse atom of an invertible g.
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "laxlab/ncexpr.hpp"

namespace laxlab {

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, ContextPtr ctx) : s_(text), ctx_(std::move(ctx)) {}

  NCExpr parse() {
    NCExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NCExpr expr() {
    NCExpr e = term();
    for (;;) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  NCExpr term() {
    NCExpr e = unary();
    while (accept('*')) e = e * unary();
    return e;
  }

  NCExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  NCExpr power() {
    std::size_t start = pos_;
    Factor f = factor();
    NCExpr e = f.value;
    while (accept('^')) {
      long n = integer();
      e = raise(f, e, n, start);
      f.single_atom = false;
    }
    while (accept('/')) e = e * divisor();
    return e;
  }

  struct Factor {
    NCExpr value;
    bool single_atom = false;  // a bare generator, eligible for negative powers
    bool central = false;      // a pure coefficient, eligible for negative powers
  };

  NCExpr raise(const Factor& f, const NCExpr& base, long n, std::size_t at) {
    if (n >= 0) {
      NCExpr r(ctx_, Coefficient(1));
      for (long k = 0; k < n; ++k) r = r * base;
      return r;
    }
    if (f.single_atom) {
      const auto& [w, c] = *base.terms().begin();
      if (w[0].order != 0) throw ParseError(at, "cannot invert a derivative atom");
      if (!ctx_->at(w[0].gen).invertible)
        throw ParseError(at, "generator '" + ctx_->at(w[0].gen).name + "' is not invertible");
      Atom inv = w[0];
      inv.inverse = true;
      NCExpr one(ctx_, Word{inv});
      NCExpr r(ctx_, Coefficient(1));
      for (long k = 0; k < -n; ++k) r = r * one;
      return r;
    }
    if (f.central) {
      NCExpr inv = central_inverse(base, at);
      NCExpr r(ctx_, Coefficient(1));
      for (long k = 0; k < -n; ++k) r = r * inv;
      return r;
    }
    throw ParseError(at, "negative power of a non-invertible factor");
  }

  /// Inverse of a central monomial c*lam^k.
  NCExpr central_inverse(const NCExpr& e, std::size_t at) {
    if (e.size() != 1 || !e.terms().begin()->first.empty()) throw ParseError(at, "division by a non-central factor");
    const Coefficient& c = e.terms().begin()->second;
    if (c.terms().size() != 1) throw ParseError(at, "division by a sum");
    const auto& [m, g] = *c.terms().begin();
    if (m.hbar != 0 || m.alpha != 0) throw ParseError(at, "division by hbar or alpha is not supported");
    return NCExpr(ctx_, Coefficient(Monomial{-m.lam, 0, 0}, Gaussian(1) / g));
  }

  NCExpr divisor() {
    std::size_t at = pos_;
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long n = integer();
      if (n == 0) throw ParseError(at, "division by zero");
      return NCExpr(ctx_, Coefficient(Rational(1, n)));
    }
    NCExpr d(ctx_);
    if (accept('(')) {
      d = expr();
      expect(')');
    } else {
      std::string id = ident();
      if (id != "lam") throw ParseError(at, "can only divide by a number, lam or a parenthesised central monomial");
      d = NCExpr(ctx_, Coefficient::lam());
    }
    while (accept('^')) {
      long n = integer();
      NCExpr base = d;
      d = NCExpr(ctx_, Coefficient(1));
      if (n >= 0) {
        for (long k = 0; k < n; ++k) d = d * base;
      } else {
        NCExpr inv = central_inverse(base, at);
        for (long k = 0; k < -n; ++k) d = d * inv;
      }
    }
    return central_inverse(d, at);
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  Factor factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long n = integer();
      return {NCExpr(ctx_, Coefficient(Rational(n))), false, true};
    }
    if (c == '(') {
      ++pos_;
      NCExpr e = expr();
      expect(')');
      bool central = e.size() == 1 && e.terms().begin()->first.empty();
      return {e, false, central};
    }
    if (c == '[') {
      ++pos_;
      NCExpr a = expr();
      expect(',');
      NCExpr b = expr();
      expect(']');
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        if (accept('+')) return {anticommutator(a, b)};
        if (accept('-')) return {commutator(a, b)};
        fail("expected '_+' or '_-'");
      }
      return {commutator(a, b)};
    }
    std::size_t at = pos_;
    std::string id = ident();
    if (id == "i") return {NCExpr(ctx_, Coefficient::i()), false, true};
    if (id == "lam") return {NCExpr(ctx_, Coefficient::lam()), false, true};
    if (id == "hbar") return {NCExpr(ctx_, Coefficient::hbar()), false, true};
    if (id == "alpha") return {NCExpr(ctx_, Coefficient::alpha()), false, true};
    if (id == "beta") {
      // i*hbar/4
      return {NCExpr(ctx_, Coefficient(Monomial{0, 1, 0}, Gaussian(Rational(0), Rational(1, 4)))), false, true};
    }
    if (id == "delta") return {NCExpr(ctx_, Coefficient::alpha() - Coefficient(Rational(1, 2))), false, false};
    auto g = ctx_->find(id);
    if (!g) throw ParseError(at, "undeclared generator '" + id + "'");
    int order = 0;
    while (pos_ < s_.size() && s_[pos_] == '\'') {
      ++pos_;
      ++order;
    }
    NCExpr e = NCExpr::generator(ctx_, id, order);
    bool single = ctx_->at(*g).kind == GeneratorKind::Field || order == 0;
    return {e, single && e.size() == 1 && !e.terms().begin()->first.empty(), false};
  }

  std::string_view s_;
  ContextPtr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline NCExpr parse(std::string_view text, ContextPtr ctx = Context::standard()) {
  return detail::Parser(text, std::move(ctx)).parse();
}

/// Parseable text. Terms come out in word order, one monomial at a time.
inline std::string print(const NCExpr& e) {
  if (e.is_zero()) return "0";
  const Context& ctx = *e.context();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    for (const auto& [m, g] : c.terms()) {
      Gaussian s = g;
      bool negative = s.re.sign() < 0 || (s.re.is_zero() && s.im.sign() < 0);
      if (negative) s = -s;
      std::string body;
      std::string mono = detail::monomial_str(m);
      std::string atoms = w.empty() ? std::string() : word_str(ctx, w);
      if (!s.is_one() || (mono.empty() && atoms.empty())) body = s.str();
      for (const std::string* part : {&mono, &atoms}) {
        if (part->empty()) continue;
        if (!body.empty()) body += "*";
        body += *part;
      }
      if (first) {
        out = negative ? "-" + body : body;
        first = false;
      } else {
        out += negative ? " - " : " + ";
        out += body;
      }
    }
  }
  return out;
}

}  // namespace laxlab
