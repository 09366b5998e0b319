// Central coefficients: Gaussian rationals times Laurent monomials in lam and
// polynomial monomials in hbar and alpha.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "laxlab/rational.hpp"

namespace laxlab {

/// lam^lam * hbar^hbar * alpha^alpha. Only the lam exponent may be negative.
struct Monomial {
  int lam = 0;
  int hbar = 0;
  int alpha = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool is_one() const { return lam == 0 && hbar == 0 && alpha == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.lam + b.lam, a.hbar + b.hbar, a.alpha + b.alpha};
  }
};

class Coefficient {
 public:
  using Terms = std::map<Monomial, Gaussian>;

  Coefficient() = default;
  Coefficient(Gaussian g) { add_term({}, std::move(g)); }  // NOLINT(google-explicit-constructor)
  Coefficient(Rational r) : Coefficient(Gaussian(std::move(r))) {}  // NOLINT(google-explicit-constructor)
  Coefficient(long n) : Coefficient(Gaussian(n)) {}  // NOLINT(google-explicit-constructor)
  Coefficient(int n) : Coefficient(Gaussian(n)) {}   // NOLINT(google-explicit-constructor)
  Coefficient(Monomial m, Gaussian g) { add_term(m, std::move(g)); }

  static Coefficient i() { return Coefficient(Gaussian::i()); }
  static Coefficient lam(int power = 1) { return {Monomial{power, 0, 0}, Gaussian(1)}; }
  static Coefficient hbar(int power = 1) {
    if (power < 0) throw std::invalid_argument("negative hbar power");
    return {Monomial{0, power, 0}, Gaussian(1)};
  }
  static Coefficient alpha(int power = 1) {
    if (power < 0) throw std::invalid_argument("negative alpha power");
    return {Monomial{0, 0, power}, Gaussian(1)};
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for a pure Gaussian-rational constant (no lam, hbar, alpha).
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Gaussian scalar_value() const {
    if (terms_.empty()) return {};
    if (!is_scalar()) throw std::logic_error("coefficient is not a pure scalar");
    return terms_.begin()->second;
  }

  void add_term(const Monomial& m, const Gaussian& g) {
    if (m.hbar < 0 || m.alpha < 0) throw std::invalid_argument("negative hbar/alpha exponent");
    if (g.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, g);
    if (!inserted) {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coefficient operator-() const {
    Coefficient r;
    for (const auto& [m, g] : terms_) r.terms_.emplace(m, -g);
    return r;
  }
  Coefficient& operator+=(const Coefficient& o) {
    for (const auto& [m, g] : o.terms_) add_term(m, g);
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    for (const auto& [m, g] : o.terms_) add_term(m, -g);
    return *this;
  }
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient r;
    for (const auto& [ma, ga] : a.terms_)
      for (const auto& [mb, gb] : b.terms_) r.add_term(ma * mb, ga * gb);
    return r;
  }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient scaled(const Gaussian& g) const {
    Coefficient r;
    if (g.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * g);
    return r;
  }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
  friend auto operator<=>(const Coefficient& a, const Coefficient& b) { return a.terms_ <=> b.terms_; }

  /// lam^n -> n lam^(n-1).
  Coefficient d_dlambda() const {
    Coefficient r;
    for (const auto& [m, g] : terms_) {
      if (m.lam == 0) continue;
      r.add_term({m.lam - 1, m.hbar, m.alpha}, g * Gaussian(Rational(static_cast<long>(m.lam))));
    }
    return r;
  }

  /// Drops every term carrying a positive power of hbar.
  Coefficient classical_limit() const {
    Coefficient r;
    for (const auto& [m, g] : terms_)
      if (m.hbar == 0) r.terms_.emplace(m, g);
    return r;
  }

  /// Part multiplying lam^power, with lam stripped.
  Coefficient lambda_part(int power) const {
    Coefficient r;
    for (const auto& [m, g] : terms_)
      if (m.lam == power) r.terms_.emplace(Monomial{0, m.hbar, m.alpha}, g);
    return r;
  }

  /// alpha -> -alpha.
  Coefficient negate_alpha() const {
    Coefficient r;
    for (const auto& [m, g] : terms_) r.terms_.emplace(m, (m.alpha % 2) ? -g : g);
    return r;
  }

 private:
  Terms terms_;
};

namespace detail {
inline std::string monomial_str(const Monomial& m) {
  std::string s;
  auto factor = [&s](const char* name, int p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (p != 1) s += "^" + std::to_string(p);
  };
  factor("lam", m.lam);
  factor("hbar", m.hbar);
  factor("alpha", m.alpha);
  return s;
}
}  // namespace detail

}  // namespace laxlab
