// Exact rational and Gaussian-rational scalars.
//
// Rational wraps GMP's mpq_class but only admits integer and string
// construction, so nothing built on top of it can silently pick up a
// floating-point value.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace laxlab {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
  }
  Rational(double) = delete;
  Rational(float) = delete;

  /// Parses "n" or "n/d" (optional leading sign).
  static Rational from_string(std::string_view text) {
    Rational r;
    std::string s(text);
    if (r.v_.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Lossy conversion for the numeric side only.
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// a + b*i with a, b exact rationals.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long n) : re(n) {}                 // NOLINT(google-explicit-constructor)
  Gaussian(int n) : re(n) {}                  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }

  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational s = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("gaussian division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;
  friend auto operator<=>(const Gaussian& a, const Gaussian& b) = default;

  /// "3", "-1/2", "2*i", "-i", "(1/2 + 3*i)" -- parseable by the expression grammar.
  std::string str() const {
    auto imag = [](const Rational& v) {
      if (v.is_one()) return std::string("i");
      if ((-v).is_one()) return std::string("-i");
      return v.str() + "*i";
    };
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return imag(im);
    std::string s = "(" + re.str();
    if (im.sign() < 0) {
      s += " - " + imag(-im);
    } else {
      s += " + " + imag(im);
    }
    return s + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

}  // namespace laxlab
