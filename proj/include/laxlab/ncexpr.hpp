// Elements of the free associative algebra over central coefficients.
//
// An NCExpr is a finite map Word -> Coefficient with no zero coefficients.
// Nothing here reorders atoms: noncommutativity is only ever resolved by an
// explicit RuleSet (see rules.hpp) or by scalarize().
#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxlab/coefficient.hpp"
#include "laxlab/context.hpp"

namespace laxlab {

class NCExpr {
 public:
  using Terms = std::map<Word, Coefficient>;

  NCExpr() : ctx_(Context::standard()) {}
  explicit NCExpr(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  NCExpr(ContextPtr ctx, Coefficient c) : ctx_(std::move(ctx)) { add_term({}, c); }
  NCExpr(ContextPtr ctx, Word w, Coefficient c = Coefficient(1)) : ctx_(std::move(ctx)) {
    add_term(std::move(w), c);
  }

  /// A single generator, possibly differentiated. For an independent
  /// variable, z' is 1 and higher derivatives vanish.
  static NCExpr generator(ContextPtr ctx, std::string_view name, int order = 0) {
    int g = ctx->index(name);
    if (ctx->at(g).kind == GeneratorKind::Independent && order > 0)
      return order == 1 ? NCExpr(ctx, Coefficient(1)) : NCExpr(ctx);
    Atom a = make_atom(*ctx, g, order);
    return NCExpr(ctx, Word{a});
  }
  static NCExpr generator(std::string_view name, int order = 0) {
    return generator(Context::standard(), name, order);
  }
  static NCExpr inverse(ContextPtr ctx, std::string_view name) {
    Atom a = make_atom(*ctx, ctx->index(name), 0, true);
    return NCExpr(ctx, Word{a});
  }

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a word (zero if absent).
  Coefficient coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  void add_term(Word w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCExpr operator-() const {
    NCExpr r(ctx_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  NCExpr& operator+=(const NCExpr& o) {
    check_context(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCExpr& operator-=(const NCExpr& o) {
    check_context(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
  friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }

  friend NCExpr operator*(const NCExpr& a, const NCExpr& b) {
    a.check_context(b);
    NCExpr r(a.ctx_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w;
        w.reserve(wa.size() + wb.size());
        w.insert(w.end(), wa.begin(), wa.end());
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(std::move(w), ca * cb);
      }
    }
    return r;
  }
  NCExpr& operator*=(const NCExpr& o) { return *this = *this * o; }

  friend NCExpr operator*(const Coefficient& c, const NCExpr& e) {
    NCExpr r(e.ctx_);
    if (c.is_zero()) return r;
    for (const auto& [w, ce] : e.terms_) r.add_term(w, c * ce);
    return r;
  }
  friend NCExpr operator*(const NCExpr& e, const Coefficient& c) { return c * e; }

  /// Structural equality. Meaningful as algebra equality only on normal forms.
  friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.terms_ == b.terms_; }

  /// Applies f to every coefficient, dropping zeros.
  NCExpr map_coefficients(const std::function<Coefficient(const Coefficient&)>& f) const {
    NCExpr r(ctx_);
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

  /// Algebra homomorphism defined atom by atom.
  NCExpr map_atoms(const std::function<NCExpr(const Atom&)>& f) const {
    NCExpr r(ctx_);
    for (const auto& [w, c] : terms_) {
      NCExpr t(ctx_, c);
      for (const Atom& a : w) {
        t = t * f(a);
        if (t.is_zero()) break;
      }
      r += t;
    }
    return r;
  }

  /// Highest derivative order of any field atom, or -1 for constants.
  int max_order() const {
    int m = -1;
    for (const auto& [w, c] : terms_)
      for (const Atom& a : w) m = std::max<int>(m, a.order);
    return m;
  }

  bool contains_generator(int gen) const {
    for (const auto& [w, c] : terms_)
      for (const Atom& a : w)
        if (a.gen == gen) return true;
    return false;
  }

  void check_context(const NCExpr& o) const {
    if (ctx_ != o.ctx_) throw Error("expressions from different generator contexts");
  }

 private:
  ContextPtr ctx_;
  Terms terms_;
};

inline NCExpr constant(const ContextPtr& ctx, const Coefficient& c) { return NCExpr(ctx, c); }

inline NCExpr commutator(const NCExpr& a, const NCExpr& b) { return a * b - b * a; }
inline NCExpr anticommutator(const NCExpr& a, const NCExpr& b) { return a * b + b * a; }

namespace detail {
/// d/dz of one atom.
inline NCExpr d_atom(const ContextPtr& ctx, const Atom& a) {
  const Generator& g = ctx->at(a.gen);
  if (g.kind == GeneratorKind::Independent) return NCExpr(ctx, Coefficient(1));
  if (!a.inverse) {
    Atom b = a;
    ++b.order;
    return NCExpr(ctx, Word{b});
  }
  // (p^-1)' = -p^-1 p' p^-1
  Atom dp{a.gen, 1, false};
  return NCExpr(ctx, Word{a, dp, a}, Coefficient(-1));
}
}  // namespace detail

/// Formal z-derivative: Leibniz over words, z' = 1, central parameters are constant.
inline NCExpr d_dz(const NCExpr& e) {
  const auto& ctx = e.context();
  NCExpr r(ctx);
  for (const auto& [w, c] : e.terms()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      NCExpr da = detail::d_atom(ctx, w[k]);
      for (const auto& [dw, dc] : da.terms()) {
        Word out;
        out.reserve(w.size() + dw.size());
        out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        out.insert(out.end(), dw.begin(), dw.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
        r.add_term(std::move(out), c * dc);
      }
    }
  }
  return r;
}

inline NCExpr d_dz(const NCExpr& e, int times) {
  NCExpr r = e;
  for (int k = 0; k < times; ++k) r = d_dz(r);
  return r;
}

inline NCExpr d_dlambda(const NCExpr& e) {
  return e.map_coefficients([](const Coefficient& c) { return c.d_dlambda(); });
}

/// Sets hbar to zero.
inline NCExpr classical_limit(const NCExpr& e) {
  return e.map_coefficients([](const Coefficient& c) { return c.classical_limit(); });
}

/// Coefficient of lam^power as an expression with lam removed.
inline NCExpr lambda_part(const NCExpr& e, int power) {
  return e.map_coefficients([power](const Coefficient& c) { return c.lambda_part(power); });
}

/// Distinct lam exponents present in e.
inline std::vector<int> lambda_powers(const NCExpr& e) {
  std::vector<int> out;
  for (const auto& [w, c] : e.terms())
    for (const auto& [m, g] : c.terms()) out.push_back(m.lam);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Image in the commutative quotient: atoms sorted, p^a p^-b cancelled.
inline NCExpr scalarize(const NCExpr& e) {
  const auto& ctx = e.context();
  NCExpr r(ctx);
  for (const auto& [w, c] : e.terms()) {
    // net exponent of each (generator, order); inverse atoms count -1
    std::map<std::pair<int, int>, int> powers;
    for (const Atom& a : w) {
      if (a.inverse && a.order != 0) throw Error("scalarize: differentiated inverse atom");
      powers[{a.gen, a.order}] += a.inverse ? -1 : 1;
    }
    Word out;
    for (const auto& [key, n] : powers) {
      if (n < 0 && !ctx->at(key.first).invertible)
        throw Error("scalarize: negative power of non-invertible generator '" + ctx->at(key.first).name + "'");
      Atom a{static_cast<std::uint16_t>(key.first), static_cast<std::uint16_t>(key.second), n < 0};
      for (int k = 0; k < std::abs(n); ++k) out.push_back(a);
    }
    r.add_term(std::move(out), c);
  }
  return r;
}

/// g with a == g*b for a Gaussian scalar g, if one exists (b nonzero).
inline std::optional<Gaussian> scalar_ratio(const NCExpr& a, const NCExpr& b) {
  if (b.is_zero() || a.size() != b.size()) return std::nullopt;
  const auto& [w, cb] = *b.terms().begin();
  Coefficient ca = a.coefficient(w);
  if (ca.is_zero()) return std::nullopt;
  Gaussian g = ca.terms().begin()->second / cb.terms().begin()->second;
  if (!(Coefficient(g) * b == a)) return std::nullopt;
  return g;
}

/// generator index -> replacement. Substituting for a field generator also
/// maps its k-th derivative atom to the k-th d/dz of the replacement.
using Substitution = std::map<int, NCExpr>;

inline NCExpr substitute(const NCExpr& e, const Substitution& s) {
  const auto& ctx = e.context();
  for (const auto& [g, rep] : s) e.check_context(rep);
  std::map<std::pair<int, int>, NCExpr> cache;
  auto image = [&](const Atom& a) -> NCExpr {
    auto it = s.find(a.gen);
    if (it == s.end()) return NCExpr(ctx, Word{a});
    const NCExpr& rep = it->second;
    if (a.inverse) {
      // Only c * (single atom) has an inverse inside this algebra.
      if (rep.size() == 1) {
        const auto& [w, c] = *rep.terms().begin();
        if (w.size() == 1 && c.is_scalar() && !w[0].inverse && w[0].order == 0 &&
            ctx->at(w[0].gen).invertible) {
          Atom inv = w[0];
          inv.inverse = true;
          return NCExpr(ctx, Word{inv}, Coefficient(Gaussian(1) / c.scalar_value()));
        }
        if (w.size() == 1 && c.is_scalar() && w[0].inverse) {
          Atom plain = w[0];
          plain.inverse = false;
          return NCExpr(ctx, Word{plain}, Coefficient(Gaussian(1) / c.scalar_value()));
        }
      }
      throw Error("substitute: '" + ctx->at(a.gen).name +
                  "' has inverse atoms but its replacement is not invertible in this algebra");
    }
    auto key = std::make_pair(static_cast<int>(a.gen), static_cast<int>(a.order));
    auto found = cache.find(key);
    if (found != cache.end()) return found->second;
    NCExpr d = d_dz(rep, a.order);
    cache.emplace(key, d);
    return d;
  };
  return e.map_atoms(image);
}

inline NCExpr substitute(const NCExpr& e, std::string_view name, const NCExpr& rep) {
  return substitute(e, Substitution{{e.context()->index(name), rep}});
}

/// Reflection z -> -z of the independent variable: z -> -z and the k-th
/// derivative of every field picks up (-1)^k. With flip_alpha, alpha -> -alpha.
inline NCExpr reflect(const NCExpr& e, bool flip_alpha) {
  const auto& ctx = e.context();
  NCExpr r = e.map_atoms([&](const Atom& a) {
    const Generator& g = ctx->at(a.gen);
    Coefficient sign(1);
    if (g.kind == GeneratorKind::Independent || (a.order % 2 == 1)) sign = Coefficient(-1);
    return NCExpr(ctx, Word{a}, sign);
  });
  if (flip_alpha) r = r.map_coefficients([](const Coefficient& c) { return c.negate_alpha(); });
  return r;
}

}  // namespace laxlab
