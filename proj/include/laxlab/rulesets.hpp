// Named rule sets for the commutation relations used by the pipelines.
//
//   quantum-zv        v z  -> z v + (i/2) hbar u
//   quantum-zdu       u' z -> z u' + (i/2) hbar u
//   quantum-zu        u^(k) z -> z u^(k) + (i/2) hbar u^(k)       k = 0..6
//   quantum-x-nu      nu^(k) x -> x nu^(k) + (i/2) hbar nu^(k), x z -> z x
//   field-commute-uv  v u  -> u v
//   field-commute-u-du u' u -> u u'
//   pq-inverse        g g^-1 -> 1, g^-1 g -> 1 for g = p, q, r
//   nh-weyl           r q -> q r + 2 hbar u, q u -> u q - hbar, r u -> u r - hbar
//
// Names combine with '+', e.g. "quantum-zv+field-commute-uv".
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "laxlab/rules.hpp"

namespace laxlab {

namespace detail {

inline Coefficient half_i_hbar() { return Coefficient(Monomial{0, 1, 0}, Gaussian(Rational(0), Rational(1, 2))); }

inline NCExpr word_expr(const ContextPtr& ctx, Word w, Coefficient c = Coefficient(1)) {
  return NCExpr(ctx, std::move(w), std::move(c));
}

inline constexpr int kMaxRuleOrder = 6;

inline void add_named(RuleSet& rs, std::string_view name) {
  const ContextPtr& ctx = rs.context();
  const Context& c = *ctx;
  auto atom = [&](std::string_view g, int order = 0, bool inv = false) {
    return make_atom(c, c.index(g), order, inv);
  };
  if (name == "quantum-zv") {
    Atom v = atom("v"), z = atom("z"), u = atom("u");
    rs.add(v, z, word_expr(ctx, {z, v}) + word_expr(ctx, {u}, half_i_hbar()));
  } else if (name == "quantum-zdu") {
    Atom du = atom("u", 1), z = atom("z"), u = atom("u");
    rs.add(du, z, word_expr(ctx, {z, du}) + word_expr(ctx, {u}, half_i_hbar()));
  } else if (name == "quantum-zu") {
    Atom z = atom("z");
    for (int k = 0; k <= kMaxRuleOrder; ++k) {
      Atom uk = atom("u", k);
      rs.add(uk, z, word_expr(ctx, {z, uk}) + word_expr(ctx, {uk}, half_i_hbar()));
    }
  } else if (name == "quantum-x-nu") {
    Atom x = atom("x"), z = atom("z");
    for (int k = 0; k <= kMaxRuleOrder; ++k) {
      Atom nk = atom("nu", k);
      rs.add(nk, x, word_expr(ctx, {x, nk}) + word_expr(ctx, {nk}, half_i_hbar()));
    }
    rs.add(x, z, word_expr(ctx, {z, x}));
  } else if (name == "field-commute-uv") {
    Atom u = atom("u"), v = atom("v");
    rs.add(v, u, word_expr(ctx, {u, v}));
  } else if (name == "field-commute-u-du") {
    Atom u = atom("u"), du = atom("u", 1);
    rs.add(du, u, word_expr(ctx, {u, du}));
  } else if (name == "pq-inverse") {
    for (const char* g : {"p", "q", "r"}) {
      Atom a = atom(g), ai = atom(g, 0, true);
      rs.add(a, ai, NCExpr(ctx, Coefficient(1)));
      rs.add(ai, a, NCExpr(ctx, Coefficient(1)));
    }
  } else if (name == "nh-weyl") {
    Atom u = atom("u"), q = atom("q"), r = atom("r");
    rs.add(r, q, word_expr(ctx, {q, r}) + word_expr(ctx, {u}, Coefficient::hbar().scaled(Gaussian(2))));
    rs.add(q, u, word_expr(ctx, {u, q}) - NCExpr(ctx, Coefficient::hbar()));
    rs.add(r, u, word_expr(ctx, {u, r}) - NCExpr(ctx, Coefficient::hbar()));
  } else if (name != "none" && !name.empty()) {
    throw Error("unknown rule set '" + std::string(name) + "'");
  }
}

}  // namespace detail

inline const std::vector<std::string>& rule_set_names() {
  static const std::vector<std::string> names = {
      "none",     "quantum-zv",  "quantum-zdu",        "quantum-zu", "quantum-x-nu", "field-commute-uv",
      "field-commute-u-du", "pq-inverse", "nh-weyl",
  };
  return names;
}

/// Builds a rule set from a '+'-separated list of names.
inline RuleSet make_rules(std::string_view spec, ContextPtr ctx = Context::standard(),
                          long budget = default_rule_budget()) {
  RuleSet rs(std::string(spec.empty() ? "none" : spec), ctx, budget);
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('+', start);
    if (end == std::string_view::npos) end = spec.size();
    detail::add_named(rs, spec.substr(start, end - start));
    start = end + 1;
  }
  return rs;
}

}  // namespace laxlab
