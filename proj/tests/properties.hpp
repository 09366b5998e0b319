// Randomized algebraic properties of the expression kernel.
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "laxlab/parser.hpp"
#include "laxlab/rulesets.hpp"

namespace laxlab::props {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Atom atom() {
    static const char* names[] = {"z", "x", "u", "v", "p", "q", "r", "nu"};
    const Context& c = *ctx_;
    int g = c.index(names[pick(0, 7)]);
    const Generator& gen = c.at(g);
    if (gen.kind == GeneratorKind::Independent) return make_atom(c, g);
    if (gen.invertible && pick(0, 3) == 0) return make_atom(c, g, 0, true);
    return make_atom(c, g, pick(0, 3) == 0 ? pick(1, 2) : 0);
  }

  Coefficient coefficient() {
    Gaussian g(Rational(pick(-4, 4), pick(1, 3)), Rational(pick(-2, 2), pick(1, 2)));
    if (g.is_zero()) g = Gaussian(1);
    Monomial m{pick(0, 4) == 0 ? pick(-1, 2) : 0, pick(0, 3) == 0 ? 1 : 0, pick(0, 3) == 0 ? 1 : 0};
    return Coefficient(m, g);
  }

  NCExpr expr(int max_terms = 3, int max_len = 3) {
    NCExpr e(ctx_, Coefficient());
    int n = pick(1, max_terms);
    for (int t = 0; t < n; ++t) {
      Word w;
      int len = pick(0, max_len);
      for (int k = 0; k < len; ++k) w.push_back(atom());
      e += NCExpr(ctx_, w, coefficient());
    }
    return e;
  }

  const ContextPtr& context() const { return ctx_; }

 private:
  std::mt19937 rng_;
  ContextPtr ctx_ = Context::standard();
};

inline PropertyResult check(const std::string& name, int cases, std::uint32_t seed,
                            const std::function<std::string(Gen&)>& body) {
  PropertyResult r{name, 0, 0, {}};
  Gen g(seed);
  for (int k = 0; k < cases; ++k) {
    std::string fail;
    try {
      fail = body(g);
    } catch (const std::exception& ex) {
      fail = std::string("exception: ") + ex.what();
    }
    ++r.cases;
    if (!fail.empty()) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = fail;
    }
  }
  return r;
}

inline PropertyResult parser_round_trip(int cases, std::uint32_t seed) {
  return check("parser round-trip", cases, seed, [](Gen& g) -> std::string {
    NCExpr e = g.expr(4, 4);
    std::string text = print(e);
    NCExpr back = parse(text, g.context());
    if (back == e && print(back) == text) return {};
    return text + " reparsed as " + print(back);
  });
}

inline PropertyResult leibniz(int cases, std::uint32_t seed) {
  return check("Leibniz rule", cases, seed, [](Gen& g) -> std::string {
    NCExpr a = g.expr(), b = g.expr();
    NCExpr lhs = d_dz(a * b), rhs = d_dz(a) * b + a * d_dz(b);
    if (lhs == rhs) return {};
    return "a = " + print(a) + ", b = " + print(b);
  });
}

inline const RuleSet& soundness_rules() {
  static const RuleSet rs = make_rules("quantum-zv+field-commute-uv+pq-inverse");
  return rs;
}

inline PropertyResult ideal_soundness(int cases, std::uint32_t seed) {
  return check("ideal soundness", cases, seed, [](Gen& g) -> std::string {
    const RuleSet& rs = soundness_rules();
    const Rule& rule = rs.rules()[static_cast<std::size_t>(g.pick(0, static_cast<int>(rs.rules().size()) - 1))];
    NCExpr lhs(g.context(), Word{rule.first, rule.second});
    NCExpr a = g.expr(2, 2), b = g.expr(2, 2);
    NCExpr member = normalize(a * (lhs - rule.replacement) * b, rs);
    if (!member.is_zero()) return "a (l - r) b leaves " + print(member);
    NCExpr c = g.expr(2, 3), d = g.expr(2, 3);
    if (normalize(c * d, rs) != normalize(normalize(c, rs) * normalize(d, rs), rs))
      return "congruence fails for " + print(c) + " and " + print(d);
    return {};
  });
}

inline PropertyResult commutator_antisymmetry(int cases, std::uint32_t seed) {
  return check("commutator antisymmetry", cases, seed, [](Gen& g) -> std::string {
    NCExpr a = g.expr(), b = g.expr();
    if (!(commutator(a, b) + commutator(b, a)).is_zero()) return "[a,b] + [b,a] for " + print(a) + ", " + print(b);
    if (!commutator(a, a).is_zero()) return "[a,a] for " + print(a);
    return {};
  });
}

inline PropertyResult scalarize_homomorphism(int cases, std::uint32_t seed) {
  return check("scalarize homomorphism", cases, seed, [](Gen& g) -> std::string {
    NCExpr a = g.expr(), b = g.expr();
    if (scalarize(a * b) != scalarize(scalarize(a) * scalarize(b))) return "product for " + print(a) + ", " + print(b);
    if (scalarize(a + b) != scalarize(a) + scalarize(b)) return "sum for " + print(a) + ", " + print(b);
    if (!scalarize(commutator(a, b)).is_zero()) return "commutator survives for " + print(a) + ", " + print(b);
    return {};
  });
}

inline std::vector<PropertyResult> run_all(int cases = 1000, std::uint32_t seed = 7411) {
  return {parser_round_trip(cases, seed), leibniz(cases, seed + 1), ideal_soundness(cases, seed + 2),
          commutator_antisymmetry(cases, seed + 3), scalarize_homomorphism(cases, seed + 4)};
}

}  // namespace laxlab::props
