// Named Lax pairs, matrices and target equations.
//
// Keys without a suffix are transcribed as printed, suspected typos included.
// A "-derived" key holds the corrected form where a derivation gives
// something else. Targets are stored as lhs - rhs.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "laxlab/mat2.hpp"
#include "laxlab/rulesets.hpp"

namespace laxlab {

enum class EntryKind { Pair, Target, Matrix };

inline const char* kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Pair: return "pair";
    case EntryKind::Target: return "target";
    case EntryKind::Matrix: return "matrix";
  }
  return "?";
}

/// Slot name -> expression text.
using Params = std::map<std::string, std::string>;

struct LaxPairSpec {
  std::string key;
  std::string citation;
  Mat2 P;  // z-part
  Mat2 Q;  // spectral part
  std::string rules;
  std::vector<std::string> notes;
};

struct TargetEquation {
  std::string key;
  std::string citation;
  NCExpr lhs;
  std::string rules;
  std::vector<std::string> notes;
};

struct MatrixSpec {
  std::string key;
  std::string citation;
  Mat2 M;
};

struct CatalogEntry {
  std::string key;
  EntryKind kind;
  std::string citation;
  std::vector<std::string> slots;
  std::string note;
};

namespace detail {

inline NCExpr px(const std::string& s) { return parse(s); }

inline Mat2 mat(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return {px(a), px(b), px(c), px(d)};
}

/// sum of coefficient * basis matrix, coefficients as text.
inline Mat2 pauli_sum(const std::vector<std::pair<const char*, std::string>>& parts) {
  Mat2 m;
  for (const auto& [basis, coeff] : parts) m = m + px(coeff) * pauli(basis);
  return m;
}

/// alpha^k -> value^k in every coefficient.
inline NCExpr specialize_alpha(const NCExpr& e, const Coefficient& value) {
  return e.map_coefficients([&](const Coefficient& c) {
    Coefficient out;
    for (const auto& [m, g] : c.terms()) {
      Coefficient t(Monomial{m.lam, m.hbar, 0}, g);
      for (int k = 0; k < m.alpha; ++k) t *= value;
      out += t;
    }
    return out;
  });
}

inline Coefficient central_value(const std::string& slot, const std::string& text) {
  NCExpr e = px(text);
  if (e.is_zero()) return {};
  if (e.size() != 1 || !e.terms().begin()->first.empty())
    throw Error("parameter '" + slot + "' must be a central constant, got '" + text + "'");
  return e.terms().begin()->second;
}

struct Builder {
  CatalogEntry entry;
  std::function<LaxPairSpec(const Params&)> pair;
  std::function<TargetEquation(const Params&)> target;
  std::function<MatrixSpec(const Params&)> matrix;
};

inline void check_slots(const CatalogEntry& e, const Params& params) {
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const auto& s : e.slots) known = known || s == k;
    if (!known) throw Error("catalog entry '" + e.key + "' has no parameter slot '" + k + "'");
  }
}

/// alpha slot (a central constant) for any entry that has one.
inline NCExpr apply_alpha(const NCExpr& e, const Params& params) {
  auto it = params.find("alpha");
  return it == params.end() ? e : specialize_alpha(e, central_value("alpha", it->second));
}

inline Mat2 apply_alpha(const Mat2& m, const Params& params) {
  return m.map([&](const NCExpr& x) { return apply_alpha(x, params); });
}

/// Field binding v -> expression.
inline Mat2 apply_v(const Mat2& m, const Params& params) {
  auto it = params.find("v");
  if (it == params.end()) return m;
  return substitute(m, Substitution{{Context::standard()->index("v"), px(it->second)}});
}

inline NCExpr apply_v(const NCExpr& e, const Params& params) {
  auto it = params.find("v");
  if (it == params.end()) return e;
  return substitute(e, "v", px(it->second));
}

/// alpha = alpha1 - alpha0; both or neither.
inline Coefficient alpha_difference(const Params& params, Coefficient* alpha1) {
  bool has0 = params.count("alpha0"), has1 = params.count("alpha1");
  if (has0 != has1) throw Error(std::string("missing parameter '") + (has0 ? "alpha1" : "alpha0") + "'");
  if (!has0) {
    if (alpha1) *alpha1 = Coefficient::alpha();
    return Coefficient::alpha();
  }
  Coefficient a0 = central_value("alpha0", params.at("alpha0"));
  Coefficient a1 = central_value("alpha1", params.at("alpha1"));
  if (alpha1) *alpha1 = a1;
  return a1 - a0;
}

class Registry {
 public:
  static const Registry& instance() {
    static const Registry r;
    return r;
  }
  const std::vector<Builder>& builders() const { return builders_; }
  const Builder& find(const std::string& key) const {
    for (const auto& b : builders_)
      if (b.entry.key == key) return b;
    throw Error("unknown catalog key '" + key + "'");
  }

 private:
  Registry() {
    add_pairs();
    add_matrices();
    add_targets();
  }

  void pair(std::string key, std::string citation, std::vector<std::string> slots, std::string note,
            std::function<LaxPairSpec(const Params&)> f) {
    Builder b{{std::move(key), EntryKind::Pair, std::move(citation), std::move(slots), std::move(note)}, {}, {}, {}};
    b.pair = std::move(f);
    builders_.push_back(std::move(b));
  }

  void matrix(std::string key, std::string citation, std::string note, std::function<Mat2()> f) {
    Builder b{{key, EntryKind::Matrix, citation, {}, std::move(note)}, {}, {}, {}};
    b.matrix = [key, citation, f](const Params&) { return MatrixSpec{key, citation, f()}; };
    builders_.push_back(std::move(b));
  }

  void target(std::string key, std::string citation, std::string text, std::string rules = "none",
              std::string note = {}, std::vector<std::string> slots = {"alpha"}) {
    std::string k = key, c = citation, n = note, r = rules;
    target_fn(std::move(key), std::move(citation), std::move(slots), std::move(note),
              [k, c, text, r, n](const Params& p) {
                TargetEquation t{k, c, apply_alpha(apply_v(px(text), p), p), r, {}};
                if (!n.empty()) t.notes.push_back(n);
                return t;
              });
  }

  void target_fn(std::string key, std::string citation, std::vector<std::string> slots, std::string note,
                 std::function<TargetEquation(const Params&)> f) {
    Builder b{{std::move(key), EntryKind::Target, std::move(citation), std::move(slots), std::move(note)}, {}, {}, {}};
    b.target = std::move(f);
    builders_.push_back(std::move(b));
  }

  void add_pairs() {
    pair("fn-pair", "Flaschka-Newell Lax pair U (z-part), V (lam-part)", {"alpha"},
         "the v in V is read as u'", [](const Params& p) {
           Mat2 U = pauli_sum({{"sigma3", "-i*lam"}, {"sigma1", "u"}});
           Mat2 V = pauli_sum({{"sigma3", "-i*(4*lam^2 + z + 2*u^2)"},
                               {"sigma1", "4*lam*u - alpha/lam"},
                               {"sigma2", "-2*u'"}});
           return LaxPairSpec{"fn-pair", "Flaschka-Newell Lax pair", apply_alpha(U, p), apply_alpha(V, p), "none",
                              {"the v in V is read as u'"}};
         });
    pair("symform-pair", "gauge-equivalent Flaschka-Newell pair A (spectral eta), B (z-part)", {"alpha"},
         "eta occupies the lam slot; the sigma entry of A is read as r", [](const Params& p) {
           Mat2 B = mat("u", "i*lam", "i", "-u");
           Mat2 A = mat("2*u + (alpha + 1/2)/2/lam", "2*i*lam + i*q", "2*i + i*r/lam", "-2*u - (alpha + 1/2)/2/lam");
           return LaxPairSpec{"symform-pair", "gauge-equivalent Flaschka-Newell pair A, B", apply_alpha(B, p),
                              apply_alpha(A, p), "none",
                              {"eta occupies the lam slot; the sigma entry of A is read as r"}};
         });
    auto qpii = [](const char* key, const char* u2, std::string note) {
      return [key, u2, note](const Params& p) {
        Mat2 P = pauli_sum({{"sigma1", "u"}, {"sigma3", "-i*lam"}, {"I", "4*v"}});
        Mat2 Q = pauli_sum({{"sigma3", std::string("-(4*i*lam^2 + i*z + ") + u2 + ")"},
                            {"sigma1", "4*lam*u - alpha/lam"},
                            {"sigma2", "-(2*u' - i*hbar)"}});
        LaxPairSpec s{key, "quantum PII Lax pair P, Q", apply_alpha(apply_v(P, p), p), apply_alpha(apply_v(Q, p), p),
                      "none", {}};
        if (!note.empty()) s.notes.push_back(note);
        return s;
      };
    };
    pair("qpii-pair", "quantum PII Lax pair P, Q (as printed)", {"alpha", "v"},
         "sigma3 part of Q carries 2u^2 without a factor i", qpii("qpii-pair", "2*u^2", "as printed: 2u^2 in the sigma3 part of Q"));
    pair("qpii-pair-derived", "quantum PII Lax pair with 2iu^2 in the sigma3 part of Q", {"alpha", "v"},
         "the printed Q_z requires 2iu^2", qpii("qpii-pair-derived", "2*i*u^2", "2iu^2, the form its printed Q_z implies"));
    pair("gauge-pair", "gauge-equivalent quantum pair P~, Q~ (as printed)", {"alpha"}, "p, q are independent fields",
         [](const Params& p) {
           Mat2 P = pauli_sum({{"sigma3", "u"}, {"sigma2", "-i*lam"}, {"I", "4*u"}});
           Mat2 Q = pauli_sum({{"sigma3", "4*lam*u - alpha/lam"}, {"sigma2", "-(4*i*lam^2 + hbar/4)"},
                               {"I+", "2*p"}, {"I-", "-2*q"}});
           return LaxPairSpec{"gauge-pair", "gauge-equivalent quantum pair (as printed)", apply_alpha(P, p),
                              apply_alpha(Q, p), "none", {"p, q are independent fields"}};
         });
    pair("gauge-pair-derived", "G P G^-1, G Q G^-1 of the corrected quantum pair, in p, q", {"alpha", "v"},
         "2p = 2u^2 + 2u' + z and 2q = 2u^2 - 2u' + z", [](const Params& p) {
           Mat2 P = pauli_sum({{"sigma3", "u"}, {"sigma2", "i*lam"}, {"I", "4*v"}});
           Mat2 Q = pauli_sum({{"sigma3", "4*lam*u - alpha/lam"}, {"sigma2", "4*i*lam^2"}, {"sigma1", "-i*hbar"},
                               {"I+", "2*p"}, {"I-", "2*q"}});
           return LaxPairSpec{"gauge-pair-derived", "gauge-equivalent quantum pair (derived)",
                              apply_alpha(apply_v(P, p), p), apply_alpha(apply_v(Q, p), p), "none",
                              {"p = u^2 + u' + z/2 and q = u^2 - u' + z/2 are independent fields here"}};
         });
  }

  void add_matrices() {
    matrix("gauge-g", "gauge factor G with its 1/sqrt(2) dropped", "conjugation is scale invariant",
           [] { return mat("-i", "-i", "-1", "1"); });
    matrix("gauge-g-inv", "inverse of the gauge factor G (1/sqrt(2) dropped)", "",
           [] { return mat("i/2", "-1/2", "i/2", "1/2"); });
    matrix("qpii-qz", "Q_z of the quantum pair", "", [] {
      return pauli_sum({{"sigma3", "-i*(2*u'*u + 2*u*u' + 1)"}, {"sigma2", "-2*u''"}, {"sigma1", "4*lam*u'"}});
    });
    matrix("qpii-plam", "P_lam of the quantum pair", "", [] { return pauli_sum({{"sigma3", "-i"}}); });
    matrix("qpii-qz-minus-plam", "Q_z - P_lam of the quantum pair", "", [] {
      return mat("-2*i*[u,u']_+", "4*lam*u' + 2*i*u''", "4*lam*u' - 2*i*u''", "2*i*[u,u']_+");
    });
    matrix("qpii-bracket", "[P,Q] of the quantum pair with delta+ and delta- (as printed)",
           "delta- carries hbar on its [v,u'] term", [] {
             std::string dp = "4*lam*u' + 4*i*u^3 + i*[z,u]_+ + 2*i*alpha + 2*i*[v,u'] - 2*i*lam*hbar";
             std::string dm = "4*lam*u' - 4*i*u^3 - i*[z,u]_+ - 2*i*alpha - 2*i*hbar*[v,u'] - 2*i*lam*hbar";
             return mat("i*[z,v] - 2*i*[u,u']_+ - 1/2*hbar*u", dp, dm, "-i*[z,v] + 2*i*[u,u']_+ + 1/2*hbar*u");
           });
    matrix("qpii-bracket-derived", "[P,Q] of the quantum pair, recomputed by hand", "", [] {
      std::string dp =
          "4*lam*u' + 4*i*u^3 + i*[z,u]_+ + 2*i*alpha + 8*i*[v,u'] - 2*i*lam*hbar - 16*lam*[u,v]";
      std::string dm =
          "4*lam*u' - 4*i*u^3 - i*[z,u]_+ - 2*i*alpha - 8*i*[v,u'] - 2*i*lam*hbar - 16*lam*[u,v]";
      return mat("4*i*[z,v] - 2*i*[u,u']_+ - 2*hbar*u + 8*i*[u^2,v]", dp, dm,
                 "-4*i*[z,v] + 2*i*[u,u']_+ + 2*hbar*u - 8*i*[u^2,v]");
    });
  }

  void add_targets() {
    // Classical and comparison PII.
    target("classical-pii-target", "classical PII", "u'' - 2*u^3 + z*u - alpha");
    target("classical-pii-target-derived", "classical PII as the Flaschka-Newell pair yields it",
           "u'' - 2*u^3 - z*u - alpha", "none", "agrees with the printed form after z -> -z");
    target("ng-qpii-target", "matrix PII of the comparison work", "u'' - 2*u^3 + z*u - alpha");
    target_fn("mpii-target", "matrix PII, alpha = alpha1 - alpha0", {"alpha0", "alpha1"},
              "alpha0, alpha1 default to alpha0 = 0, alpha1 = alpha", [](const Params& p) {
                Coefficient a = alpha_difference(p, nullptr);
                NCExpr e = px("u'' - 2*u^3 + z*u") - NCExpr(Context::standard(), a);
                return TargetEquation{"mpii-target", "matrix PII", e, "none", {}};
              });

    // Symmetric forms and P34.
    target("symform-q-target", "PII symmetric form, q line", "q' - 2*q*u + alpha - 1/2");
    target("symform-r-target", "PII symmetric form, r line", "r' + 2*r*u - alpha - 1/2");
    target("symform-u-target", "PII symmetric form, u line", "u' - 1/2*(q - r)");
    target("classical-p34-r-target", "classical P34 for r", "r'' - r'*r^-1*r' - 2*r^2 + z*r + 1/2*(alpha + 1/2)^2*r^-1",
           "pq-inverse");
    target("classical-p34-target", "classical P34 for q", "q'' - q'*q^-1*q' - 2*q^2 + z*q + 1/2*(alpha - 1/2)^2*q^-1",
           "pq-inverse");
    target("classical-p34-r-target-derived", "classical P34 for r, eliminated from the symmetric form",
           "r'' - 1/2*r'*r^-1*r' - 2*r^2 + z*r + 1/2*(alpha + 1/2)^2*r^-1", "pq-inverse",
           "coefficient 1/2 on r'^2/r");
    target("classical-p34-target-derived", "classical P34 for q, eliminated from the symmetric form",
           "q'' - 1/2*q'*q^-1*q' - 2*q^2 + z*q + 1/2*(alpha - 1/2)^2*q^-1", "pq-inverse",
           "coefficient 1/2 on q'^2/q");
    target("nh-sym-q-target", "non-abelian PII symmetric form, q line", "q' - u*q - q*u + alpha - 1/2");
    target("nh-sym-r-target", "non-abelian PII symmetric form, r line", "r' + r*u + u*r - alpha - 1/2");
    target("nh-sym-u-target", "non-abelian PII symmetric form, u line", "u' - 1/2*(q - r)");
    target_fn("nh-qp34-target", "quantum P34 of the comparison work, alpha1 defaults to alpha", {"alpha0", "alpha1"},
              "", [](const Params& p) {
                Coefficient a1;
                alpha_difference(p, &a1);
                auto ctx = Context::standard();
                NCExpr e = px("q'' - 1/2*q'*q^-1*q' + 4*q^2 - 2*z*q") +
                           NCExpr(ctx, (a1 * a1 - Coefficient::hbar(2)) * Coefficient(Rational(1, 2))) * px("q^-1");
                return TargetEquation{"nh-qp34-target", "quantum P34 of the comparison work", e, "pq-inverse", {}};
              });
    target("nh-qcr-rq-target", "Weyl-type relation [r,q] = 2 hbar u", "[r,q] - 2*hbar*u", "none", {}, {});
    target("nh-qcr-uq-target", "Weyl-type relation [u,q] = hbar", "[u,q] - hbar", "none", {}, {});
    target("nh-qcr-ur-target", "Weyl-type relation [u,r] = hbar", "[u,r] - hbar", "none", {}, {});
    target("nc-pii-target", "noncommutative PII with an anticommutator", "u'' - 2*u^3 + 2*[z,u]_+ - alpha", "none",
           "its constant 4(beta + 1/2) is a free parameter of the cited work, carried here by alpha");

    // Derivative matrix PII.
    target("dmpii-target", "derivative matrix PII from the matrix mKdV reduction",
           "u''' - 3*u''*u + 3*u*u'' - 6*u*u'*u + 1/3*u + 1/3*z*u'", "none", {}, {});
    target("dpii-scalar-target", "scalar derivative PII, z-derivative of classical PII",
           "nu''' - 6*nu^2*nu' + nu + x*nu'", "none", {}, {});

    // Quantum PII system.
    target("qpii-target", "quantum PII", "u'' - 2*u^3 + 1/2*[z,u]_+ - alpha");
    target("qpii-target-derived", "quantum PII as the corrected pair yields it", "u'' - 2*u^3 - 1/2*[z,u]_+ - alpha",
           "none", "anticommutator sign opposite to the printed form");
    target("qcr-target", "quantum commutation relation [z,v] = -(i/2) hbar u", "[z,v] + i/2*hbar*u", "none", {}, {});
    target_fn("qcr-dz-target", "d/dz(zu - uz) = -(i/2) hbar u", {}, "", [](const Params&) {
      return TargetEquation{"qcr-dz-target", "d/dz(zu - uz) = -(i/2) hbar u", d_dz(px("z*u - u*z")) + px("i/2*hbar*u"),
                            "none", {}};
    });
    target("qcr-u-target", "zu - uz = -(i/2) hbar u", "[z,u] + i/2*hbar*u", "none", {}, {});
    target("qmpii-target-asprinted", "quantum matrix PII with 4[v,u']", "u'' - 2*u^3 + 1/2*[z,u]_+ - 4*[v,u'] - alpha");
    target("qmpii-target-l7", "quantum matrix PII after adding the two off-diagonal lines",
           "u'' - 2*u^3 + 1/2*[z,u]_+ - [v,u'] - alpha");
    target("qmpii-target-derived", "quantum matrix PII as the corrected pair yields it",
           "u'' - 2*u^3 - 1/2*[z,u]_+ - 4*[v,u'] - alpha", "field-commute-uv");
    target("qpii-l5-target", "upper off-diagonal line with -lam hbar",
           "u'' - 2*u^3 + 1/2*[z,u]_+ - alpha - [v,u'] + lam*hbar");
    target("qpii-l6-target", "lower off-diagonal line with +lam hbar",
           "u'' - 2*u^3 + 1/2*[z,u]_+ - alpha - [v,u'] - lam*hbar");
    target("qpii-l5-target-derived", "upper off-diagonal line, recomputed",
           "u'' - 2*u^3 - 1/2*[z,u]_+ - alpha - 4*[v,u'] + lam*hbar", "field-commute-uv");
    target("qpii-l6-target-derived", "lower off-diagonal line, recomputed",
           "u'' - 2*u^3 - 1/2*[z,u]_+ - alpha - 4*[v,u'] - lam*hbar", "field-commute-uv");

    // v = u: third-order chain.
    target_fn("mqpii-step1-target", "z-derivative of quantum matrix PII with v = u, first form", {}, "",
              [](const Params&) {
                NCExpr e = px("u'''") - d_dz(px("2*u^3")) + Coefficient(Rational(1, 2)) * d_dz(px("2*u*z - i/2*hbar*u")) -
                           Coefficient(4) * d_dz(px("[u,u']"));
                return TargetEquation{"mqpii-step1-target", "z-derivative of quantum matrix PII, first form", e,
                                      "quantum-zu", {}};
              });
    target("mqpii-step2-target", "z-derivative of quantum matrix PII with v = u, expanded",
           "u''' - 2*u^2*u' - 2*u'*u^2 - 2*u*u'*u + 1/2*(2*u + 2*z*u' - i/2*hbar*u') - 4*[u,u'']", "quantum-zu", {},
           {});
    target("mqpii-u-target", "z-derivative of quantum matrix PII with v = u, shifted coefficient",
           "u''' - 2*u^2*u' - 2*u'*u^2 - 2*u*u'*u + u + (z - i/4*hbar)*u' - 4*[u,u'']", "quantum-zu", {}, {});
    target("mqpii-target", "quantum derivative matrix PII in nu(x)",
           "nu''' - 2*nu^2*nu' - 2*nu'*nu^2 - 2*nu*nu'*nu + nu + x*nu' - 4*[nu,nu'']", "quantum-x-nu", {}, {});
    target("mqpii-target-reordered", "quantum derivative matrix PII in nu(x) with nu' x",
           "nu''' - 2*nu^2*nu' - 2*nu'*nu^2 - 2*nu*nu'*nu + nu + nu'*x - 4*[nu,nu'']", "quantum-x-nu",
           "x written to the right of nu'", {});
    target("mqpii-target-derived", "quantum derivative matrix PII in nu(x) from the corrected pair",
           "nu''' - 2*nu^2*nu' - 2*nu'*nu^2 - 2*nu*nu'*nu - nu - nu'*x - 4*[nu,nu'']", "quantum-x-nu", {}, {});
    target("mqpii-extra-terms", "claimed difference from the derivative matrix PII", "2*nu^2*nu' + 2*nu'*nu^2",
           "none", "an expression, not an equation", {});

    // Gauge-equivalent system.
    target("qsym-p-target", "quantum non-abelian system, p line", "p' - [v,p] - u*p - p*u + i/4*hbar*u + alpha - 1/2");
    target("qsym-q-target", "quantum non-abelian system, q line", "q' - [q,v] + u*q + q*u + i/4*hbar*u - alpha - 1/2");
    target("qsym-u-target", "quantum non-abelian system, u line", "u' - 1/2*(p - q)", "none", {}, {});
    target("qsym-p-target-derived", "p line from the derived gauge pair",
           "p' - u*p - p*u - 4*[v,p] + i*hbar*u - alpha - 1/2");
    target("qsym-q-target-derived", "q line from the derived gauge pair",
           "q' + u*q + q*u - 4*[v,q] + i*hbar*u + alpha - 1/2");
    target("qsym-u-target-derived", "u line from the derived gauge pair", "u' - 1/2*(p - q) + 4*[u,v] + i/2*hbar",
           "none", {}, {});
    target("p-def-target", "p = u^2 + u' + z/2", "p - u^2 - u' - z/2", "none", {}, {});
    target("q-def-target", "q = u^2 - u' + z/2", "q - u^2 + u' - z/2", "none", {}, {});
    target("elim-target-derived", "PII obtained by eliminating p and q from the quantum non-abelian system",
           "u'' - [v,u^2] - 1/2*[v,z] - 2*u^3 - 1/2*[z,u]_+ + alpha");

    // Quantum P34 chain; p and q here are the shifted (bold) variables.
    target("qp-first-order-target", "p' with v = u'", "p' - 2*u*p + i/4*hbar*u + alpha - 1/2");
    target("qp-first-order-beta-target", "p' in beta, delta form", "p' - 2*u*(p - beta/2) + delta");
    target("u-from-p-target", "u as a logarithmic derivative of p", "u - p'*p^-1 - delta*p^-1");
    target("p-from-u-target", "shifted p in terms of u", "p - u^2 - u' - z/2 + beta/2", "none", {}, {});
    target("uprime-from-p-target", "u' in terms of p", "u' + 1/2*p'*p^-1*p'*p^-1 - delta/2*p^-1*p'*p^-1", "pq-inverse");
    target("uprime-from-p-target-derived", "u' in terms of p, from u = (p' + delta) p^-1 / 2",
           "u' - 1/2*p''*p^-1 + 1/2*p'*p^-1*p'*p^-1 + delta/2*p^-1*p'*p^-1", "pq-inverse");
    target("usq-from-p-target", "u^2 in terms of p",
           "u^2 - 1/4*p'*p^-1*p'*p^-1 - delta/4*p'*p^-2 - delta/4*p^-1*p'*p^-1 - delta^2/4*p^-2", "pq-inverse");
    target("qp34-target", "quantum P34 for p", "p'' + 1/2*p'*p^-1*p' - 2*p^2 + delta^2/2*p^-1 + (z - beta)*p",
           "pq-inverse");
    target("qp34-target-derived", "quantum P34 for p from u = (p' + delta) p^-1 / 2",
           "p'' - 1/2*p'*p^-1*p' - 1/2*delta*p^-1*p' + 1/2*delta*p'*p^-1 - 2*p^2 + delta^2/2*p^-1 + (z - beta)*p",
           "pq-inverse");
    target("qp34-target-literal-chain-derived", "quantum P34 for p from u = p' p^-1 + delta p^-1",
           "p'' - p^2 + delta*p'*p^-1 + delta^2*p^-1 + 1/2*(z - beta)*p", "pq-inverse");
    target("summary-qp34-target", "quantum P34 as announced with (z - hbar/2)",
           "p'' + 1/2*p'*p^-1*p' - 2*p^2 + delta^2/2*p^-1 + (z - 1/2*hbar)*p", "pq-inverse");
    target("qq34-target", "quantum P34 for q", "q'' + 1/2*q'*q^-1*q' - 2*q^2 + delta^2/2*q^-1 + (z + beta)*q",
           "pq-inverse");
    target("qq34-target-derived", "quantum P34 for q, from q' = -2u(q + beta/2) + alpha + 1/2",
           "q'' - 1/2*q'*q^-1*q' + 1/2*(alpha + 1/2)*(q^-1*q' - q'*q^-1) - 2*q^2 + 1/2*(alpha + 1/2)^2*q^-1 + "
           "(z + beta)*q",
           "pq-inverse");
    target("ng-qp34-target", "quantum P34 of the comparison work",
           "p'' + 1/2*p'*p^-1*p' - 2*p^2 + delta^2/2*p^-1 + (z - hbar^2)*p", "pq-inverse");
  }

  std::vector<Builder> builders_;
};

}  // namespace detail

inline std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& b : detail::Registry::instance().builders()) out.push_back(b.entry);
  return out;
}

inline EntryKind catalog_kind(const std::string& key) { return detail::Registry::instance().find(key).entry.kind; }

inline LaxPairSpec build_pair(const std::string& key, const Params& params = {}) {
  const auto& b = detail::Registry::instance().find(key);
  if (b.entry.kind != EntryKind::Pair) throw Error("catalog key '" + key + "' is not a Lax pair");
  detail::check_slots(b.entry, params);
  return b.pair(params);
}

inline TargetEquation build_target(const std::string& key, const Params& params = {}) {
  const auto& b = detail::Registry::instance().find(key);
  if (b.entry.kind != EntryKind::Target) throw Error("catalog key '" + key + "' is not a target equation");
  detail::check_slots(b.entry, params);
  TargetEquation t = b.target(params);
  t.lhs = normalize(t.lhs, make_rules(t.rules));
  return t;
}

inline MatrixSpec build_matrix(const std::string& key, const Params& params = {}) {
  const auto& b = detail::Registry::instance().find(key);
  if (b.entry.kind != EntryKind::Matrix) throw Error("catalog key '" + key + "' is not a matrix");
  detail::check_slots(b.entry, params);
  return b.matrix(params);
}

}  // namespace laxlab
