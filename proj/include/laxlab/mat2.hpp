// 2x2 matrices over NCExpr: Pauli basis, calculus, zero-curvature residuals,
// gauge conjugation and equation extraction.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laxlab/parser.hpp"
#include "laxlab/rules.hpp"

namespace laxlab {

class Mat2 {
 public:
  explicit Mat2(ContextPtr ctx = Context::standard())
      : e_{NCExpr(ctx), NCExpr(ctx), NCExpr(ctx), NCExpr(ctx)} {}
  Mat2(NCExpr a, NCExpr b, NCExpr c, NCExpr d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (const auto& x : e_) e_[0].check_context(x);
  }

  const ContextPtr& context() const { return e_[0].context(); }
  const NCExpr& at(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }
  NCExpr& at(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  template <class F>
  Mat2 map(F f) const {
    return {f(e_[0]), f(e_[1]), f(e_[2]), f(e_[3])};
  }

  Mat2 operator-() const { return map([](const NCExpr& x) { return -x; }); }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) { return a + (-b); }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r(a.context());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return r;
  }
  /// Entry-wise left multiplication s*M (s multiplies from the left).
  friend Mat2 operator*(const NCExpr& s, const Mat2& m) {
    return m.map([&](const NCExpr& x) { return s * x; });
  }
  friend Mat2 operator*(const Coefficient& c, const Mat2& m) {
    return m.map([&](const NCExpr& x) { return c * x; });
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }

 private:
  std::array<NCExpr, 4> e_;
};

/// sigma1, sigma2, sigma3, I, I+ = [[0,1],[0,0]], I- = [[0,0],[-1,0]].
inline Mat2 pauli(std::string_view name, const ContextPtr& ctx = Context::standard()) {
  auto k = [&](Coefficient c) { return NCExpr(ctx, std::move(c)); };
  NCExpr zero(ctx);
  if (name == "sigma1") return {zero, k(1), k(1), zero};
  if (name == "sigma2") return {zero, k(-Coefficient::i()), k(Coefficient::i()), zero};
  if (name == "sigma3") return {k(1), zero, zero, k(-1)};
  if (name == "I") return {k(1), zero, zero, k(1)};
  if (name == "I+") return {zero, k(1), zero, zero};
  if (name == "I-") return {zero, zero, k(-1), zero};
  throw Error("unknown basis matrix '" + std::string(name) + "'");
}

inline Mat2 mat_commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }
inline Mat2 mat_d_dz(const Mat2& m) { return m.map([](const NCExpr& x) { return d_dz(x); }); }
inline Mat2 mat_d_dlambda(const Mat2& m) { return m.map([](const NCExpr& x) { return d_dlambda(x); }); }
inline Mat2 normalize(const Mat2& m, const RuleSet& rules) {
  return m.map([&](const NCExpr& x) { return normalize(x, rules); });
}
inline Mat2 substitute(const Mat2& m, const Substitution& s) {
  return m.map([&](const NCExpr& x) { return substitute(x, s); });
}
inline Mat2 classical_limit(const Mat2& m) { return m.map([](const NCExpr& x) { return classical_limit(x); }); }
inline Mat2 scalarize(const Mat2& m) { return m.map([](const NCExpr& x) { return scalarize(x); }); }

enum class ResidualConvention {
  Standard,       // Q_z - P_lam - [P,Q]
  Flipped,        // P_lam - Q_z - [Q,P]  (same condition, opposite sign)
  AltCommutator,  // Q_z - P_lam - [Q,P]  (a different condition)
};

inline Mat2 zero_curvature_residual(const Mat2& P, const Mat2& Q, const RuleSet& rules,
                                    ResidualConvention conv = ResidualConvention::Standard) {
  Mat2 r(P.context());
  switch (conv) {
    case ResidualConvention::Standard:
      r = mat_d_dz(Q) - mat_d_dlambda(P) - mat_commutator(P, Q);
      break;
    case ResidualConvention::Flipped:
      r = mat_d_dlambda(P) - mat_d_dz(Q) - mat_commutator(Q, P);
      break;
    case ResidualConvention::AltCommutator:
      r = mat_d_dz(Q) - mat_d_dlambda(P) - mat_commutator(Q, P);
      break;
  }
  return normalize(r, rules);
}

struct Provenance {
  int row = 0;
  int col = 0;
  int lam_power = 0;
  std::string step;

  std::string str() const {
    return step + "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")@lam^" +
           std::to_string(lam_power);
  }
};

/// lhs = 0, with every place it was extracted from.
struct Equation {
  NCExpr lhs;
  std::vector<Provenance> provenance;

  bool trivial() const { return lhs.is_zero(); }
};

/// One equation per (entry, lam power); scalar multiples are merged.
inline std::vector<Equation> extract_equations(const Mat2& R, const std::string& step = "residual") {
  std::vector<Equation> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const NCExpr& entry = R.at(i, j);
      for (int p : lambda_powers(entry)) {
        NCExpr eq = lambda_part(entry, p);
        if (eq.is_zero()) continue;
        Provenance prov{i, j, p, step};
        bool merged = false;
        for (auto& known : out) {
          if (scalar_ratio(eq, known.lhs)) {
            known.provenance.push_back(prov);
            merged = true;
            break;
          }
        }
        if (!merged) out.push_back({eq, {prov}});
      }
    }
  }
  return out;
}

enum class GaugeKind { ZPart, LambdaPart };

/// G M G^-1 + (dG) G^-1, d = d/dz or d/dlam.
inline Mat2 gauge_transform(const Mat2& M, const Mat2& G, const Mat2& G_inv, GaugeKind kind, const RuleSet& rules) {
  Mat2 id = pauli("I", M.context());
  if (!(normalize(G * G_inv, rules) == id) || !(normalize(G_inv * G, rules) == id))
    throw Error("gauge_transform: G_inv is not a two-sided inverse of G");
  Mat2 dG = kind == GaugeKind::ZPart ? mat_d_dz(G) : mat_d_dlambda(G);
  return normalize(G * M * G_inv + dG * G_inv, rules);
}

struct PauliParts {
  NCExpr I, s1, s2, s3;
};

inline PauliParts pauli_decompose(const Mat2& m) {
  Coefficient half(Rational(1, 2));
  Coefficient half_i(Gaussian(Rational(0), Rational(1, 2)));
  const NCExpr &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  return {half * (a + d), half * (b + c), half_i * (b - c), half * (a - d)};
}

inline Mat2 pauli_recompose(const PauliParts& p) {
  const ContextPtr& ctx = p.I.context();
  return p.I * pauli("I", ctx) + p.s1 * pauli("sigma1", ctx) + p.s2 * pauli("sigma2", ctx) +
         p.s3 * pauli("sigma3", ctx);
}

inline std::string to_string(const Mat2& m) {
  return "[[" + print(m.at(0, 0)) + ", " + print(m.at(0, 1)) + "], [" + print(m.at(1, 0)) + ", " +
         print(m.at(1, 1)) + "]]";
}

}  // namespace laxlab
