// Generator declarations, atoms and words of the free algebra.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace laxlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GeneratorKind {
  Independent,  // d/dz of it is 1 (z, and the shifted variable x)
  Field,        // d/dz produces a derivative atom
};

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::Field;
  bool invertible = false;
};

/// Ordered generator declarations. Declaration order is the normal-ordering
/// precedence used to orient commutation rules.
class Context {
 public:
  explicit Context(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const auto& g = gens_[k];
      if (g.name.empty()) throw Error("empty generator name");
      if (g.kind == GeneratorKind::Independent && g.invertible)
        throw Error("independent variable '" + g.name + "' cannot be invertible");
      for (std::size_t j = 0; j < k; ++j)
        if (gens_[j].name == g.name) throw Error("generator '" + g.name + "' declared twice");
    }
  }

  /// z < x < u < v < p < q < r < nu; p, q, r invertible.
  static std::shared_ptr<const Context> standard() {
    static const auto ctx = std::make_shared<const Context>(std::vector<Generator>{
        {"z", GeneratorKind::Independent, false},
        {"x", GeneratorKind::Independent, false},
        {"u", GeneratorKind::Field, false},
        {"v", GeneratorKind::Field, false},
        {"p", GeneratorKind::Field, true},
        {"q", GeneratorKind::Field, true},
        {"r", GeneratorKind::Field, true},
        {"nu", GeneratorKind::Field, false},
    });
    return ctx;
  }

  std::optional<int> find(std::string_view name) const {
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (gens_[k].name == name) return static_cast<int>(k);
    return std::nullopt;
  }
  int index(std::string_view name) const {
    if (auto k = find(name)) return *k;
    throw Error("undeclared generator '" + std::string(name) + "'");
  }
  const Generator& at(int k) const { return gens_.at(static_cast<std::size_t>(k)); }
  std::size_t size() const { return gens_.size(); }

 private:
  std::vector<Generator> gens_;
};

using ContextPtr = std::shared_ptr<const Context>;

struct Atom {
  std::uint16_t gen = 0;
  std::uint16_t order = 0;  // k-th formal z-derivative
  bool inverse = false;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using Word = std::vector<Atom>;

inline Atom make_atom(const Context& ctx, int gen, int order = 0, bool inverse = false) {
  if (gen < 0 || static_cast<std::size_t>(gen) >= ctx.size()) throw Error("generator index out of range");
  if (order < 0) throw Error("negative derivative order for '" + ctx.at(gen).name + "'");
  const auto& g = ctx.at(gen);
  if (inverse && !g.invertible) throw Error("generator '" + g.name + "' is not invertible");
  if (inverse && order != 0) throw Error("inverse atoms carry no derivative order");
  if (g.kind == GeneratorKind::Independent && order != 0)
    throw Error("independent variable '" + g.name + "' has no derivative atoms");
  return {static_cast<std::uint16_t>(gen), static_cast<std::uint16_t>(order), inverse};
}

inline std::string atom_str(const Context& ctx, const Atom& a) {
  std::string s = ctx.at(a.gen).name;
  s.append(a.order, '\'');
  if (a.inverse) s += "^-1";
  return s;
}

inline std::string word_str(const Context& ctx, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += atom_str(ctx, w[k]);
  }
  return s;
}

}  // namespace laxlab
