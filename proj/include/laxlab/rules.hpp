// Length-two rewrite rules and normal ordering.
//
// A rule replaces an adjacent atom pair (a, b) by an expression. normalize()
// rewrites leftmost-first until no pattern occurs anywhere, counting rule
// applications against a budget; running out of budget is an error, never a
// silent stop. Confluence is not assumed.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laxlab/ncexpr.hpp"

namespace laxlab {

inline constexpr long kDefaultRuleBudget = 10000;

/// Budget from LAXLAB_PASS_BUDGET, else the default.
inline long default_rule_budget() {
  if (const char* env = std::getenv("LAXLAB_PASS_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultRuleBudget;
}

class NonTermination : public Error {
 public:
  NonTermination(const std::string& rules, long budget)
      : Error("rule set '" + rules + "' did not reach a normal form within " + std::to_string(budget) +
              " rule applications") {}
};

struct Rule {
  Atom first;
  Atom second;
  NCExpr replacement;
};

class RuleSet {
 public:
  RuleSet() : RuleSet("none", Context::standard()) {}
  RuleSet(std::string name, ContextPtr ctx, long budget = default_rule_budget())
      : name_(std::move(name)), ctx_(std::move(ctx)), budget_(budget) {
    if (budget_ <= 0) throw Error("rule budget must be positive");
  }

  const std::string& name() const { return name_; }
  const ContextPtr& context() const { return ctx_; }
  long budget() const { return budget_; }
  void set_budget(long b) {
    if (b <= 0) throw Error("rule budget must be positive");
    budget_ = b;
  }
  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  /// Registers first*second -> replacement. Rejects a replacement that
  /// contains its own pattern and a pattern that is already registered.
  RuleSet& add(Atom first, Atom second, NCExpr replacement) {
    if (replacement.context() != ctx_) throw Error("rule replacement from a different context");
    for (const auto& [w, c] : replacement.terms())
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == first && w[k + 1] == second)
          throw Error("rule in '" + name_ + "' reintroduces its own pattern " + atom_str(*ctx_, first) + "*" +
                      atom_str(*ctx_, second));
    auto key = std::make_pair(first, second);
    if (index_.count(key)) throw Error("duplicate rule pattern in '" + name_ + "'");
    index_.emplace(key, rules_.size());
    rules_.push_back({first, second, std::move(replacement)});
    return *this;
  }

  /// Union of two rule sets (patterns must not clash).
  RuleSet merged(const RuleSet& other, std::string name = {}) const {
    RuleSet r(name.empty() ? name_ + "+" + other.name_ : std::move(name), ctx_, std::max(budget_, other.budget_));
    for (const auto& rule : rules_) r.add(rule.first, rule.second, rule.replacement);
    for (const auto& rule : other.rules_) r.add(rule.first, rule.second, rule.replacement);
    return r;
  }

  const Rule* match(const Atom& a, const Atom& b) const {
    auto it = index_.find(std::make_pair(a, b));
    return it == index_.end() ? nullptr : &rules_[it->second];
  }

 private:
  std::string name_;
  ContextPtr ctx_;
  long budget_;
  std::vector<Rule> rules_;
  std::map<std::pair<Atom, Atom>, std::size_t> index_;
};

/// Normal form of e under rules.
inline NCExpr normalize(const NCExpr& e, const RuleSet& rules) {
  if (rules.empty()) return e;
  if (e.context() != rules.context()) throw Error("normalize: rule set from a different context");
  // Rounds: every reducible word gets its leftmost redex rewritten once, then
  // like terms are merged so cancellations happen before the next round.
  NCExpr out(e.context());
  NCExpr pending = e;
  long applications = 0;
  while (!pending.is_zero()) {
    NCExpr next(e.context());
    for (const auto& [w, c] : pending.terms()) {
      const Rule* hit = nullptr;
      std::size_t pos = 0;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if ((hit = rules.match(w[k], w[k + 1]))) {
          pos = k;
          break;
        }
      }
      if (!hit) {
        out.add_term(w, c);
        continue;
      }
      if (++applications > rules.budget()) throw NonTermination(rules.name(), rules.budget());
      for (const auto& [rw, rc] : hit->replacement.terms()) {
        Word nw;
        nw.reserve(w.size() + rw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        next.add_term(std::move(nw), c * rc);
      }
    }
    pending = std::move(next);
  }
  return out;
}

/// a == b modulo the ideal generated by the rules (decided by normal form).
inline bool equal_mod(const NCExpr& a, const NCExpr& b, const RuleSet& rules) {
  return normalize(a - b, rules).is_zero();
}

}  // namespace laxlab
