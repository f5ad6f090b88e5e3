#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/term.hpp"

namespace ct {

struct Rule {
  std::vector<std::size_t> var_sorts;   // rule context
  std::vector<std::string> var_names;   // for printing; may be empty
  Term lhs, rhs;
};

struct RewriteSystem {
  std::vector<Rule> rules;

  // checks Var(rhs) ⊆ Var(lhs), sort agreement, lhs not a bare variable
  void validate(const Signature& sig) const;
};

struct NormalForm {
  Term term;
  std::size_t steps = 0;
  std::vector<std::size_t> rule_trace;  // rules applied, in order
};

struct BudgetExceeded {
  Term partial;
  std::size_t steps = 0;
};

// Innermost-leftmost rewriting to a fixed point, AC-canonicalizing before
// each matching pass.
using NormalizeResult = std::optional<NormalForm>;  // nullopt ⇒ see budget report

struct Normalizer {
  const Signature& sig;
  const RewriteSystem& rs;
  std::size_t budget = 10000;

  // returns the normal form, or the partial term if the budget ran out
  NormalForm normalize(const Term& t) const;  // throws BudgetError on exhaustion
  std::optional<NormalForm> try_normalize(const Term& t) const;
  bool is_normal(const Term& t) const;
};

struct BudgetError : std::runtime_error {
  Term partial;
  std::size_t steps;
  BudgetError(Term p, std::size_t s)
      : std::runtime_error("rewrite budget exceeded"), partial(std::move(p)), steps(s) {}
};

// One rewrite step at the root with the given rule; handles AC-rooted left
// sides by matching a sub-multiset of the subject's AC arguments.
std::optional<Term> apply_rule_root(const Signature& sig, const Rule& rule, const Term& subject);

struct CriticalPair {
  Term left, right;      // the two reducts of the overlapped term
  Term overlap;          // the superposed term
  std::size_t rule_a, rule_b;
  bool joinable = false;
  Term nf_left, nf_right;
};

// Critical pairs (with AC-extension rules for AC-rooted left sides) and a
// joinability attempt for each; returns only the unjoinable ones.
std::vector<CriticalPair> local_confluence_report(const Signature& sig, const RewriteSystem& rs,
                                                  std::size_t budget = 10000);

}  // namespace ct
