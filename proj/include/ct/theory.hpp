#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ct/rewrite.hpp"
#include "ct/term.hpp"

namespace ct {

struct TheoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsafeTheory : TheoryError {
  using TheoryError::TheoryError;
};

class TheoryPresentation;
using ThPtr = std::shared_ptr<const TheoryPresentation>;

// A finitely presented finite-product theory: signature plus oriented,
// sort-correct rewrite rules, gated on an empty local-confluence report.
class TheoryPresentation {
 public:
  static ThPtr load(std::string name, Signature sig, RewriteSystem rules, bool allow_unsafe = false,
                    std::size_t budget = 10000);

  const std::string& name() const { return name_; }
  const Signature& sig() const { return sig_; }
  const RewriteSystem& rules() const { return rules_; }
  bool confluence_clean() const { return confluence_clean_; }
  std::size_t budget() const { return budget_; }
  Normalizer normalizer() const { return Normalizer{sig_, rules_, budget_}; }

  // single-sorted context helper; throws for many-sorted theories
  std::vector<std::size_t> ctx(std::size_t n) const;

 private:
  std::string name_;
  Signature sig_;
  RewriteSystem rules_;
  bool confluence_clean_ = false;
  std::size_t budget_ = 10000;
};

// Morphism of the theory category: n normal-form terms over m variables.
struct TheoryHom {
  std::vector<std::size_t> source_ctx;  // sorts, length m
  std::vector<std::size_t> target_ctx;  // sorts, length n
  std::vector<Term> terms;              // terms[j] has sort target_ctx[j], vars in source_ctx

  bool operator==(const TheoryHom& o) const { return terms == o.terms; }
  bool operator<(const TheoryHom& o) const { return terms < o.terms; }
};

// Normal forms over a context, generated by bounded closure rounds.
struct NormalFormSet {
  std::vector<std::vector<Term>> by_sort;  // sorted canonically per sort
  bool saturated = false;                  // no growth in one extra round
  std::size_t depth = 0;
};
NormalFormSet normal_forms(const TheoryPresentation& t, const std::vector<std::size_t>& context_sorts,
                           std::size_t depth);

struct HomSet {
  std::vector<TheoryHom> homs;
  bool truncated = false;
  std::size_t depth = 0;
};

HomSet hom_enumerate(const TheoryPresentation& t, const std::vector<std::size_t>& source_ctx,
                     const std::vector<std::size_t>& target_ctx, std::size_t depth);

// g ∘ f by componentwise substitute-then-normalize.
TheoryHom compose_hom(const TheoryPresentation& t, const TheoryHom& f, const TheoryHom& g);

TheoryHom identity_hom(const TheoryPresentation& t, const std::vector<std::size_t>& ctx);

// Theory morphism: sort map plus one target term (over the translated
// argument context) per source operation.
struct TheoryMorphism {
  ThPtr source;
  ThPtr target;
  std::vector<std::size_t> sort_map;  // source sort → target sort
  std::vector<Term> op_map;           // source op → target term over translated arg context
};

// Translate a source-theory term through a morphism (no normalization).
Term translate(const TheoryMorphism& g, const Term& t);

struct MorphismReport {
  bool ok = true;
  std::optional<std::size_t> failing_rule;
  Term lhs_nf, rhs_nf;
};
MorphismReport check_theory_morphism(const TheoryMorphism& g);

struct ProductCheckReport {
  bool ok = false;
  std::size_t lhs = 0;  // |hom(k, m+n)|
  std::size_t rhs = 0;  // |hom(k,m)| · |hom(k,n)|
  bool truncated = false;
};
ProductCheckReport finite_product_check(const TheoryPresentation& t,
                                        const std::vector<std::size_t>& k_ctx,
                                        const std::vector<std::size_t>& m_ctx,
                                        const std::vector<std::size_t>& n_ctx, std::size_t depth);

}  // namespace ct
