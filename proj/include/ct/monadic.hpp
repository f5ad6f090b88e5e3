#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/models.hpp"
#include "ct/theory.hpp"

namespace ct {

struct MonadicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One slice of the term monad: T(X) for a single finite set X, as canonical
// normal forms over |X| generators.  Only single-sorted theories give monads
// on Set.
struct MonadSlice {
  ThPtr theory;
  std::size_t n = 0;          // |X|
  std::size_t depth = 0;
  std::vector<Term> elements;  // sorted normal forms; generators are variables 0..n-1
  bool saturated = false;
  std::vector<std::size_t> eta;  // generator i ↦ its index in elements

  std::size_t size() const { return elements.size(); }
  // index of a normal form, or nullopt if it escaped the depth bound
  std::optional<std::size_t> index_of(const Term& t) const;
};

MonadSlice monad_from_theory(const ThPtr& t, std::size_t n, std::size_t depth);

// T on a function X → Y; every image must stay inside the target slice.
FinFunction monad_on_function(const MonadSlice& sx, const MonadSlice& sy, const FinFunction& f);

// T(T(X)) on top of a slice: normal forms over one generator per element of
// T(X), at its own depth.
MonadSlice iterate_slice(const MonadSlice& sx, std::size_t depth);

// μ: T(T(X)) → T(X) by substituting each generator's term and renormalizing;
// nullopt where the flattened term escapes the slice.
std::vector<std::optional<std::size_t>> mu_map(const MonadSlice& sx, const MonadSlice& ttx);

struct MonadLawReport {
  bool eta_injective = false;
  bool unit_left = false;      // μ ∘ η_{T(X)} = id
  bool unit_right = false;     // μ ∘ T(η) = id
  bool assoc = false;          // μ ∘ μ_{T(X)} = μ ∘ T(μ) on checked elements
  bool truncated = false;      // some elements escaped a depth bound
  std::size_t assoc_checked = 0;
  std::string detail;

  bool ok() const { return eta_injective && unit_left && unit_right && assoc; }
};

MonadLawReport monad_law_report(const ThPtr& t, std::size_t n, std::size_t depth,
                                std::size_t inner_depth = 2);

// The category slice extracted from the monad: hom(m, k) = T(m)^k with
// Kleisli-style substitution composition.
struct MonadCatSlice {
  ThPtr theory;
  std::size_t max_arity = 0;
  std::size_t depth = 0;
  bool truncated = false;
  std::vector<std::vector<TheoryHom>> hom;  // hom[m * (max_arity+1) + k], sorted

  const std::vector<TheoryHom>& at(std::size_t m, std::size_t k) const {
    return hom[m * (max_arity + 1) + k];
  }
};

MonadCatSlice theory_from_monad(const ThPtr& t, std::size_t max_arity, std::size_t depth);

struct RoundtripReport {
  bool ok = false;
  bool truncated = false;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>>
      cardinalities;  // (m, k, |hom| via monad, via theory)
  std::size_t compositions_checked = 0;
  std::string detail;
};

// theory → monad → theory: hom-sets agree with hom_enumerate and the
// identification preserves identities and composition.
RoundtripReport roundtrip_check(const ThPtr& t, std::size_t max_arity, std::size_t depth,
                                std::size_t max_composition_pairs = 2000);

// An Eilenberg–Moore algebra over one slice: a structure map T(X) → X.
struct EMAlgebra {
  FinSet carrier;
  FinFunction structure;  // T(X) → X
};

// a(term) = evaluate the term in the model
EMAlgebra evaluation_algebra(const MonadSlice& sx, const Model& m);
// tables read off the structure map: op ↦ a(op(η x₁ … η x_k))
Model readoff_model(const MonadSlice& sx, const EMAlgebra& alg);

// a ∘ η = id and a ∘ μ = a ∘ T(a) on all in-bound elements of T(T(X))
bool em_algebra_laws(const MonadSlice& sx, const MonadSlice& ttx, const EMAlgebra& alg,
                     std::string* why = nullptr);

struct EMReport {
  bool ok = false;
  bool truncated = false;
  std::size_t models = 0;
  std::size_t algebras = 0;   // law-satisfying structure maps found exhaustively
  bool exhaustive = false;    // structure-map space was fully enumerated
  std::size_t hom_pairs_checked = 0;
  std::string detail;
};

// Models on an n-element carrier vs EM algebras on the same carrier:
// mutually inverse passages, plus agreement of algebra maps with model
// homomorphisms.
EMReport em_model_correspondence(const ThPtr& t, std::size_t n, std::size_t depth,
                                 std::size_t inner_depth = 2,
                                 std::size_t max_candidates = 10'000'000);

}  // namespace ct
