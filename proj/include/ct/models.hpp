#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/fincat.hpp"
#include "ct/finset.hpp"
#include "ct/theory.hpp"

namespace ct {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchSpaceTooLarge : ModelError {
  using ModelError::ModelError;
};
struct InducedOpIllDefined : ModelError {
  using ModelError::ModelError;
};

// A finite structure for a theory's signature: one carrier per sort, one
// total operation table per operation.  Whether the rules actually hold is
// a separate question (check_model); quotient_by_congruence deliberately
// accepts raw structures.
struct Model {
  ThPtr theory;
  std::vector<FinSet> carriers;                  // per sort
  std::vector<std::vector<std::size_t>> tables;  // per op, row-major over arg tuples

  std::size_t apply(std::size_t op, const std::vector<std::size_t>& args) const;
  // env: value per variable index (variables of the term's context)
  std::size_t eval(const Term& t, const std::vector<std::size_t>& env) const;

  static Model terminal(ThPtr t);
};

struct ModelCheck {
  bool ok = true;
  std::size_t failing_rule = 0;
  std::vector<std::size_t> assignment;  // witness environment
  std::size_t lhs = 0, rhs = 0;         // the two evaluations
};
ModelCheck check_model(const Model& m);

struct ModelHom {
  std::vector<FinFunction> maps;  // per sort

  bool operator==(const ModelHom& o) const { return maps == o.maps; }
  bool operator<(const ModelHom& o) const { return maps < o.maps; }
};

bool is_model_hom(const Model& a, const Model& b, const ModelHom& h,
                  std::string* why = nullptr);

// Brute-force enumeration of all homomorphisms A → B, in a fixed order.
std::vector<ModelHom> hom_models(const Model& a, const Model& b,
                                 std::size_t max_candidates = 10'000'000);

ModelHom identity_model_hom(const Model& a);
ModelHom compose_model_hom(const ModelHom& f, const ModelHom& g);  // g ∘ f

struct ProductOfModels {
  Model model;
  ModelHom p1, p2;
};
ProductOfModels product_of_models(const Model& a, const Model& b);

struct EqualizerOfModels {
  Model model;
  ModelHom include;
};
EqualizerOfModels equalizer_of_models(const Model& a, const Model& b, const ModelHom& h1,
                                      const ModelHom& h2);

struct ModelDiagram {
  CatPtr shape;
  std::vector<Model> at;        // per shape object
  std::vector<ModelHom> arrow;  // per shape morphism
};

struct ModelColimit {
  Model model;
  std::vector<ModelHom> inject;
};

// Colimit of models over a sifted index: carrier-wise colimit of underlying
// sets, operations induced on the quotient.  Certifies well-definedness by
// comparing every common-object representative of every class tuple; throws
// InducedOpIllDefined if the comparison fails (or J is not sifted and
// require_sifted was waived).
ModelColimit sifted_colimit_of_models(const ModelDiagram& d, bool require_sifted = true);

struct QuotientResult {
  Model model;
  ModelHom quotient;
};

// Smallest congruence containing the pairs (and, for raw structures, all
// rule instances), then the induced quotient structure.
QuotientResult quotient_by_congruence(
    const Model& m, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& pairs);

struct FreeModelResult {
  ThPtr theory;
  std::vector<std::vector<Term>> elements;  // normal forms per sort, sorted
  std::vector<std::size_t> generator_pos;   // per generator, index into its sort's list
  bool saturated = false;
  std::optional<Model> model;  // present exactly when saturated
};

// Free model on generators (one per entry of gen_sorts), via bounded
// normal-form closure.
FreeModelResult free_model(const ThPtr& t, const std::vector<std::size_t>& gen_sorts,
                           std::size_t depth);

// Every model of t whose carrier sizes are exactly `sizes`, by exhaustive
// table search.
std::vector<Model> all_models(const ThPtr& t, const std::vector<std::size_t>& sizes,
                              std::size_t max_candidates = 10'000'000);

// The algebraic functor G*: restriction of a target-theory model along a
// theory morphism.
Model restrict_model(const TheoryMorphism& g, const Model& b);

struct AdjointCertificate {
  bool ok = false;
  bool truncated = false;         // free stage unsaturated, or sizes skipped
  std::size_t bound = 0;          // max carrier size attempted
  std::size_t models_checked = 0;
  std::vector<std::size_t> sizes_skipped;  // carrier sizes beyond the search budget
  std::string detail;
};

struct LeftAdjointResult {
  Model model;       // L(A), a model of G's target theory
  ModelHom unit;     // A → G*(L(A))
  bool unit_ok = false;
  bool truncated = false;
  AdjointCertificate certificate;
};

// Free T-model on A's elements, quotiented by A's operation instances
// translated through G; certified by the hom-set bijection
// hom_T(L(A), B) ≅ hom_S(A, G*(B)) over all small B.
LeftAdjointResult left_adjoint_algebraic(const TheoryMorphism& g, const Model& a,
                                         std::size_t depth, std::size_t cert_bound = 3,
                                         std::size_t cert_max_models = 200,
                                         std::size_t max_candidates = 10'000'000);

}  // namespace ct
