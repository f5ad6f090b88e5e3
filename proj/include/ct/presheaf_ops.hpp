#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ct/fincat.hpp"
#include "ct/fincat_ops.hpp"
#include "ct/presheaf.hpp"

namespace ct {

// ---------------------------------------------------------------- diagrams

// Covariant diagram of presheaves over a finite shape.
struct PshDiagram {
  CatPtr shape;
  std::vector<PshPtr> at;
  std::vector<PresheafMap> arrow;  // arrow[m]: at[src m] → at[dst m]
};

// Standard shape categories.
CatPtr discrete_cat(std::size_t n);
CatPtr terminal_cat();
CatPtr parallel_pair_cat();            // objects P,Q; f,g: P→Q
CatPtr reflexive_pair_cat();           // parallel pair with common section s, fs = gs = id
CatPtr span_cat();                     // B ← A → C (pushout shape)
CatPtr cospan_cat();                   // A → C ← B (pullback shape)

// ---------------------------------------------------------- FinSet (co)limits

struct SetLimit {
  FinSet set;
  std::vector<FinFunction> project;       // per shape object
  std::vector<std::vector<std::size_t>> tuples;  // element index → tuple of components
};
SetLimit limit_finset(const SetDiagram& d);

struct SetColimit {
  FinSet set;
  std::vector<FinFunction> inject;  // per shape object
};
SetColimit colimit_finset(const SetDiagram& d);

FinSet product_finset(const FinSet& a, const FinSet& b);
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t b_size) {
  return i * b_size + j;
}

// ---------------------------------------------------------- presheaf (co)limits

struct LimitResult {
  PshPtr limit;
  std::vector<PresheafMap> projections;
};
LimitResult finite_limit(const PshDiagram& d);

struct ColimitResult {
  PshDiagram diagram;
  PshPtr colimit;
  std::vector<PresheafMap> injections;
};
ColimitResult finite_colimit(const PshDiagram& d);

struct ProductResult {
  PshPtr product;
  PresheafMap pr1, pr2;
};
ProductResult product(const PshPtr& f, const PshPtr& g);

PshPtr terminal_presheaf(const CatPtr& base);
ColimitResult coequalizer(const PresheafMap& f, const PresheafMap& g);
ColimitResult coproduct(const std::vector<PshPtr>& parts);

// ------------------------------------------------------------- weighted colimit

struct WeightedColimit {
  FinSet set;
  // class of the element (a, w ∈ W(a), x ∈ D(a))
  std::size_t cls(std::size_t a, std::size_t w, std::size_t x) const;
  std::vector<std::size_t> offsets;       // per index object, into the raw sum
  std::vector<std::size_t> dsizes;        // |D(a)| per index object
  std::vector<std::size_t> quotient;      // raw index → class
};
WeightedColimit weighted_colimit(const Presheaf& w, const SetDiagram& d);

// ------------------------------------------------------------- Kan extensions

// Left Kan extension of a covariant FinSet diagram along J.
SetDiagram left_kan_extension(const SetDiagram& f, const FinFunctor& j);

// Left Kan extension of a presheaf on A along J: A → B, as a presheaf on B.
PshPtr lan_presheaf(const PshPtr& f, const FinFunctor& j);

// --------------------------------------------------------- natural transformations

std::vector<PresheafMap> nat_transformations(const PshPtr& f, const PshPtr& g);

// Yoneda: the map y(c) → G picking out x ∈ G(c).
PresheafMap yoneda_map(const PshPtr& g, std::size_t c, std::size_t x);
// y(f): y(c) → y(c') for f: c → c'.
PresheafMap yoneda_on_mor(const CatPtr& base, std::size_t f);

// ---------------------------------------------------------------- exponentials

struct Exponential {
  PshPtr object;  // G^F
  // per base object, the natural maps y(c)×F → G indexing (G^F)(c)
  std::vector<std::vector<PresheafMap>> elements;
  PshPtr f, g;
};
Exponential exponential(const PshPtr& f, const PshPtr& g);

// ---------------------------------------------------------------- decomposition

struct Decomposition {
  std::vector<std::size_t> summands;  // base objects, sorted
  PshPtr coproduct;                   // ⊕ y(summand)
  PresheafMap iso;                    // coproduct → P, verified isomorphism
};

struct DecomposeResult {
  std::optional<Decomposition> decomposition;
  // on failure: the elements (object, element) of the first non-representable component
  std::vector<std::pair<std::size_t, std::size_t>> failing_component;
  bool ok() const { return decomposition.has_value(); }
};
DecomposeResult decompose_into_representables(const PshPtr& p);

// Splits the base idempotents, transports P, then decomposes.
bool is_strongly_finitely_presentable(const PshPtr& p);

// Transport of a presheaf along split_idempotents' embedding: value at (c,e)
// is the set of fixed points of P(e).
PshPtr transport_to_split(const PshPtr& p, const SplitResult& split);

// ------------------------------------------------------------- preservation

struct PreservationReport {
  bool preserved = false;
  std::size_t colim_of_homs = 0;  // |colim Nat(P, D−)|
  std::size_t homs_of_colim = 0;  // |Nat(P, colim D)|
  bool canonical_bijective = false;
};
PreservationReport preserves_colimit(const PshPtr& p, const ColimitResult& colim);

// ------------------------------------------------------------- commutation

struct CommutationReport {
  bool commutes = true;
  bool witness_found = false;
  std::size_t diag_a = 0, diag_b = 0;  // indices into the tested diagram list
  std::size_t lhs = 0, rhs = 0;        // |colim(D1×D2)| vs |colim D1 × colim D2|
};

// Tests canonical-map bijectivity for all ordered pairs from `diagrams`;
// stops at the first failure when stop_at_first is set.
CommutationReport commutes_products_colimit(const std::vector<SetDiagram>& diagrams,
                                            bool stop_at_first = true);

// All functors shape → FinSet with every object set of size ≤ max_size.
std::vector<SetDiagram> all_set_diagrams(const CatPtr& shape, std::size_t max_size);

// ------------------------------------------------------- category of elements

struct ElementsResult {
  CatPtr cat;                  // the category of elements E
  CatPtr base_op;              // C^op
  FinFunctor projection;       // E → C^op
  std::vector<std::pair<std::size_t, std::size_t>> elements;  // (base object, element)
};
ElementsResult category_of_elements(const PshPtr& w);

// The canonical cocone of representables over elements(W), its colimit, and
// the comparison map colim → W.
struct ElementsColimit {
  ColimitResult colimit;
  PresheafMap comparison;
};
ElementsColimit colimit_of_representables(const ElementsResult& e, const PshPtr& w);

}  // namespace ct
