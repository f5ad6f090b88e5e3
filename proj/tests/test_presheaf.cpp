#include "doctest.h"

#include <algorithm>

#include "ct/fixtures.hpp"
#include "ct/presheaf.hpp"
#include "ct/presheaf_ops.hpp"

using namespace ct;

namespace {

std::vector<std::size_t> decompose_summands(const PshPtr& p) {
  auto res = decompose_into_representables(p);
  REQUIRE(res.ok());
  CHECK(res.decomposition->iso.is_isomorphism());
  return res.decomposition->summands;
}

}  // namespace

TEST_CASE("presheaf construction checks functoriality") {
  CatPtr g = fixtures::gph_base();
  // a valid graph: 2 vertices, 1 edge from 0 to 1
  CHECK_NOTHROW(Presheaf::make(
      g, {FinSet(2), FinSet(1)},
      {FinFunction::identity(2), FinFunction::identity(1), FinFunction(1, 2, {0}),
       FinFunction(1, 2, {1})}));
  // action at an identity must be the identity
  CHECK_THROWS_AS(Presheaf::make(g, {FinSet(2), FinSet(1)},
                                 {FinFunction(2, 2, {0, 0}), FinFunction::identity(1),
                                  FinFunction(1, 2, {0}), FinFunction(1, 2, {1})}),
                  PresheafError);
}

TEST_CASE("representable graphs have the expected shapes") {
  PshPtr v = fixtures::gph_V(), e = fixtures::gph_E(), one = fixtures::gph_terminal();
  CHECK(v->at(0).size() == 1);
  CHECK(v->at(1).size() == 0);
  CHECK(e->at(0).size() == 2);
  CHECK(e->at(1).size() == 1);
  CHECK(one->at(0).size() == 1);
  CHECK(one->at(1).size() == 1);
  CHECK(e->same_shape(*Presheaf::representable(fixtures::gph_base(), 1)));
}

TEST_CASE("products of graph representables decompose as expected") {
  PshPtr v = fixtures::gph_V(), e = fixtures::gph_E();
  CHECK(decompose_summands(product(v, v).product) == std::vector<std::size_t>{0});
  CHECK(decompose_summands(product(v, e).product) == std::vector<std::size_t>{0, 0});
  CHECK(decompose_summands(product(e, v).product) == std::vector<std::size_t>{0, 0});
  CHECK(decompose_summands(product(e, e).product) == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("the terminal graph is not a coproduct of representables") {
  auto res = decompose_into_representables(fixtures::gph_terminal());
  CHECK(!res.ok());
  CHECK(!res.failing_component.empty());
}

TEST_CASE("reflexive coequalizer of E+V toward E is the terminal graph") {
  auto coeq = fixtures::gph_reflexive_coequalizer();
  CHECK(coeq.colimit->at(0).size() == 1);
  CHECK(coeq.colimit->at(1).size() == 1);
  CHECK(coeq.colimit->same_shape(*fixtures::gph_terminal()));
}

TEST_CASE("hom out of the terminal graph is not cocontinuous") {
  PshPtr one = fixtures::gph_terminal();
  CHECK(nat_transformations(one, fixtures::gph_E()).empty());
  CHECK(nat_transformations(one, one).size() == 1);
  auto rep = preserves_colimit(one, fixtures::gph_reflexive_coequalizer());
  CHECK(!rep.preserved);
  CHECK(rep.colim_of_homs == 0);
  CHECK(rep.homs_of_colim == 1);
  CHECK(!rep.canonical_bijective);
  // representables do preserve the same colimit
  auto ok = preserves_colimit(fixtures::gph_E(), fixtures::gph_reflexive_coequalizer());
  CHECK(ok.preserved);
  CHECK(ok.colim_of_homs == ok.homs_of_colim);
}

TEST_CASE("reflexive-graph product counterexample") {
  PshPtr e = Presheaf::representable(fixtures::rgph_base(), 1);
  auto pe = product(e, e).product;
  CHECK(pe->at(0).size() == 4);
  CHECK(pe->at(1).size() == 9);
  CHECK(is_strongly_finitely_presentable(e));
  CHECK(!is_strongly_finitely_presentable(pe));
  // in plain graphs the same product stays strongly finitely presentable
  CHECK(is_strongly_finitely_presentable(
      product(fixtures::gph_E(), fixtures::gph_E()).product));
}

TEST_CASE("injections binomial decomposition at m = n = 2") {
  auto p = product(fixtures::inj_y(2, 4), fixtures::inj_y(2, 4)).product;
  CHECK(decompose_summands(p) == std::vector<std::size_t>{2, 2, 3, 3, 3, 3, 4});
  auto p11 = product(fixtures::inj_y(1, 2), fixtures::inj_y(1, 2)).product;
  CHECK(decompose_summands(p11) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("finite limits and colimits of set diagrams") {
  auto disc = discrete_cat(2);
  SetDiagram pair(disc, {FinSet(2), FinSet(3)}, {FinFunction::identity(2), FinFunction::identity(3)});
  CHECK(limit_finset(pair).set.size() == 6);
  CHECK(colimit_finset(pair).set.size() == 5);

  auto par = parallel_pair_cat();
  SetDiagram eq(par, {FinSet(3), FinSet(3)},
                {FinFunction::identity(3), FinFunction::identity(3), FinFunction::identity(3),
                 FinFunction(3, 3, {0, 2, 1})});
  CHECK(limit_finset(eq).set.size() == 1);    // only the common fixed point
  CHECK(colimit_finset(eq).set.size() == 2);  // 1 and 2 merge
}

TEST_CASE("natural transformation counts and Yoneda") {
  PshPtr v = fixtures::gph_V(), e = fixtures::gph_E();
  CHECK(nat_transformations(e, e).size() == 1);
  CHECK(nat_transformations(v, e).size() == 2);
  // Yoneda: Nat(y(c), G) ≅ G(c)
  CatPtr g = fixtures::gph_base();
  for (std::size_t c = 0; c < 2; ++c) {
    auto nats = nat_transformations(Presheaf::representable(g, c), fixtures::gph_terminal());
    CHECK(nats.size() == fixtures::gph_terminal()->at(c).size());
  }
  auto y0 = yoneda_map(e, 0, 1);
  CHECK(y0.source().at(0).size() == 1);
  CHECK(y0.at(0)(0) == 1);
}

TEST_CASE("exponentials satisfy the universal property") {
  PshPtr v = fixtures::gph_V(), e = fixtures::gph_E();
  auto ev = exponential(v, e);  // E^V
  CHECK(ev.object->at(0).size() == 2);
  CHECK(ev.object->at(1).size() == 4);
  auto ee = exponential(e, e).object;
  CHECK(ee->at(0).size() == 4);
  CHECK(ee->at(1).size() == 4);
  CHECK(nat_transformations(product(e, v).product, e).size() ==
        nat_transformations(e, ev.object).size());
}

TEST_CASE("weighted colimit by coend") {
  SetDiagram d(fixtures::gph_base(), {FinSet(2), FinSet(3)},
               {FinFunction::identity(2), FinFunction::identity(3), FinFunction(2, 3, {0, 1}),
                FinFunction(2, 3, {2, 1})});
  auto wc = weighted_colimit(*fixtures::gph_E(), d);
  CHECK(wc.set.size() == 3);
  // weighting by a representable evaluates the diagram there
  auto wv = weighted_colimit(*fixtures::gph_V(), d);
  CHECK(wv.set.size() == d.at[0].size());
}

TEST_CASE("every presheaf is the colimit of its representables") {
  for (PshPtr p : {fixtures::gph_terminal(), fixtures::gph_E(),
                   product(fixtures::gph_E(), fixtures::gph_E()).product}) {
    auto el = category_of_elements(p);
    CHECK(el.elements.size() == p->total_elements());
    auto cr = colimit_of_representables(el, p);
    CHECK(cr.comparison.is_isomorphism());
  }
  auto el1 = category_of_elements(fixtures::gph_terminal());
  CHECK(el1.cat->num_objects() == 2);
  CHECK(el1.cat->num_morphisms() == 4);
}

TEST_CASE("commutation scan finds the discrete-pair counterexample") {
  auto good = commutes_products_colimit(all_set_diagrams(reflexive_pair_cat(), 2));
  CHECK(good.commutes);
  auto bad = commutes_products_colimit(all_set_diagrams(discrete_cat(2), 2));
  CHECK(!bad.commutes);
  CHECK(bad.witness_found);
  CHECK(bad.lhs != bad.rhs);
}

TEST_CASE("kan extension along the graph-base inclusion into its reflexive completion") {
  // Lan of a presheaf along the identity is the presheaf itself
  PshPtr e = fixtures::gph_E();
  auto lan = lan_presheaf(e, FinFunctor::identity(fixtures::gph_base()));
  CHECK(lan->at(0).size() == e->at(0).size());
  CHECK(lan->at(1).size() == e->at(1).size());
}
