#include "doctest.h"

#include "ct/fincat.hpp"
#include "ct/fincat_ops.hpp"
#include "ct/fixtures.hpp"
#include "ct/presheaf_ops.hpp"

using namespace ct;

TEST_CASE("graph base category structure") {
  CatPtr g = fixtures::gph_base();
  CHECK(g->num_objects() == 2);
  CHECK(g->num_morphisms() == 4);  // id_v, id_e, s, t
  auto v = g->object_index("v"), e = g->object_index("e");
  REQUIRE(v.has_value());
  REQUIRE(e.has_value());
  CHECK(g->hom(*v, *e).size() == 2);
  CHECK(g->hom(*e, *v).empty());
  CHECK(g->hom(*v, *v).size() == 1);
  auto s = g->mor_index("s");
  REQUIRE(s.has_value());
  CHECK(g->compose(*s, g->identity(*v)) == *s);
  CHECK(g->compose(g->identity(*e), *s) == *s);
  CHECK(g->is_identity(g->identity(*v)));
  CHECK(!g->is_identity(*s));
}

TEST_CASE("reflexive graph base category structure") {
  CatPtr g = fixtures::rgph_base();
  CHECK(g->num_objects() == 2);
  CHECK(g->num_morphisms() == 7);  // id_v, id_e, s, t, r, s∘r, t∘r
  auto r = g->mor_index("r"), s = g->mor_index("s"), t = g->mor_index("t");
  REQUIRE((r && s && t));
  auto v = *g->object_index("v");
  CHECK(g->compose(*r, *s) == g->identity(v));
  CHECK(g->compose(*r, *t) == g->identity(v));
  CHECK(idempotents(*g).size() == 4);  // both identities, s∘r, t∘r
}

TEST_CASE("opposite category flips homs") {
  CatPtr g = fixtures::gph_base();
  CatPtr op = FinCat::op(g);
  CHECK(op->num_morphisms() == 4);
  CHECK(op->hom(*op->object_index("e"), *op->object_index("v")).size() == 2);
  CHECK(op->hom(*op->object_index("v"), *op->object_index("e")).empty());
}

TEST_CASE("validate rejects a category without identities") {
  RawCat raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", 0, 1}};
  CHECK_THROWS_AS(FinCat::validate(raw), CatError);
}

TEST_CASE("validate accepts a hand-entered commutative square shape") {
  RawCat raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  auto c = FinCat::validate(raw);
  CHECK(c->num_morphisms() == 4);
  CHECK(c->identity(0) == 0);
  CHECK(c->compose(1, 2) == 2);
}

TEST_CASE("functor construction checks preservation laws") {
  CatPtr g = fixtures::gph_base();
  // swapping s and t is a legal automorphism
  std::vector<std::size_t> obj{0, 1};
  auto id_v = *g->mor_index("id_v"), id_e = *g->mor_index("id_e");
  auto s = *g->mor_index("s"), t = *g->mor_index("t");
  std::vector<std::size_t> mor(g->num_morphisms());
  mor[id_v] = id_v;
  mor[id_e] = id_e;
  mor[s] = t;
  mor[t] = s;
  CHECK_NOTHROW(FinFunctor(g, g, obj, mor));
  // sending an identity elsewhere is not
  mor[id_v] = s;
  CHECK_THROWS(FinFunctor(g, g, obj, mor));
}

TEST_CASE("siftedness verdicts for the standard shapes") {
  CHECK(is_sifted(reflexive_pair_cat()).sifted);
  CHECK(is_sifted(terminal_cat()).sifted);
  auto par = is_sifted(parallel_pair_cat());
  CHECK(!par.sifted);
  REQUIRE(par.witness.has_value());
  CHECK(par.witness->components.size() >= 2);
  auto disc = is_sifted(discrete_cat(2));
  CHECK(!disc.sifted);
  REQUIRE(disc.witness.has_value());
  CHECK(!is_sifted(span_cat()).sifted);
  auto empty = is_sifted(discrete_cat(0));
  CHECK(!empty.sifted);
  REQUIRE(empty.witness.has_value());
  CHECK(empty.witness->empty_category);
}

TEST_CASE("shipped siftedness battery agrees with is_sifted") {
  for (const auto& c : fixtures::sifted_test_categories())
    CHECK(is_sifted(c.cat).sifted == c.sifted);
}

TEST_CASE("idempotent splitting of the reflexive-graph base") {
  auto sp = split_idempotents(fixtures::rgph_base());
  CHECK(sp.cat->num_objects() == 4);
  CHECK(sp.cat->num_morphisms() == 21);
  CHECK(idempotents(*sp.cat).size() == sp.cat->num_objects() + 2);
  // splitting the already-split graph base adds only the identity objects
  auto sp2 = split_idempotents(fixtures::gph_base());
  CHECK(sp2.cat->num_objects() == 2);
}

TEST_CASE("fam completion truncates at the family bound") {
  auto fam = fam_completion(fixtures::gph_base(), 2);
  CHECK(fam.truncated);
  CHECK(fam.cat->num_objects() == 6);   // ∅, v, e, v+v, v+e, e+e
  CHECK(fam.cat->num_morphisms() == 75);
  // the embedding lands on the singleton families
  CHECK(fam.embedding.source().num_objects() == 2);
}

TEST_CASE("injections category sizes") {
  CHECK(fixtures::inj_cat(1)->num_morphisms() == 3);  // two identities and 0↪1
  auto c2 = fixtures::inj_cat(2);
  CHECK(c2->num_objects() == 3);
  CHECK(c2->num_morphisms() == 8);
  auto o1 = *c2->object_index("1"), o2 = *c2->object_index("2");
  CHECK(c2->hom(o1, o2).size() == 2);
  CHECK(c2->hom(o2, o1).empty());
}
