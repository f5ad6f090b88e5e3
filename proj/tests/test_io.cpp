#include "doctest.h"

#include "ct/fixtures.hpp"
#include "ct/io.hpp"
#include "ct/models.hpp"
#include "ct/presheaf_ops.hpp"

using namespace ct;

namespace {

CatPtr base_by_name(const std::string& name) {
  if (name == "gph") return fixtures::gph_base();
  if (name == "rgph") return fixtures::rgph_base();
  throw io::ParseError("unknown base `" + name + "`");
}

}  // namespace

TEST_CASE("category files round-trip through print and parse") {
  for (CatPtr c : {fixtures::gph_base(), fixtures::rgph_base(), reflexive_pair_cat()}) {
    auto back = io::parse_category(io::print_category(*c, "c"));
    CHECK(back.name == "c");
    CHECK(back.cat->num_objects() == c->num_objects());
    CHECK(back.cat->num_morphisms() == c->num_morphisms());
    for (std::size_t m = 0; m < c->num_morphisms(); ++m) {
      auto idx = back.cat->mor_index(c->mor(m).id);
      REQUIRE(idx.has_value());
      CHECK(back.cat->src(*idx) == c->src(m));
    }
  }
}

TEST_CASE("parsing a hand-written category file") {
  std::string text =
      "category\n"
      "name: gph\n"
      "objects: v, e\n"
      "morphisms:\n"
      "  s: v -> e\n"
      "  t: v -> e\n"
      "compose:\n";
  auto named = io::parse_category(text);
  CHECK(named.name == "gph");
  CHECK(named.cat->num_morphisms() == 4);  // identities are implicit
  CHECK_THROWS_AS(io::parse_category("category\nname: x\nobjects: a\nbogus: 1\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_category("presheaf\nname: x\n"), io::ParseError);
}

TEST_CASE("presheaf files round-trip through print and parse") {
  for (PshPtr p : {fixtures::gph_E(), fixtures::gph_terminal(),
                   Presheaf::representable(fixtures::rgph_base(), 1)}) {
    std::string base = p->base().num_morphisms() == 4 ? "gph" : "rgph";
    auto back = io::parse_presheaf(io::print_presheaf(*p, base), base_by_name);
    CHECK(back->same_shape(*p));
  }
  // an ill-formed action is rejected at construction
  std::string bad =
      "presheaf\nname: P\nbase: gph\nsets:\n  v: a\n  e: x\nactions:\n  s: x -> a\n";
  CHECK_THROWS(io::parse_presheaf(bad, base_by_name));
}

TEST_CASE("theory files round-trip through print and parse") {
  for (const char* name : {"monoid", "group", "semilattice", "comm-monoid"}) {
    auto t = fixtures::theory_by_name(name);
    auto back = io::parse_theory(io::print_theory(*t));
    CHECK(back->name() == t->name());
    CHECK(back->sig().ops.size() == t->sig().ops.size());
    CHECK(back->sig().ac.size() == t->sig().ac.size());
    CHECK(back->rules().rules.size() == t->rules().rules.size());
    CHECK(back->confluence_clean());
    // the parsed copy generates the same bounded hom-sets
    if (back->sig().sorts.size() == 1) {
      auto a = hom_enumerate(*t, t->ctx(1), t->ctx(1), 2);
      auto b = hom_enumerate(*back, back->ctx(1), back->ctx(1), 2);
      CHECK(a.homs.size() == b.homs.size());
    }
  }
}

TEST_CASE("the unsafe gate applies to parsed theories") {
  std::string text =
      "theory\nname: bad\nsorts: x\nops:\n  a: -> x\n  b: -> x\n  c: -> x\n"
      "rules:\n  a -> b\n  a -> c\n";
  CHECK_THROWS_AS(io::parse_theory(text), UnsafeTheory);
  auto t = io::parse_theory(text, /*allow_unsafe=*/true);
  CHECK(!t->confluence_clean());
}

TEST_CASE("term parsing uses the declared context") {
  auto mon = fixtures::monoid_theory();
  Term t = io::parse_term(mon->sig(), "m(x, m(y, e))", {"x", "y"}, {0, 0});
  CHECK(term_to_string(mon->sig(), t, {"x", "y"}) == "m(x, m(y, e))");
  CHECK_THROWS_AS(io::parse_term(mon->sig(), "m(x)", {"x"}, {0}), io::ParseError);
  CHECK_THROWS_AS(io::parse_term(mon->sig(), "m(x, z)", {"x"}, {0}), io::ParseError);
}

TEST_CASE("model files round-trip through print and parse") {
  auto resolve = [](const std::string& name) { return fixtures::theory_by_name(name); };
  for (Model m : {fixtures::z2_group(), fixtures::z4_group(), fixtures::left_zero_unit_monoid()}) {
    Model back = io::parse_model(io::print_model(m, m.theory->name()), resolve);
    CHECK(back.tables == m.tables);
    CHECK(back.carriers[0].size() == m.carriers[0].size());
    CHECK(check_model(back).ok);
  }
}

TEST_CASE("theory morphism files round-trip through print and parse") {
  auto ab = fixtures::monoid_to_comm_monoid();
  auto back = io::parse_theory_morphism(io::print_theory_morphism(ab), ab.source, ab.target);
  CHECK(back.sort_map == ab.sort_map);
  CHECK(back.op_map == ab.op_map);
  CHECK(check_theory_morphism(back).ok);
  // missing an operation entry is an error
  CHECK_THROWS_AS(io::parse_theory_morphism("morphism\nsorts:\n  x: x\nops:\n  e: e\n",
                                            ab.source, ab.target),
                  io::ParseError);
}
