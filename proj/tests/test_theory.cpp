#include "doctest.h"

#include "ct/fixtures.hpp"
#include "ct/theory.hpp"

using namespace ct;

TEST_CASE("builtin theories load confluent") {
  for (const char* name : {"empty", "pointed", "monoid", "group", "comm-monoid", "semilattice"}) {
    auto t = fixtures::theory_by_name(name);
    CHECK(t->name() == name);
    CHECK(t->confluence_clean());
  }
  CHECK_THROWS_AS(fixtures::theory_by_name("nosuch"), TheoryError);
}

TEST_CASE("loading a non-confluent presentation is gated") {
  Signature sig;
  sig.sorts = {"x"};
  sig.ops = {{"a", {}, 0}, {"b", {}, 0}, {"c", {}, 0}};
  RewriteSystem rs;
  rs.rules = {{{}, {}, Term::make_app(sig, 0, {}), Term::make_app(sig, 1, {})},
              {{}, {}, Term::make_app(sig, 0, {}), Term::make_app(sig, 2, {})}};
  CHECK_THROWS_AS(TheoryPresentation::load("bad", sig, rs), UnsafeTheory);
  auto t = TheoryPresentation::load("bad", sig, rs, /*allow_unsafe=*/true);
  CHECK(!t->confluence_clean());
}

TEST_CASE("normal-form closure saturates for finite theories") {
  auto sl = fixtures::semilattice_theory();
  auto nf = normal_forms(*sl, sl->ctx(2), 3);
  CHECK(nf.saturated);
  CHECK(nf.by_sort[0].size() == 4);  // x0, x1, e, x0∨x1
  auto grp = fixtures::group_theory();
  auto gf = normal_forms(*grp, grp->ctx(1), 3);
  CHECK(!gf.saturated);
  CHECK(gf.by_sort[0].size() == 13);
}

TEST_CASE("bounded hom-set enumeration") {
  auto grp = fixtures::group_theory();
  auto h = hom_enumerate(*grp, grp->ctx(1), grp->ctx(1), 3);
  CHECK(h.truncated);
  CHECK(h.homs.size() == 13);
  auto mon = fixtures::monoid_theory();
  auto hm = hom_enumerate(*mon, mon->ctx(1), mon->ctx(1), 2);
  CHECK(hm.truncated);
  CHECK(hm.homs.size() == 5);  // e, x, xx, xxx, xxxx
  auto pt = fixtures::pointed_theory();
  auto hp = hom_enumerate(*pt, pt->ctx(1), pt->ctx(1), 2);
  CHECK(!hp.truncated);
  CHECK(hp.homs.size() == 2);  // x0 and pt
  auto he = hom_enumerate(*fixtures::empty_theory(), fixtures::empty_theory()->ctx(2),
                          fixtures::empty_theory()->ctx(1), 2);
  CHECK(he.homs.size() == 2);  // the two projections
}

TEST_CASE("hom composition and identities") {
  auto pt = fixtures::pointed_theory();
  auto id1 = identity_hom(*pt, pt->ctx(1));
  auto homs = hom_enumerate(*pt, pt->ctx(1), pt->ctx(1), 2).homs;
  for (const auto& f : homs) {
    CHECK(compose_hom(*pt, f, id1) == f);
    CHECK(compose_hom(*pt, id1, f) == f);
  }
  // constant-at-the-point absorbs everything
  auto grp = fixtures::group_theory();
  Term e = Term::make_app(grp->sig(), 1, {});
  TheoryHom const_e{grp->ctx(1), grp->ctx(1), {e}};
  TheoryHom invert{grp->ctx(1), grp->ctx(1), {Term::make_app(grp->sig(), 2, {Term::make_var(0, 0)})}};
  CHECK(compose_hom(*grp, invert, const_e) == const_e);
  CHECK(compose_hom(*grp, invert, invert) == identity_hom(*grp, grp->ctx(1)));
}

TEST_CASE("finite products of contexts") {
  auto pt = fixtures::pointed_theory();
  auto rep = finite_product_check(*pt, pt->ctx(2), pt->ctx(1), pt->ctx(1), 2);
  CHECK(rep.ok);
  CHECK(rep.lhs == 9);
  CHECK(rep.rhs == 9);
  auto sl = fixtures::semilattice_theory();
  auto rs = finite_product_check(*sl, sl->ctx(1), sl->ctx(1), sl->ctx(1), 3);
  CHECK(rs.ok);
  CHECK(rs.lhs == rs.rhs);
}

TEST_CASE("theory morphisms translate rules to provable equations") {
  auto ab = fixtures::monoid_to_comm_monoid();
  CHECK(check_theory_morphism(ab).ok);
  // translation respects operations: m(x0, x1) lands on the AC product
  Term src = Term::make_app(ab.source->sig(), 0, {Term::make_var(0, 0), Term::make_var(1, 0)});
  Term img = translate(ab, src);
  CHECK(canonicalize(ab.target->sig(), img) ==
        translate(ab, Term::make_app(ab.source->sig(), 0,
                                     {Term::make_var(1, 0), Term::make_var(0, 0)})));
  CHECK(check_theory_morphism(fixtures::empty_to(fixtures::semilattice_theory())).ok);
}

TEST_CASE("a rule-breaking morphism is rejected") {
  // monoid → pointed sending m to x0 breaks the right-unit law? no: m(x,e) ↦ x0 holds.
  // Send m to pt instead: m(e,x) = x translates to pt = x0, which fails.
  auto mon = fixtures::monoid_theory();
  auto pt = fixtures::pointed_theory();
  TheoryMorphism g{mon, pt, {0}, {Term::make_app(pt->sig(), 0, {}), Term::make_app(pt->sig(), 0, {})}};
  auto rep = check_theory_morphism(g);
  CHECK(!rep.ok);
  CHECK(rep.failing_rule.has_value());
}
