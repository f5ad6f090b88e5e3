#include "doctest.h"

#include "ct/fixtures.hpp"
#include "ct/monadic.hpp"

using namespace ct;

TEST_CASE("monad slices from theories") {
  auto pt = monad_from_theory(fixtures::pointed_theory(), 2, 1);
  CHECK(pt.size() == 3);  // x0, x1, pt
  CHECK(pt.saturated);
  CHECK(pt.eta.size() == 2);
  CHECK(pt.index_of(Term::make_var(0, 0)).has_value());

  auto grp = monad_from_theory(fixtures::group_theory(), 1, 2);
  CHECK(grp.size() == 7);
  CHECK(!grp.saturated);

  auto mon = monad_from_theory(fixtures::monoid_theory(), 1, 2);
  CHECK(mon.size() == 5);
  CHECK(!mon.saturated);
}

TEST_CASE("the monad acts on functions") {
  auto s2 = monad_from_theory(fixtures::pointed_theory(), 2, 1);
  auto s1 = monad_from_theory(fixtures::pointed_theory(), 1, 1);
  auto tf = monad_on_function(s2, s1, FinFunction(2, 1, {0, 0}));
  CHECK(tf.src_size == 3);
  CHECK(tf.dst_size == 2);
  auto tid = monad_on_function(s2, s2, FinFunction::identity(2));
  CHECK(tid == FinFunction::identity(3));
}

TEST_CASE("monad laws hold on checked slices") {
  for (const char* name : {"empty", "pointed", "semilattice"}) {
    auto rep = monad_law_report(fixtures::theory_by_name(name), 2, 2);
    CHECK(rep.ok());
  }
  auto mon = monad_law_report(fixtures::monoid_theory(), 1, 2, 1);
  CHECK(mon.ok());
  CHECK(mon.truncated);
  CHECK(mon.assoc_checked > 0);
}

TEST_CASE("multiplication flattens iterated slices") {
  auto sx = monad_from_theory(fixtures::pointed_theory(), 1, 2);
  auto ttx = iterate_slice(sx, 2);
  auto mu = mu_map(sx, ttx);
  CHECK(mu.size() == ttx.size());
  for (const auto& c : mu) CHECK(c.has_value());  // pointed slices saturate
}

TEST_CASE("theory-monad-theory roundtrip") {
  auto e = roundtrip_check(fixtures::empty_theory(), 3, 2);
  CHECK(e.ok);
  CHECK(!e.truncated);
  auto p = roundtrip_check(fixtures::pointed_theory(), 3, 2);
  CHECK(p.ok);
  CHECK(!p.truncated);
  CHECK(p.compositions_checked > 0);
  bool found = false;
  for (auto [m, k, via_monad, via_theory] : p.cardinalities)
    if (m == 1 && k == 1) {
      found = true;
      CHECK(via_monad == 2);
      CHECK(via_theory == 2);
    }
  CHECK(found);
  auto mo = roundtrip_check(fixtures::monoid_theory(), 2, 2);
  CHECK(mo.ok);
  CHECK(mo.truncated);
}

TEST_CASE("theory slice extracted from the monad") {
  auto slice = theory_from_monad(fixtures::pointed_theory(), 2, 2);
  CHECK(!slice.truncated);
  CHECK(slice.at(1, 1).size() == 2);
  CHECK(slice.at(2, 1).size() == 3);
  CHECK(slice.at(0, 1).size() == 1);  // only the point
  CHECK(slice.at(1, 0).size() == 1);  // the empty tuple
}

TEST_CASE("Eilenberg-Moore algebras correspond to models") {
  auto pt = em_model_correspondence(fixtures::pointed_theory(), 2, 1, 1);
  CHECK(pt.ok);
  CHECK(pt.exhaustive);
  CHECK(pt.models == 2);
  CHECK(pt.algebras == 2);
  auto grp = em_model_correspondence(fixtures::group_theory(), 2, 1, 1);
  CHECK(grp.ok);
  CHECK(grp.truncated);
  CHECK(grp.models == 2);
}

TEST_CASE("evaluation and readoff are mutually inverse") {
  auto sx = monad_from_theory(fixtures::group_theory(), 2, 1);
  Model z2 = fixtures::z2_group();
  auto alg = evaluation_algebra(sx, z2);
  CHECK(alg.structure.src_size == sx.size());
  CHECK(alg.structure.dst_size == 2);
  Model back = readoff_model(sx, alg);
  CHECK(back.tables == z2.tables);
  auto ttx = iterate_slice(sx, 1);
  CHECK(em_algebra_laws(sx, ttx, alg));
}
