#include "doctest.h"

#include "ct/fixtures.hpp"
#include "ct/models.hpp"
#include "ct/presheaf_ops.hpp"

using namespace ct;

namespace {

Model z2_comm_monoid() {
  return Model{fixtures::comm_monoid_theory(), {FinSet(2)}, {{0, 1, 1, 0}, {0}}};
}

}  // namespace

TEST_CASE("model checking accepts the fixtures and catches tampering") {
  CHECK(check_model(fixtures::z2_group()).ok);
  CHECK(check_model(fixtures::z4_group()).ok);
  CHECK(check_model(fixtures::left_zero_unit_monoid()).ok);
  CHECK(check_model(z2_comm_monoid()).ok);
  Model broken = fixtures::z2_group();
  broken.tables[0][1] = 0;  // 0+1 := 0 breaks the unit law
  auto rep = check_model(broken);
  CHECK(!rep.ok);
  CHECK(rep.lhs != rep.rhs);
}

TEST_CASE("evaluation of terms in a model") {
  Model z4 = fixtures::z4_group();
  const Signature& sig = z4.theory->sig();
  Term x = Term::make_var(0, 0);
  Term xx = Term::make_app(sig, 0, {x, x});
  CHECK(z4.eval(xx, {3}) == 2);
  CHECK(z4.eval(Term::make_app(sig, 2, {x}), {1}) == 3);
  CHECK(z4.eval(Term::make_app(sig, 1, {}), {0}) == 0);
}

TEST_CASE("homomorphism enumeration between small groups") {
  Model z2 = fixtures::z2_group(), z4 = fixtures::z4_group();
  CHECK(hom_models(z2, z2).size() == 2);
  CHECK(hom_models(z4, z2).size() == 2);
  CHECK(hom_models(z2, z4).size() == 2);  // trivial and x ↦ 2
  for (const auto& h : hom_models(z2, z4)) CHECK(is_model_hom(z2, z4, h));
  std::string why;
  ModelHom bad{{FinFunction(2, 4, {0, 1})}};
  CHECK(!is_model_hom(z2, z4, bad, &why));
  CHECK(!why.empty());
}

TEST_CASE("hom composition and identity") {
  Model z2 = fixtures::z2_group();
  auto homs = hom_models(z2, z2);
  auto id = identity_model_hom(z2);
  for (const auto& f : homs) {
    CHECK(compose_model_hom(f, id) == f);
    CHECK(compose_model_hom(id, f) == f);
  }
}

TEST_CASE("products and equalizers of models") {
  Model z2 = fixtures::z2_group();
  auto pr = product_of_models(z2, z2);
  CHECK(check_model(pr.model).ok);
  CHECK(pr.model.carriers[0].size() == 4);
  CHECK(is_model_hom(pr.model, z2, pr.p1));
  CHECK(is_model_hom(pr.model, z2, pr.p2));
  auto homs = hom_models(z2, z2);  // trivial map first, identity second
  auto eq = equalizer_of_models(z2, z2, homs[0], homs[1]);
  CHECK(eq.model.carriers[0].size() == 1);
  CHECK(is_model_hom(eq.model, z2, eq.include));
}

TEST_CASE("exhaustive model enumeration") {
  CHECK(all_models(fixtures::group_theory(), {2}).size() == 2);
  CHECK(all_models(fixtures::group_theory(), {3}).size() == 3);
  CHECK(all_models(fixtures::semilattice_theory(), {2}).size() == 2);
  CHECK_THROWS_AS(all_models(fixtures::group_theory(), {3}, 10), SearchSpaceTooLarge);
}

TEST_CASE("quotient by congruence") {
  auto q = quotient_by_congruence(fixtures::z4_group(), {{0, 0, 2}});
  CHECK(q.model.carriers[0].size() == 2);
  CHECK(check_model(q.model).ok);
  CHECK(is_model_hom(fixtures::z4_group(), q.model, q.quotient));
  // quotienting 1 ~ 0 collapses everything
  auto all = quotient_by_congruence(fixtures::z4_group(), {{0, 0, 1}});
  CHECK(all.model.carriers[0].size() == 1);
}

TEST_CASE("free models by bounded closure") {
  auto fsl = free_model(fixtures::semilattice_theory(), {0, 0}, 3);
  CHECK(fsl.saturated);
  REQUIRE(fsl.model.has_value());
  CHECK(fsl.elements[0].size() == 4);
  CHECK(check_model(*fsl.model).ok);
  CHECK(fsl.generator_pos.size() == 2);
  auto fg = free_model(fixtures::group_theory(), {0}, 3);
  CHECK(!fg.saturated);
  CHECK(!fg.model.has_value());
  CHECK(fg.elements[0].size() == 13);
}

TEST_CASE("sifted colimits of models compute reflexive coequalizers") {
  auto pt = fixtures::pointed_theory();
  Model n{pt, {FinSet(2)}, {{0}}};
  Model m{pt, {FinSet(3)}, {{0}}};
  ModelHom s{{FinFunction(2, 3, {0, 1})}};
  ModelHom f{{FinFunction(3, 2, {0, 1, 0})}};
  ModelHom g{{FinFunction(3, 2, {0, 1, 1})}};
  REQUIRE(is_model_hom(n, m, s));
  REQUIRE(is_model_hom(m, n, f));
  REQUIRE(is_model_hom(m, n, g));
  // reflexive_pair_cat morphisms: id_P, id_Q, f, g, s, s∘f, s∘g
  ModelDiagram d{reflexive_pair_cat(),
                 {m, n},
                 {identity_model_hom(m), identity_model_hom(n), f, g, s,
                  compose_model_hom(f, s), compose_model_hom(g, s)}};
  auto colim = sifted_colimit_of_models(d);
  CHECK(colim.model.carriers[0].size() == 1);  // f and g glue both elements
  CHECK(check_model(colim.model).ok);
  CHECK(is_model_hom(m, colim.model, colim.inject[0]));
}

TEST_CASE("restriction along a theory morphism") {
  auto ab = fixtures::monoid_to_comm_monoid();
  Model underlying = restrict_model(ab, z2_comm_monoid());
  CHECK(underlying.theory == ab.source);
  CHECK(check_model(underlying).ok);
  CHECK(underlying.carriers[0].size() == 2);
}

TEST_CASE("algebraic left adjoints with certified universal property") {
  auto ab = fixtures::monoid_to_comm_monoid();
  auto res = left_adjoint_algebraic(ab, fixtures::left_zero_unit_monoid(), 3);
  CHECK(res.model.carriers[0].size() == 2);
  CHECK(res.unit_ok);
  CHECK(res.certificate.ok);
  CHECK(res.certificate.models_checked == 32);
  CHECK(check_model(res.model).ok);

  auto free2 = left_adjoint_algebraic(fixtures::empty_to(fixtures::semilattice_theory()),
                                      fixtures::set_model(fixtures::empty_theory(), 2), 3);
  CHECK(free2.model.carriers[0].size() == 4);
  CHECK(free2.unit_ok);
  CHECK(free2.certificate.ok);
  CHECK(!free2.truncated);
}
