// quick manual driver used while bringing the engine up; not registered with ctest
#include <cstdio>

#include "ct/fixtures.hpp"
#include "ct/models.hpp"
#include "ct/monadic.hpp"
#include "ct/presheaf_ops.hpp"

using namespace ct;

int main() {
  auto show = [](const char* what, const DecomposeResult& d) {
    std::printf("%s: ", what);
    if (!d.ok()) {
      std::printf("not decomposable (component of %zu elements)\n", d.failing_component.size());
      return;
    }
    for (auto s : d.decomposition->summands) std::printf("%zu ", s);
    std::printf("\n");
  };

  PshPtr V = fixtures::gph_V(), E = fixtures::gph_E();
  show("VxV", decompose_into_representables(product(V, V).product));
  show("VxE", decompose_into_representables(product(V, E).product));
  show("ExE", decompose_into_representables(product(E, E).product));
  show("1", decompose_into_representables(fixtures::gph_terminal()));

  auto coeq = fixtures::gph_reflexive_coequalizer();
  std::printf("coeq sets: %zu %zu\n", coeq.colimit->at(0).size(), coeq.colimit->at(1).size());
  auto pres = preserves_colimit(fixtures::gph_terminal(), coeq);
  std::printf("preserves: %d (%zu vs %zu)\n", pres.preserved, pres.colim_of_homs,
              pres.homs_of_colim);
  std::printf("Nat(1,E) = %zu, Nat(1,1) = %zu\n",
              nat_transformations(fixtures::gph_terminal(), E).size(),
              nat_transformations(fixtures::gph_terminal(), fixtures::gph_terminal()).size());

  // RGph: E×E fails decomposition after splitting
  CatPtr rg = fixtures::rgph_base();
  PshPtr rE = Presheaf::representable(rg, 1);
  auto pe = product(rE, rE).product;
  std::printf("RGph ExE sets: %zu %zu, sfp: %d\n", pe->at(0).size(), pe->at(1).size(),
              is_strongly_finitely_presentable(pe) ? 1 : 0);
  std::printf("Gph terminal sfp: %d\n",
              is_strongly_finitely_presentable(fixtures::gph_terminal()) ? 1 : 0);

  // I(1,-) x I(1,-) at K=2: expect summands {1, 2}
  auto i11 = product(fixtures::inj_y(1, 2), fixtures::inj_y(1, 2)).product;
  show("I(1)xI(1)@2", decompose_into_representables(i11));

  // theories
  auto grp = fixtures::group_theory();
  std::printf("group confluent: %d\n", grp->confluence_clean());
  auto hs = hom_enumerate(*grp, grp->ctx(1), grp->ctx(1), 3);
  std::printf("group hom(1,1)@3: %zu truncated=%d\n", hs.homs.size(), hs.truncated);
  auto sl = fixtures::semilattice_theory();
  auto free2 = free_model(sl, {0, 0}, 3);
  std::printf("free semilattice on 2: %zu saturated=%d\n", free2.elements[0].size(),
              free2.saturated);

  std::printf("z2 ok: %d, z4 ok: %d, lzu ok: %d\n", check_model(fixtures::z2_group()).ok,
              check_model(fixtures::z4_group()).ok,
              check_model(fixtures::left_zero_unit_monoid()).ok);
  auto q = quotient_by_congruence(fixtures::z4_group(), {{0, 0, 2}});
  std::printf("z4/(0~2): %zu elements, ok=%d\n", q.model.carriers[0].size(),
              check_model(q.model).ok);

  auto em = em_model_correspondence(fixtures::pointed_theory(), 2, 1);
  std::printf("EM pointed |X|=2: ok=%d models=%zu algebras=%zu detail=%s\n", em.ok, em.models,
              em.algebras, em.detail.c_str());

  auto ab = left_adjoint_algebraic(fixtures::monoid_to_comm_monoid(),
                                   fixtures::left_zero_unit_monoid(), 3);
  std::printf("abelianization: %zu elements, unit_ok=%d cert_ok=%d models=%zu detail=%s\n",
              ab.model.carriers[0].size(), ab.unit_ok, ab.certificate.ok,
              ab.certificate.models_checked, ab.certificate.detail.c_str());
  return 0;
}
