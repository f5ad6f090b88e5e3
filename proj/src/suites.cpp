#include "ct/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ct/fincat_ops.hpp"
#include "ct/fixtures.hpp"
#include "ct/models.hpp"
#include "ct/monadic.hpp"
#include "ct/presheaf_ops.hpp"

namespace ct::suites {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::size_t rnd(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(g() % (hi - lo + 1));
}

FinFunction random_function(std::mt19937_64& g, std::size_t m, std::size_t n) {
  std::vector<std::size_t> map(m);
  for (auto& v : map) v = rnd(g, 0, n - 1);
  return FinFunction(m, n, std::move(map));
}

PresheafMap id_map(const PshPtr& p) {
  std::vector<FinFunction> v;
  for (std::size_t o = 0; o < p->base().num_objects(); ++o)
    v.push_back(FinFunction::identity(p->at(o).size()));
  return PresheafMap(p, p, std::move(v));
}

// any sets and any actions for s, t give a presheaf on the (free) graph base
PshPtr random_gph_presheaf(std::mt19937_64& g, std::size_t max_size, bool allow_empty) {
  std::size_t nv = rnd(g, allow_empty ? 0 : 1, max_size);
  std::size_t ne = nv == 0 ? 0 : rnd(g, 0, max_size);
  std::vector<FinFunction> actions{FinFunction::identity(nv), FinFunction::identity(ne),
                                   random_function(g, ne, nv), random_function(g, ne, nv)};
  return Presheaf::make(fixtures::gph_base(), {FinSet(nv), FinSet(ne)}, std::move(actions));
}

SetDiagram random_gph_set_diagram(std::mt19937_64& g, std::size_t max_size) {
  std::size_t dv = rnd(g, 1, max_size), de = rnd(g, 1, max_size);
  return SetDiagram(fixtures::gph_base(), {FinSet(dv), FinSet(de)},
                    {FinFunction::identity(dv), FinFunction::identity(de),
                     random_function(g, dv, de), random_function(g, dv, de)});
}

// ------------------------------------------------------------ example battery

bool check_decomposition(const PshPtr& p, const std::vector<std::size_t>& want) {
  auto d = decompose_into_representables(p);
  return d.ok() && d.decomposition->summands == want && d.decomposition->iso.is_isomorphism();
}

SuiteItem graph_products_item() {
  SuiteItem item{"gph-representable-products"};
  PshPtr v = fixtures::gph_V(), e = fixtures::gph_E();
  struct Case {
    PshPtr p;
    std::vector<std::size_t> want;
  };
  std::vector<Case> cases{{product(v, v).product, {0}},
                          {product(v, e).product, {0, 0}},
                          {product(e, v).product, {0, 0}},
                          {product(e, e).product, {0, 0, 1}}};
  for (auto& c : cases) {
    ++item.instances;
    if (!check_decomposition(c.p, c.want)) ++item.failures;
  }
  return item;
}

SuiteItem graph_preservation_item() {
  SuiteItem item{"gph-hom-not-cocontinuous"};
  item.instances = 1;
  auto coeq = fixtures::gph_reflexive_coequalizer();
  PshPtr one = fixtures::gph_terminal();
  bool ok = coeq.colimit->at(0).size() == 1 && coeq.colimit->at(1).size() == 1 &&
            nat_transformations(one, fixtures::gph_E()).empty() &&
            nat_transformations(one, one).size() == 1;
  auto rep = preserves_colimit(one, coeq);
  ok = ok && !rep.preserved && rep.colim_of_homs == 0 && rep.homs_of_colim == 1;
  if (!ok) ++item.failures;
  return item;
}

SuiteItem rgph_item() {
  SuiteItem item{"rgph-product-counterexample"};
  item.instances = 1;
  PshPtr e = Presheaf::representable(fixtures::rgph_base(), 1);
  auto pe = product(e, e).product;
  bool ok = pe->at(0).size() == 4 && pe->at(1).size() == 9 &&
            !is_strongly_finitely_presentable(pe) && is_strongly_finitely_presentable(e);
  if (!ok) ++item.failures;
  return item;
}

SuiteItem inj_binomial_item() {
  SuiteItem item{"inj-binomial-decomposition"};
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      ++item.instances;
      std::size_t k = m + n;
      std::vector<std::size_t> want;
      for (std::size_t j = std::max(m, n); j <= k; ++j) {
        // overlap of size r = k - j can be matched up in r! ways
        std::size_t r = k - j, fact = 1;
        for (std::size_t i = 2; i <= r; ++i) fact *= i;
        std::size_t mult = binom(m, r) * binom(n, r) * fact;
        want.insert(want.end(), mult, j);
      }
      if (!check_decomposition(product(fixtures::inj_y(m, k), fixtures::inj_y(n, k)).product,
                               want)) {
        ++item.failures;
        item.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  return item;
}

SuiteItem siftedness_item(std::size_t set_bound) {
  SuiteItem item{"sifted-iff-products-commute"};
  for (const auto& c : fixtures::sifted_test_categories()) {
    ++item.instances;
    auto diagrams = all_set_diagrams(c.cat, set_bound);
    auto rep = commutes_products_colimit(diagrams, true);
    bool agree = is_sifted(c.cat).sifted == c.sifted && rep.commutes == c.sifted &&
                 rep.witness_found == !c.sifted;
    if (!agree) {
      ++item.failures;
      item.detail = c.name;
    }
  }
  return item;
}

SuiteItem roundtrip_item() {
  SuiteItem item{"theory-monad-roundtrip"};
  struct Case {
    ThPtr t;
    std::size_t arity, depth;
    bool allow_truncated;
  };
  std::vector<Case> cases{{fixtures::empty_theory(), 3, 2, false},
                          {fixtures::pointed_theory(), 3, 2, false},
                          {fixtures::monoid_theory(), 2, 2, true}};
  for (auto& c : cases) {
    ++item.instances;
    auto rep = roundtrip_check(c.t, c.arity, c.depth);
    if (!rep.ok || (!c.allow_truncated && rep.truncated)) {
      ++item.failures;
      item.detail = c.t->name() + ": " + rep.detail;
    }
  }
  return item;
}

SuiteItem em_item() {
  SuiteItem item{"eilenberg-moore-vs-models"};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (ThPtr t : {fixtures::pointed_theory(), fixtures::group_theory()}) {
      ++item.instances;
      auto rep = em_model_correspondence(t, n, 1, 1);
      if (!rep.ok) {
        ++item.failures;
        item.detail = t->name() + "@" + std::to_string(n) + ": " + rep.detail;
      }
    }
  }
  return item;
}

SuiteItem adjoint_item() {
  SuiteItem item{"algebraic-left-adjoints"};
  item.instances = 2;
  auto ab = left_adjoint_algebraic(fixtures::monoid_to_comm_monoid(),
                                   fixtures::left_zero_unit_monoid(), 3);
  if (!(ab.unit_ok && ab.certificate.ok && ab.model.carriers[0].size() == 2)) {
    ++item.failures;
    item.detail = "abelianization: " + ab.certificate.detail;
  }
  auto sl = fixtures::semilattice_theory();
  auto free2 = left_adjoint_algebraic(fixtures::empty_to(sl),
                                      fixtures::set_model(fixtures::empty_theory(), 2), 3);
  if (!(free2.unit_ok && free2.certificate.ok && free2.model.carriers[0].size() == 4)) {
    ++item.failures;
    item.detail += " free-semilattice: " + free2.certificate.detail;
  }
  return item;
}

SuiteItem homset_item() {
  SuiteItem item{"bounded-homsets"};
  item.instances = 2;
  auto grp = hom_enumerate(*fixtures::group_theory(), fixtures::group_theory()->ctx(1),
                           fixtures::group_theory()->ctx(1), 3);
  if (!(grp.homs.size() == 13 && grp.truncated)) ++item.failures;
  auto mon = hom_enumerate(*fixtures::monoid_theory(), fixtures::monoid_theory()->ctx(1),
                           fixtures::monoid_theory()->ctx(1), 2);
  if (!(mon.homs.size() == 5 && mon.truncated)) ++item.failures;
  return item;
}

SuiteItem quotient_item() {
  SuiteItem item{"quotients-and-free-models"};
  item.instances = 2;
  auto q = quotient_by_congruence(fixtures::z4_group(), {{0, 0, 2}});
  if (!(q.model.carriers[0].size() == 2 && check_model(q.model).ok)) ++item.failures;
  auto free2 = free_model(fixtures::semilattice_theory(), {0, 0}, 3);
  if (!(free2.saturated && free2.elements[0].size() == 4 && free2.model &&
        check_model(*free2.model).ok))
    ++item.failures;
  return item;
}

// --------------------------------------------------------- property helpers

bool yoneda_instance(std::mt19937_64& g, std::size_t which) {
  CatPtr base;
  PshPtr p;
  if (which % 2 == 0) {
    base = fixtures::gph_base();
    p = random_gph_presheaf(g, 3, true);
  } else {
    base = which % 4 == 1 ? fixtures::rgph_base() : fixtures::inj_cat(2);
    std::vector<PshPtr> parts;
    std::size_t k = rnd(g, 1, 3);
    for (std::size_t i = 0; i < k; ++i)
      parts.push_back(Presheaf::representable(base, rnd(g, 0, base->num_objects() - 1)));
    p = coproduct(parts).colimit;
  }
  std::size_t c = rnd(g, 0, base->num_objects() - 1);
  auto nats = nat_transformations(Presheaf::representable(base, c), p);
  std::vector<PresheafMap> via_yoneda;
  for (std::size_t x = 0; x < p->at(c).size(); ++x) via_yoneda.push_back(yoneda_map(p, c, x));
  std::sort(nats.begin(), nats.end());
  std::sort(via_yoneda.begin(), via_yoneda.end());
  return nats == via_yoneda;
}

bool pointwise_instance(std::mt19937_64& g, std::size_t which) {
  static const std::vector<CatPtr> shapes{discrete_cat(2), parallel_pair_cat(), span_cat(),
                                          cospan_cat(), terminal_cat()};
  const CatPtr& shape = shapes[which % shapes.size()];
  std::vector<PshPtr> at;
  std::vector<PresheafMap> arrow;
  bool built = false;
  for (std::size_t attempt = 0; attempt < 10 && !built; ++attempt) {
    at.clear();
    arrow.clear();
    for (std::size_t o = 0; o < shape->num_objects(); ++o)
      at.push_back(random_gph_presheaf(g, 2, true));
    built = true;
    for (std::size_t m = 0; m < shape->num_morphisms() && built; ++m) {
      if (shape->is_identity(m)) {
        arrow.push_back(id_map(at[shape->src(m)]));
        continue;
      }
      auto nats = nat_transformations(at[shape->src(m)], at[shape->dst(m)]);
      if (nats.empty()) {
        built = false;
        break;
      }
      arrow.push_back(nats[rnd(g, 0, nats.size() - 1)]);
    }
  }
  if (!built) {
    // degenerate but valid: a constant diagram on one presheaf
    at.assign(shape->num_objects(), at[0]);
    arrow.clear();
    for (std::size_t m = 0; m < shape->num_morphisms(); ++m) arrow.push_back(id_map(at[0]));
  }
  PshDiagram d{shape, at, arrow};
  auto lim = finite_limit(d);
  auto colim = finite_colimit(d);
  const FinCat& base = *fixtures::gph_base();
  for (std::size_t o = 0; o < base.num_objects(); ++o) {
    std::vector<FinSet> sets;
    std::vector<FinFunction> fns;
    for (const auto& p : at) sets.push_back(p->at(o));
    for (std::size_t m = 0; m < shape->num_morphisms(); ++m) fns.push_back(arrow[m].at(o));
    SetDiagram so(shape, std::move(sets), std::move(fns));
    if (lim.limit->at(o).size() != limit_finset(so).set.size()) return false;
    if (colim.colimit->at(o).size() != colimit_finset(so).set.size()) return false;
  }
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
    if (!(arrow[m].after(lim.projections[shape->src(m)]) == lim.projections[shape->dst(m)]))
      return false;
    if (!(colim.injections[shape->dst(m)].after(arrow[m]) == colim.injections[shape->src(m)]))
      return false;
  }
  return true;
}

bool exponential_instance(std::mt19937_64& g) {
  PshPtr p = random_gph_presheaf(g, 2, true);
  PshPtr q = random_gph_presheaf(g, 2, true);
  PshPtr r = random_gph_presheaf(g, 2, true);
  std::size_t lhs = nat_transformations(product(p, q).product, r).size();
  std::size_t rhs = nat_transformations(p, exponential(q, r).object).size();
  return lhs == rhs;
}

// weighted colimit vs conical colimit of the diagram reindexed over el(W)^op
bool lan_weight_instance(std::mt19937_64& g) {
  PshPtr w = random_gph_presheaf(g, 2, true);
  SetDiagram d = random_gph_set_diagram(g, 3);
  auto wc = weighted_colimit(*w, d);

  auto el = category_of_elements(w);
  CatPtr eop = FinCat::op(el.cat);
  std::vector<FinSet> at;
  std::vector<std::size_t> offset{0};
  for (auto& [o, x] : el.elements) {
    at.push_back(d.at[o]);
    offset.push_back(offset.back() + d.at[o].size());
  }
  std::vector<FinFunction> arr;
  for (std::size_t m = 0; m < eop->num_morphisms(); ++m)
    arr.push_back(d.arrow[el.projection.on_mor(m)]);
  auto conical = colimit_finset(SetDiagram(eop, std::move(at), std::move(arr)));
  if (conical.set.size() != wc.set.size()) return false;

  // same partition of the raw (object, weight element, diagram element) triples
  std::vector<std::size_t> wcls, ccls;
  for (std::size_t i = 0; i < el.elements.size(); ++i) {
    auto [o, wi] = el.elements[i];
    for (std::size_t x = 0; x < d.at[o].size(); ++x) {
      wcls.push_back(wc.cls(o, wi, x));
      ccls.push_back(conical.inject[i](x));
    }
  }
  for (std::size_t i = 0; i < wcls.size(); ++i)
    for (std::size_t j = i + 1; j < wcls.size(); ++j)
      if ((wcls[i] == wcls[j]) != (ccls[i] == ccls[j])) return false;
  return true;
}

bool monad_law_instance(std::mt19937_64& g, std::size_t which) {
  ThPtr t;
  std::size_t n, depth, inner = 2;
  switch (which % 5) {
    case 0: t = fixtures::empty_theory(); n = rnd(g, 0, 3); depth = rnd(g, 1, 2); break;
    case 1: t = fixtures::pointed_theory(); n = rnd(g, 0, 3); depth = rnd(g, 1, 2); break;
    // the free monoid slices grow fast, so keep the iterated slice shallow
    case 2: t = fixtures::monoid_theory(); n = rnd(g, 0, 1); depth = 2; inner = 1; break;
    case 3: t = fixtures::comm_monoid_theory(); n = rnd(g, 0, 2); depth = 2; inner = 1; break;
    default: t = fixtures::semilattice_theory(); n = rnd(g, 0, 2); depth = 2; break;
  }
  return monad_law_report(t, n, depth, inner).ok();
}

Model set_like_model(const ThPtr& t, std::size_t n) {
  Model m;
  m.theory = t;
  m.carriers = {FinSet(n)};
  for (std::size_t op = 0; op < t->sig().ops.size(); ++op) m.tables.push_back({0});
  return m;
}

ModelHom hom1(std::size_t src, std::size_t dst, std::vector<std::size_t> map) {
  return ModelHom{{FinFunction(src, dst, std::move(map))}};
}

// a reflexive pair of models f, g: M ⇉ N with common section s
ModelDiagram random_reflexive_pair(const ThPtr& t, std::mt19937_64& g) {
  std::size_t nq = rnd(g, 1, 2), np = nq + rnd(g, 0, 2);
  Model m = set_like_model(t, np), n = set_like_model(t, nq);
  std::vector<std::size_t> sv(nq), fv(np), gv(np);
  for (std::size_t i = 0; i < nq; ++i) sv[i] = i;
  for (std::size_t i = 0; i < np; ++i) {
    fv[i] = i < nq ? i : rnd(g, 0, nq - 1);
    gv[i] = i < nq ? i : rnd(g, 0, nq - 1);
  }
  // the basepoint, if any, sits at 0 and every map above fixes it
  ModelHom s = hom1(nq, np, sv), f = hom1(np, nq, fv), gg = hom1(np, nq, gv);
  ModelDiagram d;
  d.shape = reflexive_pair_cat();
  d.at = {m, n};
  d.arrow = {identity_model_hom(m), identity_model_hom(n), f,
             gg,                    s,                     compose_model_hom(f, s),
             compose_model_hom(gg, s)};
  return d;
}

bool products_coeq_instance(std::mt19937_64& g, std::size_t which) {
  ThPtr t = which % 2 == 0 ? fixtures::pointed_theory() : fixtures::empty_theory();
  ModelDiagram d1 = random_reflexive_pair(t, g);
  ModelDiagram d2 = random_reflexive_pair(t, g);

  ModelDiagram d12;
  d12.shape = d1.shape;
  for (std::size_t o = 0; o < 2; ++o)
    d12.at.push_back(product_of_models(d1.at[o], d2.at[o]).model);
  for (std::size_t m = 0; m < d1.shape->num_morphisms(); ++m) {
    std::size_t so = d1.shape->src(m), to = d1.shape->dst(m);
    std::size_t s2 = d2.at[so].carriers[0].size(), t2 = d2.at[to].carriers[0].size();
    std::size_t src_size = d1.at[so].carriers[0].size() * s2;
    std::vector<std::size_t> map(src_size);
    for (std::size_t i = 0; i < d1.at[so].carriers[0].size(); ++i)
      for (std::size_t j = 0; j < s2; ++j)
        map[i * s2 + j] = d1.arrow[m].maps[0](i) * t2 + d2.arrow[m].maps[0](j);
    d12.arrow.push_back(hom1(src_size, d1.at[to].carriers[0].size() * t2, std::move(map)));
  }

  auto c12 = sifted_colimit_of_models(d12);
  auto c1 = sifted_colimit_of_models(d1);
  auto c2 = sifted_colimit_of_models(d2);
  auto prod = product_of_models(c1.model, c2.model);

  // the canonical map must be a well-defined model isomorphism
  std::size_t csz = c12.model.carriers[0].size();
  std::vector<std::size_t> can(csz, SIZE_MAX);
  for (std::size_t o = 0; o < 2; ++o) {
    std::size_t s2 = d2.at[o].carriers[0].size();
    for (std::size_t i = 0; i < d1.at[o].carriers[0].size(); ++i)
      for (std::size_t j = 0; j < s2; ++j) {
        std::size_t cls = c12.inject[o].maps[0](i * s2 + j);
        std::size_t img = c1.inject[o].maps[0](i) * c2.model.carriers[0].size() +
                          c2.inject[o].maps[0](j);
        if (can[cls] != SIZE_MAX && can[cls] != img) return false;
        can[cls] = img;
      }
  }
  for (auto v : can)
    if (v == SIZE_MAX) return false;
  FinFunction cf(csz, prod.model.carriers[0].size(), can);
  return cf.is_bijection() && is_model_hom(c12.model, prod.model, ModelHom{{cf}});
}

SuiteItem run_randomized(const std::string& name, std::uint64_t seed, std::size_t count,
                         const std::function<bool(std::mt19937_64&, std::size_t)>& instance) {
  SuiteItem item{name};
  std::mt19937_64 g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    ++item.instances;
    bool ok = false;
    std::string err;
    try {
      ok = instance(g, i);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!ok) {
      ++item.failures;
      if (item.detail.empty())
        item.detail = "instance " + std::to_string(i) + (err.empty() ? "" : ": " + err);
    }
  }
  return item;
}

}  // namespace

std::vector<SuiteItem> paper_examples(std::size_t sifted_set_bound) {
  return {graph_products_item(), graph_preservation_item(), rgph_item(),
          inj_binomial_item(),   siftedness_item(sifted_set_bound),
          roundtrip_item(),      em_item(),
          adjoint_item(),        homset_item(),
          quotient_item()};
}

std::vector<SuiteItem> property_suites(std::uint64_t seed, std::size_t per_suite) {
  auto sub = [&](std::uint64_t i) { return seed * 6364136223846793005ULL + i + 1; };
  return {
      run_randomized("yoneda-bijection", sub(0), per_suite,
                     [](std::mt19937_64& g, std::size_t i) { return yoneda_instance(g, i); }),
      run_randomized("pointwise-limits-colimits", sub(1), per_suite,
                     [](std::mt19937_64& g, std::size_t i) { return pointwise_instance(g, i); }),
      run_randomized("exponential-universal-property", sub(2), per_suite,
                     [](std::mt19937_64& g, std::size_t) { return exponential_instance(g); }),
      run_randomized("weighted-colimit-vs-elements", sub(3), per_suite,
                     [](std::mt19937_64& g, std::size_t) { return lan_weight_instance(g); }),
      run_randomized("monad-laws", sub(4), per_suite,
                     [](std::mt19937_64& g, std::size_t i) { return monad_law_instance(g, i); }),
      run_randomized(
          "products-commute-with-reflexive-coequalizers", sub(5), per_suite,
          [](std::mt19937_64& g, std::size_t i) { return products_coeq_instance(g, i); }),
  };
}

}  // namespace ct::suites
