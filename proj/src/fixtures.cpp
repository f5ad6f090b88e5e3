#include "ct/fixtures.hpp"

#include <algorithm>
#include <map>

namespace ct::fixtures {

namespace {

PresheafMap identity_map(const PshPtr& p) {
  std::vector<FinFunction> comps;
  for (std::size_t o = 0; o < p->base().num_objects(); ++o)
    comps.push_back(FinFunction::identity(p->at(o).size()));
  return PresheafMap(p, p, std::move(comps));
}

}  // namespace

CatPtr gph_base() {
  static CatPtr cached = [] {
    RawCat raw;
  raw.objects = {"v", "e"};
    raw.morphisms = {{"id_v", 0, 0}, {"id_e", 1, 1}, {"s", 0, 1}, {"t", 0, 1}};
    return FinCat::validate(raw);
  }();
  return cached;
}

CatPtr rgph_base() {
  static CatPtr cached = [] {
  RawCat raw;
  raw.objects = {"v", "e"};
  // 0 id_v, 1 id_e, 2 s, 3 t, 4 r, 5 sr, 6 tr; rs = rt = id_v
  raw.morphisms = {{"id_v", 0, 0}, {"id_e", 1, 1}, {"s", 0, 1}, {"t", 0, 1},
                   {"r", 1, 0},    {"sr", 1, 1},   {"tr", 1, 1}};
  auto& c = raw.compose;
  c[{4, 2}] = 0;  // r∘s = id_v
  c[{4, 3}] = 0;  // r∘t = id_v
  c[{2, 4}] = 5;  // s∘r = sr
  c[{3, 4}] = 6;  // t∘r = tr
  c[{4, 5}] = 4;  // r∘sr = r
  c[{4, 6}] = 4;
  c[{5, 2}] = 2;  // sr∘s = s
  c[{5, 3}] = 2;
  c[{6, 2}] = 3;
  c[{6, 3}] = 3;
  c[{5, 5}] = 5;
  c[{5, 6}] = 5;
  c[{6, 5}] = 6;
  c[{6, 6}] = 6;
  return FinCat::validate(raw);
  }();
  return cached;
}

PshPtr gph_V() {
  auto p = Presheaf::representable(gph_base(), 0);
  const_cast<Presheaf&>(*p).set_label("V");
  return p;
}

PshPtr gph_E() {
  auto p = Presheaf::representable(gph_base(), 1);
  const_cast<Presheaf&>(*p).set_label("E");
  return p;
}

PshPtr gph_terminal() {
  auto p = terminal_presheaf(gph_base());
  const_cast<Presheaf&>(*p).set_label("1");
  return p;
}

ColimitResult gph_reflexive_coequalizer() {
  CatPtr base = gph_base();
  PshPtr e = Presheaf::representable(base, 1);
  PshPtr v = Presheaf::representable(base, 0);
  ColimitResult cp = coproduct({e, v});
  PshPtr ev = cp.colimit;
  // E(v) = {s, t}; the extra vertex goes to the edge's source under f and
  // to its target under g
  PresheafMap f(ev, e, {FinFunction(3, 2, {0, 1, 0}), FinFunction(1, 1, {0})});
  PresheafMap g(ev, e, {FinFunction(3, 2, {0, 1, 1}), FinFunction(1, 1, {0})});
  PresheafMap sec = cp.injections[0];  // E ↪ E+V, a common section
  PshDiagram d;
  d.shape = reflexive_pair_cat();
  d.at = {ev, e};
  d.arrow = {identity_map(ev), identity_map(e), f, g, sec, sec.after(f), sec.after(g)};
  return finite_colimit(d);
}

CatPtr inj_cat(std::size_t K) {
  static std::map<std::size_t, CatPtr> cache;
  if (auto it = cache.find(K); it != cache.end()) return it->second;
  std::vector<std::string> objects;
  for (std::size_t k = 0; k <= K; ++k) objects.push_back(std::to_string(k));
  // a morphism m → k is the value list of an injection
  struct Inj {
    std::size_t src, dst;
    std::vector<std::size_t> img;
  };
  std::vector<Inj> injs;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t m = 0; m <= K; ++m)
    for (std::size_t k = m; k <= K; ++k) {
      std::vector<std::size_t> img(m, 0);
      for (;;) {
        bool distinct = true;
        for (std::size_t i = 0; i < m && distinct; ++i)
          for (std::size_t j = i + 1; j < m && distinct; ++j)
            if (img[i] == img[j]) distinct = false;
        if (distinct) {
          index[{m, k, img}] = injs.size();
          injs.push_back({m, k, img});
        }
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
          --i;
          if (++img[i] < k) {
            done = false;
            break;
          }
          img[i] = 0;
        }
        if (done) break;
      }
    }
  std::vector<Mor> mors;
  for (const auto& f : injs) {
    std::string id = "i" + std::to_string(f.src) + ">" + std::to_string(f.dst) + "[";
    for (std::size_t i = 0; i < f.img.size(); ++i) {
      if (i) id += ",";
      id += std::to_string(f.img[i]);
    }
    mors.push_back({id + "]", f.src, f.dst});
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  for (std::size_t g = 0; g < injs.size(); ++g)
    for (std::size_t f = 0; f < injs.size(); ++f) {
      if (injs[f].dst != injs[g].src) continue;
      std::vector<std::size_t> img(injs[f].src);
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = injs[g].img[injs[f].img[i]];
      comp[{g, f}] = index.at({injs[f].src, injs[g].dst, img});
    }
  std::vector<std::size_t> idents;
  for (std::size_t k = 0; k <= K; ++k) {
    std::vector<std::size_t> img(k);
    std::iota(img.begin(), img.end(), std::size_t{0});
    idents.push_back(index.at({k, k, img}));
  }
  CatPtr cat;
  if (injs.size() <= 300) {
    RawCat raw;
    raw.objects = objects;
    raw.morphisms = mors;
    raw.compose = comp;
    raw.identities = idents;
    cat = FinCat::validate(raw);
  } else {
    cat = FinCat::from_trusted(std::move(objects), std::move(mors), std::move(comp),
                               std::move(idents));
  }
  cache[K] = cat;
  return cat;
}

PshPtr inj_y(std::size_t n, std::size_t K) {
  if (n > K) throw PresheafError("inj_y: generator arity exceeds the truncation");
  static std::map<std::size_t, CatPtr> op_cache;
  if (!op_cache.count(K)) op_cache[K] = FinCat::op(inj_cat(K));
  CatPtr base = op_cache[K];
  auto p = Presheaf::representable(base, n);
  const_cast<Presheaf&>(*p).set_label("I(" + std::to_string(n) + ",-)@" + std::to_string(K));
  return p;
}

std::vector<IndexCase> sifted_test_categories() {
  return {
      {"reflexive-pair", reflexive_pair_cat(), true},
      {"discrete-2", discrete_cat(2), false},
      {"pushout-span", span_cat(), false},
      {"terminal", terminal_cat(), true},
      {"parallel-pair", parallel_pair_cat(), false},
  };
}

ThPtr empty_theory() {
  static ThPtr cached = [] {
    Signature sig;
    sig.sorts = {"x"};
    return TheoryPresentation::load("empty", sig, {});
  }();
  return cached;
}

ThPtr pointed_theory() {
  static ThPtr cached = [] {
    Signature sig;
    sig.sorts = {"x"};
    sig.ops = {{"pt", {}, 0}};
    return TheoryPresentation::load("pointed", sig, {});
  }();
  return cached;
}

namespace {

// terms over a fixed signature, by shorthand
Term v(std::size_t i) { return Term::make_var(i, 0); }

}  // namespace

ThPtr monoid_theory() {
  static ThPtr cached = [] {
    Signature sig;
    sig.sorts = {"x"};
    sig.ops = {{"m", {0, 0}, 0}, {"e", {}, 0}};
    auto m = [&](Term a, Term b) { return Term::make_app(sig, 0, {std::move(a), std::move(b)}); };
    Term e = Term::make_app(sig, 1, {});
    RewriteSystem rs;
    rs.rules = {
        {{0}, {"x"}, m(e, v(0)), v(0)},
        {{0}, {"x"}, m(v(0), e), v(0)},
        {{0, 0, 0}, {"x", "y", "z"}, m(m(v(0), v(1)), v(2)), m(v(0), m(v(1), v(2)))},
    };
    return TheoryPresentation::load("monoid", sig, rs);
  }();
  return cached;
}

ThPtr group_theory() {
  static ThPtr cached = [] {
    Signature sig;
    sig.sorts = {"x"};
    sig.ops = {{"m", {0, 0}, 0}, {"e", {}, 0}, {"inv", {0}, 0}};
    auto m = [&](Term a, Term b) { return Term::make_app(sig, 0, {std::move(a), std::move(b)}); };
    auto inv = [&](Term a) { return Term::make_app(sig, 2, {std::move(a)}); };
    Term e = Term::make_app(sig, 1, {});
    // the complete ten-rule system for groups
    RewriteSystem rs;
    rs.rules = {
        {{0}, {"x"}, m(e, v(0)), v(0)},
        {{0}, {"x"}, m(v(0), e), v(0)},
        {{0}, {"x"}, m(inv(v(0)), v(0)), e},
        {{0}, {"x"}, m(v(0), inv(v(0))), e},
        {{0, 0, 0}, {"x", "y", "z"}, m(m(v(0), v(1)), v(2)), m(v(0), m(v(1), v(2)))},
        {{}, {}, inv(e), e},
        {{0}, {"x"}, inv(inv(v(0))), v(0)},
        {{0, 0}, {"x", "y"}, inv(m(v(0), v(1))), m(inv(v(1)), inv(v(0)))},
        {{0, 0}, {"x", "y"}, m(v(0), m(inv(v(0)), v(1))), v(1)},
        {{0, 0}, {"x", "y"}, m(inv(v(0)), m(v(0), v(1))), v(1)},
    };
    return TheoryPresentation::load("group", sig, rs);
  }();
  return cached;
}

ThPtr comm_monoid_theory() {
  static ThPtr cached = [] {
    Signature sig;
    sig.sorts = {"x"};
    sig.ops = {{"m", {0, 0}, 0}, {"e", {}, 0}};
    sig.ac = {{0, 1}};  // associativity, commutativity and the unit live in
                        // canonical forms, not rules
    return TheoryPresentation::load("comm-monoid", sig, {});
  }();
  return cached;
}

ThPtr semilattice_theory() {
  static ThPtr cached = [] {
    Signature sig;
    sig.sorts = {"x"};
    sig.ops = {{"j", {0, 0}, 0}, {"e", {}, 0}};
    sig.ac = {{0, 1}};
    auto j = [&](Term a, Term b) { return Term::make_app(sig, 0, {std::move(a), std::move(b)}); };
    RewriteSystem rs;
    rs.rules = {{{0}, {"x"}, j(v(0), v(0)), v(0)}};
    return TheoryPresentation::load("semilattice", sig, rs);
  }();
  return cached;
}

ThPtr theory_by_name(const std::string& name) {
  if (name == "empty") return empty_theory();
  if (name == "pointed") return pointed_theory();
  if (name == "monoid") return monoid_theory();
  if (name == "group") return group_theory();
  if (name == "comm-monoid") return comm_monoid_theory();
  if (name == "semilattice") return semilattice_theory();
  throw TheoryError("unknown theory " + name);
}

Model z2_group() {
  Model m;
  m.theory = group_theory();
  m.carriers = {FinSet({"0", "1"})};
  m.tables = {{0, 1, 1, 0}, {0}, {0, 1}};  // xor, e = 0, inv = id
  return m;
}

Model z4_group() {
  Model m;
  m.theory = group_theory();
  m.carriers = {FinSet({"0", "1", "2", "3"})};
  std::vector<std::size_t> add(16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) add[x * 4 + y] = (x + y) % 4;
  m.tables = {std::move(add), {0}, {0, 3, 2, 1}};
  return m;
}

Model left_zero_unit_monoid() {
  Model m;
  m.theory = monoid_theory();
  m.carriers = {FinSet({"1", "a", "b"})};
  // unit plus a left-zero semigroup on {a, b}
  m.tables = {{0, 1, 2, 1, 1, 1, 2, 2, 2}, {0}};
  return m;
}

Model set_model(const ThPtr& empty, std::size_t n) {
  Model m;
  m.theory = empty;
  m.carriers = {FinSet(n)};
  return m;
}

TheoryMorphism monoid_to_comm_monoid() {
  TheoryMorphism g;
  g.source = monoid_theory();
  g.target = comm_monoid_theory();
  g.sort_map = {0};
  const Signature& t = g.target->sig();
  g.op_map = {Term::make_app(t, 0, {Term::make_var(0, 0), Term::make_var(1, 0)}),
              Term::make_app(t, 1, {})};
  return g;
}

TheoryMorphism empty_to(const ThPtr& target) {
  TheoryMorphism g;
  g.source = empty_theory();
  g.target = target;
  g.sort_map = {0};
  return g;
}

}  // namespace ct::fixtures
