#include "ct/presheaf_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ct {

// ---------------------------------------------------------------- shapes

CatPtr discrete_cat(std::size_t n) {
  RawCat raw;
  for (std::size_t i = 0; i < n; ++i) {
    raw.objects.push_back("d" + std::to_string(i));
    raw.morphisms.push_back({"id_d" + std::to_string(i), i, i});
  }
  return FinCat::validate(raw);
}

CatPtr terminal_cat() { return discrete_cat(1); }

CatPtr parallel_pair_cat() {
  RawCat raw;
  raw.objects = {"P", "Q"};
  raw.morphisms = {{"id_P", 0, 0}, {"id_Q", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  return FinCat::validate(raw);
}

CatPtr reflexive_pair_cat() {
  RawCat raw;
  raw.objects = {"P", "Q"};
  // id_P, id_Q, f, g: P→Q, s: Q→P, sf, sg: P→P; fs = gs = id_Q
  raw.morphisms = {{"id_P", 0, 0}, {"id_Q", 1, 1}, {"f", 0, 1}, {"g", 0, 1},
                   {"s", 1, 0},    {"sf", 0, 0},   {"sg", 0, 0}};
  auto& c = raw.compose;
  // s∘f = sf, s∘g = sg, f∘s = id_Q, g∘s = id_Q
  c[{4, 2}] = 5;
  c[{4, 3}] = 6;
  c[{2, 4}] = 1;
  c[{3, 4}] = 1;
  // f∘sf = f, f∘sg = g? no: f∘(s∘g) = (f∘s)∘g = g; g∘sf = f; g∘sg = g
  c[{2, 5}] = 2;
  c[{2, 6}] = 3;
  c[{3, 5}] = 2;
  c[{3, 6}] = 3;
  // sf∘s = s, sg∘s = s
  c[{5, 4}] = 4;
  c[{6, 4}] = 4;
  // sf∘sf = sf, sf∘sg = sg, sg∘sf = sf, sg∘sg = sg
  c[{5, 5}] = 5;
  c[{5, 6}] = 6;
  c[{6, 5}] = 5;
  c[{6, 6}] = 6;
  return FinCat::validate(raw);
}

CatPtr span_cat() {
  RawCat raw;
  raw.objects = {"A", "B", "C"};
  raw.morphisms = {{"id_A", 0, 0}, {"id_B", 1, 1}, {"id_C", 2, 2}, {"l", 0, 1}, {"r", 0, 2}};
  return FinCat::validate(raw);
}

CatPtr cospan_cat() {
  RawCat raw;
  raw.objects = {"A", "B", "C"};
  raw.morphisms = {{"id_A", 0, 0}, {"id_B", 1, 1}, {"id_C", 2, 2}, {"l", 0, 2}, {"r", 1, 2}};
  return FinCat::validate(raw);
}

// ---------------------------------------------------------- FinSet (co)limits

SetLimit limit_finset(const SetDiagram& d) {
  const FinCat& j = *d.shape;
  std::size_t n = j.num_objects();
  SetLimit out;
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur(n, 0);
  bool any_empty = false;
  for (std::size_t o = 0; o < n; ++o)
    if (d.at[o].empty()) any_empty = true;
  if (!any_empty || n == 0) {
    for (;;) {
      bool ok = true;
      for (std::size_t m = 0; m < j.num_morphisms() && ok; ++m)
        if (d.arrow[m](cur[j.src(m)]) != cur[j.dst(m)]) ok = false;
      if (ok) tuples.push_back(cur);
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (++cur[i] < d.at[i].size()) {
          done = false;
          break;
        }
        cur[i] = 0;
      }
      if (done) break;
    }
  }
  std::vector<std::string> names;
  for (const auto& t : tuples) {
    std::string s = "(";
    for (std::size_t o = 0; o < n; ++o) {
      if (o) s += ",";
      s += d.at[o].name(t[o]);
    }
    names.push_back(s + ")");
  }
  out.set = FinSet(std::move(names));
  for (std::size_t o = 0; o < n; ++o) {
    std::vector<std::size_t> m(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) m[i] = tuples[i][o];
    out.project.emplace_back(tuples.size(), d.at[o].size(), std::move(m));
  }
  out.tuples = std::move(tuples);
  return out;
}

SetColimit colimit_finset(const SetDiagram& d) {
  const FinCat& j = *d.shape;
  std::vector<std::size_t> off(j.num_objects() + 1, 0);
  for (std::size_t o = 0; o < j.num_objects(); ++o) off[o + 1] = off[o] + d.at[o].size();
  UnionFind uf(off.back());
  for (std::size_t m = 0; m < j.num_morphisms(); ++m) {
    std::size_t a = j.src(m), b = j.dst(m);
    for (std::size_t x = 0; x < d.at[a].size(); ++x)
      uf.unite(off[a] + x, off[b] + d.arrow[m](x));
  }
  FinFunction q = uf.quotient_map();
  std::vector<std::string> names(q.dst_size);
  for (std::size_t o = 0; o < j.num_objects(); ++o)
    for (std::size_t x = 0; x < d.at[o].size(); ++x) {
      std::size_t cls = q(off[o] + x);
      if (names[cls].empty()) names[cls] = "[" + d.at[o].name(x) + "]";
    }
  SetColimit out;
  out.set = FinSet(std::move(names));
  for (std::size_t o = 0; o < j.num_objects(); ++o) {
    std::vector<std::size_t> m(d.at[o].size());
    for (std::size_t x = 0; x < d.at[o].size(); ++x) m[x] = q(off[o] + x);
    out.inject.emplace_back(d.at[o].size(), out.set.size(), std::move(m));
  }
  return out;
}

FinSet product_finset(const FinSet& a, const FinSet& b) {
  std::vector<std::string> names;
  names.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      names.push_back("(" + a.name(i) + "," + b.name(k) + ")");
  return FinSet(std::move(names));
}

// ---------------------------------------------------------- presheaf (co)limits

namespace {

void check_diagram(const PshDiagram& d) {
  const FinCat& j = *d.shape;
  if (d.at.size() != j.num_objects() || d.arrow.size() != j.num_morphisms())
    throw PresheafError("diagram tables have wrong length");
  const FinCat* base = d.at.empty() ? nullptr : &d.at[0]->base();
  for (const auto& p : d.at)
    if (&p->base() != base) throw PresheafError("BaseMismatch: diagram presheaves differ in base");
  for (std::size_t m = 0; m < j.num_morphisms(); ++m)
    if (d.arrow[m].source_ptr().get() != d.at[j.src(m)].get() ||
        d.arrow[m].target_ptr().get() != d.at[j.dst(m)].get())
      throw PresheafError("diagram arrow " + j.mor(m).id + " has wrong endpoints");
}

// evaluation of a presheaf diagram at a base object, as a FinSet diagram
SetDiagram evaluate_diagram(const PshDiagram& d, std::size_t c) {
  std::vector<FinSet> at;
  std::vector<FinFunction> arrow;
  for (const auto& p : d.at) at.push_back(p->at(c));
  for (const auto& a : d.arrow) arrow.push_back(a.at(c));
  return SetDiagram(d.shape, std::move(at), std::move(arrow));
}

}  // namespace

LimitResult finite_limit(const PshDiagram& d) {
  check_diagram(d);
  if (d.at.empty() && d.shape->num_objects() > 0)
    throw PresheafError("finite_limit: empty diagram over non-empty shape");
  if (d.shape->num_objects() == 0) throw PresheafError("finite_limit: use terminal_presheaf");
  CatPtr base = d.at[0]->base_ptr();
  const FinCat& c = *base;
  std::vector<SetLimit> lims;
  for (std::size_t o = 0; o < c.num_objects(); ++o) lims.push_back(limit_finset(evaluate_diagram(d, o)));
  // tuple lookup per base object
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(c.num_objects());
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    for (std::size_t i = 0; i < lims[o].tuples.size(); ++i) index[o][lims[o].tuples[i]] = i;
  std::vector<FinSet> sets;
  for (auto& l : lims) sets.push_back(l.set);
  std::vector<FinFunction> actions(c.num_morphisms());
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    std::size_t a = c.src(f), b = c.dst(f);
    std::vector<std::size_t> m(lims[b].tuples.size());
    for (std::size_t i = 0; i < lims[b].tuples.size(); ++i) {
      std::vector<std::size_t> t(lims[b].tuples[i].size());
      for (std::size_t o = 0; o < t.size(); ++o) t[o] = d.at[o]->action(f)(lims[b].tuples[i][o]);
      m[i] = index[a].at(t);
    }
    actions[f] = FinFunction(lims[b].tuples.size(), lims[a].tuples.size(), std::move(m));
  }
  PshPtr lim = Presheaf::make_unchecked(base, std::move(sets), std::move(actions), "lim");
  LimitResult out;
  out.limit = lim;
  for (std::size_t o = 0; o < d.at.size(); ++o) {
    std::vector<FinFunction> comps;
    for (std::size_t cobj = 0; cobj < c.num_objects(); ++cobj)
      comps.push_back(lims[cobj].project[o]);
    out.projections.emplace_back(lim, d.at[o], std::move(comps));
  }
  return out;
}

ColimitResult finite_colimit(const PshDiagram& d) {
  check_diagram(d);
  if (d.at.empty()) throw PresheafError("finite_colimit: empty diagram needs an explicit base");
  CatPtr base = d.at[0]->base_ptr();
  const FinCat& c = *base;
  std::vector<SetColimit> cols;
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    cols.push_back(colimit_finset(evaluate_diagram(d, o)));
  std::vector<FinSet> sets;
  for (auto& l : cols) sets.push_back(l.set);
  std::vector<FinFunction> actions(c.num_morphisms());
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    std::size_t a = c.src(f), b = c.dst(f);
    // class at b represented by some (j, x); send to class of (j, P_j(f)(x)) at a
    std::vector<std::size_t> m(sets[b].size(), SIZE_MAX);
    for (std::size_t j = 0; j < d.at.size(); ++j)
      for (std::size_t x = 0; x < d.at[j]->at(b).size(); ++x) {
        std::size_t cls = cols[b].inject[j](x);
        if (m[cls] == SIZE_MAX) m[cls] = cols[a].inject[j](d.at[j]->action(f)(x));
      }
    actions[f] = FinFunction(sets[b].size(), sets[a].size(), std::move(m));
  }
  PshPtr colim = Presheaf::make_unchecked(base, std::move(sets), std::move(actions), "colim");
  ColimitResult out;
  out.diagram = d;
  out.colimit = colim;
  for (std::size_t j = 0; j < d.at.size(); ++j) {
    std::vector<FinFunction> comps;
    for (std::size_t cobj = 0; cobj < c.num_objects(); ++cobj) comps.push_back(cols[cobj].inject[j]);
    out.injections.emplace_back(d.at[j], colim, std::move(comps));
  }
  return out;
}

ProductResult product(const PshPtr& f, const PshPtr& g) {
  if (f->base_ptr().get() != g->base_ptr().get()) throw PresheafError("BaseMismatch");
  const FinCat& c = f->base();
  std::vector<FinSet> sets(c.num_objects());
  for (std::size_t o = 0; o < c.num_objects(); ++o) sets[o] = product_finset(f->at(o), g->at(o));
  std::vector<FinFunction> actions(c.num_morphisms());
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    std::size_t a = c.src(m), b = c.dst(m);
    std::size_t gb = g->at(b).size(), ga = g->at(a).size();
    std::vector<std::size_t> mp(f->at(b).size() * gb);
    for (std::size_t i = 0; i < f->at(b).size(); ++i)
      for (std::size_t k = 0; k < gb; ++k)
        mp[pair_index(i, k, gb)] = pair_index(f->action(m)(i), g->action(m)(k), ga);
    actions[m] = FinFunction(f->at(b).size() * gb, f->at(a).size() * ga, std::move(mp));
  }
  PshPtr prod = Presheaf::make_unchecked(f->base_ptr(), std::move(sets), std::move(actions),
                                         f->label() + "×" + g->label());
  std::vector<FinFunction> p1(c.num_objects()), p2(c.num_objects());
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    std::size_t fs = f->at(o).size(), gs = g->at(o).size();
    std::vector<std::size_t> m1(fs * gs), m2(fs * gs);
    for (std::size_t i = 0; i < fs; ++i)
      for (std::size_t k = 0; k < gs; ++k) {
        m1[pair_index(i, k, gs)] = i;
        m2[pair_index(i, k, gs)] = k;
      }
    p1[o] = FinFunction(fs * gs, fs, std::move(m1));
    p2[o] = FinFunction(fs * gs, gs, std::move(m2));
  }
  return ProductResult{prod, PresheafMap(prod, f, std::move(p1)), PresheafMap(prod, g, std::move(p2))};
}

PshPtr terminal_presheaf(const CatPtr& base) { return Presheaf::constant(base, 1); }

ColimitResult coequalizer(const PresheafMap& f, const PresheafMap& g) {
  if (f.source_ptr().get() != g.source_ptr().get() || f.target_ptr().get() != g.target_ptr().get())
    throw PresheafError("coequalizer: parallel pair required");
  CatPtr shape = parallel_pair_cat();
  PshDiagram d;
  d.shape = shape;
  d.at = {f.source_ptr(), f.target_ptr()};
  PresheafMap idp(f.source_ptr(), f.source_ptr(),
                  [&] {
                    std::vector<FinFunction> v;
                    for (std::size_t o = 0; o < f.source().base().num_objects(); ++o)
                      v.push_back(FinFunction::identity(f.source().at(o).size()));
                    return v;
                  }());
  PresheafMap idq(f.target_ptr(), f.target_ptr(),
                  [&] {
                    std::vector<FinFunction> v;
                    for (std::size_t o = 0; o < f.target().base().num_objects(); ++o)
                      v.push_back(FinFunction::identity(f.target().at(o).size()));
                    return v;
                  }());
  d.arrow = {idp, idq, f, g};
  return finite_colimit(d);
}

ColimitResult coproduct(const std::vector<PshPtr>& parts) {
  if (parts.empty()) throw PresheafError("coproduct: need at least one part or an explicit base");
  CatPtr shape = discrete_cat(parts.size());
  PshDiagram d;
  d.shape = shape;
  d.at = parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<FinFunction> v;
    for (std::size_t o = 0; o < parts[i]->base().num_objects(); ++o)
      v.push_back(FinFunction::identity(parts[i]->at(o).size()));
    d.arrow.emplace_back(parts[i], parts[i], std::move(v));
  }
  return finite_colimit(d);
}

// ------------------------------------------------------------- weighted colimit

std::size_t WeightedColimit::cls(std::size_t a, std::size_t w, std::size_t x) const {
  return quotient.at(offsets.at(a) + w * dsizes.at(a) + x);
}

WeightedColimit weighted_colimit(const Presheaf& w, const SetDiagram& d) {
  if (w.base().num_objects() != d.shape->num_objects() ||
      w.base().num_morphisms() != d.shape->num_morphisms())
    throw PresheafError("IndexMismatch: weight and diagram index categories differ");
  const FinCat& a = *d.shape;  // W is a presheaf on the same index category
  WeightedColimit out;
  out.offsets.assign(a.num_objects() + 1, 0);
  out.dsizes.resize(a.num_objects());
  for (std::size_t o = 0; o < a.num_objects(); ++o) {
    out.dsizes[o] = d.at[o].size();
    out.offsets[o + 1] = out.offsets[o] + w.at(o).size() * d.at[o].size();
  }
  UnionFind uf(out.offsets.back());
  // for f: o1→o2, w' ∈ W(o2), x ∈ D(o1):  (W(f)(w'), x)@o1  ~  (w', D(f)(x))@o2
  for (std::size_t f = 0; f < a.num_morphisms(); ++f) {
    std::size_t o1 = a.src(f), o2 = a.dst(f);
    for (std::size_t wp = 0; wp < w.at(o2).size(); ++wp)
      for (std::size_t x = 0; x < d.at[o1].size(); ++x)
        uf.unite(out.offsets[o1] + w.action(f)(wp) * out.dsizes[o1] + x,
                 out.offsets[o2] + wp * out.dsizes[o2] + d.arrow[f](x));
  }
  FinFunction q = uf.quotient_map();
  std::vector<std::string> names(q.dst_size);
  for (std::size_t o = 0; o < a.num_objects(); ++o)
    for (std::size_t wi = 0; wi < w.at(o).size(); ++wi)
      for (std::size_t x = 0; x < d.at[o].size(); ++x) {
        std::size_t cls = q(out.offsets[o] + wi * out.dsizes[o] + x);
        if (names[cls].empty())
          names[cls] = "[" + w.at(o).name(wi) + "⊗" + d.at[o].name(x) + "]";
      }
  out.set = FinSet(std::move(names));
  out.quotient = q.map;
  return out;
}

// ------------------------------------------------------------- Kan extensions

SetDiagram left_kan_extension(const SetDiagram& f, const FinFunctor& j) {
  const FinCat& a = j.source();
  const FinCat& b = j.target();
  // per b-object: elements (a-object, g: Ja→b, x ∈ F(a))
  struct Slice {
    std::vector<std::size_t> offsets;  // per (a-object, g) pair, flattened
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> elems;  // (aobj, g, x)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_off;   // (aobj, g) → offset
    FinFunction quotient;
  };
  std::vector<Slice> slices(b.num_objects());
  for (std::size_t bo = 0; bo < b.num_objects(); ++bo) {
    Slice& s = slices[bo];
    std::size_t total = 0;
    for (std::size_t ao = 0; ao < a.num_objects(); ++ao)
      for (std::size_t g : b.hom(j.on_object(ao), bo)) {
        s.pair_off[{ao, g}] = total;
        for (std::size_t x = 0; x < f.at[ao].size(); ++x) s.elems.emplace_back(ao, g, x);
        total += f.at[ao].size();
      }
    UnionFind uf(total);
    // for h: ao→ao' in A, g': J(ao')→bo, x ∈ F(ao):  (ao, g'∘Jh, x) ~ (ao', g', F(h)(x))
    for (std::size_t h = 0; h < a.num_morphisms(); ++h) {
      std::size_t ao = a.src(h), ao2 = a.dst(h);
      for (std::size_t g2 : b.hom(j.on_object(ao2), bo)) {
        std::size_t gh = b.compose(g2, j.on_mor(h));
        for (std::size_t x = 0; x < f.at[ao].size(); ++x)
          uf.unite(s.pair_off.at({ao, gh}) + x, s.pair_off.at({ao2, g2}) + f.arrow[h](x));
      }
    }
    s.quotient = uf.quotient_map();
  }
  std::vector<FinSet> at(b.num_objects());
  for (std::size_t bo = 0; bo < b.num_objects(); ++bo) {
    std::vector<std::string> names(slices[bo].quotient.dst_size);
    for (std::size_t i = 0; i < slices[bo].elems.size(); ++i) {
      auto [ao, g, x] = slices[bo].elems[i];
      std::size_t cls = slices[bo].quotient(i);
      if (names[cls].empty())
        names[cls] = "[" + b.mor(g).id + "·" + f.at[ao].name(x) + "]";
    }
    at[bo] = FinSet(std::move(names));
  }
  std::vector<FinFunction> arrow(b.num_morphisms());
  for (std::size_t h = 0; h < b.num_morphisms(); ++h) {
    std::size_t b1 = b.src(h), b2 = b.dst(h);
    std::vector<std::size_t> m(at[b1].size(), SIZE_MAX);
    for (std::size_t i = 0; i < slices[b1].elems.size(); ++i) {
      auto [ao, g, x] = slices[b1].elems[i];
      std::size_t cls = slices[b1].quotient(i);
      if (m[cls] == SIZE_MAX)
        m[cls] = slices[b2].quotient(slices[b2].pair_off.at({ao, b.compose(h, g)}) + x);
    }
    arrow[h] = FinFunction(at[b1].size(), at[b2].size(), std::move(m));
  }
  return SetDiagram(j.target_ptr(), std::move(at), std::move(arrow));
}

PshPtr lan_presheaf(const PshPtr& fp, const FinFunctor& j) {
  const Presheaf& f = *fp;
  const FinCat& a = j.source();
  const FinCat& b = j.target();
  struct Slice {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> elems;  // (aobj, u: b→Ja, y)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_off;
    FinFunction quotient;
  };
  std::vector<Slice> slices(b.num_objects());
  for (std::size_t bo = 0; bo < b.num_objects(); ++bo) {
    Slice& s = slices[bo];
    std::size_t total = 0;
    for (std::size_t ao = 0; ao < a.num_objects(); ++ao)
      for (std::size_t u : b.hom(bo, j.on_object(ao))) {
        s.pair_off[{ao, u}] = total;
        for (std::size_t y = 0; y < f.at(ao).size(); ++y) s.elems.emplace_back(ao, u, y);
        total += f.at(ao).size();
      }
    UnionFind uf(total);
    // for h: ao→ao' in A, u: bo→J(ao), y' ∈ F(ao'):  (ao', Jh∘u, y') ~ (ao, u, F(h)(y'))
    for (std::size_t h = 0; h < a.num_morphisms(); ++h) {
      std::size_t ao = a.src(h), ao2 = a.dst(h);
      for (std::size_t u : b.hom(bo, j.on_object(ao))) {
        std::size_t hu = b.compose(j.on_mor(h), u);
        for (std::size_t y2 = 0; y2 < f.at(ao2).size(); ++y2)
          uf.unite(s.pair_off.at({ao2, hu}) + y2, s.pair_off.at({ao, u}) + f.action(h)(y2));
      }
    }
    s.quotient = uf.quotient_map();
  }
  std::vector<FinSet> sets(b.num_objects());
  for (std::size_t bo = 0; bo < b.num_objects(); ++bo) {
    std::vector<std::string> names(slices[bo].quotient.dst_size);
    for (std::size_t i = 0; i < slices[bo].elems.size(); ++i) {
      auto [ao, u, y] = slices[bo].elems[i];
      std::size_t cls = slices[bo].quotient(i);
      if (names[cls].empty()) names[cls] = "[" + b.mor(u).id + "·" + f.at(ao).name(y) + "]";
    }
    sets[bo] = FinSet(std::move(names));
  }
  std::vector<FinFunction> actions(b.num_morphisms());
  for (std::size_t h = 0; h < b.num_morphisms(); ++h) {
    // contravariant: h: b1→b2 acts (Lan F)(b2) → (Lan F)(b1) by precomposition
    std::size_t b1 = b.src(h), b2 = b.dst(h);
    std::vector<std::size_t> m(sets[b2].size(), SIZE_MAX);
    for (std::size_t i = 0; i < slices[b2].elems.size(); ++i) {
      auto [ao, u, y] = slices[b2].elems[i];
      std::size_t cls = slices[b2].quotient(i);
      if (m[cls] == SIZE_MAX)
        m[cls] = slices[b1].quotient(slices[b1].pair_off.at({ao, b.compose(u, h)}) + y);
    }
    actions[h] = FinFunction(sets[b2].size(), sets[b1].size(), std::move(m));
  }
  return Presheaf::make_unchecked(j.target_ptr(), std::move(sets), std::move(actions),
                                  "Lan(" + f.label() + ")");
}

// --------------------------------------------------------- natural transformations

std::vector<PresheafMap> nat_transformations(const PshPtr& fp, const PshPtr& gp) {
  const Presheaf& f = *fp;
  const Presheaf& g = *gp;
  if (f.base_ptr().get() != g.base_ptr().get()) throw PresheafError("BaseMismatch");
  const FinCat& c = f.base();
  std::size_t n = c.num_objects();
  std::vector<std::vector<FinFunction>> cands(n);
  for (std::size_t o = 0; o < n; ++o) cands[o] = all_functions(f.at(o).size(), g.at(o).size());
  std::vector<PresheafMap> out;
  std::vector<std::size_t> pick(n, 0);
  std::vector<FinFunction> chosen(n);
  // depth-first over objects with naturality pruning
  std::size_t depth = 0;
  if (n == 0) {
    out.emplace_back(fp, gp, std::vector<FinFunction>{});
    return out;
  }
  for (;;) {
    if (pick[depth] < cands[depth].size()) {
      chosen[depth] = cands[depth][pick[depth]];
      bool ok = true;
      for (std::size_t m = 0; m < c.num_morphisms() && ok; ++m) {
        std::size_t a = c.src(m), b = c.dst(m);
        if (a > depth || b > depth) continue;
        if (!(g.action(m).after(chosen[b]) == chosen[a].after(f.action(m)))) ok = false;
      }
      if (ok) {
        if (depth + 1 == n) {
          out.emplace_back(fp, gp, chosen);
          ++pick[depth];
        } else {
          ++depth;
          pick[depth] = 0;
        }
      } else {
        ++pick[depth];
      }
    } else {
      if (depth == 0) break;
      --depth;
      ++pick[depth];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PresheafMap yoneda_map(const PshPtr& gp, std::size_t c, std::size_t x) {
  const Presheaf& g = *gp;
  const FinCat& cat = g.base();
  PshPtr y = Presheaf::representable(g.base_ptr(), c);
  std::vector<FinFunction> comps(cat.num_objects());
  for (std::size_t d = 0; d < cat.num_objects(); ++d) {
    const auto& h = cat.hom(d, c);
    std::vector<std::size_t> m(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) m[i] = g.action(h[i])(x);
    comps[d] = FinFunction(h.size(), g.at(d).size(), std::move(m));
  }
  return PresheafMap(y, gp, std::move(comps));
}

PresheafMap yoneda_on_mor(const CatPtr& base, std::size_t f) {
  const FinCat& cat = *base;
  std::size_t c = cat.src(f), c2 = cat.dst(f);
  PshPtr yc = Presheaf::representable(base, c);
  PshPtr yc2 = Presheaf::representable(base, c2);
  std::vector<FinFunction> comps(cat.num_objects());
  for (std::size_t d = 0; d < cat.num_objects(); ++d) {
    const auto& h = cat.hom(d, c);
    const auto& h2 = cat.hom(d, c2);
    std::vector<std::size_t> m(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::size_t comp = cat.compose(f, h[i]);
      m[i] = static_cast<std::size_t>(std::find(h2.begin(), h2.end(), comp) - h2.begin());
    }
    comps[d] = FinFunction(h.size(), h2.size(), std::move(m));
  }
  return PresheafMap(yc, yc2, std::move(comps));
}

// ---------------------------------------------------------------- exponentials

Exponential exponential(const PshPtr& f, const PshPtr& g) {
  if (f->base_ptr().get() != g->base_ptr().get()) throw PresheafError("BaseMismatch");
  CatPtr base = f->base_ptr();
  const FinCat& cat = *base;
  std::size_t n = cat.num_objects();
  Exponential out;
  out.f = f;
  out.g = g;
  std::vector<PshPtr> ycs(n), qs(n);
  std::vector<ProductResult> prods;
  prods.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    ycs[c] = Presheaf::representable(base, c);
    prods.push_back(product(ycs[c], f));
    qs[c] = prods[c].product;
  }
  out.elements.resize(n);
  std::vector<std::map<std::vector<FinFunction>, std::size_t>> index(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.elements[c] = nat_transformations(qs[c], g);
    for (std::size_t i = 0; i < out.elements[c].size(); ++i)
      index[c][out.elements[c][i].components()] = i;
  }
  std::vector<FinSet> sets(n);
  for (std::size_t c = 0; c < n; ++c) sets[c] = FinSet(out.elements[c].size(), "nat");
  std::vector<FinFunction> actions(cat.num_morphisms());
  for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
    std::size_t c = cat.src(m), c2 = cat.dst(m);
    // α: y(c2)×F → G  ↦  α ∘ (y(m)×id_F): y(c)×F → G
    std::vector<std::size_t> mp(sets[c2].size());
    for (std::size_t i = 0; i < out.elements[c2].size(); ++i) {
      const PresheafMap& alpha = out.elements[c2][i];
      std::vector<FinFunction> beta(n);
      for (std::size_t d = 0; d < n; ++d) {
        const auto& hc = cat.hom(d, c);
        const auto& hc2 = cat.hom(d, c2);
        std::size_t fs = f->at(d).size();
        std::vector<std::size_t> bm(hc.size() * fs);
        for (std::size_t gi = 0; gi < hc.size(); ++gi) {
          std::size_t comp = cat.compose(m, hc[gi]);
          std::size_t pos =
              static_cast<std::size_t>(std::find(hc2.begin(), hc2.end(), comp) - hc2.begin());
          for (std::size_t x = 0; x < fs; ++x)
            bm[pair_index(gi, x, fs)] = alpha.at(d)(pair_index(pos, x, fs));
        }
        beta[d] = FinFunction(hc.size() * fs, g->at(d).size(), std::move(bm));
      }
      mp[i] = index[c].at(beta);
    }
    actions[m] = FinFunction(sets[c2].size(), sets[c].size(), std::move(mp));
  }
  out.object = Presheaf::make_unchecked(base, std::move(sets), std::move(actions),
                                        g->label() + "^" + f->label());
  return out;
}

// ---------------------------------------------------------------- decomposition

DecomposeResult decompose_into_representables(const PshPtr& pp) {
  const Presheaf& p = *pp;
  const FinCat& c = p.base();
  std::size_t n = c.num_objects();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t o = 0; o < n; ++o) off[o + 1] = off[o] + p.at(o).size();
  UnionFind uf(off.back());
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    std::size_t a = c.src(f), b = c.dst(f);
    for (std::size_t x = 0; x < p.at(b).size(); ++x) uf.unite(off[b] + x, off[a] + p.action(f)(x));
  }
  FinFunction q = uf.quotient_map();
  std::size_t ncomp = q.dst_size;
  // elements per component, grouped by object
  std::vector<std::vector<std::vector<std::size_t>>> comp_elems(
      ncomp, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t o = 0; o < n; ++o)
    for (std::size_t x = 0; x < p.at(o).size(); ++x) comp_elems[q(off[o] + x)][o].push_back(x);

  struct Generator {
    std::size_t obj, elem;
  };
  std::vector<Generator> gens(ncomp);
  DecomposeResult out;
  for (std::size_t k = 0; k < ncomp; ++k) {
    bool found = false;
    for (std::size_t cobj = 0; cobj < n && !found; ++cobj) {
      for (std::size_t x : comp_elems[k][cobj]) {
        // candidate generator (cobj, x): check hom(d, cobj) → component at d bijective
        bool ok = true;
        for (std::size_t d = 0; d < n && ok; ++d) {
          const auto& h = c.hom(d, cobj);
          if (h.size() != comp_elems[k][d].size()) {
            ok = false;
            break;
          }
          std::set<std::size_t> image;
          for (std::size_t g : h) image.insert(p.action(g)(x));
          if (image.size() != h.size()) ok = false;
          if (ok)
            for (std::size_t e : comp_elems[k][d])
              if (!image.count(e)) {
                ok = false;
                break;
              }
        }
        if (ok) {
          gens[k] = {cobj, x};
          found = true;
          break;
        }
      }
    }
    if (!found) {
      for (std::size_t o = 0; o < n; ++o)
        for (std::size_t x : comp_elems[k][o]) out.failing_component.emplace_back(o, x);
      return out;
    }
  }

  // build ⊕ y(gen) and the iso onto P
  std::vector<std::size_t> order(ncomp);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return gens[a].obj < gens[b].obj; });
  std::vector<PshPtr> parts;
  std::vector<PresheafMap> maps;
  std::vector<std::size_t> summands;
  for (std::size_t k : order) {
    summands.push_back(gens[k].obj);
    maps.push_back(yoneda_map(pp, gens[k].obj, gens[k].elem));
    parts.push_back(maps.back().source_ptr());
  }
  ColimitResult cop = coproduct(parts);
  // induced map coproduct → P: on class of (part j, g), value maps[j](g)
  std::vector<FinFunction> comps(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<std::size_t> m(cop.colimit->at(d).size());
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (std::size_t x = 0; x < parts[j]->at(d).size(); ++x)
        m[cop.injections[j].at(d)(x)] = maps[j].at(d)(x);
    comps[d] = FinFunction(cop.colimit->at(d).size(), p.at(d).size(), std::move(m));
  }
  PresheafMap iso(cop.colimit, pp, std::move(comps));
  if (!iso.is_isomorphism())
    throw PresheafError("decomposition produced a non-isomorphism");  // internal invariant
  out.decomposition = Decomposition{std::move(summands), cop.colimit, std::move(iso)};
  return out;
}

PshPtr transport_to_split(const PshPtr& pp, const SplitResult& split) {
  const Presheaf& p = *pp;
  const FinCat& sc = *split.cat;
  std::vector<FinSet> sets(sc.num_objects());
  std::vector<std::vector<std::size_t>> fixed(sc.num_objects());  // element indices in P(c)
  std::vector<std::vector<std::size_t>> pos(sc.num_objects());
  for (std::size_t o = 0; o < sc.num_objects(); ++o) {
    auto [cobj, e] = split.objects[o];
    pos[o].assign(p.at(cobj).size(), SIZE_MAX);
    std::vector<std::string> names;
    for (std::size_t x = 0; x < p.at(cobj).size(); ++x)
      if (p.action(e)(x) == x) {
        pos[o][x] = fixed[o].size();
        fixed[o].push_back(x);
        names.push_back(p.at(cobj).name(x));
      }
    sets[o] = FinSet(std::move(names));
  }
  std::vector<FinFunction> actions(sc.num_morphisms());
  for (std::size_t m = 0; m < sc.num_morphisms(); ++m) {
    std::size_t a = sc.src(m), b = sc.dst(m);
    std::size_t u = split.underlying_mor[m];
    std::vector<std::size_t> mp(fixed[b].size());
    for (std::size_t i = 0; i < fixed[b].size(); ++i) mp[i] = pos[a][p.action(u)(fixed[b][i])];
    actions[m] = FinFunction(fixed[b].size(), fixed[a].size(), std::move(mp));
  }
  return Presheaf::make_unchecked(split.cat, std::move(sets), std::move(actions),
                                  p.label() + "~split");
}

bool is_strongly_finitely_presentable(const PshPtr& p) {
  SplitResult split = split_idempotents(p->base_ptr());
  PshPtr q = transport_to_split(p, split);
  return decompose_into_representables(q).ok();
}

// ------------------------------------------------------------- preservation

PreservationReport preserves_colimit(const PshPtr& p, const ColimitResult& colim) {
  const PshDiagram& d = colim.diagram;
  const FinCat& j = *d.shape;
  // hom-image diagram in FinSet
  std::vector<std::vector<PresheafMap>> homs(j.num_objects());
  std::vector<std::map<std::vector<FinFunction>, std::size_t>> index(j.num_objects());
  for (std::size_t o = 0; o < j.num_objects(); ++o) {
    homs[o] = nat_transformations(p, d.at[o]);
    for (std::size_t i = 0; i < homs[o].size(); ++i) index[o][homs[o][i].components()] = i;
  }
  std::vector<FinSet> at(j.num_objects());
  for (std::size_t o = 0; o < j.num_objects(); ++o) at[o] = FinSet(homs[o].size(), "h");
  std::vector<FinFunction> arrow(j.num_morphisms());
  for (std::size_t m = 0; m < j.num_morphisms(); ++m) {
    std::size_t a = j.src(m), b = j.dst(m);
    std::vector<std::size_t> mp(homs[a].size());
    for (std::size_t i = 0; i < homs[a].size(); ++i)
      mp[i] = index[b].at(d.arrow[m].after(homs[a][i]).components());
    arrow[m] = FinFunction(homs[a].size(), homs[b].size(), std::move(mp));
  }
  SetDiagram hd(d.shape, std::move(at), std::move(arrow));
  SetColimit hc = colimit_finset(hd);

  std::vector<PresheafMap> homs_colim = nat_transformations(p, colim.colimit);
  std::map<std::vector<FinFunction>, std::size_t> colim_index;
  for (std::size_t i = 0; i < homs_colim.size(); ++i)
    colim_index[homs_colim[i].components()] = i;

  // canonical map: class of (o, α) ↦ κ_o ∘ α
  std::vector<std::size_t> canon(hc.set.size(), SIZE_MAX);
  bool well_defined = true;
  for (std::size_t o = 0; o < j.num_objects(); ++o)
    for (std::size_t i = 0; i < homs[o].size(); ++i) {
      std::size_t cls = hc.inject[o](i);
      std::size_t v = colim_index.at(colim.injections[o].after(homs[o][i]).components());
      if (canon[cls] == SIZE_MAX)
        canon[cls] = v;
      else if (canon[cls] != v)
        well_defined = false;
    }
  PreservationReport rep;
  rep.colim_of_homs = hc.set.size();
  rep.homs_of_colim = homs_colim.size();
  std::set<std::size_t> image;
  bool total = true, injective = true;
  for (std::size_t cls = 0; cls < hc.set.size(); ++cls) {
    if (canon[cls] == SIZE_MAX) {
      total = false;
      continue;
    }
    if (!image.insert(canon[cls]).second) injective = false;
  }
  rep.canonical_bijective =
      well_defined && total && injective && image.size() == homs_colim.size();
  rep.preserved = rep.canonical_bijective;
  return rep;
}

// ------------------------------------------------------------- commutation

CommutationReport commutes_products_colimit(const std::vector<SetDiagram>& diagrams,
                                            bool stop_at_first) {
  CommutationReport rep;
  for (std::size_t a = 0; a < diagrams.size(); ++a) {
    for (std::size_t b = 0; b < diagrams.size(); ++b) {
      const SetDiagram& d1 = diagrams[a];
      const SetDiagram& d2 = diagrams[b];
      const FinCat& j = *d1.shape;
      // pointwise product diagram
      std::vector<FinSet> at(j.num_objects());
      std::vector<FinFunction> arrow(j.num_morphisms());
      for (std::size_t o = 0; o < j.num_objects(); ++o) at[o] = product_finset(d1.at[o], d2.at[o]);
      for (std::size_t m = 0; m < j.num_morphisms(); ++m) {
        std::size_t so = j.src(m), to = j.dst(m);
        std::size_t s2 = d2.at[so].size(), t2 = d2.at[to].size();
        std::vector<std::size_t> mp(d1.at[so].size() * s2);
        for (std::size_t i = 0; i < d1.at[so].size(); ++i)
          for (std::size_t k = 0; k < s2; ++k)
            mp[pair_index(i, k, s2)] = pair_index(d1.arrow[m](i), d2.arrow[m](k), t2);
        arrow[m] = FinFunction(d1.at[so].size() * s2, d1.at[to].size() * t2, std::move(mp));
      }
      SetDiagram prod(d1.shape, std::move(at), std::move(arrow));
      SetColimit cp = colimit_finset(prod);
      SetColimit c1 = colimit_finset(d1);
      SetColimit c2 = colimit_finset(d2);
      // canonical map colim(D1×D2) → colim D1 × colim D2
      std::vector<std::size_t> canon(cp.set.size(), SIZE_MAX);
      bool ok = true;
      for (std::size_t o = 0; o < j.num_objects() && ok; ++o) {
        std::size_t s2 = d2.at[o].size();
        for (std::size_t i = 0; i < d1.at[o].size(); ++i)
          for (std::size_t k = 0; k < s2; ++k) {
            std::size_t cls = cp.inject[o](pair_index(i, k, s2));
            std::size_t v = pair_index(c1.inject[o](i), c2.inject[o](k), c2.set.size());
            if (canon[cls] == SIZE_MAX) canon[cls] = v;
          }
      }
      std::set<std::size_t> image;
      for (std::size_t cls = 0; cls < cp.set.size(); ++cls)
        if (canon[cls] != SIZE_MAX) image.insert(canon[cls]);
      bool bij = cp.set.size() == c1.set.size() * c2.set.size() &&
                 image.size() == cp.set.size();
      if (!bij) {
        rep.commutes = false;
        rep.witness_found = true;
        rep.diag_a = a;
        rep.diag_b = b;
        rep.lhs = cp.set.size();
        rep.rhs = c1.set.size() * c2.set.size();
        if (stop_at_first) return rep;
      }
    }
  }
  return rep;
}

std::vector<SetDiagram> all_set_diagrams(const CatPtr& shape, std::size_t max_size) {
  const FinCat& j = *shape;
  std::size_t n = j.num_objects();
  std::vector<SetDiagram> out;
  std::vector<std::size_t> sizes(n, 0);
  for (;;) {
    // assign arrows to non-identity morphisms by backtracking with
    // composition constraints checked as soon as both factors are known
    std::vector<std::size_t> mors;  // non-identity morphisms
    for (std::size_t m = 0; m < j.num_morphisms(); ++m)
      if (!j.is_identity(m)) mors.push_back(m);
    std::vector<FinFunction> arrow(j.num_morphisms());
    for (std::size_t o = 0; o < n; ++o)
      arrow[j.identity(o)] = FinFunction::identity(sizes[o]);
    std::vector<std::vector<FinFunction>> cands(mors.size());
    for (std::size_t i = 0; i < mors.size(); ++i)
      cands[i] = all_functions(sizes[j.src(mors[i])], sizes[j.dst(mors[i])]);
    std::vector<char> assigned(j.num_morphisms(), 0);
    for (std::size_t o = 0; o < n; ++o) assigned[j.identity(o)] = 1;

    std::vector<std::size_t> pick(mors.size(), 0);
    std::size_t depth = 0;
    auto consistent = [&](std::size_t upto) {
      // check all composites whose operands and result are assigned
      for (std::size_t g = 0; g < j.num_morphisms(); ++g) {
        if (!assigned[g]) continue;
        for (std::size_t f = 0; f < j.num_morphisms(); ++f) {
          if (!assigned[f] || !j.composable(g, f)) continue;
          std::size_t gf = j.compose(g, f);
          if (!assigned[gf]) continue;
          if (!(arrow[gf] == arrow[g].after(arrow[f]))) return false;
        }
      }
      (void)upto;
      return true;
    };
    if (mors.empty()) {
      std::vector<FinSet> at(n);
      for (std::size_t o = 0; o < n; ++o) at[o] = FinSet(sizes[o], "e");
      out.emplace_back(shape, std::move(at), arrow);
    } else {
      for (;;) {
        if (pick[depth] < cands[depth].size()) {
          arrow[mors[depth]] = cands[depth][pick[depth]];
          assigned[mors[depth]] = 1;
          if (consistent(depth)) {
            if (depth + 1 == mors.size()) {
              std::vector<FinSet> at(n);
              for (std::size_t o = 0; o < n; ++o) at[o] = FinSet(sizes[o], "e");
              out.emplace_back(shape, std::move(at), arrow);
              assigned[mors[depth]] = 0;
              ++pick[depth];
            } else {
              ++depth;
              pick[depth] = 0;
            }
          } else {
            assigned[mors[depth]] = 0;
            ++pick[depth];
          }
        } else {
          if (depth == 0) break;
          assigned[mors[depth]] = 0;
          --depth;
          assigned[mors[depth]] = 0;
          ++pick[depth];
        }
      }
    }
    // next size assignment
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++sizes[i] <= max_size) {
        done = false;
        break;
      }
      sizes[i] = 0;
    }
    if (done || n == 0) break;
  }
  return out;
}

// ------------------------------------------------------- category of elements

ElementsResult category_of_elements(const PshPtr& wp) {
  const Presheaf& w = *wp;
  const FinCat& c = w.base();
  std::vector<std::pair<std::size_t, std::size_t>> elements;
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    for (std::size_t x = 0; x < w.at(o).size(); ++x) elements.emplace_back(o, x);
  auto elem_index = [&](std::size_t o, std::size_t x) {
    return static_cast<std::size_t>(
        std::find(elements.begin(), elements.end(), std::make_pair(o, x)) -
        elements.begin());
  };
  std::vector<std::string> obj_names;
  for (auto& [o, x] : elements)
    obj_names.push_back("(" + c.object_name(o) + "," + w.at(o).name(x) + ")");

  // morphisms (c,x) → (d,y): f: d→c in C with W(f)(x) = y
  struct EMor {
    std::size_t so, to, f;
  };
  std::vector<EMor> emors;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t so = 0; so < elements.size(); ++so) {
    auto [cobj, x] = elements[so];
    for (std::size_t dobj = 0; dobj < c.num_objects(); ++dobj)
      for (std::size_t f : c.hom(dobj, cobj)) {
        std::size_t y = w.action(f)(x);
        std::size_t to = elem_index(dobj, y);
        index[{so, to, f}] = emors.size();
        emors.push_back({so, to, f});
      }
  }
  std::vector<Mor> mors;
  for (std::size_t i = 0; i < emors.size(); ++i)
    mors.push_back({c.mor(emors[i].f).id + "@" + std::to_string(emors[i].so) + ">" +
                        std::to_string(emors[i].to),
                    emors[i].so, emors[i].to});
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  // m2 ∘ m1 for m1: (c,x)→(d,y) via f1: d→c and m2: (d,y)→(e,z) via f2: e→d
  // is (c,x)→(e,z) via f1∘f2
  for (std::size_t m2 = 0; m2 < emors.size(); ++m2)
    for (std::size_t m1 = 0; m1 < emors.size(); ++m1)
      if (emors[m1].to == emors[m2].so)
        comp[{m2, m1}] =
            index.at({emors[m1].so, emors[m2].to, c.compose(emors[m1].f, emors[m2].f)});
  std::vector<std::size_t> idents(elements.size());
  for (std::size_t so = 0; so < elements.size(); ++so)
    idents[so] = index.at({so, so, c.identity(elements[so].first)});
  CatPtr cat = emors.size() <= 2000 ? FinCat::validate({obj_names, mors, comp, idents})
                                    : FinCat::from_trusted(obj_names, mors, comp, idents);
  CatPtr base_op = FinCat::op(wp->base_ptr());
  std::vector<std::size_t> omap, mmap;
  for (auto& [o, x] : elements) omap.push_back(o);
  for (auto& em : emors) mmap.push_back(em.f);
  FinFunctor projection(cat, base_op, std::move(omap), std::move(mmap));
  return ElementsResult{std::move(cat), std::move(base_op), std::move(projection),
                        std::move(elements)};
}

ElementsColimit colimit_of_representables(const ElementsResult& e, const PshPtr& w) {
  // the diagram (c,x) ↦ y(c) is contravariant on E, i.e. covariant on E^op
  CatPtr eop = FinCat::op(e.cat);
  const FinCat& ecat = *e.cat;
  PshDiagram d;
  d.shape = eop;
  std::vector<PshPtr> reps(w->base().num_objects());
  for (std::size_t c = 0; c < reps.size(); ++c)
    reps[c] = Presheaf::representable(w->base_ptr(), c);
  for (auto& [o, x] : e.elements) d.at.push_back(reps[o]);
  for (std::size_t m = 0; m < ecat.num_morphisms(); ++m) {
    // E-morphism (c,x)→(d,y) via f: d→c gives y(f): y(d)→y(c); in E^op it
    // goes (d,y)→(c,x), matching arrow direction at[(d,y)] → at[(c,x)]
    std::size_t f = e.projection.on_mor(m);
    PresheafMap yf = yoneda_on_mor(w->base_ptr(), f);
    // reuse the shared representables as endpoints
    std::size_t so = ecat.dst(m), to = ecat.src(m);  // E^op direction
    d.arrow.emplace_back(d.at[so], d.at[to], yf.components());
  }
  ColimitResult col = finite_colimit(d);
  // comparison colim → W via the cocone of classifying maps
  const FinCat& base = w->base();
  std::vector<FinFunction> comps(base.num_objects());
  for (std::size_t dobj = 0; dobj < base.num_objects(); ++dobj) {
    std::vector<std::size_t> mp(col.colimit->at(dobj).size());
    for (std::size_t j = 0; j < e.elements.size(); ++j) {
      auto [cobj, x] = e.elements[j];
      const auto& h = base.hom(dobj, cobj);
      for (std::size_t gi = 0; gi < h.size(); ++gi)
        mp[col.injections[j].at(dobj)(gi)] = w->action(h[gi])(x);
    }
    comps[dobj] = FinFunction(col.colimit->at(dobj).size(), w->at(dobj).size(), std::move(mp));
  }
  PresheafMap comparison(col.colimit, w, std::move(comps));
  return ElementsColimit{std::move(col), std::move(comparison)};
}

}  // namespace ct
