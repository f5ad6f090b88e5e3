#include "ct/presheaf.hpp"

#include <algorithm>

namespace ct {

void Presheaf::check_shape() const {
  const FinCat& c = *base_;
  if (sets_.size() != c.num_objects() || actions_.size() != c.num_morphisms())
    throw PresheafError("presheaf tables have wrong length");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const FinFunction& a = actions_[m];
    if (a.src_size != sets_[c.dst(m)].size() || a.dst_size != sets_[c.src(m)].size())
      throw PresheafError("action of " + c.mor(m).id + " is ill-typed");
  }
}

Presheaf::Presheaf(Unchecked, CatPtr base, std::vector<FinSet> sets,
                   std::vector<FinFunction> actions, std::string label)
    : base_(std::move(base)), sets_(std::move(sets)), actions_(std::move(actions)),
      label_(std::move(label)) {
  check_shape();
}

Presheaf::Presheaf(CatPtr base, std::vector<FinSet> sets, std::vector<FinFunction> actions,
                   std::string label)
    : base_(std::move(base)), sets_(std::move(sets)), actions_(std::move(actions)),
      label_(std::move(label)) {
  check_shape();
  const FinCat& c = *base_;
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    if (!(actions_[c.identity(o)] == FinFunction::identity(sets_[o].size())))
      throw PresheafError("action does not preserve identity of " + c.object_name(o));
  for (std::size_t g = 0; g < c.num_morphisms(); ++g)
    for (std::size_t f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f) &&
          !(actions_[c.compose(g, f)] == actions_[f].after(actions_[g])))
        throw PresheafError("action not functorial on " + c.mor(g).id + " ∘ " + c.mor(f).id);
}

PshPtr Presheaf::make(CatPtr base, std::vector<FinSet> sets, std::vector<FinFunction> actions,
                      std::string label) {
  return std::make_shared<const Presheaf>(std::move(base), std::move(sets), std::move(actions),
                                          std::move(label));
}

PshPtr Presheaf::make_unchecked(CatPtr base, std::vector<FinSet> sets,
                                std::vector<FinFunction> actions, std::string label) {
  return std::shared_ptr<const Presheaf>(new Presheaf(
      Unchecked{}, std::move(base), std::move(sets), std::move(actions), std::move(label)));
}

std::size_t Presheaf::total_elements() const {
  std::size_t n = 0;
  for (const auto& s : sets_) n += s.size();
  return n;
}

bool Presheaf::same_shape(const Presheaf& o) const {
  if (base_.get() != o.base_.get()) return false;
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (sets_[i].size() != o.sets_[i].size()) return false;
  return actions_ == o.actions_;
}

PshPtr Presheaf::representable(const CatPtr& base, std::size_t c) {
  const FinCat& cat = *base;
  std::size_t nobj = cat.num_objects();
  std::vector<FinSet> sets(nobj);
  // pos[a][m] = index of morphism m within hom(a, c)
  std::vector<std::vector<std::size_t>> pos(nobj,
                                            std::vector<std::size_t>(cat.num_morphisms(), SIZE_MAX));
  for (std::size_t a = 0; a < nobj; ++a) {
    const auto& h = cat.hom(a, c);
    std::vector<std::string> names;
    names.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      pos[a][h[i]] = i;
      names.push_back(cat.mor(h[i]).id);
    }
    sets[a] = FinSet(std::move(names));
  }
  std::vector<FinFunction> actions(cat.num_morphisms());
  for (std::size_t f = 0; f < cat.num_morphisms(); ++f) {
    std::size_t a = cat.src(f), b = cat.dst(f);
    const auto& hb = cat.hom(b, c);
    std::vector<std::size_t> map(hb.size());
    for (std::size_t i = 0; i < hb.size(); ++i) map[i] = pos[a][cat.compose(hb[i], f)];
    actions[f] = FinFunction(hb.size(), sets[a].size(), std::move(map));
  }
  return make_unchecked(base, std::move(sets), std::move(actions),
                        "y(" + cat.object_name(c) + ")");
}

PshPtr Presheaf::constant(const CatPtr& base, std::size_t n) {
  const FinCat& cat = *base;
  std::vector<FinSet> sets(cat.num_objects(), FinSet(n, "c"));
  std::vector<FinFunction> actions(cat.num_morphisms(), FinFunction::identity(n));
  return make_unchecked(base, std::move(sets), std::move(actions), "const" + std::to_string(n));
}

PresheafMap::PresheafMap(PshPtr source, PshPtr target, std::vector<FinFunction> components)
    : src_(std::move(source)), dst_(std::move(target)), components_(std::move(components)) {
  const Presheaf& F = *src_;
  const Presheaf& G = *dst_;
  const FinCat& c = F.base();
  if (F.base_ptr().get() != G.base_ptr().get()) throw PresheafError("presheaf map: base mismatch");
  if (components_.size() != c.num_objects()) throw PresheafError("presheaf map: wrong arity");
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    if (components_[o].src_size != F.at(o).size() || components_[o].dst_size != G.at(o).size())
      throw PresheafError("presheaf map: component at " + c.object_name(o) + " ill-typed");
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    std::size_t a = c.src(f), b = c.dst(f);
    // naturality: comp_a ∘ F(f) = G(f) ∘ comp_b
    if (!(G.action(f).after(components_[b]) == components_[a].after(F.action(f))))
      throw PresheafError("presheaf map: naturality fails at " + c.mor(f).id);
  }
}

bool PresheafMap::is_isomorphism() const {
  for (const auto& c : components_)
    if (!c.is_bijection()) return false;
  return true;
}

PresheafMap PresheafMap::after(const PresheafMap& f) const {
  std::vector<FinFunction> comps;
  comps.reserve(components_.size());
  for (std::size_t o = 0; o < components_.size(); ++o)
    comps.push_back(components_[o].after(f.components()[o]));
  return PresheafMap(f.source_ptr(), dst_, std::move(comps));
}

SetDiagram::SetDiagram(CatPtr s, std::vector<FinSet> a, std::vector<FinFunction> arr)
    : shape(std::move(s)), at(std::move(a)), arrow(std::move(arr)) {
  const FinCat& c = *shape;
  if (at.size() != c.num_objects() || arrow.size() != c.num_morphisms())
    throw PresheafError("set diagram tables have wrong length");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (arrow[m].src_size != at[c.src(m)].size() || arrow[m].dst_size != at[c.dst(m)].size())
      throw PresheafError("set diagram arrow " + c.mor(m).id + " ill-typed");
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    if (!(arrow[c.identity(o)] == FinFunction::identity(at[o].size())))
      throw PresheafError("set diagram does not preserve identity at " + c.object_name(o));
  for (std::size_t g = 0; g < c.num_morphisms(); ++g)
    for (std::size_t f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f) && !(arrow[c.compose(g, f)] == arrow[g].after(arrow[f])))
        throw PresheafError("set diagram not functorial on " + c.mor(g).id + " ∘ " + c.mor(f).id);
}

}  // namespace ct
