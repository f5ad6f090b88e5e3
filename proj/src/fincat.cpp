#include "ct/fincat.hpp"

#include <set>

namespace ct {

namespace {
constexpr uint32_t kUndef = UINT32_MAX;
}

std::size_t FinCat::compose(std::size_t g, std::size_t f) const {
  if (!composable(g, f))
    throw CatError(CatErrorKind::IllTypedComposite,
                   "compose(" + morphisms_[g].id + ", " + morphisms_[f].id + "): not composable");
  uint32_t r = comp_[g * morphisms_.size() + f];
  if (r == kUndef)
    throw CatError(CatErrorKind::MissingComposite,
                   "compose(" + morphisms_[g].id + ", " + morphisms_[f].id + "): no table entry");
  return r;
}

std::optional<std::size_t> FinCat::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinCat::mor_index(const std::string& id) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].id == id) return i;
  return std::nullopt;
}

void FinCat::build_tables() {
  std::size_t n = objects_.size();
  hom_.assign(n * n, {});
  for (std::size_t m = 0; m < morphisms_.size(); ++m)
    hom_[morphisms_[m].src * n + morphisms_[m].dst].push_back(m);
}

void FinCat::check_laws() const {
  std::size_t nm = morphisms_.size();
  // identity laws
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    std::size_t i = identities_[o];
    if (morphisms_[i].src != o || morphisms_[i].dst != o)
      throw CatError(CatErrorKind::MissingIdentity, "identity of " + objects_[o] + " is ill-typed");
  }
  for (std::size_t m = 0; m < nm; ++m) {
    if (compose(m, identities_[morphisms_[m].src]) != m ||
        compose(identities_[morphisms_[m].dst], m) != m)
      throw CatError(CatErrorKind::IdentityViolation,
                     "identity law fails at " + morphisms_[m].id);
  }
  // totality on composable pairs
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f) {
      uint32_t r = comp_[g * nm + f];
      if (composable(g, f)) {
        if (r == kUndef)
          throw CatError(CatErrorKind::MissingComposite,
                         "no composite for " + morphisms_[g].id + " ∘ " + morphisms_[f].id);
        if (morphisms_[r].src != morphisms_[f].src || morphisms_[r].dst != morphisms_[g].dst)
          throw CatError(CatErrorKind::IllTypedComposite,
                         "composite " + morphisms_[g].id + " ∘ " + morphisms_[f].id +
                             " = " + morphisms_[r].id + " is ill-typed");
      } else if (r != kUndef) {
        throw CatError(CatErrorKind::IllTypedComposite,
                       "table defines non-composable pair " + morphisms_[g].id + " ∘ " +
                           morphisms_[f].id);
      }
    }
  // associativity on every composable triple
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t g = 0; g < nm; ++g) {
      if (!composable(g, f)) continue;
      std::size_t gf = comp_[g * nm + f];
      for (std::size_t h = 0; h < nm; ++h) {
        if (!composable(h, g)) continue;
        std::size_t hg = comp_[h * nm + g];
        if (comp_[h * nm + gf] != comp_[hg * nm + f])
          throw CatError(CatErrorKind::AssocViolation,
                         "associativity fails on (" + morphisms_[h].id + ", " + morphisms_[g].id +
                             ", " + morphisms_[f].id + ")");
      }
    }
  }
}

CatPtr FinCat::validate(const RawCat& raw) {
  auto cat = std::shared_ptr<FinCat>(new FinCat());
  cat->objects_ = raw.objects;
  cat->morphisms_ = raw.morphisms;
  std::size_t nm = cat->morphisms_.size();

  std::set<std::string> seen;
  for (const auto& m : cat->morphisms_) {
    if (!seen.insert(m.id).second)
      throw CatError(CatErrorKind::DuplicateId, "duplicate morphism id " + m.id);
    if (m.src >= cat->objects_.size() || m.dst >= cat->objects_.size())
      throw CatError(CatErrorKind::BadReference, "morphism " + m.id + " references unknown object");
  }

  cat->comp_.assign(nm * nm, kUndef);
  for (const auto& [pair, r] : raw.compose) {
    auto [g, f] = pair;
    if (g >= nm || f >= nm || r >= nm)
      throw CatError(CatErrorKind::BadReference, "compose table references unknown morphism");
    cat->comp_[g * nm + f] = static_cast<uint32_t>(r);
  }

  // identities: given, or searched (a morphism i: o→o with i∘f=f, g∘i=g per table)
  if (!raw.identities.empty()) {
    cat->identities_ = raw.identities;
  } else {
    cat->identities_.assign(cat->objects_.size(), SIZE_MAX);
    for (std::size_t o = 0; o < cat->objects_.size(); ++o) {
      for (std::size_t i = 0; i < nm; ++i) {
        if (cat->morphisms_[i].src != o || cat->morphisms_[i].dst != o) continue;
        bool ok = true;
        for (std::size_t f = 0; f < nm && ok; ++f) {
          // undefined entries are implicit identity composites, filled below
          uint32_t l = cat->comp_[i * nm + f], r = cat->comp_[f * nm + i];
          if (cat->morphisms_[f].dst == o && l != kUndef && l != f) ok = false;
          if (cat->morphisms_[f].src == o && r != kUndef && r != f) ok = false;
        }
        if (ok) {
          cat->identities_[o] = i;
          break;
        }
      }
      if (cat->identities_[o] == SIZE_MAX)
        throw CatError(CatErrorKind::MissingIdentity,
                       "no identity found for object " + cat->objects_[o]);
    }
  }

  // fill identity composites left implicit
  for (std::size_t m = 0; m < nm; ++m) {
    std::size_t is = cat->identities_[cat->morphisms_[m].src];
    std::size_t id = cat->identities_[cat->morphisms_[m].dst];
    if (cat->comp_[m * nm + is] == kUndef) cat->comp_[m * nm + is] = static_cast<uint32_t>(m);
    if (cat->comp_[id * nm + m] == kUndef) cat->comp_[id * nm + m] = static_cast<uint32_t>(m);
  }

  cat->build_tables();
  cat->check_laws();
  return cat;
}

CatPtr FinCat::from_trusted(std::vector<std::string> objects, std::vector<Mor> morphisms,
                            std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose,
                            std::vector<std::size_t> identities) {
  auto cat = std::shared_ptr<FinCat>(new FinCat());
  cat->objects_ = std::move(objects);
  cat->morphisms_ = std::move(morphisms);
  cat->identities_ = std::move(identities);
  std::size_t nm = cat->morphisms_.size();
  cat->comp_.assign(nm * nm, kUndef);
  for (const auto& [pair, r] : compose)
    cat->comp_[pair.first * nm + pair.second] = static_cast<uint32_t>(r);
  for (std::size_t m = 0; m < nm; ++m) {
    std::size_t is = cat->identities_[cat->morphisms_[m].src];
    std::size_t id = cat->identities_[cat->morphisms_[m].dst];
    cat->comp_[m * nm + is] = static_cast<uint32_t>(m);
    cat->comp_[id * nm + m] = static_cast<uint32_t>(m);
  }
  cat->build_tables();
  return cat;
}

CatPtr FinCat::op(const CatPtr& c) {
  auto cat = std::shared_ptr<FinCat>(new FinCat());
  cat->objects_ = c->objects_;
  cat->identities_ = c->identities_;
  cat->morphisms_.reserve(c->morphisms_.size());
  for (const auto& m : c->morphisms_) cat->morphisms_.push_back({m.id, m.dst, m.src});
  std::size_t nm = cat->morphisms_.size();
  cat->comp_.assign(nm * nm, kUndef);
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f)
      if (c->comp_[g * nm + f] != kUndef) cat->comp_[f * nm + g] = c->comp_[g * nm + f];
  cat->build_tables();
  return cat;
}

FinFunctor::FinFunctor(CatPtr source, CatPtr target, std::vector<std::size_t> obj_map,
                       std::vector<std::size_t> mor_map)
    : src_(std::move(source)), dst_(std::move(target)), obj_map_(std::move(obj_map)),
      mor_map_(std::move(mor_map)) {
  const FinCat& A = *src_;
  const FinCat& B = *dst_;
  if (obj_map_.size() != A.num_objects() || mor_map_.size() != A.num_morphisms())
    throw CatError(CatErrorKind::BadReference, "functor maps have wrong length");
  for (std::size_t m = 0; m < A.num_morphisms(); ++m) {
    std::size_t fm = mor_map_[m];
    if (B.src(fm) != obj_map_[A.src(m)] || B.dst(fm) != obj_map_[A.dst(m)])
      throw CatError(CatErrorKind::BadReference,
                     "functor does not preserve source/target of " + A.mor(m).id);
  }
  for (std::size_t o = 0; o < A.num_objects(); ++o)
    if (mor_map_[A.identity(o)] != B.identity(obj_map_[o]))
      throw CatError(CatErrorKind::IdentityViolation,
                     "functor does not preserve identity of " + A.object_name(o));
  for (std::size_t g = 0; g < A.num_morphisms(); ++g)
    for (std::size_t f = 0; f < A.num_morphisms(); ++f)
      if (A.composable(g, f) &&
          mor_map_[A.compose(g, f)] != B.compose(mor_map_[g], mor_map_[f]))
        throw CatError(CatErrorKind::AssocViolation,
                       "functor does not preserve composite " + A.mor(g).id + " ∘ " + A.mor(f).id);
}

FinFunctor FinFunctor::identity(CatPtr c) {
  std::vector<std::size_t> om(c->num_objects()), mm(c->num_morphisms());
  std::iota(om.begin(), om.end(), std::size_t{0});
  std::iota(mm.begin(), mm.end(), std::size_t{0});
  return FinFunctor(c, c, std::move(om), std::move(mm));
}

FinFunctor FinFunctor::op(const CatPtr& src_op, const CatPtr& dst_op) const {
  return FinFunctor(src_op, dst_op, obj_map_, mor_map_);
}

}  // namespace ct
