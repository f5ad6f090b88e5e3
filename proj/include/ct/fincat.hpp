#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ct/finset.hpp"

namespace ct {

struct Mor {
  std::string id;
  std::size_t src = 0;
  std::size_t dst = 0;
};

enum class CatErrorKind {
  AssocViolation,
  IdentityViolation,
  IllTypedComposite,
  MissingComposite,
  MissingIdentity,
  DuplicateId,
  BadReference,
};

struct CatError : std::runtime_error {
  CatErrorKind kind;
  CatError(CatErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Raw composition tables, before validation.
struct RawCat {
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  // (g, f) -> g∘f, by morphism index; must cover the composable pairs,
  // though composites forced by identities may be omitted.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;
  // identities[o] = index of id_o; if empty, identities are searched for.
  std::vector<std::size_t> identities;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

// A finite category with explicit, fully checked composition tables.
class FinCat {
 public:
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const std::string& object_name(std::size_t o) const { return objects_.at(o); }
  const Mor& mor(std::size_t m) const { return morphisms_.at(m); }
  std::size_t src(std::size_t m) const { return morphisms_.at(m).src; }
  std::size_t dst(std::size_t m) const { return morphisms_.at(m).dst; }
  std::size_t identity(std::size_t o) const { return identities_.at(o); }
  bool is_identity(std::size_t m) const { return identities_.at(src(m)) == m && src(m) == dst(m); }

  // g∘f for f: a→b, g: b→c.
  std::size_t compose(std::size_t g, std::size_t f) const;
  bool composable(std::size_t g, std::size_t f) const { return dst(f) == src(g); }

  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const {
    return hom_.at(a * objects_.size() + b);
  }

  std::optional<std::size_t> object_index(const std::string& name) const;
  std::optional<std::size_t> mor_index(const std::string& id) const;

  // Builds and exhaustively checks associativity and identity laws.
  static CatPtr validate(const RawCat& raw);

  // Trusted builder for fixtures whose composition is function composition
  // by construction; runs only cheap structural checks.
  static CatPtr from_trusted(std::vector<std::string> objects, std::vector<Mor> morphisms,
                             std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose,
                             std::vector<std::size_t> identities);

  // Opposite category: same objects and morphism ids, arrows reversed.
  static CatPtr op(const CatPtr& c);

 private:
  FinCat() = default;
  void build_tables();
  void check_laws() const;

  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<uint32_t> comp_;  // flat num_morphisms^2 table, UINT32_MAX = undefined
  std::vector<std::vector<std::size_t>> hom_;
};

// Functor between finite categories; preservation laws checked on construction.
class FinFunctor {
 public:
  FinFunctor(CatPtr source, CatPtr target, std::vector<std::size_t> obj_map,
             std::vector<std::size_t> mor_map);

  const FinCat& source() const { return *src_; }
  const FinCat& target() const { return *dst_; }
  const CatPtr& source_ptr() const { return src_; }
  const CatPtr& target_ptr() const { return dst_; }
  std::size_t on_object(std::size_t o) const { return obj_map_.at(o); }
  std::size_t on_mor(std::size_t m) const { return mor_map_.at(m); }

  static FinFunctor identity(CatPtr c);
  // The induced functor source^op -> target^op (same maps, flipped bases).
  FinFunctor op(const CatPtr& src_op, const CatPtr& dst_op) const;

 private:
  CatPtr src_;
  CatPtr dst_;
  std::vector<std::size_t> obj_map_;
  std::vector<std::size_t> mor_map_;
};

}  // namespace ct
