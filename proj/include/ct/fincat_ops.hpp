#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/fincat.hpp"

namespace ct {

struct SiftedWitness {
  std::size_t obj_a = 0;
  std::size_t obj_b = 0;
  bool empty_category = false;   // the category itself has no objects
  bool empty_cospans = false;    // no cospans at all from obj_a to obj_b
  // cospans grouped into connected components (as (apex, f: a→apex, g: b→apex) ids)
  std::vector<std::vector<std::string>> components;
};

struct SiftedReport {
  bool sifted = false;
  std::optional<SiftedWitness> witness;
};

// A non-empty category is sifted iff for every ordered object pair (a, b)
// the category of cospans from a to b is connected.
SiftedReport is_sifted(const CatPtr& c);

struct CatWithEmbedding {
  CatPtr cat;
  FinFunctor embedding;
  bool truncated = false;
  CatWithEmbedding(CatPtr c, FinFunctor e, bool t) : cat(std::move(c)), embedding(std::move(e)), truncated(t) {}
};

// Free completion under finite coproducts, truncated to families of total
// size <= max_family_size. Objects are sorted multisets of C-objects; a
// morphism is a reindexing function together with componentwise C-morphisms.
// Returns the inclusion of singletons.
CatWithEmbedding fam_completion(const CatPtr& c, std::size_t max_family_size);

struct BoundTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SplitResult {
  CatPtr cat;
  FinFunctor embedding;
  std::vector<std::pair<std::size_t, std::size_t>> objects;  // (C-object, idempotent)
  std::vector<std::size_t> underlying_mor;                   // split morphism → C-morphism
  SplitResult(CatPtr c, FinFunctor e, std::vector<std::pair<std::size_t, std::size_t>> o,
              std::vector<std::size_t> u)
      : cat(std::move(c)), embedding(std::move(e)), objects(std::move(o)),
        underlying_mor(std::move(u)) {}
};

// Cauchy completion: objects are (object, idempotent) pairs; returns the
// embedding c ↦ (c, id). Every idempotent in the result splits.
SplitResult split_idempotents(const CatPtr& c);

// All idempotent morphisms of c.
std::vector<std::size_t> idempotents(const FinCat& c);

}  // namespace ct
