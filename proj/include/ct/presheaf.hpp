#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ct/fincat.hpp"
#include "ct/finset.hpp"

namespace ct {

struct PresheafError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Presheaf;
using PshPtr = std::shared_ptr<const Presheaf>;

// FinSet-valued presheaf on a finite category: contravariant, so a base
// morphism f: a→b acts by a function sets(b) → sets(a).
class Presheaf {
 public:
  Presheaf(CatPtr base, std::vector<FinSet> sets, std::vector<FinFunction> actions,
           std::string label = "");

  const FinCat& base() const { return *base_; }
  const CatPtr& base_ptr() const { return base_; }
  const FinSet& at(std::size_t obj) const { return sets_.at(obj); }
  const FinFunction& action(std::size_t mor) const { return actions_.at(mor); }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  std::size_t total_elements() const;
  bool same_shape(const Presheaf& o) const;  // equal base, sets, actions (names ignored)

  static PshPtr make(CatPtr base, std::vector<FinSet> sets, std::vector<FinFunction> actions,
                     std::string label = "");

  // For constructions that are functorial by construction; skips the
  // exhaustive composition check (type shape is still verified).
  static PshPtr make_unchecked(CatPtr base, std::vector<FinSet> sets,
                               std::vector<FinFunction> actions, std::string label = "");

  // Representable y(c) = C(−, c): at(a) = hom(a, c).
  static PshPtr representable(const CatPtr& base, std::size_t c);

  // Constant presheaf with an n-element value at every object.
  static PshPtr constant(const CatPtr& base, std::size_t n);

 private:
  struct Unchecked {};
  Presheaf(Unchecked, CatPtr base, std::vector<FinSet> sets, std::vector<FinFunction> actions,
           std::string label);
  void check_shape() const;

  CatPtr base_;
  std::vector<FinSet> sets_;
  std::vector<FinFunction> actions_;
  std::string label_;
};

// Natural transformation between presheaves on the same base.
class PresheafMap {
 public:
  PresheafMap(PshPtr source, PshPtr target, std::vector<FinFunction> components);

  const Presheaf& source() const { return *src_; }
  const Presheaf& target() const { return *dst_; }
  const PshPtr& source_ptr() const { return src_; }
  const PshPtr& target_ptr() const { return dst_; }
  const FinFunction& at(std::size_t obj) const { return components_.at(obj); }
  const std::vector<FinFunction>& components() const { return components_; }

  bool is_isomorphism() const;
  PresheafMap after(const PresheafMap& f) const;  // this ∘ f

  bool operator==(const PresheafMap& o) const { return components_ == o.components_; }
  bool operator<(const PresheafMap& o) const { return components_ < o.components_; }

 private:
  PshPtr src_;
  PshPtr dst_;
  std::vector<FinFunction> components_;
};

// Covariant FinSet-valued diagram on a finite shape category.
struct SetDiagram {
  CatPtr shape;
  std::vector<FinSet> at;          // per shape object
  std::vector<FinFunction> arrow;  // per shape morphism, at(src) → at(dst)

  SetDiagram(CatPtr s, std::vector<FinSet> a, std::vector<FinFunction> arr);
};

}  // namespace ct
