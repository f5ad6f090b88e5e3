#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ct/models.hpp"
#include "ct/presheaf_ops.hpp"
#include "ct/theory.hpp"

// Built-in example categories, presheaves, theories and models.  Everything
// the CLI generators and the test batteries refer to lives here so that no
// run depends on hand-authored input files.
namespace ct::fixtures {

// base for graphs: two objects v, e with s, t: v → e
CatPtr gph_base();
// base for reflexive graphs: adds r: e → v with rs = rt = id_v
CatPtr rgph_base();

PshPtr gph_V();         // y(v): one vertex, no edge
PshPtr gph_E();         // y(e): one edge on two vertices
PshPtr gph_terminal();  // one vertex, one loop

// the reflexive pair E+V ⇉ E whose coequalizer is the terminal graph
ColimitResult gph_reflexive_coequalizer();

// finite sets 0..K and injections between them
CatPtr inj_cat(std::size_t K);
// the covariant representable I(n,−) as a presheaf on inj_cat(K)^op
PshPtr inj_y(std::size_t n, std::size_t K);

// the five index categories of the siftedness battery, with expected verdicts
struct IndexCase {
  std::string name;
  CatPtr cat;
  bool sifted;
};
std::vector<IndexCase> sifted_test_categories();

ThPtr empty_theory();
ThPtr pointed_theory();
ThPtr monoid_theory();
ThPtr group_theory();
ThPtr comm_monoid_theory();
ThPtr semilattice_theory();  // commutative, idempotent, with unit

ThPtr theory_by_name(const std::string& name);  // throws TheoryError on unknown

Model z2_group();
Model z4_group();
Model left_zero_unit_monoid();          // {1, a, b} with ab = a, ba = b
Model set_model(const ThPtr& empty, std::size_t n);

TheoryMorphism monoid_to_comm_monoid();            // abelianization
TheoryMorphism empty_to(const ThPtr& target);      // the unique map from the empty theory

}  // namespace ct::fixtures
