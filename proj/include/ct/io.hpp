#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ct/fincat.hpp"
#include "ct/models.hpp"
#include "ct/presheaf.hpp"
#include "ct/theory.hpp"

// Structured-text file formats.  Each file opens with its kind keyword
// (category | presheaf | theory | model), followed by top-level `key:`
// sections whose entries sit on indented lines.  `#` starts a comment.
// Unknown keys are rejected.  The exact grammar is documented in README.md.
namespace ct::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedCategory {
  std::string name;
  CatPtr cat;
};

NamedCategory parse_category(const std::string& text);
std::string print_category(const FinCat& c, const std::string& name = "C");

using BaseResolver = std::function<CatPtr(const std::string&)>;
PshPtr parse_presheaf(const std::string& text, const BaseResolver& resolve);
std::string print_presheaf(const Presheaf& p, const std::string& base_name);

ThPtr parse_theory(const std::string& text, bool allow_unsafe = false,
                   std::size_t budget = 10000);
std::string print_theory(const TheoryPresentation& t);

// term in prefix syntax over an explicit variable context (name → index/sort)
Term parse_term(const Signature& sig, const std::string& text,
                const std::vector<std::string>& var_names,
                const std::vector<std::size_t>& var_sorts);

// sort/op assignment between two already-resolved theories; variables in the
// op entries are x0, x1, … for the translated argument positions
TheoryMorphism parse_theory_morphism(const std::string& text, ThPtr source, ThPtr target);
std::string print_theory_morphism(const TheoryMorphism& g);

using TheoryResolver = std::function<ThPtr(const std::string&)>;
Model parse_model(const std::string& text, const TheoryResolver& resolve);
std::string print_model(const Model& m, const std::string& theory_name);

std::string read_file(const std::string& path);

}  // namespace ct::io
