#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ct {

struct TermError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SortMismatch : TermError {
  using TermError::TermError;
};
struct UnboundVariable : TermError {
  using TermError::TermError;
};

struct Signature {
  struct Op {
    std::string name;
    std::vector<std::size_t> arg_sorts;
    std::size_t result_sort = 0;
    std::size_t arity() const { return arg_sorts.size(); }
  };
  struct AcFlag {
    std::size_t op;                        // binary, both args and result of one sort
    std::optional<std::size_t> unit_op;    // nullary op of the same sort
  };

  std::vector<std::string> sorts;
  std::vector<Op> ops;
  std::vector<AcFlag> ac;

  std::optional<std::size_t> sort_index(const std::string& name) const;
  std::optional<std::size_t> op_index(const std::string& name) const;
  bool is_ac(std::size_t op) const;
  std::optional<std::size_t> ac_unit(std::size_t op) const;

  // checks name uniqueness and AC flag well-formedness
  void validate() const;
};

// A term over an implicit context of sorted variables. AC-canonical form may
// hold n >= 2 arguments under an AC-flagged binary operation.
struct Term {
  std::size_t op = SIZE_MAX;  // SIZE_MAX means variable
  std::size_t var = 0;        // context index when variable
  std::size_t sort = 0;
  std::vector<Term> args;

  bool is_var() const { return op == SIZE_MAX; }

  static Term make_var(std::size_t index, std::size_t sort);
  // sort-checked application (exact arity)
  static Term make_app(const Signature& sig, std::size_t op, std::vector<Term> args);
  // n-ary node under an AC op, no canonicalization applied
  static Term make_ac_node(const Signature& sig, std::size_t op, std::vector<Term> args);

  std::size_t depth() const;
  std::size_t node_count() const;
  void collect_vars(std::vector<std::size_t>& out) const;

  bool operator==(const Term& o) const;
  bool operator<(const Term& o) const;  // degree-lexicographic total order
};

// Flattens AC nodes, strips AC units, sorts AC arguments; idempotent.
Term canonicalize(const Signature& sig, const Term& t);

// Simultaneous substitution; binding[i] replaces variable i. Result is
// canonicalized. Throws UnboundVariable / SortMismatch.
Term substitute(const Signature& sig, const Term& t, const std::vector<std::optional<Term>>& binding);

std::string term_to_string(const Signature& sig, const Term& t,
                           const std::vector<std::string>& var_names);
// default variable names x0, x1, ...
std::string term_to_string(const Signature& sig, const Term& t);

// All sort-correct terms over the context with depth <= bound, canonicalized,
// deduplicated, in canonical order.
std::vector<Term> enumerate_terms(const Signature& sig, const std::vector<std::size_t>& context_sorts,
                                  std::size_t depth);

}  // namespace ct
