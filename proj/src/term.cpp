#include "ct/term.hpp"

#include <algorithm>
#include <set>

namespace ct {

std::optional<std::size_t> Signature::sort_index(const std::string& name) const {
  for (std::size_t i = 0; i < sorts.size(); ++i)
    if (sorts[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::op_index(const std::string& name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return i;
  return std::nullopt;
}

bool Signature::is_ac(std::size_t op) const {
  for (const auto& f : ac)
    if (f.op == op) return true;
  return false;
}

std::optional<std::size_t> Signature::ac_unit(std::size_t op) const {
  for (const auto& f : ac)
    if (f.op == op) return f.unit_op;
  return std::nullopt;
}

void Signature::validate() const {
  std::set<std::string> names;
  for (const auto& o : ops) {
    if (!names.insert(o.name).second) throw TermError("duplicate operation name " + o.name);
    if (o.result_sort >= sorts.size()) throw TermError("bad result sort for " + o.name);
    for (auto s : o.arg_sorts)
      if (s >= sorts.size()) throw TermError("bad argument sort for " + o.name);
  }
  for (const auto& f : ac) {
    if (f.op >= ops.size()) throw TermError("AC flag on unknown operation");
    const Op& o = ops[f.op];
    if (o.arity() != 2 || o.arg_sorts[0] != o.arg_sorts[1] || o.arg_sorts[0] != o.result_sort)
      throw TermError("AC operation " + o.name + " is not a binary endo-operation");
    if (f.unit_op) {
      const Op& u = ops[*f.unit_op];
      if (u.arity() != 0 || u.result_sort != o.result_sort)
        throw TermError("AC unit for " + o.name + " is not a constant of the right sort");
    }
  }
}

Term Term::make_var(std::size_t index, std::size_t sort) {
  Term t;
  t.op = SIZE_MAX;
  t.var = index;
  t.sort = sort;
  return t;
}

Term Term::make_app(const Signature& sig, std::size_t op, std::vector<Term> args) {
  const auto& o = sig.ops.at(op);
  if (args.size() != o.arity()) throw SortMismatch("arity mismatch applying " + o.name);
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i].sort != o.arg_sorts[i])
      throw SortMismatch("sort mismatch in argument " + std::to_string(i) + " of " + o.name);
  Term t;
  t.op = op;
  t.sort = o.result_sort;
  t.args = std::move(args);
  return t;
}

Term Term::make_ac_node(const Signature& sig, std::size_t op, std::vector<Term> args) {
  const auto& o = sig.ops.at(op);
  if (!sig.is_ac(op) || args.size() < 2) throw SortMismatch("bad AC node for " + o.name);
  for (const auto& a : args)
    if (a.sort != o.result_sort) throw SortMismatch("sort mismatch in AC node of " + o.name);
  Term t;
  t.op = op;
  t.sort = o.result_sort;
  t.args = std::move(args);
  return t;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return args.empty() ? 0 : d + 1;
}

std::size_t Term::node_count() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.node_count();
  return n;
}

void Term::collect_vars(std::vector<std::size_t>& out) const {
  if (is_var()) {
    out.push_back(var);
    return;
  }
  for (const auto& a : args) a.collect_vars(out);
}

bool Term::operator==(const Term& o) const {
  return op == o.op && (is_var() ? var == o.var : args == o.args) && sort == o.sort;
}

bool Term::operator<(const Term& o) const {
  std::size_t d1 = depth(), d2 = o.depth();
  if (d1 != d2) return d1 < d2;
  std::size_t n1 = node_count(), n2 = o.node_count();
  if (n1 != n2) return n1 < n2;
  if (is_var() != o.is_var()) return is_var();  // variables before applications
  if (is_var()) return var < o.var;
  if (op != o.op) return op < o.op;
  return args < o.args;
}

Term canonicalize(const Signature& sig, const Term& t) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(canonicalize(sig, a));
  if (!sig.is_ac(t.op)) {
    Term r;
    r.op = t.op;
    r.sort = t.sort;
    r.args = std::move(args);
    return r;
  }
  auto unit = sig.ac_unit(t.op);
  std::vector<Term> flat;
  for (auto& a : args) {
    if (a.op == t.op) {
      for (auto& b : a.args) flat.push_back(std::move(b));
    } else if (unit && a.op == *unit) {
      // drop units
    } else {
      flat.push_back(std::move(a));
    }
  }
  if (flat.empty()) {
    if (!unit) throw TermError("AC node collapsed with no unit available");
    Term u;
    u.op = *unit;
    u.sort = t.sort;
    return u;
  }
  if (flat.size() == 1) return flat[0];
  std::sort(flat.begin(), flat.end());
  Term r;
  r.op = t.op;
  r.sort = t.sort;
  r.args = std::move(flat);
  return r;
}

Term substitute(const Signature& sig, const Term& t,
                const std::vector<std::optional<Term>>& binding) {
  struct Rec {
    const Signature& sig;
    const std::vector<std::optional<Term>>& b;
    Term go(const Term& t) const {
      if (t.is_var()) {
        if (t.var >= b.size() || !b[t.var])
          throw UnboundVariable("unbound variable #" + std::to_string(t.var));
        if (b[t.var]->sort != t.sort) throw SortMismatch("substitution changes sort");
        return *b[t.var];
      }
      Term r;
      r.op = t.op;
      r.sort = t.sort;
      r.args.reserve(t.args.size());
      for (const auto& a : t.args) r.args.push_back(go(a));
      return r;
    }
  } rec{sig, binding};
  return canonicalize(sig, rec.go(t));
}

std::string term_to_string(const Signature& sig, const Term& t,
                           const std::vector<std::string>& var_names) {
  if (t.is_var())
    return t.var < var_names.size() ? var_names[t.var] : "x" + std::to_string(t.var);
  std::string s = sig.ops.at(t.op).name;
  if (t.args.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += term_to_string(sig, t.args[i], var_names);
  }
  return s + ")";
}

std::string term_to_string(const Signature& sig, const Term& t) {
  return term_to_string(sig, t, {});
}

std::vector<Term> enumerate_terms(const Signature& sig,
                                  const std::vector<std::size_t>& context_sorts,
                                  std::size_t depth) {
  // layered: T_0 = vars + constants, T_{k} adds ops applied to T_{k-1}
  std::vector<std::vector<Term>> by_sort(sig.sorts.size());
  auto add = [&](const Term& t) {
    auto& v = by_sort[t.sort];
    Term c = canonicalize(sig, t);
    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
  };
  for (std::size_t i = 0; i < context_sorts.size(); ++i)
    add(Term::make_var(i, context_sorts[i]));
  for (std::size_t o = 0; o < sig.ops.size(); ++o)
    if (sig.ops[o].arity() == 0) add(Term::make_app(sig, o, {}));
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<std::vector<Term>> snapshot = by_sort;
    for (std::size_t o = 0; o < sig.ops.size(); ++o) {
      const auto& op = sig.ops[o];
      if (op.arity() == 0) continue;
      std::vector<std::size_t> pick(op.arity(), 0);
      bool feasible = true;
      for (auto s : op.arg_sorts)
        if (snapshot[s].empty()) feasible = false;
      if (!feasible) continue;
      for (;;) {
        std::vector<Term> args;
        for (std::size_t i = 0; i < op.arity(); ++i)
          args.push_back(snapshot[op.arg_sorts[i]][pick[i]]);
        add(Term::make_app(sig, o, std::move(args)));
        std::size_t i = op.arity();
        bool done = true;
        while (i > 0) {
          --i;
          if (++pick[i] < snapshot[op.arg_sorts[i]].size()) {
            done = false;
            break;
          }
          pick[i] = 0;
        }
        if (done) break;
      }
    }
  }
  std::vector<Term> out;
  for (auto& v : by_sort)
    for (auto& t : v)
      if (t.depth() <= depth) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ct
