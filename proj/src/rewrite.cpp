#include "ct/rewrite.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ct {

void RewriteSystem::validate(const Signature& sig) const {
  for (const auto& r : rules) {
    if (r.lhs.is_var()) throw TermError("rule left-hand side is a bare variable");
    if (r.lhs.sort != r.rhs.sort) throw SortMismatch("rule sides have different sorts");
    std::vector<std::size_t> lv, rv;
    r.lhs.collect_vars(lv);
    r.rhs.collect_vars(rv);
    std::set<std::size_t> lset(lv.begin(), lv.end());
    for (auto v : rv)
      if (!lset.count(v)) throw TermError("rule right-hand side has a fresh variable");
    for (auto v : lv)
      if (v >= r.var_sorts.size()) throw TermError("rule variable out of context");
  }
}

namespace {

using Binding = std::vector<std::optional<Term>>;

// syntactic matching on canonical terms; AC nodes need equal arity and are
// matched through argument permutations
bool match(const Signature& sig, const Term& pat, const Term& sub, Binding& b) {
  if (pat.is_var()) {
    if (pat.sort != sub.sort) return false;
    if (b[pat.var]) return *b[pat.var] == sub;
    b[pat.var] = sub;
    return true;
  }
  if (sub.is_var() || pat.op != sub.op) return false;
  if (pat.args.size() != sub.args.size()) return false;
  if (!sig.is_ac(pat.op) || pat.args.size() <= 1) {
    for (std::size_t i = 0; i < pat.args.size(); ++i)
      if (!match(sig, pat.args[i], sub.args[i], b)) return false;
    return true;
  }
  // AC: injective assignment of pattern args to subject args
  std::size_t n = pat.args.size();
  std::vector<char> used(n, 0);
  struct Rec {
    const Signature& sig;
    const Term& pat;
    const Term& sub;
    std::vector<char>& used;
    bool go(std::size_t i, Binding& b) const {
      if (i == pat.args.size()) return true;
      for (std::size_t j = 0; j < sub.args.size(); ++j) {
        if (used[j]) continue;
        Binding save = b;
        if (match(sig, pat.args[i], sub.args[j], b)) {
          used[j] = 1;
          if (go(i + 1, b)) return true;
          used[j] = 0;
        }
        b = std::move(save);
      }
      return false;
    }
  } rec{sig, pat, sub, used};
  return rec.go(0, b);
}

}  // namespace

std::optional<Term> apply_rule_root(const Signature& sig, const Rule& rule, const Term& subject) {
  Binding b(rule.var_sorts.size());
  const Term& lhs = rule.lhs;
  bool ac_root = !lhs.is_var() && sig.is_ac(lhs.op) && lhs.args.size() >= 2;
  if (ac_root && !subject.is_var() && subject.op == lhs.op &&
      subject.args.size() > lhs.args.size()) {
    // match the pattern multiset against a sub-multiset, recombine the rest
    std::size_t n = subject.args.size();
    std::vector<char> used(n, 0);
    struct Rec {
      const Signature& sig;
      const Term& lhs;
      const Term& subject;
      std::vector<char>& used;
      bool go(std::size_t i, Binding& b) const {
        if (i == lhs.args.size()) return true;
        for (std::size_t j = 0; j < subject.args.size(); ++j) {
          if (used[j]) continue;
          Binding save = b;
          if (match(sig, lhs.args[i], subject.args[j], b)) {
            used[j] = 1;
            if (go(i + 1, b)) return true;
            used[j] = 0;
          }
          b = std::move(save);
        }
        return false;
      }
    } rec{sig, lhs, subject, used};
    if (!rec.go(0, b)) return std::nullopt;
    std::vector<Term> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (!used[j]) rest.push_back(subject.args[j]);
    Term head = substitute(sig, rule.rhs, b);
    rest.insert(rest.begin(), head);
    Term node;
    node.op = lhs.op;
    node.sort = subject.sort;
    node.args = std::move(rest);
    return canonicalize(sig, node);
  }
  Binding b2(rule.var_sorts.size());
  if (!match(sig, lhs, subject, b2)) return std::nullopt;
  return substitute(sig, rule.rhs, b2);
}

namespace {

// first applicable rewrite, innermost-leftmost; subject must be canonical
std::optional<std::pair<Term, std::size_t>> rewrite_once(const Signature& sig,
                                                         const RewriteSystem& rs, const Term& t) {
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    auto r = rewrite_once(sig, rs, t.args[i]);
    if (r) {
      Term out = t;
      out.args[i] = std::move(r->first);
      return std::make_pair(std::move(out), r->second);
    }
  }
  for (std::size_t ri = 0; ri < rs.rules.size(); ++ri) {
    auto r = apply_rule_root(sig, rs.rules[ri], t);
    if (r) return std::make_pair(std::move(*r), ri);
  }
  return std::nullopt;
}

}  // namespace

NormalForm Normalizer::normalize(const Term& t) const {
  auto r = try_normalize(t);
  if (!r) throw BudgetError(t, budget);
  return *r;
}

std::optional<NormalForm> Normalizer::try_normalize(const Term& t) const {
  NormalForm nf;
  nf.term = canonicalize(sig, t);
  for (;;) {
    auto r = rewrite_once(sig, rs, nf.term);
    if (!r) return nf;
    if (nf.steps >= budget) return std::nullopt;
    nf.term = canonicalize(sig, r->first);
    nf.rule_trace.push_back(r->second);
    ++nf.steps;
  }
}

bool Normalizer::is_normal(const Term& t) const {
  Term c = canonicalize(sig, t);
  return c == t && !rewrite_once(sig, rs, c).has_value();
}

// ---------------------------------------------------------- critical pairs

namespace {

using Binding = std::vector<std::optional<Term>>;

Term resolve(const Term& t, const Binding& b) {
  if (t.is_var()) {
    if (t.var < b.size() && b[t.var]) return resolve(*b[t.var], b);
    return t;
  }
  Term r = t;
  for (auto& a : r.args) a = resolve(a, b);
  return r;
}

bool occurs(std::size_t v, const Term& t, const Binding& b) {
  Term r = resolve(t, b);
  std::vector<std::size_t> vars;
  r.collect_vars(vars);
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

bool unify(const Signature& sig, const Term& a, const Term& b, Binding& bind) {
  Term t1 = a.is_var() && a.var < bind.size() && bind[a.var] ? *bind[a.var] : a;
  Term t2 = b.is_var() && b.var < bind.size() && bind[b.var] ? *bind[b.var] : b;
  if (!(t1 == a) || !(t2 == b)) return unify(sig, t1, t2, bind);
  if (t1.is_var() && t2.is_var() && t1.var == t2.var) return true;
  if (t1.is_var()) {
    if (t1.sort != t2.sort || occurs(t1.var, t2, bind)) return false;
    bind[t1.var] = t2;
    return true;
  }
  if (t2.is_var()) return unify(sig, t2, t1, bind);
  if (t1.op != t2.op || t1.args.size() != t2.args.size()) return false;
  if (!sig.is_ac(t1.op) || t1.args.size() <= 1) {
    for (std::size_t i = 0; i < t1.args.size(); ++i)
      if (!unify(sig, t1.args[i], t2.args[i], bind)) return false;
    return true;
  }
  // AC node: try permutations of the second node's arguments
  std::vector<std::size_t> perm(t2.args.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    Binding save = bind;
    bool ok = true;
    for (std::size_t i = 0; i < t1.args.size() && ok; ++i)
      if (!unify(sig, t1.args[i], t2.args[perm[i]], bind)) ok = false;
    if (ok) return true;
    bind = std::move(save);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// all non-variable positions of t, as index paths
void positions(const Term& t, std::vector<std::size_t>& path,
               std::vector<std::vector<std::size_t>>& out) {
  if (t.is_var()) return;
  out.push_back(path);
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    path.push_back(i);
    positions(t.args[i], path, out);
    path.pop_back();
  }
}

const Term& subterm(const Term& t, const std::vector<std::size_t>& path) {
  const Term* cur = &t;
  for (auto i : path) cur = &cur->args[i];
  return *cur;
}

Term replace_at(const Term& t, const std::vector<std::size_t>& path, const Term& s,
                std::size_t depth = 0) {
  if (depth == path.size()) return s;
  Term r = t;
  r.args[path[depth]] = replace_at(t.args[path[depth]], path, s, depth + 1);
  return r;
}

Term shift_vars(const Term& t, std::size_t offset) {
  if (t.is_var()) return Term::make_var(t.var + offset, t.sort);
  Term r = t;
  for (auto& a : r.args) a = shift_vars(a, offset);
  return r;
}

}  // namespace

std::vector<CriticalPair> local_confluence_report(const Signature& sig, const RewriteSystem& rs,
                                                  std::size_t budget) {
  // AC-rooted left sides also contribute their extension rule m(l..., z) → m(r, z)
  std::vector<Rule> rules = rs.rules;
  std::vector<std::size_t> origin(rules.size());
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const Rule& r = rs.rules[i];
    if (!r.lhs.is_var() && sig.is_ac(r.lhs.op) && r.lhs.args.size() >= 2) {
      Rule ext = r;
      std::size_t z = ext.var_sorts.size();
      ext.var_sorts.push_back(r.lhs.sort);
      ext.var_names.push_back("zext");
      Term zv = Term::make_var(z, r.lhs.sort);
      ext.lhs.args.push_back(zv);
      std::sort(ext.lhs.args.begin(), ext.lhs.args.end());
      Term rhs_node;
      rhs_node.op = r.lhs.op;
      rhs_node.sort = r.lhs.sort;
      rhs_node.args = {ext.rhs, zv};
      ext.rhs = canonicalize(sig, rhs_node);
      rules.push_back(ext);
      origin.push_back(i);
    }
  }

  Normalizer nz{sig, rs, budget};
  std::vector<CriticalPair> unjoinable;
  std::set<std::pair<Term, Term>> seen;
  for (std::size_t a = 0; a < rules.size(); ++a) {
    for (std::size_t b = 0; b < rules.size(); ++b) {
      std::size_t off = rules[a].var_sorts.size();
      Rule rb;
      rb.var_sorts = rules[b].var_sorts;
      rb.lhs = shift_vars(rules[b].lhs, off);
      rb.rhs = shift_vars(rules[b].rhs, off);
      std::size_t ctx = off + rules[b].var_sorts.size();

      std::vector<std::vector<std::size_t>> pos;
      std::vector<std::size_t> path;
      positions(rules[a].lhs, path, pos);
      for (const auto& p : pos) {
        if (p.empty() && a == b) continue;  // trivial self-overlap at the root
        Binding bind(ctx);
        if (!unify(sig, subterm(rules[a].lhs, p), rb.lhs, bind)) continue;
        Term overlap = canonicalize(sig, resolve(rules[a].lhs, bind));
        Term left = canonicalize(sig, resolve(replace_at(rules[a].lhs, p, rb.rhs), bind));
        Term right = canonicalize(sig, resolve(rules[a].rhs, bind));
        if (left == right) continue;
        auto nl = nz.try_normalize(left);
        auto nr = nz.try_normalize(right);
        bool join = nl && nr && nl->term == nr->term;
        if (!join) {
          CriticalPair cp;
          cp.left = left;
          cp.right = right;
          cp.overlap = overlap;
          cp.rule_a = origin[a];
          cp.rule_b = origin[b];
          cp.joinable = false;
          if (nl) cp.nf_left = nl->term;
          if (nr) cp.nf_right = nr->term;
          auto key = cp.left < cp.right ? std::make_pair(cp.left, cp.right)
                                        : std::make_pair(cp.right, cp.left);
          if (seen.insert(key).second) unjoinable.push_back(std::move(cp));
        }
      }
    }
  }
  return unjoinable;
}

}  // namespace ct
