#include "ct/theory.hpp"

#include <algorithm>
#include <set>

namespace ct {

ThPtr TheoryPresentation::load(std::string name, Signature sig, RewriteSystem rules,
                               bool allow_unsafe, std::size_t budget) {
  sig.validate();
  rules.validate(sig);
  for (auto& r : rules.rules) {
    r.lhs = canonicalize(sig, r.lhs);
    r.rhs = canonicalize(sig, r.rhs);
    if (r.lhs.is_var())
      throw TheoryError("rule in " + name + " collapses to a bare variable under AC");
  }
  auto t = std::make_shared<TheoryPresentation>();
  t->name_ = std::move(name);
  t->sig_ = std::move(sig);
  t->rules_ = std::move(rules);
  t->budget_ = budget;
  auto report = local_confluence_report(t->sig_, t->rules_, budget);
  t->confluence_clean_ = report.empty();
  if (!t->confluence_clean_ && !allow_unsafe) {
    std::string msg = "theory " + t->name_ + " has unjoinable critical pairs:";
    for (const auto& cp : report)
      msg += "\n  " + term_to_string(t->sig_, cp.left) + "  vs  " +
             term_to_string(t->sig_, cp.right);
    throw UnsafeTheory(msg);
  }
  return t;
}

std::vector<std::size_t> TheoryPresentation::ctx(std::size_t n) const {
  if (sig_.sorts.size() != 1)
    throw TheoryError("numeric contexts need a single-sorted theory");
  return std::vector<std::size_t>(n, 0);
}

namespace {

// one closure round: apply every operation to tuples from the snapshot,
// normalize, collect anything new
bool closure_round(const Signature& sig, const Normalizer& nz,
                   std::vector<std::vector<Term>>& sets) {
  bool grew = false;
  std::vector<std::vector<Term>> snapshot = sets;
  std::vector<std::set<Term>> index(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s)
    index[s] = std::set<Term>(sets[s].begin(), sets[s].end());
  for (std::size_t o = 0; o < sig.ops.size(); ++o) {
    const auto& op = sig.ops[o];
    if (op.arity() == 0) continue;
    bool feasible = true;
    for (auto s : op.arg_sorts)
      if (snapshot[s].empty()) feasible = false;
    if (!feasible) continue;
    std::vector<std::size_t> pick(op.arity(), 0);
    for (;;) {
      std::vector<Term> args;
      for (std::size_t i = 0; i < op.arity(); ++i)
        args.push_back(snapshot[op.arg_sorts[i]][pick[i]]);
      Term nf = nz.normalize(Term::make_app(sig, o, std::move(args))).term;
      if (index[nf.sort].insert(nf).second) {
        sets[nf.sort].push_back(nf);
        grew = true;
      }
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
  return grew;
}

}  // namespace

NormalFormSet normal_forms(const TheoryPresentation& t,
                           const std::vector<std::size_t>& context_sorts, std::size_t depth) {
  const Signature& sig = t.sig();
  Normalizer nz = t.normalizer();
  std::vector<std::vector<Term>> sets(sig.sorts.size());
  auto seed = [&](const Term& raw) {
    Term nf = nz.normalize(raw).term;
    auto& v = sets[nf.sort];
    if (std::find(v.begin(), v.end(), nf) == v.end()) v.push_back(nf);
  };
  for (std::size_t i = 0; i < context_sorts.size(); ++i)
    seed(Term::make_var(i, context_sorts[i]));
  for (std::size_t o = 0; o < sig.ops.size(); ++o)
    if (sig.ops[o].arity() == 0) seed(Term::make_app(sig, o, {}));

  bool grew = depth == 0;  // with zero rounds the probe below decides
  for (std::size_t k = 0; k < depth; ++k) grew = closure_round(sig, nz, sets);

  NormalFormSet out;
  out.depth = depth;
  if (!grew && depth > 0) {
    out.saturated = true;
  } else {
    auto probe = sets;
    out.saturated = !closure_round(sig, nz, probe);
  }
  out.by_sort = std::move(sets);
  for (auto& v : out.by_sort) std::sort(v.begin(), v.end());
  return out;
}

HomSet hom_enumerate(const TheoryPresentation& t, const std::vector<std::size_t>& source_ctx,
                     const std::vector<std::size_t>& target_ctx, std::size_t depth) {
  if (!t.confluence_clean())
    throw UnsafeTheory("hom_enumerate: theory " + t.name() + " loaded with unjoinable pairs");
  NormalFormSet nfs = normal_forms(t, source_ctx, depth);
  HomSet out;
  out.depth = depth;
  out.truncated = !nfs.saturated;
  std::size_t n = target_ctx.size();
  std::vector<std::size_t> pick(n, 0);
  for (auto s : target_ctx)
    if (nfs.by_sort[s].empty()) return out;  // no tuples
  for (;;) {
    TheoryHom h;
    h.source_ctx = source_ctx;
    h.target_ctx = target_ctx;
    for (std::size_t j = 0; j < n; ++j) h.terms.push_back(nfs.by_sort[target_ctx[j]][pick[j]]);
    out.homs.push_back(std::move(h));
    if (n == 0) break;
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < nfs.by_sort[target_ctx[i]].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  std::sort(out.homs.begin(), out.homs.end());
  return out;
}

TheoryHom compose_hom(const TheoryPresentation& t, const TheoryHom& f, const TheoryHom& g) {
  if (f.target_ctx != g.source_ctx) throw TheoryError("compose_hom: context mismatch");
  Normalizer nz = t.normalizer();
  TheoryHom out;
  out.source_ctx = f.source_ctx;
  out.target_ctx = g.target_ctx;
  std::vector<std::optional<Term>> binding(f.terms.size());
  for (std::size_t j = 0; j < f.terms.size(); ++j) binding[j] = f.terms[j];
  for (const auto& gt : g.terms)
    out.terms.push_back(nz.normalize(substitute(t.sig(), gt, binding)).term);
  return out;
}

TheoryHom identity_hom(const TheoryPresentation& t, const std::vector<std::size_t>& ctx) {
  (void)t;
  TheoryHom h;
  h.source_ctx = ctx;
  h.target_ctx = ctx;
  for (std::size_t i = 0; i < ctx.size(); ++i) h.terms.push_back(Term::make_var(i, ctx[i]));
  return h;
}

Term translate(const TheoryMorphism& g, const Term& t) {
  const Signature& tsig = g.target->sig();
  if (t.is_var()) return Term::make_var(t.var, g.sort_map.at(t.sort));
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(translate(g, a));
  // source AC nodes may be n-ary; fold through the mapped binary term
  const Term& image = g.op_map.at(t.op);
  if (args.size() > g.source->sig().ops[t.op].arity() && args.size() > 2) {
    Term acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
      std::vector<std::optional<Term>> b = {acc, args[i]};
      acc = substitute(tsig, image, b);
    }
    return acc;
  }
  std::vector<std::optional<Term>> b(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) b[i] = args[i];
  if (args.empty()) return canonicalize(tsig, image);
  return substitute(tsig, image, b);
}

MorphismReport check_theory_morphism(const TheoryMorphism& g) {
  MorphismReport rep;
  Normalizer nz = g.target->normalizer();
  const auto& rules = g.source->rules().rules;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    Term l = nz.normalize(translate(g, rules[i].lhs)).term;
    Term r = nz.normalize(translate(g, rules[i].rhs)).term;
    if (!(l == r)) {
      rep.ok = false;
      rep.failing_rule = i;
      rep.lhs_nf = l;
      rep.rhs_nf = r;
      return rep;
    }
  }
  return rep;
}

ProductCheckReport finite_product_check(const TheoryPresentation& t,
                                        const std::vector<std::size_t>& k_ctx,
                                        const std::vector<std::size_t>& m_ctx,
                                        const std::vector<std::size_t>& n_ctx, std::size_t depth) {
  std::vector<std::size_t> mn_ctx = m_ctx;
  mn_ctx.insert(mn_ctx.end(), n_ctx.begin(), n_ctx.end());
  HomSet hmn = hom_enumerate(t, k_ctx, mn_ctx, depth);
  HomSet hm = hom_enumerate(t, k_ctx, m_ctx, depth);
  HomSet hn = hom_enumerate(t, k_ctx, n_ctx, depth);
  ProductCheckReport rep;
  rep.lhs = hmn.homs.size();
  rep.rhs = hm.homs.size() * hn.homs.size();
  rep.truncated = hmn.truncated || hm.truncated || hn.truncated;
  if (rep.lhs != rep.rhs) return rep;
  // pairing: split each (m+n)-tuple and find the parts
  for (const auto& h : hmn.homs) {
    TheoryHom a, b;
    a.source_ctx = b.source_ctx = k_ctx;
    a.target_ctx = m_ctx;
    b.target_ctx = n_ctx;
    a.terms.assign(h.terms.begin(), h.terms.begin() + m_ctx.size());
    b.terms.assign(h.terms.begin() + m_ctx.size(), h.terms.end());
    if (!std::binary_search(hm.homs.begin(), hm.homs.end(), a) ||
        !std::binary_search(hn.homs.begin(), hn.homs.end(), b))
      return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace ct
