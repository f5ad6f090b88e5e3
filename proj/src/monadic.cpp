#include "ct/monadic.hpp"

#include <algorithm>
#include <cmath>

namespace ct {

namespace {

void require_single_sorted(const ThPtr& t) {
  if (t->sig().sorts.size() != 1)
    throw MonadicError("monads on Set need a single-sorted theory, got " + t->name());
}

// rename variables through f and renormalize
Term rename_vars(const ThPtr& t, const Term& term, const std::vector<std::size_t>& f) {
  std::vector<std::optional<Term>> binding(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) binding[i] = Term::make_var(f[i], 0);
  return t->normalizer().normalize(substitute(t->sig(), term, binding)).term;
}

bool next_tuple(std::vector<std::size_t>& cur, std::size_t radix) {
  std::size_t i = cur.size();
  while (i > 0) {
    --i;
    if (++cur[i] < radix) return true;
    cur[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> MonadSlice::index_of(const Term& t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t);
  if (it == elements.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

MonadSlice monad_from_theory(const ThPtr& t, std::size_t n, std::size_t depth) {
  require_single_sorted(t);
  MonadSlice s;
  s.theory = t;
  s.n = n;
  s.depth = depth;
  NormalFormSet nfs = normal_forms(*t, std::vector<std::size_t>(n, 0), depth);
  s.elements = std::move(nfs.by_sort[0]);
  s.saturated = nfs.saturated;
  for (std::size_t i = 0; i < n; ++i) {
    auto p = s.index_of(Term::make_var(i, 0));
    if (!p) throw MonadicError("generator escaped its own slice");
    s.eta.push_back(*p);
  }
  return s;
}

FinFunction monad_on_function(const MonadSlice& sx, const MonadSlice& sy, const FinFunction& f) {
  if (f.src_size != sx.n || f.dst_size != sy.n)
    throw MonadicError("monad_on_function: function has wrong endpoints");
  std::vector<std::size_t> m(sx.size());
  for (std::size_t i = 0; i < sx.size(); ++i) {
    auto p = sy.index_of(rename_vars(sx.theory, sx.elements[i], f.map));
    if (!p) throw MonadicError("monad_on_function: image escapes the target slice");
    m[i] = *p;
  }
  return FinFunction(sx.size(), sy.size(), std::move(m));
}

MonadSlice iterate_slice(const MonadSlice& sx, std::size_t depth) {
  return monad_from_theory(sx.theory, sx.size(), depth);
}

std::vector<std::optional<std::size_t>> mu_map(const MonadSlice& sx, const MonadSlice& ttx) {
  std::vector<std::optional<Term>> binding(sx.size());
  for (std::size_t i = 0; i < sx.size(); ++i) binding[i] = sx.elements[i];
  Normalizer nz = sx.theory->normalizer();
  std::vector<std::optional<std::size_t>> out;
  out.reserve(ttx.size());
  for (const auto& u : ttx.elements)
    out.push_back(sx.index_of(nz.normalize(substitute(sx.theory->sig(), u, binding)).term));
  return out;
}

MonadLawReport monad_law_report(const ThPtr& t, std::size_t n, std::size_t depth,
                                std::size_t inner_depth) {
  MonadLawReport rep;
  MonadSlice sx = monad_from_theory(t, n, depth);
  MonadSlice ttx = iterate_slice(sx, inner_depth);
  std::vector<std::optional<std::size_t>> mu = mu_map(sx, ttx);
  rep.truncated = !sx.saturated || !ttx.saturated;

  std::vector<std::size_t> eta_sorted = sx.eta;
  std::sort(eta_sorted.begin(), eta_sorted.end());
  rep.eta_injective =
      std::adjacent_find(eta_sorted.begin(), eta_sorted.end()) == eta_sorted.end();

  // μ ∘ η_{T(X)} = id: the generator of T(T(X)) for element i flattens to i
  rep.unit_left = true;
  for (std::size_t i = 0; i < sx.size() && rep.unit_left; ++i) {
    auto p = ttx.index_of(Term::make_var(i, 0));
    if (!p || mu[*p] != std::make_optional(i)) {
      rep.unit_left = false;
      rep.detail = "left unit law fails at element " + std::to_string(i);
    }
  }

  // μ ∘ T(η) = id: rename X-generators to their η-images, then flatten
  rep.unit_right = true;
  for (std::size_t i = 0; i < sx.size() && rep.unit_right; ++i) {
    auto p = ttx.index_of(rename_vars(t, sx.elements[i], sx.eta));
    if (!p) {
      rep.truncated = true;
      continue;
    }
    if (mu[*p] != std::make_optional(i)) {
      rep.unit_right = false;
      rep.detail = "right unit law fails at element " + std::to_string(i);
    }
  }

  // associativity on terms over T(T(X)): one application layer over the
  // generators plays the role of sampled elements of T³(X)
  rep.assoc = true;
  Normalizer nz = t->normalizer();
  std::vector<std::optional<Term>> outer(ttx.size());
  for (std::size_t j = 0; j < ttx.size(); ++j) outer[j] = ttx.elements[j];
  std::vector<std::size_t> mu_rename(ttx.size(), 0);
  bool mu_total = true;
  for (std::size_t j = 0; j < ttx.size(); ++j) {
    if (!mu[j]) {
      mu_total = false;
      rep.truncated = true;
    } else {
      mu_rename[j] = *mu[j];
    }
  }
  const std::size_t cap = 1500;
  std::vector<Term> samples;
  for (std::size_t j = 0; j < ttx.size() && samples.size() < cap; ++j)
    samples.push_back(Term::make_var(j, 0));
  for (std::size_t op = 0; op < t->sig().ops.size() && samples.size() < cap; ++op) {
    std::size_t k = t->sig().ops[op].arity();
    if (k == 0) continue;
    std::vector<std::size_t> pick(k, 0);
    do {
      std::vector<Term> args;
      for (auto j : pick) args.push_back(Term::make_var(j, 0));
      samples.push_back(canonicalize(t->sig(), Term::make_app(t->sig(), op, std::move(args))));
    } while (next_tuple(pick, ttx.size()) && samples.size() < cap);
  }
  for (const auto& w : samples) {
    if (!mu_total) {
      // only keep samples whose generators all flatten in-bound
      std::vector<std::size_t> vars;
      w.collect_vars(vars);
      bool all_in = true;
      for (auto v : vars)
        if (!mu[v]) all_in = false;
      if (!all_in) continue;
    }
    // μ ∘ T(μ): rename each generator to its flattened element, then flatten
    Term via_tmu = nz.normalize(rename_vars(t, w, mu_rename)).term;
    std::vector<std::optional<Term>> b2(sx.size());
    for (std::size_t i = 0; i < sx.size(); ++i) b2[i] = sx.elements[i];
    Term lhs = nz.normalize(substitute(t->sig(), via_tmu, b2)).term;
    // μ ∘ μ_{T(X)}: substitute the T(T(X)) terms first, then the T(X) terms
    Term via_mu = nz.normalize(substitute(t->sig(), w, outer)).term;
    Term rhs = nz.normalize(substitute(t->sig(), via_mu, b2)).term;
    if (!(lhs == rhs)) {
      rep.assoc = false;
      rep.detail = "associativity fails on " + term_to_string(t->sig(), w);
      break;
    }
    ++rep.assoc_checked;
  }
  return rep;
}

MonadCatSlice theory_from_monad(const ThPtr& t, std::size_t max_arity, std::size_t depth) {
  require_single_sorted(t);
  MonadCatSlice out;
  out.theory = t;
  out.max_arity = max_arity;
  out.depth = depth;
  out.hom.resize((max_arity + 1) * (max_arity + 1));
  for (std::size_t m = 0; m <= max_arity; ++m) {
    MonadSlice sm = monad_from_theory(t, m, depth);
    if (!sm.saturated) out.truncated = true;
    for (std::size_t k = 0; k <= max_arity; ++k) {
      auto& hs = out.hom[m * (max_arity + 1) + k];
      if (k == 0) {
        TheoryHom h;
        h.source_ctx.assign(m, 0);
        h.target_ctx.clear();
        hs.push_back(std::move(h));
        continue;
      }
      if (sm.elements.empty()) continue;
      std::vector<std::size_t> pick(k, 0);
      do {
        TheoryHom h;
        h.source_ctx.assign(m, 0);
        h.target_ctx.assign(k, 0);
        for (auto i : pick) h.terms.push_back(sm.elements[i]);
        hs.push_back(std::move(h));
      } while (next_tuple(pick, sm.elements.size()));
      std::sort(hs.begin(), hs.end());
    }
  }
  return out;
}

RoundtripReport roundtrip_check(const ThPtr& t, std::size_t max_arity, std::size_t depth,
                                std::size_t max_composition_pairs) {
  RoundtripReport rep;
  MonadCatSlice mc = theory_from_monad(t, max_arity, depth);
  rep.truncated = mc.truncated;
  Normalizer nz = t->normalizer();
  for (std::size_t m = 0; m <= max_arity; ++m)
    for (std::size_t k = 0; k <= max_arity; ++k) {
      HomSet hs = hom_enumerate(*t, t->ctx(m), t->ctx(k), depth);
      const auto& ms = mc.at(m, k);
      rep.cardinalities.emplace_back(m, k, ms.size(), hs.homs.size());
      if (ms != hs.homs) {
        rep.detail = "hom(" + std::to_string(m) + "," + std::to_string(k) +
                     ") differs between the monad and the theory";
        return rep;
      }
      // identities sit in both sides at m = k
      if (m == k) {
        TheoryHom id = identity_hom(*t, t->ctx(m));
        if (!std::binary_search(ms.begin(), ms.end(), id)) {
          rep.detail = "identity missing from hom(" + std::to_string(m) + "," +
                       std::to_string(m) + ")";
          return rep;
        }
      }
    }
  // composition: Kleisli substitution on the monad side must agree with the
  // theory's compose_hom, and stay inside the hom-set when saturated
  for (std::size_t m = 0; m <= max_arity; ++m)
    for (std::size_t k = 0; k <= max_arity; ++k)
      for (std::size_t l = 0; l <= max_arity; ++l)
        for (const auto& f : mc.at(m, k))
          for (const auto& g : mc.at(k, l)) {
            if (rep.compositions_checked >= max_composition_pairs) goto done;
            std::vector<std::optional<Term>> binding(f.terms.size());
            for (std::size_t j = 0; j < f.terms.size(); ++j) binding[j] = f.terms[j];
            TheoryHom kleisli;
            kleisli.source_ctx = f.source_ctx;
            kleisli.target_ctx = g.target_ctx;
            for (const auto& gt : g.terms)
              kleisli.terms.push_back(nz.normalize(substitute(t->sig(), gt, binding)).term);
            TheoryHom via_theory = compose_hom(*t, f, g);
            if (!(kleisli == via_theory)) {
              rep.detail = "composition disagrees";
              return rep;
            }
            if (!rep.truncated &&
                !std::binary_search(mc.at(m, l).begin(), mc.at(m, l).end(), kleisli)) {
              rep.detail = "composite escapes the hom-set of a saturated slice";
              return rep;
            }
            ++rep.compositions_checked;
          }
done:
  rep.ok = true;
  return rep;
}

EMAlgebra evaluation_algebra(const MonadSlice& sx, const Model& m) {
  std::vector<std::size_t> env(sx.n);
  std::iota(env.begin(), env.end(), std::size_t{0});
  std::vector<std::size_t> a(sx.size());
  for (std::size_t i = 0; i < sx.size(); ++i) a[i] = m.eval(sx.elements[i], env);
  EMAlgebra alg;
  alg.carrier = m.carriers[0];
  alg.structure = FinFunction(sx.size(), m.carriers[0].size(), std::move(a));
  return alg;
}

Model readoff_model(const MonadSlice& sx, const EMAlgebra& alg) {
  const ThPtr& t = sx.theory;
  Normalizer nz = t->normalizer();
  Model m;
  m.theory = t;
  m.carriers.push_back(alg.carrier);
  for (std::size_t op = 0; op < t->sig().ops.size(); ++op) {
    std::size_t k = t->sig().ops[op].arity();
    std::size_t cells = 1;
    for (std::size_t i = 0; i < k; ++i) cells *= sx.n;
    std::vector<std::size_t> table(cells);
    std::vector<std::size_t> args(k, 0);
    std::size_t idx = 0;
    do {
      std::vector<Term> vs;
      for (auto x : args) vs.push_back(Term::make_var(x, 0));
      auto p = sx.index_of(nz.normalize(Term::make_app(t->sig(), op, std::move(vs))).term);
      if (!p) throw MonadicError("readoff_model: depth too small for operation " +
                                 t->sig().ops[op].name);
      table[idx++] = alg.structure(*p);
    } while (next_tuple(args, sx.n));
    m.tables.push_back(std::move(table));
  }
  return m;
}

bool em_algebra_laws(const MonadSlice& sx, const MonadSlice& ttx, const EMAlgebra& alg,
                     std::string* why) {
  for (std::size_t i = 0; i < sx.n; ++i)
    if (alg.structure(sx.eta[i]) != i) {
      if (why) *why = "a ∘ η ≠ id at generator " + std::to_string(i);
      return false;
    }
  std::vector<std::optional<std::size_t>> mu = mu_map(sx, ttx);
  for (std::size_t j = 0; j < ttx.size(); ++j) {
    if (!mu[j]) continue;  // beyond the depth bound
    // T(a): rename T(X)-generators through the structure map
    auto p = sx.index_of(rename_vars(sx.theory, ttx.elements[j], alg.structure.map));
    if (!p) continue;
    if (alg.structure(*mu[j]) != alg.structure(*p)) {
      if (why)
        *why = "a ∘ μ ≠ a ∘ T(a) at " + term_to_string(sx.theory->sig(), ttx.elements[j]);
      return false;
    }
  }
  return true;
}

EMReport em_model_correspondence(const ThPtr& t, std::size_t n, std::size_t depth,
                                 std::size_t inner_depth, std::size_t max_candidates) {
  require_single_sorted(t);
  EMReport rep;
  MonadSlice sx = monad_from_theory(t, n, depth);
  MonadSlice ttx = iterate_slice(sx, inner_depth);
  rep.truncated = !sx.saturated || !ttx.saturated;

  std::vector<Model> models = all_models(t, {n}, max_candidates);
  rep.models = models.size();

  // model → algebra → model must be the identity, and the passage injective
  std::vector<std::vector<std::size_t>> structures;
  for (const auto& m : models) {
    EMAlgebra alg = evaluation_algebra(sx, m);
    std::string why;
    if (!em_algebra_laws(sx, ttx, alg, &why)) {
      rep.detail = "evaluation algebra breaks the laws: " + why;
      return rep;
    }
    Model back = readoff_model(sx, alg);
    if (back.tables != m.tables) {
      rep.detail = "readoff does not invert evaluation";
      return rep;
    }
    structures.push_back(alg.structure.map);
  }
  {
    auto sorted = structures;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      rep.detail = "two models share a structure map";
      return rep;
    }
  }

  // algebra → model → algebra, over the full structure-map space when small
  double space = std::pow(static_cast<double>(n), static_cast<double>(sx.size()));
  if (space <= static_cast<double>(max_candidates) && n > 0) {
    rep.exhaustive = true;
    std::vector<std::size_t> digits(sx.size(), 0);
    do {
      EMAlgebra alg;
      alg.carrier = FinSet(n);
      alg.structure = FinFunction(sx.size(), n, digits);
      if (!em_algebra_laws(sx, ttx, alg, nullptr)) continue;
      ++rep.algebras;
      Model m = readoff_model(sx, alg);
      if (!check_model(m).ok) {
        rep.detail = "a law-satisfying algebra reads off a non-model";
        return rep;
      }
      if (evaluation_algebra(sx, m).structure.map != digits) {
        rep.detail = "evaluation does not invert readoff";
        return rep;
      }
    } while (next_tuple(digits, n));
    if (rep.algebras != rep.models) {
      rep.detail = "model count " + std::to_string(rep.models) + " ≠ algebra count " +
                   std::to_string(rep.algebras);
      return rep;
    }
  } else {
    rep.algebras = rep.models;  // derived algebras only
  }

  // algebra maps = model homomorphisms, carrier map by carrier map
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = 0; j < models.size(); ++j) {
      EMAlgebra ai = evaluation_algebra(sx, models[i]);
      EMAlgebra aj = evaluation_algebra(sx, models[j]);
      for (const auto& f : all_functions(n, n)) {
        ModelHom h;
        h.maps.push_back(f);
        bool model_side = is_model_hom(models[i], models[j], h);
        FinFunction tf = monad_on_function(sx, sx, f);
        bool algebra_side = f.after(ai.structure) == aj.structure.after(tf);
        if (model_side != algebra_side) {
          rep.detail = "algebra maps and model homs disagree";
          return rep;
        }
      }
      ++rep.hom_pairs_checked;
    }
  rep.ok = true;
  return rep;
}

}  // namespace ct
