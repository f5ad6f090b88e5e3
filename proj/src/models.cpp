#include "ct/models.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ct/fincat_ops.hpp"
#include "ct/presheaf_ops.hpp"

namespace ct {

namespace {

// row-major index of an argument tuple into an operation table
std::size_t tuple_index(const Model& m, std::size_t op, const std::vector<std::size_t>& args) {
  const auto& o = m.theory->sig().ops[op];
  std::size_t idx = 0;
  for (std::size_t i = 0; i < args.size(); ++i)
    idx = idx * m.carriers[o.arg_sorts[i]].size() + args[i];
  return idx;
}

std::size_t table_size(const ThPtr& t, const std::vector<FinSet>& carriers, std::size_t op) {
  std::size_t n = 1;
  for (auto s : t->sig().ops[op].arg_sorts) n *= carriers[s].size();
  return n;
}

// advance a mixed-radix counter; returns false when it wraps to zero
bool next_tuple(std::vector<std::size_t>& cur, const std::vector<std::size_t>& radix) {
  std::size_t i = cur.size();
  while (i > 0) {
    --i;
    if (++cur[i] < radix[i]) return true;
    cur[i] = 0;
  }
  return false;
}

std::vector<std::size_t> arg_radix(const Model& m, std::size_t op) {
  std::vector<std::size_t> r;
  for (auto s : m.theory->sig().ops[op].arg_sorts) r.push_back(m.carriers[s].size());
  return r;
}

}  // namespace

std::size_t Model::apply(std::size_t op, const std::vector<std::size_t>& args) const {
  return tables[op][tuple_index(*this, op, args)];
}

std::size_t Model::eval(const Term& t, const std::vector<std::size_t>& env) const {
  if (t.is_var()) return env.at(t.var);
  const auto& o = theory->sig().ops[t.op];
  if (t.args.size() == o.arity()) {
    std::vector<std::size_t> vals;
    vals.reserve(t.args.size());
    for (const auto& a : t.args) vals.push_back(eval(a, env));
    return apply(t.op, vals);
  }
  // flattened AC node: fold through the binary table
  std::size_t acc = eval(t.args[0], env);
  for (std::size_t i = 1; i < t.args.size(); ++i) acc = apply(t.op, {acc, eval(t.args[i], env)});
  return acc;
}

Model Model::terminal(ThPtr t) {
  Model m;
  m.theory = std::move(t);
  for (std::size_t s = 0; s < m.theory->sig().sorts.size(); ++s)
    m.carriers.emplace_back(1, "*");
  for (std::size_t o = 0; o < m.theory->sig().ops.size(); ++o)
    m.tables.emplace_back(table_size(m.theory, m.carriers, o), 0);
  return m;
}

ModelCheck check_model(const Model& m) {
  ModelCheck out;
  const auto& rules = m.theory->rules().rules;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const Rule& rule = rules[r];
    std::vector<std::size_t> radix;
    for (auto s : rule.var_sorts) radix.push_back(m.carriers[s].size());
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end()) continue;
    std::vector<std::size_t> env(radix.size(), 0);
    do {
      std::size_t l = m.eval(rule.lhs, env);
      std::size_t rv = m.eval(rule.rhs, env);
      if (l != rv) {
        out.ok = false;
        out.failing_rule = r;
        out.assignment = env;
        out.lhs = l;
        out.rhs = rv;
        return out;
      }
    } while (next_tuple(env, radix));
  }
  // AC declarations are rules in disguise: check commutativity/associativity
  for (const auto& f : m.theory->sig().ac) {
    std::size_t s = m.theory->sig().ops[f.op].result_sort;
    std::size_t n = m.carriers[s].size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (m.apply(f.op, {x, y}) != m.apply(f.op, {y, x})) {
          out.ok = false;
          out.failing_rule = SIZE_MAX;
          out.assignment = {x, y};
          out.lhs = m.apply(f.op, {x, y});
          out.rhs = m.apply(f.op, {y, x});
          return out;
        }
        for (std::size_t z = 0; z < n; ++z)
          if (m.apply(f.op, {m.apply(f.op, {x, y}), z}) !=
              m.apply(f.op, {x, m.apply(f.op, {y, z})})) {
            out.ok = false;
            out.failing_rule = SIZE_MAX;
            out.assignment = {x, y, z};
            out.lhs = m.apply(f.op, {m.apply(f.op, {x, y}), z});
            out.rhs = m.apply(f.op, {x, m.apply(f.op, {y, z})});
            return out;
          }
      }
    if (f.unit_op) {
      std::size_t e = m.apply(*f.unit_op, {});
      for (std::size_t x = 0; x < n; ++x)
        if (m.apply(f.op, {e, x}) != x || m.apply(f.op, {x, e}) != x) {
          out.ok = false;
          out.failing_rule = SIZE_MAX;
          out.assignment = {x};
          out.lhs = m.apply(f.op, {e, x});
          out.rhs = x;
          return out;
        }
    }
  }
  return out;
}

bool is_model_hom(const Model& a, const Model& b, const ModelHom& h, std::string* why) {
  const Signature& sig = a.theory->sig();
  if (h.maps.size() != sig.sorts.size()) {
    if (why) *why = "wrong number of carrier maps";
    return false;
  }
  for (std::size_t s = 0; s < sig.sorts.size(); ++s)
    if (h.maps[s].src_size != a.carriers[s].size() || h.maps[s].dst_size != b.carriers[s].size()) {
      if (why) *why = "carrier map for sort " + sig.sorts[s] + " has wrong endpoints";
      return false;
    }
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    const auto& o = sig.ops[op];
    std::vector<std::size_t> radix = arg_radix(a, op);
    std::vector<std::size_t> args(radix.size(), 0);
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end()) continue;
    do {
      std::vector<std::size_t> mapped(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = h.maps[o.arg_sorts[i]](args[i]);
      if (h.maps[o.result_sort](a.apply(op, args)) != b.apply(op, mapped)) {
        if (why) *why = "operation " + o.name + " not preserved";
        return false;
      }
    } while (next_tuple(args, radix));
  }
  return true;
}

std::vector<ModelHom> hom_models(const Model& a, const Model& b, std::size_t max_candidates) {
  const Signature& sig = a.theory->sig();
  // one digit per (sort, element of a)
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::size_t> radix;
  double count = 1;
  for (std::size_t s = 0; s < sig.sorts.size(); ++s)
    for (std::size_t x = 0; x < a.carriers[s].size(); ++x) {
      slots.emplace_back(s, x);
      radix.push_back(b.carriers[s].size());
      count *= static_cast<double>(b.carriers[s].size());
    }
  if (count > static_cast<double>(max_candidates))
    throw SearchSpaceTooLarge("hom_models: " + std::to_string(count) + " candidate maps");
  for (std::size_t s = 0; s < sig.sorts.size(); ++s)
    if (a.carriers[s].size() > 0 && b.carriers[s].empty()) return {};
  std::vector<ModelHom> out;
  std::vector<std::size_t> digits(slots.size(), 0);
  do {
    ModelHom h;
    std::size_t k = 0;
    for (std::size_t s = 0; s < sig.sorts.size(); ++s) {
      std::vector<std::size_t> m(a.carriers[s].size());
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = digits[k++];
      h.maps.emplace_back(a.carriers[s].size(), b.carriers[s].size(), std::move(m));
    }
    if (is_model_hom(a, b, h)) out.push_back(std::move(h));
  } while (next_tuple(digits, radix));
  return out;
}

ModelHom identity_model_hom(const Model& a) {
  ModelHom h;
  for (const auto& c : a.carriers) h.maps.push_back(FinFunction::identity(c.size()));
  return h;
}

ModelHom compose_model_hom(const ModelHom& f, const ModelHom& g) {
  ModelHom h;
  for (std::size_t s = 0; s < f.maps.size(); ++s) h.maps.push_back(g.maps[s].after(f.maps[s]));
  return h;
}

ProductOfModels product_of_models(const Model& a, const Model& b) {
  const Signature& sig = a.theory->sig();
  ProductOfModels out;
  out.model.theory = a.theory;
  for (std::size_t s = 0; s < sig.sorts.size(); ++s)
    out.model.carriers.push_back(product_finset(a.carriers[s], b.carriers[s]));
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    const auto& o = sig.ops[op];
    std::vector<std::size_t> table(table_size(a.theory, out.model.carriers, op));
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(out.model.carriers[s].size());
    std::vector<std::size_t> args(radix.size(), 0);
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) == radix.end()) {
      std::size_t idx = 0;
      do {
        std::vector<std::size_t> la(args.size()), ra(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) {
          la[i] = args[i] / b.carriers[o.arg_sorts[i]].size();
          ra[i] = args[i] % b.carriers[o.arg_sorts[i]].size();
        }
        table[idx++] =
            pair_index(a.apply(op, la), b.apply(op, ra), b.carriers[o.result_sort].size());
      } while (next_tuple(args, radix));
    }
    out.model.tables.push_back(std::move(table));
  }
  for (std::size_t s = 0; s < sig.sorts.size(); ++s) {
    std::size_t bs = b.carriers[s].size();
    std::vector<std::size_t> m1, m2;
    for (std::size_t i = 0; i < a.carriers[s].size(); ++i)
      for (std::size_t k = 0; k < bs; ++k) {
        m1.push_back(i);
        m2.push_back(k);
      }
    out.p1.maps.emplace_back(a.carriers[s].size() * bs, a.carriers[s].size(), std::move(m1));
    out.p2.maps.emplace_back(a.carriers[s].size() * bs, bs, std::move(m2));
  }
  return out;
}

EqualizerOfModels equalizer_of_models(const Model& a, const Model& b, const ModelHom& h1,
                                      const ModelHom& h2) {
  const Signature& sig = a.theory->sig();
  EqualizerOfModels out;
  out.model.theory = a.theory;
  std::vector<std::vector<std::size_t>> keep(sig.sorts.size());
  std::vector<std::vector<std::size_t>> pos(sig.sorts.size());
  for (std::size_t s = 0; s < sig.sorts.size(); ++s) {
    pos[s].assign(a.carriers[s].size(), SIZE_MAX);
    std::vector<std::string> names;
    for (std::size_t x = 0; x < a.carriers[s].size(); ++x)
      if (h1.maps[s](x) == h2.maps[s](x)) {
        pos[s][x] = keep[s].size();
        keep[s].push_back(x);
        names.push_back(a.carriers[s].name(x));
      }
    out.model.carriers.emplace_back(std::move(names));
    out.include.maps.emplace_back(keep[s].size(), a.carriers[s].size(), keep[s]);
  }
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    const auto& o = sig.ops[op];
    std::vector<std::size_t> table(table_size(a.theory, out.model.carriers, op));
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(keep[s].size());
    std::vector<std::size_t> args(radix.size(), 0);
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) == radix.end()) {
      std::size_t idx = 0;
      do {
        std::vector<std::size_t> full(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) full[i] = keep[o.arg_sorts[i]][args[i]];
        std::size_t r = pos[o.result_sort][a.apply(op, full)];
        if (r == SIZE_MAX)
          throw ModelError("equalizer not closed under " + o.name +
                           " (maps are not homomorphisms?)");
        table[idx++] = r;
      } while (next_tuple(args, radix));
    }
    out.model.tables.push_back(std::move(table));
  }
  return out;
}

ModelColimit sifted_colimit_of_models(const ModelDiagram& d, bool require_sifted) {
  const FinCat& j = *d.shape;
  if (d.at.size() != j.num_objects() || d.arrow.size() != j.num_morphisms())
    throw ModelError("sifted_colimit_of_models: diagram tables have wrong length");
  if (d.at.empty()) throw ModelError("sifted_colimit_of_models: empty diagram");
  if (require_sifted) {
    auto rep = is_sifted(d.shape);
    if (!rep.sifted) throw ModelError("sifted_colimit_of_models: index category is not sifted");
  }
  ThPtr t = d.at[0].theory;
  const Signature& sig = t->sig();
  for (std::size_t m = 0; m < j.num_morphisms(); ++m) {
    std::string why;
    if (!is_model_hom(d.at[j.src(m)], d.at[j.dst(m)], d.arrow[m], &why))
      throw ModelError("sifted_colimit_of_models: arrow " + j.mor(m).id + ": " + why);
  }

  ModelColimit out;
  out.model.theory = t;
  out.inject.resize(j.num_objects());
  std::vector<SetColimit> per_sort;
  for (std::size_t s = 0; s < sig.sorts.size(); ++s) {
    std::vector<FinSet> at;
    std::vector<FinFunction> arrow;
    for (const auto& m : d.at) at.push_back(m.carriers[s]);
    for (const auto& h : d.arrow) arrow.push_back(h.maps[s]);
    per_sort.push_back(colimit_finset(SetDiagram(d.shape, std::move(at), std::move(arrow))));
    out.model.carriers.push_back(per_sort.back().set);
    for (std::size_t o = 0; o < j.num_objects(); ++o)
      out.inject[o].maps.push_back(per_sort.back().inject[o]);
  }

  // induce each operation on the quotient: for a tuple of classes, find all
  // single-object representative tuples and insist they land in one class
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    const auto& o = sig.ops[op];
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(out.model.carriers[s].size());
    std::vector<std::size_t> table(table_size(t, out.model.carriers, op));
    std::vector<std::size_t> cls(radix.size(), 0);
    bool empty = std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end();
    if (!empty) {
      std::size_t idx = 0;
      do {
        std::size_t result = SIZE_MAX;
        for (std::size_t ob = 0; ob < j.num_objects(); ++ob) {
          std::vector<std::size_t> arad, args;
          for (auto s : o.arg_sorts) arad.push_back(d.at[ob].carriers[s].size());
          if (std::find(arad.begin(), arad.end(), std::size_t{0}) != arad.end()) continue;
          args.assign(arad.size(), 0);
          do {
            bool match = true;
            for (std::size_t i = 0; i < args.size() && match; ++i)
              if (per_sort[o.arg_sorts[i]].inject[ob](args[i]) != cls[i]) match = false;
            if (!match) continue;
            std::size_t r = per_sort[o.result_sort].inject[ob](d.at[ob].apply(op, args));
            if (result == SIZE_MAX)
              result = r;
            else if (result != r)
              throw InducedOpIllDefined("operation " + o.name +
                                        " disagrees between representatives");
          } while (next_tuple(args, arad));
        }
        if (result == SIZE_MAX)
          throw InducedOpIllDefined("operation " + o.name +
                                    ": no common-object representative for a class tuple");
        table[idx++] = result;
      } while (next_tuple(cls, radix));
    }
    out.model.tables.push_back(std::move(table));
  }
  return out;
}

QuotientResult quotient_by_congruence(
    const Model& m, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& pairs) {
  const Signature& sig = m.theory->sig();
  std::vector<UnionFind> uf;
  for (const auto& c : m.carriers) uf.emplace_back(c.size());
  for (const auto& [s, x, y] : pairs) uf[s].unite(x, y);
  // raw structures: every rule instance becomes a generating pair
  for (const Rule& rule : m.theory->rules().rules) {
    std::vector<std::size_t> radix;
    for (auto s : rule.var_sorts) radix.push_back(m.carriers[s].size());
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end()) continue;
    std::vector<std::size_t> env(radix.size(), 0);
    do {
      uf[rule.lhs.sort].unite(m.eval(rule.lhs, env), m.eval(rule.rhs, env));
    } while (next_tuple(env, radix));
  }
  // close under operation compatibility
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < sig.ops.size(); ++op) {
      const auto& o = sig.ops[op];
      std::vector<std::size_t> radix = arg_radix(m, op);
      if (std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end()) continue;
      std::map<std::vector<std::size_t>, std::size_t> first;  // class tuple → result rep
      std::vector<std::size_t> args(radix.size(), 0);
      do {
        std::vector<std::size_t> key(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) key[i] = uf[o.arg_sorts[i]].find(args[i]);
        std::size_t r = m.apply(op, args);
        auto [it, fresh] = first.emplace(std::move(key), r);
        if (!fresh && uf[o.result_sort].unite(it->second, r)) changed = true;
      } while (next_tuple(args, radix));
    }
  }

  QuotientResult out;
  out.model.theory = m.theory;
  std::vector<FinFunction> q;
  std::vector<std::vector<std::size_t>> rep(sig.sorts.size());
  for (std::size_t s = 0; s < sig.sorts.size(); ++s) {
    q.push_back(uf[s].quotient_map());
    rep[s].assign(q[s].dst_size, SIZE_MAX);
    std::vector<std::string> names(q[s].dst_size);
    for (std::size_t x = 0; x < m.carriers[s].size(); ++x)
      if (rep[s][q[s](x)] == SIZE_MAX) {
        rep[s][q[s](x)] = x;
        names[q[s](x)] = "[" + m.carriers[s].name(x) + "]";
      }
    out.model.carriers.emplace_back(std::move(names));
    out.quotient.maps.push_back(q[s]);
  }
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    const auto& o = sig.ops[op];
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(out.model.carriers[s].size());
    std::vector<std::size_t> table(table_size(m.theory, out.model.carriers, op));
    std::vector<std::size_t> cls(radix.size(), 0);
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) == radix.end()) {
      std::size_t idx = 0;
      do {
        std::vector<std::size_t> args(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) args[i] = rep[o.arg_sorts[i]][cls[i]];
        table[idx++] = q[o.result_sort](m.apply(op, args));
      } while (next_tuple(cls, radix));
    }
    out.model.tables.push_back(std::move(table));
  }
  return out;
}

FreeModelResult free_model(const ThPtr& t, const std::vector<std::size_t>& gen_sorts,
                           std::size_t depth) {
  FreeModelResult out;
  out.theory = t;
  NormalFormSet nfs = normal_forms(*t, gen_sorts, depth);
  out.elements = nfs.by_sort;
  out.saturated = nfs.saturated;
  Normalizer nz = t->normalizer();
  auto find_elem = [&](const Term& term) -> std::size_t {
    const auto& v = out.elements[term.sort];
    auto it = std::lower_bound(v.begin(), v.end(), term);
    if (it == v.end() || !(*it == term)) return SIZE_MAX;
    return static_cast<std::size_t>(it - v.begin());
  };
  for (std::size_t i = 0; i < gen_sorts.size(); ++i) {
    std::size_t p = find_elem(nz.normalize(Term::make_var(i, gen_sorts[i])).term);
    if (p == SIZE_MAX) throw ModelError("free_model: generator escaped its carrier");
    out.generator_pos.push_back(p);
  }
  if (!out.saturated) return out;
  Model m;
  m.theory = t;
  for (std::size_t s = 0; s < t->sig().sorts.size(); ++s) {
    std::vector<std::string> names;
    for (const auto& term : out.elements[s]) names.push_back(term_to_string(t->sig(), term));
    m.carriers.emplace_back(std::move(names));
  }
  for (std::size_t op = 0; op < t->sig().ops.size(); ++op) {
    const auto& o = t->sig().ops[op];
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(out.elements[s].size());
    std::vector<std::size_t> table(table_size(t, m.carriers, op));
    std::vector<std::size_t> args(radix.size(), 0);
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) == radix.end()) {
      std::size_t idx = 0;
      do {
        std::vector<Term> ts;
        for (std::size_t i = 0; i < args.size(); ++i)
          ts.push_back(out.elements[o.arg_sorts[i]][args[i]]);
        Term nf = nz.normalize(Term::make_app(t->sig(), op, std::move(ts))).term;
        std::size_t p = find_elem(nf);
        if (p == SIZE_MAX)
          throw ModelError("free_model: saturated carrier is not closed (normalizer bug?)");
        table[idx++] = p;
      } while (next_tuple(args, radix));
    }
    m.tables.push_back(std::move(table));
  }
  out.model = std::move(m);
  return out;
}

std::vector<Model> all_models(const ThPtr& t, const std::vector<std::size_t>& sizes,
                              std::size_t max_candidates) {
  const Signature& sig = t->sig();
  if (sizes.size() != sig.sorts.size()) throw ModelError("all_models: wrong size vector");
  Model proto;
  proto.theory = t;
  for (std::size_t s = 0; s < sizes.size(); ++s) proto.carriers.emplace_back(sizes[s]);
  // one digit per table cell
  std::vector<std::size_t> radix;
  std::vector<std::pair<std::size_t, std::size_t>> cell;  // (op, offset)
  double count = 1;
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    std::size_t cells = table_size(t, proto.carriers, op);
    std::size_t vals = sizes[sig.ops[op].result_sort];
    for (std::size_t i = 0; i < cells; ++i) {
      cell.emplace_back(op, i);
      radix.push_back(vals);
      count *= static_cast<double>(vals);
    }
    proto.tables.emplace_back(cells, 0);
  }
  if (count > static_cast<double>(max_candidates))
    throw SearchSpaceTooLarge("all_models: " + std::to_string(count) + " candidate tables");
  for (std::size_t op = 0; op < sig.ops.size(); ++op)
    if (!proto.tables[op].empty() && sizes[sig.ops[op].result_sort] == 0)
      return {};  // a nonempty table with no possible values
  std::vector<Model> out;
  std::vector<std::size_t> digits(radix.size(), 0);
  do {
    for (std::size_t k = 0; k < digits.size(); ++k)
      proto.tables[cell[k].first][cell[k].second] = digits[k];
    if (check_model(proto).ok) out.push_back(proto);
  } while (next_tuple(digits, radix));
  return out;
}

Model restrict_model(const TheoryMorphism& g, const Model& b) {
  const Signature& ssig = g.source->sig();
  Model a;
  a.theory = g.source;
  for (std::size_t s = 0; s < ssig.sorts.size(); ++s)
    a.carriers.push_back(b.carriers[g.sort_map[s]]);
  for (std::size_t op = 0; op < ssig.ops.size(); ++op) {
    const auto& o = ssig.ops[op];
    std::vector<Term> vars;
    for (std::size_t i = 0; i < o.arity(); ++i) vars.push_back(Term::make_var(i, o.arg_sorts[i]));
    Term image = translate(g, Term::make_app(ssig, op, std::move(vars)));
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(a.carriers[s].size());
    std::vector<std::size_t> table(table_size(a.theory, a.carriers, op));
    std::vector<std::size_t> args(radix.size(), 0);
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) == radix.end()) {
      std::size_t idx = 0;
      do {
        table[idx++] = b.eval(image, args);
      } while (next_tuple(args, radix));
    }
    a.tables.push_back(std::move(table));
  }
  return a;
}

LeftAdjointResult left_adjoint_algebraic(const TheoryMorphism& g, const Model& a,
                                         std::size_t depth, std::size_t cert_bound,
                                         std::size_t cert_max_models,
                                         std::size_t max_candidates) {
  const Signature& ssig = g.source->sig();
  const ThPtr& tt = g.target;
  const Signature& tsig = tt->sig();
  Normalizer nz = tt->normalizer();

  // one generator (a variable of the translated sort) per element of A
  std::vector<std::size_t> gen_sorts;
  std::vector<std::vector<std::size_t>> gen_of(ssig.sorts.size());
  for (std::size_t s = 0; s < ssig.sorts.size(); ++s)
    for (std::size_t x = 0; x < a.carriers[s].size(); ++x) {
      gen_of[s].push_back(gen_sorts.size());
      gen_sorts.push_back(g.sort_map[s]);
    }

  NormalFormSet nfs = normal_forms(*tt, gen_sorts, depth);
  LeftAdjointResult out;
  out.truncated = !nfs.saturated;
  auto find_elem = [&](const Term& term) -> std::size_t {
    const auto& v = nfs.by_sort[term.sort];
    auto it = std::lower_bound(v.begin(), v.end(), term);
    if (it == v.end() || !(*it == term)) return SIZE_MAX;
    return static_cast<std::size_t>(it - v.begin());
  };

  std::vector<UnionFind> uf;
  for (const auto& v : nfs.by_sort) uf.emplace_back(v.size());

  // generating pairs: A's operation instances, translated through g
  for (std::size_t op = 0; op < ssig.ops.size(); ++op) {
    const auto& o = ssig.ops[op];
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(a.carriers[s].size());
    if (std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end()) continue;
    std::vector<std::size_t> args(radix.size(), 0);
    do {
      std::vector<Term> vars;
      for (std::size_t i = 0; i < args.size(); ++i)
        vars.push_back(Term::make_var(gen_of[o.arg_sorts[i]][args[i]], o.arg_sorts[i]));
      Term lhs = nz.normalize(translate(g, Term::make_app(ssig, op, std::move(vars)))).term;
      Term rhs = Term::make_var(gen_of[o.result_sort][a.apply(op, args)], g.sort_map[o.result_sort]);
      std::size_t li = find_elem(lhs), ri = find_elem(rhs);
      if (li == SIZE_MAX || ri == SIZE_MAX)
        throw ModelError("left_adjoint_algebraic: depth too small to place an operation instance");
      uf[lhs.sort].unite(li, ri);
    } while (next_tuple(args, radix));
  }

  // close under compatibility with the (partial, depth-bounded) free tables
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < tsig.ops.size(); ++op) {
      const auto& o = tsig.ops[op];
      std::vector<std::size_t> radix;
      for (auto s : o.arg_sorts) radix.push_back(nfs.by_sort[s].size());
      if (std::find(radix.begin(), radix.end(), std::size_t{0}) != radix.end()) continue;
      std::map<std::vector<std::size_t>, std::size_t> first;
      std::vector<std::size_t> args(radix.size(), 0);
      do {
        std::vector<Term> ts;
        for (std::size_t i = 0; i < args.size(); ++i)
          ts.push_back(nfs.by_sort[o.arg_sorts[i]][args[i]]);
        std::size_t r = find_elem(nz.normalize(Term::make_app(tsig, op, std::move(ts))).term);
        if (r == SIZE_MAX) continue;  // result beyond the depth bound
        std::vector<std::size_t> key(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) key[i] = uf[o.arg_sorts[i]].find(args[i]);
        auto [it, fresh] = first.emplace(std::move(key), r);
        if (!fresh && uf[o.result_sort].unite(it->second, r)) changed = true;
      } while (next_tuple(args, radix));
    }
  }

  // the quotient model
  out.model.theory = tt;
  std::vector<FinFunction> q;
  for (std::size_t s = 0; s < tsig.sorts.size(); ++s) {
    q.push_back(uf[s].quotient_map());
    std::vector<std::string> names(q[s].dst_size);
    for (std::size_t x = 0; x < nfs.by_sort[s].size(); ++x)
      if (names[q[s](x)].empty())
        names[q[s](x)] = "[" + term_to_string(tsig, nfs.by_sort[s][x]) + "]";
    out.model.carriers.emplace_back(std::move(names));
  }
  for (std::size_t op = 0; op < tsig.ops.size(); ++op) {
    const auto& o = tsig.ops[op];
    std::vector<std::size_t> radix;
    for (auto s : o.arg_sorts) radix.push_back(out.model.carriers[s].size());
    std::vector<std::size_t> table(table_size(tt, out.model.carriers, op), SIZE_MAX);
    // scan all representative tuples; closure already forced agreement among
    // the in-bound results
    std::vector<std::size_t> arad;
    for (auto s : o.arg_sorts) arad.push_back(nfs.by_sort[s].size());
    if (std::find(arad.begin(), arad.end(), std::size_t{0}) == arad.end()) {
      std::vector<std::size_t> args(arad.size(), 0);
      do {
        std::vector<Term> ts;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < args.size(); ++i) {
          ts.push_back(nfs.by_sort[o.arg_sorts[i]][args[i]]);
          idx = idx * out.model.carriers[o.arg_sorts[i]].size() + q[o.arg_sorts[i]](args[i]);
        }
        if (table[idx] != SIZE_MAX) continue;
        std::size_t r = find_elem(nz.normalize(Term::make_app(tsig, op, std::move(ts))).term);
        if (r != SIZE_MAX) table[idx] = q[o.result_sort](r);
      } while (next_tuple(args, arad));
    }
    for (auto v : table)
      if (v == SIZE_MAX)
        throw ModelError("left_adjoint_algebraic: operation " + o.name +
                         " has a class tuple with no in-depth representative; raise depth");
    out.model.tables.push_back(std::move(table));
  }

  // unit: x ↦ class of its generator
  for (std::size_t s = 0; s < ssig.sorts.size(); ++s) {
    std::vector<std::size_t> m(a.carriers[s].size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      std::size_t ts = g.sort_map[s];
      std::size_t p = find_elem(
          nz.normalize(Term::make_var(gen_of[s][x], ts)).term);
      m[x] = q[ts](p);
    }
    out.unit.maps.emplace_back(a.carriers[s].size(), out.model.carriers[g.sort_map[s]].size(),
                               std::move(m));
  }
  Model restricted = restrict_model(g, out.model);
  out.unit_ok = check_model(out.model).ok && is_model_hom(a, restricted, out.unit, nullptr);

  // certificate: hom_T(L(A), B) ≅ hom_S(A, G*(B)) for all small B
  AdjointCertificate& cert = out.certificate;
  cert.bound = cert_bound;
  cert.truncated = out.truncated;
  cert.ok = out.unit_ok;
  std::vector<std::vector<std::size_t>> size_vectors;
  {
    std::vector<std::size_t> cur(tsig.sorts.size(), 1);
    for (;;) {
      size_vectors.push_back(cur);
      std::size_t i = cur.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++cur[i] <= cert_bound) {
          done = false;
          break;
        }
        cur[i] = 1;
      }
      if (done) break;
    }
  }
  for (const auto& sv : size_vectors) {
    std::vector<Model> bs;
    try {
      bs = all_models(tt, sv, max_candidates);
    } catch (const SearchSpaceTooLarge&) {
      cert.sizes_skipped.push_back(sv[0]);
      cert.truncated = true;
      continue;
    }
    for (const auto& b : bs) {
      if (cert.models_checked >= cert_max_models) {
        cert.truncated = true;
        break;
      }
      ++cert.models_checked;
      std::vector<ModelHom> lhs;
      std::vector<ModelHom> rhs;
      Model rb = restrict_model(g, b);
      try {
        lhs = hom_models(out.model, b, max_candidates);
        rhs = hom_models(a, rb, max_candidates);
      } catch (const SearchSpaceTooLarge&) {
        cert.truncated = true;
        continue;
      }
      // transpose: f ↦ G*(f) ∘ unit
      std::vector<ModelHom> images;
      for (const auto& f : lhs) {
        ModelHom t2;
        for (std::size_t s = 0; s < ssig.sorts.size(); ++s)
          t2.maps.push_back(f.maps[g.sort_map[s]].after(out.unit.maps[s]));
        images.push_back(std::move(t2));
      }
      std::sort(images.begin(), images.end());
      bool inj = std::adjacent_find(images.begin(), images.end()) == images.end();
      std::sort(rhs.begin(), rhs.end());
      if (!inj || images != rhs) {
        cert.ok = false;
        cert.detail = "hom bijection fails against a model with carriers of size " +
                      std::to_string(sv[0]);
        return out;
      }
    }
  }
  return out;
}

}  // namespace ct
