#include "ct/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace ct::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// a parsed file: kind, then key → list of entry lines (in order)
struct Sections {
  std::string kind;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;

  const std::vector<std::string>* find(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
  const std::vector<std::string>& need(const std::string& key) const {
    const auto* p = find(key);
    if (!p) throw ParseError("missing section `" + key + "`");
    return *p;
  }
};

Sections parse_sections(const std::string& text, const std::string& expect_kind,
                        const std::vector<std::string>& allowed) {
  Sections out;
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string>* cur = nullptr;
  while (std::getline(ss, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool indented = !line.empty() && (line[0] == ' ' || line[0] == '\t');
    std::string t = trim(line);
    if (t.empty()) continue;
    if (out.kind.empty()) {
      if (t != expect_kind)
        throw ParseError("expected a `" + expect_kind + "` file, found `" + t + "`");
      out.kind = t;
      continue;
    }
    if (!indented) {
      std::size_t colon = t.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected `key:` at top level, found `" + t + "`");
      std::string key = trim(t.substr(0, colon));
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw ParseError("unknown key `" + key + "` in " + expect_kind + " file");
      if (out.find(key)) throw ParseError("duplicate key `" + key + "`");
      out.entries.emplace_back(key, std::vector<std::string>{});
      cur = &out.entries.back().second;
      std::string inline_val = trim(t.substr(colon + 1));
      if (!inline_val.empty()) cur->push_back(inline_val);
    } else {
      if (!cur) throw ParseError("indented line before any key: `" + t + "`");
      cur->push_back(t);
    }
  }
  if (out.kind.empty()) throw ParseError("empty file");
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------------ category

NamedCategory parse_category(const std::string& text) {
  Sections s = parse_sections(text, "category", {"name", "objects", "morphisms", "compose"});
  NamedCategory out;
  if (const auto* n = s.find("name"); n && !n->empty()) out.name = (*n)[0];

  RawCat raw;
  for (const auto& line : s.need("objects"))
    for (const auto& o : split(line, ',')) raw.objects.push_back(o);
  auto obj_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < raw.objects.size(); ++i)
      if (raw.objects[i] == name) return i;
    throw ParseError("unknown object `" + name + "`");
  };
  // identities are implicit: id_<object> comes first
  for (std::size_t o = 0; o < raw.objects.size(); ++o) {
    raw.morphisms.push_back({"id_" + raw.objects[o], o, o});
    raw.identities.push_back(o);
  }
  if (const auto* ms = s.find("morphisms"))
    for (const auto& line : *ms) {
      // name: src -> dst
      std::size_t colon = line.find(':');
      std::size_t arrow = line.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        throw ParseError("bad morphism entry `" + line + "` (want `name: src -> dst`)");
      std::string name = trim(line.substr(0, colon));
      std::size_t src = obj_index(trim(line.substr(colon + 1, arrow - colon - 1)));
      std::size_t dst = obj_index(trim(line.substr(arrow + 2)));
      raw.morphisms.push_back({name, src, dst});
    }
  auto mor_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < raw.morphisms.size(); ++i)
      if (raw.morphisms[i].id == name) return i;
    throw ParseError("unknown morphism `" + name + "`");
  };
  if (const auto* cs = s.find("compose"))
    for (const auto& line : *cs) {
      // g . f = h
      std::size_t dot = line.find('.');
      std::size_t eq = line.find('=');
      if (dot == std::string::npos || eq == std::string::npos || eq < dot)
        throw ParseError("bad compose entry `" + line + "` (want `g . f = h`)");
      std::size_t g = mor_index(trim(line.substr(0, dot)));
      std::size_t f = mor_index(trim(line.substr(dot + 1, eq - dot - 1)));
      std::size_t h = mor_index(trim(line.substr(eq + 1)));
      raw.compose[{g, f}] = h;
    }
  out.cat = FinCat::validate(raw);
  return out;
}

std::string print_category(const FinCat& c, const std::string& name) {
  std::stringstream out;
  out << "category\n";
  out << "name: " << name << "\n";
  out << "objects:";
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    out << (o ? ", " : " ") << c.object_name(o);
  out << "\nmorphisms:\n";
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m))
      out << "  " << c.mor(m).id << ": " << c.object_name(c.src(m)) << " -> "
          << c.object_name(c.dst(m)) << "\n";
  out << "compose:\n";
  for (std::size_t g = 0; g < c.num_morphisms(); ++g)
    for (std::size_t f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f) && !c.is_identity(g) && !c.is_identity(f))
        out << "  " << c.mor(g).id << " . " << c.mor(f).id << " = "
            << c.mor(c.compose(g, f)).id << "\n";
  return out.str();
}

// ------------------------------------------------------------------ presheaf

PshPtr parse_presheaf(const std::string& text, const BaseResolver& resolve) {
  Sections s = parse_sections(text, "presheaf", {"name", "base", "sets", "actions"});
  const auto& base_lines = s.need("base");
  if (base_lines.empty()) throw ParseError("empty `base`");
  CatPtr base = resolve(base_lines[0]);
  const FinCat& c = *base;

  std::vector<FinSet> sets(c.num_objects());
  std::vector<bool> seen(c.num_objects(), false);
  for (const auto& line : s.need("sets")) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bad sets entry `" + line + "`");
    std::string oname = trim(line.substr(0, colon));
    auto oi = c.object_index(oname);
    if (!oi) throw ParseError("unknown object `" + oname + "`");
    if (seen[*oi]) throw ParseError("duplicate sets entry for `" + oname + "`");
    seen[*oi] = true;
    sets[*oi] = FinSet(split(line.substr(colon + 1), ','));
  }
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    if (!seen[o]) throw ParseError("no set given for object `" + c.object_name(o) + "`");

  std::vector<FinFunction> actions(c.num_morphisms());
  std::vector<bool> given(c.num_morphisms(), false);
  for (const auto& line : s.need("actions")) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bad actions entry `" + line + "`");
    std::string mname = trim(line.substr(0, colon));
    auto mi = c.mor_index(mname);
    if (!mi) throw ParseError("unknown morphism `" + mname + "`");
    const FinSet& from = sets[c.dst(*mi)];  // contravariant
    const FinSet& to = sets[c.src(*mi)];
    std::vector<std::size_t> map(from.size(), SIZE_MAX);
    for (const auto& pair : split(line.substr(colon + 1), ',')) {
      std::size_t arrow = pair.find("->");
      if (arrow == std::string::npos) throw ParseError("bad mapping `" + pair + "`");
      std::string a = trim(pair.substr(0, arrow)), b = trim(pair.substr(arrow + 2));
      auto find = [](const FinSet& fs, const std::string& n) -> std::size_t {
        for (std::size_t i = 0; i < fs.size(); ++i)
          if (fs.name(i) == n) return i;
        throw ParseError("unknown element `" + n + "`");
      };
      map[find(from, a)] = find(to, b);
    }
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] == SIZE_MAX)
        throw ParseError("action of `" + mname + "` misses element `" + from.name(i) + "`");
    actions[*mi] = FinFunction(from.size(), to.size(), std::move(map));
    given[*mi] = true;
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (!given[m]) {
      if (!c.is_identity(m))
        throw ParseError("no action given for morphism `" + c.mor(m).id + "`");
      actions[m] = FinFunction::identity(sets[c.src(m)].size());
    }
  std::string label;
  if (const auto* n = s.find("name"); n && !n->empty()) label = (*n)[0];
  return Presheaf::make(base, std::move(sets), std::move(actions), label);
}

std::string print_presheaf(const Presheaf& p, const std::string& base_name) {
  const FinCat& c = p.base();
  std::stringstream out;
  out << "presheaf\n";
  if (!p.label().empty()) out << "name: " << p.label() << "\n";
  out << "base: " << base_name << "\nsets:\n";
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    out << "  " << c.object_name(o) << ":";
    for (std::size_t i = 0; i < p.at(o).size(); ++i)
      out << (i ? ", " : " ") << p.at(o).name(i);
    out << "\n";
  }
  out << "actions:\n";
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    out << "  " << c.mor(m).id << ":";
    const FinSet& from = p.at(c.dst(m));
    const FinSet& to = p.at(c.src(m));
    for (std::size_t i = 0; i < from.size(); ++i)
      out << (i ? ", " : " ") << from.name(i) << " -> " << to.name(p.action(m)(i));
    out << "\n";
  }
  return out.str();
}

// -------------------------------------------------------------------- theory

namespace {

// prefix term syntax: name or name(arg, ...); names that are not operations
// become variables
struct TermParser {
  const Signature& sig;
  const std::string& text;
  std::size_t pos = 0;
  std::vector<std::string>& var_names;  // discovered variables, appended
  std::vector<std::size_t>& var_sorts;
  bool allow_new_vars;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    if (start == pos) throw ParseError("expected a name at position " + std::to_string(pos) +
                                       " of `" + text + "`");
    return text.substr(start, pos - start);
  }

  Term parse(std::optional<std::size_t> want_sort) {
    std::string name = ident();
    skip();
    auto op = sig.op_index(name);
    if (pos < text.size() && text[pos] == '(') {
      if (!op) throw ParseError("unknown operation `" + name + "`");
      ++pos;
      const Signature::Op& o = sig.ops[*op];
      std::vector<Term> args;
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
      } else {
        for (;;) {
          if (args.size() >= o.arity())
            throw ParseError("too many arguments to `" + name + "`");
          args.push_back(parse(o.arg_sorts[args.size()]));
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
          }
          throw ParseError("expected `,` or `)` in `" + text + "`");
        }
      }
      if (args.size() != o.arity())
        throw ParseError("operation `" + name + "` wants " + std::to_string(o.arity()) +
                         " arguments");
      return Term::make_app(sig, *op, std::move(args));
    }
    if (op) {
      if (sig.ops[*op].arity() != 0)
        throw ParseError("operation `" + name + "` used without arguments");
      return Term::make_app(sig, *op, {});
    }
    // a variable
    for (std::size_t i = 0; i < var_names.size(); ++i)
      if (var_names[i] == name) {
        if (want_sort && var_sorts[i] != *want_sort)
          throw ParseError("variable `" + name + "` used at two sorts");
        return Term::make_var(i, var_sorts[i]);
      }
    if (!allow_new_vars) throw ParseError("unknown variable `" + name + "`");
    if (!want_sort)
      throw ParseError("cannot infer the sort of variable `" + name + "`");
    var_names.push_back(name);
    var_sorts.push_back(*want_sort);
    return Term::make_var(var_names.size() - 1, *want_sort);
  }
};

}  // namespace

Term parse_term(const Signature& sig, const std::string& text,
                const std::vector<std::string>& var_names,
                const std::vector<std::size_t>& var_sorts) {
  auto names = var_names;
  auto sorts = var_sorts;
  TermParser p{sig, text, 0, names, sorts, false};
  Term t = p.parse(std::nullopt);
  p.skip();
  if (p.pos != text.size()) throw ParseError("trailing input in term `" + text + "`");
  return canonicalize(sig, t);
}

ThPtr parse_theory(const std::string& text, bool allow_unsafe, std::size_t budget) {
  Sections s = parse_sections(text, "theory", {"name", "sorts", "ops", "ac", "rules"});
  std::string name = "theory";
  if (const auto* n = s.find("name"); n && !n->empty()) name = (*n)[0];

  Signature sig;
  for (const auto& line : s.need("sorts"))
    for (const auto& so : split(line, ',')) sig.sorts.push_back(so);
  auto sort_index = [&](const std::string& n) {
    auto i = sig.sort_index(n);
    if (!i) throw ParseError("unknown sort `" + n + "`");
    return *i;
  };
  if (const auto* ops = s.find("ops"))
    for (const auto& line : *ops) {
      // name: s1, s2 -> s   or   name: -> s
      std::size_t colon = line.find(':');
      std::size_t arrow = line.find("->");
      if (colon == std::string::npos || arrow == std::string::npos)
        throw ParseError("bad ops entry `" + line + "`");
      Signature::Op o;
      o.name = trim(line.substr(0, colon));
      for (const auto& a : split(line.substr(colon + 1, arrow - colon - 1), ','))
        o.arg_sorts.push_back(sort_index(a));
      o.result_sort = sort_index(trim(line.substr(arrow + 2)));
      sig.ops.push_back(std::move(o));
    }
  if (const auto* ac = s.find("ac"))
    for (const auto& line : *ac) {
      // op   or   op unit u
      auto words = split(line, ' ');
      Signature::AcFlag f;
      if (words.empty()) continue;
      auto oi = sig.op_index(words[0]);
      if (!oi) throw ParseError("unknown AC operation `" + words[0] + "`");
      f.op = *oi;
      if (words.size() == 3 && words[1] == "unit") {
        auto ui = sig.op_index(words[2]);
        if (!ui) throw ParseError("unknown unit `" + words[2] + "`");
        f.unit_op = *ui;
      } else if (words.size() != 1) {
        throw ParseError("bad ac entry `" + line + "` (want `op` or `op unit u`)");
      }
      sig.ac.push_back(f);
    }

  RewriteSystem rs;
  if (const auto* rules = s.find("rules"))
    for (const auto& line : *rules) {
      std::size_t arrow = line.find("->");
      if (arrow == std::string::npos) throw ParseError("bad rule `" + line + "`");
      Rule r;
      std::string lhs_text = trim(line.substr(0, arrow));
      std::string rhs_text = trim(line.substr(arrow + 2));
      TermParser lp{sig, lhs_text, 0, r.var_names, r.var_sorts, true};
      r.lhs = lp.parse(std::nullopt);
      lp.skip();
      if (lp.pos != lhs_text.size()) throw ParseError("trailing input in `" + lhs_text + "`");
      TermParser rp{sig, rhs_text, 0, r.var_names, r.var_sorts, false};
      r.rhs = rp.parse(r.lhs.sort);
      rp.skip();
      if (rp.pos != rhs_text.size()) throw ParseError("trailing input in `" + rhs_text + "`");
      rs.rules.push_back(std::move(r));
    }
  return TheoryPresentation::load(std::move(name), std::move(sig), std::move(rs), allow_unsafe,
                                  budget);
}

std::string print_theory(const TheoryPresentation& t) {
  const Signature& sig = t.sig();
  std::stringstream out;
  out << "theory\nname: " << t.name() << "\nsorts:";
  for (std::size_t i = 0; i < sig.sorts.size(); ++i) out << (i ? ", " : " ") << sig.sorts[i];
  out << "\n";
  if (!sig.ops.empty()) {
    out << "ops:\n";
    for (const auto& o : sig.ops) {
      out << "  " << o.name << ":";
      for (std::size_t i = 0; i < o.arg_sorts.size(); ++i)
        out << (i ? ", " : " ") << sig.sorts[o.arg_sorts[i]];
      out << " -> " << sig.sorts[o.result_sort] << "\n";
    }
  }
  if (!sig.ac.empty()) {
    out << "ac:\n";
    for (const auto& f : sig.ac) {
      out << "  " << sig.ops[f.op].name;
      if (f.unit_op) out << " unit " << sig.ops[*f.unit_op].name;
      out << "\n";
    }
  }
  if (!t.rules().rules.empty()) {
    out << "rules:\n";
    for (const auto& r : t.rules().rules)
      out << "  " << term_to_string(sig, r.lhs, r.var_names) << " -> "
          << term_to_string(sig, r.rhs, r.var_names) << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------------ morphism

TheoryMorphism parse_theory_morphism(const std::string& text, ThPtr source, ThPtr target) {
  Sections s = parse_sections(text, "morphism", {"name", "sorts", "ops"});
  const Signature& ssig = source->sig();
  const Signature& tsig = target->sig();
  TheoryMorphism g;
  g.source = std::move(source);
  g.target = std::move(target);

  g.sort_map.assign(ssig.sorts.size(), SIZE_MAX);
  for (const auto& line : s.need("sorts")) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bad sorts entry `" + line + "`");
    auto si = ssig.sort_index(trim(line.substr(0, colon)));
    auto ti = tsig.sort_index(trim(line.substr(colon + 1)));
    if (!si || !ti) throw ParseError("unknown sort in entry `" + line + "`");
    if (g.sort_map[*si] != SIZE_MAX) throw ParseError("duplicate sort entry");
    g.sort_map[*si] = *ti;
  }
  for (std::size_t i = 0; i < g.sort_map.size(); ++i)
    if (g.sort_map[i] == SIZE_MAX)
      throw ParseError("no image for sort `" + ssig.sorts[i] + "`");

  g.op_map.assign(ssig.ops.size(), Term::make_var(0, 0));
  std::vector<bool> given(ssig.ops.size(), false);
  if (const auto* ops = s.find("ops"))
    for (const auto& line : *ops) {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("bad ops entry `" + line + "`");
      auto oi = ssig.op_index(trim(line.substr(0, colon)));
      if (!oi) throw ParseError("unknown operation in entry `" + line + "`");
      std::vector<std::string> names;
      std::vector<std::size_t> sorts;
      for (std::size_t a = 0; a < ssig.ops[*oi].arity(); ++a) {
        names.push_back("x" + std::to_string(a));
        sorts.push_back(g.sort_map[ssig.ops[*oi].arg_sorts[a]]);
      }
      Term t = parse_term(tsig, trim(line.substr(colon + 1)), names, sorts);
      if (t.sort != g.sort_map[ssig.ops[*oi].result_sort])
        throw ParseError("image of `" + ssig.ops[*oi].name + "` has the wrong sort");
      g.op_map[*oi] = std::move(t);
      given[*oi] = true;
    }
  for (std::size_t i = 0; i < given.size(); ++i)
    if (!given[i]) throw ParseError("no image for operation `" + ssig.ops[i].name + "`");
  return g;
}

std::string print_theory_morphism(const TheoryMorphism& g) {
  const Signature& ssig = g.source->sig();
  const Signature& tsig = g.target->sig();
  std::stringstream out;
  out << "morphism\nsorts:\n";
  for (std::size_t i = 0; i < g.sort_map.size(); ++i)
    out << "  " << ssig.sorts[i] << ": " << tsig.sorts[g.sort_map[i]] << "\n";
  if (!g.op_map.empty()) {
    out << "ops:\n";
    for (std::size_t i = 0; i < g.op_map.size(); ++i) {
      std::vector<std::string> names;
      for (std::size_t a = 0; a < ssig.ops[i].arity(); ++a)
        names.push_back("x" + std::to_string(a));
      out << "  " << ssig.ops[i].name << ": " << term_to_string(tsig, g.op_map[i], names)
          << "\n";
    }
  }
  return out.str();
}

// --------------------------------------------------------------------- model

Model parse_model(const std::string& text, const TheoryResolver& resolve) {
  Sections s = parse_sections(text, "model", {"name", "theory", "carriers", "tables"});
  const auto& tl = s.need("theory");
  if (tl.empty()) throw ParseError("empty `theory`");
  Model m;
  m.theory = resolve(tl[0]);
  const Signature& sig = m.theory->sig();

  m.carriers.assign(sig.sorts.size(), FinSet());
  std::vector<bool> seen(sig.sorts.size(), false);
  for (const auto& line : s.need("carriers")) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bad carriers entry `" + line + "`");
    auto si = sig.sort_index(trim(line.substr(0, colon)));
    if (!si) throw ParseError("unknown sort in carriers entry `" + line + "`");
    if (seen[*si]) throw ParseError("duplicate carrier for a sort");
    seen[*si] = true;
    m.carriers[*si] = FinSet(split(line.substr(colon + 1), ','));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError("no carrier for sort `" + sig.sorts[i] + "`");

  auto elem_index = [](const FinSet& fs, const std::string& n) -> std::size_t {
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (fs.name(i) == n) return i;
    throw ParseError("unknown element `" + n + "`");
  };
  m.tables.assign(sig.ops.size(), {});
  std::vector<bool> given(sig.ops.size(), false);
  for (const auto& line : s.need("tables")) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bad tables entry `" + line + "`");
    auto oi = sig.op_index(trim(line.substr(0, colon)));
    if (!oi) throw ParseError("unknown operation in tables entry `" + line + "`");
    const Signature::Op& o = sig.ops[*oi];
    std::size_t cells = 1;
    for (auto so : o.arg_sorts) cells *= m.carriers[so].size();
    std::vector<std::size_t> table;
    for (const auto& val : split(line.substr(colon + 1), ' '))
      table.push_back(elem_index(m.carriers[o.result_sort], val));
    if (table.size() != cells)
      throw ParseError("table for `" + o.name + "` has " + std::to_string(table.size()) +
                       " entries, expected " + std::to_string(cells));
    m.tables[*oi] = std::move(table);
    given[*oi] = true;
  }
  for (std::size_t i = 0; i < given.size(); ++i)
    if (!given[i]) throw ParseError("no table for operation `" + sig.ops[i].name + "`");
  return m;
}

std::string print_model(const Model& m, const std::string& theory_name) {
  const Signature& sig = m.theory->sig();
  std::stringstream out;
  out << "model\ntheory: " << theory_name << "\ncarriers:\n";
  for (std::size_t s = 0; s < sig.sorts.size(); ++s) {
    out << "  " << sig.sorts[s] << ":";
    for (std::size_t i = 0; i < m.carriers[s].size(); ++i)
      out << (i ? ", " : " ") << m.carriers[s].name(i);
    out << "\n";
  }
  out << "tables:\n";
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    out << "  " << sig.ops[op].name << ":";
    for (auto v : m.tables[op]) out << " " << m.carriers[sig.ops[op].result_sort].name(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace ct::io
