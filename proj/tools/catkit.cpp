// catkit — batch front end for the finite categorical universal algebra kit.
//
// Verbs: category | presheaf | theory | model | monad | adjoint | suite,
// plus verify-witness.  Exit codes: 0 success / verdict true, 1 verdict
// false (a witness is printed), 2 input error, 3 budget or search-space
// exhaustion.  With identical inputs and seed the output is byte-identical.
#include <cctype>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ct/fincat_ops.hpp"
#include "ct/fixtures.hpp"
#include "ct/io.hpp"
#include "ct/models.hpp"
#include "ct/monadic.hpp"
#include "ct/presheaf_ops.hpp"
#include "ct/suites.hpp"

using json = nlohmann::json;
using namespace ct;

namespace {

struct Output {
  std::string format = "text";

  void emit(const json& rep, const std::vector<std::string>& lines) const {
    if (format == "json") {
      std::cout << rep.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
  void emit_witness(json& rep, const json& w) const {  // prints in text mode

    rep["witness"] = w;
    if (format != "json") std::cout << "witness: " << w.dump() << "\n";
  }
};

// ------------------------------------------------------------------ resolvers

CatPtr resolve_category(const std::string& ref) {
  if (ref == "gph") return fixtures::gph_base();
  if (ref == "rgph") return fixtures::rgph_base();
  if (ref.rfind("inj@", 0) == 0) return fixtures::inj_cat(std::stoul(ref.substr(4)));
  for (const auto& c : fixtures::sifted_test_categories())
    if (c.name == ref) return c.cat;
  return io::parse_category(io::read_file(ref)).cat;
}

ThPtr resolve_theory(const std::string& ref, bool allow_unsafe = false) {
  try {
    return fixtures::theory_by_name(ref);
  } catch (const TheoryError&) {
    return io::parse_theory(io::read_file(ref), allow_unsafe);
  }
}

struct PshRef {
  PshPtr p;
  std::string kind;  // gph | rgph | inj | file
};

PshPtr builtin_presheaf(const std::string& kind, const std::string& name) {
  auto single = [&](const std::string& n) -> PshPtr {
    if (kind == "gph") {
      if (n == "V") return fixtures::gph_V();
      if (n == "E") return fixtures::gph_E();
      if (n == "terminal") return fixtures::gph_terminal();
    } else if (kind == "rgph") {
      if (n == "E") return Presheaf::representable(fixtures::rgph_base(), 1);
      if (n == "terminal") return Presheaf::representable(fixtures::rgph_base(), 0);
    } else if (kind == "inj") {
      // y(n)@K
      if (n.rfind("y(", 0) == 0) {
        std::size_t close = n.find(')');
        std::size_t at = n.find('@');
        if (close != std::string::npos && at != std::string::npos && at > close)
          return fixtures::inj_y(std::stoul(n.substr(2, close - 2)),
                                 std::stoul(n.substr(at + 1)));
      }
    }
    throw io::ParseError("unknown generator `" + kind + ":" + n + "`");
  };
  std::size_t x = name.find('x');
  if (kind != "inj" && x != std::string::npos && x > 0 && x + 1 < name.size())
    return product(single(name.substr(0, x)), single(name.substr(x + 1))).product;
  return single(name);
}

PshRef resolve_presheaf(const std::string& ref) {
  std::size_t colon = ref.find(':');
  if (colon != std::string::npos) {
    std::string kind = ref.substr(0, colon);
    if (kind == "gph" || kind == "rgph" || kind == "inj")
      return {builtin_presheaf(kind, ref.substr(colon + 1)), kind};
  }
  auto resolver = [](const std::string& base_ref) { return resolve_category(base_ref); };
  return {io::parse_presheaf(io::read_file(ref), resolver), "file"};
}

Model resolve_model(const std::string& ref) {
  if (ref == "z2-group") return fixtures::z2_group();
  if (ref == "z4-group") return fixtures::z4_group();
  if (ref == "left-zero-unit-monoid") return fixtures::left_zero_unit_monoid();
  if (ref.rfind("set:", 0) == 0)
    return fixtures::set_model(fixtures::empty_theory(), std::stoul(ref.substr(4)));
  return io::parse_model(io::read_file(ref),
                         [](const std::string& t) { return resolve_theory(t); });
}

TheoryMorphism resolve_morphism(const std::string& map_ref, const std::string& src_ref,
                                const std::string& dst_ref) {
  if (map_ref == "abelianization") return fixtures::monoid_to_comm_monoid();
  if (map_ref == "from-empty") return fixtures::empty_to(resolve_theory(dst_ref));
  return io::parse_theory_morphism(io::read_file(map_ref), resolve_theory(src_ref),
                                   resolve_theory(dst_ref));
}

ColimitResult resolve_colimit(const std::string& ref) {
  if (ref == "gph:reflexive-coeq") return fixtures::gph_reflexive_coequalizer();
  throw io::ParseError("unknown colimit `" + ref + "` (available: gph:reflexive-coeq)");
}

std::string summand_name(const PshRef& r, std::size_t obj) {
  const FinCat& base = r.p->base();
  if (r.kind == "gph" || r.kind == "rgph") {
    std::string n = base.object_name(obj);
    for (auto& c : n) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return n;
  }
  if (r.kind == "inj") return "I(" + base.object_name(obj) + ",-)";
  return base.object_name(obj);
}

std::string term_str(const Signature& sig, const Term& t) {
  std::vector<std::size_t> vars;
  t.collect_vars(vars);
  std::size_t n = 0;
  for (auto v : vars) n = std::max(n, v + 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return term_to_string(sig, t, names);
}

// ------------------------------------------------------------------ commands

int cmd_category_check(const Output& out, const std::string& ref) {
  CatPtr c = resolve_category(ref);
  json rep{{"command", "category check"},
           {"input", ref},
           {"objects", c->num_objects()},
           {"morphisms", c->num_morphisms()},
           {"ok", true}};
  out.emit(rep, {"ok: " + std::to_string(c->num_objects()) + " objects, " +
                 std::to_string(c->num_morphisms()) + " morphisms"});
  return 0;
}

int cmd_category_show(const Output& out, const std::string& ref) {
  CatPtr c = resolve_category(ref);
  std::string text = io::print_category(*c, ref);
  out.emit(json{{"command", "category show"}, {"input", ref}, {"text", text}}, {text});
  return 0;
}

int cmd_category_sifted(const Output& out, const std::string& ref) {
  CatPtr c = resolve_category(ref);
  auto rep = is_sifted(c);
  json j{{"command", "category sifted"}, {"input", ref}, {"sifted", rep.sifted}};
  if (rep.sifted) {
    out.emit(j, {"sifted"});
    return 0;
  }
  json w{{"check", "sifted"}, {"category", ref}, {"sifted", false}};
  std::string why = "not sifted";
  if (rep.witness) {
    w["obj_a"] = rep.witness->obj_a;
    w["obj_b"] = rep.witness->obj_b;
    w["components"] = rep.witness->components.size();
    why += rep.witness->empty_category
               ? ": the category is empty"
               : ": cospans from object " + std::to_string(rep.witness->obj_a) +
                     " to object " + std::to_string(rep.witness->obj_b) +
                     (rep.witness->empty_cospans
                          ? " do not exist"
                          : " fall into " + std::to_string(rep.witness->components.size()) +
                                " components");
  }
  std::cout << why << "\n";
  out.emit_witness(j, w);
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_decompose(const Output& out, const std::string& ref) {
  PshRef p = resolve_presheaf(ref);
  auto d = decompose_into_representables(p.p);
  json j{{"command", "presheaf decompose"}, {"input", ref}, {"ok", d.ok()}};
  if (d.ok()) {
    std::string line;
    json summands = json::array();
    for (auto s : d.decomposition->summands) {
      if (!line.empty()) line += " + ";
      line += summand_name(p, s);
      summands.push_back(summand_name(p, s));
    }
    if (line.empty()) line = "0 (empty coproduct)";
    j["summands"] = summands;
    out.emit(j, {line});
    return 0;
  }
  json comp = json::array();
  for (auto& [o, x] : d.failing_component)
    comp.push_back({{"object", p.p->base().object_name(o)}, {"element", x}});
  json w{{"check", "decompose"}, {"presheaf", ref}, {"failing_component", comp}};
  std::vector<std::string> lines{"not decomposable: a component with " +
                                 std::to_string(d.failing_component.size()) +
                                 " elements is not representable"};
  if (out.format != "json")
    for (const auto& l : lines) std::cout << l << "\n";
  out.emit_witness(j, w);
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_preserves(const Output& out, const std::string& ref, const std::string& colim_ref) {
  PshRef p = resolve_presheaf(ref);
  auto colim = resolve_colimit(colim_ref);
  auto rep = preserves_colimit(p.p, colim);
  json j{{"command", "presheaf preserves"},
         {"input", ref},
         {"colimit", colim_ref},
         {"preserved", rep.preserved},
         {"colim_of_homs", rep.colim_of_homs},
         {"homs_of_colim", rep.homs_of_colim}};
  if (rep.preserved) {
    out.emit(j, {"preserved: canonical map bijective on " +
                 std::to_string(rep.homs_of_colim) + " elements"});
    return 0;
  }
  if (out.format != "json")
    std::cout << "not preserved: |colim Hom| = " << rep.colim_of_homs
              << " but |Hom(colim)| = " << rep.homs_of_colim << "\n";
  out.emit_witness(j, json{{"check", "preserves"},
                           {"presheaf", ref},
                           {"colimit", colim_ref},
                           {"colim_of_homs", rep.colim_of_homs},
                           {"homs_of_colim", rep.homs_of_colim}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_nat(const Output& out, const std::string& pref, const std::string& qref) {
  PshRef p = resolve_presheaf(pref), q = resolve_presheaf(qref);
  auto nats = nat_transformations(p.p, q.p);
  json j{{"command", "presheaf nat"}, {"source", pref}, {"target", qref},
         {"count", nats.size()}};
  out.emit(j, {std::to_string(nats.size()) + " natural transformations"});
  return 0;
}

int cmd_presheaf_show(const Output& out, const std::string& ref) {
  PshRef p = resolve_presheaf(ref);
  std::string base_name = p.kind == "file" ? "(see source file)" : p.kind;
  std::string text = io::print_presheaf(*p.p, base_name);
  out.emit(json{{"command", "presheaf show"}, {"input", ref}, {"text", text}}, {text});
  return 0;
}

int cmd_theory_check(const Output& out, const std::string& ref, bool unsafe) {
  try {
    ThPtr t = resolve_theory(ref, unsafe);
    json j{{"command", "theory check"},
           {"input", ref},
           {"ok", true},
           {"confluence_clean", t->confluence_clean()},
           {"ops", t->sig().ops.size()},
           {"rules", t->rules().rules.size()}};
    out.emit(j, {std::string("ok: ") + (t->confluence_clean() ? "confluent, " : "UNSAFE, ") +
                 std::to_string(t->sig().ops.size()) + " ops, " +
                 std::to_string(t->rules().rules.size()) + " rules"});
    return 0;
  } catch (const UnsafeTheory& e) {
    json j{{"command", "theory check"}, {"input", ref}, {"ok", false},
           {"reason", e.what()}};
    if (out.format != "json") std::cout << "not confluent: " << e.what() << "\n";
    Output o = out;
    o.emit_witness(j, json{{"check", "theory-confluence"}, {"theory", ref}});
    if (out.format == "json") std::cout << j.dump(2) << "\n";
    return 1;
  }
}

int cmd_theory_show(const Output& out, const std::string& ref, bool unsafe) {
  ThPtr t = resolve_theory(ref, unsafe);
  std::string text = io::print_theory(*t);
  out.emit(json{{"command", "theory show"}, {"input", ref}, {"text", text}}, {text});
  return 0;
}

int cmd_theory_hom(const Output& out, const std::string& ref, std::size_t m, std::size_t n,
                   std::size_t depth, bool unsafe) {
  ThPtr t = resolve_theory(ref, unsafe);
  auto hs = hom_enumerate(*t, t->ctx(m), t->ctx(n), depth);
  json j{{"command", "theory hom"}, {"input", ref},     {"m", m},
         {"n", n},                  {"depth", depth},   {"count", hs.homs.size()},
         {"truncated", hs.truncated}};
  out.emit(j, {"hom(" + std::to_string(m) + ", " + std::to_string(n) + "): " +
               std::to_string(hs.homs.size()) + " morphisms at depth " +
               std::to_string(depth) + (hs.truncated ? " (truncated)" : " (saturated)")});
  return hs.truncated ? 3 : 0;
}

int cmd_theory_morphism(const Output& out, const std::string& src, const std::string& dst,
                        const std::string& map) {
  TheoryMorphism g = resolve_morphism(map, src, dst);
  auto rep = check_theory_morphism(g);
  json j{{"command", "theory morphism"}, {"source", src}, {"target", dst}, {"map", map},
         {"ok", rep.ok}};
  if (rep.ok) {
    out.emit(j, {"ok: all source equations hold after translation"});
    return 0;
  }
  j["failing_rule"] = *rep.failing_rule;
  j["lhs_nf"] = term_str(g.target->sig(), rep.lhs_nf);
  j["rhs_nf"] = term_str(g.target->sig(), rep.rhs_nf);
  if (out.format != "json")
    std::cout << "rule " << *rep.failing_rule << " breaks: " << std::string(j["lhs_nf"])
              << " != " << std::string(j["rhs_nf"]) << "\n";
  Output o = out;
  o.emit_witness(j, json{{"check", "morphism"},
                         {"source", src},
                         {"target", dst},
                         {"map", map},
                         {"failing_rule", *rep.failing_rule}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_model_check(const Output& out, const std::string& ref) {
  Model m = resolve_model(ref);
  auto rep = check_model(m);
  json j{{"command", "model check"}, {"input", ref}, {"ok", rep.ok}};
  if (rep.ok) {
    out.emit(j, {"ok: all equations hold"});
    return 0;
  }
  j["failing_rule"] = rep.failing_rule;
  j["assignment"] = rep.assignment;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  if (out.format != "json")
    std::cout << "equation " << rep.failing_rule << " fails: evaluates to " << rep.lhs
              << " vs " << rep.rhs << "\n";
  Output o = out;
  o.emit_witness(j, json{{"check", "model"},
                         {"model", ref},
                         {"failing_rule", rep.failing_rule},
                         {"assignment", rep.assignment},
                         {"lhs", rep.lhs},
                         {"rhs", rep.rhs}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_model_free(const Output& out, const std::string& ref, const std::string& gens,
                   std::size_t depth, bool unsafe) {
  ThPtr t = resolve_theory(ref, unsafe);
  std::vector<std::size_t> gen_sorts;
  if (!gens.empty()) {
    std::stringstream ss(gens);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto si = t->sig().sort_index(item);
      if (!si) throw io::ParseError("unknown sort `" + item + "` in --gens");
      gen_sorts.push_back(*si);
    }
  }
  auto fm = free_model(t, gen_sorts, depth);
  json sizes = json::array();
  std::vector<std::string> lines;
  for (std::size_t s = 0; s < fm.elements.size(); ++s) {
    sizes.push_back(fm.elements[s].size());
    lines.push_back("sort " + t->sig().sorts[s] + ": " +
                    std::to_string(fm.elements[s].size()) + " normal forms");
  }
  lines.push_back(fm.saturated ? "saturated: the free model is finite at this depth"
                               : "truncated: deepen --depth for more elements");
  json j{{"command", "model free"}, {"input", ref},      {"generators", gen_sorts.size()},
         {"depth", depth},          {"sizes", sizes},    {"saturated", fm.saturated}};
  out.emit(j, lines);
  return fm.saturated ? 0 : 3;
}

int cmd_model_hom(const Output& out, const std::string& aref, const std::string& bref) {
  Model a = resolve_model(aref), b = resolve_model(bref);
  auto homs = hom_models(a, b);
  json j{{"command", "model hom"}, {"source", aref}, {"target", bref},
         {"count", homs.size()}};
  out.emit(j, {std::to_string(homs.size()) + " homomorphisms"});
  return 0;
}

int cmd_model_quotient(const Output& out, const std::string& ref,
                       const std::vector<std::string>& pairs) {
  Model m = resolve_model(ref);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> ps;
  for (const auto& p : pairs) {
    auto c1 = p.find(':'), c2 = p.find(':', p.find(':') + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw io::ParseError("bad --pair `" + p + "` (want sort:elem:elem)");
    auto si = m.theory->sig().sort_index(p.substr(0, c1));
    if (!si) throw io::ParseError("unknown sort in --pair `" + p + "`");
    auto find_elem = [&](const std::string& n) -> std::size_t {
      for (std::size_t i = 0; i < m.carriers[*si].size(); ++i)
        if (m.carriers[*si].name(i) == n) return i;
      throw io::ParseError("unknown element `" + n + "` in --pair");
    };
    ps.emplace_back(*si, find_elem(p.substr(c1 + 1, c2 - c1 - 1)),
                    find_elem(p.substr(c2 + 1)));
  }
  auto q = quotient_by_congruence(m, ps);
  json sizes = json::array();
  std::vector<std::string> lines;
  for (std::size_t s = 0; s < q.model.carriers.size(); ++s) {
    sizes.push_back(q.model.carriers[s].size());
    lines.push_back("sort " + m.theory->sig().sorts[s] + ": " +
                    std::to_string(q.model.carriers[s].size()) + " classes");
  }
  bool ok = check_model(q.model).ok;
  lines.push_back(ok ? "quotient satisfies the theory" : "quotient FAILS the theory");
  json j{{"command", "model quotient"}, {"input", ref}, {"sizes", sizes}, {"ok", ok}};
  out.emit(j, lines);
  return ok ? 0 : 1;
}

int cmd_adjoint_apply(const Output& out, const std::string& src, const std::string& dst,
                      const std::string& map, const std::string& model_ref, std::size_t depth,
                      std::size_t bound) {
  TheoryMorphism g = resolve_morphism(map, src, dst);
  Model a = resolve_model(model_ref);
  auto res = left_adjoint_algebraic(g, a, depth, bound);
  json j{{"command", "adjoint apply"},
         {"source", src},
         {"target", dst},
         {"map", map},
         {"model", model_ref},
         {"depth", depth},
         {"bound", bound},
         {"unit_ok", res.unit_ok},
         {"truncated", res.truncated},
         {"certificate",
          {{"ok", res.certificate.ok},
           {"truncated", res.certificate.truncated},
           {"models_checked", res.certificate.models_checked},
           {"detail", res.certificate.detail}}},
         {"result", io::print_model(res.model, dst)}};
  std::vector<std::string> lines{io::print_model(res.model, dst)};
  lines.push_back(std::string("unit: ") + (res.unit_ok ? "ok" : "NOT a homomorphism"));
  lines.push_back("certificate: " + std::string(res.certificate.ok ? "ok" : "FAILED") +
                  " over " + std::to_string(res.certificate.models_checked) +
                  " target models (carriers <= " + std::to_string(bound) + ")" +
                  (res.certificate.truncated ? ", truncated" : ""));
  if (res.unit_ok && res.certificate.ok) {
    out.emit(j, lines);
    return 0;
  }
  if (out.format != "json")
    for (const auto& l : lines) std::cout << l << "\n";
  Output o = out;
  o.emit_witness(j, json{{"check", "adjoint"},
                         {"source", src},
                         {"target", dst},
                         {"map", map},
                         {"model", model_ref},
                         {"depth", depth},
                         {"bound", bound}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_monad_build(const Output& out, const std::string& ref, std::size_t set,
                    std::size_t depth, bool unsafe) {
  ThPtr t = resolve_theory(ref, unsafe);
  auto sx = monad_from_theory(t, set, depth);
  json j{{"command", "monad build"}, {"input", ref},          {"set", set},
         {"depth", depth},           {"size", sx.size()},     {"saturated", sx.saturated}};
  std::vector<std::string> lines{"|T(X)| = " + std::to_string(sx.size()) + " for |X| = " +
                                 std::to_string(set) + " at depth " + std::to_string(depth) +
                                 (sx.saturated ? " (saturated)" : " (truncated)")};
  if (sx.size() <= 40) {
    json elems = json::array();
    for (const auto& e : sx.elements) {
      elems.push_back(term_str(t->sig(), e));
      lines.push_back("  " + term_str(t->sig(), e));
    }
    j["elements"] = elems;
  }
  out.emit(j, lines);
  return sx.saturated ? 0 : 3;
}

int cmd_monad_roundtrip(const Output& out, const std::string& ref, std::size_t arity,
                        std::size_t depth, bool unsafe) {
  ThPtr t = resolve_theory(ref, unsafe);
  auto rep = roundtrip_check(t, arity, depth);
  json cards = json::array();
  for (auto& [m, k, via_monad, via_theory] : rep.cardinalities)
    cards.push_back({{"m", m}, {"k", k}, {"monad", via_monad}, {"theory", via_theory}});
  json j{{"command", "monad roundtrip"},
         {"input", ref},
         {"arity", arity},
         {"depth", depth},
         {"ok", rep.ok},
         {"truncated", rep.truncated},
         {"compositions_checked", rep.compositions_checked},
         {"cardinalities", cards}};
  std::vector<std::string> lines{std::string(rep.ok ? "ok" : "MISMATCH") +
                                 (rep.truncated ? " (truncated)" : " (exact)") + ", " +
                                 std::to_string(rep.compositions_checked) +
                                 " compositions checked"};
  if (!rep.detail.empty()) lines.push_back(rep.detail);
  if (rep.ok) {
    out.emit(j, lines);
    return 0;
  }
  if (out.format != "json")
    for (const auto& l : lines) std::cout << l << "\n";
  Output o = out;
  o.emit_witness(j, json{{"check", "roundtrip"},
                         {"theory", ref},
                         {"arity", arity},
                         {"depth", depth}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_monad_em(const Output& out, const std::string& ref, std::size_t carrier,
                 std::size_t depth, bool unsafe) {
  ThPtr t = resolve_theory(ref, unsafe);
  auto rep = em_model_correspondence(t, carrier, depth, std::min<std::size_t>(depth, 2));
  json j{{"command", "monad em"},
         {"input", ref},
         {"carrier", carrier},
         {"depth", depth},
         {"ok", rep.ok},
         {"truncated", rep.truncated},
         {"models", rep.models},
         {"algebras_enumerated", rep.algebras},
         {"exhaustive", rep.exhaustive},
         {"hom_pairs_checked", rep.hom_pairs_checked}};
  std::vector<std::string> lines{
      std::string(rep.ok ? "ok" : "MISMATCH") + ": " + std::to_string(rep.models) +
      " models on " + std::to_string(carrier) + " elements" +
      (rep.exhaustive ? ", " + std::to_string(rep.algebras) + " algebras enumerated" : "") +
      ", " + std::to_string(rep.hom_pairs_checked) + " hom pairs checked"};
  if (!rep.detail.empty()) lines.push_back(rep.detail);
  if (rep.ok) {
    out.emit(j, lines);
    return 0;
  }
  if (out.format != "json")
    for (const auto& l : lines) std::cout << l << "\n";
  Output o = out;
  o.emit_witness(j, json{{"check", "em"}, {"theory", ref}, {"carrier", carrier},
                         {"depth", depth}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_suite(const Output& out, const std::string& name, std::uint64_t seed,
              std::size_t count) {
  std::vector<suites::SuiteItem> items;
  if (name == "paper-examples") {
    items = suites::paper_examples();
  } else if (name == "properties") {
    items = suites::property_suites(seed, count);
  } else {
    throw io::ParseError("unknown suite `" + name +
                         "` (available: paper-examples, properties)");
  }
  json jitems = json::array();
  json failures = json::object();
  std::vector<std::string> lines;
  bool all_ok = true;
  for (const auto& it : items) {
    all_ok = all_ok && it.ok();
    jitems.push_back({{"name", it.name},
                      {"instances", it.instances},
                      {"failures", it.failures},
                      {"detail", it.detail}});
    if (it.failures) failures[it.name] = it.failures;
    lines.push_back(std::string(it.ok() ? "PASS " : "FAIL ") + it.name + " (" +
                    std::to_string(it.instances) + " instances" +
                    (it.failures ? ", " + std::to_string(it.failures) + " failures" : "") +
                    ")" + (it.detail.empty() ? "" : " — " + it.detail));
  }
  json j{{"command", "suite"}, {"suite", name}, {"seed", seed}, {"count", count},
         {"ok", all_ok},       {"items", jitems}};
  if (all_ok) {
    out.emit(j, lines);
    return 0;
  }
  if (out.format != "json")
    for (const auto& l : lines) std::cout << l << "\n";
  Output o = out;
  o.emit_witness(j, json{{"check", "suite"},
                         {"name", name},
                         {"seed", seed},
                         {"count", count},
                         {"failures", failures}});
  if (out.format == "json") std::cout << j.dump(2) << "\n";
  return 1;
}

int cmd_verify_witness(const Output& out, const std::string& path) {
  // the argument is either a file containing a witness line or the witness
  // JSON itself, pasted straight from a report
  std::string text = path.find('{') != std::string::npos ? path : io::read_file(path);
  std::size_t brace = text.find('{');
  if (brace == std::string::npos) throw io::ParseError("no JSON object in " + path);
  json w = json::parse(text.substr(brace));
  std::string check = w.at("check");
  bool confirmed = false;
  if (check == "decompose") {
    confirmed = !decompose_into_representables(resolve_presheaf(w.at("presheaf")).p).ok();
  } else if (check == "preserves") {
    auto rep = preserves_colimit(resolve_presheaf(w.at("presheaf")).p,
                                 resolve_colimit(w.at("colimit")));
    confirmed = !rep.preserved && rep.colim_of_homs == w.at("colim_of_homs") &&
                rep.homs_of_colim == w.at("homs_of_colim");
  } else if (check == "sifted") {
    confirmed = !is_sifted(resolve_category(w.at("category"))).sifted;
  } else if (check == "model") {
    Model m = resolve_model(w.at("model"));
    const auto& r = m.theory->rules().rules.at(w.at("failing_rule"));
    std::vector<std::size_t> env = w.at("assignment");
    confirmed = m.eval(r.lhs, env) != m.eval(r.rhs, env) &&
                m.eval(r.lhs, env) == w.at("lhs") && m.eval(r.rhs, env) == w.at("rhs");
  } else if (check == "morphism") {
    auto rep = check_theory_morphism(
        resolve_morphism(w.at("map"), w.at("source"), w.at("target")));
    confirmed = !rep.ok && rep.failing_rule == std::optional<std::size_t>(
                                                   w.at("failing_rule").get<std::size_t>());
  } else if (check == "theory-confluence") {
    ThPtr t = resolve_theory(w.at("theory"), true);
    confirmed = !t->confluence_clean();
  } else if (check == "roundtrip") {
    confirmed = !roundtrip_check(resolve_theory(w.at("theory")), w.at("arity"),
                                 w.at("depth"))
                     .ok;
  } else if (check == "em") {
    std::size_t d = w.at("depth");
    confirmed = !em_model_correspondence(resolve_theory(w.at("theory")), w.at("carrier"), d,
                                         std::min<std::size_t>(d, 2))
                     .ok;
  } else if (check == "adjoint") {
    auto res = left_adjoint_algebraic(
        resolve_morphism(w.at("map"), w.at("source"), w.at("target")),
        resolve_model(w.at("model")), w.at("depth"), w.at("bound"));
    confirmed = !(res.unit_ok && res.certificate.ok);
  } else if (check == "suite") {
    std::vector<suites::SuiteItem> items =
        std::string(w.at("name")) == "paper-examples"
            ? suites::paper_examples()
            : suites::property_suites(w.at("seed"), w.at("count"));
    json failures = json::object();
    for (const auto& it : items)
      if (it.failures) failures[it.name] = it.failures;
    confirmed = failures == w.at("failures") && !failures.empty();
  } else {
    throw io::ParseError("unknown witness kind `" + check + "`");
  }
  json j{{"command", "verify-witness"}, {"input", path}, {"confirmed", confirmed}};
  out.emit(j, {confirmed ? "witness confirmed" : "witness does NOT reproduce"});
  return confirmed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categorical universal algebra toolkit"};
  app.require_subcommand(1);
  Output out;
  bool unsafe = false;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--unsafe", unsafe, "waive the confluence gate when loading theories");

  int code = 0;
  auto run = [&](std::function<int()> f) { return [&, f] { code = f(); }; };

  std::string ref, ref2, ref3, colim_ref, gens;
  std::size_t m = 1, n = 1, depth = 3, bound = 3, set = 2, arity = 2, carrier = 2;
  std::uint64_t seed = 0;
  std::size_t count = 500;
  std::vector<std::string> pairs;

  auto* category = app.add_subcommand("category", "finite categories");
  auto* cat_check = category->add_subcommand("check", "parse and validate");
  cat_check->add_option("input", ref)->required();
  cat_check->callback(run([&] { return cmd_category_check(out, ref); }));
  auto* cat_show = category->add_subcommand("show", "print in canonical form");
  cat_show->add_option("input", ref)->required();
  cat_show->callback(run([&] { return cmd_category_show(out, ref); }));
  auto* cat_sifted = category->add_subcommand("sifted", "test siftedness");
  cat_sifted->add_option("input", ref)->required();
  cat_sifted->callback(run([&] { return cmd_category_sifted(out, ref); }));

  auto* presheaf = app.add_subcommand("presheaf", "finite presheaves");
  auto* psh_dec = presheaf->add_subcommand("decompose", "coproduct of representables");
  psh_dec->add_option("input", ref)->required();
  psh_dec->callback(run([&] { return cmd_decompose(out, ref); }));
  auto* psh_pres = presheaf->add_subcommand("preserves", "hom-functor colimit preservation");
  psh_pres->add_option("input", ref)->required();
  psh_pres->add_option("--colimit", colim_ref)->required();
  psh_pres->callback(run([&] { return cmd_preserves(out, ref, colim_ref); }));
  auto* psh_nat = presheaf->add_subcommand("nat", "count natural transformations");
  psh_nat->add_option("source", ref)->required();
  psh_nat->add_option("target", ref2)->required();
  psh_nat->callback(run([&] { return cmd_nat(out, ref, ref2); }));
  auto* psh_show = presheaf->add_subcommand("show", "print in canonical form");
  psh_show->add_option("input", ref)->required();
  psh_show->callback(run([&] { return cmd_presheaf_show(out, ref); }));

  auto* theory = app.add_subcommand("theory", "finitely presented theories");
  auto* th_check = theory->add_subcommand("check", "parse and gate on confluence");
  th_check->add_option("input", ref)->required();
  th_check->callback(run([&] { return cmd_theory_check(out, ref, unsafe); }));
  auto* th_show = theory->add_subcommand("show", "print in canonical form");
  th_show->add_option("input", ref)->required();
  th_show->callback(run([&] { return cmd_theory_show(out, ref, unsafe); }));
  auto* th_hom = theory->add_subcommand("hom", "enumerate hom(m, n) up to a depth");
  th_hom->add_option("input", ref)->required();
  th_hom->add_option("-m", m, "source context size");
  th_hom->add_option("-n", n, "target context size");
  th_hom->add_option("--depth", depth, "normal-form closure rounds");
  th_hom->callback(run([&] { return cmd_theory_hom(out, ref, m, n, depth, unsafe); }));
  auto* th_mor = theory->add_subcommand("morphism", "check a theory morphism");
  th_mor->add_option("source", ref)->required();
  th_mor->add_option("target", ref2)->required();
  th_mor->add_option("map", ref3)->required();
  th_mor->callback(run([&] { return cmd_theory_morphism(out, ref, ref2, ref3); }));

  auto* model = app.add_subcommand("model", "finite models");
  auto* mod_check = model->add_subcommand("check", "verify the equations");
  mod_check->add_option("input", ref)->required();
  mod_check->callback(run([&] { return cmd_model_check(out, ref); }));
  auto* mod_free = model->add_subcommand("free", "free model on generators");
  mod_free->add_option("theory", ref)->required();
  mod_free->add_option("--gens", gens, "comma-separated generator sorts");
  mod_free->add_option("--depth", depth, "closure rounds");
  mod_free->callback(run([&] { return cmd_model_free(out, ref, gens, depth, unsafe); }));
  auto* mod_hom = model->add_subcommand("hom", "count homomorphisms");
  mod_hom->add_option("source", ref)->required();
  mod_hom->add_option("target", ref2)->required();
  mod_hom->callback(run([&] { return cmd_model_hom(out, ref, ref2); }));
  auto* mod_quot = model->add_subcommand("quotient", "quotient by a congruence");
  mod_quot->add_option("input", ref)->required();
  mod_quot->add_option("--pair", pairs, "sort:elem:elem to identify")->required();
  mod_quot->callback(run([&] { return cmd_model_quotient(out, ref, pairs); }));

  auto* adjoint = app.add_subcommand("adjoint", "algebraic functors and left adjoints");
  auto* adj_apply = adjoint->add_subcommand("apply", "apply the left adjoint");
  adj_apply->add_option("--source", ref)->required();
  adj_apply->add_option("--target", ref2)->required();
  adj_apply->add_option("--map", ref3)->required();
  adj_apply->add_option("--model", colim_ref)->required();
  adj_apply->add_option("--depth", depth, "free-stage closure rounds");
  adj_apply->add_option("--bound", bound, "certificate carrier bound");
  adj_apply->callback(
      run([&] { return cmd_adjoint_apply(out, ref, ref2, ref3, colim_ref, depth, bound); }));

  auto* monad = app.add_subcommand("monad", "finitary monads from theories");
  auto* mon_build = monad->add_subcommand("build", "one slice T(X)");
  mon_build->add_option("theory", ref)->required();
  mon_build->add_option("--set", set, "|X|");
  mon_build->add_option("--depth", depth, "closure rounds");
  mon_build->callback(run([&] { return cmd_monad_build(out, ref, set, depth, unsafe); }));
  auto* mon_rt = monad->add_subcommand("roundtrip", "theory -> monad -> theory");
  mon_rt->add_option("theory", ref)->required();
  mon_rt->add_option("--arity", arity, "max context size");
  mon_rt->add_option("--depth", depth, "closure rounds");
  mon_rt->callback(run([&] { return cmd_monad_roundtrip(out, ref, arity, depth, unsafe); }));
  auto* mon_em = monad->add_subcommand("em", "Eilenberg-Moore algebras vs models");
  mon_em->add_option("theory", ref)->required();
  mon_em->add_option("--carrier", carrier, "|X|");
  mon_em->add_option("--depth", depth, "closure rounds");
  mon_em->callback(run([&] { return cmd_monad_em(out, ref, carrier, depth, unsafe); }));

  auto* suite = app.add_subcommand("suite", "run a test battery");
  suite->add_option("name", ref)->required();
  suite->add_option("--seed", seed, "PRNG seed for the randomized suites");
  suite->add_option("--bound", count, "instances per randomized suite");
  suite->callback(run([&] { return cmd_suite(out, ref, seed, count); }));

  auto* verify = app.add_subcommand("verify-witness", "re-check a printed witness");
  verify->add_option("input", ref)->required();
  verify->callback(run([&] { return cmd_verify_witness(out, ref); }));

  // let --format / --unsafe appear anywhere on the command line
  for (auto* verb : app.get_subcommands({})) {
    verb->fallthrough();
    for (auto* leaf : verb->get_subcommands({})) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const SearchSpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
