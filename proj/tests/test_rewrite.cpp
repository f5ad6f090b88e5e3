#include "doctest.h"

#include "ct/fixtures.hpp"
#include "ct/rewrite.hpp"
#include "ct/term.hpp"
#include "ct/theory.hpp"

using namespace ct;

namespace {

Term v(std::size_t i) { return Term::make_var(i, 0); }

}  // namespace

TEST_CASE("term construction is sort-checked") {
  const Signature& sig = fixtures::monoid_theory()->sig();
  Term e = Term::make_app(sig, 1, {});
  CHECK(e.args.empty());
  CHECK_THROWS_AS(Term::make_app(sig, 0, {v(0)}), TermError);  // m is binary
  Term m = Term::make_app(sig, 0, {v(0), v(1)});
  CHECK(m.node_count() == 3);
  CHECK(m.depth() == 1);  // variables sit at depth 0
  std::vector<std::size_t> vars;
  m.collect_vars(vars);
  CHECK(vars == std::vector<std::size_t>{0, 1});
}

TEST_CASE("group normal forms") {
  auto t = fixtures::group_theory();
  Normalizer nz = t->normalizer();
  const Signature& sig = t->sig();
  auto m = [&](Term a, Term b) { return Term::make_app(sig, 0, {std::move(a), std::move(b)}); };
  auto inv = [&](Term a) { return Term::make_app(sig, 2, {std::move(a)}); };
  Term e = Term::make_app(sig, 1, {});

  CHECK(nz.normalize(m(inv(v(0)), v(0))).term == e);
  CHECK(nz.normalize(inv(inv(v(0)))).term == v(0));
  // (xy)⁻¹ = y⁻¹x⁻¹
  Term nf = nz.normalize(inv(m(v(0), v(1)))).term;
  CHECK(term_to_string(sig, nf) == "m(inv(x1), inv(x0))");
  CHECK(nz.is_normal(nf));
  CHECK(!nz.is_normal(m(e, v(0))));
  CHECK(nz.normalize(v(0)).steps == 0);
}

TEST_CASE("AC canonicalization flattens, sorts, and strips units") {
  auto t = fixtures::comm_monoid_theory();
  const Signature& sig = t->sig();
  auto m = [&](Term a, Term b) { return Term::make_app(sig, 0, {std::move(a), std::move(b)}); };
  Term e = Term::make_app(sig, 1, {});
  CHECK(canonicalize(sig, m(v(1), v(0))) == canonicalize(sig, m(v(0), v(1))));
  CHECK(canonicalize(sig, m(v(0), e)) == v(0));
  CHECK(canonicalize(sig, m(m(v(0), v(1)), v(2))) == canonicalize(sig, m(v(0), m(v(1), v(2)))));
  CHECK(canonicalize(sig, canonicalize(sig, m(v(2), m(v(0), v(1))))) ==
        canonicalize(sig, m(v(2), m(v(0), v(1)))));
}

TEST_CASE("substitution renormalizes and checks sorts") {
  auto t = fixtures::monoid_theory();
  const Signature& sig = t->sig();
  Term body = Term::make_app(sig, 0, {v(0), v(1)});
  Term e = Term::make_app(sig, 1, {});
  Term out = substitute(sig, body, {v(1), std::make_optional(e)});
  CHECK(term_to_string(sig, out) == "m(x1, e)");
  CHECK_THROWS_AS(substitute(sig, body, {std::nullopt, std::nullopt}), UnboundVariable);
}

TEST_CASE("apply_rule_root matches at the root only") {
  auto t = fixtures::monoid_theory();
  const Signature& sig = t->sig();
  const Rule& left_unit = t->rules().rules[0];  // m(e, x) → x
  Term e = Term::make_app(sig, 1, {});
  Term subject = Term::make_app(sig, 0, {e, v(3)});
  auto hit = apply_rule_root(sig, left_unit, subject);
  REQUIRE(hit.has_value());
  CHECK(*hit == v(3));
  CHECK(!apply_rule_root(sig, left_unit, Term::make_app(sig, 0, {v(3), e})).has_value());
}

TEST_CASE("enumerate_terms is deduplicated and canonical") {
  CHECK(enumerate_terms(fixtures::empty_theory()->sig(), {0, 0}, 3).size() == 2);
  auto pointed = enumerate_terms(fixtures::pointed_theory()->sig(), {0}, 1);
  CHECK(pointed.size() == 2);  // x0 and pt
  // commutative monoid over two variables at depth 2: AC collapses orders
  auto cm = enumerate_terms(fixtures::comm_monoid_theory()->sig(), {0, 0}, 1);
  // x0, x1, e, x0·x0, x0·x1, x1·x1
  CHECK(cm.size() == 6);
}

TEST_CASE("local confluence report") {
  CHECK(local_confluence_report(fixtures::group_theory()->sig(), fixtures::group_theory()->rules())
            .empty());
  CHECK(local_confluence_report(fixtures::monoid_theory()->sig(), fixtures::monoid_theory()->rules())
            .empty());
  Signature sig;
  sig.sorts = {"x"};
  sig.ops = {{"a", {}, 0}, {"b", {}, 0}, {"c", {}, 0}};
  RewriteSystem rs;
  rs.rules = {{{}, {}, Term::make_app(sig, 0, {}), Term::make_app(sig, 1, {})},
              {{}, {}, Term::make_app(sig, 0, {}), Term::make_app(sig, 2, {})}};
  auto pairs = local_confluence_report(sig, rs);
  REQUIRE(!pairs.empty());
  CHECK(!pairs.front().joinable);
  CHECK(pairs.front().nf_left != pairs.front().nf_right);
}

TEST_CASE("rewrite budget is enforced") {
  Signature sig;
  sig.sorts = {"x"};
  sig.ops = {{"f", {0}, 0}};
  auto f = [&](Term a) { return Term::make_app(sig, 0, {std::move(a)}); };
  RewriteSystem rs;
  rs.rules = {{{0}, {"x"}, f(v(0)), f(f(v(0)))}};
  rs.validate(sig);
  Normalizer nz{sig, rs, 50};
  CHECK_THROWS_AS(nz.normalize(f(v(0))), BudgetError);
  CHECK(!nz.try_normalize(f(v(0))).has_value());
}

TEST_CASE("rewrite system validation") {
  Signature sig;
  sig.sorts = {"x"};
  sig.ops = {{"f", {0}, 0}};
  RewriteSystem bad;
  bad.rules = {{{0, 0}, {}, v(0), v(1)}};  // bare-variable lhs, extra rhs var
  CHECK_THROWS(bad.validate(sig));
}
