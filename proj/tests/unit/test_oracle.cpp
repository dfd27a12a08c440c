#include "helpers.hpp"

#include <functional>
#include <set>

#include "pathord/enumerate.hpp"
#include "pathord/oracle.hpp"
#include "pathord/scenarios.hpp"

using namespace th;
namespace in = pathord::instances;

namespace {

std::vector<std::string> strings(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const Term& t : ts) out.push_back(t.to_string());
  return out;
}

// Recursive GWPO with the weak A guard of the subterm case removed.
struct Unguarded {
  OrderPair a, b;
  bool gt(const Term& s, const Term& t) const {
    if (s.is_var()) return false;
    for (const Term& si : s.args()) {
      if (si == t || gt(si, t)) return true;
    }
    if (t.is_var() || !a.weak(s, t)) return false;
    for (const Term& tj : t.args()) {
      if (!gt(s, tj)) return false;
    }
    if (b.strict(s, t)) return true;
    return b.weak(s, t) &&
           lex_strict(s.args(), t.args(), [this](const Term& x, const Term& y) { return gt(x, y); });
  }
};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("term enumeration") {
  CHECK(strings(enum_terms(Signature{Symbol("a", 0)}, {"x"}, 1)) == std::vector<std::string>{"a", "x"});
  Signature fa{Symbol("f", 1), Symbol("a", 0)};
  CHECK(strings(enum_terms(fa, {}, 2)) == std::vector<std::string>{"a", "f(a)"});
  Signature fab{Symbol("f", 1), Symbol("a", 0), Symbol("b", 0)};
  auto six = enum_terms(fab, {}, 3);
  CHECK(six.size() == 6);
  CHECK(strings(six) == std::vector<std::string>{"a", "b", "f(a)", "f(b)", "f(f(a))", "f(f(b))"});
  CHECK(enum_terms(Signature{}, {}, 3).empty());
}

TEST_CASE("enumeration has no duplicates and respects the size bound") {
  auto u = enum_terms(dflt_sig(), {"x", "y"}, 5);
  std::set<std::string> seen;
  for (const Term& t : u) {
    CHECK(t.size() <= 5);
    CHECK(seen.insert(t.to_string()).second);
  }
  auto by = enum_terms_by_size(dflt_sig(), {"x", "y"}, 5);
  std::size_t total = 0;
  for (const auto& layer : by) total += layer.size();
  CHECK(total == u.size());
  CHECK(by[1].size() == 4);   // size 1
  CHECK(by[2].size() == 4);   // g(.) of size 2
  CHECK(by[3].size() == 20);  // g(g(.)) and f(.,.)
  CHECK(u == enum_terms(dflt_sig(), {"x", "y"}, 5));
}

TEST_CASE("mgwpo and the combined mspo agree") {
  OracleReport r = check_thm_2_5(triple_from_algebra(in::predecessor_weights()),
                                 triple_from_algebra(in::predecessor_levels()), pred_sig(), {5});
  CHECK(r.passed);
  CHECK(r.pairs_checked > 0);
  CHECK(r.witness.empty());

  auto [a, b] = in::random_simple_pair(1, dflt_sig());
  CHECK(check_thm_2_5(trivial_triple(), triple_from_algebra(b), dflt_sig(), {4}).passed);
  CHECK(check_thm_2_5(trivial_triple(), triple_from_precedence(in::kbo_precedence()), dflt_sig(), {4}).passed);

  CHECK_THROWS_AS(check_thm_2_5(triple_from_algebra(in::predecessor_levels()),
                                triple_from_algebra(in::predecessor_weights()), pred_sig(), {3}),
                  PreconditionError);
}

TEST_CASE("spo pair inside the gwpo pair") {
  OracleReport total = check_thm_3_6(triple_from_algebra(in::predecessor_weights()),
                                     triple_from_algebra(in::predecessor_levels()), Status::total(),
                                     pred_sig(), {5});
  CHECK(total.passed);
  CHECK(total.inclusion == true);
  CHECK(total.equality == true);

  OracleReport ex38 = check_thm_3_6(triple_from_algebra(in::unary_successor()),
                                    triple_from_precedence(in::single_precedence()),
                                    in::empty_status_for_f(), in::idempotent_trs().signature, {5});
  CHECK(ex38.passed);
  CHECK(ex38.inclusion == true);
  CHECK(ex38.equality == false);
  CHECK(strings(ex38.equality_witness) == std::vector<std::string>{"f(x)", "x"});

  OracleReport empty = check_thm_3_6(trivial_triple(), trivial_triple(), Status::total(), Signature{}, {3});
  CHECK(empty.passed);

  Status pi = Status::total();
  pi.set(Symbol("s", 1), {1});
  CHECK_THROWS_AS(check_thm_3_6(triple_from_algebra(in::predecessor_levels()),
                                triple_from_algebra(in::predecessor_levels()), pi, pred_sig(), {3}),
                  PreconditionError);
}

TEST_CASE("flat and recursive gwpo agree") {
  OracleReport r = check_prop_2_6(triple_from_algebra(in::kbo_weights()),
                                  triple_from_precedence(in::kbo_precedence()), dflt_sig(), {4});
  CHECK(r.passed);
  CHECK_THROWS_AS(check_prop_2_6(triple_from_algebra(in::predecessor_weights()),
                                 triple_from_algebra(in::predecessor_levels()), pred_sig(), {3}),
                  PreconditionError);
  CHECK(check_prop_2_6(triple_from_algebra(in::kbo_weights()), triple_from_precedence(in::kbo_precedence()),
                       Signature{}, {3})
            .passed);
}

TEST_CASE("law suites pass for the reference orders") {
  ReductionTriple a = triple_from_algebra(in::predecessor_weights());
  ReductionTriple b = triple_from_algebra(in::predecessor_levels());
  LawOptions o;
  o.max_size = 4;
  OracleReport r = check_reduction_order_laws(
      [&](const Term& s, const Term& t) { return mgwpo_gt(s, t, a, b); }, pred_sig(), o);
  CHECK(r.passed);
  CHECK(r.detail.empty());

  ReductionTriple m = marked_triple(in::zantema_marks());
  Status pi = in::zantema_status();
  OrderPair pair{[&](const Term& s, const Term& t) { return mspo_pair(s, t, pi, m).weak; },
                 [&](const Term& s, const Term& t) { return mspo_pair(s, t, pi, m).strict; }};
  Relation inductive = [&](const Term& s, const Term& t) { return spo_pair(s, t, pi, m.pair).weak; };
  OracleReport pr = check_reduction_pair_laws(pair, z08_sig(), o, "", inductive);
  CHECK(pr.detail == "");
  CHECK(pr.passed);
  // The preorder cuts the weak side below the strict one: a >S f(x,b) but not a >= f(x,b).
  OracleReport cut = check_reduction_pair_laws(pair, z08_sig(), o);
  CHECK(cut.detail == "strict is not contained in weak");
  CHECK(strings(cut.witness) == std::vector<std::string>{"a", "f(x,b)"});
}

TEST_CASE("a broken order is caught by context closure") {
  Interpretation alg(AlgebraKind::linear);
  alg.set(Symbol("f", 2), LinearPoly{1, {1, 1}});
  alg.set(Symbol("g", 1), LinearPoly{0, {0}});
  alg.set(Symbol("a", 0), LinearPoly{1, {}});
  alg.set(Symbol("b", 0), LinearPoly{1, {}});
  ReductionTriple a = triple_from_algebra(alg);
  OrderPair weak_only{a.pair.weak, [](const Term&, const Term&) { return false; }};
  Unguarded u{weak_only, triple_from_precedence(in::kbo_precedence()).pair};
  LawOptions o;
  o.max_size = 3;
  OracleReport r = check_reduction_order_laws([&](const Term& s, const Term& t) { return u.gt(s, t); },
                                              dflt_sig(), o, "unguarded subterm case");
  CHECK_FALSE(r.passed);
  CHECK(r.detail == "strict is not closed under contexts");
  REQUIRE(r.witness.size() == 4);
  CHECK(u.gt(r.witness[0], r.witness[1]));
  CHECK_FALSE(u.gt(r.witness[2], r.witness[3]));
  CHECK(r.parameters == "unguarded subterm case");
}

TEST_CASE("a relation that is not transitive is caught") {
  Signature sig{Symbol("h", 1), Symbol("a", 0)};
  // one step of h only
  Relation step = [](const Term& s, const Term& t) { return !s.is_var() && s.arity() == 1 && s.arg(0) == t; };
  LawOptions o;
  o.max_size = 3;
  OracleReport r = check_reduction_order_laws(step, sig, o);
  CHECK_FALSE(r.passed);
  CHECK(r.detail == "strict is not transitive");
  CHECK(r.witness.size() == 3);
}

TEST_CASE("bundled scenarios") {
  CHECK(scenarios::checks().size() == 5);
  CHECK_THROWS_AS(scenarios::run("nope"), std::invalid_argument);
  auto tot = scenarios::run("totality");
  REQUIRE(tot.size() == 2);
  CHECK(tot[0].report.passed);
  CHECK_FALSE(tot[1].report.passed);
  CHECK(strings(tot[1].report.witness) == std::vector<std::string>{"a", "f(a)"});
  for (const auto& s : tot) CHECK(s.ok());
  for (const auto& s : scenarios::run("thm3.6", 4)) {
    CAPTURE(s.name);
    CHECK(s.ok());
  }
}

}
