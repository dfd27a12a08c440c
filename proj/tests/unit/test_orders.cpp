#include "helpers.hpp"

#include "pathord/dp.hpp"
#include "pathord/enumerate.hpp"
#include "pathord/orders.hpp"

using namespace th;
namespace in = pathord::instances;

namespace {

struct Ex23 {
  ReductionTriple a = triple_from_algebra(in::predecessor_weights());
  ReductionTriple b = triple_from_algebra(in::predecessor_levels());
  Signature sig = pred_sig();
};

}  // namespace

TEST_SUITE("orders") {

TEST_CASE("lex_strict") {
  Ex23 e;
  Relation gt = [&](const Term& s, const Term& t) { return gwpo_gt(s, t, e.a.pair, e.b.pair); };
  std::vector<Term> xs{T("s(x)", e.sig)}, ys{Term::var("x")};
  CHECK(lex_strict(xs, ys, gt));
  CHECK_FALSE(lex_strict({}, {}, gt));
  Signature d = dflt_sig();
  std::vector<Term> ab{T("a", d), T("b", d)}, a{T("a", d)};
  auto never = [](const Term&, const Term&) { return false; };
  CHECK(lex_strict(ab, a, never));
  CHECK_FALSE(lex_strict(a, ab, never));
  CHECK_FALSE(lex_strict(ab, ab, never));
}

TEST_CASE("pair_lex") {
  Signature z = z08_sig();
  ReductionTriple m = marked_triple(in::zantema_marks());
  Status pi = in::zantema_status();
  Relation ge = [&](const Term& s, const Term& t) { return spo_pair(s, t, pi, m.pair).weak; };
  Relation gt = [&](const Term& s, const Term& t) { return spo_pair(s, t, pi, m.pair).strict; };
  std::vector<Term> xs{T("f(b,f(a,x))", z)}, ys{T("f(b,f(b,f(a,x)))", z)};
  CHECK(pair_lex(xs, ys, ge, gt) == PairVerdict{true, true});
  CHECK(pair_lex({}, {}, ge, gt) == PairVerdict{true, false});
  std::vector<Term> a{T("a", z)}, ab{T("a", z), T("b", z)};
  CHECK(pair_lex(a, ab, ge, gt) == PairVerdict{false, false});
  CHECK(pair_lex(ab, a, ge, gt) == PairVerdict{true, true});
}

TEST_CASE("gwpo on the predecessor example") {
  Ex23 e;
  GwpoComparator g(e.a.pair, e.b.pair);
  CHECK(g.greater(T("p(s(x))", e.sig), Term::var("x")));
  CHECK(g.case_chain(T("p(s(x))", e.sig), Term::var("x")) == "1");
  Term l = T("f(s(x))", e.sig), r = T("f(p(s(x)))", e.sig);
  CHECK(g.greater(l, r));
  CHECK(g.case_chain(l, r) == "2b(i)");
  CHECK(g.greater(l, T("s(x)", e.sig)));
  CHECK(g.case_chain(l, T("s(x)", e.sig)) == "2a");
  CHECK(g.greater(l, T("p(s(x))", e.sig)));
  CHECK(g.case_chain(l, T("p(s(x))", e.sig)) == "2b(i)");
}

TEST_CASE("irreflexivity on a small universe") {
  Ex23 e;
  Signature sig{Symbol("p", 1), Symbol("s", 1), Symbol("a", 0), Symbol("b", 0)};
  Interpretation wa = in::predecessor_weights(), wb = in::predecessor_levels();
  wa.set(Symbol("a", 0), LinearPoly{1, {}});
  wa.set(Symbol("b", 0), LinearPoly{0, {}});
  wb.set(Symbol("a", 0), MaxPlus{0, {}});
  wb.set(Symbol("b", 0), MaxPlus{2, {}});
  ReductionTriple a = triple_from_algebra(wa), b = triple_from_algebra(wb);
  OrderPair ab = lex_combine(a.pair, b.pair);
  for (const Term& t : enum_terms(sig, {"x", "y"}, 5)) {
    CHECK_FALSE(gwpo_gt(t, t, a.pair, b.pair));
    CHECK_FALSE(spo_gt(t, t, ab));
  }
}

TEST_CASE("mgwpo orients the predecessor system") {
  Ex23 e;
  Relation gt = [&](const Term& s, const Term& t) { return mgwpo_gt(s, t, e.a, e.b); };
  CHECK(check_direct(in::predecessor_trs(), gt).success);
  CHECK_FALSE(gt(Term::var("x"), Term::var("y")));
  CHECK_FALSE(gt(T("f(s(x))", e.sig), T("f(s(x))", e.sig)));
  for (const Term& s : enum_terms(e.sig, {"x"}, 4)) {
    for (const Term& t : enum_terms(e.sig, {"x"}, 4)) {
      if (gt(s, t)) CHECK((gwpo_gt(s, t, e.a.pair, e.b.pair) && e.a.preorder(s, t) && e.b.preorder(s, t)));
    }
  }
}

TEST_CASE("spo") {
  Ex23 e;
  OrderPair ab = lex_combine(e.a.pair, e.b.pair);
  Term l = T("f(s(x))", e.sig), r = T("f(p(s(x)))", e.sig);
  CHECK(spo_gt(l, r, ab));
  CHECK(spo_gt(l, r, ab) == gwpo_gt(l, r, e.a.pair, e.b.pair));
  SpoComparator s(ab);
  CHECK(s.greater(T("s(x)", e.sig), Term::var("x")));
  CHECK(s.case_chain(T("s(x)", e.sig), Term::var("x")) == "a");
  for (const Term& t : enum_terms(e.sig, {"x"}, 3)) CHECK_FALSE(spo_gt(Term::var("x"), t, ab));
  ReductionTriple combined = combine_triples(e.a, e.b);
  CHECK(mspo_gt(l, r, combined));
}

TEST_CASE("kbo-like fast comparator") {
  Signature d = dflt_sig();
  ReductionTriple a = triple_from_algebra(in::kbo_weights());
  ReductionTriple b = triple_from_precedence(in::kbo_precedence());
  FastGwpoComparator fc(a.pair, b.pair);
  Term ggx = T("g(g(x))", d), gx = T("g(x)", d);
  CHECK(fc.greater(ggx, gx));
  CHECK(fc.case_chain(ggx, gx) == "1");
  CHECK(gwpo_gt(ggx, gx, a.pair, b.pair));
  CHECK_FALSE(fc.greater(gx, gx));
  CHECK_FALSE(fc.greater(Term::var("x"), Term::var("y")));
  CHECK(fc.greater(T("f(a,b)", d), T("f(b,a)", d)));
  CHECK(fc.case_chain(T("f(a,b)", d), T("f(b,a)", d)) == "2(ii) > 2(i)");
  CHECK(fc.greater(T("g(a)", d), T("g(b)", d)));
  CHECK(fc.greater(T("f(x,a)", d), T("g(x)", d)));
}

TEST_CASE("fast comparator cost on f^n(a) versus f^n(b)") {
  ReductionTriple a = triple_from_algebra(in::chain_weights());
  ReductionTriple b = triple_from_precedence(in::chain_precedence());
  for (std::size_t n : {0u, 1u, 4u, 16u, 64u}) {
    ComparisonStats st;
    CHECK(gwpo_fast_gt(in::tower(n, "a"), in::tower(n, "b"), a.pair, b.pair, &st));
    CHECK(st.total() == 4 * (n + 1));
    CHECK(st.a_weak == n + 1);
  }
}

TEST_CASE("sessions cache results without changing them") {
  Ex23 e;
  GwpoComparator shared(e.a.pair, e.b.pair);
  auto u = enum_terms(e.sig, {"x"}, 4);
  for (const Term& s : u) {
    for (const Term& t : u) CHECK(shared.greater(s, t) == gwpo_gt(s, t, e.a.pair, e.b.pair));
  }
  CHECK(shared.memo_size() > 0);
  ComparisonStats before = shared.stats();
  shared.greater(u.back(), u.front());
  CHECK(shared.stats().total() == before.total());
}

TEST_CASE("gwpo pair on the idempotent example") {
  Signature s = in::idempotent_trs().signature;
  ReductionTriple a = triple_from_algebra(in::unary_successor());
  ReductionTriple b = triple_from_precedence(in::single_precedence());
  Status pi = in::empty_status_for_f();
  GwpoPairComparator g(pi, a.pair, b.pair);
  CHECK(g.compare(T("f(x)", s), Term::var("x")) == PairVerdict{true, true});
  CHECK(g.case_chain(T("f(x)", s), Term::var("x")) == "1");
  CHECK(g.compare(Term::var("x"), Term::var("x")) == PairVerdict{true, false});
  CHECK(g.case_chain(Term::var("x"), Term::var("x"), false) == "2c");
  CHECK(g.compare(Term::var("x"), Term::var("y")) == PairVerdict{false, false});
}

TEST_CASE("spo pair on z08") {
  Signature z = z08_sig();
  ReductionTriple m = marked_triple(in::zantema_marks());
  Status pi = in::zantema_status();
  SpoPairComparator c(pi, m.pair);
  Term l = T("f#(a,f(b,f(a,x)))", z), r = T("f#(a,f(b,f(b,f(a,x))))", z);
  CHECK(c.compare(l, r).strict);
  CHECK(c.case_chain(l, r) == "2b > 2a");
  Term u = T("f(b,f(a,x))", z), v = T("f(b,f(b,f(a,x)))", z);
  CHECK(c.compare(u, v).strict);
  CHECK(c.case_chain(u, v) == "2a");
}

TEST_CASE("spo pair cannot use a removed argument") {
  Signature s = in::idempotent_trs().signature;
  Status pi = in::empty_status_for_f();
  std::vector<OrderPair> pairs{triple_from_algebra(in::unary_successor()).pair, trivial_triple().pair,
                               triple_from_precedence(in::single_precedence()).pair};
  for (const OrderPair& p : pairs) {
    CHECK(spo_pair(T("f(x)", s), Term::var("x"), pi, p) == PairVerdict{false, false});
  }
}

TEST_CASE("marked spo pair proves z08") {
  ReductionTriple m = marked_triple(in::zantema_marks());
  Status pi = in::zantema_status();
  Relation ge = [&](const Term& s, const Term& t) { return mspo_pair(s, t, pi, m).weak; };
  Relation gt = [&](const Term& s, const Term& t) { return mspo_pair(s, t, pi, m).strict; };
  ObligationVerdict v = check_dp(in::zantema_trs(), ge, gt);
  CHECK(v.success);
  Signature z = z08_sig();
  CHECK(mspo_pair(T("f(a,x)", z), T("f(a,x)", z), pi, m).weak);
}

TEST_CASE("gwpo pair with total status agrees with mgwpo on the predecessor rules") {
  Ex23 e;
  for (const Rule& r : in::predecessor_trs().rules) {
    PairVerdict v = mgwpo_pair(r.lhs, r.rhs, Status::total(), e.a, e.b);
    CHECK(v.strict);
    CHECK(v.weak);
    CHECK(mgwpo_gt(r.lhs, r.rhs, e.a, e.b));
  }
}

TEST_CASE("pair coherence: strict implies weak") {
  Ex23 e;
  auto u = enum_terms(e.sig, {"x", "y"}, 4);
  OrderPair ab = lex_combine(e.a.pair, e.b.pair);
  Status pi = Status::total();
  pi.set(Symbol("f", 1), {});
  for (const Status& st : {Status::total(), pi}) {
    GwpoPairComparator g(st, e.a.pair, e.b.pair);
    SpoPairComparator s(st, ab);
    for (const Term& x : u) {
      for (const Term& y : u) {
        PairVerdict gv = g.compare(x, y), sv = s.compare(x, y);
        if (gv.strict) CHECK(gv.weak);
        if (sv.strict) CHECK(sv.weak);
      }
    }
  }
}

TEST_CASE("ground totality") {
  ReductionTriple a = triple_from_algebra(in::ground_weights());
  ReductionTriple b = triple_from_precedence(in::ground_precedence());
  Relation gt = [&](const Term& s, const Term& t) { return gwpo_fast_gt(s, t, a.pair, b.pair); };
  TotalityReport ok = ground_totality(gt, in::ground_signature(), 6);
  CHECK(ok.total);
  CHECK(ok.pairs_checked == 15);

  Signature ab{Symbol("a", 0), Symbol("b", 0)};
  TotalityReport bad = ground_totality([](const Term&, const Term&) { return false; }, ab, 3);
  CHECK_FALSE(bad.total);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->first == T("a", ab));
  CHECK(bad.counterexample->second == T("b", ab));

  CHECK_THROWS_AS(ground_totality(gt, Signature{Symbol("f", 1)}, 4), std::invalid_argument);
}

}
