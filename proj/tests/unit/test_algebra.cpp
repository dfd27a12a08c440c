#include "helpers.hpp"

#include <random>

#include "pathord/algebra.hpp"
#include "pathord/enumerate.hpp"
#include "pathord/status.hpp"

using namespace th;
namespace in = pathord::instances;

namespace {

std::vector<Assignment> small_assignments(const std::vector<std::string>& vars) {
  std::vector<Assignment> out{{}};
  for (const std::string& v : vars) {
    std::vector<Assignment> next;
    for (const Assignment& a : out) {
      for (Natural k = 0; k <= 3; ++k) {
        Assignment b = a;
        b[v] = k;
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Assignment> small_assignments(const Term& s, const Term& t) {
  auto vs = variables(s);
  for (const std::string& v : variables(t)) {
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  }
  return small_assignments(vs);
}

// Random algebra over the default signature, linear or max/plus.
Interpretation random_algebra(std::mt19937& rng, AlgebraKind kind, const Signature& sig) {
  std::uniform_int_distribution<Natural> c(0, 2), bit(0, 1);
  std::uniform_int_distribution<std::int64_t> off(-2, 1);
  Interpretation alg(kind);
  for (const Symbol& f : sig.symbols()) {
    if (kind == AlgebraKind::linear) {
      LinearPoly p{c(rng), {}};
      for (std::size_t i = 0; i < f.arity; ++i) p.coeffs.push_back(c(rng));
      alg.set(f, p);
    } else {
      MaxPlus m{c(rng), {}};
      for (std::size_t i = 0; i < f.arity; ++i) m.args.push_back({bit(rng) == 1, off(rng)});
      alg.set(f, m);
    }
  }
  return alg;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("evaluate") {
  Signature p = pred_sig(), z = z08_sig();
  CHECK(evaluate(in::predecessor_levels(), T("p(s(x))", p), {{"x", 0}}) == 0);
  CHECK(evaluate(in::predecessor_levels(), T("p(s(x))", p), {{"x", 5}}) == 5);
  for (Natural k = 0; k < 4; ++k) {
    CHECK(evaluate(in::zantema_marks(), T("f!(b,f(a,x))", z), {{"x", k}}) == 1);
  }
  CHECK(evaluate(in::zantema_marks(), T("a", z), {}) == 1);
  CHECK_THROWS_AS(evaluate(in::zantema_marks(), T("f(a,x)", z), {}), MissingVariable);
  CHECK_THROWS(evaluate(in::predecessor_weights(), T("f(a,x)", z), {{"x", 1}}));
}

TEST_CASE("abstract") {
  Signature p = pred_sig();
  Term x = Term::var("x");
  CHECK(abstract(in::predecessor_weights(), x).branches() ==
        std::vector<AffineBranch>{{0, {{"x", 1}}}});
  CHECK(abstract(in::predecessor_weights(), T("s(x)", p)).branches() ==
        std::vector<AffineBranch>{{1, {{"x", 1}}}});
  // max{0, x} = x: the zero branch is implicit.
  SymbolicValue ps = abstract(in::predecessor_levels(), T("p(s(x))", p));
  CHECK(ps.branches() == std::vector<AffineBranch>{{0, {{"x", 1}}}});
  for (Natural k = 0; k <= 2; ++k) {
    CHECK(ps.evaluate({{"x", k}}) == evaluate(in::predecessor_levels(), T("p(s(x))", p), {{"x", k}}));
  }
  CHECK(abstract(in::predecessor_levels(), T("p(x)", p)).branches() ==
        std::vector<AffineBranch>{{-1, {{"x", 1}}}});
  CHECK_THROWS(abstract(in::predecessor_levels(), T("a", z08_sig())));
}

TEST_CASE("abstraction agrees with evaluation") {
  Signature sig = dflt_sig();
  std::mt19937 rng(7);
  auto u = enum_terms(sig, {"x", "y"}, 6);
  auto alphas = small_assignments({"x", "y"});
  for (int round = 0; round < 6; ++round) {
    Interpretation alg = random_algebra(rng, round % 2 ? AlgebraKind::max_plus : AlgebraKind::linear, sig);
    for (const Term& t : u) {
      SymbolicValue v = abstract(alg, t);
      CHECK(v.normalized() == v);
      for (const Assignment& a : alphas) {
        if (v.evaluate(a) != evaluate(alg, t, a)) {
          FAIL_CHECK(t.to_string() << " disagrees");
          break;
        }
      }
    }
  }
}

TEST_CASE("marked abstraction matches abstracting the marked term") {
  Signature z = z08_sig();
  for (const Term& t : enum_terms(z, {"x"}, 5)) {
    if (t.is_var()) continue;
    CHECK(abstract_marked(in::zantema_marks(), t) == abstract(in::zantema_marks(), mark_root(t)));
  }
}

TEST_CASE("cmp_weak") {
  Signature p = pred_sig();
  const auto& A = in::predecessor_weights();
  CHECK(cmp_weak(abstract(A, T("p(s(x))", p)), abstract(A, Term::var("x"))));
  SymbolicValue u = abstract(in::predecessor_levels(), T("f(p(s(x)))", p));
  CHECK(cmp_weak(u, u));
  CHECK_FALSE(cmp_weak(abstract(A, Term::var("x")), abstract(A, T("s(x)", p))));
  // A branch clamped to zero everywhere is dominated by anything.
  CHECK(cmp_weak(SymbolicValue::constant(0), SymbolicValue::from_branches({{-3, {}}})));
}

TEST_CASE("cmp_strict") {
  Signature p = pred_sig(), z = z08_sig();
  const auto& A = in::predecessor_weights();
  CHECK(cmp_strict(abstract(A, T("s(x)", p)), abstract(A, Term::var("x"))));
  SymbolicValue u = abstract(A, T("f(s(x))", p));
  CHECK_FALSE(cmp_strict(u, u));
  const auto& M = in::zantema_marks();
  CHECK(cmp_strict(abstract(M, T("f!(b,f(a,x))", z)), abstract(M, T("f!(b,f(b,f(a,x)))", z))));
}

TEST_CASE("comparisons are sound on small assignments") {
  Signature sig = dflt_sig();
  std::mt19937 rng(11);
  auto u = enum_terms(sig, {"x", "y"}, 4);
  for (int round = 0; round < 4; ++round) {
    Interpretation alg = random_algebra(rng, round % 2 ? AlgebraKind::max_plus : AlgebraKind::linear, sig);
    std::vector<SymbolicValue> vals;
    for (const Term& t : u) vals.push_back(abstract(alg, t));
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        bool w = cmp_weak(vals[i], vals[j]), s = cmp_strict(vals[i], vals[j]);
        if (!w && !s) continue;
        CHECK((w || !s));
        for (const Assignment& a : small_assignments(u[i], u[j])) {
          Natural l = evaluate(alg, u[i], a), r = evaluate(alg, u[j], a);
          if ((w && l < r) || (s && l <= r)) {
            FAIL_CHECK(u[i].to_string() << " vs " << u[j].to_string());
            break;
          }
        }
      }
    }
  }
}

TEST_CASE("weak monotonicity holds by construction") {
  CHECK(check_weak_monotone(in::predecessor_weights()));
  CHECK(check_weak_monotone(in::predecessor_levels()));
  Interpretation alg(AlgebraKind::linear);
  CHECK_THROWS(alg.set(Symbol("f", 1), LinearPoly{0, {-1}}));
  CHECK_THROWS(alg.set(Symbol("f", 1), LinearPoly{0, {1, 1}}));
  Interpretation mp(AlgebraKind::max_plus);
  CHECK_THROWS(mp.set(Symbol("a", 0), MaxPlus{-1, {}}));
  CHECK_THROWS(mp.set(Symbol("f", 1), LinearPoly{0, {1}}));
}

TEST_CASE("check_simple") {
  CHECK(check_simple(in::predecessor_weights(), Status::total()));
  CHECK_FALSE(check_simple(in::predecessor_levels(), Status::total()));
  // F_A(x,y) = x ignores the only status position of F.
  CHECK_FALSE(check_simple(in::zantema_marks(), in::zantema_status()));
  // Under the total status F_A(x,y) = x is not weakly above y.
  CHECK_FALSE(check_simple(in::zantema_marks(), Status::total()));
  Status only_first = Status::total();
  only_first.set(Symbol("f", 2).as_marked(), {2});
  only_first.set(Symbol("f", 2), {1});
  only_first.set(Symbol("f", 2).as_tuple(), {1});
  only_first.set(Symbol("f", 2).as_tuple().as_marked(), {1});
  CHECK(check_simple(in::zantema_marks(), only_first));
}

TEST_CASE("strict simplicity") {
  CHECK(check_strictly_simple(in::kbo_weights()));
  CHECK_FALSE(check_strictly_simple(in::predecessor_weights()));
  CHECK_THROWS_AS(strictly_simple_at(in::kbo_weights(), Symbol("h", 1)), UnassignedSymbol);
}

}
