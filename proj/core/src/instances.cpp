#include "pathord/instances.hpp"

#include <random>

namespace pathord::instances {

namespace {

const Symbol P("p", 1), S("s", 1), F1("f", 1);
const Symbol F2("f", 2), A("a", 0), B("b", 0);

Term v(const std::string& x) { return Term::var(x); }
Term app(const Symbol& f, TermList args = {}) { return Term::app(f, std::move(args)); }

LinearPoly lin(Natural c, std::vector<Natural> coeffs) { return LinearPoly{c, std::move(coeffs)}; }

}  // namespace

Trs predecessor_trs() {
  Trs r;
  r.signature = Signature{P, S, F1};
  Term x = v("x");
  r.rules.push_back({app(P, {app(S, {x})}), x});
  r.rules.push_back({app(F1, {app(S, {x})}), app(F1, {app(P, {app(S, {x})})})});
  return r;
}

Interpretation predecessor_weights() {
  Interpretation a(AlgebraKind::linear);
  a.set(P, lin(0, {1}));
  a.set(F1, lin(0, {1}));
  a.set(S, lin(1, {1}));
  return a;
}

Interpretation predecessor_levels() {
  Interpretation b(AlgebraKind::max_plus);
  b.set(F1, MaxPlus{0, {{true, 1}}});
  b.set(S, MaxPlus{0, {{true, 1}}});
  b.set(P, MaxPlus{0, {{true, -1}}});
  return b;
}

Certificate predecessor_certificate() {
  Certificate c;
  c.tmpl = Template::mgwpo_direct;
  c.a = predecessor_weights();
  c.b = predecessor_levels();
  return c;
}

Trs zantema_trs() {
  Trs r;
  r.signature = Signature{F2, A, B};
  Term x = v("x");
  Term a = app(A), b = app(B);
  auto f = [](Term l, Term rr) { return app(F2, {std::move(l), std::move(rr)}); };
  r.rules.push_back({f(a, f(b, f(a, x))), f(a, f(b, f(b, f(a, x))))});
  r.rules.push_back({f(b, f(b, f(b, x))), f(b, f(b, x))});
  return r;
}

Interpretation zantema_marks() {
  Interpretation m(AlgebraKind::linear);
  m.set(F2, lin(0, {1, 0}));
  m.set(F2.as_tuple(), lin(0, {1, 0}));
  m.set(F2.as_tuple().as_marked(), lin(0, {1, 0}));
  m.set(F2.as_marked(), lin(0, {0, 1}));
  m.set(A, lin(1, {}));
  m.set(A.as_marked(), lin(1, {}));
  m.set(B, lin(0, {}));
  m.set(B.as_marked(), lin(0, {}));
  return m;
}

Status zantema_status() {
  Status pi = Status::total();
  pi.set(F2.as_tuple(), {2});
  pi.set(F2, {});
  return pi;
}

Certificate zantema_certificate() {
  Certificate c;
  c.tmpl = Template::spo;
  c.a = zantema_marks();
  Interpretation zero(AlgebraKind::max_plus);
  for (const auto& [f, fi] : c.a.entries()) {
    zero.set(f, MaxPlus{0, std::vector<MaxPlus::Arg>(f.arity)});
  }
  c.b = zero;
  c.status = zantema_status();
  return c;
}

Trs idempotent_trs() {
  Trs r;
  r.signature = Signature{F1};
  Term x = v("x");
  r.rules.push_back({app(F1, {app(F1, {x})}), app(F1, {x})});
  return r;
}

Interpretation unary_successor() {
  Interpretation a(AlgebraKind::linear);
  a.set(F1, lin(1, {1}));
  return a;
}

Status empty_status_for_f() {
  Status pi = Status::total();
  pi.set(F1, {});
  return pi;
}

Precedence single_precedence() {
  Precedence p;
  p.set(F1, 0);
  return p;
}

Signature chain_signature() { return Signature{F1, A, B}; }

Interpretation chain_weights() {
  Interpretation a(AlgebraKind::linear);
  a.set(F1, lin(1, {1}));
  a.set(A, lin(1, {}));
  a.set(B, lin(1, {}));
  return a;
}

Precedence chain_precedence() {
  Precedence p;
  p.set(F1, 2);
  p.set(A, 1);
  p.set(B, 0);
  return p;
}

Term tower(std::size_t n, const std::string& c) {
  Term t = app(Symbol(c, 0));
  for (std::size_t i = 0; i < n; ++i) t = app(F1, {t});
  return t;
}

Signature ground_signature() { return Signature{A, F1}; }

Interpretation ground_weights() {
  Interpretation a(AlgebraKind::linear);
  a.set(A, lin(1, {}));
  a.set(F1, lin(1, {1}));
  return a;
}

Precedence ground_precedence() {
  Precedence p;
  p.set(F1, 1);
  p.set(A, 0);
  return p;
}

Interpretation kbo_weights() {
  Interpretation a(AlgebraKind::linear);
  a.set(F2, lin(1, {1, 1}));
  a.set(Symbol("g", 1), lin(1, {1}));
  a.set(A, lin(1, {}));
  a.set(B, lin(1, {}));
  return a;
}

Precedence kbo_precedence() {
  Precedence p;
  p.set(F2, 3);
  p.set(Symbol("g", 1), 2);
  p.set(A, 1);
  p.set(B, 0);
  return p;
}

std::pair<Interpretation, Interpretation> random_simple_pair(std::uint32_t seed, const Signature& sig) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Natural> c02(0, 2), c12(1, 2), bit(0, 1);
  std::uniform_int_distribution<std::int64_t> off(-1, 1);
  Interpretation a(AlgebraKind::linear), b(AlgebraKind::max_plus);
  for (const Symbol& f : sig.symbols()) {
    LinearPoly p{c02(rng), {}};
    for (std::size_t i = 0; i < f.arity; ++i) p.coeffs.push_back(c12(rng));
    a.set(f, p);
    MaxPlus m{c02(rng), {}};
    for (std::size_t i = 0; i < f.arity; ++i) m.args.push_back({bit(rng) == 1, off(rng)});
    b.set(f, m);
  }
  return {a, b};
}

}  // namespace pathord::instances
