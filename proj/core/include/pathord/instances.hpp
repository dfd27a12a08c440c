#pragma once

#include <cstdint>
#include <utility>

#include "pathord/search.hpp"
#include "pathord/status.hpp"
#include "pathord/term.hpp"
#include "pathord/triples.hpp"

namespace pathord::instances {

// p(s(x)) -> x, f(s(x)) -> f(p(s(x))) over unary p, s, f.
Trs predecessor_trs();
// p = f = x, s = x + 1 (linear).
Interpretation predecessor_weights();
// f = s = x + 1, p = max{0, x - 1} (max/plus).
Interpretation predecessor_levels();
// mgwpo-direct certificate from the two algebras above.
Certificate predecessor_certificate();

// f(a,f(b,f(a,x))) -> f(a,f(b,f(b,f(a,x)))), f(b,f(b,f(b,x))) -> f(b,f(b,x)).
Trs zantema_trs();
// Marked algebra: f = f# = f#! = x1, f! = x2, a = a! = 1, b = b! = 0.
Interpretation zantema_marks();
// pi(f#) = [2], pi(f) = [].
Status zantema_status();
// spo certificate: the marked algebra above with an all-zero B.
Certificate zantema_certificate();

// f(f(x)) -> f(x) over unary f.
Trs idempotent_trs();
// f = x + 1 with pi(f) = [] and a one-symbol precedence.
Interpretation unary_successor();
Status empty_status_for_f();
Precedence single_precedence();

// Weights f = x + 1, a = b = 1 and precedence a > b over {f/1, a/0, b/0}.
Signature chain_signature();
Interpretation chain_weights();
Precedence chain_precedence();
// f^n(c)
Term tower(std::size_t n, const std::string& c);

// {a/0, f/1}: a = 1, f = x + 1, precedence f > a.
Signature ground_signature();
Interpretation ground_weights();
Precedence ground_precedence();

// KBO-like weights on the default oracle signature {f/2, g/1, a/0, b/0}:
// every coefficient 1, every constant 1; precedence f > g > a > b.
Interpretation kbo_weights();
Precedence kbo_precedence();

// A simple linear A (coefficients 1 or 2, constants 0..2) and a max/plus B
// (base 0..2, b in {0,1}, c in {-1,0,1}) drawn from the seed for `sig`.
std::pair<Interpretation, Interpretation> random_simple_pair(std::uint32_t seed, const Signature& sig);

}  // namespace pathord::instances
