#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathord/enumerate.hpp"
#include "pathord/orders.hpp"
#include "pathord/status.hpp"
#include "pathord/triples.hpp"

namespace pathord {

// The hypothesis of a checked theorem does not hold for the given inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Outcome of an exhaustive check. The witness lists the terms of the least
// failing instance in enumeration order; `parameters` serializes every
// input needed to replay it.
struct OracleReport {
  std::string check;
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::vector<Term> witness;
  std::string detail;
  std::string parameters;

  // Inclusion/equality split for the pair comparison.
  std::optional<bool> inclusion;
  std::optional<bool> equality;
  std::vector<Term> equality_witness;
};

struct UniverseOptions {
  std::size_t max_size = 5;
  std::vector<std::string> vars{"x", "y"};
};

// {f/2, g/1, a/0, b/0}.
Signature default_oracle_signature();

// Parameter text of a triple: label plus algebra or precedence entries.
std::string describe(const ReductionTriple& t);

// MGWPO(TA, TB) and MSPO over (>=A ∩ >=B, lex_combine(A, B)) agree on every
// ordered pair. Needs the weak subterm property of TA.
OracleReport check_thm_2_5(const ReductionTriple& ta, const ReductionTriple& tb,
                           const Signature& sig, const UniverseOptions& u = {});

// The SPO pair over the combined triple is included in the GWPO pair, and
// equal when pi is total. Needs TA simple with respect to pi. Passes when the
// inclusion holds and equality holds or pi is not total; both results and
// the first equality mismatch are always reported.
OracleReport check_thm_3_6(const ReductionTriple& ta, const ReductionTriple& tb, const Status& pi,
                           const Signature& sig, const UniverseOptions& u = {});

// Flat and recursive GWPO agree. Needs the subterm property of both parts
// of TA (strict simplicity for algebras).
OracleReport check_prop_2_6(const ReductionTriple& ta, const ReductionTriple& tb,
                            const Signature& sig, const UniverseOptions& u = {});

struct LawOptions {
  std::size_t max_size = 4;
  std::vector<std::string> vars{"x", "y"};
  std::size_t substitutions = 200;
  std::uint32_t seed = 1;
};

// Irreflexivity, transitivity, acyclicity, closure under the sampled
// substitutions and under every one-hole context of depth one whose other
// arguments come from the universe.
OracleReport check_reduction_order_laws(const Relation& gt, const Signature& sig,
                                        const LawOptions& o = {}, const std::string& parameters = {});

// Weak: reflexive, transitive, closed under substitutions and contexts.
// Strict: irreflexive, transitive, acyclic, closed under substitutions.
// Plus compatibility in both directions and strict ⊆ weak. For pairs whose
// weak side is cut down by the triples' preorders (MGWPO, MSPO) only the
// inductive weak relation contains the strict one; pass it as
// `strict_within` to test that inclusion instead.
OracleReport check_reduction_pair_laws(const OrderPair& pair, const Signature& sig,
                                       const LawOptions& o = {}, const std::string& parameters = {},
                                       const Relation& strict_within = {});

}  // namespace pathord
