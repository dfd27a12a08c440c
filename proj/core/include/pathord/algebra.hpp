#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pathord/status.hpp"
#include "pathord/term.hpp"

namespace pathord {

using Natural = std::int64_t;

// f(x1..xn) = constant + sum coeffs[i] * x(i+1), all coefficients >= 0.
struct LinearPoly {
  Natural constant = 0;
  std::vector<Natural> coeffs;
  friend bool operator==(const LinearPoly&, const LinearPoly&) = default;
};

// f(x1..xn) = max{ base, b1*x1 + c1, ..., bn*xn + cn } with b in {0,1},
// base >= 0 and offsets possibly negative.
struct MaxPlus {
  struct Arg {
    bool active = false;  // b_i
    std::int64_t offset = 0;  // c_i
    friend bool operator==(const Arg&, const Arg&) = default;
  };
  Natural base = 0;
  std::vector<Arg> args;
  friend bool operator==(const MaxPlus&, const MaxPlus&) = default;
};

using SymbolInterpretation = std::variant<LinearPoly, MaxPlus>;

enum class AlgebraKind { linear, max_plus };

class MissingVariable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A weakly monotone well-founded algebra over the naturals. Every entry is
// validated on insertion, so weak monotonicity holds by construction.
class Interpretation {
 public:
  explicit Interpretation(AlgebraKind kind = AlgebraKind::linear) : kind_(kind) {}

  void set(const Symbol& f, LinearPoly p);
  void set(const Symbol& f, MaxPlus m);
  void erase(const Symbol& f) { entries_.erase(f); }
  bool contains(const Symbol& f) const { return entries_.contains(f); }
  const SymbolInterpretation& at(const Symbol& f) const;

  AlgebraKind kind() const { return kind_; }
  const std::map<Symbol, SymbolInterpretation>& entries() const { return entries_; }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  AlgebraKind kind_;
  std::map<Symbol, SymbolInterpretation> entries_;
};

using Assignment = std::map<std::string, Natural>;

Natural evaluate(const Interpretation& alg, const Term& t, const Assignment& alpha);

// One affine piece: constant + sum coeff * var, coefficients > 0, sorted by
// variable name.
struct AffineBranch {
  std::int64_t constant = 0;
  std::vector<std::pair<std::string, Natural>> coeffs;
  friend bool operator==(const AffineBranch&, const AffineBranch&) = default;
  friend auto operator<=>(const AffineBranch&, const AffineBranch&) = default;
};

// Symbolic value of a term with variables: max(0, max over branches). The
// clamp at 0 is implicit, so normalization drops branches that never exceed
// it (no coefficients and constant <= 0) and branches dominated by another.
// An empty branch set denotes the constant 0.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  static SymbolicValue constant(std::int64_t c);
  static SymbolicValue variable(const std::string& x);
  static SymbolicValue from_branches(std::vector<AffineBranch> branches);

  SymbolicValue scaled(Natural k) const;
  SymbolicValue shifted(std::int64_t c) const;
  static SymbolicValue sum(const SymbolicValue& a, const SymbolicValue& b);
  static SymbolicValue max(const SymbolicValue& a, const SymbolicValue& b);

  Natural evaluate(const Assignment& alpha) const;
  const std::vector<AffineBranch>& branches() const { return branches_; }
  SymbolicValue normalized() const { return from_branches(branches_); }
  std::string to_string() const;

  friend bool operator==(const SymbolicValue&, const SymbolicValue&) = default;

 private:
  std::vector<AffineBranch> branches_;
};

SymbolicValue abstract(const Interpretation& alg, const Term& t);
// abstract(alg, mark_root(t)) without building the marked term.
SymbolicValue abstract_marked(const Interpretation& alg, const Term& t);

// Sound, incomplete: true implies u >= v (resp. u > v) under every
// assignment of naturals. Decided by branch dominance.
bool cmp_weak(const SymbolicValue& u, const SymbolicValue& v);
bool cmp_strict(const SymbolicValue& u, const SymbolicValue& v);

bool check_weak_monotone(const Interpretation& alg);
// f(x1..xn) >= xi for every interpreted f and i in pi(f).
bool check_simple(const Interpretation& alg, const Status& pi);
// f(x1..xn) > xi for every interpreted f and every i.
bool check_strictly_simple(const Interpretation& alg);

// Per-symbol forms of the two checks above; throw UnassignedSymbol when f
// has no entry.
bool simple_at(const Interpretation& alg, const Symbol& f, const std::vector<std::size_t>& positions);
bool strictly_simple_at(const Interpretation& alg, const Symbol& f);

// f(x1..xn) with variables x1..xn (x for unary symbols).
Term generic_term(const Symbol& f);
std::string generic_var(std::size_t arity, std::size_t i);

}  // namespace pathord
