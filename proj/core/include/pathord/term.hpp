#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathord {

// A function symbol. Two independent marks exist: `tuple` is the
// dependency-pair tuple symbol F of f, `marked` is the fresh symbol f^! used
// by marked reduction triples. Both keep the arity of the origin. They are
// rendered with the reserved suffixes '#' and '!', which the input format
// rejects in identifiers.
struct Symbol {
  std::string name;
  std::size_t arity = 0;
  bool tuple = false;
  bool marked = false;

  Symbol() = default;
  Symbol(std::string n, std::size_t a, bool is_tuple = false, bool is_marked = false)
      : name(std::move(n)), arity(a), tuple(is_tuple), marked(is_marked) {}

  std::string display() const;
  Symbol as_tuple() const { return Symbol(name, arity, true, marked); }
  Symbol as_marked() const { return Symbol(name, arity, tuple, true); }
  Symbol unmarked() const { return Symbol(name, arity, tuple, false); }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Canonical symbol order used by search: (arity, name, tuple, marked).
bool canonical_less(const Symbol& a, const Symbol& b);

class Term;
using TermList = std::vector<Term>;

// Immutable first-order term with shared structure. Copies are cheap.
class Term {
 public:
  static Term var(std::string name);
  static Term app(Symbol f, TermList args = {});
  static Term constant(std::string name) { return app(Symbol(std::move(name), 0)); }

  bool is_var() const { return node_->is_var; }
  const std::string& var_name() const;
  const Symbol& symbol() const;
  std::span<const Term> args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  std::size_t arity() const { return node_->args.size(); }

  // Number of symbol and variable occurrences.
  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }
  bool is_ground() const { return node_->ground; }

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  // Total structural order: size, then variables before applications, then
  // names and arguments. Used for deterministic containers only.
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = false;
    std::string var;
    Symbol sym;
    TermList args;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t depth = 1;
    bool ground = true;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

struct TermPairHash {
  std::size_t operator()(const std::pair<Term, Term>& p) const noexcept {
    return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ (p.second.hash() + 0x7f4a7c15);
  }
};

using Substitution = std::map<std::string, Term>;

// Child indices, 1-based; the empty position addresses the root.
using Position = std::vector<std::size_t>;
std::string position_to_string(const Position& p);

struct Rule {
  Term lhs;
  Term rhs;
  std::string to_string() const;
  friend bool operator==(const Rule&, const Rule&) = default;
};

// Declared function symbols, keyed by the full symbol (name and marks).
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<Symbol> symbols);

  void add(const Symbol& f);
  bool contains(const Symbol& f) const;
  std::optional<Symbol> find(const std::string& name) const;
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool has_constant() const;
  bool empty() const { return symbols_.empty(); }

 private:
  std::vector<Symbol> symbols_;
};

class InvalidRule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Trs {
  Signature signature;
  std::vector<Rule> rules;

  // Checks that no lhs is a variable and rhs variables occur in the lhs.
  void validate() const;
};

Term apply_substitution(const Term& t, const Substitution& sigma);

// Proper subterms in leftmost-outermost (pre-order) order.
std::vector<std::pair<Position, Term>> proper_subterms(const Term& t);
// All subterms including the root (position []).
std::vector<std::pair<Position, Term>> subterms(const Term& t);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& u);
bool is_valid_position(const Term& t, const Position& p);

// Variables in first-occurrence order.
std::vector<std::string> variables(const Term& t);
bool occurs_in(const Term& needle, const Term& haystack);

std::set<Symbol> defined_symbols(const Trs& r);
std::set<Symbol> function_symbols(const Term& t);

// f(t1..tn) to f^!(t1..tn).
Term mark_root(const Term& t);
// f(t1..tn) to F(t1..tn), the tuple symbol used by dependency pairs.
Term tuple_root(const Term& t);

// Standard dependency pairs: for l -> r and each subterm u of r with defined
// root that is not a proper subterm of l, the pair tuple_root(l) ->
// tuple_root(u). Ordered by rule, then pre-order of u in r.
std::vector<Rule> dependency_pairs(const Trs& r);

}  // namespace pathord
