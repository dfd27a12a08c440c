#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "pathord/algebra.hpp"
#include "pathord/term.hpp"

namespace pathord {

using Relation = std::function<bool(const Term&, const Term&)>;

// (weak, strict) on terms. Compatible pairs satisfy strict ⊆ weak.
struct OrderPair {
  Relation weak;
  Relation strict;
};

enum class TripleKind { algebra, marked_algebra, precedence, reduction_pair, trivial, combined };

// Total preorder on symbols via natural ranks.
class Precedence {
 public:
  void set(const Symbol& f, unsigned rank) { ranks_.insert_or_assign(f, rank); }
  void erase(const Symbol& f) { ranks_.erase(f); }
  unsigned rank(const Symbol& f) const;
  bool contains(const Symbol& f) const { return ranks_.contains(f); }
  const std::map<Symbol, unsigned>& ranks() const { return ranks_; }
  friend bool operator==(const Precedence&, const Precedence&) = default;

 private:
  std::map<Symbol, unsigned> ranks_;
};

// (preorder, weak, strict): a rewrite preorder plus a stable order pair
// harmonious to it. The kind and the optional parameters record how the
// triple was built so hypotheses can be checked and reports replayed.
struct ReductionTriple {
  Relation preorder;
  OrderPair pair;
  TripleKind kind = TripleKind::reduction_pair;
  std::shared_ptr<const Interpretation> algebra;
  std::shared_ptr<const Precedence> precedence;
  std::string label;
};

ReductionTriple triple_from_algebra(std::shared_ptr<const Interpretation> alg);
ReductionTriple triple_from_algebra(Interpretation alg);

// Universal preorder; weak/strict compare head symbols by rank and never
// relate a variable.
ReductionTriple triple_from_precedence(std::shared_ptr<const Precedence> prec);
ReductionTriple triple_from_precedence(Precedence prec);

ReductionTriple triple_from_reduction_pair(Relation weak, Relation strict);

// (T x T, T x T, empty).
ReductionTriple trivial_triple();

// Preorder on plain terms; weak holds for identical variables or when the
// root-marked terms compare weakly; strict needs both sides non-variable.
ReductionTriple marked_triple(std::shared_ptr<const Interpretation> alg);
ReductionTriple marked_triple(Interpretation alg);

// strict = A.strict ∪ (A.weak ∩ B.strict); weak = A.strict ∪ (A.weak ∩ B.weak)
OrderPair lex_combine(const OrderPair& a, const OrderPair& b);

// (A.preorder ∩ B.preorder, lex_combine(A, B)).
ReductionTriple combine_triples(const ReductionTriple& a, const ReductionTriple& b);

struct HarmonyViolation {
  Symbol f;
  std::size_t position = 0;  // 1-based
  TermList args;
  Term replacement;
  std::string to_string() const;
};

// Checks t_i >= u  =>  f(..t_i..) ⊒ f(..u..) on terms over `sig` (variables
// x, y, size <= 3) until `budget` implications have been examined.
std::optional<HarmonyViolation> sample_harmony(const ReductionTriple& triple, const Signature& sig,
                                               std::size_t budget);

}  // namespace pathord
