#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>

#include "pathord/status.hpp"
#include "pathord/term.hpp"
#include "pathord/triples.hpp"

namespace pathord {

// Base-relation calls issued while computing uncached comparisons. Single
// pair orders (SPO) count their pair as B.
struct ComparisonStats {
  std::size_t a_weak = 0;
  std::size_t a_strict = 0;
  std::size_t b_weak = 0;
  std::size_t b_strict = 0;
  std::size_t total() const { return a_weak + a_strict + b_weak + b_strict; }
  ComparisonStats& operator+=(const ComparisonStats& o);
};

struct PairVerdict {
  bool weak = false;
  bool strict = false;
  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

// Lexicographic extension of a single strict order; equal prefixes are
// syntactic equalities. A proper extension of the right list is greater.
bool lex_strict(std::span<const Term> xs, std::span<const Term> ys, const Relation& gt);

// Lexicographic extension of (ge, gt): earlier positions need ge only.
// Equal lengths with ge everywhere give weak; a longer left list with ge on
// the common prefix gives strict; a shorter left list never relates.
PairVerdict pair_lex(std::span<const Term> xs, std::span<const Term> ys, const Relation& ge,
                     const Relation& gt);

namespace detail {

struct Justification {
  const char* label = nullptr;
  std::optional<std::pair<Term, Term>> child;
  bool child_strict = false;
};

struct Entry {
  PairVerdict verdict;
  Justification weak_why;
  Justification strict_why;
};

using Memo = std::unordered_map<std::pair<Term, Term>, Entry, TermPairHash>;

std::string chain(const Memo& memo, const Term& s, const Term& t, bool strict);

}  // namespace detail

// Common session state: memo table, stats and case-chain reconstruction.
// A session is single-threaded; results are pure, so memo hits only affect
// the stats.
class OrderSession {
 public:
  const ComparisonStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  void clear() { memo_.clear(); }
  std::size_t memo_size() const { return memo_.size(); }

  // Case labels of the decisive derivation of the last computed verdict for
  // (s, t), followed through decisive sub-comparisons, joined by " > ".
  // Empty when the pair is unrelated or not yet computed.
  std::string case_chain(const Term& s, const Term& t, bool strict = true) const {
    return detail::chain(memo_, s, t, strict);
  }

 protected:
  ComparisonStats stats_;
  detail::Memo memo_;
};

// Generalized weighted path order as a reduction order candidate:
// s > t iff (1) s ⊐A t, or (2) s = f(..) ⊒A t and (a) some s_i = t or
// s_i > t, or (b) t = g(..), s > every t_j, and (i) s ⊐B t or (ii) s ⊒B t
// and the argument lists decrease lexicographically.
class GwpoComparator : public OrderSession {
 public:
  GwpoComparator(OrderPair a, OrderPair b) : a_(std::move(a)), b_(std::move(b)) {}
  bool greater(const Term& s, const Term& t);

 private:
  OrderPair a_, b_;
};

// Semantic path order over a single pair; the GWPO with a trivial A.
class SpoComparator : public OrderSession {
 public:
  explicit SpoComparator(OrderPair p) : p_(std::move(p)) {}
  bool greater(const Term& s, const Term& t);

 private:
  OrderPair p_;
};

// KBO-like flat form of the GWPO, valid when both ⊐A and ⊒A have the
// subterm property: (1) s ⊐A t, or (2) both non-variable, s ⊒A t and
// (i) s ⊐B t or (ii) s ⊒B t and the arguments decrease lexicographically.
// Each visited pair issues ⊒A, ⊐A, ⊒B, ⊐B in that order (stopping early),
// so comparing f^n(a) with f^n(b) costs 4(n+1) base calls.
class FastGwpoComparator : public OrderSession {
 public:
  FastGwpoComparator(OrderPair a, OrderPair b) : a_(std::move(a)), b_(std::move(b)) {}
  bool greater(const Term& s, const Term& t);

 private:
  OrderPair a_, b_;
};

// GWPO as a pair (>=G, >G) with partial status pi.
class GwpoPairComparator : public OrderSession {
 public:
  GwpoPairComparator(Status pi, OrderPair a, OrderPair b)
      : pi_(std::move(pi)), a_(std::move(a)), b_(std::move(b)) {}
  PairVerdict compare(const Term& s, const Term& t);

 private:
  Status pi_;
  OrderPair a_, b_;
};

// SPO as a pair (>=S, >S) with partial status pi.
class SpoPairComparator : public OrderSession {
 public:
  SpoPairComparator(Status pi, OrderPair p) : pi_(std::move(pi)), p_(std::move(p)) {}
  PairVerdict compare(const Term& s, const Term& t);

 private:
  Status pi_;
  OrderPair p_;
};

// One-shot wrappers; each builds a fresh session.
bool gwpo_gt(const Term& s, const Term& t, const OrderPair& a, const OrderPair& b,
             ComparisonStats* stats = nullptr);
bool spo_gt(const Term& s, const Term& t, const OrderPair& p, ComparisonStats* stats = nullptr);
bool gwpo_fast_gt(const Term& s, const Term& t, const OrderPair& a, const OrderPair& b,
                  ComparisonStats* stats = nullptr);
bool mgwpo_gt(const Term& s, const Term& t, const ReductionTriple& ta, const ReductionTriple& tb);
bool mspo_gt(const Term& s, const Term& t, const ReductionTriple& triple);
PairVerdict gwpo_pair(const Term& s, const Term& t, const Status& pi, const OrderPair& a,
                      const OrderPair& b);
PairVerdict spo_pair(const Term& s, const Term& t, const Status& pi, const OrderPair& p);
// Weak side intersected with the triples' preorders; strict side unchanged.
PairVerdict mgwpo_pair(const Term& s, const Term& t, const Status& pi, const ReductionTriple& ta,
                       const ReductionTriple& tb);
PairVerdict mspo_pair(const Term& s, const Term& t, const Status& pi,
                      const ReductionTriple& triple);

struct TotalityReport {
  bool total = true;
  std::optional<std::pair<Term, Term>> counterexample;
  std::size_t pairs_checked = 0;
};

// Every two distinct ground terms of size <= size_bound must be related one
// way or the other. Throws std::invalid_argument when `sig` has no constant.
TotalityReport ground_totality(const Relation& gt, const Signature& sig, std::size_t size_bound);

}  // namespace pathord
