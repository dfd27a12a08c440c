#include "pathord/orders.hpp"

#include "pathord/enumerate.hpp"

namespace pathord {

ComparisonStats& ComparisonStats::operator+=(const ComparisonStats& o) {
  a_weak += o.a_weak;
  a_strict += o.a_strict;
  b_weak += o.b_weak;
  b_strict += o.b_strict;
  return *this;
}

bool lex_strict(std::span<const Term> xs, std::span<const Term> ys, const Relation& gt) {
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (xs[k] == ys[k]) continue;
    return gt(xs[k], ys[k]);
  }
  return xs.size() > ys.size();
}

PairVerdict pair_lex(std::span<const Term> xs, std::span<const Term> ys, const Relation& ge,
                     const Relation& gt) {
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (gt(xs[k], ys[k])) return {true, true};
    if (!ge(xs[k], ys[k])) return {false, false};
  }
  if (xs.size() > ys.size()) return {true, true};
  return {xs.size() == ys.size(), false};
}

namespace detail {

std::string chain(const Memo& memo, const Term& s, const Term& t, bool strict) {
  std::string out;
  std::optional<std::pair<Term, Term>> cur{{s, t}};
  bool want_strict = strict;
  while (cur) {
    auto it = memo.find(*cur);
    if (it == memo.end()) break;
    const Entry& e = it->second;
    bool holds = want_strict ? e.verdict.strict : e.verdict.weak;
    if (!holds) break;
    const Justification& j = want_strict ? e.strict_why : e.weak_why;
    if (!j.label) break;
    if (!out.empty()) out += " > ";
    out += j.label;
    want_strict = j.child_strict;
    cur = j.child;
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Entry;
using detail::Justification;

Justification because(const char* label) { return Justification{label, std::nullopt, false}; }

Justification because(const char* label, const Term& s, const Term& t, bool strict) {
  return Justification{label, std::make_pair(s, t), strict};
}

// Strict-only entry: weak mirrors strict.
Entry strict_entry(bool value, Justification why) {
  Entry e;
  e.verdict = {value, value};
  e.weak_why = why;
  e.strict_why = why;
  return e;
}

}  // namespace

bool GwpoComparator::greater(const Term& s, const Term& t) {
  auto key = std::make_pair(s, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.verdict.strict;

  Entry e = strict_entry(false, {});
  ++stats_.a_strict;
  if (a_.strict(s, t)) {
    e = strict_entry(true, because("1"));
  } else if (!s.is_var() && (++stats_.a_weak, a_.weak(s, t))) {
    for (const Term& si : s.args()) {
      if (si == t) {
        e = strict_entry(true, because("2a"));
        break;
      }
      if (greater(si, t)) {
        e = strict_entry(true, because("2a", si, t, true));
        break;
      }
    }
    if (!e.verdict.strict && !t.is_var()) {
      ++stats_.b_strict;
      bool b_gt = b_.strict(s, t);
      bool b_ge = b_gt || (++stats_.b_weak, b_.weak(s, t));
      if (b_ge) {
        bool all = true;
        for (const Term& tj : t.args()) {
          if (!greater(s, tj)) {
            all = false;
            break;
          }
        }
        if (all && b_gt) {
          e = strict_entry(true, because("2b(i)"));
        } else if (all) {
          std::optional<std::pair<Term, Term>> decisive;
          bool lex = lex_strict(s.args(), t.args(), [&](const Term& x, const Term& y) {
            decisive = std::make_pair(x, y);
            return greater(x, y);
          });
          if (lex) {
            e = strict_entry(true, decisive ? because("2b(ii)", decisive->first, decisive->second, true)
                                            : because("2b(ii)"));
          }
        }
      }
    }
  }
  memo_.insert_or_assign(std::move(key), e);
  return e.verdict.strict;
}

bool SpoComparator::greater(const Term& s, const Term& t) {
  if (s.is_var()) return false;
  auto key = std::make_pair(s, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.verdict.strict;

  Entry e = strict_entry(false, {});
  for (const Term& si : s.args()) {
    if (si == t) {
      e = strict_entry(true, because("a"));
      break;
    }
    if (greater(si, t)) {
      e = strict_entry(true, because("a", si, t, true));
      break;
    }
  }
  if (!e.verdict.strict && !t.is_var()) {
    ++stats_.b_strict;
    bool p_gt = p_.strict(s, t);
    bool p_ge = p_gt || (++stats_.b_weak, p_.weak(s, t));
    if (p_ge) {
      bool all = true;
      for (const Term& tj : t.args()) {
        if (!greater(s, tj)) {
          all = false;
          break;
        }
      }
      if (all && p_gt) {
        e = strict_entry(true, because("b(i)"));
      } else if (all) {
        std::optional<std::pair<Term, Term>> decisive;
        bool lex = lex_strict(s.args(), t.args(), [&](const Term& x, const Term& y) {
          decisive = std::make_pair(x, y);
          return greater(x, y);
        });
        if (lex) {
          e = strict_entry(true, decisive ? because("b(ii)", decisive->first, decisive->second, true)
                                          : because("b(ii)"));
        }
      }
    }
  }
  memo_.insert_or_assign(std::move(key), e);
  return e.verdict.strict;
}

bool FastGwpoComparator::greater(const Term& s, const Term& t) {
  auto key = std::make_pair(s, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.verdict.strict;

  Entry e = strict_entry(false, {});
  ++stats_.a_weak;
  bool a_ge = a_.weak(s, t);
  ++stats_.a_strict;
  if (a_.strict(s, t)) {
    e = strict_entry(true, because("1"));
  } else if (a_ge && !s.is_var() && !t.is_var()) {
    ++stats_.b_weak;
    bool b_ge = b_.weak(s, t);
    ++stats_.b_strict;
    if (b_.strict(s, t)) {
      e = strict_entry(true, because("2(i)"));
    } else if (b_ge) {
      std::optional<std::pair<Term, Term>> decisive;
      bool lex = lex_strict(s.args(), t.args(), [&](const Term& x, const Term& y) {
        decisive = std::make_pair(x, y);
        return greater(x, y);
      });
      if (lex) {
        e = strict_entry(true, decisive ? because("2(ii)", decisive->first, decisive->second, true)
                                        : because("2(ii)"));
      }
    }
  }
  memo_.insert_or_assign(std::move(key), e);
  return e.verdict.strict;
}

namespace {

// Lexicographic pair extension that records the decisive position.
struct LexTrace {
  PairVerdict verdict;
  std::optional<std::pair<Term, Term>> strict_child;
};

template <typename Compare>
LexTrace traced_pair_lex(const std::vector<Term>& xs, const std::vector<Term>& ys, Compare&& cmp) {
  LexTrace r;
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t k = 0; k < n; ++k) {
    PairVerdict v = cmp(xs[k], ys[k]);
    if (v.strict) {
      r.verdict = {true, true};
      r.strict_child = std::make_pair(xs[k], ys[k]);
      return r;
    }
    if (!v.weak) return r;
  }
  if (xs.size() > ys.size()) {
    r.verdict = {true, true};
  } else {
    r.verdict = {xs.size() == ys.size(), false};
  }
  return r;
}

}  // namespace

PairVerdict GwpoPairComparator::compare(const Term& s, const Term& t) {
  auto key = std::make_pair(s, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.verdict;

  Entry e;
  ++stats_.a_strict;
  if (a_.strict(s, t)) {
    e = strict_entry(true, because("1"));
  } else if (++stats_.a_weak, a_.weak(s, t)) {
    if (s.is_var()) {
      if (s == t) {
        e.verdict.weak = true;
        e.weak_why = because("2c");
      }
    } else {
      const Symbol& f = s.symbol();
      for (std::size_t i : pi_.positions(f)) {
        const Term& si = s.arg(i - 1);
        if (compare(si, t).weak) {
          e = strict_entry(true, because("2a", si, t, false));
          break;
        }
      }
      if (!e.verdict.strict && !t.is_var()) {
        ++stats_.b_strict;
        bool b_gt = b_.strict(s, t);
        bool b_ge = b_gt || (++stats_.b_weak, b_.weak(s, t));
        if (b_ge) {
          bool all = true;
          for (std::size_t j : pi_.positions(t.symbol())) {
            if (!compare(s, t.arg(j - 1)).strict) {
              all = false;
              break;
            }
          }
          if (all && b_gt) {
            e = strict_entry(true, because("2b(i)"));
          } else if (all) {
            LexTrace lex = traced_pair_lex(pi_.project(s), pi_.project(t),
                                           [&](const Term& x, const Term& y) { return compare(x, y); });
            if (lex.verdict.weak) {
              e.verdict.weak = true;
              e.weak_why = lex.verdict.strict && lex.strict_child
                               ? because("2b(ii)", lex.strict_child->first, lex.strict_child->second, true)
                               : because("2b(ii)");
            }
            if (lex.verdict.strict) {
              e.verdict.strict = true;
              e.strict_why = e.weak_why;
            }
          }
        }
      }
    }
  }
  memo_.insert_or_assign(std::move(key), e);
  return e.verdict;
}

PairVerdict SpoPairComparator::compare(const Term& s, const Term& t) {
  auto key = std::make_pair(s, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.verdict;

  Entry e;
  if (s.is_var()) {
    if (s == t) {
      e.verdict.weak = true;
      e.weak_why = because("3");
    }
  } else {
    for (std::size_t i : pi_.positions(s.symbol())) {
      const Term& si = s.arg(i - 1);
      if (compare(si, t).weak) {
        e = strict_entry(true, because("1", si, t, false));
        break;
      }
    }
    if (!e.verdict.strict && !t.is_var()) {
      ++stats_.b_strict;
      bool p_gt = p_.strict(s, t);
      bool p_ge = p_gt || (++stats_.b_weak, p_.weak(s, t));
      if (p_ge) {
        bool all = true;
        for (std::size_t j : pi_.positions(t.symbol())) {
          if (!compare(s, t.arg(j - 1)).strict) {
            all = false;
            break;
          }
        }
        if (all && p_gt) {
          e = strict_entry(true, because("2a"));
        } else if (all) {
          LexTrace lex = traced_pair_lex(pi_.project(s), pi_.project(t),
                                         [&](const Term& x, const Term& y) { return compare(x, y); });
          if (lex.verdict.weak) {
            e.verdict.weak = true;
            e.weak_why = lex.verdict.strict && lex.strict_child
                             ? because("2b", lex.strict_child->first, lex.strict_child->second, true)
                             : because("2b");
          }
          if (lex.verdict.strict) {
            e.verdict.strict = true;
            e.strict_why = e.weak_why;
          }
        }
      }
    }
  }
  memo_.insert_or_assign(std::move(key), e);
  return e.verdict;
}

bool gwpo_gt(const Term& s, const Term& t, const OrderPair& a, const OrderPair& b,
             ComparisonStats* stats) {
  GwpoComparator cmp(a, b);
  bool r = cmp.greater(s, t);
  if (stats) *stats += cmp.stats();
  return r;
}

bool spo_gt(const Term& s, const Term& t, const OrderPair& p, ComparisonStats* stats) {
  SpoComparator cmp(p);
  bool r = cmp.greater(s, t);
  if (stats) *stats += cmp.stats();
  return r;
}

bool gwpo_fast_gt(const Term& s, const Term& t, const OrderPair& a, const OrderPair& b,
                  ComparisonStats* stats) {
  FastGwpoComparator cmp(a, b);
  bool r = cmp.greater(s, t);
  if (stats) *stats += cmp.stats();
  return r;
}

bool mgwpo_gt(const Term& s, const Term& t, const ReductionTriple& ta, const ReductionTriple& tb) {
  return ta.preorder(s, t) && tb.preorder(s, t) && gwpo_gt(s, t, ta.pair, tb.pair);
}

bool mspo_gt(const Term& s, const Term& t, const ReductionTriple& triple) {
  return triple.preorder(s, t) && spo_gt(s, t, triple.pair);
}

PairVerdict gwpo_pair(const Term& s, const Term& t, const Status& pi, const OrderPair& a,
                      const OrderPair& b) {
  GwpoPairComparator cmp(pi, a, b);
  return cmp.compare(s, t);
}

PairVerdict spo_pair(const Term& s, const Term& t, const Status& pi, const OrderPair& p) {
  SpoPairComparator cmp(pi, p);
  return cmp.compare(s, t);
}

PairVerdict mgwpo_pair(const Term& s, const Term& t, const Status& pi, const ReductionTriple& ta,
                       const ReductionTriple& tb) {
  PairVerdict g = gwpo_pair(s, t, pi, ta.pair, tb.pair);
  g.weak = g.weak && ta.preorder(s, t) && tb.preorder(s, t);
  return g;
}

PairVerdict mspo_pair(const Term& s, const Term& t, const Status& pi,
                      const ReductionTriple& triple) {
  PairVerdict v = spo_pair(s, t, pi, triple.pair);
  v.weak = v.weak && triple.preorder(s, t);
  return v;
}

TotalityReport ground_totality(const Relation& gt, const Signature& sig, std::size_t size_bound) {
  if (!sig.has_constant()) throw std::invalid_argument("signature has no constant: no ground terms");
  std::vector<Term> ground = enum_terms(sig, {}, size_bound);
  TotalityReport report;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = i + 1; j < ground.size(); ++j) {
      ++report.pairs_checked;
      if (!gt(ground[i], ground[j]) && !gt(ground[j], ground[i])) {
        report.total = false;
        report.counterexample = std::make_pair(ground[i], ground[j]);
        return report;
      }
    }
  }
  return report;
}

}  // namespace pathord
