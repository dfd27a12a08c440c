#include "pathord/triples.hpp"

#include "pathord/enumerate.hpp"

namespace pathord {

unsigned Precedence::rank(const Symbol& f) const {
  auto it = ranks_.find(f);
  if (it == ranks_.end()) throw UnassignedSymbol(f, "precedence");
  return it->second;
}

ReductionTriple triple_from_algebra(std::shared_ptr<const Interpretation> alg) {
  if (!check_weak_monotone(*alg)) throw std::invalid_argument("algebra is not weakly monotone");
  auto ge = [alg](const Term& s, const Term& t) {
    return cmp_weak(abstract(*alg, s), abstract(*alg, t));
  };
  auto gt = [alg](const Term& s, const Term& t) {
    return cmp_strict(abstract(*alg, s), abstract(*alg, t));
  };
  ReductionTriple r;
  r.preorder = ge;
  r.pair = OrderPair{ge, gt};
  r.kind = TripleKind::algebra;
  r.algebra = std::move(alg);
  r.label = "algebra";
  return r;
}

ReductionTriple triple_from_algebra(Interpretation alg) {
  return triple_from_algebra(std::make_shared<const Interpretation>(std::move(alg)));
}

ReductionTriple triple_from_precedence(std::shared_ptr<const Precedence> prec) {
  ReductionTriple r;
  r.preorder = [](const Term&, const Term&) { return true; };
  r.pair.weak = [prec](const Term& s, const Term& t) {
    return !s.is_var() && !t.is_var() && prec->rank(s.symbol()) >= prec->rank(t.symbol());
  };
  r.pair.strict = [prec](const Term& s, const Term& t) {
    return !s.is_var() && !t.is_var() && prec->rank(s.symbol()) > prec->rank(t.symbol());
  };
  r.kind = TripleKind::precedence;
  r.precedence = std::move(prec);
  r.label = "precedence";
  return r;
}

ReductionTriple triple_from_precedence(Precedence prec) {
  return triple_from_precedence(std::make_shared<const Precedence>(std::move(prec)));
}

ReductionTriple triple_from_reduction_pair(Relation weak, Relation strict) {
  ReductionTriple r;
  r.preorder = weak;
  r.pair = OrderPair{std::move(weak), std::move(strict)};
  r.kind = TripleKind::reduction_pair;
  r.label = "reduction-pair";
  return r;
}

ReductionTriple trivial_triple() {
  ReductionTriple r;
  r.preorder = [](const Term&, const Term&) { return true; };
  r.pair.weak = [](const Term&, const Term&) { return true; };
  r.pair.strict = [](const Term&, const Term&) { return false; };
  r.kind = TripleKind::trivial;
  r.label = "trivial";
  return r;
}

ReductionTriple marked_triple(std::shared_ptr<const Interpretation> alg) {
  if (!check_weak_monotone(*alg)) throw std::invalid_argument("algebra is not weakly monotone");
  ReductionTriple r;
  r.preorder = [alg](const Term& s, const Term& t) {
    return cmp_weak(abstract(*alg, s), abstract(*alg, t));
  };
  r.pair.weak = [alg](const Term& s, const Term& t) {
    if (s.is_var() || t.is_var()) return s.is_var() && t.is_var() && s == t;
    return cmp_weak(abstract_marked(*alg, s), abstract_marked(*alg, t));
  };
  r.pair.strict = [alg](const Term& s, const Term& t) {
    if (s.is_var() || t.is_var()) return false;
    return cmp_strict(abstract_marked(*alg, s), abstract_marked(*alg, t));
  };
  r.kind = TripleKind::marked_algebra;
  r.algebra = std::move(alg);
  r.label = "marked-algebra";
  return r;
}

ReductionTriple marked_triple(Interpretation alg) {
  return marked_triple(std::make_shared<const Interpretation>(std::move(alg)));
}

OrderPair lex_combine(const OrderPair& a, const OrderPair& b) {
  OrderPair r;
  r.strict = [a, b](const Term& s, const Term& t) {
    return a.strict(s, t) || (a.weak(s, t) && b.strict(s, t));
  };
  r.weak = [a, b](const Term& s, const Term& t) {
    return a.strict(s, t) || (a.weak(s, t) && b.weak(s, t));
  };
  return r;
}

ReductionTriple combine_triples(const ReductionTriple& a, const ReductionTriple& b) {
  ReductionTriple r;
  Relation pa = a.preorder, pb = b.preorder;
  r.preorder = [pa, pb](const Term& s, const Term& t) { return pa(s, t) && pb(s, t); };
  r.pair = lex_combine(a.pair, b.pair);
  r.kind = TripleKind::combined;
  r.label = a.label + "*" + b.label;
  return r;
}

std::string HarmonyViolation::to_string() const {
  TermList lhs = args;
  TermList rhs = args;
  rhs[position - 1] = replacement;
  return Term::app(f, lhs).to_string() + " not weakly above " + Term::app(f, rhs).to_string() +
         " although " + args[position - 1].to_string() + " >= " + replacement.to_string();
}

std::optional<HarmonyViolation> sample_harmony(const ReductionTriple& triple, const Signature& sig,
                                               std::size_t budget) {
  std::vector<Term> universe = enum_terms(sig, {"x", "y"}, 3);
  if (universe.empty()) return std::nullopt;
  std::size_t examined = 0;
  std::size_t filler = 0;
  for (const Symbol& f : sig.symbols()) {
    if (f.arity == 0) continue;
    for (std::size_t i = 1; i <= f.arity; ++i) {
      for (const Term& ti : universe) {
        for (const Term& u : universe) {
          if (examined >= budget) return std::nullopt;
          if (!triple.preorder(ti, u)) continue;
          ++examined;
          TermList args;
          for (std::size_t k = 1; k <= f.arity; ++k) {
            args.push_back(k == i ? ti : universe[filler++ % universe.size()]);
          }
          TermList replaced = args;
          replaced[i - 1] = u;
          if (!triple.pair.weak(Term::app(f, args), Term::app(f, replaced))) {
            return HarmonyViolation{f, i, args, u};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pathord
