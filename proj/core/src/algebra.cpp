#include "pathord/algebra.hpp"

#include <algorithm>
#include <span>
#include <sstream>

namespace pathord {

void Interpretation::set(const Symbol& f, LinearPoly p) {
  if (kind_ != AlgebraKind::linear) {
    throw std::invalid_argument("linear polynomial given to a max/plus algebra for " + f.display());
  }
  if (p.coeffs.size() != f.arity) {
    throw std::invalid_argument("coefficient count does not match arity of " + f.display());
  }
  if (p.constant < 0 || std::any_of(p.coeffs.begin(), p.coeffs.end(), [](Natural a) { return a < 0; })) {
    throw std::invalid_argument("negative coefficient for " + f.display());
  }
  entries_.insert_or_assign(f, std::move(p));
}

void Interpretation::set(const Symbol& f, MaxPlus m) {
  if (kind_ != AlgebraKind::max_plus) {
    throw std::invalid_argument("max/plus interpretation given to a linear algebra for " + f.display());
  }
  if (m.args.size() != f.arity) {
    throw std::invalid_argument("argument count does not match arity of " + f.display());
  }
  if (m.base < 0) throw std::invalid_argument("negative base constant for " + f.display());
  entries_.insert_or_assign(f, std::move(m));
}

const SymbolInterpretation& Interpretation::at(const Symbol& f) const {
  auto it = entries_.find(f);
  if (it == entries_.end()) throw UnassignedSymbol(f, "interpretation");
  return it->second;
}

Natural evaluate(const Interpretation& alg, const Term& t, const Assignment& alpha) {
  if (t.is_var()) {
    auto it = alpha.find(t.var_name());
    if (it == alpha.end()) throw MissingVariable("no value for variable " + t.var_name());
    return it->second;
  }
  std::vector<Natural> vals;
  vals.reserve(t.arity());
  for (const Term& a : t.args()) vals.push_back(evaluate(alg, a, alpha));
  const SymbolInterpretation& fi = alg.at(t.symbol());
  if (const auto* p = std::get_if<LinearPoly>(&fi)) {
    Natural v = p->constant;
    for (std::size_t i = 0; i < vals.size(); ++i) v += p->coeffs[i] * vals[i];
    return v;
  }
  const auto& m = std::get<MaxPlus>(fi);
  Natural v = m.base;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Natural c = (m.args[i].active ? vals[i] : 0) + m.args[i].offset;
    v = std::max(v, c);
  }
  return v;
}

namespace {

bool coeffs_dominate(const AffineBranch& a, const AffineBranch& b) {
  // every coefficient of b is matched by a coefficient >= in a
  auto ia = a.coeffs.begin();
  for (const auto& [var, k] : b.coeffs) {
    while (ia != a.coeffs.end() && ia->first < var) ++ia;
    if (ia == a.coeffs.end() || ia->first != var || ia->second < k) return false;
  }
  return true;
}

bool dominates(const AffineBranch& a, const AffineBranch& b) {
  return a.constant >= b.constant && coeffs_dominate(a, b);
}

bool strictly_dominates(const AffineBranch& a, const AffineBranch& b) {
  return a.constant > b.constant && coeffs_dominate(a, b);
}

AffineBranch add_branches(const AffineBranch& a, const AffineBranch& b) {
  AffineBranch r;
  r.constant = a.constant + b.constant;
  auto ia = a.coeffs.begin(), ib = b.coeffs.begin();
  while (ia != a.coeffs.end() || ib != b.coeffs.end()) {
    if (ib == b.coeffs.end() || (ia != a.coeffs.end() && ia->first < ib->first)) {
      r.coeffs.push_back(*ia++);
    } else if (ia == a.coeffs.end() || ib->first < ia->first) {
      r.coeffs.push_back(*ib++);
    } else {
      r.coeffs.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

}  // namespace

SymbolicValue SymbolicValue::constant(std::int64_t c) {
  SymbolicValue v;
  if (c > 0) v.branches_.push_back(AffineBranch{c, {}});
  return v;
}

SymbolicValue SymbolicValue::variable(const std::string& x) {
  SymbolicValue v;
  v.branches_.push_back(AffineBranch{0, {{x, 1}}});
  return v;
}

SymbolicValue SymbolicValue::from_branches(std::vector<AffineBranch> branches) {
  if (branches.size() == 1) {
    SymbolicValue v;
    if (!branches[0].coeffs.empty() || branches[0].constant > 0) v.branches_ = std::move(branches);
    return v;
  }
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
  std::vector<AffineBranch> kept;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const AffineBranch& b = branches[i];
    if (b.coeffs.empty() && b.constant <= 0) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < branches.size() && !dominated; ++j) {
      if (j != i && dominates(branches[j], b)) dominated = true;
    }
    if (!dominated) kept.push_back(b);
  }
  SymbolicValue v;
  v.branches_ = std::move(kept);
  return v;
}

SymbolicValue SymbolicValue::scaled(Natural k) const {
  if (k == 0) return SymbolicValue();
  std::vector<AffineBranch> out = branches_;
  for (AffineBranch& b : out) {
    b.constant *= k;
    for (auto& c : b.coeffs) c.second *= k;
  }
  return from_branches(std::move(out));
}

// max(0, B) + c  =  max(c, B + c)
SymbolicValue SymbolicValue::shifted(std::int64_t c) const {
  std::vector<AffineBranch> out = branches_;
  for (AffineBranch& b : out) b.constant += c;
  out.push_back(AffineBranch{c, {}});
  return from_branches(std::move(out));
}

// max(0, A) + max(0, B) = max over choices of a branch or 0 on each side
SymbolicValue SymbolicValue::sum(const SymbolicValue& a, const SymbolicValue& b) {
  std::vector<AffineBranch> la = a.branches_, lb = b.branches_;
  la.push_back(AffineBranch{});
  lb.push_back(AffineBranch{});
  std::vector<AffineBranch> out;
  out.reserve(la.size() * lb.size());
  for (const AffineBranch& x : la) {
    for (const AffineBranch& y : lb) out.push_back(add_branches(x, y));
  }
  return from_branches(std::move(out));
}

SymbolicValue SymbolicValue::max(const SymbolicValue& a, const SymbolicValue& b) {
  std::vector<AffineBranch> out = a.branches_;
  out.insert(out.end(), b.branches_.begin(), b.branches_.end());
  return from_branches(std::move(out));
}

Natural SymbolicValue::evaluate(const Assignment& alpha) const {
  Natural best = 0;
  for (const AffineBranch& b : branches_) {
    Natural v = b.constant;
    for (const auto& [x, k] : b.coeffs) {
      auto it = alpha.find(x);
      if (it == alpha.end()) throw MissingVariable("no value for variable " + x);
      v += k * it->second;
    }
    best = std::max(best, v);
  }
  return best;
}

std::string SymbolicValue::to_string() const {
  if (branches_.empty()) return "0";
  std::ostringstream os;
  if (branches_.size() > 1) os << "max{";
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (i) os << ", ";
    const AffineBranch& b = branches_[i];
    bool first = true;
    for (const auto& [x, k] : b.coeffs) {
      if (!first) os << " + ";
      if (k != 1) os << k << '*';
      os << x;
      first = false;
    }
    if (first) {
      os << b.constant;
    } else if (b.constant > 0) {
      os << " + " << b.constant;
    } else if (b.constant < 0) {
      os << " - " << -b.constant;
    }
  }
  if (branches_.size() > 1) os << '}';
  return os.str();
}

namespace {

// Linear algebras compose to a single affine function.
void linear_accumulate(const Interpretation& alg, const Term& t, Natural mult, Natural& constant,
                       std::vector<std::pair<std::string, Natural>>& coeffs) {
  if (t.is_var()) {
    for (auto& c : coeffs) {
      if (c.first == t.var_name()) {
        c.second += mult;
        return;
      }
    }
    coeffs.emplace_back(t.var_name(), mult);
    return;
  }
  const auto& p = std::get<LinearPoly>(alg.at(t.symbol()));
  constant += mult * p.constant;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (p.coeffs[i] != 0) linear_accumulate(alg, t.arg(i), mult * p.coeffs[i], constant, coeffs);
  }
}

SymbolicValue apply(const Interpretation& alg, const Symbol& f, std::span<const Term> args) {
  const SymbolInterpretation& fi = alg.at(f);
  if (const auto* p = std::get_if<LinearPoly>(&fi)) {
    if (alg.kind() == AlgebraKind::linear) {
      AffineBranch b{p->constant, {}};
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (p->coeffs[i] != 0) linear_accumulate(alg, args[i], p->coeffs[i], b.constant, b.coeffs);
      }
      std::sort(b.coeffs.begin(), b.coeffs.end());
      return SymbolicValue::from_branches({std::move(b)});
    }
    SymbolicValue v = SymbolicValue::constant(p->constant);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (p->coeffs[i] == 0) continue;
      v = SymbolicValue::sum(v, abstract(alg, args[i]).scaled(p->coeffs[i]));
    }
    return v;
  }
  const auto& m = std::get<MaxPlus>(fi);
  SymbolicValue v = SymbolicValue::constant(m.base);
  for (std::size_t i = 0; i < args.size(); ++i) {
    const MaxPlus::Arg& a = m.args[i];
    SymbolicValue piece = a.active ? abstract(alg, args[i]).shifted(a.offset)
                                   : SymbolicValue::constant(a.offset);
    v = SymbolicValue::max(v, piece);
  }
  return v;
}

}  // namespace

SymbolicValue abstract(const Interpretation& alg, const Term& t) {
  if (t.is_var()) return SymbolicValue::variable(t.var_name());
  return apply(alg, t.symbol(), t.args());
}

SymbolicValue abstract_marked(const Interpretation& alg, const Term& t) {
  if (t.is_var()) throw std::invalid_argument("cannot mark the root of a variable");
  return apply(alg, t.symbol().as_marked(), t.args());
}

bool cmp_weak(const SymbolicValue& u, const SymbolicValue& v) {
  for (const AffineBranch& bv : v.branches()) {
    bool found = std::any_of(u.branches().begin(), u.branches().end(),
                             [&](const AffineBranch& bu) { return dominates(bu, bv); });
    if (!found) return false;
  }
  return true;
}

bool cmp_strict(const SymbolicValue& u, const SymbolicValue& v) {
  // the implicit 0 branch of v must be beaten as well
  bool beats_zero = std::any_of(u.branches().begin(), u.branches().end(),
                                [](const AffineBranch& bu) { return bu.constant >= 1; });
  if (!beats_zero) return false;
  for (const AffineBranch& bv : v.branches()) {
    bool found = std::any_of(u.branches().begin(), u.branches().end(),
                             [&](const AffineBranch& bu) { return strictly_dominates(bu, bv); });
    if (!found) return false;
  }
  return true;
}

bool check_weak_monotone(const Interpretation& alg) {
  for (const auto& [f, fi] : alg.entries()) {
    if (const auto* p = std::get_if<LinearPoly>(&fi)) {
      if (p->constant < 0) return false;
      for (Natural a : p->coeffs) {
        if (a < 0) return false;
      }
    } else if (std::get<MaxPlus>(fi).base < 0) {
      return false;
    }
  }
  return true;
}

std::string generic_var(std::size_t arity, std::size_t i) {
  return arity == 1 ? std::string("x") : "x" + std::to_string(i);
}

Term generic_term(const Symbol& f) {
  TermList args;
  for (std::size_t i = 1; i <= f.arity; ++i) args.push_back(Term::var(generic_var(f.arity, i)));
  return Term::app(f, std::move(args));
}

bool simple_at(const Interpretation& alg, const Symbol& f, const std::vector<std::size_t>& positions) {
  alg.at(f);
  if (positions.empty()) return true;
  SymbolicValue whole = abstract(alg, generic_term(f));
  for (std::size_t i : positions) {
    if (!cmp_weak(whole, SymbolicValue::variable(generic_var(f.arity, i)))) return false;
  }
  return true;
}

bool strictly_simple_at(const Interpretation& alg, const Symbol& f) {
  alg.at(f);
  if (f.arity == 0) return true;
  SymbolicValue whole = abstract(alg, generic_term(f));
  for (std::size_t i = 1; i <= f.arity; ++i) {
    if (!cmp_strict(whole, SymbolicValue::variable(generic_var(f.arity, i)))) return false;
  }
  return true;
}

bool check_simple(const Interpretation& alg, const Status& pi) {
  for (const auto& [f, fi] : alg.entries()) {
    if (!simple_at(alg, f, pi.positions(f))) return false;
  }
  return true;
}

bool check_strictly_simple(const Interpretation& alg) {
  for (const auto& [f, fi] : alg.entries()) {
    if (!strictly_simple_at(alg, f)) return false;
  }
  return true;
}

}  // namespace pathord
