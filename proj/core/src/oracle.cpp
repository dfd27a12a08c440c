#include "pathord/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "pathord/proof.hpp"

namespace pathord {

Signature default_oracle_signature() {
  return Signature{Symbol("f", 2), Symbol("g", 1), Symbol("a", 0), Symbol("b", 0)};
}

std::string describe(const ReductionTriple& t) {
  std::ostringstream os;
  os << t.label;
  if (t.algebra) {
    for (const auto& [f, fi] : t.algebra->entries()) os << "; " << f.display() << " = " << format_expression(f, fi);
  }
  if (t.precedence) {
    for (const auto& [f, r] : t.precedence->ranks()) os << "; prec(" << f.display() << ") = " << r;
  }
  return os.str();
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t thread_count() {
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

// Least i in [0, n) with fails(i), or kNone. Indices above a known failure
// are skipped.
std::size_t least_failure(std::size_t n, const std::function<bool(std::size_t)>& fails) {
  std::atomic<std::size_t> next{0}, best{kNone};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || i > best.load()) return;
      if (fails(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> ts;
  for (std::size_t k = 1; k < thread_count(); ++k) ts.emplace_back(work);
  work();
  for (auto& t : ts) t.join();
  return best.load();
}

// Relation matrix over the universe.
std::vector<char> matrix(const std::vector<Term>& u, const Relation& r) {
  const std::size_t n = u.size();
  std::vector<char> m(n * n, 0);
  least_failure(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = r(u[i], u[j]) ? 1 : 0;
    return false;
  });
  return m;
}

// Whether every argument position of every universe term relates below it.
std::optional<std::pair<Term, Term>> subterm_property(const std::vector<Term>& u, const Relation& r,
                                                      const std::function<std::vector<std::size_t>(const Symbol&)>& positions) {
  for (const Term& t : u) {
    if (t.is_var()) continue;
    for (std::size_t i : positions(t.symbol())) {
      if (!r(t, t.arg(i - 1))) return std::make_pair(t, t.arg(i - 1));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> all_positions(const Symbol& f) {
  return Status::total().positions(f);
}

// Runs `differs` over all ordered pairs, s-major, and records the least
// differing pair.
void compare_all(OracleReport& rep, const std::vector<Term>& u,
                 const std::function<bool(const Term&, const Term&)>& differs) {
  const std::size_t n = u.size();
  std::size_t bad = least_failure(n * n, [&](std::size_t k) { return differs(u[k / n], u[k % n]); });
  rep.pairs_checked = n * n;
  if (bad != kNone) {
    rep.passed = false;
    rep.witness = {u[bad / n], u[bad % n]};
  }
}

}  // namespace

OracleReport check_thm_2_5(const ReductionTriple& ta, const ReductionTriple& tb,
                           const Signature& sig, const UniverseOptions& uo) {
  OracleReport rep;
  rep.check = "thm2.5";
  rep.parameters = "A: " + describe(ta) + " | B: " + describe(tb);
  std::vector<Term> u = enum_terms(sig, uo.vars, uo.max_size);
  if (ta.algebra) {
    if (!check_simple(*ta.algebra, Status::total())) {
      throw PreconditionError("A is not simple, so its weak relation lacks the subterm property");
    }
  } else if (auto w = subterm_property(u, ta.pair.weak, all_positions)) {
    throw PreconditionError("weak A relation lacks the subterm property at " + w->first.to_string());
  }
  ReductionTriple combined = combine_triples(ta, tb);
  compare_all(rep, u, [&](const Term& s, const Term& t) {
    return mgwpo_gt(s, t, ta, tb) != mspo_gt(s, t, combined);
  });
  if (!rep.passed) rep.detail = "MGWPO and MSPO disagree";
  return rep;
}

OracleReport check_thm_3_6(const ReductionTriple& ta, const ReductionTriple& tb, const Status& pi,
                           const Signature& sig, const UniverseOptions& uo) {
  OracleReport rep;
  rep.check = "thm3.6";
  std::ostringstream ps;
  for (const auto& [f, p] : pi.entries()) {
    ps << "; pi(" << f.display() << ") = [";
    for (std::size_t i = 0; i < p.size(); ++i) ps << (i ? "," : "") << p[i];
    ps << "]";
  }
  rep.parameters = "A: " + describe(ta) + " | B: " + describe(tb) + " | status" + ps.str();
  std::vector<Term> u = enum_terms(sig, uo.vars, uo.max_size);
  if (ta.algebra) {
    if (!check_simple(*ta.algebra, pi)) throw PreconditionError("A is not simple with respect to pi");
  } else if (auto w = subterm_property(u, ta.pair.weak, [&](const Symbol& f) { return pi.positions(f); })) {
    throw PreconditionError("weak A relation is not simple at " + w->first.to_string());
  }
  ReductionTriple combined = combine_triples(ta, tb);
  const std::size_t n = u.size();
  std::vector<PairVerdict> g(n * n), s(n * n);
  least_failure(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      g[i * n + j] = mgwpo_pair(u[i], u[j], pi, ta, tb);
      s[i * n + j] = mspo_pair(u[i], u[j], pi, combined);
    }
    return false;
  });
  rep.pairs_checked = n * n;
  rep.inclusion = true;
  rep.equality = true;
  for (std::size_t k = 0; k < n * n; ++k) {
    bool included = (!s[k].weak || g[k].weak) && (!s[k].strict || g[k].strict);
    if (!included && *rep.inclusion) {
      rep.inclusion = false;
      rep.witness = {u[k / n], u[k % n]};
    }
    if (!(s[k] == g[k]) && *rep.equality) {
      rep.equality = false;
      rep.equality_witness = {u[k / n], u[k % n]};
    }
  }
  rep.passed = *rep.inclusion && (*rep.equality || !pi.is_total());
  if (!*rep.inclusion) {
    rep.detail = "SPO pair not included in GWPO pair";
  } else if (!*rep.equality) {
    rep.detail = pi.is_total() ? "pairs differ although pi is total" : "pairs differ (pi not total)";
  }
  return rep;
}

OracleReport check_prop_2_6(const ReductionTriple& ta, const ReductionTriple& tb,
                            const Signature& sig, const UniverseOptions& uo) {
  OracleReport rep;
  rep.check = "prop2.6";
  rep.parameters = "A: " + describe(ta) + " | B: " + describe(tb);
  std::vector<Term> u = enum_terms(sig, uo.vars, uo.max_size);
  if (ta.algebra) {
    if (!check_strictly_simple(*ta.algebra)) {
      throw PreconditionError("A is not strictly simple, so its strict relation lacks the subterm property");
    }
  } else {
    if (auto w = subterm_property(u, ta.pair.strict, all_positions)) {
      throw PreconditionError("strict A relation lacks the subterm property at " + w->first.to_string());
    }
    if (auto w = subterm_property(u, ta.pair.weak, all_positions)) {
      throw PreconditionError("weak A relation lacks the subterm property at " + w->first.to_string());
    }
  }
  compare_all(rep, u, [&](const Term& s, const Term& t) {
    return gwpo_fast_gt(s, t, ta.pair, tb.pair) != gwpo_gt(s, t, ta.pair, tb.pair);
  });
  if (!rep.passed) rep.detail = "flat and recursive GWPO disagree";
  return rep;
}

namespace {

struct LawContext {
  std::vector<Term> u;
  std::vector<Substitution> subs;
  // one-hole contexts: symbol, hole position, full argument list with the
  // hole slot to be overwritten
  struct Ctx {
    Symbol f;
    std::size_t hole;
    TermList args;
  };
  std::vector<Ctx> ctxs;
};

LawContext make_law_context(const Signature& sig, const LawOptions& o) {
  LawContext lc;
  lc.u = enum_terms(sig, o.vars, o.max_size);
  std::vector<Term> small;
  for (const Term& t : lc.u) {
    if (t.size() <= 3) small.push_back(t);
  }
  std::mt19937 rng(o.seed);
  if (!small.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    for (std::size_t k = 0; k < o.substitutions; ++k) {
      Substitution s;
      for (const std::string& v : o.vars) s.insert_or_assign(v, small[pick(rng)]);
      lc.subs.push_back(std::move(s));
    }
  }
  const std::size_t cap = 20000;
  for (const Symbol& f : sig.symbols()) {
    for (std::size_t hole = 0; hole < f.arity; ++hole) {
      // fillers for the other positions range over the universe (odometer)
      std::vector<std::size_t> idx(f.arity, 0);
      while (lc.ctxs.size() < cap) {
        TermList args;
        for (std::size_t k = 0; k < f.arity; ++k) args.push_back(k == hole ? lc.u.front() : lc.u[idx[k]]);
        lc.ctxs.push_back({f, hole, std::move(args)});
        std::size_t k = f.arity;
        bool done = true;
        while (k > 0) {
          --k;
          if (k == hole) continue;
          if (++idx[k] < lc.u.size()) {
            done = false;
            break;
          }
          idx[k] = 0;
        }
        if (done) break;
      }
    }
  }
  return lc;
}

Term plug(const LawContext::Ctx& c, const Term& t) {
  TermList args = c.args;
  args[c.hole] = t;
  return Term::app(c.f, std::move(args));
}

std::vector<std::pair<std::size_t, std::size_t>> related(const std::vector<char>& m, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i * n + j]) out.emplace_back(i, j);
    }
  }
  return out;
}

class LawRunner {
 public:
  LawRunner(OracleReport& rep, const LawContext& lc) : rep_(rep), lc_(lc), n_(lc.u.size()) {}

  // false and a filled report on the first failure
  bool reflexive(const std::vector<char>& m, const std::string& name) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!m[i * n_ + i]) return fail(name + " is not reflexive", {lc_.u[i]});
    }
    return true;
  }

  bool irreflexive(const std::vector<char>& m, const std::string& name) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i * n_ + i]) return fail(name + " is not irreflexive", {lc_.u[i]});
    }
    return true;
  }

  // r1(s,t) and r2(t,u) imply out(s,u)
  bool composes(const std::vector<char>& r1, const std::vector<char>& r2, const std::vector<char>& out,
                const std::string& what) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!r1[i * n_ + j]) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          if (r2[j * n_ + k] && !out[i * n_ + k]) return fail(what, {lc_.u[i], lc_.u[j], lc_.u[k]});
        }
      }
    }
    return true;
  }

  bool subset(const std::vector<char>& a, const std::vector<char>& b, const std::string& what) {
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      if (a[k] && !b[k]) return fail(what, {lc_.u[k / n_], lc_.u[k % n_]});
    }
    return true;
  }

  bool acyclic(const std::vector<char>& m, const std::string& name) {
    std::vector<int> state(n_, 0);
    std::vector<std::size_t> path;
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
      state[v] = 1;
      path.push_back(v);
      for (std::size_t w = 0; w < n_; ++w) {
        if (!m[v * n_ + w]) continue;
        if (state[w] == 1) {
          std::vector<Term> cyc;
          auto it = std::find(path.begin(), path.end(), w);
          for (; it != path.end(); ++it) cyc.push_back(lc_.u[*it]);
          fail(name + " has a cycle", cyc);
          return false;
        }
        if (state[w] == 0 && !dfs(w)) return false;
      }
      state[v] = 2;
      path.pop_back();
      return true;
    };
    for (std::size_t v = 0; v < n_; ++v) {
      if (state[v] == 0 && !dfs(v)) return false;
    }
    return true;
  }

  bool stable(const std::vector<char>& m, const Relation& r, const std::string& name) {
    auto rel = related(m, n_);
    const std::size_t S = lc_.subs.size();
    std::size_t bad = least_failure(rel.size() * S, [&](std::size_t k) {
      const auto& [i, j] = rel[k / S];
      const Substitution& s = lc_.subs[k % S];
      return !r(apply_substitution(lc_.u[i], s), apply_substitution(lc_.u[j], s));
    });
    rep_.pairs_checked += rel.size() * S;
    if (bad == kNone) return true;
    const auto& [i, j] = rel[bad / S];
    const Substitution& s = lc_.subs[bad % S];
    std::string sub;
    for (const auto& [v, t] : s) sub += (sub.empty() ? "" : ", ") + v + " := " + t.to_string();
    return fail(name + " is not closed under {" + sub + "}", {lc_.u[i], lc_.u[j]});
  }

  bool monotone(const std::vector<char>& m, const Relation& r, const std::string& name) {
    auto rel = related(m, n_);
    const std::size_t C = lc_.ctxs.size();
    if (C == 0) return true;
    std::size_t bad = least_failure(rel.size() * C, [&](std::size_t k) {
      const auto& [i, j] = rel[k / C];
      const auto& c = lc_.ctxs[k % C];
      return !r(plug(c, lc_.u[i]), plug(c, lc_.u[j]));
    });
    rep_.pairs_checked += rel.size() * C;
    if (bad == kNone) return true;
    const auto& [i, j] = rel[bad / C];
    const auto& c = lc_.ctxs[bad % C];
    return fail(name + " is not closed under contexts", {lc_.u[i], lc_.u[j], plug(c, lc_.u[i]), plug(c, lc_.u[j])});
  }

 private:
  bool fail(const std::string& what, std::vector<Term> w) {
    rep_.passed = false;
    rep_.detail = what;
    rep_.witness = std::move(w);
    return false;
  }

  OracleReport& rep_;
  const LawContext& lc_;
  std::size_t n_;
};

}  // namespace

OracleReport check_reduction_order_laws(const Relation& gt, const Signature& sig,
                                        const LawOptions& o, const std::string& parameters) {
  OracleReport rep;
  rep.check = "order-laws";
  rep.parameters = parameters;
  LawContext lc = make_law_context(sig, o);
  std::vector<char> m = matrix(lc.u, gt);
  rep.pairs_checked = lc.u.size() * lc.u.size();
  LawRunner run(rep, lc);
  run.irreflexive(m, "strict") && run.composes(m, m, m, "strict is not transitive") &&
      run.acyclic(m, "strict") && run.stable(m, gt, "strict") && run.monotone(m, gt, "strict");
  return rep;
}

OracleReport check_reduction_pair_laws(const OrderPair& pair, const Signature& sig,
                                       const LawOptions& o, const std::string& parameters,
                                       const Relation& strict_within) {
  OracleReport rep;
  rep.check = "pair-laws";
  rep.parameters = parameters;
  LawContext lc = make_law_context(sig, o);
  std::vector<char> ge = matrix(lc.u, pair.weak);
  std::vector<char> gt = matrix(lc.u, pair.strict);
  std::vector<char> within = strict_within ? matrix(lc.u, strict_within) : ge;
  rep.pairs_checked = 2 * lc.u.size() * lc.u.size();
  LawRunner run(rep, lc);
  run.reflexive(ge, "weak") && run.composes(ge, ge, ge, "weak is not transitive") &&
      run.irreflexive(gt, "strict") && run.composes(gt, gt, gt, "strict is not transitive") &&
      run.acyclic(gt, "strict") && run.subset(gt, within, "strict is not contained in weak") &&
      run.composes(gt, ge, gt, "strict then weak is not strict") &&
      run.composes(ge, gt, gt, "weak then strict is not strict") &&
      run.stable(ge, pair.weak, "weak") && run.stable(gt, pair.strict, "strict") &&
      run.monotone(ge, pair.weak, "weak");
  return rep;
}

}  // namespace pathord
