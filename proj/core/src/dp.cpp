#include "pathord/dp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pathord {

Obligation direct_obligation(const Trs& trs) {
  return Obligation{ObligationKind::direct, {}, trs.rules};
}

Obligation dp_obligation(const Trs& trs) {
  return Obligation{ObligationKind::dp, trs.rules, dependency_pairs(trs)};
}

ObligationVerdict check_obligation(const Obligation& ob, const Orienting& weak,
                                   const Orienting& strict) {
  ObligationVerdict v;
  v.success = true;
  auto run = [&](const std::vector<Rule>& rules, bool is_strict) {
    for (const Rule& r : rules) {
      RuleCheck c{r, is_strict, is_strict ? strict(r.lhs, r.rhs) : weak(r.lhs, r.rhs)};
      if (!c.result.holds && v.success) {
        v.success = false;
        v.first_failure = v.checks.size();
      }
      v.checks.push_back(std::move(c));
    }
  };
  run(ob.weak, false);
  run(ob.strict, true);
  return v;
}

namespace {

Orienting lift(const Relation& r) {
  return [r](const Term& s, const Term& t) { return Orientation{r(s, t), {}}; };
}

}  // namespace

ObligationVerdict check_direct(const Trs& trs, const Relation& gt) {
  return check_obligation(direct_obligation(trs), lift(gt), lift(gt));
}

ObligationVerdict check_dp(const Trs& trs, const Relation& ge, const Relation& gt) {
  return check_obligation(dp_obligation(trs), lift(ge), lift(gt));
}

std::vector<std::vector<std::size_t>> scc_split(const Trs& trs, const std::vector<Rule>& pairs) {
  std::set<Symbol> defined = defined_symbols(trs);
  const std::size_t n = pairs.size();
  auto connected = [&](const Rule& p, const Rule& q) {
    const Term& r = p.rhs;
    const Term& l = q.lhs;
    if (r.is_var() || l.is_var() || r.symbol() != l.symbol()) return false;
    for (std::size_t i = 0; i < r.arity(); ++i) {
      const Term& ri = r.arg(i);
      const Term& li = l.arg(i);
      if (ri.is_var() || li.is_var()) continue;
      if (ri.symbol() != li.symbol() && !defined.contains(ri.symbol().unmarked())) return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (connected(pairs[i], pairs[j])) succ[i].push_back(j);
    }
  }

  // Tarjan
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : succ[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      bool cyclic = comp.size() > 1 ||
                    std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
      if (cyclic) comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<Obligation> scc_obligations(const Trs& trs) {
  std::vector<Rule> pairs = dependency_pairs(trs);
  std::vector<Obligation> out;
  for (const auto& comp : scc_split(trs, pairs)) {
    Obligation ob{ObligationKind::dp, trs.rules, {}};
    for (std::size_t i : comp) ob.strict.push_back(pairs[i]);
    out.push_back(std::move(ob));
  }
  return out;
}

}  // namespace pathord
