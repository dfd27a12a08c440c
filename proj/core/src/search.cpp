#include "pathord/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace pathord {

std::string_view to_string(Template t) {
  switch (t) {
    case Template::wpo: return "wpo";
    case Template::gwpo: return "gwpo";
    case Template::spo: return "spo";
    case Template::mgwpo_direct: return "mgwpo-direct";
    case Template::kbo_like: return "kbo-like";
  }
  return "?";
}

std::optional<Template> parse_template(std::string_view s) {
  for (Template t : {Template::wpo, Template::gwpo, Template::spo, Template::mgwpo_direct,
                     Template::kbo_like}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

bool is_direct(Template t) { return t == Template::mgwpo_direct || t == Template::kbo_like; }
bool uses_precedence(Template t) { return t == Template::wpo || t == Template::kbo_like; }
bool uses_max_plus(Template t) {
  return t == Template::gwpo || t == Template::spo || t == Template::mgwpo_direct;
}
bool uses_status(Template t) { return !is_direct(t); }

bool operator==(const Certificate& x, const Certificate& y) {
  return x.tmpl == y.tmpl && x.a == y.a && x.b == y.b &&
         x.status.entries() == y.status.entries() && x.status.is_total() == y.status.is_total() &&
         x.precedence == y.precedence;
}

SearchSpace SearchSpace::defaults(Template t) {
  SearchSpace s;
  s.tmpl = t;
  return s;
}

bool SearchSpace::contains(const Certificate& cert) const {
  if (cert.tmpl != tmpl) return false;
  auto in = [](const auto& v, auto x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  auto check_alg = [&](const Interpretation& alg) {
    for (const auto& [f, fi] : alg.entries()) {
      if (const auto* p = std::get_if<LinearPoly>(&fi)) {
        if (p->constant > max_const) return false;
        for (Natural c : p->coeffs) {
          if (!in(linear_coeffs, c)) return false;
        }
      } else {
        const auto& m = std::get<MaxPlus>(fi);
        if (m.base > max_const) return false;
        for (const auto& a : m.args) {
          if (!in(offsets, a.offset)) return false;
        }
      }
    }
    return true;
  };
  if (cert.a.kind() != AlgebraKind::linear || !check_alg(cert.a)) return false;
  if (cert.b && !check_alg(*cert.b)) return false;
  if (!all_statuses && !cert.status.is_total()) return false;
  return true;
}

Deadline Deadline::after(std::chrono::duration<double> d) {
  Deadline r;
  r.at_ = std::chrono::steady_clock::now() +
          std::chrono::duration_cast<std::chrono::steady_clock::duration>(d);
  return r;
}

bool Deadline::expired() const {
  return at_ && std::chrono::steady_clock::now() >= *at_;
}

namespace {

struct Params {
  std::shared_ptr<const Interpretation> a;
  std::shared_ptr<const Interpretation> b;
  std::shared_ptr<const Status> status;
  std::shared_ptr<const Precedence> prec;
};

// The relations a template induces from (possibly partial) parameters.
// Weak and strict orientation are conjunctions of parts; the last part is
// always the path order.
struct Setup {
  std::vector<Relation> weak_parts;
  std::vector<Relation> strict_parts;
  std::function<std::string(const Term&, const Term&, bool)> chain;
  std::function<ComparisonStats(const Term&, const Term&)> stats;
};

Setup make_setup(Template t, const Params& p) {
  Setup s;
  auto st = p.status;
  switch (t) {
    case Template::wpo:
    case Template::gwpo: {
      ReductionTriple ta = triple_from_algebra(p.a);
      ReductionTriple tb = t == Template::wpo ? triple_from_precedence(p.prec) : marked_triple(p.b);
      OrderPair pa = ta.pair, pb = tb.pair;
      auto make = [st, pa, pb]() { return GwpoPairComparator(*st, pa, pb); };
      s.weak_parts.push_back(ta.preorder);
      if (t == Template::gwpo) s.weak_parts.push_back(tb.preorder);
      s.weak_parts.push_back([make](const Term& l, const Term& r) { auto c = make(); return c.compare(l, r).weak; });
      s.strict_parts.push_back([make](const Term& l, const Term& r) { auto c = make(); return c.compare(l, r).strict; });
      s.chain = [make](const Term& l, const Term& r, bool strict) {
        auto c = make();
        c.compare(l, r);
        return c.case_chain(l, r, strict);
      };
      s.stats = [make](const Term& l, const Term& r) {
        auto c = make();
        c.compare(l, r);
        return c.stats();
      };
      break;
    }
    case Template::spo: {
      ReductionTriple ta = marked_triple(p.a), tb = marked_triple(p.b);
      OrderPair pp = combine_triples(ta, tb).pair;
      auto make = [st, pp]() { return SpoPairComparator(*st, pp); };
      // the combined preorder, split so the A half can prune on its own
      s.weak_parts.push_back(ta.preorder);
      s.weak_parts.push_back(tb.preorder);
      s.weak_parts.push_back([make](const Term& l, const Term& r) { auto c = make(); return c.compare(l, r).weak; });
      s.strict_parts.push_back([make](const Term& l, const Term& r) { auto c = make(); return c.compare(l, r).strict; });
      s.chain = [make](const Term& l, const Term& r, bool strict) {
        auto c = make();
        c.compare(l, r);
        return c.case_chain(l, r, strict);
      };
      s.stats = [make](const Term& l, const Term& r) {
        auto c = make();
        c.compare(l, r);
        return c.stats();
      };
      break;
    }
    case Template::mgwpo_direct:
    case Template::kbo_like: {
      ReductionTriple ta = triple_from_algebra(p.a);
      ReductionTriple tb =
          t == Template::kbo_like ? triple_from_precedence(p.prec) : triple_from_algebra(p.b);
      OrderPair pa = ta.pair, pb = tb.pair;
      s.strict_parts.push_back(ta.preorder);
      if (t == Template::mgwpo_direct) s.strict_parts.push_back(tb.preorder);
      if (t == Template::kbo_like) {
        auto make = [pa, pb]() { return FastGwpoComparator(pa, pb); };
        s.strict_parts.push_back([make](const Term& l, const Term& r) { auto c = make(); return c.greater(l, r); });
        s.chain = [make](const Term& l, const Term& r, bool) {
          auto c = make();
          c.greater(l, r);
          return c.case_chain(l, r, true);
        };
        s.stats = [make](const Term& l, const Term& r) {
          auto c = make();
          c.greater(l, r);
          return c.stats();
        };
      } else {
        auto make = [pa, pb]() { return GwpoComparator(pa, pb); };
        s.strict_parts.push_back([make](const Term& l, const Term& r) { auto c = make(); return c.greater(l, r); });
        s.chain = [make](const Term& l, const Term& r, bool) {
          auto c = make();
          c.greater(l, r);
          return c.case_chain(l, r, true);
        };
        s.stats = [make](const Term& l, const Term& r) {
          auto c = make();
          c.greater(l, r);
          return c.stats();
        };
      }
      // s = t on the weak side of a reduction order
      s.weak_parts.push_back([strict = s.strict_parts](const Term& l, const Term& r) {
        if (l == r) return true;
        return std::all_of(strict.begin(), strict.end(), [&](const Relation& q) { return q(l, r); });
      });
      break;
    }
  }
  return s;
}

// Per-symbol hypothesis of the template; throws UnassignedSymbol while the
// needed parameters are missing.
bool hypothesis_at(Template t, const Params& p, const Symbol& f) {
  switch (t) {
    case Template::wpo:
    case Template::gwpo: return simple_at(*p.a, f, p.status->positions(f));
    case Template::mgwpo_direct: return simple_at(*p.a, f, Status::total().positions(f));
    case Template::kbo_like:
      return simple_at(*p.a, f, Status::total().positions(f)) && strictly_simple_at(*p.a, f);
    case Template::spo: return true;
  }
  return true;
}

bool has_hypotheses(Template t) { return t != Template::spo; }

struct Needs {
  std::set<Symbol> a, b, status, prec;
};

Needs needed_symbols(Template t, const Obligation& ob) {
  std::set<Symbol> roots, weak_syms, below_root;
  auto scan = [&](const Term& term, bool weak) {
    for (const auto& [pos, u] : subterms(term)) {
      if (u.is_var()) continue;
      roots.insert(u.symbol());
      if (weak) weak_syms.insert(u.symbol());
      if (!pos.empty()) below_root.insert(u.symbol());
    }
  };
  for (const Rule& r : ob.weak) {
    scan(r.lhs, true);
    scan(r.rhs, true);
  }
  for (const Rule& r : ob.strict) {
    scan(r.lhs, false);
    scan(r.rhs, false);
  }
  std::set<Symbol> marked = weak_syms;
  marked.insert(below_root.begin(), below_root.end());
  for (const Symbol& f : roots) marked.insert(f.as_marked());
  std::set<Symbol> with_args;
  for (const Symbol& f : roots) {
    if (f.arity > 0) with_args.insert(f);
  }

  Needs n;
  switch (t) {
    case Template::wpo: n.a = roots; n.status = with_args; n.prec = roots; break;
    case Template::gwpo: n.a = roots; n.status = with_args; n.b = marked; break;
    case Template::spo: n.a = marked; n.b = marked; n.status = with_args; break;
    case Template::mgwpo_direct: n.a = roots; n.b = roots; break;
    case Template::kbo_like: n.a = roots; n.prec = roots; break;
  }
  return n;
}

std::vector<Symbol> canonical(const std::set<Symbol>& s) {
  std::vector<Symbol> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

enum class Group { a, status, b, rank };

struct Block {
  Group group;
  Symbol sym;
  std::vector<LinearPoly> lin;
  std::vector<MaxPlus> mp;
  std::vector<std::vector<std::size_t>> st;
  unsigned ranks = 0;

  std::size_t size() const {
    switch (group) {
      case Group::a: return lin.size();
      case Group::status: return st.size();
      case Group::b: return mp.size();
      case Group::rank: return ranks;
    }
    return 0;
  }
};

std::vector<LinearPoly> linear_domain(const Symbol& f, const SearchSpace& sp) {
  std::vector<LinearPoly> out;
  std::vector<std::size_t> idx(f.arity, 0);
  for (Natural c0 = 0; c0 <= sp.max_const; ++c0) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      LinearPoly p{c0, {}};
      for (std::size_t i : idx) p.coeffs.push_back(sp.linear_coeffs[i]);
      out.push_back(std::move(p));
      std::size_t k = f.arity;
      while (k > 0 && ++idx[k - 1] == sp.linear_coeffs.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

// Inactive arguments only contribute a constant, which the base subsumes, so
// they are enumerated with offset 0 only.
std::vector<MaxPlus> max_plus_domain(const Symbol& f, const SearchSpace& sp) {
  std::vector<MaxPlus::Arg> choices{{false, 0}};
  std::vector<std::int64_t> offs = sp.offsets;
  std::sort(offs.begin(), offs.end());
  for (std::int64_t c : offs) choices.push_back({true, c});
  std::vector<MaxPlus> out;
  std::vector<std::size_t> idx(f.arity, 0);
  for (Natural c0 = 0; c0 <= sp.max_const; ++c0) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      MaxPlus m{c0, {}};
      for (std::size_t i : idx) m.args.push_back(choices[i]);
      out.push_back(std::move(m));
      std::size_t k = f.arity;
      while (k > 0 && ++idx[k - 1] == choices.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

bool is_zero(const MaxPlus& m) {
  if (m.base != 0) return false;
  return std::all_of(m.args.begin(), m.args.end(),
                     [](const MaxPlus::Arg& a) { return !a.active && a.offset <= 0; });
}

// Sublists of 1..n, longest first, then lexicographic.
std::vector<std::vector<std::size_t>> status_domain(std::size_t n, bool all) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = i + 1;
  if (!all) return {full};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return out;
}

struct Plan {
  Template tmpl;
  const Obligation* problem;
  std::vector<Block> blocks;
  std::vector<Symbol> hyp_symbols;
  std::set<Symbol> constants_with_status;
  std::size_t b_blocks = 0;
};

Plan make_plan(const Obligation& ob, const SearchSpace& sp) {
  Plan plan;
  plan.tmpl = sp.tmpl;
  plan.problem = &ob;
  Needs n = needed_symbols(sp.tmpl, ob);
  for (const Symbol& f : canonical(n.a)) {
    plan.blocks.push_back(Block{Group::a, f, linear_domain(f, sp), {}, {}, 0});
  }
  for (const Symbol& f : canonical(n.status)) {
    plan.blocks.push_back(Block{Group::status, f, {}, {}, status_domain(f.arity, sp.all_statuses), 0});
  }
  for (const Symbol& f : canonical(n.b)) {
    plan.blocks.push_back(Block{Group::b, f, {}, max_plus_domain(f, sp), {}, 0});
    ++plan.b_blocks;
  }
  auto prec = canonical(n.prec);
  for (const Symbol& f : prec) {
    plan.blocks.push_back(Block{Group::rank, f, {}, {}, {}, static_cast<unsigned>(prec.size())});
  }
  if (has_hypotheses(sp.tmpl)) plan.hyp_symbols = canonical(n.a);
  return plan;
}

struct Constraint {
  std::function<bool()> eval;
  std::vector<std::size_t> checkpoints;  // depths at which evaluation is attempted
  int decided_at = -1;
  // Block the last undecided evaluation stopped at. Evaluation is skipped
  // while it is unassigned; this only delays decisions, since every block is
  // assigned by the final checkpoint.
  std::optional<std::size_t> blocker;
};

// All state one search thread mutates.
class Worker {
 public:
  Worker(const Plan& plan, const Deadline& deadline, std::atomic<std::size_t>& best,
         std::atomic<bool>& timed_out)
      : plan_(plan), deadline_(deadline), best_(best), timed_out_(timed_out) {
    a_ = std::make_shared<Interpretation>(AlgebraKind::linear);
    b_ = std::make_shared<Interpretation>(AlgebraKind::max_plus);
    status_ = std::make_shared<Status>(Status::closed());
    prec_ = std::make_shared<Precedence>();
    // constants never have a choice of status
    for (const auto& r : all_rules()) {
      for (const Term* side : {&r->lhs, &r->rhs}) {
        for (const auto& [pos, u] : subterms(*side)) {
          if (!u.is_var() && u.arity() == 0) status_->set(u.symbol(), {});
        }
      }
    }
    Params p{a_, b_, status_, prec_};
    setup_ = make_setup(plan_.tmpl, p);
    build_constraints(p);
    at_depth_.resize(plan_.blocks.size());
    assigned_.assign(plan_.blocks.size(), false);
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      for (std::size_t d : constraints_[i].checkpoints) at_depth_[d].push_back(i);
    }
  }

  // Explores the subtree with the first block fixed to `v0`, in phase `k`
  // (or with no support restriction when the template has no max/plus B).
  bool run(std::size_t v0, std::size_t k, std::size_t& nodes) {
    phase_ = k;
    my_index_ = v0;
    nodes_ = 0;
    bool ok = plan_.blocks.empty() ? leaf_ok() : try_value(0, v0);
    nodes = nodes_;
    return ok;
  }

  Certificate snapshot() const {
    Certificate c;
    c.tmpl = plan_.tmpl;
    c.a = *a_;
    if (uses_max_plus(plan_.tmpl)) c.b = *b_;
    Status st = Status::total();
    for (const auto& [f, ps] : status_->entries()) {
      if (uses_status(plan_.tmpl) && f.arity > 0) st.set(f, ps);
    }
    c.status = st;
    if (uses_precedence(plan_.tmpl)) c.precedence = *prec_;
    return c;
  }

  bool aborted() const { return aborted_; }

 private:
  std::vector<const Rule*> all_rules() const {
    std::vector<const Rule*> v;
    for (const Rule& r : plan_.problem->weak) v.push_back(&r);
    for (const Rule& r : plan_.problem->strict) v.push_back(&r);
    return v;
  }

  // Last block of each group that mentions one of `syms` (or its mark).
  std::vector<std::size_t> checkpoints_for(const std::set<Symbol>& syms) const {
    std::map<Group, std::size_t> last;
    for (std::size_t i = 0; i < plan_.blocks.size(); ++i) {
      const Block& bl = plan_.blocks[i];
      if (syms.contains(bl.sym) || syms.contains(bl.sym.unmarked())) last[bl.group] = i;
    }
    std::vector<std::size_t> out;
    for (const auto& [g, i] : last) out.push_back(i);
    std::sort(out.begin(), out.end());
    if (out.empty()) out.push_back(0);
    return out;
  }

  void build_constraints(const Params& p) {
    for (const Symbol& f : plan_.hyp_symbols) {
      Template t = plan_.tmpl;
      constraints_.push_back({[t, p, f] { return hypothesis_at(t, p, f); },
                              checkpoints_for({f}), -1, std::nullopt});
    }
    auto add_rule = [&](const Rule& r, const std::vector<Relation>& parts) {
      std::set<Symbol> syms;
      for (const Term* side : {&r.lhs, &r.rhs}) {
        for (const auto& [pos, u] : subterms(*side)) {
          if (!u.is_var()) syms.insert(u.symbol());
        }
      }
      for (const Relation& q : parts) {
        Term l = r.lhs, rr = r.rhs;
        constraints_.push_back({[q, l, rr] { return q(l, rr); }, checkpoints_for(syms), -1, std::nullopt});
      }
    };
    for (const Rule& r : plan_.problem->weak) add_rule(r, setup_.weak_parts);
    for (const Rule& r : plan_.problem->strict) add_rule(r, setup_.strict_parts);
  }

  void assign(std::size_t d, std::size_t v) {
    assigned_[d] = true;
    const Block& bl = plan_.blocks[d];
    switch (bl.group) {
      case Group::a: a_->set(bl.sym, bl.lin[v]); break;
      case Group::status: status_->set(bl.sym, bl.st[v]); break;
      case Group::b: b_->set(bl.sym, bl.mp[v]); break;
      case Group::rank: prec_->set(bl.sym, static_cast<unsigned>(v)); break;
    }
  }

  void unassign(std::size_t d) {
    assigned_[d] = false;
    const Block& bl = plan_.blocks[d];
    switch (bl.group) {
      case Group::a: a_->erase(bl.sym); break;
      case Group::status: status_->erase(bl.sym); break;
      case Group::b: b_->erase(bl.sym); break;
      case Group::rank: prec_->erase(bl.sym); break;
    }
  }

  void undo(std::size_t d) {
    for (Constraint& c : constraints_) {
      if (c.decided_at == static_cast<int>(d)) c.decided_at = -1;
    }
  }

  // Evaluates the constraints scheduled at depth d; false on a violation.
  bool propagate(std::size_t d) {
    for (std::size_t i : at_depth_[d]) {
      Constraint& c = constraints_[i];
      if (c.decided_at >= 0) continue;
      bool last = c.checkpoints.back() == d;
      if (!last && c.blocker && !assigned_[*c.blocker]) continue;
      try {
        if (!c.eval()) return false;
        c.decided_at = static_cast<int>(d);
      } catch (const UnassignedSymbol& e) {
        if (last) return false;
        c.blocker = first_unassigned(e.symbol());
      }
    }
    return true;
  }

  std::optional<std::size_t> first_unassigned(const Symbol& f) const {
    for (std::size_t i = 0; i < plan_.blocks.size(); ++i) {
      if (!assigned_[i] && plan_.blocks[i].sym == f) return i;
    }
    return std::nullopt;
  }

  bool leaf_ok() const {
    // ranks in use must be 0..m-1 so each total preorder appears once
    if (!prec_->ranks().empty()) {
      std::set<unsigned> used;
      for (const auto& [f, r] : prec_->ranks()) used.insert(r);
      if (*used.rbegin() + 1 != used.size()) return false;
    }
    if (plan_.b_blocks > 0 && support_ != phase_) return false;
    return true;
  }

  bool stop() {
    if (best_.load(std::memory_order_relaxed) < my_index_) {
      aborted_ = true;
      return true;
    }
    if ((nodes_ & 63) == 0 && deadline_.expired()) {
      timed_out_ = true;
      aborted_ = true;
      return true;
    }
    return false;
  }

  bool try_value(std::size_t d, std::size_t v) {
    ++nodes_;
    if (stop()) return false;
    const Block& bl = plan_.blocks[d];
    bool nonzero = bl.group == Group::b && !is_zero(bl.mp[v]);
    if (nonzero && support_ + 1 > phase_) return false;
    if (bl.group == Group::b) {
      ++b_seen_;
      if (nonzero) ++support_;
    }
    assign(d, v);
    bool ok = false;
    bool reachable = bl.group != Group::b ||
                     support_ + (plan_.b_blocks - b_seen_) >= phase_;
    if (reachable && propagate(d)) {
      ok = d + 1 == plan_.blocks.size() ? leaf_ok() : descend(d + 1);
    }
    if (!ok) {
      undo(d);
      unassign(d);
      if (bl.group == Group::b) {
        --b_seen_;
        if (nonzero) --support_;
      }
    }
    return ok;
  }

  bool descend(std::size_t d) {
    const Block& bl = plan_.blocks[d];
    // with the support used up only the zero interpretation (first) remains
    const std::size_t n = bl.group == Group::b && support_ >= phase_ ? 1 : bl.size();
    for (std::size_t v = 0; v < n; ++v) {
      if (try_value(d, v)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  const Plan& plan_;
  const Deadline& deadline_;
  std::atomic<std::size_t>& best_;
  std::atomic<bool>& timed_out_;
  std::shared_ptr<Interpretation> a_, b_;
  std::shared_ptr<Status> status_;
  std::shared_ptr<Precedence> prec_;
  Setup setup_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> at_depth_;
  std::vector<bool> assigned_;
  std::size_t phase_ = 0, support_ = 0, b_seen_ = 0;
  std::size_t my_index_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult find_certificate(const Obligation& problem, const SearchSpace& space,
                              const Deadline& deadline) {
  auto start = std::chrono::steady_clock::now();
  SearchResult result;
  Plan plan = make_plan(problem, space);
  const std::size_t first_size = plan.blocks.empty() ? 1 : plan.blocks[0].size();
  const std::size_t phases = plan.b_blocks > 0 ? plan.b_blocks + 1 : 1;
  const std::size_t jobs = std::max<std::size_t>(1, space.jobs);
  std::atomic<bool> timed_out{false};
  std::size_t total_nodes = 0;

  for (std::size_t k = 0; k < phases && !result.certificate; ++k) {
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<Certificate> found;
    auto work = [&] {
      std::size_t local_nodes = 0;
      while (true) {
        std::size_t v = next.fetch_add(1);
        if (v >= first_size || v > best.load() || timed_out.load()) break;
        std::size_t n = 0;
        Worker fresh(plan, deadline, best, timed_out);
        bool ok = fresh.run(v, plan.b_blocks > 0 ? k : 0, n);
        local_nodes += n;
        if (ok) {
          std::lock_guard<std::mutex> lock(mu);
          if (v < best.load()) {
            best = v;
            found = fresh.snapshot();
          }
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      total_nodes += local_nodes;
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> threads;
      for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(work);
      for (auto& th : threads) th.join();
    }
    if (found) result.certificate = std::move(found);
    if (timed_out && !result.certificate) break;
  }

  result.nodes = total_nodes;
  if (result.certificate) {
    VerifyReport rep = verify_certificate(problem, *result.certificate);
    if (!rep.ok) {
      throw std::logic_error("search produced a certificate that fails verification: " +
                             (rep.failures.empty() ? std::string("?") : rep.failures.front()));
    }
    result.outcome = SearchResult::Outcome::found;
  } else {
    result.outcome = timed_out ? SearchResult::Outcome::timeout : SearchResult::Outcome::exhausted;
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

Params params_of(const Certificate& cert) {
  Params p;
  p.a = std::make_shared<const Interpretation>(cert.a);
  if (uses_max_plus(cert.tmpl)) {
    if (!cert.b) throw CertificateError("certificate lacks the B interpretation");
    p.b = std::make_shared<const Interpretation>(*cert.b);
  }
  p.status = std::make_shared<const Status>(cert.status);
  if (uses_precedence(cert.tmpl)) {
    if (!cert.precedence) throw CertificateError("certificate lacks the precedence");
    p.prec = std::make_shared<const Precedence>(*cert.precedence);
  }
  return p;
}

Orientation conj(const std::vector<Relation>& parts, const Setup& s, const Term& l, const Term& r,
                 bool strict) {
  for (const Relation& q : parts) {
    if (!q(l, r)) return {false, {}};
  }
  if (!strict && l == r) return {true, "refl"};
  return {true, s.chain(l, r, strict)};
}

InducedOrder induced_from(Template t, const Params& p) {
  auto s = std::make_shared<Setup>(make_setup(t, p));
  InducedOrder o;
  o.weak = [s](const Term& l, const Term& r) { return conj(s->weak_parts, *s, l, r, false); };
  o.strict = [s](const Term& l, const Term& r) { return conj(s->strict_parts, *s, l, r, true); };
  o.stats = [s](const Term& l, const Term& r) { return s->stats(l, r); };
  return o;
}

}  // namespace

InducedOrder induced_order(const Certificate& cert) {
  return induced_from(cert.tmpl, params_of(cert));
}

VerifyReport verify_certificate(const Obligation& problem, const Certificate& cert) {
  Params p = params_of(cert);
  Needs n = needed_symbols(cert.tmpl, problem);
  for (const Symbol& f : n.a) {
    if (!cert.a.contains(f)) throw CertificateError("no A interpretation for " + f.display());
  }
  for (const Symbol& f : n.b) {
    if (!cert.b->contains(f)) throw CertificateError("no B interpretation for " + f.display());
  }
  for (const Symbol& f : n.prec) {
    if (!cert.precedence->contains(f)) throw CertificateError("no precedence for " + f.display());
  }
  if (cert.a.kind() != AlgebraKind::linear) throw CertificateError("A must be linear");
  if (cert.b && cert.b->kind() != AlgebraKind::max_plus) throw CertificateError("B must be max/plus");

  VerifyReport rep;
  if (has_hypotheses(cert.tmpl)) {
    for (const auto& [f, fi] : cert.a.entries()) {
      if (!hypothesis_at(cert.tmpl, p, f)) {
        rep.failures.push_back(cert.tmpl == Template::kbo_like
                                   ? "A is not strictly simple at " + f.display()
                                   : "A is not simple at " + f.display());
      }
    }
  }
  InducedOrder o = induced_from(cert.tmpl, p);
  rep.verdict = check_obligation(problem, o.weak, o.strict);
  for (const RuleCheck& c : rep.verdict.checks) {
    if (!c.result.holds) {
      rep.failures.push_back(std::string(c.strict ? "not strictly oriented: " : "not weakly oriented: ") +
                             c.rule.to_string());
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace pathord
