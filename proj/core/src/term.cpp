#include "pathord/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pathord {

std::string Symbol::display() const {
  std::string s = name;
  if (tuple) s += '#';
  if (marked) s += '!';
  return s;
}

bool canonical_less(const Symbol& a, const Symbol& b) {
  return std::tie(a.arity, a.name, a.tuple, a.marked) <
         std::tie(b.arity, b.name, b.tuple, b.marked);
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t symbol_hash(const Symbol& f) {
  std::size_t h = std::hash<std::string>{}(f.name);
  h = mix(h, f.arity);
  h = mix(h, (f.tuple ? 2u : 0u) | (f.marked ? 1u : 0u));
  return h;
}

}  // namespace

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = mix(0x51ed27, std::hash<std::string>{}(name));
  n->var = std::move(name);
  n->ground = false;
  return Term(std::move(n));
}

Term Term::app(Symbol f, TermList args) {
  if (args.size() != f.arity) {
    throw std::invalid_argument("symbol " + f.display() + " expects " +
                                std::to_string(f.arity) + " arguments, got " +
                                std::to_string(args.size()));
  }
  auto n = std::make_shared<Node>();
  std::size_t h = symbol_hash(f);
  for (const Term& a : args) {
    h = mix(h, a.hash());
    n->size += a.size();
    n->depth = std::max(n->depth, a.depth() + 1);
    n->ground = n->ground && a.is_ground();
  }
  n->hash = h;
  n->sym = std::move(f);
  n->args = std::move(args);
  return Term(std::move(n));
}

const std::string& Term::var_name() const {
  if (!node_->is_var) throw std::logic_error("var_name() on application term");
  return node_->var;
}

const Symbol& Term::symbol() const {
  if (node_->is_var) throw std::logic_error("symbol() on variable " + node_->var);
  return node_->sym;
}

std::string Term::to_string() const {
  if (is_var()) return node_->var;
  std::string s = node_->sym.display();
  if (node_->args.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (i) s += ',';
    s += node_->args[i].to_string();
  }
  s += ')';
  return s;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  if (a.node_->is_var != b.node_->is_var) return false;
  if (a.node_->is_var) return a.node_->var == b.node_->var;
  return a.node_->sym == b.node_->sym && a.node_->args == b.node_->args;
}

bool operator<(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.is_var() != b.is_var()) return a.is_var();
  if (a.is_var()) return a.var_name() < b.var_name();
  if (a.symbol() != b.symbol()) return a.symbol() < b.symbol();
  return std::lexicographical_compare(a.args().begin(), a.args().end(),
                                      b.args().begin(), b.args().end());
}

std::string position_to_string(const Position& p) {
  if (p.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string Rule::to_string() const { return lhs.to_string() + " -> " + rhs.to_string(); }

Signature::Signature(std::initializer_list<Symbol> symbols) {
  for (const Symbol& f : symbols) add(f);
}

void Signature::add(const Symbol& f) {
  for (const Symbol& g : symbols_) {
    if (g.name == f.name && g.tuple == f.tuple && g.marked == f.marked) {
      if (g.arity != f.arity) {
        throw std::invalid_argument("symbol " + f.display() + " redeclared with a different arity");
      }
      return;
    }
  }
  symbols_.push_back(f);
}

bool Signature::contains(const Symbol& f) const {
  return std::find(symbols_.begin(), symbols_.end(), f) != symbols_.end();
}

std::optional<Symbol> Signature::find(const std::string& name) const {
  for (const Symbol& g : symbols_) {
    if (g.name == name && !g.tuple && !g.marked) return g;
  }
  return std::nullopt;
}

bool Signature::has_constant() const {
  return std::any_of(symbols_.begin(), symbols_.end(),
                     [](const Symbol& f) { return f.arity == 0; });
}

void Trs::validate() const {
  for (const Rule& r : rules) {
    if (r.lhs.is_var()) throw InvalidRule("variable left-hand side in " + r.to_string());
    std::vector<std::string> lv = variables(r.lhs);
    for (const std::string& v : variables(r.rhs)) {
      if (std::find(lv.begin(), lv.end(), v) == lv.end()) {
        throw InvalidRule("fresh variable " + v + " on right-hand side of " + r.to_string());
      }
    }
  }
}

Term apply_substitution(const Term& t, const Substitution& sigma) {
  if (t.is_var()) {
    auto it = sigma.find(t.var_name());
    return it == sigma.end() ? t : it->second;
  }
  if (t.is_ground()) return t;
  TermList args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(apply_substitution(a, sigma));
  return Term::app(t.symbol(), std::move(args));
}

namespace {

void collect_subterms(const Term& t, Position& pos,
                      std::vector<std::pair<Position, Term>>& out) {
  out.emplace_back(pos, t);
  if (t.is_var()) return;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    pos.push_back(i + 1);
    collect_subterms(t.arg(i), pos, out);
    pos.pop_back();
  }
}

}  // namespace

std::vector<std::pair<Position, Term>> subterms(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  Position pos;
  collect_subterms(t, pos, out);
  return out;
}

std::vector<std::pair<Position, Term>> proper_subterms(const Term& t) {
  auto all = subterms(t);
  all.erase(all.begin());
  return all;
}

bool is_valid_position(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p) {
    if (cur->is_var() || i == 0 || i > cur->arity()) return false;
    cur = &cur->arg(i - 1);
  }
  return true;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p) {
    if (cur->is_var() || i == 0 || i > cur->arity()) {
      throw std::out_of_range("invalid position " + position_to_string(p) + " in " + t.to_string());
    }
    cur = &cur->arg(i - 1);
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Position& p, std::size_t depth, const Term& u) {
  if (depth == p.size()) return u;
  std::size_t i = p[depth];
  if (t.is_var() || i == 0 || i > t.arity()) {
    throw std::out_of_range("invalid position " + position_to_string(p));
  }
  TermList args(t.args().begin(), t.args().end());
  args[i - 1] = replace_rec(args[i - 1], p, depth + 1, u);
  return Term::app(t.symbol(), std::move(args));
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.var_name()) == out.end()) out.push_back(t.var_name());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

void collect_symbols(const Term& t, std::set<Symbol>& out) {
  if (t.is_var()) return;
  out.insert(t.symbol());
  for (const Term& a : t.args()) collect_symbols(a, out);
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& u) {
  return replace_rec(t, p, 0, u);
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

bool occurs_in(const Term& needle, const Term& haystack) {
  if (needle == haystack) return true;
  if (haystack.is_var() || needle.size() >= haystack.size()) return false;
  for (const Term& a : haystack.args()) {
    if (occurs_in(needle, a)) return true;
  }
  return false;
}

std::set<Symbol> defined_symbols(const Trs& r) {
  std::set<Symbol> out;
  for (const Rule& rule : r.rules) {
    if (!rule.lhs.is_var()) out.insert(rule.lhs.symbol());
  }
  return out;
}

std::set<Symbol> function_symbols(const Term& t) {
  std::set<Symbol> out;
  collect_symbols(t, out);
  return out;
}

Term mark_root(const Term& t) {
  if (t.is_var()) throw std::invalid_argument("cannot mark the root of variable " + t.var_name());
  return Term::app(t.symbol().as_marked(), TermList(t.args().begin(), t.args().end()));
}

Term tuple_root(const Term& t) {
  if (t.is_var()) throw std::invalid_argument("cannot mark the root of variable " + t.var_name());
  return Term::app(t.symbol().as_tuple(), TermList(t.args().begin(), t.args().end()));
}

std::vector<Rule> dependency_pairs(const Trs& r) {
  std::set<Symbol> defined = defined_symbols(r);
  std::vector<Rule> out;
  for (const Rule& rule : r.rules) {
    if (rule.lhs.is_var()) continue;
    Term lhs_mark = tuple_root(rule.lhs);
    for (const auto& [pos, u] : subterms(rule.rhs)) {
      if (u.is_var() || !defined.contains(u.symbol())) continue;
      if (u.size() < rule.lhs.size() && occurs_in(u, rule.lhs)) continue;
      Rule pair{lhs_mark, tuple_root(u)};
      if (std::find(out.begin(), out.end(), pair) == out.end()) out.push_back(std::move(pair));
    }
  }
  return out;
}

}  // namespace pathord
