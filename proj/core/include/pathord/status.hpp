#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathord/term.hpp"

namespace pathord {

// Raised when a partial parameter assignment is consulted for a symbol that
// has not been assigned yet. The search relies on it to decide constraints
// from partial assignments; everywhere else it means the caller forgot a
// symbol.
class UnassignedSymbol : public std::out_of_range {
 public:
  explicit UnassignedSymbol(const Symbol& f, const std::string& what)
      : std::out_of_range(what + ": no entry for " + f.display()), symbol_(f) {}
  const Symbol& symbol() const { return symbol_; }

 private:
  Symbol symbol_;
};

// Partial argument status: each symbol maps to a strictly increasing list of
// 1-based argument positions. Symbols without an entry are total unless the
// status is closed, in which case looking them up throws UnassignedSymbol.
class Status {
 public:
  static Status total() { return Status(); }
  static Status closed() {
    Status s;
    s.default_total_ = false;
    return s;
  }

  void set(const Symbol& f, std::vector<std::size_t> positions);
  void erase(const Symbol& f) { entries_.erase(f); }
  std::vector<std::size_t> positions(const Symbol& f) const;
  bool has_entry(const Symbol& f) const { return entries_.contains(f); }

  // pi(f)(t1..tn) for t = f(t1..tn).
  std::vector<Term> project(const Term& t) const;

  bool is_total() const;
  bool is_total_for(const Symbol& f) const;
  const std::map<Symbol, std::vector<std::size_t>>& entries() const { return entries_; }

 private:
  std::map<Symbol, std::vector<std::size_t>> entries_;
  bool default_total_ = true;
};

}  // namespace pathord
