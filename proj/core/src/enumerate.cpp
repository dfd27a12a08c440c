#include "pathord/enumerate.hpp"

#include <functional>

namespace pathord {

namespace {

// Compositions of `total` into `parts` positive summands, lexicographic.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::size_t k = 1; k + (parts - 1) <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Term>> enum_terms_by_size(const Signature& sig,
                                                  const std::vector<std::string>& vars,
                                                  std::size_t max_size) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size == 0) return by_size;
  for (const Symbol& f : sig.symbols()) {
    if (f.arity == 0) by_size[1].push_back(Term::app(f));
  }
  for (const std::string& v : vars) by_size[1].push_back(Term::var(v));

  for (std::size_t k = 2; k <= max_size; ++k) {
    for (const Symbol& f : sig.symbols()) {
      if (f.arity == 0) continue;
      std::vector<std::vector<std::size_t>> comps;
      std::vector<std::size_t> cur;
      compositions(k - 1, f.arity, cur, comps);
      for (const auto& comp : comps) {
        TermList args;
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
          if (i == f.arity) {
            by_size[k].push_back(Term::app(f, args));
            return;
          }
          for (const Term& t : by_size[comp[i]]) {
            args.push_back(t);
            fill(i + 1);
            args.pop_back();
          }
        };
        fill(0);
      }
    }
  }
  return by_size;
}

std::vector<Term> enum_terms(const Signature& sig, const std::vector<std::string>& vars,
                             std::size_t max_size) {
  std::vector<Term> out;
  for (auto& level : enum_terms_by_size(sig, vars, max_size)) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace pathord
