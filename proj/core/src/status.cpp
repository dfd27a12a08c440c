#include "pathord/status.hpp"

namespace pathord {

void Status::set(const Symbol& f, std::vector<std::size_t> positions) {
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] < 1 || positions[k] > f.arity) {
      throw std::invalid_argument("status position " + std::to_string(positions[k]) +
                                  " out of range for " + f.display());
    }
    if (k > 0 && positions[k - 1] >= positions[k]) {
      throw std::invalid_argument("status of " + f.display() + " is not strictly increasing");
    }
  }
  entries_.insert_or_assign(f, std::move(positions));
}

std::vector<std::size_t> Status::positions(const Symbol& f) const {
  auto it = entries_.find(f);
  if (it != entries_.end()) return it->second;
  if (!default_total_) throw UnassignedSymbol(f, "status");
  std::vector<std::size_t> all(f.arity);
  for (std::size_t i = 0; i < f.arity; ++i) all[i] = i + 1;
  return all;
}

std::vector<Term> Status::project(const Term& t) const {
  std::vector<Term> out;
  for (std::size_t i : positions(t.symbol())) out.push_back(t.arg(i - 1));
  return out;
}

bool Status::is_total_for(const Symbol& f) const {
  return positions(f).size() == f.arity;
}

bool Status::is_total() const {
  if (!default_total_) return false;
  for (const auto& [f, ps] : entries_) {
    if (ps.size() != f.arity) return false;
  }
  return true;
}

}  // namespace pathord
