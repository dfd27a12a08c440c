#pragma once

#include <string>
#include <vector>

#include "pathord/term.hpp"

namespace pathord {

// All terms over `sig` and `vars` with at most `max_size` symbol and variable
// occurrences, without duplicates. Ordered by size; size-1 terms list the
// constants (signature order) before the variables; larger terms follow the
// signature order, then argument sizes lexicographically, then argument order.
std::vector<Term> enum_terms(const Signature& sig, const std::vector<std::string>& vars,
                             std::size_t max_size);

// Terms of exactly the given size, same order as enum_terms.
std::vector<std::vector<Term>> enum_terms_by_size(const Signature& sig,
                                                  const std::vector<std::string>& vars,
                                                  std::size_t max_size);

}  // namespace pathord
