#pragma once

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "pathord/ari.hpp"
#include "pathord/instances.hpp"
#include "pathord/term.hpp"

namespace th {

using namespace pathord;

// Applicative term over `sig`; '#' and '!' suffixes select tuple and marked symbols.
inline Term T(const std::string& s, const Signature& sig) { return parse_term(s, sig); }

inline Signature pred_sig() { return instances::predecessor_trs().signature; }
inline Signature z08_sig() { return instances::zantema_trs().signature; }
inline Signature dflt_sig() { return Signature{Symbol("f", 2), Symbol("g", 1), Symbol("a", 0), Symbol("b", 0)}; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Trs corpus(const std::string& name) {
  return parse_ari(slurp(std::string(PATHORD_CORPUS_DIR) + "/" + name));
}

}  // namespace th
