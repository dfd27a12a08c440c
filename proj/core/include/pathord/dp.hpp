#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathord/term.hpp"
#include "pathord/triples.hpp"

namespace pathord {

enum class ObligationKind { direct, dp };

// Rules to orient weakly and rules to orient strictly. Direct obligations
// have an empty weak set; dp obligations carry tuple-rooted pairs in the
// strict set only.
struct Obligation {
  ObligationKind kind = ObligationKind::direct;
  std::vector<Rule> weak;
  std::vector<Rule> strict;
};

Obligation direct_obligation(const Trs& trs);
Obligation dp_obligation(const Trs& trs);

struct Orientation {
  bool holds = false;
  std::string case_chain;
};

using Orienting = std::function<Orientation(const Term&, const Term&)>;

struct RuleCheck {
  Rule rule;
  bool strict = false;  // which side of the obligation the rule belongs to
  Orientation result;
};

struct ObligationVerdict {
  bool success = false;
  std::vector<RuleCheck> checks;  // weak rules first, then strict ones
  std::optional<std::size_t> first_failure;  // index into checks
};

// Checks every rule; success iff all hold.
ObligationVerdict check_obligation(const Obligation& ob, const Orienting& weak,
                                   const Orienting& strict);

// R ⊆ >.
ObligationVerdict check_direct(const Trs& trs, const Relation& gt);
// R ⊆ >= and DP(R) ⊆ >.
ObligationVerdict check_dp(const Trs& trs, const Relation& ge, const Relation& gt);

// Estimated dependency graph: an edge p -> q exists when the rhs root of p
// equals the lhs root of q and no argument pair clashes, where a clash is
// two non-variable arguments with different roots, the rhs one not defined.
// Returns the cyclic strongly connected components as sorted index lists,
// ordered by their least member. Pairs outside any cycle are dropped.
std::vector<std::vector<std::size_t>> scc_split(const Trs& trs, const std::vector<Rule>& pairs);

// One dp obligation per cyclic component.
std::vector<Obligation> scc_obligations(const Trs& trs);

}  // namespace pathord
