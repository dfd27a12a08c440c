#include "pathord/scenarios.hpp"

#include <stdexcept>

#include "pathord/instances.hpp"

namespace pathord::scenarios {

namespace in = instances;

namespace {

UniverseOptions universe(std::optional<std::size_t> size, std::size_t fallback) {
  UniverseOptions u;
  u.max_size = size.value_or(fallback);
  return u;
}

LawOptions laws(std::optional<std::size_t> size, std::size_t fallback) {
  LawOptions o;
  o.max_size = size.value_or(fallback);
  return o;
}

Signature signature_of(const Trs& trs) { return trs.signature; }

std::vector<Scenario> thm_2_5(std::optional<std::size_t> size) {
  std::vector<Scenario> out;
  Signature dflt = default_oracle_signature();
  UniverseOptions u = universe(size, 5);
  out.push_back({"predecessor",
                 check_thm_2_5(triple_from_algebra(in::predecessor_weights()),
                               triple_from_algebra(in::predecessor_levels()),
                               signature_of(in::predecessor_trs()), u)});
  for (std::uint32_t seed = 1; seed <= 3; ++seed) {
    auto [a, b] = in::random_simple_pair(seed, dflt);
    out.push_back({"random-" + std::to_string(seed),
                   check_thm_2_5(triple_from_algebra(a), triple_from_algebra(b), dflt, u)});
  }
  auto [a, b] = in::random_simple_pair(1, dflt);
  out.push_back({"trivial-a", check_thm_2_5(trivial_triple(), triple_from_algebra(b), dflt, u)});
  return out;
}

std::vector<Scenario> thm_3_6(std::optional<std::size_t> size) {
  std::vector<Scenario> out;
  Signature dflt = default_oracle_signature();
  UniverseOptions u = universe(size, 5);
  out.push_back({"predecessor-total",
                 check_thm_3_6(triple_from_algebra(in::predecessor_weights()),
                               triple_from_algebra(in::predecessor_levels()), Status::total(),
                               signature_of(in::predecessor_trs()), u)});
  auto [a, b] = in::random_simple_pair(1, dflt);
  out.push_back({"random-1-total", check_thm_3_6(triple_from_algebra(a), triple_from_algebra(b),
                                                 Status::total(), dflt, u)});
  Status partial = Status::total();
  partial.set(Symbol("f", 2), {2});
  partial.set(Symbol("g", 1), {});
  out.push_back({"random-1-partial",
                 check_thm_3_6(triple_from_algebra(a), triple_from_algebra(b), partial, dflt, u)});
  out.push_back({"idempotent-f",
                 check_thm_3_6(triple_from_algebra(in::unary_successor()),
                               triple_from_precedence(in::single_precedence()),
                               in::empty_status_for_f(), signature_of(in::idempotent_trs()), u)});
  return out;
}

std::vector<Scenario> prop_2_6(std::optional<std::size_t> size) {
  std::vector<Scenario> out;
  UniverseOptions u = universe(size, 5);
  out.push_back({"kbo-like",
                 check_prop_2_6(triple_from_algebra(in::kbo_weights()),
                                triple_from_precedence(in::kbo_precedence()),
                                default_oracle_signature(), u)});
  out.push_back({"chain",
                 check_prop_2_6(triple_from_algebra(in::chain_weights()),
                                triple_from_precedence(in::chain_precedence()),
                                in::chain_signature(), u)});
  return out;
}

std::vector<Scenario> law_suites(std::optional<std::size_t> size) {
  std::vector<Scenario> out;
  {
    ReductionTriple ta = triple_from_algebra(in::predecessor_weights());
    ReductionTriple tb = triple_from_algebra(in::predecessor_levels());
    Relation gt = [ta, tb](const Term& s, const Term& t) { return mgwpo_gt(s, t, ta, tb); };
    out.push_back({"mgwpo-predecessor",
                   check_reduction_order_laws(gt, signature_of(in::predecessor_trs()), laws(size, 5),
                                              "A: " + describe(ta) + " | B: " + describe(tb))});
  }
  {
    Signature sig = signature_of(in::zantema_trs());
    sig.add(Symbol("f", 2).as_tuple());
    ReductionTriple tm = marked_triple(in::zantema_marks());
    Status pi = in::zantema_status();
    OrderPair pair{[tm, pi](const Term& s, const Term& t) { return mspo_pair(s, t, pi, tm).weak; },
                   [tm, pi](const Term& s, const Term& t) { return mspo_pair(s, t, pi, tm).strict; }};
    out.push_back({"spo-pair-zantema",
                   check_reduction_pair_laws(
                       pair, sig, laws(size, 4), "A: " + describe(tm),
                       [tm, pi](const Term& s, const Term& t) { return spo_pair(s, t, pi, tm.pair).weak; })});
  }
  {
    Signature dflt = default_oracle_signature();
    auto [a, b] = in::random_simple_pair(1, dflt);
    ReductionTriple ta = triple_from_algebra(a), tb = triple_from_algebra(b);
    OrderPair pair{
        [ta, tb](const Term& s, const Term& t) { return mgwpo_pair(s, t, Status::total(), ta, tb).weak; },
        [ta, tb](const Term& s, const Term& t) { return mgwpo_pair(s, t, Status::total(), ta, tb).strict; }};
    out.push_back({"gwpo-pair-total",
                   check_reduction_pair_laws(
                       pair, dflt, laws(size, 4), "A: " + describe(ta) + " | B: " + describe(tb),
                       [ta, tb](const Term& s, const Term& t) {
                         return gwpo_pair(s, t, Status::total(), ta.pair, tb.pair).weak;
                       })});
  }
  {
    ReductionTriple ta = triple_from_algebra(in::kbo_weights());
    ReductionTriple tb = triple_from_precedence(in::kbo_precedence());
    Relation gt = [ta, tb](const Term& s, const Term& t) {
      return gwpo_fast_gt(s, t, ta.pair, tb.pair);
    };
    out.push_back({"kbo-like",
                   check_reduction_order_laws(gt, default_oracle_signature(), laws(size, 4),
                                              "A: " + describe(ta) + " | B: " + describe(tb))});
  }
  return out;
}

OracleReport totality_report(const Relation& gt, const Signature& sig, std::size_t size,
                             std::string parameters) {
  TotalityReport t = ground_totality(gt, sig, size);
  OracleReport rep;
  rep.check = "totality";
  rep.passed = t.total;
  rep.pairs_checked = t.pairs_checked;
  rep.parameters = std::move(parameters);
  if (t.counterexample) {
    rep.witness = {t.counterexample->first, t.counterexample->second};
    rep.detail = "incomparable ground terms";
  }
  return rep;
}

std::vector<Scenario> totality(std::optional<std::size_t> size) {
  std::vector<Scenario> out;
  std::size_t n = size.value_or(6);
  ReductionTriple ta = triple_from_algebra(in::ground_weights());
  ReductionTriple tb = triple_from_precedence(in::ground_precedence());
  Relation gt = [ta, tb](const Term& s, const Term& t) { return gwpo_fast_gt(s, t, ta.pair, tb.pair); };
  out.push_back({"kbo-like-ground",
                 totality_report(gt, in::ground_signature(), n, "A: " + describe(ta) + " | B: " + describe(tb))});
  ReductionTriple triv = trivial_triple();
  out.push_back({"trivial-order", totality_report(triv.pair.strict, in::ground_signature(), n, "trivial"),
                 false});
  return out;
}

}  // namespace

std::vector<std::string> checks() { return {"thm2.5", "thm3.6", "prop2.6", "laws", "totality"}; }

std::vector<Scenario> run(const std::string& check, std::optional<std::size_t> size) {
  if (check == "thm2.5") return thm_2_5(size);
  if (check == "thm3.6") return thm_3_6(size);
  if (check == "prop2.6") return prop_2_6(size);
  if (check == "laws") return law_suites(size);
  if (check == "totality") return totality(size);
  throw std::invalid_argument("unknown check " + check);
}

}  // namespace pathord::scenarios
