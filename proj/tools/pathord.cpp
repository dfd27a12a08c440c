// pathord: termination proofs with generalized weighted path orders.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pathord/ari.hpp"
#include "pathord/dp.hpp"
#include "pathord/proof.hpp"
#include "pathord/scenarios.hpp"
#include "pathord/search.hpp"

using namespace pathord;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, unknown = 1, timeout = 2, usage = 3 };

// Bad input files and flag values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Trs load_trs(const std::string& path) {
  try {
    return parse_ari(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

CertificateFile load_certificate(const std::string& path) {
  try {
    return parse_certificate(slurp(path));
  } catch (const CertificateParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<Obligation> obligations(const Trs& trs, Template t, bool scc) {
  if (is_direct(t)) return {direct_obligation(trs)};
  if (scc) return scc_obligations(trs);
  return {dp_obligation(trs)};
}

// Search space keys: linear_coeffs, max_const, offsets, statuses, jobs.
void apply_config(SearchSpace& sp, const std::string& path) {
  json j;
  try {
    j = json::parse(slurp(path));
    if (j.contains("linear_coeffs")) sp.linear_coeffs = j.at("linear_coeffs").get<std::vector<Natural>>();
    if (j.contains("max_const")) sp.max_const = j.at("max_const").get<Natural>();
    if (j.contains("offsets")) sp.offsets = j.at("offsets").get<std::vector<std::int64_t>>();
    if (j.contains("statuses")) {
      std::string s = j.at("statuses").get<std::string>();
      if (s != "total" && s != "all") throw UsageError("statuses must be total or all");
      sp.all_statuses = s == "all";
    }
    if (j.contains("jobs")) sp.jobs = j.at("jobs").get<std::size_t>();
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct ProveArgs {
  std::string file;
  std::string tmpl = "spo";
  double timeout = 60;
  std::optional<Natural> max_const;
  std::optional<std::string> statuses;
  std::string scc = "off";
  std::string proof_path;
  std::optional<std::size_t> jobs;
  std::string config;
};

int prove(const ProveArgs& a) {
  Trs trs = load_trs(a.file);
  Template t = *parse_template(a.tmpl);
  SearchSpace sp = SearchSpace::defaults(t);
  if (!a.config.empty()) apply_config(sp, a.config);
  if (a.max_const) sp.max_const = *a.max_const;
  if (a.statuses) sp.all_statuses = *a.statuses == "all";
  if (a.jobs) sp.jobs = *a.jobs;
  sp.tmpl = t;

  Proof p;
  p.tmpl = t;
  p.scc = a.scc == "on" && !is_direct(t);
  Deadline deadline = Deadline::after(std::chrono::duration<double>(a.timeout));
  p.verdict = Verdict::terminating;
  for (const Obligation& ob : obligations(trs, t, p.scc)) {
    SearchResult r = find_certificate(ob, sp, deadline);
    if (r.outcome == SearchResult::Outcome::timeout) {
      p.verdict = Verdict::timeout;
      p.budget_seconds = a.timeout;
      break;
    }
    if (r.outcome == SearchResult::Outcome::exhausted) {
      p.verdict = Verdict::unknown;
      std::ostringstream note;
      note << "a_i in {";
      for (std::size_t i = 0; i < sp.linear_coeffs.size(); ++i) {
        note << (i ? "," : "") << sp.linear_coeffs[i];
      }
      note << "}, constants 0.." << sp.max_const << ", " << (sp.all_statuses ? "all" : "total")
           << " statuses; unable to satisfy the inclusions";
      p.note = note.str();
      p.groups.clear();
      break;
    }
    VerifyReport v = verify_certificate(ob, *r.certificate);
    p.groups.push_back({ob, *r.certificate, v.verdict});
  }

  std::string text = emit_proof(p);
  if (!a.proof_path.empty()) {
    std::ofstream out(a.proof_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + a.proof_path);
    out << text;
  }
  std::cout << text;
  switch (p.verdict) {
    case Verdict::terminating: return ok;
    case Verdict::unknown: return unknown;
    case Verdict::timeout: return timeout;
  }
  return unknown;
}

const Certificate& pick_group(const CertificateFile& cf, std::size_t group) {
  if (cf.groups.empty()) throw UsageError("certificate file has no parameter block");
  if (group < 1 || group > cf.groups.size()) {
    throw UsageError("group " + std::to_string(group) + " out of range");
  }
  return cf.groups[group - 1];
}

int compare(const std::string& file, const std::string& lhs, const std::string& rhs,
            const std::string& params, std::size_t group) {
  Trs trs = load_trs(file);
  CertificateFile cf = load_certificate(params);
  const Certificate& cert = pick_group(cf, group);
  Term s = parse_term(lhs, trs.signature), t = parse_term(rhs, trs.signature);
  InducedOrder ord = induced_order(cert);
  Orientation w = ord.weak(s, t), st = ord.strict(s, t);
  ComparisonStats stats = ord.stats(s, t);
  auto line = [](const char* what, const Orientation& o) {
    std::cout << what << ": " << (o.holds ? "yes" : "no");
    if (o.holds && !o.case_chain.empty()) std::cout << " (" << o.case_chain << ")";
    std::cout << '\n';
  };
  std::cout << "template: " << to_string(cert.tmpl) << '\n';
  line("weak", w);
  line("strict", st);
  std::cout << "stats: a_weak=" << stats.a_weak << " a_strict=" << stats.a_strict
            << " b_weak=" << stats.b_weak << " b_strict=" << stats.b_strict
            << " total=" << stats.total() << '\n';
  return ok;
}

int verify(const std::string& file, const std::string& params) {
  Trs trs = load_trs(file);
  CertificateFile cf = load_certificate(params);
  std::vector<Obligation> obs = obligations(trs, cf.tmpl, cf.scc);
  if (cf.groups.empty() && !obs.empty()) throw UsageError("certificate file has no parameter block");
  if (obs.size() != cf.groups.size()) {
    std::cout << "REJECTED\n  expected " << obs.size() << " parameter group(s), found "
              << cf.groups.size() << '\n';
    return unknown;
  }
  bool all = true;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    VerifyReport r;
    try {
      r = verify_certificate(obs[i], cf.groups[i]);
    } catch (const CertificateError& e) {
      throw UsageError(std::string("group ") + std::to_string(i + 1) + ": " + e.what());
    }
    std::cout << "group " << i + 1 << ": " << (r.ok ? "accepted" : "rejected") << '\n';
    for (const RuleCheck& c : r.verdict.checks) {
      std::cout << "  " << (c.strict ? "strict " : "weak ") << c.rule.lhs.to_string() << " -> "
                << c.rule.rhs.to_string() << " : "
                << (c.result.holds ? c.result.case_chain : std::string("FAILS")) << '\n';
    }
    for (const std::string& f : r.failures) std::cout << "  failure: " << f << '\n';
    all = all && r.ok;
  }
  std::cout << (all ? "ACCEPTED" : "REJECTED") << '\n';
  return all ? ok : unknown;
}

json terms(const std::vector<Term>& ts) {
  json a = json::array();
  for (const Term& t : ts) a.push_back(t.to_string());
  return a;
}

int oracle(const std::string& check, std::optional<std::size_t> size) {
  json out;
  out["check"] = check;
  out["runs"] = json::array();
  bool all = true;
  for (const scenarios::Scenario& s : scenarios::run(check, size)) {
    const OracleReport& r = s.report;
    json j{{"name", s.name},
           {"expect_pass", s.expect_pass},
           {"passed", r.passed},
           {"ok", s.ok()},
           {"pairs_checked", r.pairs_checked},
           {"witness", terms(r.witness)},
           {"detail", r.detail},
           {"parameters", r.parameters}};
    if (r.inclusion) j["inclusion"] = *r.inclusion;
    if (r.equality) j["equality"] = *r.equality;
    if (!r.equality_witness.empty()) j["equality_witness"] = terms(r.equality_witness);
    out["runs"].push_back(j);
    all = all && s.ok();
  }
  out["passed"] = all;
  std::cout << out.dump(2) << '\n';
  return all ? ok : unknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Termination proofs with generalized weighted path orders"};
  app.require_subcommand(1);

  ProveArgs pa;
  auto* prove_cmd = app.add_subcommand("prove", "Search for a termination certificate");
  prove_cmd->add_option("file", pa.file, "ARI problem file")->required();
  prove_cmd->add_option("--template", pa.tmpl, "Order template")
      ->check(CLI::IsMember({"wpo", "gwpo", "spo", "mgwpo-direct", "kbo-like"}));
  prove_cmd->add_option("--timeout", pa.timeout, "Budget in seconds")->check(CLI::PositiveNumber);
  prove_cmd->add_option("--max-const", pa.max_const, "Largest constant coefficient");
  prove_cmd->add_option("--statuses", pa.statuses, "Status space")->check(CLI::IsMember({"total", "all"}));
  prove_cmd->add_option("--scc", pa.scc, "Split dependency pairs by SCC")->check(CLI::IsMember({"on", "off"}));
  prove_cmd->add_option("--proof", pa.proof_path, "Also write the proof to this file");
  prove_cmd->add_option("--jobs", pa.jobs, "Worker threads")->check(CLI::PositiveNumber);
  prove_cmd->add_option("--config", pa.config, "JSON search space configuration");

  std::string cmp_file, lhs, rhs, cmp_params;
  std::size_t group = 1;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two terms under a certificate");
  compare_cmd->add_option("file", cmp_file, "ARI problem file")->required();
  compare_cmd->add_option("--lhs", lhs, "Left term")->required();
  compare_cmd->add_option("--rhs", rhs, "Right term")->required();
  compare_cmd->add_option("--params", cmp_params, "Certificate or proof file")->required();
  compare_cmd->add_option("--group", group, "Parameter group (1-based)");

  std::string check;
  std::optional<std::size_t> size;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an exhaustive cross-check");
  oracle_cmd->add_option("check", check, "Check name")->required()->check(CLI::IsMember(scenarios::checks()));
  oracle_cmd->add_option("--size", size, "Universe size bound")->check(CLI::PositiveNumber);

  std::string ver_file, ver_params;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate independently");
  verify_cmd->add_option("file", ver_file, "ARI problem file")->required();
  verify_cmd->add_option("--params", ver_params, "Certificate or proof file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*prove_cmd) return prove(pa);
    if (*compare_cmd) return compare(cmp_file, lhs, rhs, cmp_params, group);
    if (*oracle_cmd) return oracle(check, size);
    if (*verify_cmd) return verify(ver_file, ver_params);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return unknown;
  }
  return usage;
}
