#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pathord/dp.hpp"
#include "pathord/search.hpp"

namespace pathord {

enum class Verdict { terminating, unknown, timeout };

struct ProofGroup {
  Obligation obligation;
  Certificate certificate;
  ObligationVerdict trace;
};

struct Proof {
  Verdict verdict = Verdict::unknown;
  Template tmpl = Template::wpo;
  bool scc = false;
  std::vector<ProofGroup> groups;  // filled for terminating proofs
  std::string note;                // unknown: what was exhausted
  double budget_seconds = 0;       // timeout: the budget that ran out
};

// `s_A(x) = x + 1`, `f#!_A(x1,x2) = x1`, `p_B(x) = max{0, x - 1}`.
std::string format_interpretation(const Symbol& f, const SymbolInterpretation& fi, char side);
std::string format_expression(const Symbol& f, const SymbolInterpretation& fi);
// Interpretations, statuses and precedence ranks, one per line.
std::vector<std::string> format_parameters(const Certificate& cert);

// Deterministic text: verdict line, then per group the parameter block and
// one line per oriented rule with its case chain.
std::string emit_proof(const Proof& p);

class CertificateParseError : public std::runtime_error {
 public:
  CertificateParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CertificateFile {
  Template tmpl = Template::wpo;
  bool scc = false;
  std::vector<Certificate> groups;
};

// Reads the parameter blocks of a proof (or a bare parameter block). Lines
// that are not parameters are ignored.
CertificateFile parse_certificate(std::string_view text);

}  // namespace pathord
