#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pathord/term.hpp"

namespace pathord {

enum class ParseErrorCode { syntax, arity_mismatch, variable_lhs, fresh_rhs_variable, reserved_name };

std::string_view to_string(ParseErrorCode c);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::size_t line, std::size_t column, const std::string& what);
  ParseErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorCode code_;
  std::size_t line_, column_;
};

// ARI TRS problems: (format TRS), (fun name arity)*, (rule lhs rhs)*.
// Undeclared identifiers are variables; meta-info and ';' comments are
// skipped. Names may not contain the reserved marks '#' and '!'.
Trs parse_ari(std::string_view text);

// Prints declarations in signature order followed by the rules.
std::string print_ari(const Trs& trs);

// A term in ARI syntax against an existing signature. Undeclared names are
// variables.
Term parse_term(std::string_view text, const Signature& sig);

}  // namespace pathord
