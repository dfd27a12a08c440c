#include "pathord/ari.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pathord {

std::string_view to_string(ParseErrorCode c) {
  switch (c) {
    case ParseErrorCode::syntax: return "syntax";
    case ParseErrorCode::arity_mismatch: return "arity-mismatch";
    case ParseErrorCode::variable_lhs: return "variable-lhs";
    case ParseErrorCode::fresh_rhs_variable: return "fresh-rhs-variable";
    case ParseErrorCode::reserved_name: return "reserved-name";
  }
  return "?";
}

ParseError::ParseError(ParseErrorCode code, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(to_string(code)) + ": " + what),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

struct SExpr {
  bool atom = true;
  std::string text;
  std::vector<SExpr> items;
  std::size_t line = 1, column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  bool next(SExpr& out) {
    skip();
    if (i_ >= s_.size()) return false;
    out = read();
    return true;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip();
    SExpr e;
    e.line = line_;
    e.column = col_;
    if (i_ >= s_.size()) throw ParseError(ParseErrorCode::syntax, line_, col_, "unexpected end of input");
    if (s_[i_] == ')') throw ParseError(ParseErrorCode::syntax, line_, col_, "unexpected ')'");
    if (s_[i_] == '(') {
      e.atom = false;
      advance();
      while (true) {
        skip();
        if (i_ >= s_.size()) throw ParseError(ParseErrorCode::syntax, e.line, e.column, "unclosed '('");
        if (s_[i_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    if (s_[i_] == '"') {
      advance();
      while (i_ < s_.size() && s_[i_] != '"') advance();
      if (i_ >= s_.size()) throw ParseError(ParseErrorCode::syntax, e.line, e.column, "unclosed string");
      advance();
      e.text = "\"\"";
      return e;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != ';') {
      advance();
    }
    e.text = std::string(s_.substr(start, i_ - start));
    return e;
  }

  std::string_view s_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

void check_name(const SExpr& e) {
  if (e.text.find_first_of("#!") != std::string::npos) {
    throw ParseError(ParseErrorCode::reserved_name, e.line, e.column,
                     "identifier " + e.text + " uses a reserved mark");
  }
}

Term build(const SExpr& e, const Signature& sig) {
  if (e.atom) {
    check_name(e);
    if (auto f = sig.find(e.text)) {
      if (f->arity != 0) {
        throw ParseError(ParseErrorCode::arity_mismatch, e.line, e.column,
                         e.text + " expects " + std::to_string(f->arity) + " arguments, got 0");
      }
      return Term::app(*f);
    }
    return Term::var(e.text);
  }
  if (e.items.empty() || !e.items[0].atom) {
    throw ParseError(ParseErrorCode::syntax, e.line, e.column, "expected a function symbol");
  }
  const SExpr& head = e.items[0];
  check_name(head);
  auto f = sig.find(head.text);
  if (!f) {
    throw ParseError(ParseErrorCode::syntax, head.line, head.column,
                     "undeclared function symbol " + head.text);
  }
  if (f->arity != e.items.size() - 1) {
    throw ParseError(ParseErrorCode::arity_mismatch, e.line, e.column,
                     head.text + " expects " + std::to_string(f->arity) + " arguments, got " +
                         std::to_string(e.items.size() - 1));
  }
  TermList args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(build(e.items[i], sig));
  return Term::app(*f, std::move(args));
}

std::size_t to_arity(const SExpr& e) {
  if (!e.atom || e.text.empty() ||
      !std::all_of(e.text.begin(), e.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(ParseErrorCode::syntax, e.line, e.column, "expected an arity");
  }
  return std::stoul(e.text);
}

}  // namespace

Trs parse_ari(std::string_view text) {
  Reader rd(text);
  Trs trs;
  SExpr e;
  bool seen_format = false;
  while (rd.next(e)) {
    if (e.atom || e.items.empty() || !e.items[0].atom) {
      throw ParseError(ParseErrorCode::syntax, e.line, e.column, "expected a declaration");
    }
    const std::string& kw = e.items[0].text;
    if (kw == "format") {
      if (e.items.size() < 2 || !e.items[1].atom || e.items[1].text != "TRS") {
        throw ParseError(ParseErrorCode::syntax, e.line, e.column, "only (format TRS) is supported");
      }
      seen_format = true;
    } else if (kw == "meta-info") {
      continue;
    } else if (kw == "fun") {
      if (e.items.size() != 3 || !e.items[1].atom) {
        throw ParseError(ParseErrorCode::syntax, e.line, e.column, "expected (fun <name> <arity>)");
      }
      check_name(e.items[1]);
      Symbol f(e.items[1].text, to_arity(e.items[2]));
      if (auto old = trs.signature.find(f.name); old && old->arity != f.arity) {
        throw ParseError(ParseErrorCode::arity_mismatch, e.line, e.column,
                         f.name + " declared with two arities");
      }
      trs.signature.add(f);
    } else if (kw == "rule") {
      if (!seen_format) throw ParseError(ParseErrorCode::syntax, e.line, e.column, "missing (format TRS)");
      if (e.items.size() != 3) {
        throw ParseError(ParseErrorCode::syntax, e.line, e.column, "expected (rule <lhs> <rhs>)");
      }
      Term lhs = build(e.items[1], trs.signature);
      Term rhs = build(e.items[2], trs.signature);
      if (lhs.is_var()) {
        throw ParseError(ParseErrorCode::variable_lhs, e.items[1].line, e.items[1].column,
                         "left-hand side " + lhs.to_string() + " is a variable");
      }
      auto lv = variables(lhs);
      for (const std::string& v : variables(rhs)) {
        if (std::find(lv.begin(), lv.end(), v) == lv.end()) {
          throw ParseError(ParseErrorCode::fresh_rhs_variable, e.items[2].line, e.items[2].column,
                           "variable " + v + " does not occur in the left-hand side");
        }
      }
      trs.rules.push_back(Rule{lhs, rhs});
    } else {
      throw ParseError(ParseErrorCode::syntax, e.line, e.column, "unknown declaration " + kw);
    }
  }
  if (!seen_format) throw ParseError(ParseErrorCode::syntax, 1, 1, "missing (format TRS)");
  return trs;
}

namespace {

void print_term(std::ostream& os, const Term& t) {
  if (t.is_var()) {
    os << t.var_name();
  } else if (t.arity() == 0) {
    os << t.symbol().name;
  } else {
    os << '(' << t.symbol().name;
    for (const Term& a : t.args()) {
      os << ' ';
      print_term(os, a);
    }
    os << ')';
  }
}

// f(x,g(y)) style, marks allowed
class Applicative {
 public:
  Applicative(std::string_view s, const Signature& sig) : s_(s), sig_(sig) {}

  Term parse() {
    Term t = term();
    ws();
    if (i_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(ParseErrorCode::syntax, 1, i_ + 1, what);
  }

  Term term() {
    ws();
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != ',') {
      ++i_;
    }
    if (start == i_) fail("expected a term");
    std::string name(s_.substr(start, i_ - start));
    bool marked = false, tuple = false;
    if (name.size() > 1 && name.back() == '!') {
      marked = true;
      name.pop_back();
    }
    if (name.size() > 1 && name.back() == '#') {
      tuple = true;
      name.pop_back();
    }
    TermList args;
    ws();
    bool has_args = i_ < s_.size() && s_[i_] == '(';
    if (has_args) {
      ++i_;
      ws();
      if (i_ < s_.size() && s_[i_] == ')') {
        ++i_;
      } else {
        while (true) {
          args.push_back(term());
          ws();
          if (i_ < s_.size() && s_[i_] == ',') {
            ++i_;
          } else if (i_ < s_.size() && s_[i_] == ')') {
            ++i_;
            break;
          } else {
            fail("expected ',' or ')'");
          }
        }
      }
    }
    auto f = sig_.find(name);
    if (!f) {
      if (has_args || marked || tuple) fail("undeclared function symbol " + name);
      return Term::var(name);
    }
    if (f->arity != args.size()) {
      throw ParseError(ParseErrorCode::arity_mismatch, 1, start + 1,
                       name + " expects " + std::to_string(f->arity) + " arguments");
    }
    return Term::app(Symbol(f->name, f->arity, tuple, marked), std::move(args));
  }

  std::string_view s_;
  const Signature& sig_;
  std::size_t i_ = 0;
};

}  // namespace

std::string print_ari(const Trs& trs) {
  std::ostringstream os;
  os << "(format TRS)\n";
  for (const Symbol& f : trs.signature.symbols()) {
    if (f.tuple || f.marked) continue;
    os << "(fun " << f.name << ' ' << f.arity << ")\n";
  }
  for (const Rule& r : trs.rules) {
    os << "(rule ";
    print_term(os, r.lhs);
    os << ' ';
    print_term(os, r.rhs);
    os << ")\n";
  }
  return os.str();
}

Term parse_term(std::string_view text, const Signature& sig) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string_view::npos && text[k] == '(') {
    Reader rd(text);
    SExpr e;
    rd.next(e);
    if (SExpr extra; rd.next(extra)) {
      throw ParseError(ParseErrorCode::syntax, extra.line, extra.column, "trailing input");
    }
    return build(e, sig);
  }
  return Applicative(text, sig).parse();
}

}  // namespace pathord
