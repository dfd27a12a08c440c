#include "pathord/proof.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace pathord {

namespace {

std::string signed_offset(std::int64_t c) {
  if (c > 0) return " + " + std::to_string(c);
  if (c < 0) return " - " + std::to_string(-c);
  return "";
}

}  // namespace

std::string format_expression(const Symbol& f, const SymbolInterpretation& fi) {
  if (const auto* p = std::get_if<LinearPoly>(&fi)) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < p->coeffs.size(); ++i) {
      if (p->coeffs[i] == 0) continue;
      std::string v = generic_var(f.arity, i + 1);
      parts.push_back(p->coeffs[i] == 1 ? v : std::to_string(p->coeffs[i]) + "*" + v);
    }
    if (p->constant != 0 || parts.empty()) parts.push_back(std::to_string(p->constant));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    return out;
  }
  const auto& m = std::get<MaxPlus>(fi);
  std::vector<std::string> parts;
  bool any_active = false, any_negative = false;
  Natural base = m.base;
  for (const auto& a : m.args) {
    if (a.active) {
      any_active = true;
      any_negative = any_negative || a.offset < 0;
    } else {
      base = std::max<Natural>(base, a.offset);
    }
  }
  if (base > 0 || !any_active || any_negative) parts.push_back(std::to_string(base));
  for (std::size_t i = 0; i < m.args.size(); ++i) {
    if (m.args[i].active) parts.push_back(generic_var(f.arity, i + 1) + signed_offset(m.args[i].offset));
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "max{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "}";
}

std::string format_interpretation(const Symbol& f, const SymbolInterpretation& fi, char side) {
  std::string head = f.display() + "_" + side;
  if (f.arity > 0) {
    head += "(";
    for (std::size_t i = 1; i <= f.arity; ++i) head += (i > 1 ? "," : "") + generic_var(f.arity, i);
    head += ")";
  }
  return head + " = " + format_expression(f, fi);
}

namespace {

std::vector<Symbol> sorted_keys(const auto& m) {
  std::vector<Symbol> v;
  for (const auto& [f, x] : m) v.push_back(f);
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

}  // namespace

std::vector<std::string> format_parameters(const Certificate& cert) {
  std::vector<std::string> out;
  for (const Symbol& f : sorted_keys(cert.a.entries())) {
    out.push_back(format_interpretation(f, cert.a.at(f), 'A'));
  }
  if (cert.b) {
    for (const Symbol& f : sorted_keys(cert.b->entries())) {
      out.push_back(format_interpretation(f, cert.b->at(f), 'B'));
    }
  }
  if (uses_status(cert.tmpl)) {
    for (const Symbol& f : sorted_keys(cert.status.entries())) {
      if (f.arity == 0) continue;
      std::string line = "pi(" + f.display() + ") = [";
      const auto ps = cert.status.positions(f);
      for (std::size_t i = 0; i < ps.size(); ++i) line += (i ? "," : "") + std::to_string(ps[i]);
      out.push_back(line + "]");
    }
  }
  if (cert.precedence) {
    for (const Symbol& f : sorted_keys(cert.precedence->ranks())) {
      out.push_back("prec(" + f.display() + ") = " + std::to_string(cert.precedence->rank(f)));
    }
  }
  return out;
}

std::string emit_proof(const Proof& p) {
  std::ostringstream os;
  switch (p.verdict) {
    case Verdict::unknown:
      os << "MAYBE\n";
      os << "search space exhausted for template " << to_string(p.tmpl);
      if (!p.note.empty()) os << " (" << p.note << ")";
      os << "\n";
      return os.str();
    case Verdict::timeout:
      os << "TIMEOUT\n";
      os << "budget of " << p.budget_seconds << " s exhausted for template " << to_string(p.tmpl)
         << "\n";
      return os.str();
    case Verdict::terminating: break;
  }
  os << "YES\n";
  os << "template: " << to_string(p.tmpl) << "\n";
  os << "scc: " << (p.scc ? "on" : "off") << "\n";
  for (std::size_t g = 0; g < p.groups.size(); ++g) {
    const ProofGroup& grp = p.groups[g];
    os << "group " << g + 1 << ": "
       << (grp.obligation.kind == ObligationKind::direct ? "direct" : "dependency pairs") << "\n";
    for (const std::string& line : format_parameters(grp.certificate)) os << "  " << line << "\n";
    for (const RuleCheck& c : grp.trace.checks) {
      os << "  " << (c.strict ? "strict " : "weak ") << c.rule.to_string() << " : "
         << (c.result.holds ? (c.result.case_chain.empty() ? "-" : c.result.case_chain) : "FAILED")
         << "\n";
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  std::size_t line;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  std::int64_t number() {
    ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a number");
    return std::stoll(std::string(s.substr(start, i - start)));
  }
  std::string ident() {
    ws();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                            s[i] == '\'' || s[i] == '#' || s[i] == '!' || s[i] == '-' ||
                            s[i] == '.')) {
      ++i;
    }
    if (start == i) fail("expected an identifier");
    return std::string(s.substr(start, i - start));
  }
  bool peek_digit() {
    ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  [[noreturn]] void fail(const std::string& what) const { throw CertificateParseError(line, what); }
};

// "f#!" -> name f, tuple, marked
Symbol parse_display(const std::string& d, std::size_t arity) {
  std::string name = d;
  bool marked = false, tuple = false;
  if (!name.empty() && name.back() == '!') {
    marked = true;
    name.pop_back();
  }
  if (!name.empty() && name.back() == '#') {
    tuple = true;
    name.pop_back();
  }
  return Symbol(name, arity, tuple, marked);
}

// variable name -> 1-based position
std::size_t var_index(Cursor& c, const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::find(vars.begin(), vars.end(), v);
  if (it == vars.end()) c.fail("unknown variable " + v);
  return static_cast<std::size_t>(it - vars.begin()) + 1;
}

LinearPoly parse_linear(Cursor& c, const std::vector<std::string>& vars) {
  LinearPoly p{0, std::vector<Natural>(vars.size(), 0)};
  do {
    if (c.peek_digit()) {
      std::int64_t k = c.number();
      if (c.eat('*')) {
        p.coeffs[var_index(c, vars, c.ident()) - 1] += k;
      } else {
        p.constant += k;
      }
    } else {
      p.coeffs[var_index(c, vars, c.ident()) - 1] += 1;
    }
  } while (c.eat('+'));
  return p;
}

void parse_component(Cursor& c, const std::vector<std::string>& vars, MaxPlus& m, bool& has_base) {
  if (c.peek_digit()) {
    std::int64_t k = c.number();
    m.base = has_base ? std::max<Natural>(m.base, k) : k;
    has_base = true;
    return;
  }
  std::size_t i = var_index(c, vars, c.ident());
  std::int64_t off = 0;
  if (c.eat('+')) {
    off = c.number();
  } else if (c.eat('-')) {
    off = -c.number();
  }
  m.args[i - 1] = MaxPlus::Arg{true, off};
}

MaxPlus parse_max_plus(Cursor& c, const std::vector<std::string>& vars) {
  MaxPlus m{0, std::vector<MaxPlus::Arg>(vars.size())};
  bool has_base = false;
  std::size_t save = c.i;
  if (c.ident() == "max" && c.eat('{')) {
    do parse_component(c, vars, m, has_base);
    while (c.eat(','));
    c.expect('}');
  } else {
    c.i = save;
    parse_component(c, vars, m, has_base);
  }
  return m;
}

struct PendingGroup {
  Certificate cert;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> statuses;
  std::vector<std::pair<std::string, unsigned>> ranks;
  std::vector<std::size_t> status_lines, rank_lines;
};

Symbol resolve(const Certificate& cert, const std::string& display, std::size_t line) {
  auto find_in = [&](const auto& entries) -> std::optional<Symbol> {
    for (const auto& [f, x] : entries) {
      if (f.display() == display) return f;
    }
    return std::nullopt;
  };
  if (auto f = find_in(cert.a.entries())) return *f;
  if (cert.b) {
    if (auto f = find_in(cert.b->entries())) return *f;
  }
  // Only a marked variant may be interpreted (f#! but not f#); borrow its arity.
  std::string name = display;
  bool marked = name.size() > 1 && name.back() == '!';
  if (marked) name.pop_back();
  bool tuple = name.size() > 1 && name.back() == '#';
  if (tuple) name.pop_back();
  auto by_name = [&](const auto& entries) -> std::optional<Symbol> {
    for (const auto& [f, x] : entries) {
      if (f.name == name) return Symbol(name, f.arity, tuple, marked);
    }
    return std::nullopt;
  };
  if (auto f = by_name(cert.a.entries())) return *f;
  if (cert.b) {
    if (auto f = by_name(cert.b->entries())) return *f;
  }
  throw CertificateParseError(line, "symbol " + display + " has no interpretation, arity unknown");
}

Certificate finish(PendingGroup& g) {
  Certificate& c = g.cert;
  for (std::size_t k = 0; k < g.statuses.size(); ++k) {
    Symbol f = resolve(c, g.statuses[k].first, g.status_lines[k]);
    try {
      c.status.set(f, g.statuses[k].second);
    } catch (const std::invalid_argument& e) {
      throw CertificateParseError(g.status_lines[k], e.what());
    }
  }
  if (!g.ranks.empty()) {
    Precedence prec;
    for (std::size_t k = 0; k < g.ranks.size(); ++k) {
      prec.set(resolve(c, g.ranks[k].first, g.rank_lines[k]), g.ranks[k].second);
    }
    c.precedence = prec;
  } else if (uses_precedence(c.tmpl)) {
    c.precedence = Precedence();
  }
  return c;
}

}  // namespace

CertificateFile parse_certificate(std::string_view text) {
  CertificateFile out;
  bool have_template = false;
  std::optional<PendingGroup> cur;
  auto new_group = [&] {
    if (cur) out.groups.push_back(finish(*cur));
    cur.emplace();
    cur->cert.tmpl = out.tmpl;
    if (uses_max_plus(out.tmpl)) cur->cert.b = Interpretation(AlgebraKind::max_plus);
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("template:")) {
      std::string_view name = line.substr(9);
      while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
      auto t = parse_template(name);
      if (!t) throw CertificateParseError(lineno, "unknown template " + std::string(name));
      out.tmpl = *t;
      have_template = true;
      continue;
    }
    if (line.starts_with("scc:")) {
      out.scc = line.find("on") != std::string_view::npos;
      continue;
    }
    if (line.starts_with("group ")) {
      if (!have_template) throw CertificateParseError(lineno, "group before template line");
      new_group();
      continue;
    }
    Cursor c{line, 0, lineno};
    if (line.starts_with("pi(")) {
      if (!cur) new_group();
      c.i = 3;
      std::string name = c.ident();
      c.expect(')');
      c.expect('=');
      c.expect('[');
      std::vector<std::size_t> ps;
      if (!c.eat(']')) {
        do ps.push_back(static_cast<std::size_t>(c.number()));
        while (c.eat(','));
        c.expect(']');
      }
      cur->statuses.emplace_back(name, ps);
      cur->status_lines.push_back(lineno);
      continue;
    }
    if (line.starts_with("prec(")) {
      if (!cur) new_group();
      c.i = 5;
      std::string name = c.ident();
      c.expect(')');
      c.expect('=');
      cur->ranks.emplace_back(name, static_cast<unsigned>(c.number()));
      cur->rank_lines.push_back(lineno);
      continue;
    }
    // interpretation line: <sym>_<A|B>[(vars)] = expr
    std::size_t eq = line.find('=');
    std::size_t us = line.find("_A");
    if (us == std::string_view::npos || (eq != std::string_view::npos && us > eq)) us = line.find("_B");
    if (eq == std::string_view::npos || us == std::string_view::npos || us > eq) continue;
    if (!have_template) throw CertificateParseError(lineno, "parameters before template line");
    if (!cur) new_group();
    std::string display(line.substr(0, us));
    char side = line[us + 1];
    c.i = us + 2;
    std::vector<std::string> vars;
    if (c.eat('(')) {
      if (!c.eat(')')) {
        do vars.push_back(c.ident());
        while (c.eat(','));
        c.expect(')');
      }
    }
    c.expect('=');
    Symbol f = parse_display(display, vars.size());
    try {
      if (side == 'A') {
        cur->cert.a.set(f, parse_linear(c, vars));
      } else {
        if (!cur->cert.b) c.fail("template " + std::string(to_string(out.tmpl)) + " has no B algebra");
        cur->cert.b->set(f, parse_max_plus(c, vars));
      }
    } catch (const std::invalid_argument& e) {
      c.fail(e.what());
    }
    if (!c.at_end()) c.fail("trailing input");
  }
  if (!have_template) throw CertificateParseError(lineno, "missing template line");
  if (cur) out.groups.push_back(finish(*cur));
  return out;
}

}  // namespace pathord
