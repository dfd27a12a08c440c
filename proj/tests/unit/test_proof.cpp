#include "helpers.hpp"

#include "pathord/proof.hpp"
#include "pathord/search.hpp"

using namespace th;
namespace in = pathord::instances;

namespace {

Proof proof_for(const Obligation& ob, const Certificate& c) {
  Proof p;
  p.verdict = Verdict::terminating;
  p.tmpl = c.tmpl;
  VerifyReport v = verify_certificate(ob, c);
  REQUIRE(v.ok);
  p.groups.push_back({ob, c, v.verdict});
  return p;
}

Proof ex23_proof() { return proof_for(direct_obligation(in::predecessor_trs()), in::predecessor_certificate()); }
Proof z08_proof() { return proof_for(dp_obligation(in::zantema_trs()), in::zantema_certificate()); }

bool contains_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_SUITE("proof") {

TEST_CASE("parameter lines") {
  std::string text = emit_proof(ex23_proof());
  CHECK(text.starts_with("YES\ntemplate: mgwpo-direct\nscc: off\ngroup 1: direct\n"));
  CHECK(contains_line(text, "  s_A(x) = x + 1"));
  CHECK(contains_line(text, "  p_A(x) = x"));
  CHECK(contains_line(text, "  f_A(x) = x"));
  CHECK(contains_line(text, "  p_B(x) = max{0, x - 1}"));
  CHECK(contains_line(text, "  strict f(s(x)) -> f(p(s(x))) : 2b(i)"));

  std::string z = emit_proof(z08_proof());
  CHECK(contains_line(z, "  f!_A(x1,x2) = x2"));
  CHECK(contains_line(z, "  pi(f#) = [2]"));
  CHECK(contains_line(z, "  pi(f) = []"));
}

TEST_CASE("unknown and timeout verdicts") {
  Proof m;
  m.verdict = Verdict::unknown;
  m.tmpl = Template::wpo;
  m.note = "nothing fits";
  CHECK(emit_proof(m) == "MAYBE\nsearch space exhausted for template wpo (nothing fits)\n");
  Proof t;
  t.verdict = Verdict::timeout;
  t.tmpl = Template::spo;
  t.budget_seconds = 60;
  CHECK(emit_proof(t) == "TIMEOUT\nbudget of 60 s exhausted for template spo\n");
}

TEST_CASE("emission is deterministic") {
  CHECK(emit_proof(z08_proof()) == emit_proof(z08_proof()));
  CHECK(emit_proof(ex23_proof()) == emit_proof(ex23_proof()));
}

TEST_CASE("certificates survive emit and parse") {
  for (const Proof& p : {ex23_proof(), z08_proof()}) {
    CertificateFile cf = parse_certificate(emit_proof(p));
    CHECK(cf.tmpl == p.tmpl);
    CHECK_FALSE(cf.scc);
    REQUIRE(cf.groups.size() == 1);
    CHECK(cf.groups[0] == p.groups[0].certificate);
  }
}

TEST_CASE("found certificates survive emit and parse") {
  struct Case {
    const char* file;
    Template t;
  };
  for (Case c : {Case{"half.ari", Template::kbo_like}, Case{"ex38.ari", Template::gwpo},
                 Case{"add.ari", Template::wpo}, Case{"ex38.ari", Template::spo}}) {
    std::string file = c.file;
    CAPTURE(file);
    Trs trs = corpus(c.file);
    Obligation ob = is_direct(c.t) ? direct_obligation(trs) : dp_obligation(trs);
    SearchResult r = find_certificate(ob, SearchSpace::defaults(c.t), Deadline::after(std::chrono::seconds(30)));
    REQUIRE(r.certificate);
    CertificateFile cf = parse_certificate(emit_proof(proof_for(ob, *r.certificate)));
    REQUIRE(cf.groups.size() == 1);
    const Certificate& back = cf.groups[0];
    CHECK(back.a == r.certificate->a);
    CHECK(back.b == r.certificate->b);
    CHECK(back.status.entries() == r.certificate->status.entries());
    CHECK(back.precedence == r.certificate->precedence);
    CHECK(back == *r.certificate);
  }
}

TEST_CASE("bare parameter blocks") {
  CertificateFile cf = parse_certificate("template: mgwpo-direct\np_A(x) = x\ns_A(x) = x + 1\n");
  REQUIRE(cf.groups.size() == 1);
  CHECK(cf.groups[0].a.contains(Symbol("s", 1)));
  CHECK_FALSE(cf.groups[0].b->contains(Symbol("s", 1)));
}

TEST_CASE("statuses of uninterpreted tuple symbols") {
  CertificateFile cf = parse_certificate("template: spo\n  f#!_A(x1,x2) = x1\n  pi(f#) = [2]\n");
  REQUIRE(cf.groups.size() == 1);
  CHECK(cf.groups[0].status.positions(Symbol("f", 2).as_tuple()) == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(parse_certificate("template: spo\n  pi(g) = [1]\n"), CertificateParseError);
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(parse_certificate("p_A(x) = x\n"), CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("template: nope\n"), CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("template: wpo\np_A(x) = x +\n"), CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("template: wpo\np_B(x) = x\n"), CertificateParseError);
  try {
    parse_certificate("template: wpo\n\ns_A(x) = y\n");
    FAIL("expected a parse error");
  } catch (const CertificateParseError& e) {
    CHECK(e.line() == 3);
  }
}

}
