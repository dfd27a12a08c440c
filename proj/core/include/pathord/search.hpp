#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathord/algebra.hpp"
#include "pathord/dp.hpp"
#include "pathord/orders.hpp"
#include "pathord/status.hpp"
#include "pathord/triples.hpp"

namespace pathord {

// Order templates:
//   wpo          pair: A = linear algebra (pi-simple), B = precedence
//   gwpo         pair: A = linear algebra (pi-simple), B = marked max/plus
//   spo          pair: SPO over the lex combination of marked linear A and
//                marked max/plus B
//   mgwpo-direct reduction order: A = linear algebra (simple), B = max/plus
//   kbo-like     reduction order via the flat comparator: A = strictly
//                simple linear algebra, B = precedence
enum class Template { wpo, gwpo, spo, mgwpo_direct, kbo_like };

std::string_view to_string(Template t);
std::optional<Template> parse_template(std::string_view s);
bool is_direct(Template t);
bool uses_precedence(Template t);
bool uses_max_plus(Template t);
bool uses_status(Template t);

struct Certificate {
  Template tmpl = Template::wpo;
  Interpretation a{AlgebraKind::linear};
  std::optional<Interpretation> b;  // max/plus, when the template uses one
  Status status = Status::total();
  std::optional<Precedence> precedence;

  friend bool operator==(const Certificate&, const Certificate&);
};

struct SearchSpace {
  Template tmpl = Template::wpo;
  std::vector<Natural> linear_coeffs{0, 1};  // a_i, i >= 1
  Natural max_const = 2;                     // a_0 and c_0 range over 0..max_const
  std::vector<std::int64_t> offsets{-1, 0, 1};  // c_i, i >= 1
  bool all_statuses = true;                  // false: total statuses only
  std::size_t jobs = 1;

  static SearchSpace defaults(Template t);
  // Whether every parameter of `cert` lies in this space.
  bool contains(const Certificate& cert) const;
};

class Deadline {
 public:
  Deadline() = default;  // never expires
  static Deadline after(std::chrono::duration<double> d);
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct SearchResult {
  enum class Outcome { found, exhausted, timeout };
  Outcome outcome = Outcome::exhausted;
  std::optional<Certificate> certificate;
  std::size_t nodes = 0;
  double elapsed_seconds = 0;
};

// Depth-first enumeration in canonical order with pruning. Parameters are
// assigned block by block: A interpretations, statuses, B interpretations,
// precedence ranks, each over symbols in (arity, name) order. Templates
// with a max/plus B run in phases of increasing B support (number of
// symbols whose B interpretation is not constantly 0). A constraint is
// decided as soon as evaluating it touches no unassigned symbol; a false
// constraint prunes the subtree. The first success in this order wins,
// independent of `jobs`.
SearchResult find_certificate(const Obligation& problem, const SearchSpace& space,
                              const Deadline& deadline = {});

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;  // hypotheses or orientations, in check order
  ObligationVerdict verdict;
};

// Rebuilds the order from the certificate alone and re-checks every
// hypothesis of the template and every orientation. Throws CertificateError
// when a needed parameter is missing.
VerifyReport verify_certificate(const Obligation& problem, const Certificate& cert);

// The weak/strict orientation procedures induced by a certificate. Each call
// runs a fresh comparison session; the case chain is the one of the path
// order component.
struct InducedOrder {
  Orienting weak;
  Orienting strict;
  std::function<ComparisonStats(const Term&, const Term&)> stats;
};

InducedOrder induced_order(const Certificate& cert);

}  // namespace pathord
