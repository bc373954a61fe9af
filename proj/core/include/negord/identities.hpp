#ifndef NEGORD_IDENTITIES_HPP
#define NEGORD_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negord/families.hpp"
#include "negord/rational.hpp"

namespace negord {

enum class Expectation { holds, paper_discrepancy };

std::string_view expectation_name(Expectation e);

/// Stated: encodes a result as printed. Derived: a correction or a
/// consequence worked out here.
enum class Provenance { stated, derived };

/// Which lambda values an identity is evaluated at.
enum class LambdaUse {
  none,          ///< lambda-free: one case per (n,k)
  any,           ///< numeric set plus symbolic
  numeric_only,  ///< numeric set only
};

struct CaseResult {
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

/// Evaluated at (n, k, lambda). For LambdaUse::none the lambda argument is
/// the Rational 1 and carries no meaning.
using Checker = std::function<CaseResult(long n, long k, const Lambda& lambda)>;

struct Identity {
  std::string id;
  std::string statement;  ///< the formula being checked, in plain text
  std::string source;     ///< short description of the result it encodes
  Provenance provenance = Provenance::stated;
  Expectation expectation = Expectation::holds;
  std::optional<std::string> corrected_variant;
  std::string note;
  LambdaUse lambda_use = LambdaUse::any;
  long n_min = 0;
  std::optional<long> n_cap;  ///< upper bound on n regardless of the grid
  long k_min = 0;
  std::optional<long> k_cap;  ///< upper bound on k regardless of the grid
  /// Numeric lambdas outside the identity's domain are skipped.
  std::function<bool(const Rational&)> lambda_ok;
  Checker check;
};

/// The full registry in catalog order.
const std::vector<Identity>& list_identities();
/// Throws std::invalid_argument for an unknown id.
const Identity& find_identity(std::string_view id);

struct Witness {
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

/// Evaluates one identity at one point. Throws std::invalid_argument for an
/// unknown id or a point outside the identity's domain.
Witness check_one(std::string_view id, long n, long k, const Lambda& lambda);

struct Counterexample {
  long n = 0;
  long k = 0;
  std::string lambda;  ///< "p/q", "symbolic", or "-" for lambda-free identities
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  std::string statement;
  std::string source;
  Provenance provenance = Provenance::stated;
  Expectation expectation = Expectation::holds;
  std::optional<std::string> corrected_variant;
  long cases_run = 0;
  long cases_passed = 0;
  std::optional<Counterexample> first_counterexample;
  bool expectation_met = false;
  /// "pass", "FAIL", "paper-discrepancy confirmed",
  /// "paper-discrepancy not reproduced", "corrected variant failing".
  std::string status;
};

struct SuiteOptions {
  long n_max = 8;
  long k_max = 6;
  std::vector<Rational> lambdas;
  bool symbolic = true;
  unsigned threads = 1;
  /// Restricts the run to these ids (empty: all).
  std::vector<std::string> only;
};

struct Report {
  SuiteOptions options;
  std::vector<IdentityReport> identities;
  bool all_expectations_met = false;

  const IdentityReport* find(std::string_view id) const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs every identity over its domain intersected with the grid. Throws
/// std::invalid_argument when n_max or k_max is below 2.
Report run_suite(const SuiteOptions& options);

/// Lambda set used when none is given: 1, -1, 2, 1/2, -3/5.
std::vector<Rational> default_lambdas();

}  // namespace negord

#endif  // NEGORD_IDENTITIES_HPP
