#include "negord/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace negord {

std::string_view expectation_name(Expectation e) {
  return e == Expectation::holds ? "holds" : "paper-discrepancy";
}

std::vector<Rational> default_lambdas() {
  return {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 5)};
}

const Identity& find_identity(std::string_view id) {
  const auto& reg = list_identities();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Identity& e) { return e.id == id; });
  if (it == reg.end()) throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
  return *it;
}

namespace {

CaseResult run_case(const Identity& e, long n, long k, const Lambda& lambda) {
  try {
    return e.check(n, k, lambda);
  } catch (const std::exception& ex) {
    return CaseResult{false, std::string("error: ") + ex.what(), "-"};
  }
}

struct Point {
  Lambda lambda;
  std::string label;
};

std::vector<Point> lambda_points(const Identity& e, const SuiteOptions& opt) {
  std::vector<Point> pts;
  if (e.lambda_use == LambdaUse::none) {
    pts.push_back({Rational(1), "-"});
    return pts;
  }
  for (const auto& l : opt.lambdas) {
    if (e.lambda_ok && !e.lambda_ok(l)) continue;
    pts.push_back({l, l.str()});
  }
  if (e.lambda_use == LambdaUse::any && opt.symbolic) pts.push_back({Symbolic{}, "symbolic"});
  return pts;
}

IdentityReport run_identity(const Identity& e, const SuiteOptions& opt) {
  IdentityReport r;
  r.id = e.id;
  r.statement = e.statement;
  r.source = e.source;
  r.provenance = e.provenance;
  r.expectation = e.expectation;
  r.corrected_variant = e.corrected_variant;

  const long n_hi = e.n_cap ? std::min(opt.n_max, *e.n_cap) : opt.n_max;
  const long k_hi = e.k_cap ? std::min(opt.k_max, *e.k_cap) : opt.k_max;
  const auto pts = lambda_points(e, opt);
  for (long n = e.n_min; n <= n_hi; ++n) {
    for (long k = e.k_min; k <= k_hi; ++k) {
      for (const auto& p : pts) {
        const CaseResult c = run_case(e, n, k, p.lambda);
        ++r.cases_run;
        if (c.ok) {
          ++r.cases_passed;
        } else if (!r.first_counterexample) {
          r.first_counterexample = Counterexample{n, k, p.label, c.lhs, c.rhs};
        }
      }
    }
  }
  return r;
}

void assign_status(std::vector<IdentityReport>& reports) {
  auto clean = [&](const std::string& id) -> std::optional<bool> {
    for (const auto& r : reports) {
      if (r.id == id) return r.cases_passed == r.cases_run;
    }
    return std::nullopt;
  };
  for (auto& r : reports) {
    const bool all_pass = r.cases_passed == r.cases_run;
    if (r.expectation == Expectation::holds) {
      r.expectation_met = all_pass;
      r.status = all_pass ? "pass" : "FAIL";
      continue;
    }
    if (all_pass) {
      r.expectation_met = false;
      r.status = "paper-discrepancy not reproduced";
      continue;
    }
    const std::optional<bool> variant_ok = r.corrected_variant ? clean(*r.corrected_variant) : std::nullopt;
    if (variant_ok && !*variant_ok) {
      r.expectation_met = false;
      r.status = "corrected variant failing";
    } else {
      r.expectation_met = true;
      r.status = "paper-discrepancy confirmed";
    }
  }
}

}  // namespace

Witness check_one(std::string_view id, long n, long k, const Lambda& lambda) {
  const Identity& e = find_identity(id);
  if (n < e.n_min || (e.n_cap && n > *e.n_cap)) throw std::invalid_argument("n outside the domain of " + e.id);
  if (k < e.k_min || (e.k_cap && k > *e.k_cap)) throw std::invalid_argument("k outside the domain of " + e.id);
  Lambda use = lambda;
  if (e.lambda_use == LambdaUse::none) {
    use = Rational(1);
  } else if (std::holds_alternative<Symbolic>(lambda)) {
    if (e.lambda_use == LambdaUse::numeric_only) {
      throw std::invalid_argument(e.id + " is checked at numeric lambda only");
    }
  } else if (e.lambda_ok && !e.lambda_ok(std::get<Rational>(lambda))) {
    throw std::invalid_argument("lambda outside the domain of " + e.id);
  }
  const CaseResult c = run_case(e, n, k, use);
  return Witness{c.ok, c.lhs, c.rhs};
}

Report run_suite(const SuiteOptions& options) {
  if (options.n_max < 2 || options.k_max < 2) throw std::invalid_argument("n_max and k_max must be at least 2");
  SuiteOptions opt = options;
  if (opt.lambdas.empty()) opt.lambdas = default_lambdas();

  std::vector<const Identity*> chosen;
  for (const auto& e : list_identities()) {
    if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), e.id) != opt.only.end()) {
      chosen.push_back(&e);
    }
  }
  for (const auto& id : opt.only) find_identity(id);

  std::vector<IdentityReport> reports(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) reports[i] = run_identity(*chosen[i], opt);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(chosen.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  assign_status(reports);

  Report rep;
  rep.options = opt;
  rep.identities = std::move(reports);
  rep.all_expectations_met = std::all_of(rep.identities.begin(), rep.identities.end(),
                                         [](const IdentityReport& r) { return r.expectation_met; });
  return rep;
}

const IdentityReport* Report::find(std::string_view id) const {
  for (const auto& r : identities) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json lambdas = ordered_json::array();
  for (const auto& l : options.lambdas) lambdas.push_back(l.str());
  j["options"] = {{"n_max", options.n_max},
                  {"k_max", options.k_max},
                  {"lambdas", lambdas},
                  {"symbolic", options.symbolic},
                  {"threads", options.threads}};
  j["all_expectations_met"] = all_expectations_met;
  ordered_json list = ordered_json::array();
  for (const auto& r : identities) {
    ordered_json o;
    o["id"] = r.id;
    o["statement"] = r.statement;
    o["source"] = r.source;
    o["provenance"] = r.provenance == Provenance::stated ? "stated" : "derived";
    o["expectation"] = std::string(expectation_name(r.expectation));
    o["corrected_variant"] = r.corrected_variant ? ordered_json(*r.corrected_variant) : ordered_json(nullptr);
    o["cases"] = r.cases_run;
    o["passed"] = r.cases_passed;
    o["status"] = r.status;
    o["expectation_met"] = r.expectation_met;
    if (r.first_counterexample) {
      const auto& c = *r.first_counterexample;
      o["counterexample"] = {{"n", c.n}, {"k", c.k}, {"lambda", c.lambda}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    } else {
      o["counterexample"] = nullptr;
    }
    list.push_back(std::move(o));
  }
  j["identities"] = std::move(list);
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& r : identities) {
    out << r.id << "  " << r.status << "  " << r.cases_passed << "/" << r.cases_run;
    if (r.first_counterexample && r.expectation == Expectation::paper_discrepancy) {
      const auto& c = *r.first_counterexample;
      out << "  at n=" << c.n << " k=" << c.k << " lambda=" << c.lambda << ": " << c.lhs << " vs " << c.rhs;
    } else if (r.first_counterexample) {
      const auto& c = *r.first_counterexample;
      out << "  first failure n=" << c.n << " k=" << c.k << " lambda=" << c.lambda << ": " << c.lhs << " vs "
          << c.rhs;
    }
    out << "\n";
  }
  out << (all_expectations_met ? "all expectations met" : "some expectations NOT met") << "\n";
  return out.str();
}

}  // namespace negord
