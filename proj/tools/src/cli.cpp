#include "negord/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "negord/identities.hpp"
#include "negord/table.hpp"

namespace negord {

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Method method_or_throw(const std::string& s) {
  auto m = parse_method(s);
  if (!m) throw Usage("unknown method '" + s + "'");
  return *m;
}

struct TableArgs {
  std::string family;
  std::string lambda = "1";
  bool symbolic = false;
  std::string n = "0..9";
  std::string k = "0..9";
  std::string x = "0";
  std::string format = "csv";
  std::string method = "explicit";
  bool known_typos = false;
};

struct EvalArgs {
  std::string family;
  long n = 0;
  long k = 0;
  std::string lambda = "1";
  bool symbolic = false;
  std::string x = "0";
  std::string method = "explicit";
};

struct VerifyArgs {
  long n_max = 8;
  long k_max = 6;
  std::string lambdas = "1,-1,2,1/2,-3/5";
  bool symbolic = true;
  std::string json;
  unsigned threads = 1;
  std::string only;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  TableSpec spec;
  spec.family = a.family;
  spec.n = parse_range(a.n);
  spec.k = parse_range(a.k);
  spec.lambda = a.symbolic ? Lambda(Symbolic{}) : parse_lambda(a.lambda);
  spec.x = Rational::parse(a.x);
  spec.method = method_or_throw(a.method);
  const auto fmt = parse_format(a.format);
  if (!fmt) throw Usage("unknown format '" + a.format + "'");
  out << render(build_table(spec), *fmt, a.known_typos);
  return exit_code::ok;
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const Lambda lambda = a.symbolic ? Lambda(Symbolic{}) : parse_lambda(a.lambda);
  const Rational x = Rational::parse(a.x);
  if (a.method != "all") {
    out << value_str(evaluate(a.family, a.n, a.k, x, lambda, method_or_throw(a.method))) << "\n";
    return exit_code::ok;
  }
  std::vector<std::pair<Method, std::string>> results;
  for (Method m : methods_for(a.family)) {
    results.emplace_back(m, value_str(evaluate(a.family, a.n, a.k, x, lambda, m)));
  }
  for (const auto& [m, v] : results) out << method_name(m) << " " << v << "\n";
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const auto& r) { return r.second == results.front().second; });
  if (!agree) {
    err << "methods disagree for " << a.family << "(" << a.n << "," << a.k << ")\n";
    return exit_code::disagreement;
  }
  return exit_code::ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.n_max = a.n_max;
  opt.k_max = a.k_max;
  for (const auto& s : split(a.lambdas, ',')) opt.lambdas.push_back(Rational::parse(s));
  if (opt.lambdas.empty()) throw Usage("--lambdas needs at least one value");
  opt.symbolic = a.symbolic;
  opt.threads = a.threads;
  opt.only = split(a.only, ',');
  const Report rep = run_suite(opt);
  out << rep.to_text();
  if (!a.json.empty()) {
    std::ofstream f(a.json);
    f << rep.to_json() << "\n";
    f.close();
    if (!f) {
      err << "cannot write " << a.json << "\n";
      return exit_code::io;
    }
  }
  return rep.all_expectations_met ? exit_code::ok : exit_code::disagreement;
}

int cmd_families(std::ostream& out) {
  for (const auto& f : family_catalog()) {
    out << f.tag << "  " << f.summary << "  [";
    for (std::size_t i = 0; i < f.methods.size(); ++i) out << (i ? "," : "") << method_name(f.methods[i]);
    out << "]" << (f.uses_lambda && !f.symbolic ? "  numeric lambda only" : "") << "\n";
  }
  return exit_code::ok;
}

int cmd_identities(std::ostream& out) {
  for (const auto& e : list_identities()) {
    out << e.id << "  " << expectation_name(e.expectation);
    if (e.corrected_variant) out << " (corrected: " << *e.corrected_variant << ")";
    out << "\n    " << e.statement << "\n";
    if (!e.note.empty()) out << "    note: " << e.note << "\n";
  }
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact special-number families, tables and identity checks", "negord"};
  app.require_subcommand(1);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Print a table of a family over n and k ranges");
  table->add_option("family", ta.family, "Family tag (see `families`)")->required();
  table->add_option("--lambda", ta.lambda, "Exact rational lambda");
  table->add_flag("--symbolic", ta.symbolic, "Laurent polynomials in lambda");
  table->add_option("--n", ta.n, "Range a..b");
  table->add_option("--k", ta.k, "Range a..b");
  table->add_option("--x", ta.x, "Polynomial argument");
  table->add_option("--format", ta.format, "csv | json | latex | text");
  table->add_option("--method", ta.method, "explicit | series | recurrence");
  table->add_flag("--known-typos", ta.known_typos, "Annotate cells printed differently in the published tables");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a family at one point");
  eval->add_option("family", ea.family, "Family tag")->required();
  eval->add_option("n", ea.n, "Index n")->required();
  eval->add_option("k", ea.k, "Order k");
  eval->add_option("--lambda", ea.lambda, "Exact rational lambda");
  eval->add_flag("--symbolic", ea.symbolic, "Laurent polynomial in lambda");
  eval->add_option("--x", ea.x, "Polynomial argument");
  eval->add_option("--method", ea.method, "explicit | series | recurrence | all");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--n-max", va.n_max, "Largest n");
  verify->add_option("--k-max", va.k_max, "Largest k");
  verify->add_option("--lambdas", va.lambdas, "Comma-separated rationals");
  verify->add_flag("--symbolic,!--no-symbolic", va.symbolic, "Also check as Laurent identities");
  verify->add_option("--json", va.json, "Write the JSON report here");
  verify->add_option("--threads", va.threads, "Worker threads");
  verify->add_option("--only", va.only, "Comma-separated identity ids");

  auto* families = app.add_subcommand("families", "List family tags");
  auto* identities = app.add_subcommand("identities", "List registered identities");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "negord: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (*table) return cmd_table(ta, out);
    if (*eval) return cmd_eval(ea, out, err);
    if (*verify) return cmd_verify(va, out, err);
    if (*families) return cmd_families(out);
    if (*identities) return cmd_identities(out);
  } catch (const std::invalid_argument& e) {
    err << "negord: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::domain_error& e) {
    err << "negord: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::out_of_range& e) {
    err << "negord: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace negord
