#include "plethyst/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>

#include "plethyst/error.hpp"
#include "plethyst/plethysm.hpp"
#include "plethyst/serialize.hpp"
#include "plethyst/verify.hpp"

namespace plethyst::cli {

int hard_cap() {
  const char* env = std::getenv("PLETHYST_MAX_N");
  if (!env) return kDefaultHardCap;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) return kDefaultHardCap;
  return value;
}

namespace {

struct PairArgs {
  std::string lambda;
  std::string mu;
};

void check_cap(int mn, int cap, std::ostream& err) {
  if (mn > cap)
    throw BoundError("mn = " + std::to_string(mn) + " exceeds the cap of " +
                     std::to_string(cap) + " (raise it with PLETHYST_MAX_N)");
  if (mn > kSoftMaxDegree)
    err << "warning: degree " << mn << " is above " << kSoftMaxDegree
        << "; enumeration may be slow\n";
}

std::pair<Partition, Partition> parse_pair(const PairArgs& args) {
  auto lambda = Partition::parse(args.lambda);
  auto mu = Partition::parse(args.mu);
  if (lambda.empty() || mu.empty()) throw ParseError("lambda and mu must be non-empty");
  return {lambda, mu};
}

int cmd_expand(const PairArgs& args, Basis basis, Format format, std::ostream& out,
               std::ostream& err) {
  auto [lambda, mu] = parse_pair(args);
  int cap = hard_cap();
  check_cap(lambda.size() * mu.size(), cap, err);
  SymFunc f = basis == Basis::schur ? schur_expansion(lambda, mu, cap)
                                    : monomial_expansion(lambda, mu, cap);
  if (format == Format::json)
    out << to_json(f).dump(2) << '\n';
  else
    out << render(f) << '\n';
  return kSuccess;
}

void print_checks(const ExpansionReport& r, std::ostream& out) {
  out << "observed first term: " << r.observed_first_term.to_string()
      << " (coefficient " << to_decimal(r.first_term_coefficient) << ")\n";
  for (const auto& [name, ok] : r.checks) out << (ok ? "PASS " : "FAIL ") << name << '\n';
}

int cmd_first_term(const PairArgs& args, bool verify, bool oracle, Format format,
                   std::ostream& out, std::ostream& err) {
  auto [lambda, mu] = parse_pair(args);
  int cap = hard_cap();
  check_cap(lambda.size() * mu.size(), cap, err);
  auto nu0 = first_term(lambda, mu);
  if (!verify) {
    if (format == Format::json)
      out << Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"first_term", to_json(nu0)}}
                 .dump(2)
          << '\n';
    else
      out << nu0.to_string() << '\n';
    return kSuccess;
  }
  auto report = verify_first_term(lambda, mu, oracle, cap);
  if (format == Format::json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << nu0.to_string() << '\n';
    print_checks(report, out);
  }
  return report.passed() ? kSuccess : kCheckFailure;
}

int cmd_verify(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  int cap = hard_cap();
  if (config.max_product > cap)
    throw BoundError("--max-product " + std::to_string(config.max_product) +
                     " exceeds the cap of " + std::to_string(cap));
  if (config.max_product > kSoftMaxDegree)
    err << "warning: sweeping up to mn = " << config.max_product << " may be slow\n";

  auto pairs = sweep_pairs(config.max_product);
  auto outcomes = run_sweep(pairs, config.oracle, config.parallelism, cap);

  std::size_t passed = 0, oracle_ok = 0;
  Json results = Json::array();
  for (const auto& o : outcomes) {
    if (o.passed) ++passed;
    if (o.error.empty() && o.report.check(check::oracle_agreement)) ++oracle_ok;
    Json entry = o.error.empty() ? to_json(o.report)
                                 : Json{{"lambda", to_json(o.lambda)}, {"mu", to_json(o.mu)}};
    entry["passed"] = o.passed;
    if (!o.error.empty()) entry["error"] = o.error;
    results.push_back(std::move(entry));
  }
  const std::size_t failed = outcomes.size() - passed;

  Json report{{"schema", 1},
              {"max_product", config.max_product},
              {"oracle", config.oracle},
              {"pairs", outcomes.size()},
              {"passed", passed},
              {"failed", failed},
              {"results", std::move(results)}};

  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "error: cannot open " << *config.output_path << " for writing\n";
      return kIoError;
    }
    file << report.dump(2) << '\n';
    if (!file) {
      err << "error: failed writing " << *config.output_path << '\n';
      return kIoError;
    }
  }

  if (config.format == Format::json) {
    out << report.dump(2) << '\n';
  } else {
    out << "checked " << outcomes.size() << " pairs with mn <= " << config.max_product << ": "
        << passed << " passed, " << failed << " failed\n";
    if (config.oracle)
      out << "oracle agreement: " << oracle_ok << "/" << outcomes.size() << '\n';
    for (const auto& o : outcomes) {
      if (o.passed) continue;
      out << "FAIL lambda=" << o.lambda.to_string() << " mu=" << o.mu.to_string() << ": ";
      if (!o.error.empty()) {
        out << o.error << '\n';
        continue;
      }
      bool first = true;
      for (const auto& [name, ok] : o.report.checks)
        if (!ok) {
          out << (first ? "" : ", ") << name;
          first = false;
        }
      out << " (predicted " << o.report.predicted_first_term.to_string() << ", observed "
          << o.report.observed_first_term.to_string() << ")\n";
    }
  }
  return failed == 0 ? kSuccess : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plethysm of Schur functions: expansions, first terms and verification sweeps",
               "plethyst"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  const std::map<std::string, Basis> bases{{"schur", Basis::schur},
                                           {"monomial", Basis::monomial}};

  PairArgs pair;
  Basis basis = Basis::schur;
  Format format = Format::text;
  bool verify = false, oracle = false;
  SweepConfig sweep;

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--lambda,lambda", pair.lambda, "outer partition, e.g. 3,1")->required();
    sub->add_option("--mu,mu", pair.mu, "inner partition, e.g. 2,2")->required();
    sub->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* expand = app.add_subcommand("expand", "expand s_lambda[s_mu] in the Schur or monomial basis");
  add_pair(expand);
  expand->add_option("--basis", basis, "target basis")
      ->transform(CLI::CheckedTransformer(bases, CLI::ignore_case));

  auto* first = app.add_subcommand("first-term", "predict (and optionally verify) the first term");
  add_pair(first);
  first->add_flag("--verify", verify, "compute the expansion and check the prediction");
  first->add_flag("--oracle", oracle, "also compare against the power-sum oracle");

  auto* sweep_cmd = app.add_subcommand("verify", "exhaustive sweep over all pairs with mn <= N");
  sweep_cmd->add_option("--max-product", sweep.max_product, "bound N on mn")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_flag("--oracle", sweep.oracle, "compare every pair against the oracle");
  sweep_cmd->add_option("--out", sweep.output_path, "write the JSON report here");
  sweep_cmd->add_option("--format", sweep.format, "stdout format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sweep_cmd->add_option("--jobs", sweep.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }

  try {
    if (expand->parsed()) return cmd_expand(pair, basis, format, out, err);
    if (first->parsed()) return cmd_first_term(pair, verify, oracle, format, out, err);
    return cmd_verify(sweep, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << '\n';
    return kBoundError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }
}

}  // namespace plethyst::cli
