#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fdb/power_series.hpp"
#include "json_codec.hpp"

namespace {

// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 mathematical precondition violation (inner constant term nonzero).
constexpr int kUsageError = 2;
constexpr int kPreconditionError = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace fdb::cli;

  CLI::App app{"weighted integer compositions, truncated power series, and "
               "higher derivatives of composite functions"};
  app.require_subcommand(1);
  std::function<int()> runner;

  CountOptions count_options;
  std::string count_f, count_g;
  auto* count = app.add_subcommand(
      "count", "evaluate a weighted partition/composition count");
  count->add_option("--n", count_options.n, "target integer (>= 1)")->required();
  count->add_option("--mode", count_options.mode, "partition | composition | composition-g")
      ->required()
      ->check(CLI::IsMember({"partition", "composition", "composition-g"}));
  count->add_option("--f", count_f, "part-weight spec, inline JSON or file (default: all 1)");
  count->add_option("--g", count_g, "part-count-weight spec (default: all 1)");
  count->callback([&] {
    if (!count_f.empty()) count_options.f_spec = count_f;
    if (!count_g.empty()) count_options.g_spec = count_g;
    runner = [&] { return run_count(count_options); };
  });

  EnumerateOptions enumerate_options;
  auto* enumerate = app.add_subcommand(
      "enumerate", "list compositions or multiplicity vectors, one JSON array per line");
  enumerate->add_option("--n", enumerate_options.n, "target integer (>= 1)")->required();
  enumerate->add_option("--kind", enumerate_options.kind,
                        "compositions | multiplicity-vectors")
      ->required()
      ->check(CLI::IsMember({"compositions", "multiplicity-vectors"}));
  enumerate->callback([&] { runner = [&] { return run_enumerate(enumerate_options); }; });

  ComposeOptions compose_options;
  unsigned compose_precision = 0;
  auto* compose_cmd = app.add_subcommand(
      "compose", "compose two truncated series (inner constant term must be 0)");
  compose_cmd->add_option("--g", compose_options.g_series, "outer series, JSON array or file")
      ->required();
  compose_cmd->add_option("--f", compose_options.f_series, "inner series, JSON array or file")
      ->required();
  auto* precision_option = compose_cmd->add_option(
      "--precision", compose_precision, "output precision (default: shared input precision)");
  compose_cmd->callback([&] {
    if (*precision_option) compose_options.precision = compose_precision;
    runner = [&] { return run_compose(compose_options); };
  });

  DerivativeOptions derivative_options;
  auto* derivative = app.add_subcommand(
      "derivative", "nth derivative of a composite from derivative-value tables");
  derivative->add_option("--n", derivative_options.n, "derivative order (>= 1)")->required();
  derivative->add_option("--f", derivative_options.f_derivs,
                         "inner derivatives (F', F'', ...) as JSON array")
      ->required();
  derivative->add_option("--g", derivative_options.g_derivs,
                         "outer derivatives (G', G'', ...) at the inner value")
      ->required();
  derivative->callback([&] { runner = [&] { return run_derivative(derivative_options); }; });

  unsigned terms_n = 0;
  auto* terms = app.add_subcommand(
      "fdb-terms", "terms of the nth-derivative formula, one JSON object per line");
  terms->add_option("--n", terms_n, "derivative order (>= 1)")->required();
  terms->callback([&] { runner = [&] { return run_fdb_terms(terms_n); }; });

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand(
      "verify", "run the closed-form-vs-oracle equivalence battery");
  verify->add_option("--max-n", verify_options.max_n, "check all n up to this bound");
  verify->add_option("--trials", verify_options.trials, "random weight/coefficient draws");
  verify->add_option("--seed", verify_options.seed, "seed for the deterministic generator");
  verify->callback([&] { runner = [&] { return run_verify(verify_options); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return runner();
  } catch (const fdb::CompositionDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
