#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "divsum/cli.hpp"
#include "divsum/errors.hpp"

namespace {

using divsum::OutputFormat;
using divsum::TailMode;

// Runs a command, routing its table/report either to stdout or to --out PATH.
template <class Runner>
int with_output(const std::string& out_path, Runner&& run) {
  if (out_path.empty()) return run(std::cout);
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "error: cannot open output file: " << out_path << '\n';
    return divsum::kExitIo;
  }
  const int rc = run(os);
  os.flush();
  if (!os) {
    std::cerr << "error: write failed: " << out_path << '\n';
    return divsum::kExitIo;
  }
  return rc;
}

template <class Runner>
int guarded(Runner&& run) {
  try {
    return run();
  } catch (const divsum::tolerance_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return divsum::kExitBreach;
  } catch (const divsum::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return divsum::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return divsum::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return divsum::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return divsum::kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return divsum::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet divisor remainder decomposition, divisor-weighted "
               "Euler summation, and real-s zeta tail identities"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> format_map{
      {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};
  const std::map<std::string, TailMode> tail_map{
      {"sawtooth", TailMode::kSawtooth}, {"fourier", TailMode::kFourier}};

  divsum::DeltaTableOptions dt;
  std::string dt_out;
  auto* cmd_dt = app.add_subcommand(
      "delta-table", "Tabulate D(x), the main term, Delta(x) = A(x) + B(x)");
  cmd_dt->add_option("--xmin", dt.xmin, "first x (>= 1)");
  cmd_dt->add_option("--xmax", dt.xmax, "last x");
  cmd_dt->add_option("--step", dt.step, "grid step (> 0)");
  cmd_dt->add_option("--tol", dt.tol, "B(x) error budget per row");
  cmd_dt->add_option("--format", dt.format, "csv|json")
      ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
  cmd_dt->add_option("--out", dt_out, "output path (default: stdout)");
  cmd_dt->add_option("--sieve-limit", dt.sieve_limit, "divisor sieve size");

  divsum::VerifyTheorem1Options v1;
  auto* cmd_v1 = app.add_subcommand(
      "verify-theorem1", "Sweep the trig formula and the Delta = A + B identity");
  cmd_v1->add_option("--xmax", v1.xmax, "sweep upper bound");
  cmd_v1->add_flag("--decomposition-only", v1.decomposition_only,
                   "skip the trigonometric-formula sweep");
  cmd_v1->add_option("--sieve-limit", v1.sieve_limit, "divisor sieve size");

  divsum::EulerSumOptions es;
  auto* cmd_es = app.add_subcommand(
      "euler-sum", "Evaluate both sides of the divisor-weighted summation formula");
  cmd_es->add_option("--fn", es.fn, "one|id|inv|log|expdecay");
  cmd_es->add_option("--a", es.a, "interval start (> 0)")->required();
  cmd_es->add_option("--b", es.b, "interval end (>= a)")->required();
  cmd_es->add_option("--tol", es.tol, "quadrature tolerance");
  cmd_es->add_option("--tail-mode", es.tail_mode, "sawtooth|fourier")
      ->transform(CLI::CheckedTransformer(tail_map, CLI::ignore_case));
  cmd_es->add_option("--sieve-limit", es.sieve_limit, "divisor sieve size");

  divsum::AfeSweepOptions af;
  std::string af_out;
  auto* cmd_af = app.add_subcommand(
      "afe-sweep", "Zeta approximate-functional-equation tails over an (s, x) grid");
  cmd_af->add_option("--s", af.s_list, "s values (s > 0, s != 1)")
      ->delimiter(',')
      ->required();
  cmd_af->add_option("--x", af.x_list, "x values")->delimiter(',')->required();
  cmd_af->add_option("--format", af.format, "csv|json")
      ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
  cmd_af->add_option("--out", af_out, "output path (default: stdout)");
  cmd_af->add_option("--sieve-limit", af.sieve_limit, "divisor sieve size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return divsum::kExitUsage;
  }

  if (cmd_dt->parsed()) {
    return guarded([&] {
      return with_output(dt_out, [&](std::ostream& os) {
        return divsum::run_delta_table(dt, os, std::cerr);
      });
    });
  }
  if (cmd_v1->parsed()) {
    return guarded([&] { return divsum::run_verify_theorem1(v1, std::cout, std::cerr); });
  }
  if (cmd_es->parsed()) {
    return guarded([&] { return divsum::run_euler_sum(es, std::cout, std::cerr); });
  }
  if (cmd_af->parsed()) {
    return guarded([&] {
      return with_output(af_out, [&](std::ostream& os) {
        return divsum::run_afe_sweep(af, os, std::cerr);
      });
    });
  }
  return divsum::kExitUsage;
}
