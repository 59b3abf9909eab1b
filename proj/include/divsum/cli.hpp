#ifndef DIVSUM_CLI_HPP
#define DIVSUM_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "divsum/dsum.hpp"

namespace divsum {

enum class OutputFormat { kCsv, kJson };

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitBreach = 1,  // a verification threshold failed
  kExitUsage = 2,
  kExitIo = 3,
};

struct DeltaTableOptions {
  double xmin = 1;
  double xmax = 100;
  double step = 1;
  double tol = 1e-9;  // B(x) error budget per row
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t sieve_limit = 1'000'000;
};

struct VerifyTheorem1Options {
  std::uint64_t xmax = 2000;
  bool decomposition_only = false;
  std::uint64_t sieve_limit = 1'000'000;
};

struct EulerSumOptions {
  std::string fn = "one";
  double a = 0;
  double b = 0;
  double tol = 1e-9;
  TailMode tail_mode = TailMode::kSawtooth;
  std::uint64_t sieve_limit = 1'000'000;
};

struct AfeSweepOptions {
  std::vector<double> s_list;
  std::vector<double> x_list;
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t sieve_limit = 1'000'000;
};

// Each command writes its table/report to `out` and diagnostics to `log`,
// and returns an ExitCode.  File handling lives in the CLI front end.
int run_delta_table(const DeltaTableOptions& opt, std::ostream& out, std::ostream& log);
int run_verify_theorem1(const VerifyTheorem1Options& opt, std::ostream& out, std::ostream& log);
int run_euler_sum(const EulerSumOptions& opt, std::ostream& out, std::ostream& log);
int run_afe_sweep(const AfeSweepOptions& opt, std::ostream& out, std::ostream& log);

}  // namespace divsum

#endif
