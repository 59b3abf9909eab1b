#include "divsum/cli.hpp"

#include <cmath>
#include <exception>
#include <iomanip>

#include "divsum/errors.hpp"
#include "divsum/remainder.hpp"
#include "divsum/table.hpp"
#include "divsum/zeta_afe.hpp"

namespace divsum {

namespace {

void emit(const Table& t, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::kCsv) {
    write_csv(t, os);
  } else {
    write_json(t, os);
  }
}

int usage_error(std::ostream& log, const std::string& msg) {
  log << "error: " << msg << '\n';
  return kExitUsage;
}

}  // namespace

int run_delta_table(const DeltaTableOptions& opt, std::ostream& out, std::ostream& log) {
  if (!(opt.xmin >= 1)) return usage_error(log, "delta-table: xmin must be >= 1");
  if (!(opt.step > 0)) return usage_error(log, "delta-table: step must be > 0");
  if (!(opt.tol > 0)) return usage_error(log, "delta-table: tol must be > 0");
  if (opt.xmax > double(opt.sieve_limit)) {
    return usage_error(log, "delta-table: xmax exceeds sieve limit " +
                                std::to_string(opt.sieve_limit) +
                                " (range error; raise --sieve-limit)");
  }
  Table t;
  t.columns = {"x", "D", "main_term", "delta", "A", "B", "residual"};
  double max_residual = 0.0;
  if (opt.xmax >= opt.xmin) {
    const DivisorSieve sieve(opt.sieve_limit);
    for (double x = opt.xmin; x <= opt.xmax; x += opt.step) {
      const auto r = decompose(x, sieve, opt.tol);
      t.rows.push_back({r.x, double(r.D), r.main_term, r.delta, r.A, r.B, r.residual});
      max_residual = std::max(max_residual, std::fabs(r.residual));
    }
  }
  emit(t, opt.format, out);
  log << "delta-table: " << t.rows.size() << " rows, max |residual| = "
      << format_g17(max_residual) << '\n';
  return max_residual <= 1e-6 ? kExitOk : kExitBreach;
}

int run_verify_theorem1(const VerifyTheorem1Options& opt, std::ostream& out,
                        std::ostream& log) {
  if (opt.xmax < 1) return usage_error(log, "verify-theorem1: xmax must be >= 1");
  if (opt.xmax > opt.sieve_limit) {
    return usage_error(log, "verify-theorem1: xmax exceeds sieve limit " +
                                std::to_string(opt.sieve_limit));
  }
  bool ok = true;
  if (!opt.decomposition_only && opt.xmax >= 2) {
    const double dev_cot = A_trig_sweep_max_dev(2, opt.xmax, TrigMode::kCotangent);
    const double dev_pf = A_trig_sweep_max_dev(2, opt.xmax, TrigMode::kPartialFraction);
    const bool ok_cot = dev_cot <= 1e-10;
    const bool ok_pf = dev_pf <= 1e-6;
    out << "A_trig cotangent sweep x in [2, " << opt.xmax
        << "]: max |A_trig - A| = " << format_g17(dev_cot)
        << (ok_cot ? "  PASS (<= 1e-10)" : "  FAIL (> 1e-10)") << '\n';
    out << "A_trig partial-fraction sweep x in [2, " << opt.xmax
        << "]: max |A_trig - A| = " << format_g17(dev_pf)
        << (ok_pf ? "  PASS (<= 1e-6)" : "  FAIL (> 1e-6)") << '\n';
    ok = ok && ok_cot && ok_pf;
  }
  {
    const DivisorSieve sieve(opt.sieve_limit);
    double max_res = 0.0;
    for (std::uint64_t x = 1; x <= opt.xmax; ++x) {
      const auto r = decompose(double(x), sieve, 8.0 * double(x) * 1e-12);
      max_res = std::max(max_res, std::fabs(r.residual));
    }
    const bool ok_dec = max_res <= 1e-6;
    out << "decomposition sweep x in [1, " << opt.xmax
        << "]: max |Delta - A - B| = " << format_g17(max_res)
        << (ok_dec ? "  PASS (<= 1e-6)" : "  FAIL (> 1e-6)") << '\n';
    ok = ok && ok_dec;
  }
  log << "verify-theorem1: " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? kExitOk : kExitBreach;
}

int run_euler_sum(const EulerSumOptions& opt, std::ostream& out, std::ostream& log) {
  if (!(opt.b >= opt.a) || !(opt.a > 0)) {
    return usage_error(log, "euler-sum: need 0 < a <= b");
  }
  if (!(opt.tol > 0)) return usage_error(log, "euler-sum: tol must be > 0");
  if (std::floor(opt.b) > double(opt.sieve_limit)) {
    return usage_error(log, "euler-sum: b exceeds sieve limit " +
                                std::to_string(opt.sieve_limit));
  }
  SmoothFn fn;
  try {
    fn = make_test_function(opt.fn, opt.a, opt.b);
  } catch (const std::invalid_argument& e) {
    return usage_error(log, e.what());
  }
  const DivisorSieve sieve(opt.sieve_limit);
  QuadConfig cfg;
  cfg.abs_tol = opt.tol;
  Theorem2Breakdown r;
  try {
    r = rhs_theorem2(fn, sieve, cfg, opt.tail_mode);
  } catch (const tolerance_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitBreach;
  }
  out << "fn=" << opt.fn << " interval=(" << format_g17(opt.a) << ", "
      << format_g17(opt.b) << "] tail-mode="
      << (opt.tail_mode == TailMode::kSawtooth ? "sawtooth" : "fourier") << '\n';
  out << "lhs       = " << format_g17(r.lhs) << '\n';
  const double terms[8] = {r.t1, r.t2, r.t3, r.t4, r.t5, r.t6, r.t7, r.t8};
  for (int i = 0; i < 8; ++i) {
    out << "t" << (i + 1) << "        = " << format_g17(terms[i]) << '\n';
  }
  out << "rhs_total = " << format_g17(r.rhs_total) << '\n';
  out << "residual  = " << format_g17(r.residual) << '\n';
  const double gate = std::max(1e-6, 10.0 * opt.tol);
  const bool ok = std::fabs(r.residual) <= gate;
  log << "euler-sum: |residual| = " << format_g17(std::fabs(r.residual))
      << (ok ? " <= " : " > ") << format_g17(gate) << (ok ? " pass" : " FAIL")
      << '\n';
  return ok ? kExitOk : kExitBreach;
}

int run_afe_sweep(const AfeSweepOptions& opt, std::ostream& out, std::ostream& log) {
  if (opt.s_list.empty() || opt.x_list.empty()) {
    return usage_error(log, "afe-sweep: need at least one --s and one --x");
  }
  std::string bad;
  for (double s : opt.s_list) {
    if (s == 1.0 || !(s > 0.0)) bad += (bad.empty() ? "" : ", ") + format_g17(s);
  }
  if (!bad.empty()) {
    return usage_error(log, "afe-sweep: s values outside (0,1)u(1,inf): " + bad);
  }
  for (double x : opt.x_list) {
    if (!(x >= 1.0)) return usage_error(log, "afe-sweep: x values must be >= 1");
    if (std::floor(x) > double(opt.sieve_limit)) {
      return usage_error(log, "afe-sweep: x exceeds sieve limit " +
                                  std::to_string(opt.sieve_limit));
    }
  }
  const DivisorSieve sieve(opt.sieve_limit);
  Table t;
  t.columns = {"s", "x", "E1", "E2", "hyperbola_residual", "theorem3_residual",
               "scaled_residual"};
  bool ok = true;
  for (double s : opt.s_list) {
    for (double x : opt.x_list) {
      const auto rec = afe_record(s, x, sieve);
      t.rows.push_back({rec.s, rec.x, rec.E1, rec.E2, rec.hyperbola_residual,
                        rec.theorem3_residual, rec.scaled_residual});
      if (std::fabs(rec.hyperbola_residual) >
          1e-10 * std::max(1.0, std::fabs(rec.E2))) {
        ok = false;
      }
    }
  }
  emit(t, opt.format, out);
  log << "afe-sweep: " << t.rows.size() << " rows, hyperbola residuals "
      << (ok ? "pass" : "FAIL") << " (1e-10 relative)" << '\n';
  return ok ? kExitOk : kExitBreach;
}

}  // namespace divsum
