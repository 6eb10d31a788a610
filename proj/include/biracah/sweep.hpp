#ifndef BIRACAH_SWEEP_HPP
#define BIRACAH_SWEEP_HPP

#include "biracah/scalar.hpp"

#include <functional>
#include <string>
#include <vector>

namespace biracah {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Check {
  std::string name;
  // returns (pass, detail); thrown exceptions are recorded as failures
  std::function<std::pair<bool, std::string>()> fn;
};

/// Runs every check and returns results in input order.  The parallel path
/// distributes checks over OpenMP threads; the serial path is the reference
/// the parallel one is tested against.  Checks scheduled in parallel must not
/// touch the global Real precision (exact-rational work only).
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, bool parallel);

struct SweepOptions {
  std::vector<Rational> mu_grid = {Rational(0), Rational(1, 2), Rational(1),
                                   Rational(3, 2), Rational(2)};
  int n_max = 6;
  int oracle_n_max = 3;
  unsigned digits = kDefaultDigits;
  unsigned seed = 20120904;
  std::string inject_fault;  // debug: "u1" flips one recurrence entry
};

/// Exact-rational invariants (BI algebra, AW relations, Casimir value,
/// orthogonality/unitarity, representation agreement, degenerate reduction,
/// Klein invariance).  Safe under the OpenMP runner.
std::vector<Check> exact_suite(const SweepOptions& opt);

/// High-precision checks (spectra, Leonard triple, CG spectrum, twisted
/// coproduct, oracle comparison).  Run these serially: MPFR's working
/// precision is process-global.
std::vector<Check> numeric_suite(const SweepOptions& opt);

}  // namespace biracah

#endif
