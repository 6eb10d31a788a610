#ifndef BIRACAH_RACAH_HPP
#define BIRACAH_RACAH_HPP

#include "biracah/bi_polynomials.hpp"
#include "biracah/leonard.hpp"
#include "biracah/linalg.hpp"
#include "biracah/oracle.hpp"

#include <array>
#include <utility>
#include <vector>

namespace biracah {

/// Closed-form Racah table.  The exact ingredients (grid, weights,
/// normalizations, polynomial values) are kept as rationals; the orthogonal
/// matrix of coefficients is a derived view computed at a requested
/// precision.  Entry (n, l) is sqrt(Omega_l / Phi_{N,n}) P_n(x_l) with the
/// sign convention that the first nonzero entry of every row is positive.
struct RacahTable {
  int N = 0;
  int eps4 = +1;
  std::array<Rational, 4> mus;     // mu1..mu3, derived mu4
  std::vector<Rational> q12, q23;  // eigenvalue labels, s-ordered
  TruncationFamily family;
  OrthogonalityTable ortho;
  RatMatrix pvals;  // P_n(x_l)

  /// (Omega_l / Phi_n) * P_n(x_l)^2, exact; the entrywise square of the
  /// table up to the sign bookkeeping.
  RatMatrix signed_squares() const;

  /// Entries flagged because Omega_l / Phi_n < 0 (square root taken of the
  /// absolute value).  Empty for every valid family.
  std::vector<std::pair<int, int>> negative_under_root() const;

  std::vector<int> omega_signs() const;  // sign of each weight

  RealMatrix entries(unsigned digits = kDefaultDigits) const;
};

/// Builds the table through the parameter identification of the Racah
/// problem (mu4 = mu1+mu2+mu3+N+1, eps4 = (-1)^N); throws
/// TruncationViolation if the derived family misses its truncation identity.
RacahTable racah_table(const Rational& mu1, const Rational& mu2, const Rational& mu3,
                       int N);

/// max |R^T R - I| evaluated from exact signed products; square roots enter
/// only to scale a nonzero deviation, so the result is exactly zero whenever
/// the discrete orthogonality holds.
Real verify_unitarity(const RacahTable& t, unsigned digits = kDefaultDigits);

/// max_n,l | |R_formula| - |R_oracle| |; N capped by `max_oracle_n`.
Real compare_with_oracle(const Rational& mu1, const Rational& mu2, const Rational& mu3,
                         int N, unsigned digits = kDefaultDigits,
                         int max_oracle_n = 8);

}  // namespace biracah

#endif
