#ifndef BIRACAH_ORACLE_HPP
#define BIRACAH_ORACLE_HPP

#include "biracah/linalg.hpp"
#include "biracah/scalar.hpp"

#include <array>
#include <vector>

namespace biracah {

/// One sl_{-1}(2) module label (epsilon, mu).
struct ModuleParams {
  int epsilon = +1;  // +1 or -1
  Rational mu = 0;   // >= 0
  Rational lambda() const { return epsilon * mu; }
};

/// mu-number [n]_mu = n + mu (1 - (-1)^n).
Rational mu_number(int n, const Rational& mu);

/// Truncated generator matrices of one module: J0, R diagonal; Jp on the
/// subdiagonal, Jm on the superdiagonal.  Truncation drops the Jp entry
/// leaving row cutoff-1, so the defining relations hold on the leading
/// (cutoff-1) block only.
struct Generators {
  RealMatrix J0, Jp, Jm, R;
};
Generators build_generators(const ModuleParams& p, int cutoff);

/// Intermediate and total Casimir operators of three coupled modules,
/// restricted to the total-projection-m subspace of dimension (m+1)(m+2)/2.
/// Basis states (n1,n2,n3) with n1+n2+n3 = m enumerate lexicographically,
/// n1-major.
struct CasimirMatrices {
  std::vector<std::array<int, 3>> basis;
  RealMatrix K1, K2, K3, Q4;
};
CasimirMatrices intermediate_casimirs(const ModuleParams& p1, const ModuleParams& p2,
                                      const ModuleParams& p3, int m);

/// Brute-force Racah overlap table from explicit diagonalization: rows and
/// columns ordered by s12 / s23 of the closed-form spectra, phases fixed by
/// the first nonvanishing component in the product basis.
struct OracleRacah {
  int N = 0;
  unsigned digits_used = 0;
  std::vector<Rational> q12, q23;  // spectrum labels, s-ordered
  RealMatrix overlap;
  Real orthogonality_residual;  // max |R^T R - I|
  Real cross_error;             // 2x-precision agreement of |entries|
};
OracleRacah oracle_racah(const ModuleParams& p1, const ModuleParams& p2,
                         const ModuleParams& p3, int N,
                         unsigned digits = kDefaultDigits);

/// Two-module check of the Clebsch-Gordan spectrum
/// q12 = (-1)^{s+1} e1 e2 (mu1+mu2+1/2+s) per total level N <= Nmax.
struct CgReport {
  int n_max = 0;
  Real max_deviation;
  Real r3_residual;  // R^(3) - (-1)^N e1 e2 on each level
  Real cross_error;
};
CgReport cg_spectrum_check(const ModuleParams& p1, const ModuleParams& p2, int n_max,
                           unsigned digits = kDefaultDigits);

/// Casimir of the twisted pairing (31) built through the auxiliary slot-2
/// reflection; asserts entrywise equality with -K3 and returns it.
RealMatrix twisted_casimir(const ModuleParams& p1, const ModuleParams& p2,
                           const ModuleParams& p3, int m,
                           unsigned digits = kDefaultDigits);

/// Residuals of the defining relations on truncated generators (leading
/// block), used by the representation tests.
struct GeneratorResiduals {
  Real commutator_j0jp;  // [J0,Jp] - Jp
  Real commutator_j0jm;  // [J0,Jm] + Jm
  Real anti_jpjm;        // {Jp,Jm} - 2 J0
  Real anti_jr;          // {Jp,R}, {Jm,R}
  Real commutator_j0r;   // [J0,R]
  Real involution;       // R^2 - I (full block)
  Real parabose;         // [Jm,Jp] - 1 - 2 eps mu R
  Real casimir;          // Q + eps mu I
};
GeneratorResiduals verify_generators(const ModuleParams& p, int cutoff,
                                     unsigned digits = kDefaultDigits);

}  // namespace biracah

#endif
