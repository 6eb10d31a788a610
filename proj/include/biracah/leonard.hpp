#ifndef BIRACAH_LEONARD_HPP
#define BIRACAH_LEONARD_HPP

#include "biracah/bi_polynomials.hpp"
#include "biracah/linalg.hpp"
#include "biracah/scalar.hpp"

#include <array>
#include <vector>

namespace biracah {

struct StructureConstants {
  Rational alpha1, alpha2, alpha3;
};

/// alpha1 = -2(l1 l2 + l3 l4), alpha2 = -2(l1 l4 + l2 l3), alpha3 = 2(l1 l3 + l2 l4).
StructureConstants structure_constants(const std::array<Rational, 4>& lam);

/// The (K1, K2) Leonard pair of the Racah problem: K1 diagonal with spectrum
/// theta_i = (-1)^{i+1}(mu1+mu2+1/2+i), K2 tridiagonal with unit superdiagonal,
/// diagonal b_n and subdiagonal u_n, plus the q=-1 Askey-Wilson constants.
struct LeonardPair {
  int N = 0;
  int eps4 = +1;                 // (-1)^N
  std::array<Rational, 4> mus;   // mu1..mu3 and derived mu4 = mu1+mu2+mu3+N+1
  std::vector<Rational> theta;   // K1 spectrum, s-ordered
  std::vector<Rational> b;       // K2 diagonal, b_0..b_N
  std::vector<Rational> u;       // u[n] = u_n for n = 0..N+1 (u_0 = 0)
  Rational kappa1, kappa2, kappa3;
};

LeonardPair build_leonard_pair(const Rational& mu1, const Rational& mu2,
                               const Rational& mu3, int N);

/// Single coefficients of the tridiagonal model (same formulas the builder
/// uses); exposed for the degenerate-case checks.
Rational leonard_b(const Rational& mu1, const Rational& mu2, const Rational& mu3,
                   int N, int n);
Rational leonard_u(const Rational& mu1, const Rational& mu2, const Rational& mu3,
                   int N, int n);

RatMatrix k1_matrix(const LeonardPair& lp);
RatMatrix k2_matrix(const LeonardPair& lp);
/// K3 := {K1,K2} - alpha3 I.
RatMatrix k3_matrix(const LeonardPair& lp);

struct BiAlgebraResiduals {
  Rational rel_k2k3;  // max-abs of {K2,K3} - K1 - alpha1 I
  Rational rel_k1k3;  // max-abs of {K1,K3} - K2 - alpha2 I
  Rational casimir;   // max-abs of K1^2+K2^2+K3^2 - (sum lam^2 - 1/4) I
  bool all_zero() const { return rel_k2k3 == 0 && rel_k1k3 == 0 && casimir == 0; }
};
BiAlgebraResiduals verify_bi_algebra(const LeonardPair& lp);

struct AwResiduals {
  Rational aw1;  // K1^2 K2 + 2 K1 K2 K1 + K2 K1^2 - K2 - kappa3 K1 - kappa2 I
  Rational aw2;  // K2^2 K1 + 2 K2 K1 K2 + K1 K2^2 - K1 - kappa3 K2 - kappa1 I
  bool all_zero() const { return aw1 == 0 && aw2 == 0; }
};
AwResiduals verify_aw_relations(const LeonardPair& lp);

struct TripleReport {
  Real off_band_max;       // largest |entry| beyond the tridiagonal band
  Real band_min;           // smallest |sub/superdiagonal entry|
  Real k2_spectrum_dev;    // vs theta*_s
  Real k3_spectrum_dev;    // vs the matched sign convention
  int k3_sign_convention;  // +1: (-1)^i (mu1+mu3+1/2+i), -1: globally flipped
  Real cross_error;        // eigenvalue 2x-precision agreement
};

/// Diagonalizes K2 and K3, checks that K1 (and K2 in the K3 basis) is
/// irreducible tridiagonal there and that K3 carries the alternating-sign
/// spectrum +-(mu1+mu3+1/2+i).  Module-level thresholds: off-band < eps,
/// band > sqrt(eps); throws NotIrreducible / SpectrumMismatch past them.
TripleReport leonard_triple_check(const LeonardPair& lp, unsigned digits);

struct Extraction {
  BIParams bi;
  // spectral map x_s = -theta*_s/2 - 1/4 and monic rescale P_n = (-2)^{-n} Pt_n
  std::vector<Rational> x;  // x_s for s = 0..N
};

/// Identifies the BI parameters behind the pair and checks the truncation
/// identity for the parity of N; throws TruncationViolation on failure.
Extraction extract_polynomials(const LeonardPair& lp);

}  // namespace biracah

#endif
