#include "biracah/racah.hpp"

namespace biracah {

RacahTable racah_table(const Rational& mu1, const Rational& mu2, const Rational& mu3,
                       int N) {
  if (N < 0) throw Error("racah_table: N must be nonnegative");
  if (mu1 < 0 || mu2 < 0 || mu3 < 0)
    throw Error("racah_table: mu parameters must be nonnegative");
  RacahTable t;
  t.N = N;
  t.eps4 = (N % 2 == 0) ? +1 : -1;
  t.mus = {mu1, mu2, mu3, mu1 + mu2 + mu3 + N + 1};

  // a = mu1, b = mu2, c = mu3 (N even); alpha = mu1, beta = mu2, gamma = mu3 (N odd)
  t.family = (N % 2 == 0) ? make_family_even(mu1, mu2, mu3, N)
                          : make_family_odd(mu1, mu2, mu3, N);

  // the identified BI parameters must coincide with the family's
  const Rational e4m4 = t.eps4 * t.mus[3];
  BIParams ident = BIParams::make((mu2 + mu3) / 2, (mu1 + e4m4) / 2, (mu3 - mu2) / 2,
                                  (e4m4 - mu1) / 2);
  if (ident.rho1 != t.family.bi.rho1 || ident.rho2 != t.family.bi.rho2 ||
      ident.r1 != t.family.bi.r1 || ident.r2 != t.family.bi.r2)
    throw TruncationViolation("racah_table: parameter identification mismatch");

  t.ortho = orthogonality_table(t.family);
  t.pvals = RatMatrix(N + 1, N + 1);
  for (int n = 0; n <= N; ++n)
    for (int l = 0; l <= N; ++l)
      t.pvals(n, l) = eval_monic(t.family.bi, n, t.ortho.x[l]);

  for (int s = 0; s <= N; ++s) {
    Rational v12 = mu1 + mu2 + Rational(1, 2) + s;
    Rational v23 = mu2 + mu3 + Rational(1, 2) + s;
    t.q12.push_back(s % 2 == 0 ? -v12 : v12);
    t.q23.push_back(s % 2 == 0 ? -v23 : v23);
    // index maps n = |q12| - mu1 - mu2 - 1/2, l = |q23| - mu2 - mu3 - 1/2
    if (abs(t.q12.back()) - mu1 - mu2 - Rational(1, 2) != s ||
        abs(t.q23.back()) - mu2 - mu3 - Rational(1, 2) != s)
      throw Error("racah_table: index map is not the identity on 0..N");
  }
  return t;
}

RatMatrix RacahTable::signed_squares() const {
  RatMatrix sq(N + 1, N + 1);
  for (int n = 0; n <= N; ++n)
    for (int l = 0; l <= N; ++l)
      sq(n, l) = ortho.omega[l] / ortho.phi[n] * pvals(n, l) * pvals(n, l);
  return sq;
}

std::vector<std::pair<int, int>> RacahTable::negative_under_root() const {
  std::vector<std::pair<int, int>> flagged;
  for (int n = 0; n <= N; ++n)
    for (int l = 0; l <= N; ++l)
      if (ortho.omega[l] / ortho.phi[n] < 0) flagged.emplace_back(n, l);
  return flagged;
}

std::vector<int> RacahTable::omega_signs() const {
  std::vector<int> signs;
  signs.reserve(N + 1);
  for (const Rational& w : ortho.omega) signs.push_back(w > 0 ? 1 : (w < 0 ? -1 : 0));
  return signs;
}

RealMatrix RacahTable::entries(unsigned digits) const {
  PrecisionScope scope(digits);
  RealMatrix r(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) {
    for (int l = 0; l <= N; ++l) {
      Rational ratio = ortho.omega[l] / ortho.phi[n];
      Real mag = sqrt(abs(Real(ratio)));
      r(n, l) = mag * Real(pvals(n, l));
      if (ratio < 0) r(n, l) = -r(n, l);  // sign-flagged sqrt of |.|
    }
    for (int l = 0; l <= N; ++l) {
      if (r(n, l) != 0) {
        if (r(n, l) < 0) r.row(n) = -r.row(n);
        break;
      }
    }
  }
  return r;
}

Real verify_unitarity(const RacahTable& t, unsigned digits) {
  PrecisionScope scope(digits);
  Real worst(0);
  for (int n = 0; n <= t.N; ++n) {
    for (int m = n; m <= t.N; ++m) {
      // exact signed product; no square roots enter unless the sum is nonzero
      Rational sum(0);
      for (int l = 0; l <= t.N; ++l)
        sum += t.ortho.omega[l] * t.pvals(n, l) * t.pvals(m, l);
      if (n == m) sum -= t.ortho.phi[n];
      if (sum == 0) continue;
      Real resid = abs(Real(sum)) / sqrt(abs(Real(t.ortho.phi[n] * t.ortho.phi[m])));
      if (resid > worst) worst = resid;
    }
  }
  return worst;
}

Real compare_with_oracle(const Rational& mu1, const Rational& mu2, const Rational& mu3,
                         int N, unsigned digits, int max_oracle_n) {
  if (N > max_oracle_n)
    throw Error("compare_with_oracle: N = " + std::to_string(N) +
                " beyond the oracle cap " + std::to_string(max_oracle_n));
  RacahTable formula = racah_table(mu1, mu2, mu3, N);
  OracleRacah oracle =
      oracle_racah({+1, mu1}, {+1, mu2}, {+1, mu3}, N, digits);
  PrecisionScope scope(digits);
  RealMatrix f = formula.entries(digits);
  Real worst(0);
  for (int n = 0; n <= N; ++n)
    for (int l = 0; l <= N; ++l) {
      Real d = abs(abs(Real(f(n, l))) - abs(oracle.overlap(n, l)));
      if (d > worst) worst = d;
    }
  return worst;
}

}  // namespace biracah
