#include "biracah/bi_polynomials.hpp"

#include <cassert>
#include <set>

namespace biracah {

std::pair<Rational, Rational> recurrence_coeffs(const BIParams& p, int n) {
  const Rational denA = 4 * (n + 1 - p.r1 - p.r2 + p.rho1 + p.rho2);
  if (denA == 0)
    throw SingularCoefficient("A_" + std::to_string(n) + ": denominator 4(n+1+g) vanishes");
  Rational a;
  if (n % 2 == 0)
    a = (n + 1 + 2 * p.rho1 - 2 * p.r1) * (n + 1 + 2 * p.rho1 - 2 * p.r2) / denA;
  else
    a = (n + 1 - 2 * p.r1 - 2 * p.r2 + 2 * p.rho1 + 2 * p.rho2) *
        (n + 1 + 2 * p.rho1 + 2 * p.rho2) / denA;

  Rational c(0);
  if (n > 0) {
    const Rational denC = 4 * (n - p.r1 - p.r2 + p.rho1 + p.rho2);
    if (denC == 0)
      throw SingularCoefficient("C_" + std::to_string(n) + ": denominator 4(n+g) vanishes");
    if (n % 2 == 0)
      c = -Rational(n) * (n - 2 * p.r1 - 2 * p.r2) / denC;
    else
      c = -(n - 2 * p.r2 + 2 * p.rho2) * (n - 2 * p.r1 + 2 * p.rho2) / denC;
  }
  return {a, c};
}

RecurrenceCoeffs recurrence_table(const BIParams& p, int n_max) {
  RecurrenceCoeffs rc;
  rc.A.reserve(n_max + 1);
  rc.C.reserve(n_max + 1);
  rc.U.assign(n_max + 2, Rational(0));
  for (int n = 0; n <= n_max; ++n) {
    auto [a, c] = recurrence_coeffs(p, n);
    rc.A.push_back(a);
    rc.C.push_back(c);
    if (n >= 1) rc.U[n] = rc.A[n - 1] * rc.C[n];
  }
  auto [a_last, c_last] = recurrence_coeffs(p, n_max + 1);
  (void)a_last;
  rc.U[n_max + 1] = rc.A[n_max] * c_last;
  return rc;
}

TruncationFamily make_family_even(const Rational& a, const Rational& b,
                                  const Rational& c, int N) {
  if (N < 0 || N % 2 != 0)
    throw BadParity("make_family_even: N = " + std::to_string(N) + " is not even");
  if (a < 0 || b < 0 || c < 0)
    throw Error("make_family_even: parameters must be nonnegative");
  TruncationFamily fam;
  fam.N = N;
  fam.parity = Parity::Even;
  fam.params = {a, b, c};
  fam.bi = BIParams::make((b + c) / 2, (2 * a + b + c + N + 1) / 2, (c - b) / 2,
                          (b + c + N + 1) / 2);
  assert(2 * (fam.bi.r2 - fam.bi.rho1) == N + 1);
  return fam;
}

TruncationFamily make_family_odd(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma, int N) {
  if (N < 0 || N % 2 != 1)
    throw BadParity("make_family_odd: N = " + std::to_string(N) + " is not odd");
  if (alpha < 0 || beta < 0 || gamma < 0)
    throw Error("make_family_odd: parameters must be nonnegative");
  TruncationFamily fam;
  fam.N = N;
  fam.parity = Parity::Odd;
  fam.params = {alpha, beta, gamma};
  fam.bi = BIParams::make((beta + gamma) / 2, -(beta + gamma + N + 1) / 2,
                          (gamma - beta) / 2, -(2 * alpha + beta + gamma + N + 1) / 2);
  assert(2 * (fam.bi.rho1 + fam.bi.rho2) == -(N + 1));
  return fam;
}

Rational family_u(const TruncationFamily& fam, int n) {
  const auto& [p1, p2, p3] = fam.params;
  const int N = fam.N;
  if (fam.parity == Parity::Even) {
    const Rational den = 16 * (p1 + p2 + n) * (p1 + p2 + n);
    if (n % 2 == 0)
      return Rational(n) * (N + 2 * p3 + 1 - n) * (n + 2 * p1 + 2 * p2) *
             (n + 2 * p1 + 2 * p2 + 2 * p3 + N + 1) / den;
    return (N + 1 - n) * (2 * p1 + n) * (2 * p2 + n) * (n + 2 * p1 + 2 * p2 + N + 1) /
           den;
  }
  const Rational den = 16 * (p1 + p2 + n) * (p1 + p2 + n);
  if (n % 2 == 0)
    return Rational(n) * (N + 1 - n) * (n + 2 * p1 + 2 * p2) *
           (n + 2 * p1 + 2 * p2 + N + 1) / den;
  return (N + 2 * p3 + 1 - n) * (2 * p1 + n) * (2 * p2 + n) *
         (n + 2 * p1 + 2 * p2 + 2 * p3 + N + 1) / den;
}

namespace {

Rational factorial(int n) {
  assert(n >= 0);
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational weight_even(const Rational& a, const Rational& b, const Rational& c, int N,
                     int ell) {
  const int k = ell / 2, q = ell % 2;
  const Rational half(1, 2);
  Rational num = pochhammer(Rational(-N, 2), k + q) * pochhammer(half + b, k + q) *
                 pochhammer(1 + b + c, k) *
                 pochhammer(Rational(3, 2) + a + b + c + Rational(N, 2), k);
  Rational den = pochhammer(half + c, k + q) *
                 pochhammer(1 + b + c + Rational(N, 2), k + q) *
                 pochhammer(half - a - Rational(N, 2), k) * factorial(k);
  Rational w = num / den;
  return q == 1 ? -w : w;
}

Rational norm_even(const Rational& a, const Rational& b, const Rational& c, int N,
                   int n) {
  const int m = N / 2, k = n / 2, q = n % 2;
  assert(m - k - q >= 0);
  const Rational half(1, 2);
  Rational t0 = factorial(m) * factorial(k) / factorial(m - k - q);
  Rational t1 = pochhammer(1 + a + b + k, m - k) * pochhammer(1 + b + c, m) /
                (pochhammer(half + a + k + q, m - k - q) * pochhammer(half + c, m - k));
  Rational t2 = pochhammer(half + b, k + q) * pochhammer(m + 1 + a + b, k + q) *
                pochhammer(m + Rational(3, 2) + a + b + c, k);
  Rational d2 = pochhammer(Rational(k + 1) + a + b, k + q);
  return t0 * t1 * t2 / (d2 * d2);
}

Rational weight_odd(const Rational& al, const Rational& be, const Rational& ga, int N,
                    int ell) {
  const int k = ell / 2, q = ell % 2;
  const Rational half(1, 2);
  Rational num = pochhammer(Rational(1 - N, 2), k) * pochhammer(half + be, k + q) *
                 pochhammer(1 + be + ga, k) *
                 pochhammer(1 + al + be + ga + Rational(N, 2), k + q);
  Rational den = pochhammer(half + ga, k + q) *
                 pochhammer(-al - Rational(N, 2), k + q) *
                 pochhammer(Rational(3, 2) + be + ga + Rational(N, 2), k) * factorial(k);
  Rational w = num / den;
  return q == 1 ? -w : w;
}

Rational norm_odd(const Rational& al, const Rational& be, const Rational& ga, int N,
                  int n) {
  const int m = (N + 1) / 2, k = n / 2, q = n % 2;
  assert(m - k - 1 >= 0);
  const Rational half(1, 2);
  Rational t0 = factorial(m - 1) * factorial(k) / factorial(m - k - 1);
  Rational t1 = pochhammer(1 + al + be + k, m - k) * pochhammer(1 + be + ga, m) /
                (pochhammer(half + k + q + al, m - k - q) *
                 pochhammer(half + ga, m - k - q));
  Rational t2 = pochhammer(half + be, k + q) * pochhammer(m + 1 + al + be, k) *
                pochhammer(m + half + al + be + ga, k + q);
  Rational d2 = pochhammer(Rational(k + 1) + al + be, k + q);
  return t0 * t1 * t2 / (d2 * d2);
}

}  // namespace

OrthogonalityTable orthogonality_table(const TruncationFamily& fam) {
  const int N = fam.N;
  const Rational bc = fam.params[1] + fam.params[2];  // b+c resp. beta+gamma
  OrthogonalityTable t;
  t.x.reserve(N + 1);
  t.omega.reserve(N + 1);
  t.phi.reserve(N + 1);
  for (int ell = 0; ell <= N; ++ell) {
    Rational s = ell + bc + Rational(1, 2);
    t.x.push_back(((ell % 2 ? -s : s) - Rational(1, 2)) / 2);
    t.omega.push_back(fam.parity == Parity::Even
                          ? weight_even(fam.params[0], fam.params[1], fam.params[2], N, ell)
                          : weight_odd(fam.params[0], fam.params[1], fam.params[2], N, ell));
  }
  for (int n = 0; n <= N; ++n)
    t.phi.push_back(fam.parity == Parity::Even
                        ? norm_even(fam.params[0], fam.params[1], fam.params[2], N, n)
                        : norm_odd(fam.params[0], fam.params[1], fam.params[2], N, n));

  std::set<Rational> distinct(t.x.begin(), t.x.end());
  if (distinct.size() != t.x.size())
    throw Error("orthogonality_table: grid points not pairwise distinct");
  return t;
}

Rational verify_roots(const TruncationFamily& fam) {
  OrthogonalityTable t = orthogonality_table(fam);
  Rational worst(0);
  for (const Rational& x : t.x) {
    Rational v = abs(eval_monic(fam.bi, fam.N + 1, x));
    if (v > worst) worst = v;
  }
  return worst;
}

}  // namespace biracah
