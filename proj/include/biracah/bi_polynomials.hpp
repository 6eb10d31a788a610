#ifndef BIRACAH_BI_POLYNOMIALS_HPP
#define BIRACAH_BI_POLYNOMIALS_HPP

#include "biracah/scalar.hpp"

#include <array>
#include <utility>
#include <vector>

namespace biracah {

/// The four parameters (rho1, rho2, r1, r2) of the Bannai-Ito recurrence,
/// with g = rho1 + rho2 - r1 - r2 kept alongside.
struct BIParams {
  Rational rho1, rho2, r1, r2;
  Rational g;

  static BIParams make(Rational rho1, Rational rho2, Rational r1, Rational r2) {
    Rational g = rho1 + rho2 - r1 - r2;
    return {std::move(rho1), std::move(rho2), std::move(r1), std::move(r2),
            std::move(g)};
  }
};

enum class Parity { Even, Odd };

/// A truncated positive-definite family: N+1 polynomials under one of the two
/// truncation conditions used by the Racah problem.
///   Even: params = (a,b,c),              2(r2 - rho1)   = N+1
///   Odd:  params = (alpha,beta,gamma),   2(rho1 + rho2) = -(N+1)
struct TruncationFamily {
  int N = 0;
  Parity parity = Parity::Even;
  std::array<Rational, 3> params;
  BIParams bi;
};

struct RecurrenceCoeffs {
  std::vector<Rational> A;  // A_0..A_N
  std::vector<Rational> C;  // C_0..C_N (C_0 = 0)
  std::vector<Rational> U;  // U_0..U_{N+1}, U_n = A_{n-1} C_n, U_0 = 0
};

struct OrthogonalityTable {
  std::vector<Rational> x;      // grid x_0..x_N
  std::vector<Rational> omega;  // weights
  std::vector<Rational> phi;    // normalizations Phi_{N,n}
};

/// Recurrence coefficients (A_n, C_n); throws SingularCoefficient when the
/// shared denominator 4(n+1+g) resp. 4(n+g) vanishes.
std::pair<Rational, Rational> recurrence_coeffs(const BIParams& p, int n);

RecurrenceCoeffs recurrence_table(const BIParams& p, int n_max);

TruncationFamily make_family_even(const Rational& a, const Rational& b,
                                  const Rational& c, int N);
TruncationFamily make_family_odd(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma, int N);

/// U_n in the family parametrization (closed form, independent of the
/// recurrence route A_{n-1}C_n).
Rational family_u(const TruncationFamily& fam, int n);

OrthogonalityTable orthogonality_table(const TruncationFamily& fam);

/// max_l |P_{N+1}(x_l)| over the orthogonality grid; exactly 0 for valid
/// rational families.
Rational verify_roots(const TruncationFamily& fam);

namespace detail {

template <typename T>
T scalar_cast(const Rational& q) {
  return T(q);
}
template <>
inline Rational scalar_cast<Rational>(const Rational& q) {
  return q;
}

}  // namespace detail

/// Monic P_n(x) by the three-term recurrence
///   P_{n+1} = (x - rho1 + A_n + C_n) P_n - A_{n-1} C_n P_{n-1}.
template <typename T>
T eval_monic(const BIParams& p, int n, const T& x) {
  T prev(0), cur(1);
  Rational a_prev(0);
  for (int j = 0; j < n; ++j) {
    auto [aj, cj] = recurrence_coeffs(p, j);
    T next = (x - detail::scalar_cast<T>(p.rho1 - aj - cj)) * cur -
             detail::scalar_cast<T>(a_prev * cj) * prev;
    prev = cur;
    cur = next;
    a_prev = aj;
  }
  return cur;
}

namespace detail {

/// W_m(x) of the hypergeometric representation with the monic kappa factor
/// folded termwise into the series.  The factored form kappa * 4F3 hits
/// removable 0/0 for odd-N truncations (the kappa numerator and the series
/// denominator share vanishing Pochhammers); the folded sum is a polynomial
/// identity equal to it wherever both are defined.
template <typename T>
T eval_w(const BIParams& p, int idx, const T& x) {
  const bool odd = idx % 2 != 0;
  const int n = odd ? (idx - 1) / 2 : idx / 2;
  const Rational shift = odd ? 1 : 0;
  const Rational b1 = 1 + p.rho1 + p.rho2 + shift;
  const Rational b2 = p.rho2 - p.r1 + Rational(1, 2) + shift;
  const Rational b3 = p.rho2 - p.r2 + Rational(1, 2) + shift;
  const Rational top = p.g + n + 1 + shift;  // n+g+1 resp. n+g+2

  Rational den = pochhammer(top, n);
  if (den == 0)
    throw DenominatorPole("eval_w: (n+g+" + std::to_string(1 + int(shift == 1)) +
                          ")_n vanishes");

  const T xa = scalar_cast<T>(p.rho2 + shift) + x;
  const T xb = scalar_cast<T>(p.rho2 + shift) - x;
  T sum(0);
  for (int j = 0; j <= n; ++j) {
    Rational rat = pochhammer(Rational(-n), j) * pochhammer(top, j);
    rat *= pochhammer(b1 + j, n - j) * pochhammer(b2 + j, n - j) *
           pochhammer(b3 + j, n - j);
    for (int f = 2; f <= j; ++f) rat /= f;
    sum += scalar_cast<T>(rat) * pochhammer(xa, j) * pochhammer(xb, j);
  }
  T w = sum / scalar_cast<T>(den);
  if (odd) w *= x - scalar_cast<T>(p.rho2);
  return w;
}

}  // namespace detail

/// Monic P_n(x) via the hypergeometric representation
/// P_n = W_n - C_n W_{n-1}; agrees exactly with eval_monic on rational input.
template <typename T>
T eval_hypergeometric(const BIParams& p, int n, const T& x) {
  T w = detail::eval_w(p, n, x);
  if (n == 0) return w;
  auto [an, cn] = recurrence_coeffs(p, n);
  (void)an;
  return w - detail::scalar_cast<T>(cn) * detail::eval_w(p, n - 1, x);
}

}  // namespace biracah

#endif
