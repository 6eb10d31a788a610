#ifndef BIRACAH_SCALAR_HPP
#define BIRACAH_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace biracah {

/// Exact rational scalar; always kept in lowest terms (GMP canonical form).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Arbitrary-precision real with runtime-selectable precision (decimal digits).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DenominatorPole : Error { using Error::Error; };
struct SingularCoefficient : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct BadParity : Error { using Error::Error; };
struct TruncationViolation : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct SpectrumMismatch : Error { using Error::Error; };
struct IdentityViolation : Error { using Error::Error; };
struct NotIrreducible : Error { using Error::Error; };
struct PrecisionLoss : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Scoped change of the process-wide working precision for Real.
/// MPFR's default precision is global state in this Boost version, so scopes
/// must not be opened concurrently with Real arithmetic on other threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline unsigned current_digits() { return Real::default_precision(); }

struct Tolerance {
  Real eps;  // > 0

  static Tolerance for_digits(unsigned digits) {
    if (digits <= 10) throw Error("Tolerance: need more than 10 digits");
    Tolerance t{pow(Real(10), -static_cast<int>(digits - 10))};
    return t;
  }
  static Tolerance current() { return for_digits(current_digits()); }
};

/// Rational -> Real at the current working precision.
inline Real to_real(const Rational& q) { return Real(q); }

std::string format_rational(const Rational& q);          // "p/q", "p" if integral
std::string format_real(const Real& x, int digits = 0);  // 0 = full working precision

/// Accepts "p/q", integer, and plain decimal strings ("0.5" parses to 1/2 exactly).
Rational parse_rational(const std::string& text);

/// Rising factorial x(x+1)...(x+n-1); 1 for n = 0.
template <typename T>
T pochhammer(const T& x, int n) {
  T acc(1);
  for (int i = 0; i < n; ++i) acc *= x + i;
  return acc;
}

/// Truncated 4F3 series: sum_{j=0}^{n} (-n)_j (a1)_j (a2)_j (a3)_j /
/// [(b1)_j (b2)_j (b3)_j j!] x^j.  Throws DenominatorPole if some (b_i)_j
/// vanishes inside the summation range.
template <typename T>
T hyp_4f3_truncated(int n, const std::array<T, 3>& a, const std::array<T, 3>& b,
                    const T& x) {
  T sum(1), term(1);
  for (int j = 0; j < n; ++j) {
    term *= T(-n + j) * (a[0] + j) * (a[1] + j) * (a[2] + j) * x;
    T den = (b[0] + j) * (b[1] + j) * (b[2] + j) * T(j + 1);
    if (den == 0)
      throw DenominatorPole("hyp_4f3_truncated: denominator Pochhammer vanishes at j=" +
                            std::to_string(j + 1));
    term /= den;
    sum += term;
  }
  return sum;
}

}  // namespace biracah

#endif
