#ifndef BIRACAH_LINALG_HPP
#define BIRACAH_LINALG_HPP

#include "biracah/scalar.hpp"

#include <Eigen/Core>

#include <limits>

// NumTraits for the multiprecision scalars.  The traits bundled with this
// Boost version predate Eigen's hypot requirements (no infinity/quiet_NaN),
// so the project carries its own specializations.
namespace Eigen {

template <>
struct NumTraits<biracah::Real> : GenericNumTraits<biracah::Real> {
  using Real = biracah::Real;
  using NonInteger = biracah::Real;
  using Nested = biracah::Real;
  using Literal = biracah::Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 30,
    MulCost = 50
  };
  static Real epsilon() {
    return biracah::Real(pow(biracah::Real(10),
                             -static_cast<int>(biracah::Real::default_precision())));
  }
  static Real dummy_precision() { return epsilon() * 1000; }
  static Real highest() { return (std::numeric_limits<biracah::Real>::max)(); }
  static Real lowest() { return -(std::numeric_limits<biracah::Real>::max)(); }
  static Real infinity() { return std::numeric_limits<biracah::Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<biracah::Real>::quiet_NaN(); }
  static int digits10() { return static_cast<int>(biracah::Real::default_precision()); }
};

template <>
struct NumTraits<biracah::Rational> : GenericNumTraits<biracah::Rational> {
  using Real = biracah::Rational;
  using NonInteger = biracah::Rational;
  using Nested = biracah::Rational;
  using Literal = biracah::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 60,
    MulCost = 100
  };
  static Real epsilon() { return biracah::Rational(0); }
  static Real dummy_precision() { return biracah::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <functional>
#include <vector>

namespace biracah {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename M>
M anticommutator(const M& a, const M& b) {
  return a * b + b * a;
}

template <typename M>
typename M::Scalar max_abs(const M& m) {
  using std::abs;
  typename M::Scalar best(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (abs(m(i, j)) > best) best = abs(m(i, j));
  return best;
}

inline RealMatrix to_real(const RatMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Real(m(i, j));
  return out;
}

struct SymmetricEigen {
  RealVector values;   // ascending
  RealMatrix vectors;  // orthonormal columns
};

/// Symmetric eigensolve at the current working precision.
SymmetricEigen eigh(const RealMatrix& a);

/// Solves at `digits` and re-solves the rebuilt matrix at 2x digits; the
/// eigenvalue deviation must stay below the base tolerance or PrecisionLoss
/// is thrown.  `build` is invoked under each precision scope so the matrix
/// entries themselves are regenerated at full accuracy.
struct CheckedEigen {
  SymmetricEigen base;
  Real cross_error;
};
CheckedEigen eigh_checked(const std::function<RealMatrix()>& build, unsigned digits);

/// Eigen-decomposition of a tridiagonal matrix with unit superdiagonal,
/// diagonal `diag` and subdiagonal `sub` (all rational, sub > 0 required for
/// the symmetrizing similarity).  `vectors` are right eigenvectors of the
/// original matrix, `inverse` their inverse; values ascend.
struct TridiagEigen {
  RealVector values;
  RealMatrix vectors;
  RealMatrix inverse;
};
TridiagEigen tridiag_eigen(const std::vector<Rational>& diag,
                           const std::vector<Rational>& sub);

/// Eigenvalues only, with the 2x-precision cross-check applied.
RealVector tridiag_eigenvalues_checked(const std::vector<Rational>& diag,
                                       const std::vector<Rational>& sub,
                                       unsigned digits, Real* cross_error = nullptr);

RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

}  // namespace biracah

#endif
