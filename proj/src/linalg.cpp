#include "biracah/linalg.hpp"

namespace biracah {

SymmetricEigen eigh(const RealMatrix& a) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw Error("eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CheckedEigen eigh_checked(const std::function<RealMatrix()>& build, unsigned digits) {
  SymmetricEigen base, high;
  {
    PrecisionScope scope(digits);
    base = eigh(build());
  }
  {
    PrecisionScope scope(2 * digits);
    high = eigh(build());
  }
  Real err(0);
  for (Eigen::Index i = 0; i < base.values.size(); ++i) {
    Real d = abs(Real(base.values(i)) - high.values(i));
    if (d > err) err = d;
  }
  if (err > Tolerance::for_digits(digits).eps)
    throw PrecisionLoss("eigh_checked: eigenvalues moved by " + format_real(err, 3) +
                        " between " + std::to_string(digits) + " and " +
                        std::to_string(2 * digits) + " digits");
  return {std::move(base), err};
}

namespace {

RealMatrix symmetrized_tridiagonal(const std::vector<Rational>& diag,
                                   const std::vector<Rational>& sub) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  RealMatrix t = RealMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) t(i, i) = Real(diag[i]);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Rational& u = sub[i];
    if (u <= 0)
      throw Error("tridiag_eigen: subdiagonal entry u_" + std::to_string(i + 1) +
                  " = " + format_rational(u) + " is not positive");
    Real s = sqrt(Real(u));
    t(i, i + 1) = s;
    t(i + 1, i) = s;
  }
  return t;
}

}  // namespace

TridiagEigen tridiag_eigen(const std::vector<Rational>& diag,
                           const std::vector<Rational>& sub) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  if (sub.size() + 1 != diag.size() && n > 0)
    throw Error("tridiag_eigen: size mismatch");
  SymmetricEigen sym = eigh(symmetrized_tridiagonal(diag, sub));

  // similarity D^{-1} K D with d_0 = 1, d_i = d_{i-1} sqrt(u_i)
  RealVector d(n);
  Real acc(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i > 0) acc *= sqrt(Real(sub[i - 1]));
    d(i) = acc;
  }
  TridiagEigen out;
  out.values = sym.values;
  out.vectors = d.asDiagonal() * sym.vectors;
  out.inverse = sym.vectors.transpose() * d.cwiseInverse().asDiagonal();
  return out;
}

RealVector tridiag_eigenvalues_checked(const std::vector<Rational>& diag,
                                       const std::vector<Rational>& sub,
                                       unsigned digits, Real* cross_error) {
  CheckedEigen r = eigh_checked([&] { return symmetrized_tridiagonal(diag, sub); },
                                digits);
  if (cross_error) *cross_error = r.cross_error;
  return r.base.values;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace biracah
