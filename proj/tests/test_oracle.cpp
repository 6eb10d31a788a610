#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biracah/oracle.hpp"

using namespace biracah;

TEST_CASE("mu numbers") {
  CHECK(mu_number(0, Rational(3, 2)) == 0);
  CHECK(mu_number(2, Rational(3, 2)) == 2);
  CHECK(mu_number(1, Rational(3, 2)) == 4);
}

TEST_CASE("generator relations on the truncated module") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  for (int eps : {+1, -1})
    for (const Rational& mu : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
      GeneratorResiduals r = verify_generators({eps, mu}, 9, 50);
      CHECK(r.commutator_j0jp < tol);
      CHECK(r.commutator_j0jm < tol);
      CHECK(r.anti_jpjm < tol);
      CHECK(r.anti_jr < tol);
      CHECK(r.commutator_j0r < tol);
      CHECK(r.involution < tol);
      CHECK(r.parabose < tol);
      CHECK(r.casimir < tol);
    }
}

TEST_CASE("coproduct consistency on a two-fold product") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  const int cut = 7;
  Generators g1 = build_generators({+1, Rational(1, 3)}, cut);
  Generators g2 = build_generators({-1, Rational(5, 4)}, cut);
  RealMatrix eye = RealMatrix::Identity(cut, cut);
  RealMatrix j0 = kron(g1.J0, eye) + kron(eye, g2.J0);
  RealMatrix jp = kron(g1.Jp, g2.R) + kron(eye, g2.Jp);
  RealMatrix jm = kron(g1.Jm, g2.R) + kron(eye, g2.Jm);
  RealMatrix r = kron(g1.R, g2.R);

  // mask out rows/cols touching the truncation boundary of either factor
  auto safe = [&](const RealMatrix& m) {
    Real worst(0);
    for (int a1 = 0; a1 + 2 < cut; ++a1)
      for (int a2 = 0; a2 + 2 < cut; ++a2)
        for (int b1 = 0; b1 + 2 < cut; ++b1)
          for (int b2 = 0; b2 + 2 < cut; ++b2) {
            Real v = abs(m(a1 * cut + a2, b1 * cut + b2));
            if (v > worst) worst = v;
          }
    return worst;
  };
  CHECK(safe(j0 * jp - jp * j0 - jp) < tol);
  CHECK(safe(j0 * jm - jm * j0 + jm) < tol);
  CHECK(safe(anticommutator(jp, jm) - 2 * j0) < tol);
  CHECK(safe(anticommutator(jp, r)) < tol);
  CHECK(safe(anticommutator(jm, r)) < tol);
  CHECK(max_abs(RealMatrix(r * r - RealMatrix::Identity(cut * cut, cut * cut))) < tol);
}

TEST_CASE("casimir matrices at m=0") {
  PrecisionScope scope(50);
  CasimirMatrices cm = intermediate_casimirs({+1, Rational(1, 4)}, {+1, Rational(3, 4)},
                                             {+1, Rational(1, 2)}, 0);
  CHECK(cm.basis.size() == 1);
  const Real tol = Tolerance::for_digits(50).eps;
  CHECK(abs(cm.K1(0, 0) + Real(Rational(1, 4) + Rational(3, 4)) + Real(1, 2)) < tol);
  // q4 at N=0: -(mu1+mu2+mu3+1)
  CHECK(abs(cm.Q4(0, 0) + Real(Rational(5, 2))) < tol);
}

TEST_CASE("casimir commutation and the BI operator identities") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  const Rational m1(1, 2), m2(1), m3(3, 2);
  for (int m : {1, 2, 3}) {
    CasimirMatrices cm = intermediate_casimirs({+1, m1}, {+1, m2}, {+1, m3}, m);
    const auto dim = cm.K1.rows();
    RealMatrix eye = RealMatrix::Identity(dim, dim);

    // construction already asserts [K_i, Q4] = 0; K1 and K2 must not commute
    CHECK(max_abs(RealMatrix(cm.K1 * cm.K2 - cm.K2 * cm.K1)) > Real(1, 2));

    Real l1 = Real(m1), l2 = Real(m2), l3 = Real(m3);
    RealMatrix id1 = anticommutator(cm.K1, cm.K2) - cm.K3 - 2 * l1 * l3 * eye +
                     2 * l2 * cm.Q4;
    RealMatrix id2 = anticommutator(cm.K2, cm.K3) - cm.K1 + 2 * l1 * l2 * eye -
                     2 * l3 * cm.Q4;
    RealMatrix id3 = anticommutator(cm.K1, cm.K3) - cm.K2 + 2 * l2 * l3 * eye -
                     2 * l1 * cm.Q4;
    CHECK(max_abs(id1) < tol);
    CHECK(max_abs(id2) < tol);
    CHECK(max_abs(id3) < tol);
  }
}

TEST_CASE("oracle racah table, N=0") {
  OracleRacah r = oracle_racah({+1, Rational(1, 2)}, {+1, Rational(1, 2)},
                               {+1, Rational(1, 2)}, 0, 50);
  CHECK(r.overlap.rows() == 1);
  PrecisionScope scope(50);
  CHECK(abs(abs(r.overlap(0, 0)) - 1) < Tolerance::for_digits(50).eps);
}

TEST_CASE("oracle racah frozen 2x2 table") {
  OracleRacah r = oracle_racah({+1, Rational(1, 2)}, {+1, Rational(1, 2)},
                               {+1, Rational(1, 2)}, 1, 50);
  PrecisionScope scope(50);
  const Real tol = pow(Real(10), -40);
  // |entries| = [[1/2, sqrt(3)/2], [sqrt(3)/2, 1/2]]
  Real root34 = sqrt(Real(3)) / 2;
  CHECK(abs(abs(r.overlap(0, 0)) - Real(1, 2)) < tol);
  CHECK(abs(abs(r.overlap(0, 1)) - root34) < tol);
  CHECK(abs(abs(r.overlap(1, 0)) - root34) < tol);
  CHECK(abs(abs(r.overlap(1, 1)) - Real(1, 2)) < tol);
  CHECK(r.orthogonality_residual < tol);
  CHECK(r.q12[0] == -Rational(3, 2));
  CHECK(r.q12[1] == Rational(5, 2));
}

TEST_CASE("oracle orthogonality across a small grid") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  for (const Rational& m1 : {Rational(0), Rational(1)})
    for (const Rational& m3 : {Rational(1, 2), Rational(1)})
      for (int n = 0; n <= 3; ++n) {
        OracleRacah r = oracle_racah({+1, m1}, {+1, Rational(1, 2)}, {+1, m3}, n, 50);
        CHECK(r.orthogonality_residual < tol);
        CHECK(r.cross_error < tol);
      }
}

TEST_CASE("cg spectrum for all sign patterns") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  for (int e1 : {+1, -1})
    for (int e2 : {+1, -1}) {
      CgReport rep = cg_spectrum_check({e1, Rational(1, 2)}, {e2, Rational(1)}, 6, 50);
      CHECK(rep.max_deviation < tol);
    }
  // frozen example: mu1=mu2=0, N=2 spectrum {-1/2, 3/2, -5/2}
  CgReport rep = cg_spectrum_check({+1, 0}, {+1, 0}, 2, 50);
  CHECK(rep.max_deviation < tol);
}

TEST_CASE("twisted coproduct casimir") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  for (int m : {0, 1, 3}) {
    RealMatrix qt = twisted_casimir({+1, Rational(1, 2)}, {+1, Rational(1)},
                                    {+1, Rational(3, 2)}, m, 50);
    CasimirMatrices cm = intermediate_casimirs({+1, Rational(1, 2)}, {+1, Rational(1)},
                                               {+1, Rational(3, 2)}, m);
    CHECK(max_abs(RealMatrix(qt + cm.K3)) < tol);
  }
}

TEST_CASE("K3 spectrum on the q4 eigenspace has the BI pattern") {
  const int n = 2;
  const Rational m1(1, 2), m2(1, 2), m3(1, 2);
  PrecisionScope scope(50);
  CasimirMatrices cm = intermediate_casimirs({+1, m1}, {+1, m2}, {+1, m3}, n);
  SymmetricEigen es = eigh(cm.Q4);
  Real q4 = -Real((n % 2 == 0 ? 1 : -1) * Rational(m1 + m2 + m3 + n + 1));
  std::vector<Eigen::Index> sel;
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    if (abs(es.values(i) - q4) < Real(1, 4)) sel.push_back(i);
  REQUIRE(sel.size() == n + 1);
  RealMatrix proj(cm.Q4.rows(), n + 1);
  for (int c = 0; c <= n; ++c) proj.col(c) = es.vectors.col(sel[c]);
  SymmetricEigen k3 = eigh(RealMatrix(proj.transpose() * cm.K3 * proj));
  // lambda_i = (-1)^i (mu1+mu3+1/2+i): {3/2, -5/2, 7/2}
  const Real tol = Tolerance::for_digits(50).eps;
  CHECK(abs(k3.values(0) - Real(Rational(-5, 2))) < tol);
  CHECK(abs(k3.values(1) - Real(Rational(3, 2))) < tol);
  CHECK(abs(k3.values(2) - Real(Rational(7, 2))) < tol);
}
