#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biracah/leonard.hpp"

#include <random>

using namespace biracah;

namespace {

const std::vector<Rational> kGrid{Rational(0), Rational(1, 2), Rational(1),
                                  Rational(3, 2)};

}  // namespace

TEST_CASE("structure constants") {
  StructureConstants zero = structure_constants({0, 0, 0, Rational(9, 2)});
  CHECK(zero.alpha1 == 0);
  CHECK(zero.alpha2 == 0);
  CHECK(zero.alpha3 == 0);

  StructureConstants ones = structure_constants({1, 1, 1, 1});
  CHECK(ones.alpha1 == -4);
  CHECK(ones.alpha2 == -4);
  CHECK(ones.alpha3 == 4);
}

TEST_CASE("klein four-group invariance") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Rational, 4> lam;
    for (auto& l : lam) l = Rational(num(rng), den(rng));
    StructureConstants base = structure_constants(lam);
    auto same = [&](const std::array<Rational, 4>& im) {
      StructureConstants sc = structure_constants(im);
      return sc.alpha1 == base.alpha1 && sc.alpha2 == base.alpha2 &&
             sc.alpha3 == base.alpha3;
    };
    CHECK(same({lam[1], lam[0], lam[3], lam[2]}));  // (12)(34)
    CHECK(same({lam[2], lam[3], lam[0], lam[1]}));  // (13)(24)
    CHECK(same({lam[3], lam[2], lam[1], lam[0]}));  // (14)(23)
    CHECK(same({-lam[0], -lam[1], -lam[2], -lam[3]}));
  }
}

TEST_CASE("leonard pair structure") {
  LeonardPair lp = build_leonard_pair(Rational(1, 2), 1, Rational(3, 2), 3);
  CHECK(lp.eps4 == -1);
  CHECK(lp.mus[3] == 7);
  CHECK(lp.theta[0] == -Rational(2));   // -(1/2+1+1/2)
  CHECK(lp.theta[1] == Rational(3));
  CHECK(lp.b == std::vector<Rational>{Rational(18, 5), Rational(-71, 35),
                                      Rational(104, 63), Rational(-11, 9)});
  CHECK(lp.u[1] == Rational(396, 25));
  CHECK(lp.u[2] == Rational(180, 49));
  CHECK(lp.u[3] == Rational(1040, 81));
  CHECK(lp.u[4] == 0);
  CHECK(lp.kappa1 == 20);
  CHECK(lp.kappa2 == 4);
  CHECK(lp.kappa3 == -25);
}

TEST_CASE("degenerate mu=0 closed forms") {
  // the general formulas; for odd N the sign of b_0 follows the trace of the
  // spectrum (the section-5 display covers even N)
  for (int n = 0; n <= 12; ++n) {
    LeonardPair lp = build_leonard_pair(0, 0, 0, n);
    Rational expected_b0 = -Rational(lp.eps4) * (n + 1) / 2;
    CHECK(lp.b[0] == expected_b0);
    if (n % 2 == 0) CHECK(lp.b[0] == Rational(-(n + 1), 2));
    for (int i = 1; i <= n; ++i) CHECK(lp.b[i] == 0);
    for (int i = 1; i <= n; ++i)
      CHECK(lp.u[i] == Rational((i + n + 1) * (n + 1 - i), 4));
  }
  LeonardPair two = build_leonard_pair(0, 0, 0, 2);
  CHECK(two.u[1] == 2);
  CHECK(two.u[2] == Rational(5, 4));
}

TEST_CASE("u positivity and truncation") {
  for (const Rational& m1 : kGrid)
    for (const Rational& m2 : kGrid)
      for (const Rational& m3 : kGrid)
        for (int n = 0; n <= 8; ++n) {
          LeonardPair lp = build_leonard_pair(m1, m2, m3, n);
          for (int i = 1; i <= n; ++i) CHECK(lp.u[i] > 0);
          CHECK(lp.u[n + 1] == 0);
        }
}

TEST_CASE("bi algebra closes exactly") {
  for (const Rational& m1 : kGrid)
    for (const Rational& m2 : kGrid)
      for (const Rational& m3 : kGrid)
        for (int n = 0; n <= 6; ++n) {
          LeonardPair lp = build_leonard_pair(m1, m2, m3, n);
          BiAlgebraResiduals r = verify_bi_algebra(lp);
          CHECK(r.rel_k2k3 == 0);
          CHECK(r.rel_k1k3 == 0);
          CHECK(r.casimir == 0);
          AwResiduals aw = verify_aw_relations(lp);
          CHECK(aw.aw1 == 0);
          CHECK(aw.aw2 == 0);
        }
}

TEST_CASE("mu=0 AW relations lose their constants") {
  LeonardPair lp = build_leonard_pair(0, 0, 0, 4);
  CHECK(lp.kappa1 == 0);
  CHECK(lp.kappa2 == 0);
  CHECK(lp.kappa3 == 0);
  CHECK(verify_aw_relations(lp).all_zero());
}

TEST_CASE("N=0 scalar relations") {
  LeonardPair lp = build_leonard_pair(Rational(1, 2), Rational(1, 2), Rational(1, 2), 0);
  CHECK(verify_bi_algebra(lp).all_zero());
  CHECK(verify_aw_relations(lp).all_zero());
}

TEST_CASE("a corrupted pair breaks the relations") {
  LeonardPair lp = build_leonard_pair(1, 1, 1, 3);
  lp.u[1] += 1;
  CHECK_FALSE(verify_bi_algebra(lp).all_zero());
  CHECK_FALSE(verify_aw_relations(lp).all_zero());
}

TEST_CASE("K2 spectrum equals the shifted closed form") {
  PrecisionScope scope(50);
  const Real tol = Tolerance::for_digits(50).eps;
  for (const Rational& m1 : kGrid)
    for (const Rational& m3 : kGrid)
      for (int n = 0; n <= 6; ++n) {
        LeonardPair lp = build_leonard_pair(m1, Rational(1, 2), m3, n);
        std::vector<Rational> sub(lp.u.begin() + 1, lp.u.begin() + n + 1);
        RealVector ev = tridiag_eigenvalues_checked(lp.b, sub, 50);
        std::vector<Real> expect;
        for (int s = 0; s <= n; ++s) {
          Real t = Real(Rational(1, 2) + m3) + Real(1, 2) + s;
          expect.push_back(s % 2 == 0 ? -t : t);
        }
        std::sort(expect.begin(), expect.end());
        for (int i = 0; i <= n; ++i) CHECK(abs(ev(i) - expect[i]) < tol);
      }
}

TEST_CASE("leonard triple") {
  PrecisionScope scope(50);
  TripleReport rep =
      leonard_triple_check(build_leonard_pair(Rational(1, 2), Rational(1, 2),
                                              Rational(1, 2), 2),
                           50);
  CHECK(rep.k3_sign_convention == 1);  // (-1)^i (mu1+mu3+1/2+i)
  CHECK(rep.off_band_max < pow(Real(10), -30));
  CHECK(rep.band_min > pow(Real(10), -10));
  CHECK(rep.k3_spectrum_dev < pow(Real(10), -30));

  TripleReport deg = leonard_triple_check(build_leonard_pair(0, 0, 0, 2), 50);
  CHECK(deg.k3_sign_convention == 1);  // alternating +-(i+1/2) starting positive
  CHECK(deg.off_band_max < pow(Real(10), -30));

  for (const Rational& m2 : kGrid)
    for (int n = 0; n <= 5; ++n)
      CHECK_NOTHROW(leonard_triple_check(build_leonard_pair(1, m2, Rational(1, 2), n), 50));
}

TEST_CASE("extraction reproduces the BI recurrence data") {
  for (const Rational& m1 : kGrid)
    for (const Rational& m2 : kGrid)
      for (const Rational& m3 : kGrid)
        for (int n = 0; n <= 5; ++n) {
          LeonardPair lp = build_leonard_pair(m1, m2, m3, n);
          Extraction ex = extract_polynomials(lp);
          // the identified parameters coincide with the n-parity family
          TruncationFamily fam = n % 2 == 0 ? make_family_even(m1, m2, m3, n)
                                            : make_family_odd(m1, m2, m3, n);
          CHECK(ex.bi.rho1 == fam.bi.rho1);
          CHECK(ex.bi.rho2 == fam.bi.rho2);
          CHECK(ex.bi.r1 == fam.bi.r1);
          CHECK(ex.bi.r2 == fam.bi.r2);
          // (-2)-rescale consistency with the recurrence coefficients
          for (int j = 0; j <= n; ++j) {
            auto [aj, cj] = recurrence_coeffs(ex.bi, j);
            CHECK(lp.b[j] == -Rational(1, 2) - 2 * ex.bi.rho1 + 2 * (aj + cj));
            if (j >= 1) {
              auto [ajm, cjm] = recurrence_coeffs(ex.bi, j - 1);
              CHECK(lp.u[j] == 4 * ajm * cj);
            }
          }
          // spectral map lands on the orthogonality grid
          OrthogonalityTable t = orthogonality_table(fam);
          for (int s = 0; s <= n; ++s) CHECK(ex.x[s] == t.x[s]);
        }
}
