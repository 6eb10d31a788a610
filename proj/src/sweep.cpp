#include "biracah/sweep.hpp"

#include "biracah/leonard.hpp"
#include "biracah/oracle.hpp"
#include "biracah/racah.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace biracah {

namespace {

CheckResult run_one(const Check& c) {
  CheckResult r;
  r.name = c.name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = c.fn();
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, bool parallel) {
  std::vector<CheckResult> out(checks.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(checks.size()); ++i)
      out[i] = run_one(checks[i]);
  } else {
    for (size_t i = 0; i < checks.size(); ++i) out[i] = run_one(checks[i]);
  }
  return out;
}

namespace {

std::string mu_label(const Rational& m1, const Rational& m2, const Rational& m3,
                     int n) {
  return "mu=(" + format_rational(m1) + "," + format_rational(m2) + "," +
         format_rational(m3) + ") N=" + std::to_string(n);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace

std::vector<Check> exact_suite(const SweepOptions& opt) {
  std::vector<Check> checks;
  bool fault_pending = !opt.inject_fault.empty();

  for (const Rational& m1 : opt.mu_grid)
    for (const Rational& m2 : opt.mu_grid)
      for (const Rational& m3 : opt.mu_grid)
        for (int n = 0; n <= opt.n_max; ++n) {
          const bool faulty = fault_pending && n >= 1;
          if (faulty) fault_pending = false;
          checks.push_back(
              {"bi-algebra/aw/casimir " + mu_label(m1, m2, m3, n),
               [m1, m2, m3, n, faulty, fault = opt.inject_fault] {
                 LeonardPair lp = build_leonard_pair(m1, m2, m3, n);
                 if (faulty && fault == "u1") lp.u[1] = -lp.u[1];
                 BiAlgebraResiduals bi = verify_bi_algebra(lp);
                 AwResiduals aw = verify_aw_relations(lp);
                 std::ostringstream msg;
                 if (bi.rel_k2k3 != 0) msg << "{K2,K3}=K1+a1 violated; ";
                 if (bi.rel_k1k3 != 0) msg << "{K1,K3}=K2+a2 violated; ";
                 if (bi.casimir != 0) msg << "Casimir value violated; ";
                 if (aw.aw1 != 0) msg << "AW relation 1 violated; ";
                 if (aw.aw2 != 0) msg << "AW relation 2 violated; ";
                 bool ok = bi.all_zero() && aw.all_zero();
                 return std::pair<bool, std::string>(
                     ok, ok ? "exact residuals 0" : msg.str());
               }});

          checks.push_back(
              {"orthogonality/unitarity " + mu_label(m1, m2, m3, n),
               [m1, m2, m3, n] {
                 RacahTable t = racah_table(m1, m2, m3, n);
                 Rational worst(0);
                 for (int a = 0; a <= n; ++a)
                   for (int b = a; b <= n; ++b) {
                     Rational s(0);
                     for (int l = 0; l <= n; ++l)
                       s += t.ortho.omega[l] * t.pvals(a, l) * t.pvals(b, l);
                     if (a == b) s -= t.ortho.phi[a];
                     if (abs(s) > worst) worst = abs(s);
                   }
                 Rational roots = verify_roots(t.family);
                 bool ok = worst == 0 && roots == 0;
                 return std::pair<bool, std::string>(
                     ok, "orthogonality residual " + format_rational(worst) +
                             ", root residual " + format_rational(roots));
               }});
        }

  // representation agreement at random rational points
  {
    std::mt19937_64 rng(opt.seed);
    for (const Rational& m1 : opt.mu_grid)
      for (int n = 1; n <= opt.n_max; ++n) {
        std::vector<Rational> xs;
        for (int k = 0; k < 5; ++k) xs.push_back(random_rational(rng));
        const Rational m2 = opt.mu_grid[opt.mu_grid.size() / 2];
        checks.push_back({"hypergeometric agreement " + mu_label(m1, m2, m1, n),
                          [m1, m2, n, xs] {
                            RacahTable t = racah_table(m1, m2, m1, n);
                            for (const Rational& x : xs)
                              for (int d = 0; d <= n; ++d)
                                if (eval_monic(t.family.bi, d, x) !=
                                    eval_hypergeometric(t.family.bi, d, x))
                                  return std::pair<bool, std::string>(
                                      false, "mismatch at n=" + std::to_string(d) +
                                                 ", x=" + format_rational(x));
                            return std::pair<bool, std::string>(true, "exact match");
                          }});
      }
  }

  // section-5 degenerate reduction, even N (the odd-N closed form in the
  // paper has the sign of b_0 flipped; the general formula is authoritative)
  for (int n = 0; n <= opt.n_max; n += 2)
    checks.push_back({"degenerate reduction N=" + std::to_string(n), [n] {
                        LeonardPair lp = build_leonard_pair(0, 0, 0, n);
                        bool ok = lp.b[0] == Rational(-(n + 1), 2);
                        for (int i = 1; i <= n; ++i) ok = ok && lp.b[i] == 0;
                        for (int i = 1; i <= n; ++i)
                          ok = ok && lp.u[i] == Rational((i + n + 1) * (n + 1 - i), 4);
                        return std::pair<bool, std::string>(
                            ok, ok ? "matches closed form" : "mismatch");
                      }});

  // Klein four-group invariance of the structure constants
  checks.push_back({"klein invariance (100 random quadruples)", [seed = opt.seed] {
                      std::mt19937_64 rng(seed + 1);
                      for (int trial = 0; trial < 100; ++trial) {
                        std::array<Rational, 4> lam;
                        for (auto& l : lam) l = random_rational(rng);
                        StructureConstants base = structure_constants(lam);
                        const std::array<std::array<int, 4>, 4> perms{
                            {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}, {0, 1, 2, 3}}};
                        for (int p = 0; p < 4; ++p) {
                          std::array<Rational, 4> im;
                          for (int i = 0; i < 4; ++i)
                            im[i] = p == 3 ? Rational(-lam[i]) : lam[perms[p][i]];
                          StructureConstants sc = structure_constants(im);
                          if (sc.alpha1 != base.alpha1 || sc.alpha2 != base.alpha2 ||
                              sc.alpha3 != base.alpha3)
                            return std::pair<bool, std::string>(
                                false, "broken at trial " + std::to_string(trial));
                        }
                      }
                      return std::pair<bool, std::string>(true, "exact invariance");
                    }});
  return checks;
}

std::vector<Check> numeric_suite(const SweepOptions& opt) {
  std::vector<Check> checks;
  const unsigned digits = opt.digits;

  for (const Rational& m1 : opt.mu_grid)
    for (const Rational& m2 : opt.mu_grid)
      for (const Rational& m3 : opt.mu_grid)
        for (int n = 0; n <= opt.n_max; ++n) {
          checks.push_back(
              {"K2 spectrum " + mu_label(m1, m2, m3, n), [m1, m2, m3, n, digits] {
                 LeonardPair lp = build_leonard_pair(m1, m2, m3, n);
                 std::vector<Rational> sub(lp.u.begin() + 1, lp.u.begin() + n + 1);
                 Real cross;
                 RealVector ev = tridiag_eigenvalues_checked(lp.b, sub, digits, &cross);
                 PrecisionScope scope(digits);
                 std::vector<Real> expect;
                 for (int s = 0; s <= n; ++s) {
                   Real t = Real(m2 + m3) + Real(1, 2) + s;
                   expect.push_back(s % 2 == 0 ? -t : t);
                 }
                 std::sort(expect.begin(), expect.end());
                 Real dev(0);
                 for (int i = 0; i <= n; ++i) {
                   Real d = abs(ev(i) - expect[i]);
                   if (d > dev) dev = d;
                 }
                 bool ok = dev <= Tolerance::for_digits(digits).eps;
                 return std::pair<bool, std::string>(
                     ok, "max deviation " + format_real(dev, 3));
               }});

          checks.push_back(
              {"leonard triple " + mu_label(m1, m2, m3, n), [m1, m2, m3, n, digits] {
                 TripleReport rep =
                     leonard_triple_check(build_leonard_pair(m1, m2, m3, n), digits);
                 return std::pair<bool, std::string>(
                     true, "off-band " + format_real(rep.off_band_max, 3) +
                               ", K3 sign " + (rep.k3_sign_convention > 0 ? "+" : "-"));
               }});

          if (n <= opt.oracle_n_max) {
            checks.push_back(
                {"oracle comparison " + mu_label(m1, m2, m3, n),
                 [m1, m2, m3, n, digits] {
                   Real dev = compare_with_oracle(m1, m2, m3, n, digits);
                   PrecisionScope scope(digits);
                   bool ok = dev < Real(1) / pow(Real(10), 10);
                   return std::pair<bool, std::string>(
                       ok, "max |entry| deviation " + format_real(dev, 3));
                 }});
            checks.push_back(
                {"twisted coproduct " + mu_label(m1, m2, m3, n),
                 [m1, m2, m3, n, digits] {
                   twisted_casimir({+1, m1}, {+1, m2}, {+1, m3}, n, digits);
                   return std::pair<bool, std::string>(true, "Qt31 = -K3 holds");
                 }});
          }
        }

  for (const Rational& m1 : opt.mu_grid)
    for (const Rational& m2 : opt.mu_grid)
      checks.push_back({"CG spectrum mu=(" + format_rational(m1) + "," +
                            format_rational(m2) + ")",
                        [m1, m2, n = opt.n_max, digits] {
                          CgReport rep = cg_spectrum_check({+1, m1}, {+1, m2}, n, digits);
                          return std::pair<bool, std::string>(
                              true, "max deviation " + format_real(rep.max_deviation, 3));
                        }});
  return checks;
}

}  // namespace biracah
