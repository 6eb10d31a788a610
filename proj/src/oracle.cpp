#include "biracah/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace biracah {

Rational mu_number(int n, const Rational& mu) {
  return n + mu * (1 - (n % 2 == 0 ? 1 : -1));
}

Generators build_generators(const ModuleParams& p, int cutoff) {
  if (cutoff < 1) throw Error("build_generators: cutoff must be positive");
  Generators g;
  g.J0 = RealMatrix::Zero(cutoff, cutoff);
  g.Jp = RealMatrix::Zero(cutoff, cutoff);
  g.Jm = RealMatrix::Zero(cutoff, cutoff);
  g.R = RealMatrix::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) {
    g.J0(n, n) = Real(p.mu) + n + Real(1, 2);
    g.R(n, n) = (n % 2 == 0) ? p.epsilon : -p.epsilon;
    if (n + 1 < cutoff) {
      Real step = sqrt(Real(mu_number(n + 1, p.mu)));
      g.Jp(n + 1, n) = step;
      g.Jm(n, n + 1) = step;
    }
  }
  return g;
}

namespace {

enum class Atom { Refl, Num, Raise, Lower };

// single-mode application of a product of atoms, rightmost first;
// returns false when the state is annihilated (Jm on n = 0)
bool apply_slot(const std::vector<Atom>& atoms, const ModuleParams& p, int& n,
                Real& coeff) {
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    switch (*it) {
      case Atom::Refl:
        coeff *= (n % 2 == 0) ? p.epsilon : -p.epsilon;
        break;
      case Atom::Num:
        coeff *= Real(p.mu) + n + Real(1, 2);
        break;
      case Atom::Raise:
        coeff *= sqrt(Real(mu_number(n + 1, p.mu)));
        ++n;
        break;
      case Atom::Lower:
        if (n == 0) return false;
        coeff *= sqrt(Real(mu_number(n, p.mu)));
        --n;
        break;
    }
  }
  return true;
}

template <size_t Modes>
struct Term {
  Rational coeff;
  std::array<std::vector<Atom>, Modes> slots;
};

struct StateHash {
  size_t operator()(const std::array<int, 3>& s) const {
    return (static_cast<size_t>(s[0]) << 20) ^ (static_cast<size_t>(s[1]) << 10) ^
           static_cast<size_t>(s[2]);
  }
};

RealMatrix build_on_basis(const std::vector<Term<3>>& terms,
                          const std::vector<std::array<int, 3>>& basis,
                          const std::array<ModuleParams, 3>& params) {
  std::unordered_map<std::array<int, 3>, int, StateHash> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  RealMatrix m = RealMatrix::Zero(dim, dim);
  for (const Term<3>& term : terms) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      std::array<int, 3> state = basis[j];
      Real coeff = Real(term.coeff);
      bool alive = true;
      for (int slot = 0; slot < 3 && alive; ++slot)
        alive = apply_slot(term.slots[slot], params[slot], state[slot], coeff);
      if (!alive) continue;
      auto it = index.find(state);
      if (it == index.end())
        throw Error("oracle: operator does not preserve the level subspace");
      m(it->second, j) += coeff;
    }
  }
  return m;
}

const std::vector<Atom> kNone{};
const std::vector<Atom> kR{Atom::Refl};
const std::vector<Atom> kJp{Atom::Raise};
const std::vector<Atom> kJm{Atom::Lower};
const std::vector<Atom> kJpR{Atom::Raise, Atom::Refl};
const std::vector<Atom> kJmR{Atom::Lower, Atom::Refl};
const std::vector<Atom> kJ0R{Atom::Num, Atom::Refl};
const std::vector<Atom> kJpJmR{Atom::Raise, Atom::Lower, Atom::Refl};

std::vector<std::array<int, 3>> level_basis(int m) {
  std::vector<std::array<int, 3>> basis;
  basis.reserve((m + 1) * (m + 2) / 2);
  for (int n1 = 0; n1 <= m; ++n1)
    for (int n2 = 0; n2 <= m - n1; ++n2) basis.push_back({n1, n2, m - n1 - n2});
  return basis;
}

}  // namespace

CasimirMatrices intermediate_casimirs(const ModuleParams& p1, const ModuleParams& p2,
                                      const ModuleParams& p3, int m) {
  if (m < 0) throw Error("intermediate_casimirs: m must be nonnegative");
  const std::array<ModuleParams, 3> ps{p1, p2, p3};
  const Rational l1 = p1.lambda(), l2 = p2.lambda(), l3 = p3.lambda();
  const Rational half(1, 2);

  CasimirMatrices cm;
  cm.basis = level_basis(m);
  cm.K1 = build_on_basis({{1, {kJmR, kJp, kNone}},
                          {-1, {kJpR, kJm, kNone}},
                          {-half, {kR, kR, kNone}},
                          {-l1, {kNone, kR, kNone}},
                          {-l2, {kR, kNone, kNone}}},
                         cm.basis, ps);
  cm.K2 = build_on_basis({{1, {kNone, kJmR, kJp}},
                          {-1, {kNone, kJpR, kJm}},
                          {-half, {kNone, kR, kR}},
                          {-l2, {kNone, kNone, kR}},
                          {-l3, {kNone, kR, kNone}}},
                         cm.basis, ps);
  cm.K3 = build_on_basis({{1, {kJpR, kR, kJm}},
                          {-1, {kJmR, kR, kJp}},
                          {half, {kR, kNone, kR}},
                          {l1, {kNone, kNone, kR}},
                          {l3, {kR, kNone, kNone}}},
                         cm.basis, ps);
  RealMatrix r3 = build_on_basis({{1, {kNone, kNone, kR}}}, cm.basis, ps);
  RealMatrix r1 = build_on_basis({{1, {kR, kNone, kNone}}}, cm.basis, ps);
  cm.Q4 = build_on_basis({{1, {kJmR, kNone, kJp}},
                          {-1, {kJpR, kNone, kJm}},
                          {l2, {kR, kNone, kR}}},
                         cm.basis, ps) +
          cm.K1 * r3 + cm.K2 * r1;

  // the three intermediate Casimirs commute with the total one
  const Real tol = Tolerance::current().eps;
  for (const RealMatrix* k : {&cm.K1, &cm.K2, &cm.K3}) {
    Real r = max_abs(RealMatrix(*k * cm.Q4 - cm.Q4 * *k));
    if (r > tol)
      throw IdentityViolation("intermediate_casimirs: [K, Q4] residual " +
                              format_real(r, 3));
  }
  return cm;
}

namespace {

struct EigenspaceTable {
  RealMatrix overlap;
  Real orthogonality_residual;
};

// one full pass at the ambient precision
EigenspaceTable racah_pass(const ModuleParams& p1, const ModuleParams& p2,
                           const ModuleParams& p3, int N,
                           const std::vector<Rational>& q12,
                           const std::vector<Rational>& q23, const Rational& q4) {
  CasimirMatrices cm = intermediate_casimirs(p1, p2, p3, N);
  const Eigen::Index dim = cm.Q4.rows();
  SymmetricEigen es = eigh(cm.Q4);

  const Real window(Real(1) / 4);
  std::vector<Eigen::Index> sel;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (abs(es.values(i) - Real(q4)) < window) sel.push_back(i);
  if (static_cast<int>(sel.size()) != N + 1)
    throw DimensionMismatch("oracle_racah: q4-eigenspace dimension " +
                            std::to_string(sel.size()) + ", expected " +
                            std::to_string(N + 1));
  RealMatrix proj(dim, N + 1);
  for (int c = 0; c <= N; ++c) proj.col(c) = es.vectors.col(sel[c]);

  const Real gap_guard = 1000 * Tolerance::current().eps;
  auto solve_ordered = [&](const RealMatrix& k,
                           const std::vector<Rational>& labels) -> RealMatrix {
    SymmetricEigen e = eigh(RealMatrix(proj.transpose() * k * proj));
    for (int i = 0; i + 1 <= N; ++i)
      if (e.values(i + 1) - e.values(i) < gap_guard)
        throw DegenerateSpectrum("oracle_racah: eigenvalue gap below guard");
    RealMatrix ordered(N + 1, N + 1);
    for (int s = 0; s <= N; ++s) {
      int best = -1;
      for (int i = 0; i <= N; ++i)
        if (abs(e.values(i) - Real(labels[s])) < window) {
          best = i;
          break;
        }
      if (best < 0)
        throw SpectrumMismatch("oracle_racah: no eigenvalue near " +
                               format_rational(labels[s]));
      ordered.col(s) = e.vectors.col(best);
    }
    // phase: first nonvanishing component in the lexicographic product basis
    RealMatrix ambient = proj * ordered;
    const Real floor_ = sqrt(Tolerance::current().eps);
    for (int c = 0; c <= N; ++c) {
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (abs(ambient(i, c)) > floor_) {
          if (ambient(i, c) < 0) ordered.col(c) = -ordered.col(c);
          break;
        }
      }
    }
    return ordered;
  };

  RealMatrix w1 = solve_ordered(cm.K1, q12);
  RealMatrix w2 = solve_ordered(cm.K2, q23);
  EigenspaceTable out;
  out.overlap = w1.transpose() * w2;
  out.orthogonality_residual = max_abs(RealMatrix(
      out.overlap.transpose() * out.overlap - RealMatrix::Identity(N + 1, N + 1)));
  return out;
}

}  // namespace

OracleRacah oracle_racah(const ModuleParams& p1, const ModuleParams& p2,
                         const ModuleParams& p3, int N, unsigned digits) {
  if (N < 0) throw Error("oracle_racah: N must be nonnegative");
  const int eps12 = p1.epsilon * p2.epsilon;
  const int eps23 = p2.epsilon * p3.epsilon;
  const int eps4 = ((N % 2 == 0) ? 1 : -1) * p1.epsilon * p2.epsilon * p3.epsilon;
  const Rational mu4 = p1.mu + p2.mu + p3.mu + N + 1;

  OracleRacah out;
  out.N = N;
  for (int s = 0; s <= N; ++s) {
    Rational v12 = eps12 * (p1.mu + p2.mu + Rational(1, 2) + s);
    Rational v23 = eps23 * (p2.mu + p3.mu + Rational(1, 2) + s);
    out.q12.push_back(s % 2 == 0 ? -v12 : v12);
    out.q23.push_back(s % 2 == 0 ? -v23 : v23);
  }
  const Rational q4 = -eps4 * mu4;

  // degeneracy-guard failures double the precision, at most twice
  unsigned base = digits;
  EigenspaceTable table;
  for (int attempt = 0;; ++attempt) {
    try {
      PrecisionScope scope(base);
      table = racah_pass(p1, p2, p3, N, out.q12, out.q23, q4);
      break;
    } catch (const DegenerateSpectrum&) {
      if (attempt >= 2) throw;
      base *= 2;
    }
  }
  EigenspaceTable high;
  {
    PrecisionScope scope(2 * base);
    high = racah_pass(p1, p2, p3, N, out.q12, out.q23, q4);
  }
  Real cross(0);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      Real d = abs(abs(Real(table.overlap(i, j))) - abs(high.overlap(i, j)));
      if (d > cross) cross = d;
    }
  if (cross > Tolerance::for_digits(base).eps)
    throw PrecisionLoss("oracle_racah: 2x-precision cross-check moved entries by " +
                        format_real(cross, 3));
  out.digits_used = base;
  out.overlap = std::move(table.overlap);
  out.orthogonality_residual = table.orthogonality_residual;
  out.cross_error = cross;
  return out;
}

namespace {

// two-module coupling realized on the triple machinery with an inert third slot
RealMatrix cg_q12(const ModuleParams& p1, const ModuleParams& p2, int level) {
  const Rational l1 = p1.lambda(), l2 = p2.lambda();
  const Rational half(1, 2);
  std::vector<std::array<int, 3>> basis;
  for (int n1 = 0; n1 <= level; ++n1) basis.push_back({n1, level - n1, 0});
  return build_on_basis({{1, {kJmR, kJp, kNone}},
                         {-1, {kJpR, kJm, kNone}},
                         {-half, {kR, kR, kNone}},
                         {-l1, {kNone, kR, kNone}},
                         {-l2, {kR, kNone, kNone}}},
                        basis, {p1, p2, ModuleParams{}});
}

}  // namespace

CgReport cg_spectrum_check(const ModuleParams& p1, const ModuleParams& p2, int n_max,
                           unsigned digits) {
  CgReport rep;
  rep.n_max = n_max;
  rep.max_deviation = Real(0);
  rep.r3_residual = Real(0);
  rep.cross_error = Real(0);
  const int e12 = p1.epsilon * p2.epsilon;
  for (int level = 0; level <= n_max; ++level) {
    CheckedEigen ce = eigh_checked([&] { return cg_q12(p1, p2, level); }, digits);
    PrecisionScope scope(digits);
    std::vector<Real> expect;
    for (int s = 0; s <= level; ++s) {
      Real v = e12 * (Real(p1.mu + p2.mu) + Real(1, 2) + s);
      expect.push_back(s % 2 == 0 ? -v : v);
    }
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i <= level; ++i) {
      Real d = abs(ce.base.values(i) - expect[i]);
      if (d > rep.max_deviation) rep.max_deviation = d;
    }
    if (ce.cross_error > rep.cross_error) rep.cross_error = ce.cross_error;
    // R^(3) = R x R is the constant (-1)^level e1 e2 on the level subspace
    const int want = (level % 2 == 0 ? 1 : -1) * e12;
    for (int n1 = 0; n1 <= level; ++n1) {
      int r3 = ((n1 % 2 == 0) ? p1.epsilon : -p1.epsilon) *
               (((level - n1) % 2 == 0) ? p2.epsilon : -p2.epsilon);
      if (r3 != want) throw IdentityViolation("cg_spectrum_check: R^(3) not constant");
    }
  }
  {
    PrecisionScope scope(digits);
    if (rep.max_deviation > Tolerance::for_digits(digits).eps)
      throw SpectrumMismatch("cg_spectrum_check: eigenvalue off by " +
                             format_real(rep.max_deviation, 3));
  }
  return rep;
}

RealMatrix twisted_casimir(const ModuleParams& p1, const ModuleParams& p2,
                           const ModuleParams& p3, int m, unsigned digits) {
  PrecisionScope scope(digits);
  const std::array<ModuleParams, 3> ps{p1, p2, p3};
  const Rational half(1, 2);
  std::vector<std::array<int, 3>> basis = level_basis(m);
  // Casimir of the (31) pairing with Jpm^(31) = Jpm^(1) R^(3) + Jpm^(3) R^(2),
  // R^(31) = R^(1) R^(3), expanded into level-preserving slot products
  RealMatrix qt = build_on_basis({{1, {kJpJmR, kNone, kR}},
                                  {-1, {kJpR, kR, kJm}},
                                  {1, {kJmR, kR, kJp}},
                                  {1, {kR, kNone, kJpJmR}},
                                  {-1, {kJ0R, kNone, kR}},
                                  {-1, {kR, kNone, kJ0R}},
                                  {half, {kR, kNone, kR}}},
                                 basis, ps);
  CasimirMatrices cm = intermediate_casimirs(p1, p2, p3, m);
  Real resid = max_abs(RealMatrix(qt + cm.K3));
  if (resid > Tolerance::for_digits(digits).eps)
    throw IdentityViolation("twisted_casimir: ||Qt31 + K3|| = " +
                            format_real(resid, 3));
  return qt;
}

GeneratorResiduals verify_generators(const ModuleParams& p, int cutoff,
                                     unsigned digits) {
  PrecisionScope scope(digits);
  Generators g = build_generators(p, cutoff);
  const int b = cutoff - 1;  // principal block unaffected by truncation
  auto blk = [&](const RealMatrix& m) { return RealMatrix(m.topLeftCorner(b, b)); };
  RealMatrix eye = RealMatrix::Identity(b, b);
  const Real em = Real(p.lambda());

  GeneratorResiduals r;
  r.commutator_j0jp = max_abs(RealMatrix(blk(g.J0 * g.Jp - g.Jp * g.J0) - blk(g.Jp)));
  r.commutator_j0jm = max_abs(RealMatrix(blk(g.J0 * g.Jm - g.Jm * g.J0) + blk(g.Jm)));
  r.anti_jpjm = max_abs(RealMatrix(blk(anticommutator(g.Jp, g.Jm)) - 2 * blk(g.J0)));
  Real a1 = max_abs(blk(anticommutator(g.Jp, g.R)));
  Real a2 = max_abs(blk(anticommutator(g.Jm, g.R)));
  r.anti_jr = a1 > a2 ? a1 : a2;
  r.commutator_j0r = max_abs(RealMatrix(blk(g.J0 * g.R - g.R * g.J0)));
  r.involution = max_abs(RealMatrix(g.R * g.R - RealMatrix::Identity(cutoff, cutoff)));
  r.parabose =
      max_abs(RealMatrix(blk(g.Jm * g.Jp - g.Jp * g.Jm) - eye - 2 * em * blk(g.R)));
  RealMatrix q = g.Jp * g.Jm * g.R - g.J0 * g.R + g.R / 2;
  r.casimir = max_abs(RealMatrix(blk(q) + em * eye));
  return r;
}

}  // namespace biracah
