#include "biracah/serialize.hpp"

#include <sstream>

namespace biracah {

using nlohmann::json;

json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const json& j) {
  return parse_rational(j.get<std::string>());
}

namespace {

json rationals_to_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const Rational& q : v) arr.push_back(to_json(q));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
  std::vector<Rational> v;
  v.reserve(arr.size());
  for (const auto& e : arr) v.push_back(rational_from_json(e));
  return v;
}

}  // namespace

json family_to_json(const TruncationFamily& fam, const OrthogonalityTable& table) {
  json j;
  j["family"] = {
      {"parity", fam.parity == Parity::Even ? "even" : "odd"},
      {"N", fam.N},
      {"params", rationals_to_json({fam.params.begin(), fam.params.end()})},
      {"bi", {{"rho1", to_json(fam.bi.rho1)},
              {"rho2", to_json(fam.bi.rho2)},
              {"r1", to_json(fam.bi.r1)},
              {"r2", to_json(fam.bi.r2)},
              {"g", to_json(fam.bi.g)}}},
  };
  j["grid"] = rationals_to_json(table.x);
  j["weights"] = rationals_to_json(table.omega);
  j["norms"] = rationals_to_json(table.phi);
  return j;
}

std::pair<TruncationFamily, OrthogonalityTable> family_from_json(const json& j) {
  const json& f = j.at("family");
  std::vector<Rational> params = rationals_from_json(f.at("params"));
  if (params.size() != 3) throw ParseError("family_from_json: need 3 parameters");
  const int n = f.at("N").get<int>();
  TruncationFamily fam = f.at("parity").get<std::string>() == "even"
                             ? make_family_even(params[0], params[1], params[2], n)
                             : make_family_odd(params[0], params[1], params[2], n);
  OrthogonalityTable table;
  table.x = rationals_from_json(j.at("grid"));
  table.omega = rationals_from_json(j.at("weights"));
  table.phi = rationals_from_json(j.at("norms"));
  return {fam, table};
}

json racah_to_json(const RacahTable& t, unsigned digits) {
  json j;
  j["N"] = t.N;
  j["eps4"] = t.eps4;
  j["mu"] = rationals_to_json({t.mus.begin(), t.mus.end()});
  j["q12"] = rationals_to_json(t.q12);
  j["q23"] = rationals_to_json(t.q23);
  j["family"] = family_to_json(t.family, t.ortho);
  json pv = json::array();
  for (int n = 0; n <= t.N; ++n) {
    json row = json::array();
    for (int l = 0; l <= t.N; ++l) row.push_back(to_json(t.pvals(n, l)));
    pv.push_back(row);
  }
  j["polynomial_values"] = pv;
  RealMatrix e = t.entries(digits);
  json ent = json::array();
  for (int n = 0; n <= t.N; ++n) {
    json row = json::array();
    for (int l = 0; l <= t.N; ++l) row.push_back(format_real(e(n, l), digits));
    ent.push_back(row);
  }
  j["entries"] = ent;
  return j;
}

RacahTable racah_from_json(const json& j) {
  std::vector<Rational> mus = rationals_from_json(j.at("mu"));
  if (mus.size() != 4) throw ParseError("racah_from_json: need 4 mu values");
  RacahTable t = racah_table(mus[0], mus[1], mus[2], j.at("N").get<int>());
  // defensive: the stored exact data must match the rebuilt table
  std::vector<Rational> q12 = rationals_from_json(j.at("q12"));
  if (q12 != t.q12) throw ParseError("racah_from_json: q12 labels inconsistent");
  for (int n = 0; n <= t.N; ++n)
    for (int l = 0; l <= t.N; ++l)
      if (rational_from_json(j.at("polynomial_values")[n][l]) != t.pvals(n, l))
        throw ParseError("racah_from_json: polynomial values inconsistent");
  return t;
}

json oracle_to_json(const OracleRacah& o, unsigned digits) {
  json j;
  j["N"] = o.N;
  j["digits"] = o.digits_used;
  j["q12"] = rationals_to_json(o.q12);
  j["q23"] = rationals_to_json(o.q23);
  json ov = json::array();
  for (int n = 0; n <= o.N; ++n) {
    json row = json::array();
    for (int l = 0; l <= o.N; ++l) row.push_back(format_real(o.overlap(n, l), digits));
    ov.push_back(row);
  }
  j["overlap"] = ov;
  j["orthogonality_residual"] = format_real(o.orthogonality_residual, 3);
  j["cross_error"] = format_real(o.cross_error, 3);
  return j;
}

std::string racah_to_csv(const RacahTable& t, unsigned digits) {
  std::ostringstream out;
  out << "q12\\q23";
  for (int l = 0; l <= t.N; ++l) out << "," << format_rational(t.q23[l]);
  out << "\n";
  RealMatrix e = t.entries(digits);
  for (int n = 0; n <= t.N; ++n) {
    out << format_rational(t.q12[n]);
    for (int l = 0; l <= t.N; ++l) out << "," << format_real(e(n, l), digits);
    out << "\n";
  }
  return out.str();
}

}  // namespace biracah
