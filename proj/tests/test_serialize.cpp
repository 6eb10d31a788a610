#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biracah/serialize.hpp"

#include <sstream>

using namespace biracah;
using nlohmann::json;

TEST_CASE("rational json round trip") {
  for (const char* s : {"0", "3/4", "-22/7", "5"}) {
    Rational q = parse_rational(s);
    CHECK(rational_from_json(to_json(q)) == q);
  }
}

TEST_CASE("family table round trip") {
  for (const TruncationFamily& fam :
       {make_family_even(Rational(1, 2), 1, Rational(3, 2), 4),
        make_family_odd(1, Rational(1, 2), Rational(2), 3)}) {
    OrthogonalityTable table = orthogonality_table(fam);
    json j = family_to_json(fam, table);
    json reparsed = json::parse(j.dump());
    auto [fam2, table2] = family_from_json(reparsed);
    CHECK(fam2.N == fam.N);
    CHECK(fam2.parity == fam.parity);
    CHECK(fam2.params == fam.params);
    CHECK(fam2.bi.rho1 == fam.bi.rho1);
    CHECK(fam2.bi.rho2 == fam.bi.rho2);
    CHECK(table2.x == table.x);
    CHECK(table2.omega == table.omega);
    CHECK(table2.phi == table.phi);
  }
}

TEST_CASE("racah table round trip") {
  RacahTable t = racah_table(Rational(1, 2), Rational(1), Rational(3, 2), 3);
  json j = racah_to_json(t, 40);
  RacahTable t2 = racah_from_json(json::parse(j.dump()));
  CHECK(t2.N == t.N);
  CHECK(t2.q12 == t.q12);
  CHECK(t2.q23 == t.q23);
  CHECK(t2.pvals == t.pvals);
  CHECK(t2.ortho.omega == t.ortho.omega);
}

TEST_CASE("oracle report serialization is stable") {
  OracleRacah o = oracle_racah({+1, Rational(1, 2)}, {+1, Rational(1, 2)},
                               {+1, Rational(1, 2)}, 1, 40);
  json j = oracle_to_json(o, 30);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["overlap"].size() == 2);
}

TEST_CASE("csv layout") {
  RacahTable t = racah_table(Rational(1, 2), Rational(1, 2), Rational(1, 2), 1);
  std::string csv = racah_to_csv(t, 20);
  std::istringstream in(csv);
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  CHECK(header == "q12\\q23,-3/2,5/2");
  CHECK(row0.substr(0, 5) == "-3/2,");
  CHECK(row1.substr(0, 4) == "5/2,");
  CHECK(std::count(header.begin(), header.end(), ',') == 2);
  CHECK(std::count(row0.begin(), row0.end(), ',') == 2);
}
