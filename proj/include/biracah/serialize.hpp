#ifndef BIRACAH_SERIALIZE_HPP
#define BIRACAH_SERIALIZE_HPP

#include "biracah/bi_polynomials.hpp"
#include "biracah/oracle.hpp"
#include "biracah/racah.hpp"

#include <json.hpp>

#include <string>

namespace biracah {

/// Exact rationals travel as "p/q" strings, reals as decimal strings.
nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const TruncationFamily& fam,
                              const OrthogonalityTable& table);
std::pair<TruncationFamily, OrthogonalityTable> family_from_json(
    const nlohmann::json& j);

nlohmann::json racah_to_json(const RacahTable& t, unsigned digits = kDefaultDigits);
RacahTable racah_from_json(const nlohmann::json& j);

nlohmann::json oracle_to_json(const OracleRacah& o, unsigned digits = kDefaultDigits);

/// Header row carries the q23 labels, first column the q12 labels, entries
/// decimal strings at the output precision.
std::string racah_to_csv(const RacahTable& t, unsigned digits = kDefaultDigits);

}  // namespace biracah

#endif
