#pragma once

#include <string>

#include "json.hpp"
#include "ltswan/char_table.hpp"
#include "ltswan/conductor.hpp"
#include "ltswan/newton.hpp"
#include "ltswan/profile.hpp"
#include "ltswan/ramify.hpp"

namespace ltswan {

// Objects are std::map backed, so keys come out sorted and dumps are byte-stable.
using Json = nlohmann::json;

/// Exact rationals travel as "a/b" (or "a") strings.
Json rational_json(const Rational& r);
Json log_json(const RankTwoLog& h);
Json cyclotomic_json(const Cyclotomic& c);

Json filtration_json(const Filtration& filt);
Json upper_json(const std::vector<UpperJump>& up);
Json chartable_json(const CharTable& table);
Json conductor_json(const ConductorReport& rep);
Json cohomology_json(const CohomologyReport& rep);
Json theorem_json(const TheoremReport& rep);
Json scprop_json(const ScpropReport& rep);
Json profile_json(const Profile& p);
Json polygon_json(const ValuedPoly& points, const NewtonPolygon& hull);

/// Array of objects to CSV. Columns are the sorted union of keys; nested values are dumped as JSON.
std::string json_rows_to_csv(const Json& rows);

}  // namespace ltswan
