#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circlex/census.hpp"
#include "circlex/circulant.hpp"
#include "circlex/decompose.hpp"
#include "circlex/digraph.hpp"
#include "circlex/isotest.hpp"

namespace circlex {

using Json = nlohmann::ordered_json;

// Accepts "n:s1,s2,..." (e.g. "8:1,3,5,7", "1:0", "5:" for an empty set) or,
// when the string starts with '{', the JSON form {"n":8,"s":[1,3,5,7]}.
// set force_json to require the JSON form. Throws std::invalid_argument on
// malformed input.
Circulant parse_circulant(const std::string& text, bool force_json = false);

std::string format_circulant(const Circulant& c);

Json to_json(const Circulant& c);
Json to_json(const Decomposition& d);
Json to_json(const DenseDigraph& g);
Json to_json(const CiReport& r);
Json to_json(const CheckResult& c);
Json to_json(const VerificationReport& r);
Json to_json(const CensusEntry& e);
Json to_json(const std::vector<CensusEntry>& entries);

// Header plus one row per entry; list-valued fields are semicolon-joined.
std::string census_csv(const std::vector<CensusEntry>& entries);

}  // namespace circlex
