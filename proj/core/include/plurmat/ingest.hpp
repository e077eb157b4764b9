#pragma once

#include "plurmat/profile.hpp"
#include "plurmat/ranking.hpp"

#include <map>
#include <string>
#include <vector>

namespace plurmat {

// Complete-strict-order election file: '#'-prefixed metadata lines
// ("# KEY: VALUE"), then ballot lines "count: i1,i2,...,im" with 1-based
// alternative numbers. Ties, repeats and truncated ballots are rejected
// with the offending line number.
struct ElectionFile {
    int m = 0;
    std::map<std::string, std::string> metadata;
    std::vector<std::string> alternative_names;      // empty when the file has none
    std::vector<std::pair<double, Ranking>> ballots; // (count, ranking)
};

ElectionFile parse_election(const std::string& text);

// Parsed file as a weighted-ballot profile.
Profile parse_soc(const std::string& text);

// Inverse of parse_soc for listed-support profiles; counts keep 17
// significant digits so parse(export(x)) round-trips.
std::string profile_to_soc(const Profile& profile,
                           const std::vector<std::string>& names = {});

} // namespace plurmat
