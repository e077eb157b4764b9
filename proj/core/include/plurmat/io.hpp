#pragma once

#include "plurmat/elicitation.hpp"
#include "plurmat/hierarchy.hpp"
#include "plurmat/measures.hpp"
#include "plurmat/moments.hpp"
#include "plurmat/plurality.hpp"
#include "plurmat/protocol.hpp"
#include "plurmat/rules.hpp"

#include <string>
#include <vector>

namespace plurmat {

// Doubles serialized with 17 significant digits everywhere.
std::string fmt17(double x);

// Matrix <-> JSON: an array of degree objects
// {"m", "degree", "provenance", "entries": [{"set", "alt", "p", "count"}]}.
std::string matrix_to_json(const PluralityMatrix& matrix);
PluralityMatrix matrix_from_json(const std::string& text);

// CSV with header set,alt,p,count; set entries joined by '|'.
std::string matrix_to_csv(const PluralityMatrix& matrix);

std::string profile_to_json(const Profile& profile);
Profile profile_from_json(const std::string& text);

std::string witness_to_json(const WitnessPair& wp);
WitnessPair witness_from_json(const std::string& text);

struct MeasureRecord {
    std::string measure;
    std::string target; // alternative label/index or "a|b" pair
    double value = 0.0;
    int level = 2;
    bool ties = false;
};

std::string measures_to_json(const std::vector<MeasureRecord>& records);
std::string measures_to_csv(const std::vector<MeasureRecord>& records);

struct PearsonRow {
    std::string alt;
    std::string profile;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    std::string region;
};

// Header alt,profile,skewness,excess_kurtosis,region.
std::string pearson_to_csv(const std::vector<PearsonRow>& rows);

std::string plan_to_json(const ElicitationPlan& plan);
std::string frontier_to_json(const std::vector<FrontierPoint>& points);
std::string frontier_to_csv(const std::vector<FrontierPoint>& points);
std::string report_to_json(const SimulationReport& report, bool include_matrix = false);

struct ProtocolCurveRow {
    int degree = 0;
    int lambda = 0;
    std::uint64_t voters = 0;
    std::string protocol;
    double percentile_5 = 0.0;
    double percentile_95 = 0.0;
};

// Header degree,lambda,N,protocol,percentile_5,percentile_95.
std::string protocol_curve_to_csv(const std::vector<ProtocolCurveRow>& rows);

std::string bias_report_to_json(const ChainBiasReport& report);
std::string rule_results_to_json(const std::vector<RuleResult>& results);
std::string agreement_report_to_json(const AgreementReport& report);

} // namespace plurmat
