#include "plurmat/io.hpp"

#include "plurmat/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace plurmat {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

ordered_json slice_to_json(const PluralityMatrix& matrix, int degree) {
    ordered_json obj;
    obj["m"] = matrix.m();
    obj["degree"] = degree;
    obj["provenance"] =
        matrix.provenance() == PluralityMatrix::Provenance::Exact ? "exact" : "empirical";
    ordered_json entries = ordered_json::array();
    for (const auto& [subset, row] : matrix.slice(degree)) {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            ordered_json e;
            e["set"] = subset;
            e["alt"] = subset[i];
            e["p"] = row.p[i];
            e["count"] = row.counts[i];
            entries.push_back(std::move(e));
        }
    }
    obj["entries"] = std::move(entries);
    return obj;
}

} // namespace

std::string matrix_to_json(const PluralityMatrix& matrix) {
    ordered_json arr = ordered_json::array();
    for (int k : matrix.degrees()) arr.push_back(slice_to_json(matrix, k));
    return arr.dump(2);
}

PluralityMatrix matrix_from_json(const std::string& text) {
    const auto arr = ordered_json::parse(text);
    if (!arr.is_array() || arr.empty()) throw DomainError("matrix_from_json: expected a nonempty array");
    const int m = arr.front().at("m").get<int>();
    const bool empirical = arr.front().at("provenance").get<std::string>() == "empirical";
    PluralityMatrix matrix(m, empirical ? PluralityMatrix::Provenance::Empirical
                                        : PluralityMatrix::Provenance::Exact);
    for (const auto& slice : arr) {
        std::map<std::vector<int>, std::pair<std::vector<double>, std::vector<std::uint64_t>>> rows;
        for (const auto& e : slice.at("entries")) {
            const auto subset = e.at("set").get<std::vector<int>>();
            auto& [p, counts] = rows[subset];
            if (p.empty()) {
                p.assign(subset.size(), 0.0);
                counts.assign(subset.size(), 0);
            }
            const int alt = e.at("alt").get<int>();
            const auto it = std::lower_bound(subset.begin(), subset.end(), alt);
            const auto idx = static_cast<std::size_t>(it - subset.begin());
            p[idx] = e.at("p").get<double>();
            counts[idx] = e.at("count").get<std::uint64_t>();
        }
        for (auto& [subset, pc] : rows) {
            if (empirical)
                matrix.set_counts(subset, pc.second);
            else
                matrix.set_row(subset, pc.first);
        }
    }
    return matrix;
}

std::string matrix_to_csv(const PluralityMatrix& matrix) {
    std::ostringstream out;
    out << "set,alt,p,count\n";
    for (int k : matrix.degrees()) {
        for (const auto& [subset, row] : matrix.slice(k)) {
            for (std::size_t i = 0; i < subset.size(); ++i) {
                for (std::size_t j = 0; j < subset.size(); ++j) {
                    if (j) out << '|';
                    out << subset[j];
                }
                out << ',' << subset[i] << ',' << fmt17(row.p[i]) << ',' << row.counts[i] << "\n";
            }
        }
    }
    return out.str();
}

std::string profile_to_json(const Profile& profile) {
    ordered_json obj;
    obj["m"] = profile.m();
    switch (profile.kind()) {
    case Profile::Kind::Exact: {
        obj["variant"] = "exact";
        ordered_json rows = ordered_json::array();
        for (const auto& [r, p] : profile.exact_data().mass) {
            ordered_json e;
            e["ranking"] = r.order();
            e["p"] = p;
            rows.push_back(std::move(e));
        }
        obj["mass"] = std::move(rows);
        break;
    }
    case Profile::Kind::Sampled: {
        obj["variant"] = "sampled";
        ordered_json rows = ordered_json::array();
        for (const auto& [r, w] : profile.sampled_data().votes) {
            ordered_json e;
            e["ranking"] = r.order();
            e["weight"] = w;
            rows.push_back(std::move(e));
        }
        obj["votes"] = std::move(rows);
        break;
    }
    case Profile::Kind::RankMarginal: {
        obj["variant"] = "rank_marginal";
        obj["focal"] = profile.rank_marginal_data().focal;
        obj["w"] = profile.rank_marginal_data().w;
        break;
    }
    }
    return obj.dump(2);
}

Profile profile_from_json(const std::string& text) {
    const auto obj = ordered_json::parse(text);
    const int m = obj.at("m").get<int>();
    const std::string variant = obj.at("variant").get<std::string>();
    if (variant == "exact") {
        std::map<Ranking, double> mass;
        for (const auto& e : obj.at("mass"))
            mass.emplace(Ranking(e.at("ranking").get<std::vector<int>>()), e.at("p").get<double>());
        return Profile::exact(m, std::move(mass));
    }
    if (variant == "sampled") {
        std::vector<std::pair<Ranking, double>> votes;
        for (const auto& e : obj.at("votes"))
            votes.emplace_back(Ranking(e.at("ranking").get<std::vector<int>>()),
                               e.at("weight").get<double>());
        return Profile::sampled(m, std::move(votes));
    }
    if (variant == "rank_marginal")
        return Profile::rank_marginal(m, obj.at("focal").get<int>(),
                                      obj.at("w").get<std::vector<double>>());
    throw DomainError("profile_from_json: unknown variant '" + variant + "'");
}

std::string witness_to_json(const WitnessPair& wp) {
    const double base = rank_marginal_focal_entry(wp.w, wp.m, wp.d + 1);
    const double shifted = rank_marginal_focal_entry(wp.w_prime, wp.m, wp.d + 1);
    ordered_json obj;
    obj["d"] = wp.d;
    obj["m"] = wp.m;
    obj["w"] = wp.w;
    obj["w_prime"] = wp.w_prime;
    obj["gap_degree"] = wp.d + 1;
    obj["gap_value"] = std::abs(base - shifted);
    obj["focal_entry_w"] = base;
    obj["focal_entry_w_prime"] = shifted;
    obj["delta"] = wp.delta;
    obj["t"] = wp.t;
    return obj.dump(2);
}

WitnessPair witness_from_json(const std::string& text) {
    const auto obj = ordered_json::parse(text);
    WitnessPair wp;
    wp.d = obj.at("d").get<int>();
    wp.m = obj.at("m").get<int>();
    wp.w = obj.at("w").get<std::vector<double>>();
    wp.w_prime = obj.at("w_prime").get<std::vector<double>>();
    wp.delta = obj.at("delta").get<std::vector<double>>();
    wp.t = obj.at("t").get<double>();
    return wp;
}

std::string measures_to_json(const std::vector<MeasureRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) {
        ordered_json e;
        e["measure"] = r.measure;
        if (r.target.find('|') != std::string::npos)
            e["pair"] = r.target;
        else
            e["alt"] = r.target;
        e["value"] = r.value;
        e["level"] = r.level;
        e["ties"] = r.ties;
        arr.push_back(std::move(e));
    }
    return arr.dump(2);
}

std::string measures_to_csv(const std::vector<MeasureRecord>& records) {
    std::ostringstream out;
    out << "measure,target,value,level,ties\n";
    for (const auto& r : records)
        out << r.measure << ',' << r.target << ',' << fmt17(r.value) << ',' << r.level << ','
            << (r.ties ? 1 : 0) << "\n";
    return out.str();
}

std::string pearson_to_csv(const std::vector<PearsonRow>& rows) {
    std::ostringstream out;
    out << "alt,profile,skewness,excess_kurtosis,region\n";
    for (const auto& r : rows)
        out << r.alt << ',' << r.profile << ',' << fmt17(r.skewness) << ','
            << fmt17(r.excess_kurtosis) << ',' << r.region << "\n";
    return out.str();
}

namespace {

ordered_json plan_json(const ElicitationPlan& plan) {
    ordered_json obj;
    obj["protocol"] = protocol_kind_name(plan.kind);
    obj["query_size"] = plan.query_size;
    obj["target_degree"] = plan.target_degree;
    obj["entry_count"] = plan.entry_count;
    obj["per_entry_samples"] = plan.per_entry_samples;
    obj["query_count"] = plan.query_count;
    obj["max_cognitive_load"] = plan.max_cognitive_load;
    obj["total_budget"] = plan.total_budget;
    return obj;
}

} // namespace

std::string plan_to_json(const ElicitationPlan& plan) { return plan_json(plan).dump(2); }

std::string frontier_to_json(const std::vector<FrontierPoint>& points) {
    ordered_json arr = ordered_json::array();
    for (const auto& pt : points) {
        ordered_json e;
        e["lambda"] = pt.lambda;
        e["budget"] = pt.budget;
        e["dominated"] = pt.dominated;
        e["plan"] = plan_json(pt.plan);
        arr.push_back(std::move(e));
    }
    return arr.dump(2);
}

std::string frontier_to_csv(const std::vector<FrontierPoint>& points) {
    std::ostringstream out;
    out << "protocol,query_size,lambda,N,budget,dominated\n";
    for (const auto& pt : points)
        out << protocol_kind_name(pt.plan.kind) << ',' << pt.plan.query_size << ',' << pt.lambda
            << ',' << pt.plan.query_count << ',' << fmt17(pt.budget) << ',' << (pt.dominated ? 1 : 0)
            << "\n";
    return out.str();
}

std::string report_to_json(const SimulationReport& report, bool include_matrix) {
    ordered_json obj;
    obj["plan"] = plan_json(report.plan);
    obj["realized_budget"] = report.realized_budget;
    obj["realized_max_load"] = report.realized_max_load;
    if (report.max_entry_error >= 0.0) {
        obj["max_entry_error"] = report.max_entry_error;
        obj["covered"] = report.covered;
    }
    if (include_matrix) obj["estimates"] = ordered_json::parse(matrix_to_json(report.estimates));
    return obj.dump(2);
}

std::string protocol_curve_to_csv(const std::vector<ProtocolCurveRow>& rows) {
    std::ostringstream out;
    out << "degree,lambda,N,protocol,percentile_5,percentile_95\n";
    for (const auto& r : rows)
        out << r.degree << ',' << r.lambda << ',' << r.voters << ',' << r.protocol << ','
            << fmt17(r.percentile_5) << ',' << fmt17(r.percentile_95) << "\n";
    return out.str();
}

std::string bias_report_to_json(const ChainBiasReport& report) {
    ordered_json obj;
    obj["true_pairwise"] = report.true_pairwise;
    obj["inferred_estimate"] = report.inferred_estimate;
    obj["prefix_estimate"] = report.prefix_estimate;
    obj["resolution_rate"] = report.resolution_rate;
    return obj.dump(2);
}

std::string rule_results_to_json(const std::vector<RuleResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json e;
        e["rule"] = r.rule;
        e["winner"] = r.winner();
        e["winners"] = r.winners;
        e["ties"] = r.tie;
        if (!r.scores.empty()) e["scores"] = r.scores;
        if (r.ranking) e["ranking"] = r.ranking->order();
        arr.push_back(std::move(e));
    }
    return arr.dump(2);
}

std::string agreement_report_to_json(const AgreementReport& report) {
    ordered_json obj;
    ordered_json gaps = ordered_json::array();
    for (const auto& [degree, gap] : report.max_gap) {
        ordered_json e;
        e["degree"] = degree;
        e["max_gap"] = gap;
        gaps.push_back(std::move(e));
    }
    obj["max_gap_per_degree"] = std::move(gaps);
    obj["first_divergent_degree"] = report.first_divergent_degree;
    return obj.dump(2);
}

} // namespace plurmat
