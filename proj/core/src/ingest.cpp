#include "plurmat/ingest.hpp"

#include "plurmat/errors.hpp"
#include "plurmat/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace plurmat {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_number(const std::string& s, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

} // namespace

ElectionFile parse_election(const std::string& text) {
    ElectionFile file;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int declared_m = 0;
    std::map<int, std::string> names;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;

        if (t[0] == '#') {
            const std::string body = trim(t.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string::npos) continue; // free-form comment
            const std::string key = trim(body.substr(0, colon));
            const std::string value = trim(body.substr(colon + 1));
            file.metadata[key] = value;
            if (key == "NUMBER ALTERNATIVES") {
                try {
                    declared_m = std::stoi(value);
                } catch (...) {
                    throw FileParseError(lineno, "bad NUMBER ALTERNATIVES value '" + value + "'");
                }
            }
            constexpr const char* kNamePrefix = "ALTERNATIVE NAME ";
            if (key.rfind(kNamePrefix, 0) == 0) {
                try {
                    names[std::stoi(key.substr(std::string(kNamePrefix).size()))] = value;
                } catch (...) {
                    throw FileParseError(lineno, "bad alternative-name key '" + key + "'");
                }
            }
            continue;
        }

        const auto colon = t.find(':');
        if (colon == std::string::npos)
            throw FileParseError(lineno, "expected 'count: ranking' but found '" + t + "'");
        double count = 0.0;
        if (!parse_number(trim(t.substr(0, colon)), count) || count < 0)
            throw FileParseError(lineno, "bad ballot count '" + trim(t.substr(0, colon)) + "'");

        const std::string body = trim(t.substr(colon + 1));
        if (body.find('{') != std::string::npos || body.find('}') != std::string::npos)
            throw FileParseError(lineno, "tied ballots are not supported (complete strict orders only)");
        if (body.empty()) throw FileParseError(lineno, "empty ballot");

        std::vector<int> order;
        std::stringstream items(body);
        std::string item;
        while (std::getline(items, item, ',')) {
            const std::string v = trim(item);
            int idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoi(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
            } catch (...) {
                throw FileParseError(lineno, "bad alternative id '" + v + "'");
            }
            if (idx < 1) throw FileParseError(lineno, "alternative ids are 1-based");
            order.push_back(idx - 1);
        }

        if (file.m == 0 && declared_m == 0) {
            declared_m = static_cast<int>(order.size());
        }
        const int m = file.m != 0 ? file.m : declared_m;
        if (static_cast<int>(order.size()) != m)
            throw FileParseError(lineno, "incomplete ballot: " + std::to_string(order.size()) +
                                             " of " + std::to_string(m) + " alternatives ranked");
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (int idx : order) {
            if (idx >= m) throw FileParseError(lineno, "alternative id " + std::to_string(idx + 1) +
                                                           " exceeds NUMBER ALTERNATIVES");
            if (seen[static_cast<std::size_t>(idx)])
                throw FileParseError(lineno,
                                     "alternative " + std::to_string(idx + 1) + " appears twice");
            seen[static_cast<std::size_t>(idx)] = true;
        }
        file.m = m;
        file.ballots.emplace_back(count, Ranking(std::move(order)));
    }

    if (file.ballots.empty()) throw FileParseError(lineno == 0 ? 1 : lineno, "no ballots in file");
    if (file.m == 0) file.m = declared_m;
    if (!names.empty()) {
        file.alternative_names.assign(static_cast<std::size_t>(file.m), "");
        for (const auto& [idx, name] : names)
            if (idx >= 1 && idx <= file.m) file.alternative_names[static_cast<std::size_t>(idx - 1)] = name;
    }
    return file;
}

Profile parse_soc(const std::string& text) {
    ElectionFile file = parse_election(text);
    std::vector<std::pair<Ranking, double>> votes;
    votes.reserve(file.ballots.size());
    for (auto& [count, ranking] : file.ballots) votes.emplace_back(std::move(ranking), count);
    return Profile::sampled(file.m, std::move(votes));
}

std::string profile_to_soc(const Profile& profile, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "# NUMBER ALTERNATIVES: " << profile.m() << "\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        out << "# ALTERNATIVE NAME " << (i + 1) << ": " << names[i] << "\n";

    auto write_ballot = [&out](double weight, const Ranking& r) {
        out << fmt17(weight) << ": ";
        for (int pos = 0; pos < r.size(); ++pos) {
            if (pos > 0) out << ",";
            out << (r.at(pos) + 1);
        }
        out << "\n";
    };

    switch (profile.kind()) {
    case Profile::Kind::Sampled:
        for (const auto& [r, w] : profile.sampled_data().votes) write_ballot(w, r);
        break;
    case Profile::Kind::Exact:
        for (const auto& [r, p] : profile.exact_data().mass) write_ballot(p, r);
        break;
    case Profile::Kind::RankMarginal:
        throw DomainError("profile_to_soc: rank-marginal profiles have no ballot list; export JSON instead");
    }
    return out.str();
}

} // namespace plurmat
