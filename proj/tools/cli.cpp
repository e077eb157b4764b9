#include "cli.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/elicitation.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/generators.hpp"
#include "plurmat/hierarchy.hpp"
#include "plurmat/ingest.hpp"
#include "plurmat/io.hpp"
#include "plurmat/measures.hpp"
#include "plurmat/moments.hpp"
#include "plurmat/oracle.hpp"
#include "plurmat/plurality.hpp"
#include "plurmat/protocol.hpp"
#include "plurmat/rules.hpp"
#include "plurmat/structured.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace plurmat::cli {

namespace {

struct ProfileOptions {
    std::string name = "ic";
    std::string in_path;
    int m = 3;
    std::uint64_t n = 0; // 0 = analytic where available
    std::uint64_t seed = 0;
    std::string focal_arg = "0";
    int focal = 0; // resolved from focal_arg against m
    double eps1 = 0.05;
    double eps2 = 4.0 / 21.0;
    double phi = 0.85;
    int dim = 2;
    std::vector<double> strengths;
    std::vector<double> rank_law;
};

void add_profile_options(CLI::App* cmd, ProfileOptions& po) {
    cmd->add_option("--profile", po.name,
                    "ic|antagonism|antagonism-marginal|min|sym|mallows|mallows-mix2|mallows-mix4|"
                    "pl-linear|pl|walsh|euclidean|custom");
    cmd->add_option("--in", po.in_path, "read a strict-order election file instead of --profile");
    cmd->add_option("--m", po.m, "number of alternatives");
    cmd->add_option("--n", po.n, "voters to sample; 0 asks for the analytic profile");
    cmd->add_option("--seed", po.seed, "sampling seed");
    cmd->add_option("--focal", po.focal_arg, "focal alternative (index or label)");
    cmd->add_option("--eps1", po.eps1, "top-rank mass of the min profile");
    cmd->add_option("--eps2", po.eps2, "extreme-rank mass of the sym profile");
    cmd->add_option("--phi", po.phi, "Mallows dispersion");
    cmd->add_option("--dim", po.dim, "Euclidean dimension");
    cmd->add_option("--strengths", po.strengths, "explicit strength vector")->delimiter(',');
    cmd->add_option("--w", po.rank_law, "explicit focal rank law")->delimiter(',');
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> min_law(int m, double eps1) {
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    w.front() = eps1;
    w.back() = 1.0 - eps1;
    return w;
}

std::vector<double> sym_law(int m, double eps2) {
    std::vector<double> w(static_cast<std::size_t>(m), 0.0);
    w.front() = eps2;
    w.back() = eps2;
    w[static_cast<std::size_t>((m + 1) / 2 - 1)] = 1.0 - 2.0 * eps2;
    return w;
}

int resolve_alternative(const std::string& arg, int m) {
    try {
        std::size_t used = 0;
        const int idx = std::stoi(arg, &used);
        if (used == arg.size()) {
            if (idx < 0 || idx >= m) throw DomainError("alternative index " + arg + " out of range");
            return idx;
        }
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        // fall through to label lookup
    }
    return AlternativeSet(m).index_of(arg);
}

// Resolves --focal against m (labels like "a" are accepted) and returns
// the options with the numeric index filled in.
ProfileOptions resolved(const ProfileOptions& in) {
    ProfileOptions po = in;
    po.focal = resolve_alternative(po.focal_arg, po.m);
    return po;
}

Profile build_profile_resolved(const ProfileOptions& po) {
    if (!po.in_path.empty()) return parse_soc(read_file(po.in_path));

    const int m = po.m;
    if (po.name == "ic") return generate(GeneratorSpec::impartial_culture(m, po.seed), po.n);
    if (po.name == "antagonism") {
        if (po.n == 0) return antagonism_two_bloc(m, po.focal);
        Profile base = antagonism_two_bloc(m, po.focal);
        return Profile::sampled(m, [&] {
            std::vector<std::pair<Ranking, double>> votes;
            for (auto& r : sample_voters(base, po.n, po.seed)) votes.emplace_back(std::move(r), 1.0);
            return votes;
        }());
    }
    if (po.name == "antagonism-marginal")
        return generate(GeneratorSpec::antagonism(m, po.focal, po.seed), po.n);
    if (po.name == "min") return generate(GeneratorSpec::custom(m, po.focal, min_law(m, po.eps1), po.seed), po.n);
    if (po.name == "sym") return generate(GeneratorSpec::custom(m, po.focal, sym_law(m, po.eps2), po.seed), po.n);
    if (po.name == "mallows")
        return generate(GeneratorSpec::mallows_model(m, Ranking::identity(m), po.phi, po.seed), po.n);
    if (po.name == "mallows-mix2") return generate(GeneratorSpec::mallows_mixture(m, 2, 0.3, po.seed), po.n);
    if (po.name == "mallows-mix4") return generate(GeneratorSpec::mallows_mixture(m, 4, 0.3, po.seed), po.n);
    if (po.name == "pl-linear") return generate(GeneratorSpec::plackett_luce_linear(m, po.seed), po.n);
    if (po.name == "pl") return generate(GeneratorSpec::plackett_luce(po.strengths, po.seed), po.n);
    if (po.name == "walsh") return generate(GeneratorSpec::walsh(m, po.seed), po.n);
    if (po.name == "euclidean") return generate(GeneratorSpec::euclidean(m, po.dim, po.seed), po.n);
    if (po.name == "custom") return generate(GeneratorSpec::custom(m, po.focal, po.rank_law, po.seed), po.n);
    throw DomainError("unknown profile '" + po.name + "'");
}

Profile build_profile(const ProfileOptions& in) { return build_profile_resolved(resolved(in)); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + out_path + "'");
    f << text;
}

bool oracle_feasible(const Profile& profile) {
    if (profile.kind() == Profile::Kind::RankMarginal) return profile.m() <= 8;
    return profile.m() <= 8 || profile.support().size() <= 5040;
}

// Max closed-form/definitional deviation over pairwise entries, Var and
// Div of every alternative, reported next to --oracle output.
double oracle_cross_check(const Profile& profile, const PluralityMatrix& matrix) {
    const oracle::EnumerationTable table = oracle::enumerate_profile(profile);
    double worst = 0.0;
    const int m = profile.m();
    if (matrix.has_degree(2)) {
        for (const auto& [subset, row] : matrix.slice(2))
            for (std::size_t i = 0; i < subset.size(); ++i)
                worst = std::max(worst, std::abs(row.p[i] - oracle::subset_top_probability(
                                                                table, subset, subset[i])));
    }
    if (matrix.has_degree(2) && matrix.has_degree(3)) {
        for (int a = 0; a < m; ++a) {
            worst = std::max(worst, std::abs(rank_variance(matrix, a) - oracle::rank_variance(table, a)));
            try {
                worst = std::max(worst, std::abs(divisiveness(matrix, a) - oracle::divisiveness(table, a)));
            } catch (const PositivityError&) {
                // both sides refuse; nothing to compare
            }
        }
    }
    return worst;
}

struct MeasureArgs {
    ProfileOptions po;
    std::string measure = "all";
    std::string pair;
    std::string rule = "max_swap";
    double alpha = 1.0;
    double polar_p = 1.0;
    int kwise_k = 2;
    int approval_k = 1;
    bool drop_degenerate = false;
    bool table2 = false;
    bool use_oracle = false;
    std::string format = "json";
    std::string out_path;
};

int run_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<MeasureRecord> records;
    const ProfileOptions po = resolved(a.po);

    if (a.table2) {
        const int m = po.m;
        struct Named {
            std::string name;
            Profile profile;
        };
        std::vector<Named> profiles;
        profiles.push_back({"ic", generate(GeneratorSpec::impartial_culture(m), 0)});
        profiles.push_back({"antagonism", antagonism_two_bloc(m, po.focal)});
        profiles.push_back({"min", generate(GeneratorSpec::custom(m, po.focal, min_law(m, po.eps1)), 0)});
        profiles.push_back({"sym", generate(GeneratorSpec::custom(m, po.focal, sym_law(m, po.eps2)), 0)});
        const AlternativeSet alts(m);
        for (const auto& [name, profile] : profiles) {
            const PluralityMatrix matrix = plurality_matrix(profile, {2, 3});
            records.push_back({"agreement_index", name, agreement_index(matrix), 2, false});
            records.push_back({"rank_variance", name + "/" + alts.label(po.focal),
                               rank_variance(matrix, po.focal), 3, false});
            records.push_back({"divisiveness", name + "/" + alts.label(po.focal),
                               divisiveness(matrix, po.focal), 3, false});
        }
        emit(a.format == "csv" ? measures_to_csv(records) : measures_to_json(records), a.out_path, out);
        return 0;
    }

    const Profile profile = build_profile_resolved(po);
    const int m = profile.m();
    const AlternativeSet alts(m);
    const int focal = po.focal;
    const PluralityMatrix matrix = plurality_matrix(profile, {2, 3});

    const bool all = a.measure == "all";
    if (all || a.measure == "agreement")
        records.push_back({"agreement_index", "-", agreement_index(matrix), 2, false});
    if (all || a.measure == "borda")
        records.push_back({"borda", alts.label(focal), borda_score(matrix, focal), 2, false});
    if (all || a.measure == "var")
        records.push_back({"rank_variance", alts.label(focal), rank_variance(matrix, focal), 3, false});
    if (all || a.measure == "div")
        records.push_back({"divisiveness", alts.label(focal),
                           divisiveness(matrix, focal, a.drop_degenerate), 3, false});
    if (all || a.measure == "alpha-div")
        records.push_back({"alpha_divisiveness", alts.label(focal),
                           alpha_divisiveness(matrix, focal, a.alpha, a.drop_degenerate), 3, false});
    if (all || a.measure == "kt-diversity")
        records.push_back({"kt_diversity", "-", kt_diversity(matrix), 2, false});

    if (a.measure == "pair") {
        const auto bar = a.pair.find('|');
        if (bar == std::string::npos) throw DomainError("--pair expects 'x|y'");
        const int x = alts.index_of(a.pair.substr(0, bar));
        const int y = alts.index_of(a.pair.substr(bar + 1));
        const PairConflict pc = pair_conflict(matrix, x, y, a.polar_p);
        const std::string tgt = a.pair;
        records.push_back({"rank_gap", tgt, pc.delta, 3, false});
        records.push_back({"discrepancy", tgt, pc.beta, 3, false});
        records.push_back({"partitioning_ratio", tgt, pc.alpha, 2, false});
        if (!pc.degenerate()) {
            records.push_back({"rank_gap_above", tgt, pc.gap_above(), 3, false});
            records.push_back({"rank_gap_below", tgt, pc.gap_below(), 3, false});
            records.push_back({"balance", tgt, pc.balance(), 3, false});
            records.push_back({"imbalance", tgt, pc.imbalance(), 3, false});
        }
        records.push_back({"max_sum", tgt, pc.max_sum, 3, false});
        records.push_back({"max_nash", tgt, pc.max_nash, 3, false});
        records.push_back({"max_swap", tgt, pc.max_swap, 3, false});
        records.push_back({"p_max_polar", tgt, pc.p_max_polar, 3, false});
    }

    if (a.measure == "conflict") {
        ConflictRule rule = ConflictRule::MaxSwap;
        if (a.rule == "max_sum") rule = ConflictRule::MaxSum;
        else if (a.rule == "max_nash") rule = ConflictRule::MaxNash;
        else if (a.rule == "max_swap") rule = ConflictRule::MaxSwap;
        else if (a.rule == "p_max_polar") rule = ConflictRule::PMaxPolar;
        else throw DomainError("unknown conflict rule '" + a.rule + "'");
        const auto sel = most_conflictual_pair(matrix, rule, a.polar_p);
        records.push_back({conflict_rule_name(rule),
                           alts.label(sel.pair.first) + "|" + alts.label(sel.pair.second), sel.score, 3,
                           sel.tie});
    }

    if (a.measure == "tournament") {
        emit(rule_results_to_json(tournament_rules(matrix)), a.out_path, out);
        return 0;
    }
    if (a.measure == "kwise-kemeny") {
        emit(rule_results_to_json({kwise_kemeny(profile, a.kwise_k)}), a.out_path, out);
        return 0;
    }
    if (a.measure == "positional") {
        emit(rule_results_to_json(positional_rules(profile, a.approval_k)), a.out_path, out);
        return 0;
    }

    if (a.use_oracle) {
        if (!oracle_feasible(profile)) throw ResourceError("--oracle needs an enumerable profile (m <= 8)");
        const double dev = oracle_cross_check(profile, matrix);
        err << "oracle max deviation: " << fmt17(dev) << "\n";
        records.push_back({"oracle_max_deviation", "-", dev, 3, false});
    }

    emit(a.format == "csv" ? measures_to_csv(records) : measures_to_json(records), a.out_path, out);
    return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"plurality-matrix toolkit: disagreement measures, hierarchy witnesses, "
                 "and elicitation planning over preference profiles"};
    app.require_subcommand(1);

    // generate
    ProfileOptions gen_po;
    std::string gen_format = "soc";
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "produce a profile and write it out");
    add_profile_options(gen, gen_po);
    gen->add_option("--format", gen_format, "soc|json");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // matrix
    ProfileOptions mat_po;
    std::string mat_degrees = "2,3";
    std::string mat_format = "json";
    std::string mat_out;
    bool mat_oracle = false;
    auto* mat = app.add_subcommand("matrix", "plurality matrix slices of a profile");
    add_profile_options(mat, mat_po);
    mat->add_option("--degrees", mat_degrees, "comma-separated degree list");
    mat->add_option("--format", mat_format, "json|csv");
    mat->add_option("--out", mat_out, "output path");
    mat->add_flag("--oracle", mat_oracle, "cross-check entries against enumeration");

    // measure
    MeasureArgs meas;
    auto* me = app.add_subcommand("measure", "disagreement measures and rules");
    add_profile_options(me, meas.po);
    me->add_option("--measure", meas.measure,
                   "all|agreement|borda|var|div|alpha-div|kt-diversity|pair|conflict|tournament|"
                   "kwise-kemeny|positional");
    me->add_flag_callback("--all", [&meas] { meas.measure = "all"; },
                          "shorthand for --measure all");
    me->add_option("--pair", meas.pair, "pair 'x|y' for --measure pair");
    me->add_option("--rule", meas.rule, "max_sum|max_nash|max_swap|p_max_polar");
    me->add_option("--alpha", meas.alpha, "alpha-divisiveness exponent");
    me->add_option("--p-exponent", meas.polar_p, "p-max-polar exponent");
    me->add_option("--k", meas.kwise_k, "k for kwise-kemeny");
    me->add_option("--approval-k", meas.approval_k, "k for k-approval");
    me->add_flag("--drop-degenerate", meas.drop_degenerate, "skip opponents with pairwise 0/1");
    me->add_flag("--table2", meas.table2, "agreement/variance/divisiveness on the four built-ins");
    me->add_flag("--oracle", meas.use_oracle, "cross-check against enumeration");
    me->add_option("--format", meas.format, "json|csv");
    me->add_option("--out", meas.out_path, "output path");

    // moments
    ProfileOptions mom_po;
    int mom_kmax = 4;
    double mom_c = 1.0;
    std::string mom_out;
    bool mom_oracle = false;
    auto* mom = app.add_subcommand("moments", "central moments and the moment-plane point");
    add_profile_options(mom, mom_po);
    mom->add_option("--kmax", mom_kmax, "highest moment order");
    mom->add_option("--bimodality-c", mom_c, "transition-parabola offset");
    mom->add_option("--out", mom_out, "output path");
    mom->add_flag("--oracle", mom_oracle, "cross-check against enumeration");

    // pearson
    ProfileOptions pe_po;
    std::string pe_profiles = "mallows,mallows-mix2,mallows-mix4,pl-linear,walsh,euclidean";
    double pe_c = 1.0;
    std::string pe_out;
    auto* pe = app.add_subcommand("pearson", "skewness/kurtosis plane dataset (CSV)");
    add_profile_options(pe, pe_po);
    pe->add_option("--profiles", pe_profiles, "comma-separated profile names");
    pe->add_option("--bimodality-c", pe_c, "transition-parabola offset");
    pe->add_option("--out", pe_out, "output path");

    // witness
    int wit_d = 3;
    double wit_t = std::nan("");
    std::string wit_out;
    auto* wit = app.add_subcommand("witness", "degree-matched profile pair diverging at d+1");
    wit->add_option("--d", wit_d, "matched degree");
    wit->add_option("--t", wit_t,
                    "explicit step along the matching direction (default: the reference 1/20 at "
                    "d=3, else the largest step keeping entries >= 0.01)");
    wit->add_option("--out", wit_out, "output path");

    // collapse
    ProfileOptions col_po;
    std::string col_structure = "pl";
    int col_reference = 0;
    std::string col_out;
    auto* col = app.add_subcommand("collapse", "degree-2 reconstruction check under structure");
    add_profile_options(col, col_po);
    col->add_option("--structure", col_structure, "pl|sp");
    col->add_option("--reference", col_reference, "reference alternative for the pl lift");
    col->add_option("--out", col_out, "output path");

    // plan
    int plan_m = 10;
    int plan_degree = 2;
    double plan_eps = 0.05;
    double plan_delta = 0.05;
    int plan_lambda = -1;
    std::uint64_t plan_pop = 0;
    std::string plan_out;
    auto* pl = app.add_subcommand("plan", "sample-complexity plan for one degree");
    pl->add_option("--m", plan_m, "number of alternatives");
    pl->add_option("--degree", plan_degree, "target degree");
    pl->add_option("--epsilon", plan_eps, "entry accuracy");
    pl->add_option("--delta", plan_delta, "failure probability");
    pl->add_option("--lambda", plan_lambda, "cognitive-load budget (selects a ranking plan)");
    pl->add_option("--population", plan_pop, "available voters (selects the feasible protocol)");
    pl->add_option("--out", plan_out, "output path");

    // frontier
    int fr_m = 10;
    int fr_degree = 2;
    double fr_eps = 0.05;
    double fr_delta = 0.05;
    std::string fr_format = "csv";
    std::string fr_out;
    auto* fr = app.add_subcommand("frontier", "load/budget tradeoff curve");
    fr->add_option("--m", fr_m, "number of alternatives");
    fr->add_option("--degree", fr_degree, "target degree");
    fr->add_option("--epsilon", fr_eps, "entry accuracy");
    fr->add_option("--delta", fr_delta, "failure probability");
    fr->add_option("--format", fr_format, "csv|json");
    fr->add_option("--out", fr_out, "output path");

    // simulate
    ProfileOptions sim_po;
    std::string sim_protocol = "chain";
    int sim_degree = 2;
    int sim_k = 0;
    std::uint64_t sim_N = 0;
    int sim_trials = 1;
    double sim_eps = 0.1;
    double sim_delta = 0.1;
    std::string sim_schedule = "round-robin";
    std::string sim_format = "json";
    std::string sim_out;
    auto* sim = app.add_subcommand("simulate", "run elicitation protocols against a profile");
    add_profile_options(sim, sim_po);
    sim->add_option("--protocol", sim_protocol, "chain|ranking|both");
    sim->add_option("--degree", sim_degree, "target degree");
    sim->add_option("--k", sim_k, "ranking query size (default m)");
    sim->add_option("--N", sim_N, "query count override (default planned)");
    sim->add_option("--trials", sim_trials, "seeded trials; >1 emits the error-percentile CSV");
    sim->add_option("--epsilon", sim_eps, "entry accuracy");
    sim->add_option("--delta", sim_delta, "failure probability");
    sim->add_option("--schedule", sim_schedule, "round-robin|random");
    sim->add_option("--format", sim_format, "json|csv");
    sim->add_option("--out", sim_out, "output path");

    // bias-demo
    std::string bias_format = "text";
    auto* bias = app.add_subcommand("bias-demo", "transitive-inference selection bias, enumerated");
    bias->add_option("--format", bias_format, "text|json");

    // ingest
    std::string ing_in;
    std::string ing_format = "json";
    std::string ing_out;
    auto* ing = app.add_subcommand("ingest", "parse a strict-order election file");
    ing->add_option("--in", ing_in, "input path")->required();
    ing->add_option("--format", ing_format, "json|soc");
    ing->add_option("--out", ing_out, "output path");

    std::vector<const char*> cargs;
    cargs.push_back("plurmat");
    for (const auto& a : argv) cargs.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) {
            const Profile profile = build_profile(gen_po);
            emit(gen_format == "json" ? profile_to_json(profile) : profile_to_soc(profile), gen_out, out);
            return 0;
        }
        if (mat->parsed()) {
            const Profile profile = build_profile(mat_po);
            std::set<int> degrees;
            for (const auto& d : split_csv(mat_degrees)) degrees.insert(std::stoi(d));
            const PluralityMatrix matrix = plurality_matrix(profile, degrees);
            if (mat_oracle) {
                if (!oracle_feasible(profile))
                    throw ResourceError("--oracle needs an enumerable profile (m <= 8)");
                err << "oracle max deviation: " << fmt17(oracle_cross_check(profile, matrix)) << "\n";
            }
            emit(mat_format == "csv" ? matrix_to_csv(matrix) : matrix_to_json(matrix), mat_out, out);
            return 0;
        }
        if (me->parsed()) return run_measure(meas, out, err);
        if (mom->parsed()) {
            const ProfileOptions mp = resolved(mom_po);
            const Profile profile = build_profile_resolved(mp);
            const AggregatePlurality agg = aggregate_vector(profile, mp.focal);
            const MomentVector mv = moment_vector(agg, mom_kmax);
            std::ostringstream text;
            text << "{\n  \"alt\": " << mv.alt << ",\n  \"borda\": " << fmt17(mv.borda);
            for (const auto& [k, Mk] : mv.M) text << ",\n  \"M" << k << "\": " << fmt17(Mk);
            if (mv.skewness) {
                const PearsonPoint pt = pearson_point(mv, mom_c);
                text << ",\n  \"skewness\": " << fmt17(pt.skewness)
                     << ",\n  \"excess_kurtosis\": " << fmt17(pt.excess_kurtosis) << ",\n  \"region\": \""
                     << pearson_region_name(pt.region) << "\"";
            }
            if (mom_oracle) {
                if (!oracle_feasible(profile))
                    throw ResourceError("--oracle needs an enumerable profile (m <= 8)");
                const auto table = oracle::enumerate_profile(profile);
                double dev = 0.0;
                for (const auto& [k, Mk] : mv.M)
                    dev = std::max(dev, std::abs(Mk - oracle::central_moment(table, mp.focal, k)));
                err << "oracle max deviation: " << fmt17(dev) << "\n";
                text << ",\n  \"oracle_max_deviation\": " << fmt17(dev);
            }
            text << "\n}";
            emit(text.str(), mom_out, out);
            return 0;
        }
        if (pe->parsed()) {
            std::vector<PearsonRow> rows;
            for (const auto& name : split_csv(pe_profiles)) {
                ProfileOptions po = pe_po;
                po.name = name;
                if (po.n == 0) po.n = 10000;
                const Profile profile = build_profile(po);
                const AlternativeSet alts(profile.m());
                for (int a = 0; a < profile.m(); ++a) {
                    const MomentVector mv = moment_vector(aggregate_vector(profile, a, 4), 4);
                    if (!mv.skewness) continue;
                    const PearsonPoint pt = pearson_point(mv, pe_c);
                    rows.push_back({alts.label(a), name, pt.skewness, pt.excess_kurtosis,
                                    pearson_region_name(pt.region)});
                }
            }
            emit(pearson_to_csv(rows), pe_out, out);
            return 0;
        }
        if (wit->parsed()) {
            std::optional<double> t;
            if (!std::isnan(wit_t))
                t = wit_t;
            else if (wit_d == 3)
                t = 1.0 / 20.0; // reference step: shifted law (3,7,1,5,4)/20
            const auto wp = build_witness(wit_d, t);
            emit(witness_to_json(wp), wit_out, out);
            return 0;
        }
        if (col->parsed()) {
            const Profile profile = build_profile(col_po);
            double dev = 0.0;
            if (col_structure == "pl")
                dev = verify_collapse(profile, PlStructure{col_reference});
            else if (col_structure == "sp")
                dev = verify_collapse(profile, SpStructure{Ranking::identity(profile.m())});
            else
                throw DomainError("unknown structure '" + col_structure + "'");
            emit("{\n  \"structure\": \"" + col_structure + "\",\n  \"max_deviation\": " + fmt17(dev) +
                     "\n}",
                 col_out, out);
            return 0;
        }
        if (pl->parsed()) {
            const AccuracySpec spec{plan_eps, plan_delta};
            ElicitationPlan plan;
            if (plan_pop > 0)
                plan = choose_protocol(plan_pop, plan_m, plan_degree, spec);
            else if (plan_lambda >= 0)
                plan = plan_ranking(plan_m, plan_degree, plan_lambda, spec);
            else
                plan = plan_chain(plan_m, plan_degree, spec);
            const auto check = validate_lambda(plan);
            if (!check.ok) throw DomainError("planned protocol violates the load bound: " + check.detail);
            emit(plan_to_json(plan), plan_out, out);
            return 0;
        }
        if (fr->parsed()) {
            const auto points = pareto_frontier(fr_m, fr_degree, AccuracySpec{fr_eps, fr_delta});
            emit(fr_format == "json" ? frontier_to_json(points) : frontier_to_csv(points), fr_out, out);
            return 0;
        }
        if (sim->parsed()) {
            const Profile profile = build_profile(sim_po);
            const int m = profile.m();
            const AccuracySpec spec{sim_eps, sim_delta};
            const int k = sim_k > 0 ? sim_k : m;
            SimulationOptions opts;
            opts.schedule = sim_schedule == "random" ? Schedule::UniformRandom : Schedule::RoundRobin;
            opts.epsilon = sim_eps;
            const PluralityMatrix truth = plurality_matrix(profile, {sim_degree});
            opts.truth = &truth;

            std::vector<std::string> protocols;
            if (sim_protocol == "both") {
                protocols = {"chain", "ranking"};
            } else {
                protocols = {sim_protocol};
            }

            std::vector<ProtocolCurveRow> rows;
            std::string single_report;
            for (const auto& proto : protocols) {
                std::uint64_t N = sim_N;
                ElicitationPlan plan;
                if (proto == "chain") {
                    plan = plan_chain(m, sim_degree, spec);
                } else if (proto == "ranking") {
                    plan = plan_ranking(m, sim_degree, ceil_log2_factorial(k), spec);
                } else {
                    throw DomainError("unknown protocol '" + proto + "'");
                }
                if (N == 0) N = plan.query_count;

                std::vector<double> errors;
                Rng seeder(sim_po.seed);
                for (int trial = 0; trial < sim_trials; ++trial) {
                    const std::uint64_t trial_seed = seeder.derive(static_cast<std::uint64_t>(trial)).seed();
                    const SimulationReport rep =
                        proto == "chain" ? run_chain(profile, sim_degree, N, trial_seed, opts)
                                         : run_ranking(profile, k, sim_degree, N, trial_seed, opts);
                    errors.push_back(rep.max_entry_error);
                    if (sim_trials == 1) single_report = report_to_json(rep);
                }
                if (sim_trials > 1) {
                    std::sort(errors.begin(), errors.end());
                    auto pct = [&errors](double q) {
                        const double idx = q * (static_cast<double>(errors.size()) - 1);
                        return errors[static_cast<std::size_t>(std::llround(idx))];
                    };
                    rows.push_back({sim_degree, plan.max_cognitive_load, N, proto, pct(0.05), pct(0.95)});
                }
            }
            if (sim_trials > 1)
                emit(protocol_curve_to_csv(rows), sim_out, out);
            else
                emit(single_report, sim_out, out);
            return 0;
        }
        if (bias->parsed()) {
            const ChainBiasReport rep = chain_bias_demo();
            if (bias_format == "json") {
                out << bias_report_to_json(rep) << "\n";
            } else {
                out << "true p_ca = " << fmt17(rep.true_pairwise) << "\n"
                    << "inferred transitive estimate = " << fmt17(rep.inferred_estimate) << "\n"
                    << "prefix-winner estimate = " << fmt17(rep.prefix_estimate) << "\n";
            }
            return 0;
        }
        if (ing->parsed()) {
            const Profile profile = parse_soc(read_file(ing_in));
            err << "parsed " << profile.sampled_data().votes.size() << " ballot lines over m = "
                << profile.m() << "\n";
            emit(ing_format == "soc" ? profile_to_soc(profile) : profile_to_json(profile), ing_out, out);
            return 0;
        }
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const FileParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const DependencyError& e) {
        err << "dependency error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace plurmat::cli
