#pragma once

#include "plurmat/elicitation.hpp"
#include "plurmat/generators.hpp"
#include "plurmat/plurality.hpp"

#include <optional>

namespace plurmat {

enum class Schedule {
    RoundRobin,     // cycle the sorted subset list; exact per-entry coverage
    UniformRandom,  // independent uniform subset per query
};

struct SimulationOptions {
    Schedule schedule = Schedule::RoundRobin;
    // When set, voters are pre-drawn once and consumed without
    // replacement; queries beyond the population throw.
    std::optional<std::uint64_t> population;
    // Reference matrix holding the target degree; enables error and
    // coverage reporting.
    const PluralityMatrix* truth = nullptr;
    double epsilon = 0.0;
    // Record transitivity-inferred pairwise outcomes (biased; kept out of
    // the estimators and surfaced only for demonstration).
    bool record_transitive = false;
};

struct SimulationReport {
    ElicitationPlan plan;
    PluralityMatrix estimates{2, PluralityMatrix::Provenance::Empirical};
    PluralityMatrix transitive_estimates{2, PluralityMatrix::Provenance::Empirical};
    double max_entry_error = -1.0; // at the target degree; -1 without truth
    std::uint64_t realized_budget = 0;
    int realized_max_load = 0;
    bool covered = false;
};

// Degree-ell chain protocol: each query draws a fresh voter, walks a
// random ordering of its subset with ell-1 winner-stays comparisons, and
// records every nested prefix winner (degrees 2..ell).
SimulationReport run_chain(const Profile& profile, int ell, std::uint64_t N, std::uint64_t seed,
                           const SimulationOptions& opts = {});

// Size-k ranking protocol targeting degree ell: each query reads the
// voter's restriction to the subset and credits the top of every size-ell
// subset it contains; cost ceil(log2 k!) per query.
SimulationReport run_ranking(const Profile& profile, int k, int ell, std::uint64_t N,
                             std::uint64_t seed, const SimulationOptions& opts = {});

// Exhaustive two-voter, six-ordering enumeration of the selection bias
// that transitive inference from chain comparisons induces: the inferred
// conditional estimate lands at 1/4 while the true proportion is 1/2,
// and the nested prefix winners stay unbiased.
struct ChainBiasReport {
    double true_pairwise = 0.0;      // Pr[c over a]
    double inferred_estimate = 0.0;  // conditional on the pair being resolved
    double prefix_estimate = 0.0;    // from first-prefix winners only
    double resolution_rate = 0.0;
};

ChainBiasReport chain_bias_demo();

} // namespace plurmat
