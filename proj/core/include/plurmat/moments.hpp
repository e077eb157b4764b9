#pragma once

#include "plurmat/plurality.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plurmat {

// Finite-difference coefficients c_0..c_k of the k-th central moment in
// aggregate-plurality coordinates; c_k is always k!.
std::vector<double> moment_coefficients(double borda, int k);

// k-th central moment of the rank of agg.alt from the aggregate vector;
// needs P_0..P_k, so k <= m-1.
double central_moment(const AggregatePlurality& agg, int k);

struct MomentVector {
    int alt = 0;
    double borda = 0.0;
    std::map<int, double> M; // k -> M_k for k = 2..K
    std::optional<double> skewness;
    std::optional<double> excess_kurtosis;
};

// Moments up to order K (clamped to m-1); skewness and excess kurtosis
// are filled only when the variance is positive.
MomentVector moment_vector(const AggregatePlurality& agg, int max_order);

// (gamma1, gamma2); throws DegenerateError when the rank is deterministic.
std::pair<double, double> skew_kurtosis(const MomentVector& mv);

enum class PearsonRegion { Infeasible, Bimodal, Unimodal };
std::string pearson_region_name(PearsonRegion r);

struct PearsonPoint {
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    PearsonRegion region = PearsonRegion::Unimodal;
    double boundary_c = 1.0;
};

// Plane classification. Below g1^2 - 2 (hard bound) is infeasible for
// any real distribution; below g1^2 - c flags a bimodal-looking rank
// law. The transition offset c is a caller choice, default 1.
PearsonPoint classify_pearson(double g1, double g2, double boundary_c = 1.0);
PearsonPoint pearson_point(const MomentVector& mv, double boundary_c = 1.0);

} // namespace plurmat
