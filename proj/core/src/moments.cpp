#include "plurmat/moments.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace plurmat {

namespace {
constexpr double kVarianceFloor = 1e-12;
}

std::vector<double> moment_coefficients(double borda, int k) {
    if (k < 1) throw DomainError("moment_coefficients: k must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(k) + 1);
    for (int s = 0; s <= k; ++s) {
        long double acc = 0.0L;
        for (int j = 0; j <= s; ++j) {
            const long double term =
                binom_d(s, j) * std::pow(static_cast<long double>(j) - borda, k);
            acc += ((s - j) % 2 == 0) ? term : -term;
        }
        c[static_cast<std::size_t>(s)] = static_cast<double>(acc);
    }
    return c;
}

double central_moment(const AggregatePlurality& agg, int k) {
    const int m = agg.m();
    if (k < 1) throw DomainError("central_moment: k must be >= 1");
    // A rank on m points has no size-s dominated subsets beyond s = m-1,
    // so the aggregate terms vanish there and truncation stays exact for
    // every order k.
    if (agg.max_valid < std::min(k, m - 1))
        throw DependencyError("central_moment: aggregate vector truncated below order " +
                              std::to_string(std::min(k, m - 1)));
    const double borda = agg.P[1];
    const auto c = moment_coefficients(borda, k);
    long double acc = 0.0L;
    for (int s = 0; s <= std::min(k, m - 1); ++s)
        acc += static_cast<long double>(c[static_cast<std::size_t>(s)]) *
               static_cast<long double>(agg.P[static_cast<std::size_t>(s)]);
    if (k % 2 != 0) acc = -acc;
    return static_cast<double>(acc);
}

MomentVector moment_vector(const AggregatePlurality& agg, int max_order) {
    MomentVector mv;
    mv.alt = agg.alt;
    mv.borda = agg.P[1];
    for (int k = 2; k <= max_order; ++k) mv.M[k] = central_moment(agg, k);
    if (mv.M.count(2) && mv.M.count(3) && mv.M.count(4) && mv.M.at(2) > kVarianceFloor) {
        const double m2 = mv.M.at(2);
        mv.skewness = mv.M.at(3) / std::pow(m2, 1.5);
        mv.excess_kurtosis = mv.M.at(4) / (m2 * m2) - 3.0;
    }
    return mv;
}

std::pair<double, double> skew_kurtosis(const MomentVector& mv) {
    if (!mv.M.count(2) || !(mv.M.at(2) > kVarianceFloor))
        throw DegenerateError("skew_kurtosis: zero rank variance");
    if (!mv.skewness || !mv.excess_kurtosis)
        throw DependencyError("skew_kurtosis: moments up to order 4 required");
    return {*mv.skewness, *mv.excess_kurtosis};
}

std::string pearson_region_name(PearsonRegion r) {
    switch (r) {
    case PearsonRegion::Infeasible: return "infeasible";
    case PearsonRegion::Bimodal: return "bimodal";
    case PearsonRegion::Unimodal: return "unimodal";
    }
    return "?";
}

PearsonPoint classify_pearson(double g1, double g2, double boundary_c) {
    PearsonPoint pt;
    pt.skewness = g1;
    pt.excess_kurtosis = g2;
    pt.boundary_c = boundary_c;
    if (g2 < g1 * g1 - 2.0 - 1e-9)
        pt.region = PearsonRegion::Infeasible;
    else if (g2 < g1 * g1 - boundary_c)
        pt.region = PearsonRegion::Bimodal;
    else
        pt.region = PearsonRegion::Unimodal;
    return pt;
}

PearsonPoint pearson_point(const MomentVector& mv, double boundary_c) {
    const auto [g1, g2] = skew_kurtosis(mv);
    return classify_pearson(g1, g2, boundary_c);
}

} // namespace plurmat
