#include "plurmat/hierarchy.hpp"

#include "plurmat/combin.hpp"
#include "plurmat/errors.hpp"
#include "plurmat/plurality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace plurmat {

namespace {

long long checked_ll(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw ResourceError(std::string("Rational: overflow in ") + what);
    return static_cast<long long>(v);
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DomainError("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = gcd_ll(n, d);
    num = (g == 0) ? 0 : n / g;
    den = (g == 0) ? 1 : d / g;
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    const __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked_ll(n, "+"), checked_ll(d, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const Rational x(num, o.den);
    const Rational y(o.num, den);
    const __int128 n = static_cast<__int128>(x.num) * y.num;
    const __int128 d = static_cast<__int128>(x.den) * y.den;
    return Rational(checked_ll(n, "*"), checked_ll(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw DomainError("Rational: division by zero");
    return *this * Rational(o.den, o.num);
}

Rational Rational::operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
}

namespace {

// Reduced row echelon form over the rationals; returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<Rational>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr == -1) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pr)]);
        const Rational inv = Rational(1) / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Rational> null_basis_vector(const std::vector<std::vector<Rational>>& rrefed,
                                        const std::vector<int>& pivots, int cols, int free_col) {
    std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
    x[static_cast<std::size_t>(free_col)] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const int pc = pivots[r];
        x[static_cast<std::size_t>(pc)] = -rrefed[r][static_cast<std::size_t>(free_col)];
    }
    return x;
}

std::vector<Rational> to_integers(std::vector<Rational> v) {
    long long l = 1;
    for (const auto& x : v) l = checked_ll(static_cast<__int128>(l) / gcd_ll(l, x.den) * x.den, "lcm");
    long long g = 0;
    for (auto& x : v) {
        x = x * Rational(l);
        g = gcd_ll(g, x.num);
    }
    if (g > 1)
        for (auto& x : v) x = x / Rational(g);
    return v;
}

} // namespace

Rational separation_value(const std::vector<Rational>& delta, int d) {
    const int m = d + 2;
    Rational acc(0);
    for (int j = 1; j <= m; ++j)
        acc = acc + delta[static_cast<std::size_t>(j - 1)] * Rational(static_cast<long long>(binom(m - j, d)));
    return acc;
}

std::vector<Rational> matching_direction(int d) {
    if (d < 2) throw DomainError("matching_direction: need d >= 2");
    if (d > 24) throw ResourceError("matching_direction: d too large for exact 64-bit rationals");
    const int m = d + 2;

    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    for (int s = 1; s <= d; ++s)
        for (int j = 1; j <= m; ++j)
            a[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(j - 1)] =
                Rational(static_cast<long long>(binom(m - j, s - 1)));

    const auto pivots = rref(a);
    if (static_cast<int>(pivots.size()) != d)
        throw DomainError("matching_direction: coefficient matrix is rank deficient");

    std::vector<int> free_cols;
    for (int c = 0; c < m; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);

    for (int fc : free_cols) {
        auto candidate = to_integers(null_basis_vector(a, pivots, m, fc));
        if (!separation_value(candidate, d).is_zero()) return candidate;
    }
    throw DomainError("matching_direction: no null direction separates degree d+1");
}

Profile WitnessPair::base_profile(int focal) const { return Profile::rank_marginal(m, focal, w); }
Profile WitnessPair::shifted_profile(int focal) const { return Profile::rank_marginal(m, focal, w_prime); }

WitnessPair build_witness(int d, std::optional<double> t_opt) {
    const auto delta_q = matching_direction(d);
    const int m = d + 2;

    WitnessPair wp;
    wp.d = d;
    wp.m = m;
    wp.delta.reserve(static_cast<std::size_t>(m));
    for (const auto& q : delta_q) wp.delta.push_back(q.to_double());
    wp.w.assign(static_cast<std::size_t>(m), 1.0 / m);

    double t;
    if (t_opt) {
        t = *t_opt;
    } else {
        t = 1e300;
        for (double dj : wp.delta)
            if (dj < 0.0) t = std::min(t, (1.0 / m - 0.01) / (-dj));
    }
    wp.t = t;
    wp.w_prime.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        wp.w_prime[static_cast<std::size_t>(j)] =
            wp.w[static_cast<std::size_t>(j)] + t * wp.delta[static_cast<std::size_t>(j)];
        if (wp.w_prime[static_cast<std::size_t>(j)] < -1e-15)
            throw DomainError("build_witness: step t = " + std::to_string(t) +
                              " pushes the shifted law negative");
        wp.w_prime[static_cast<std::size_t>(j)] = std::max(wp.w_prime[static_cast<std::size_t>(j)], 0.0);
    }
    return wp;
}

AgreementReport verify_agreement(const Profile& pa, const Profile& pb, int max_degree, double tol) {
    if (pa.m() != pb.m()) throw DomainError("verify_agreement: profiles disagree on m");
    const int m = pa.m();
    const int top = std::min(max_degree, m);
    if (top < 2) throw DomainError("verify_agreement: need max_degree >= 2");

    std::set<int> degrees;
    for (int k = 2; k <= top; ++k) degrees.insert(k);
    const PluralityMatrix ma = plurality_matrix(pa, degrees);
    const PluralityMatrix mb = plurality_matrix(pb, degrees);

    AgreementReport rep;
    for (int k = 2; k <= top; ++k) {
        double worst = 0.0;
        for (const auto& [subset, row] : ma.slice(k)) {
            for (std::size_t i = 0; i < subset.size(); ++i) {
                const double gap = std::abs(row.p[i] - mb.entry(subset, subset[i]));
                worst = std::max(worst, gap);
            }
        }
        rep.max_gap[k] = worst;
        if (rep.first_divergent_degree == 0 && worst > tol) rep.first_divergent_degree = k;
    }
    return rep;
}

} // namespace plurmat
