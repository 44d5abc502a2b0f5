#include "eccx/theorems.hpp"

#include <cmath>

#include "eccx/errors.hpp"

namespace eccx {

namespace {

void validate(const RegularGraphData& d) {
    if (2 * d.q != d.p * d.r)
        throw contract_error("handshake violated: 2q != p*r");
    if (d.a_spectrum.total_order() != d.p)
        throw contract_error("spectrum has " + std::to_string(d.a_spectrum.total_order()) +
                             " values for order " + std::to_string(d.p));
    if (d.a_spectrum.pairs.empty() || std::abs(d.a_spectrum.pairs.front().value - d.r) > 1e-6)
        throw contract_error("largest adjacency eigenvalue must equal the degree");
}

// Adjacency eigenvalues with one copy of the principal eigenvalue r removed.
std::vector<double> non_principal(const RegularGraphData& d) {
    std::vector<double> out = d.a_spectrum.expand();
    out.erase(out.begin());
    return out;
}

// Roots of a t^2 + b t + c with a > 0 and nonnegative discriminant,
// computed without cancellation.
std::pair<double, double> stable_quadratic(double a, double b, double c) {
    const double disc = std::max(b * b - 4.0 * a * c, 0.0);
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    const double t1 = qq / a;
    const double t2 = qq != 0.0 ? c / qq : 0.0;
    return {t1, t2};
}

} // namespace

RegularGraphData RegularGraphData::from_graph(const Graph& g) {
    const auto r = regularity(g);
    if (!r)
        throw hypothesis_error("graph" + (g.label().empty() ? "" : " " + g.label()) +
                               " is not regular");
    RegularGraphData d{g.order(), g.edge_count(), *r,
                       group(sym_eigenvalues(adjacency_matrix(g)))};
    validate(d);
    return d;
}

RegularGraphData RegularGraphData::from_spectrum(int p, int r, Spectrum s) {
    if (p < 1 || r < 0 || (p * r) % 2 != 0)
        throw contract_error("no graph has order " + std::to_string(p) + " and degree " +
                             std::to_string(r));
    RegularGraphData d{p, p * r / 2, r, std::move(s)};
    validate(d);
    return d;
}

Spectrum line_spectrum(const RegularGraphData& d) {
    if (d.q < d.p)
        throw contract_error("line spectrum formula needs q >= p");
    std::vector<double> vals;
    vals.reserve(d.q);
    vals.push_back(2.0 * d.r - 2.0);
    for (double lam : non_principal(d)) vals.push_back(lam + d.r - 2.0);
    vals.insert(vals.end(), d.q - d.p, -2.0);
    return group(std::move(vals));
}

Spectrum l2_spectrum(const RegularGraphData& d) {
    if (d.r < 3)
        throw contract_error("iterated line spectrum formula needs degree >= 3");
    std::vector<double> vals;
    vals.push_back(4.0 * d.r - 6.0);
    for (double lam : non_principal(d)) vals.push_back(lam + 3.0 * d.r - 6.0);
    vals.insert(vals.end(), d.p * (d.r - 2) / 2, 2.0 * d.r - 6.0);
    vals.insert(vals.end(), d.p * d.r * (d.r - 2) / 2, -2.0);
    return group(std::move(vals));
}

Spectrum complement_spectrum(const RegularGraphData& d) {
    std::vector<double> vals;
    vals.reserve(d.p);
    vals.push_back(d.p - d.r - 1.0);
    for (double lam : non_principal(d)) vals.push_back(-(lam + 1.0));
    return group(std::move(vals));
}

Spectrum predict_sv_join(const RegularGraphData& d1, const RegularGraphData& d2) {
    if (d1.r < 2)
        throw hypothesis_error("subdivision-vertex join spectrum needs degree of G1 >= 2");
    std::vector<double> vals;
    vals.reserve(d1.p + d1.q + d2.p);
    vals.insert(vals.end(), d1.q - d1.p, 4.0);
    for (double beta : non_principal(d2)) vals.push_back(-2.0 * (1.0 + beta));
    for (double lam : non_principal(d1)) {
        const double s = lam + d1.r;
        const auto [t1, t2] = stable_quadratic(3.0, 4.0 * (s - 1.0), -3.0 * s);
        vals.push_back(-3.0 * t1 + 4.0 - 4.0 * s);
        vals.push_back(-3.0 * t2 + 4.0 - 4.0 * s);
    }
    SquareMatrix f(3);
    f.at(0, 1) = 3.0 * (d1.q - d1.r);
    f.at(1, 0) = 3.0 * (d1.p - 2);
    f.at(1, 1) = 4.0 * (d1.q - 2 * d1.r + 1);
    f.at(1, 2) = 2.0 * d2.p;
    f.at(2, 1) = 2.0 * d1.q;
    f.at(2, 2) = 2.0 * (d2.p - d2.r - 1);
    for (double v : small_eigenvalues(f)) vals.push_back(v);
    return group(std::move(vals));
}

Spectrum predict_se_join(const RegularGraphData& d1, const RegularGraphData& d2) {
    if (d1.r < 2)
        throw hypothesis_error("subdivision-edge join spectrum needs degree of G1 >= 2");
    std::vector<double> vals;
    vals.reserve(d1.p + d1.q + d2.p);
    vals.insert(vals.end(), d1.q - d1.p, 0.0);
    for (double gamma : non_principal(d2)) vals.push_back(-2.0 * (1.0 + gamma));
    for (double lam : non_principal(d1)) {
        const double disc =
            std::max(4.0 * (1.0 + lam) * (1.0 + lam) + 9.0 * (lam + d1.r), 0.0);
        const double sq = std::sqrt(disc);
        vals.push_back(-2.0 * (1.0 + lam) + sq);
        vals.push_back(-2.0 * (1.0 + lam) - sq);
    }
    SquareMatrix f(3);
    f.at(0, 0) = 4.0 * (d1.p - 1 - d1.r);
    f.at(0, 1) = 3.0 * (d1.q - d1.r);
    f.at(0, 2) = 2.0 * d2.p;
    f.at(1, 0) = 3.0 * (d1.p - 2);
    f.at(2, 0) = 2.0 * d1.p;
    f.at(2, 2) = 2.0 * (d2.p - d2.r - 1);
    for (double v : small_eigenvalues(f)) vals.push_back(v);
    return group(std::move(vals));
}

Spectrum predict_join_k1(const RegularGraphData& d) {
    if (d.r >= d.p - 1)
        throw hypothesis_error("join with K1 spectrum needs a non-complete graph");
    std::vector<double> vals;
    vals.reserve(d.p + 1);
    const double a = d.p - d.r - 1.0;
    const double sq = std::sqrt(a * a + d.p);
    vals.push_back(a + sq);
    vals.push_back(a - sq);
    for (double lam : non_principal(d)) vals.push_back(-2.0 * (lam + 1.0));
    return group(std::move(vals));
}

Spectrum predict_self_join(const RegularGraphData& d) {
    if (d.r >= d.p - 1)
        throw hypothesis_error("self join spectrum needs a non-complete graph");
    std::vector<double> vals;
    vals.reserve(2 * d.p);
    vals.insert(vals.end(), 2, 2.0 * (d.p - d.r - 1.0));
    for (double lam : non_principal(d)) {
        vals.insert(vals.end(), 2, -2.0 * (lam + 1.0));
    }
    return group(std::move(vals));
}

Spectrum predict_join_union(const RegularGraphData& d0, const RegularGraphData& d1,
                            const RegularGraphData& d2, bool hypothesis_asserted) {
    if (!hypothesis_asserted)
        throw hypothesis_error("join-union spectrum needs the caller to assert "
                               "that G0 has diameter at least 2");
    std::vector<double> vals;
    vals.reserve(d0.p + d1.p + d2.p);
    for (const auto* d : {&d0, &d1, &d2})
        for (double lam : non_principal(*d)) vals.push_back(-2.0 * (1.0 + lam));
    SquareMatrix f(3);
    f.at(0, 0) = 2.0 * (d0.p - 1 - d0.r);
    f.at(1, 1) = 2.0 * (d1.p - 1 - d1.r);
    f.at(1, 2) = 2.0 * d2.p;
    f.at(2, 1) = 2.0 * d1.p;
    f.at(2, 2) = 2.0 * (d2.p - 1 - d2.r);
    for (double v : small_eigenvalues(f)) vals.push_back(v);
    return group(std::move(vals));
}

Spectrum predict_sv_join_union(const RegularGraphData& d0, const RegularGraphData& d1,
                               const RegularGraphData& d2) {
    if (d0.r < 2)
        throw hypothesis_error("subdivision-vertex join-union spectrum needs degree of G0 >= 2");
    std::vector<double> vals;
    vals.reserve(d0.p + d0.q + d1.p + d2.p);
    vals.insert(vals.end(), d0.q - d0.p, 4.0);
    for (double beta : non_principal(d1)) vals.push_back(-2.0 * (1.0 + beta));
    for (double gamma : non_principal(d2)) vals.push_back(-2.0 * (1.0 + gamma));
    for (double lam : non_principal(d0)) {
        const double s = lam + d0.r;
        const auto [t1, t2] = stable_quadratic(3.0, 4.0 * (s - 1.0), -3.0 * s);
        vals.push_back(-3.0 * t1 + 4.0 - 4.0 * s);
        vals.push_back(-3.0 * t2 + 4.0 - 4.0 * s);
    }
    SquareMatrix f(4);
    f.at(0, 1) = 3.0 * (d0.q - d0.r);
    f.at(1, 0) = 3.0 * (d0.p - 2);
    f.at(1, 1) = 4.0 * (d0.q - 2 * d0.r + 1);
    f.at(1, 2) = 2.0 * d1.p;
    f.at(1, 3) = 2.0 * d2.p;
    f.at(2, 1) = 2.0 * d0.q;
    f.at(2, 2) = 2.0 * (d1.p - d1.r - 1);
    f.at(2, 3) = 2.0 * d2.p;
    f.at(3, 1) = 2.0 * d0.q;
    f.at(3, 2) = 2.0 * d1.p;
    f.at(3, 3) = 2.0 * (d2.p - d2.r - 1);
    for (double v : small_eigenvalues(f)) vals.push_back(v);
    return group(std::move(vals));
}

Spectrum predict_se_join_union(const RegularGraphData& d0, const RegularGraphData& d1,
                               const RegularGraphData& d2) {
    if (d0.r < 2)
        throw hypothesis_error("subdivision-edge join-union spectrum needs degree of G0 >= 2");
    std::vector<double> vals;
    vals.reserve(d0.p + d0.q + d1.p + d2.p);
    vals.insert(vals.end(), d0.q - d0.p, 0.0);
    for (double beta : non_principal(d1)) vals.push_back(-2.0 * (1.0 + beta));
    for (double gamma : non_principal(d2)) vals.push_back(-2.0 * (1.0 + gamma));
    for (double lam : non_principal(d0)) {
        const double disc =
            std::max(4.0 * (1.0 + lam) * (1.0 + lam) + 9.0 * (lam + d0.r), 0.0);
        const double sq = std::sqrt(disc);
        vals.push_back(-2.0 * (1.0 + lam) + sq);
        vals.push_back(-2.0 * (1.0 + lam) - sq);
    }
    SquareMatrix f(4);
    f.at(0, 0) = 4.0 * (d0.p - 1 - d0.r);
    f.at(0, 1) = 3.0 * (d0.q - d0.r);
    f.at(0, 2) = 2.0 * d1.p;
    f.at(0, 3) = 2.0 * d2.p;
    f.at(1, 0) = 3.0 * (d0.p - 2);
    f.at(2, 0) = 2.0 * d0.p;
    f.at(2, 2) = 2.0 * (d1.p - 1 - d1.r);
    f.at(2, 3) = 2.0 * d2.p;
    f.at(3, 0) = 2.0 * d0.p;
    f.at(3, 2) = 2.0 * d1.p;
    f.at(3, 3) = 2.0 * (d2.p - 1 - d2.r);
    for (double v : small_eigenvalues(f)) vals.push_back(v);
    return group(std::move(vals));
}

long long wiener_sv_join(int p1, int q1, int r1, int p2, int r2) {
    const long long a = static_cast<long long>(q1) * (3LL * p1 - 4LL * r1 + 2LL * q1 - 1);
    const long long b = static_cast<long long>(p2) * (p2 + 2LL * q1 - r2 - 1);
    return a + b - 3LL * r1 * p1 / 2; // r1*p1 = 2*q1 is even
}

long long wiener_se_join(int p1, int q1, int r1, int p2, int r2) {
    // doubled form keeps everything integral before the final halving
    const long long doubled = 4LL * p1 * p1 + 2LL * p2 * p2 -
                              static_cast<long long>(p1) * (4 - 4LL * p2 + 7LL * r1) +
                              6LL * q1 * (p1 - 1) - 2LL * p2 * (r2 + 1);
    return doubled / 2;
}

double rho_bound(JoinVariant variant, int p1, int q1, int r1, int p2, int r2) {
    const long long w = variant == JoinVariant::sv_join ? wiener_sv_join(p1, q1, r1, p2, r2)
                                                        : wiener_se_join(p1, q1, r1, p2, r2);
    return 2.0 * static_cast<double>(w) / (p1 + q1 + p2);
}

} // namespace eccx
