#ifndef ECCX_THEOREMS_HPP
#define ECCX_THEOREMS_HPP

#include "eccx/graph.hpp"
#include "eccx/linalg.hpp"

namespace eccx {

// Everything the closed-form predictors need from a regular graph. Two
// graphs with identical data yield identical predictions by construction,
// which is exactly what makes cospectral operands transfer.
struct RegularGraphData {
    int p = 0; // order
    int q = 0; // edge count
    int r = 0; // degree
    Spectrum a_spectrum;

    static RegularGraphData from_graph(const Graph& g);
    static RegularGraphData from_spectrum(int p, int r, Spectrum s);
};

// Adjacency spectrum of the line graph L(G) for regular G (degree >= 1).
Spectrum line_spectrum(const RegularGraphData& d);

// Adjacency spectrum of L(L(G)) for regular G with degree >= 3.
Spectrum l2_spectrum(const RegularGraphData& d);

// Adjacency spectrum of the complement of regular G.
Spectrum complement_spectrum(const RegularGraphData& d);

// Eccentricity spectrum of the subdivision-vertex join G1 with G2
// (degree of G1 at least 2).
Spectrum predict_sv_join(const RegularGraphData& d1, const RegularGraphData& d2);

// Eccentricity spectrum of the subdivision-edge join G1 with G2.
Spectrum predict_se_join(const RegularGraphData& d1, const RegularGraphData& d2);

// Eccentricity spectrum of G v K1 for non-complete regular G.
Spectrum predict_join_k1(const RegularGraphData& d);

// Eccentricity spectrum of G v G for non-complete regular G.
Spectrum predict_self_join(const RegularGraphData& d);

// Eccentricity spectrum of G0 v (G1 u G2) for regular operands. The block
// form this rests on needs a non-complete G0; the predictor itself only
// sees spectra, so the caller asserts that hypothesis via the flag.
Spectrum predict_join_union(const RegularGraphData& d0, const RegularGraphData& d1,
                            const RegularGraphData& d2, bool hypothesis_asserted = true);

// Eccentricity spectrum of G0 sv-join (G1 u G2), degree of G0 at least 2.
Spectrum predict_sv_join_union(const RegularGraphData& d0, const RegularGraphData& d1,
                               const RegularGraphData& d2);

// Eccentricity spectrum of G0 se-join (G1 u G2).
Spectrum predict_se_join_union(const RegularGraphData& d0, const RegularGraphData& d1,
                               const RegularGraphData& d2);

// Closed-form eccentricity Wiener indices of the two joins; exact integers.
long long wiener_sv_join(int p1, int q1, int r1, int p2, int r2);
long long wiener_se_join(int p1, int q1, int r1, int p2, int r2);

enum class JoinVariant { sv_join, se_join };

// Lower bound 2 W / (p1 + q1 + p2) on the eccentricity spectral radius of
// the corresponding join.
double rho_bound(JoinVariant variant, int p1, int q1, int r1, int p2, int r2);

} // namespace eccx

#endif
