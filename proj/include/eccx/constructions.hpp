#ifndef ECCX_CONSTRUCTIONS_HPP
#define ECCX_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "eccx/graph.hpp"
#include "eccx/linalg.hpp"

namespace eccx {

// One verified family instance: the built graphs with their eccentricity
// spectra, energies, pairwise cospectrality and irreducibility flags.
struct ConstructionReport {
    std::vector<std::pair<std::string, Graph>> graphs;
    std::vector<Spectrum> spectra;
    std::vector<double> energies;
    std::vector<std::vector<bool>> pairwise_cospectral;
    bool equienergetic = false; // max energy - min energy < 1e-6
    std::vector<bool> irreducible;
    std::string notes;

    std::string to_json() const;
};

// Connected 3-regular graphs on n vertices (n even, 4..14), deduplicated
// by sorted adjacency spectrum and returned sorted by graph6 string.
// Isomorphic duplicates with equal spectra collapse; that is all the
// pair-finding below needs.
std::vector<Graph> enumerate_cubic(int n);

// Deterministic non-cospectral pair of connected cubic graphs on 2t
// vertices: the lexicographically (by graph6) smallest such pair.
// t = 2 fails: K4 is the only cubic graph on 4 vertices.
std::pair<Graph, Graph> noncospectral_cubic_pair(int t);

// join(L2(G), L2(G)) over the cubic pair: equal energies 72t - 56 on 12t
// vertices, distinct spectra.
ConstructionReport equienergetic_pair_12t(int t);

// join(L2(G), K1): equal energies 24t - 14 + 2 sqrt((6t-7)^2 + 6t) on
// 6t + 1 vertices.
ConstructionReport equienergetic_pair_6t1(int t);

enum class PairVariant { sv_pair, se_pair, sv_triplet, se_triplet };

// Subdivision joins of a regular base graph (degree >= 2) with L2 of the
// cubic pair: 2 or 3 equienergetic, pairwise non-cospectral graphs.
ConstructionReport equienergetic_join_family(const Graph& g, int t, PairVariant variant);

enum class IntegralFamily { k3_svjoin_kn, k11_sejoin_kn, join_union_complete };

struct IntegralScanRow {
    std::vector<int> params;
    bool integral_numeric = false;   // every eccentricity eigenvalue within 1e-6 of an integer
    bool integral_predicate = false; // the arithmetic certificate for this family
    std::string certificate;         // square root / integer roots when integral
};

// Scans a family over [lo, hi]; the numeric verdict and the arithmetic
// predicate must agree row by row.
//   k3_svjoin_kn:        K3 sv-join Kn, integral iff 12n+9 is a perfect square
//   k11_sejoin_kn:       K11 se-join Kn, integral iff 44n+3645 is a perfect square
//   join_union_complete: Kn v (Km u Kl) over triples (n, m <= l), integral iff
//                        the quotient characteristic cubic splits over Z
std::vector<IntegralScanRow> integral_family_scan(IntegralFamily family, int lo, int hi);

} // namespace eccx

#endif
