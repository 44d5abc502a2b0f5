#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "eccx/constructions.hpp"
#include "eccx/errors.hpp"
#include "eccx/metrics.hpp"

using namespace eccx;

namespace {

Spectrum adjacency_spectrum(const Graph& g) {
    return group(sym_eigenvalues(adjacency_matrix(g)));
}

} // namespace

TEST_CASE("cubic enumeration") {
    const auto on4 = enumerate_cubic(4);
    REQUIRE(on4.size() == 1);
    CHECK(spectra_equal(adjacency_spectrum(on4[0]), group({3, -1, -1, -1})));

    const auto on6 = enumerate_cubic(6);
    REQUIRE(on6.size() == 2);
    const Spectrum prism_spec = adjacency_spectrum(family(Family::prism));
    const Spectrum k33_spec = adjacency_spectrum(family(Family::complete_bipartite, {3, 3}));
    bool saw_prism = false, saw_k33 = false;
    for (const auto& g : on6) {
        CHECK(g.order() == 6);
        CHECK(regularity(g) == 3);
        CHECK(is_connected(g));
        saw_prism = saw_prism || spectra_equal(adjacency_spectrum(g), prism_spec);
        saw_k33 = saw_k33 || spectra_equal(adjacency_spectrum(g), k33_spec);
    }
    CHECK(saw_prism);
    CHECK(saw_k33);

    CHECK(enumerate_cubic(8).size() >= 2);

    CHECK_THROWS_AS(enumerate_cubic(5), parameter_error);
    CHECK_THROWS_AS(enumerate_cubic(16), parameter_error);
}

TEST_CASE("deterministic non-cospectral pair") {
    const auto [a, b] = noncospectral_cubic_pair(3);
    CHECK(a.order() == 6);
    CHECK(b.order() == 6);
    CHECK_FALSE(spectra_equal(adjacency_spectrum(a), adjacency_spectrum(b)));

    // only two cubic graphs exist on 6 vertices, so the pair must be the
    // prism and K3,3 in some order
    const Spectrum prism_spec = adjacency_spectrum(family(Family::prism));
    const Spectrum k33_spec = adjacency_spectrum(family(Family::complete_bipartite, {3, 3}));
    const bool ab = spectra_equal(adjacency_spectrum(a), prism_spec) &&
                    spectra_equal(adjacency_spectrum(b), k33_spec);
    const bool ba = spectra_equal(adjacency_spectrum(a), k33_spec) &&
                    spectra_equal(adjacency_spectrum(b), prism_spec);
    CHECK((ab || ba));

    // repeated runs hand back the same pair
    const auto [a2, b2] = noncospectral_cubic_pair(3);
    CHECK(serialize_graph6(a) == serialize_graph6(a2));
    CHECK(serialize_graph6(b) == serialize_graph6(b2));

    CHECK_THROWS_AS(noncospectral_cubic_pair(2), hypothesis_error);

    const auto [c, d] = noncospectral_cubic_pair(4);
    CHECK(c.order() == 8);
    CHECK_FALSE(spectra_equal(adjacency_spectrum(c), adjacency_spectrum(d)));
}

TEST_CASE("equienergetic pair on 12t vertices") {
    const auto rep = equienergetic_pair_12t(3);
    REQUIRE(rep.graphs.size() == 2);
    CHECK(rep.graphs[0].second.order() == 36);
    CHECK(rep.graphs[1].second.order() == 36);
    CHECK(rep.energies[0] == doctest::Approx(160).epsilon(1e-9));
    CHECK(rep.energies[1] == doctest::Approx(160).epsilon(1e-9));
    CHECK(rep.equienergetic);
    CHECK_FALSE(rep.pairwise_cospectral[0][1]);
    CHECK(rep.pairwise_cospectral[0][0]);
    // joining two copies completely leaves no cross entries in the
    // eccentricity matrix, so these composites are reducible
    CHECK_FALSE(rep.irreducible[0]);
    CHECK_FALSE(rep.irreducible[1]);

    // the two 36-vertex spectra of the smallest instance
    const Spectrum first = group({22, 22, -10, -10, -8, -8, -8, -8, -4, -4, -4, -4,
                                  -2, -2, -2, -2, -2, -2, 2, 2, 2, 2, 2, 2,
                                  2,  2,  2,  2,  2,  2,  2,  2,  2,  2, 2, 2});
    const Spectrum second = group({22, 22, -8, -8, -8, -8, -8, -8, -8, -8, -2, -2,
                                   -2, -2, -2, -2, -2, -2, 2, 2, 2, 2, 2, 2,
                                   2,  2,  2,  2,  2,  2,  2, 2, 2, 2, 2, 2});
    const bool direct = spectra_equal(rep.spectra[0], first) &&
                        spectra_equal(rep.spectra[1], second);
    const bool swapped = spectra_equal(rep.spectra[0], second) &&
                         spectra_equal(rep.spectra[1], first);
    CHECK((direct || swapped));
}

TEST_CASE("equienergetic pair on 6t+1 vertices") {
    const auto rep = equienergetic_pair_6t1(3);
    REQUIRE(rep.graphs.size() == 2);
    CHECK(rep.graphs[0].second.order() == 19);
    const double expected = 58.0 + 2.0 * std::sqrt(139.0);
    CHECK(rep.energies[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rep.energies[1] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rep.equienergetic);
    CHECK_FALSE(rep.pairwise_cospectral[0][1]);
    CHECK(rep.irreducible[0]); // the apex keeps the eccentric graph connected
    CHECK(rep.irreducible[1]);

    // both spectra contain 11 +- sqrt(139)
    for (const auto& spec : rep.spectra) {
        bool hi = false, lo = false;
        for (const auto& p : spec.pairs) {
            hi = hi || std::abs(p.value - (11 + std::sqrt(139.0))) < 1e-6;
            lo = lo || std::abs(p.value - (11 - std::sqrt(139.0))) < 1e-6;
        }
        CHECK(hi);
        CHECK(lo);
    }
}

TEST_CASE("pair families stay non-cospectral at larger t") {
    for (int t : {4, 5}) {
        const auto p12 = equienergetic_pair_12t(t);
        CHECK(p12.graphs[0].second.order() == 12 * t);
        CHECK(p12.graphs[1].second.order() == 12 * t);
        CHECK(p12.energies[0] == doctest::Approx(72.0 * t - 56.0).epsilon(1e-9));
        CHECK(p12.equienergetic);
        CHECK_FALSE(p12.pairwise_cospectral[0][1]);

        const auto p61 = equienergetic_pair_6t1(t);
        CHECK(p61.graphs[0].second.order() == 6 * t + 1);
        CHECK(p61.equienergetic);
        CHECK_FALSE(p61.pairwise_cospectral[0][1]);
    }
}

TEST_CASE("pairs and triplets from subdivision joins") {
    const Graph k3 = family(Family::complete, {3});

    const auto se_pair = equienergetic_join_family(k3, 3, PairVariant::se_pair);
    REQUIRE(se_pair.graphs.size() == 2);
    CHECK(se_pair.graphs[0].second.order() == 24); // 6 + 6t
    CHECK(se_pair.equienergetic);
    CHECK_FALSE(se_pair.pairwise_cospectral[0][1]);
    CHECK(se_pair.irreducible[0]);
    CHECK(se_pair.irreducible[1]);

    const auto sv_triplet = equienergetic_join_family(k3, 3, PairVariant::sv_triplet);
    REQUIRE(sv_triplet.graphs.size() == 3);
    for (const auto& [label, g] : sv_triplet.graphs) CHECK(g.order() == 42); // 6 + 12t
    CHECK(sv_triplet.equienergetic);
    CHECK_FALSE(sv_triplet.pairwise_cospectral[0][1]);
    CHECK_FALSE(sv_triplet.pairwise_cospectral[0][2]);
    CHECK_FALSE(sv_triplet.pairwise_cospectral[1][2]);
    for (bool irr : sv_triplet.irreducible) CHECK(irr);

    const auto sv_pair = equienergetic_join_family(family(Family::cycle, {4}), 3, PairVariant::sv_pair);
    CHECK(sv_pair.equienergetic);
    CHECK_FALSE(sv_pair.pairwise_cospectral[0][1]);

    CHECK_THROWS_AS(equienergetic_join_family(family(Family::path, {3}), 3, PairVariant::sv_pair),
                    hypothesis_error);
    CHECK_THROWS_AS(equienergetic_join_family(family(Family::complete, {2}), 3, PairVariant::sv_pair),
                    hypothesis_error);
    CHECK_THROWS_AS(equienergetic_join_family(k3, 2, PairVariant::sv_pair), hypothesis_error);
}

TEST_CASE("report json shape") {
    const auto rep = equienergetic_pair_6t1(3);
    const std::string js = rep.to_json();
    CHECK(js.find("\"graphs\"") != std::string::npos);
    CHECK(js.find("\"graph6\"") != std::string::npos);
    CHECK(js.find("\"equienergetic\": true") != std::string::npos);
    CHECK(js.find("\"pairwise_cospectral\"") != std::string::npos);
}

TEST_CASE("integral scan: K3 sv-join Kn") {
    const auto rows = integral_family_scan(IntegralFamily::k3_svjoin_kn, 2, 20);
    std::set<int> hits;
    for (const auto& row : rows) {
        CHECK(row.integral_numeric == row.integral_predicate);
        if (row.integral_numeric) hits.insert(row.params[0]);
    }
    CHECK(hits == std::set<int>{6, 18});
    for (const auto& row : rows)
        if (row.params[0] == 6) CHECK(row.certificate == "9");
}

TEST_CASE("integral scan: K11 se-join Kn") {
    const auto rows = integral_family_scan(IntegralFamily::k11_sejoin_kn, 44, 46);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.integral_numeric == row.integral_predicate);
        CHECK(row.integral_numeric == (row.params[0] == 45));
    }
    CHECK(rows[1].certificate == "75");
}

TEST_CASE("integral scan: complete join-union triples") {
    const auto rows = integral_family_scan(IntegralFamily::join_union_complete, 1, 4);
    CHECK(rows.size() == 4 * 10);
    for (const auto& row : rows) {
        CHECK(row.integral_numeric == row.integral_predicate);
        // no integral triple in this range; in particular (2,3,4) is not
        CHECK_FALSE(row.integral_numeric);
    }

    CHECK_THROWS_AS(integral_family_scan(IntegralFamily::k3_svjoin_kn, 0, 5), parameter_error);
    CHECK_THROWS_AS(integral_family_scan(IntegralFamily::k3_svjoin_kn, 5, 4), parameter_error);
    CHECK_THROWS_AS(integral_family_scan(IntegralFamily::join_union_complete, 1, 60),
                    parameter_error);
}
