import math

import pytest

import eccx


def test_family_and_basic_ops():
    prism = eccx.family("prism")
    assert prism.order() == 6
    assert prism.edge_count() == 9
    assert eccx.regularity(prism) == 3
    assert eccx.is_connected(prism)

    with pytest.raises(ValueError):
        eccx.family("cycle", [2])


def test_graph6_round_trip():
    pet = eccx.family("petersen")
    s = eccx.serialize_graph6(pet)
    assert eccx.parse_graph6(s) == pet
    k2 = eccx.parse_graph6("A_")
    assert k2.order() == 2 and k2.edge_count() == 1


def test_prism_eps_spectrum():
    spec = eccx.eps_spectrum(eccx.family("prism"))
    expected = [(4.0, 1), (2.0, 2), (-2.0, 2), (-4.0, 1)]
    assert [m for _, m in spec] == [m for _, m in expected]
    assert all(abs(a - b) < 1e-9 for (a, _), (b, _) in zip(spec, expected))
    assert eccx.epsilon_wiener(eccx.family("prism")) == 12


def test_analyze_fields():
    rep = eccx.analyze(eccx.family("cycle", [6]))
    assert rep["radius"] == 3 and rep["diameter"] == 3
    assert rep["epsilon_regular"] and rep["bound_equality"]
    # the eccentric graph of C6 is the antipodal matching: reducible
    assert not rep["irreducible"]
    assert eccx.is_epsilon_irreducible(eccx.family("path", [5]))


def test_predictor_matches_numeric():
    c4 = eccx.family("cycle", [4])
    k2 = eccx.family("complete", [2])
    predicted = eccx.predict_sv_join(c4, k2)
    built = eccx.subdivision_vertex_join(c4, k2)
    computed = eccx.eps_spectrum(built)
    flat_p = [v for v, m in predicted for _ in range(m)]
    flat_c = [v for v, m in computed for _ in range(m)]
    assert len(flat_p) == len(flat_c) == 10
    assert all(abs(a - b) < 1e-6 for a, b in zip(flat_p, flat_c))

    with pytest.raises(ValueError):
        eccx.predict_sv_join(eccx.family("path", [3]), k2)


def test_construction_reports():
    rep = eccx.construct_pair_12t(3)
    assert [g["order"] for g in rep["graphs"]] == [36, 36]
    assert all(abs(g["energy"] - 160.0) < 1e-6 for g in rep["graphs"])
    assert rep["equienergetic"]
    assert not rep["pairwise_cospectral"][0][1]

    rep61 = eccx.construct_pair_6t1(3)
    expected = 58.0 + 2.0 * math.sqrt(139.0)
    assert all(abs(g["energy"] - expected) < 1e-9 for g in rep61["graphs"])


def test_integral_scan():
    rows = eccx.integral_family_scan("k3_svjoin_kn", 2, 10)
    hits = [r["params"][0] for r in rows if r["integral"]]
    assert hits == [6]
    assert all(r["integral"] == r["predicate"] for r in rows)
