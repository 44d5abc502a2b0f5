#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "eccx/errors.hpp"
#include "eccx/graph.hpp"

using namespace eccx;

namespace {

Graph random_graph(int n, std::mt19937& rng, double density = 0.4) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// Independent graph6 encoder used as the round-trip oracle: builds the bit
// string by hand, without touching serialize_graph6.
std::string reference_graph6(const Graph& g) {
    const int n = g.order();
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(n + 63));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[k + b] == '1');
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

void check_simple(const Graph& g) {
    for (int i = 0; i < g.order(); ++i) {
        CHECK_FALSE(g.adjacent(i, i));
        for (int j = 0; j < g.order(); ++j) CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
}

int component_count(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    int count = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < g.order(); ++v)
                if (g.adjacent(u, v) && comp[v] == -1) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("families") {
    const Graph k4 = family(Family::complete, {4});
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);

    const Graph prism = family(Family::prism);
    CHECK(prism.order() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(regularity(prism) == 3);

    const Graph pet = family(Family::petersen);
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(regularity(pet) == 3);

    CHECK(family(Family::path, {1}).order() == 1);
    CHECK(family(Family::path, {1}).edge_count() == 0);
    CHECK(family(Family::star, {5}).degree(0) == 4);
    CHECK(family(Family::complete_bipartite, {3, 3}).edge_count() == 9);

    CHECK_THROWS_AS(family(Family::cycle, {2}), parameter_error);
    CHECK_THROWS_AS(family(Family::complete, {}), parameter_error);
    CHECK_THROWS_AS(family(Family::petersen, {10}), parameter_error);
}

TEST_CASE("graph6 fixed strings") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));

    const Graph g5 = parse_graph6("D?{");
    CHECK(g5.order() == 5);
    CHECK(serialize_graph6(g5) == "D?{");

    CHECK(parse_graph6(">>graph6<<A_").edge_count() == 1);
    CHECK(parse_graph6("A_\n").edge_count() == 1);

    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("A"), parse_error);    // missing payload
    CHECK_THROWS_AS(parse_graph6("A_x"), parse_error);  // trailing junk
    CHECK_THROWS_AS(parse_graph6("A\x1f"), parse_error); // byte below 63
}

TEST_CASE("graph6 round trip over all 4-vertex graphs") {
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++bit)
                if (mask & (1 << bit)) g.add_edge(i, j);
        const std::string mine = serialize_graph6(g);
        CHECK(mine == reference_graph6(g));
        CHECK(parse_graph6(mine) == g);
    }
}

TEST_CASE("graph6 large order prefix") {
    Graph g(70);
    for (int i = 0; i + 1 < 70; ++i) g.add_edge(i, i + 1);
    const std::string s = serialize_graph6(g);
    CHECK(s[0] == 126);
    const Graph back = parse_graph6(s);
    CHECK(back == g);
}

TEST_CASE("edge list json") {
    const Graph p3 = parse_edge_list(R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(p3 == family(Family::path, {3}));

    CHECK_THROWS_AS(parse_edge_list(R"({"n":2,"edges":[[0,0]]})"), parameter_error);
    CHECK_THROWS_AS(parse_edge_list(R"({"n":3,"edges":[[0,5]]})"), parameter_error);
    CHECK_THROWS_AS(parse_edge_list("{not json"), parse_error);
    CHECK_THROWS_AS(parse_edge_list(R"({"edges":[]})"), parse_error);

    // duplicates collapse
    const Graph dup = parse_edge_list(R"({"n":3,"edges":[[0,1],[1,0]]})");
    CHECK(dup.edge_count() == 1);

    const Graph back = parse_edge_list(serialize_edge_list(family(Family::prism)));
    CHECK(back == family(Family::prism));
}

TEST_CASE("complement") {
    CHECK(complement(family(Family::complete, {4})).edge_count() == 0);

    const Graph c5c = complement(family(Family::cycle, {5}));
    CHECK(c5c.edge_count() == 5);
    CHECK(regularity(c5c) == 2);
    CHECK(is_connected(c5c)); // 2-regular connected on 5 vertices: another C5

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(8, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("disjoint union and join") {
    const Graph k2 = family(Family::complete, {2});
    const Graph two_k2 = disjoint_union(k2, k2);
    CHECK(two_k2.order() == 4);
    CHECK(two_k2.edge_count() == 2);
    CHECK(component_count(two_k2) == 2);

    const Graph gs[] = {family(Family::cycle, {3}), family(Family::cycle, {4}),
                        family(Family::cycle, {5})};
    const Graph u = disjoint_union(std::span<const Graph>(gs, 3));
    CHECK(u.order() == 12);
    CHECK(u.edge_count() == 12);
    CHECK(component_count(u) == 3);

    CHECK(disjoint_union(std::span<const Graph>(gs, 1)) == gs[0]);
    CHECK_THROWS_AS(disjoint_union(std::span<const Graph>()), parameter_error);

    CHECK(join(family(Family::complete, {1}), family(Family::complete, {1})) ==
          family(Family::complete, {2}));
    CHECK(join(family(Family::cycle, {4}), family(Family::complete, {1})).edge_count() == 8);
    CHECK(join(family(Family::prism), family(Family::complete, {1})).edge_count() == 15);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph a = random_graph(6, rng), b = random_graph(5, rng);
        CHECK(join(a, b).edge_count() == a.edge_count() + b.edge_count() + 30);
    }
}

TEST_CASE("line graph") {
    CHECK(line_graph(family(Family::complete, {3})) == family(Family::complete, {3}));
    CHECK(line_graph(family(Family::path, {4})) == family(Family::path, {3}));

    const Graph l2 = line_graph(line_graph(family(Family::prism)));
    CHECK(l2.order() == 18);
    CHECK(regularity(l2) == 6);
    CHECK(l2.edge_count() == 54);

    CHECK_THROWS_AS(line_graph(family(Family::path, {1})), structure_error);
}

TEST_CASE("subdivision") {
    // subdivision of K2 is a path through the new middle vertex 2
    Graph p3_mid(3);
    p3_mid.add_edge(0, 2);
    p3_mid.add_edge(1, 2);
    CHECK(subdivision(family(Family::complete, {2})) == p3_mid);

    const Graph sc3 = subdivision(family(Family::cycle, {3}));
    CHECK(sc3.order() == 6);
    CHECK(sc3.edge_count() == 6);
    CHECK(regularity(sc3) == 2);
    CHECK(is_connected(sc3)); // a 6-cycle under the V(G) ++ I(G) order

    const Graph sp = subdivision(family(Family::prism));
    CHECK(sp.order() == 15);
    CHECK(sp.edge_count() == 18);
    CHECK(is_connected(sp));
    // bipartite: original vertices vs subdivision vertices
    for (auto [i, j] : edge_order(sp)) CHECK(((i < 6) != (j < 6)));
}

TEST_CASE("subdivision joins") {
    const Graph k2 = family(Family::complete, {2});
    const Graph k1 = family(Family::complete, {1});

    const Graph sv = subdivision_vertex_join(k2, k1);
    CHECK(sv.order() == 4);
    CHECK(sv.edge_count() == 4);

    const Graph se = subdivision_edge_join(k2, k1);
    CHECK(se.order() == 4);
    CHECK(se.edge_count() == 3);
    CHECK(se.degree(2) == 3); // the lone subdivision vertex is the hub of K_{1,3}

    CHECK(subdivision_vertex_join(family(Family::cycle, {3}), k1).order() == 7);
    CHECK(subdivision_vertex_join(family(Family::cycle, {3}), k1).edge_count() == 9);
    CHECK(subdivision_edge_join(family(Family::cycle, {3}), k1).edge_count() == 9);
    CHECK(subdivision_vertex_join(family(Family::prism), family(Family::complete, {6})).order() ==
          21); // p1 + q1 + p2
    CHECK(subdivision_vertex_join(family(Family::complete, {3}), family(Family::complete, {6}))
              .order() == 12);
    CHECK(subdivision_edge_join(family(Family::complete, {11}), family(Family::complete, {45}))
              .order() == 111);

    CHECK_THROWS_AS(subdivision_vertex_join(family(Family::path, {1}), k1), structure_error);
    CHECK_THROWS_AS(subdivision_edge_join(family(Family::path, {1}), k1), structure_error);
    Graph edgeless(3);
    CHECK_THROWS_AS(subdivision_vertex_join(edgeless, k1), structure_error);
}

TEST_CASE("subdivision joins agree with explicit composition") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g1 = random_graph(6, rng, 0.5);
        if (g1.edge_count() == 0) g1.add_edge(0, 1);
        const Graph g2 = random_graph(4, rng, 0.5);
        const int p1 = g1.order(), q1 = g1.edge_count();

        Graph manual = disjoint_union(subdivision(g1), g2);
        for (int v = 0; v < p1; ++v)
            for (int w = 0; w < g2.order(); ++w) manual.add_edge(v, p1 + q1 + w);
        CHECK(subdivision_vertex_join(g1, g2) == manual);

        Graph manual_e = disjoint_union(subdivision(g1), g2);
        for (int u = p1; u < p1 + q1; ++u)
            for (int w = 0; w < g2.order(); ++w) manual_e.add_edge(u, p1 + q1 + w);
        CHECK(subdivision_edge_join(g1, g2) == manual_e);

        CHECK(subdivision_vertex_join(g1, g2).edge_count() ==
              2 * q1 + g2.edge_count() + p1 * g2.order());
        CHECK(subdivision_edge_join(g1, g2).edge_count() ==
              2 * q1 + g2.edge_count() + q1 * g2.order());
    }
}

TEST_CASE("incidence matrix and the regular-graph identities") {
    const auto r_k2 = incidence_matrix(family(Family::complete, {2}));
    CHECK(r_k2.rows == 2);
    CHECK(r_k2.cols == 1);
    CHECK(r_k2.at(0, 0) == 1);
    CHECK(r_k2.at(1, 0) == 1);

    const auto r_c3 = incidence_matrix(family(Family::cycle, {3}));
    for (int i = 0; i < 3; ++i) {
        int sum = 0;
        for (int j = 0; j < 3; ++j) sum += r_c3.at(i, j);
        CHECK(sum == 2);
    }

    // R R^T = A + r I and R^T R = B + 2 I, exact integer equality
    for (const Graph& g : {family(Family::prism), family(Family::cycle, {5}),
                           family(Family::complete, {4}), family(Family::petersen)}) {
        const auto r = incidence_matrix(g);
        const int reg = *regularity(g);
        const Graph lg = line_graph(g);
        for (int i = 0; i < r.rows; ++i)
            for (int j = 0; j < r.rows; ++j) {
                int sum = 0;
                for (int k = 0; k < r.cols; ++k) sum += r.at(i, k) * r.at(j, k);
                const int expected = (i == j ? reg : 0) + (g.adjacent(i, j) ? 1 : 0);
                CHECK(sum == expected);
            }
        for (int a = 0; a < r.cols; ++a)
            for (int b = 0; b < r.cols; ++b) {
                int sum = 0;
                for (int k = 0; k < r.rows; ++k) sum += r.at(k, a) * r.at(k, b);
                const int expected = (a == b ? 2 : 0) + (lg.adjacent(a, b) ? 1 : 0);
                CHECK(sum == expected);
            }
    }
}

TEST_CASE("regularity and connectivity") {
    CHECK(regularity(family(Family::complete, {4})) == 3);
    CHECK_FALSE(regularity(family(Family::path, {3})).has_value());
    CHECK(regularity(family(Family::petersen)) == 3);

    CHECK(is_connected(family(Family::complete, {1})));
    CHECK_FALSE(is_connected(disjoint_union(family(Family::complete, {2}),
                                            family(Family::complete, {2}))));
    CHECK(is_connected(subdivision(family(Family::prism))));
}

TEST_CASE("every operation keeps adjacency simple") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        Graph a = random_graph(5, rng);
        if (a.edge_count() == 0) a.add_edge(0, 1);
        const Graph b = random_graph(4, rng);
        for (const Graph& g :
             {complement(a), disjoint_union(a, b), join(a, b), subdivision(a),
              subdivision_vertex_join(a, b), subdivision_edge_join(a, b), line_graph(a)})
            check_simple(g);
    }
}
