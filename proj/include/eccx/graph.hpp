#ifndef ECCX_GRAPH_HPP
#define ECCX_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eccx {

// Simple undirected graph on vertices 0..n-1 with dense symmetric
// adjacency and no self-loops. The vertex order is part of the value:
// composite operations document the order they produce, and tests compare
// graphs by structural equality under that fixed order.
class Graph {
public:
    explicit Graph(int n, std::string label = {});

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int i, int j) const { return adj_[idx(i, j)] != 0; }
    void add_edge(int i, int j);

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    int degree(int v) const;
    std::vector<int> degrees() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<std::uint8_t> adj_;
    std::string label_;
};

// Edges as (i,j) pairs with i<j, sorted lexicographically. This order is
// normative: it labels the vertices of L(G) and I(G) and the columns of
// the incidence matrix.
std::vector<std::pair<int, int>> edge_order(const Graph& g);

// 0/1 vertex-by-edge incidence, columns in edge_order.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries; // row-major
    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

enum class Family {
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
    petersen,
    prism,
};

Graph family(Family f, const std::vector<int>& params = {});

// graph6 in McKay's format: 6-bit groups, value+63 bytes, upper triangle
// in column order. parse accepts an optional ">>graph6<<" header and
// trailing newline; serialize emits the canonical headerless form.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// JSON edge list {"n": int, "edges": [[i,j],...]}. Duplicate edges
// collapse; self-loops are rejected.
Graph parse_edge_list(std::string_view json_text);
std::string serialize_edge_list(const Graph& g);

Graph complement(const Graph& g);

// Block-diagonal adjacency; vertex order is the concatenation in list order.
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Vertex order V(G1) then V(G2); every cross pair becomes an edge.
Graph join(const Graph& g1, const Graph& g2);

Graph line_graph(const Graph& g);

// Vertex order V(G) (0..n-1) then one new vertex per edge in edge_order
// (n..n+q-1); original edges are replaced by the two half-edges.
Graph subdivision(const Graph& g);

// S(G1) with every vertex of V(G1) joined to every vertex of V(G2).
// Vertex order V(G1), I(G1), V(G2). g1 must have at least one edge.
Graph subdivision_vertex_join(const Graph& g1, const Graph& g2);

// S(G1) with every vertex of I(G1) joined to every vertex of V(G2).
Graph subdivision_edge_join(const Graph& g1, const Graph& g2);

IncidenceMatrix incidence_matrix(const Graph& g);

// Degree when the graph is regular, empty otherwise.
std::optional<int> regularity(const Graph& g);

bool is_connected(const Graph& g);

} // namespace eccx

#endif
