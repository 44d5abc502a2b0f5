#include "eccx/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include <json.hpp>

#include "eccx/errors.hpp"

namespace eccx {

Graph::Graph(int n, std::string label)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), label_(std::move(label)) {
    if (n < 1) throw parameter_error("graph order must be positive, got " + std::to_string(n));
}

int Graph::edge_count() const {
    int q = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) ++q;
    return q;
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw parameter_error("edge (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range for order " + std::to_string(n_));
    if (i == j)
        throw parameter_error("self-loop (" + std::to_string(i) + "," + std::to_string(i) +
                              ") not allowed");
    adj_[idx(i, j)] = 1;
    adj_[idx(j, i)] = 1;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < n_; ++j)
        if (adjacent(v, j)) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<std::pair<int, int>> edge_order(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) edges.emplace_back(i, j);
    return edges; // row-major scan of the upper triangle is already lexicographic
}

namespace {

void require_params(const std::vector<int>& params, std::size_t count, const char* name) {
    if (params.size() != count)
        throw parameter_error(std::string(name) + " expects " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
}

} // namespace

Graph family(Family f, const std::vector<int>& params) {
    switch (f) {
    case Family::complete: {
        require_params(params, 1, "complete");
        int p = params[0];
        if (p < 1) throw parameter_error("complete graph needs p >= 1");
        Graph g(p, "K" + std::to_string(p));
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) g.add_edge(i, j);
        return g;
    }
    case Family::complete_bipartite: {
        require_params(params, 2, "complete_bipartite");
        int a = params[0], b = params[1];
        if (a < 1 || b < 1) throw parameter_error("complete bipartite needs parts >= 1");
        Graph g(a + b, "K" + std::to_string(a) + "," + std::to_string(b));
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
        return g;
    }
    case Family::cycle: {
        require_params(params, 1, "cycle");
        int p = params[0];
        if (p < 3) throw parameter_error("cycle needs p >= 3");
        Graph g(p, "C" + std::to_string(p));
        for (int i = 0; i < p; ++i) g.add_edge(i, (i + 1) % p);
        return g;
    }
    case Family::path: {
        require_params(params, 1, "path");
        int p = params[0];
        if (p < 1) throw parameter_error("path needs p >= 1");
        Graph g(p, "P" + std::to_string(p));
        for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
        return g;
    }
    case Family::star: {
        require_params(params, 1, "star");
        int p = params[0];
        if (p < 2) throw parameter_error("star needs p >= 2");
        Graph g(p, "S" + std::to_string(p));
        for (int i = 1; i < p; ++i) g.add_edge(0, i);
        return g;
    }
    case Family::petersen: {
        require_params(params, 0, "petersen");
        Graph g(10, "petersen");
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);     // outer cycle
            g.add_edge(i, i + 5);           // spokes
            g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        }
        return g;
    }
    case Family::prism: {
        require_params(params, 0, "prism");
        Graph g(6, "prism");
        for (int i = 0; i < 3; ++i) {
            g.add_edge(i, (i + 1) % 3);
            g.add_edge(3 + i, 3 + (i + 1) % 3);
            g.add_edge(i, 3 + i);
        }
        return g;
    }
    }
    throw parameter_error("unknown graph family");
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_graph6_line(std::string_view text) {
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
    std::string_view line = strip_graph6_line(text);
    if (line.empty()) throw parse_error("empty graph6 input", base);

    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> unsigned {
        unsigned c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw parse_error("byte outside graph6 range 63..126", base + i);
        return c - 63;
    };

    long long n;
    if (byte_at(0) != 63) {
        n = byte_at(0);
        pos = 1;
    } else {
        // '~' prefix: 18-bit order in the next three bytes
        if (line.size() < 4) throw parse_error("truncated graph6 order prefix", base + line.size());
        if (static_cast<unsigned char>(line[1]) == 126)
            throw parse_error("graph6 orders beyond 2^18 are not supported", base + 1);
        n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    }
    if (n < 1) throw parse_error("graph6 order must be positive", base);
    if (n > 100000) throw parse_error("graph6 order too large", base);

    const long long bits = n * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != payload)
        throw parse_error("graph6 payload has " + std::to_string(line.size() - pos) +
                              " bytes, expected " + std::to_string(payload),
                          base + line.size());

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned group = byte_at(pos + static_cast<std::size_t>(bit / 6));
            if ((group >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (long long b = bits; b < static_cast<long long>(payload) * 6; ++b) {
        unsigned group = byte_at(pos + static_cast<std::size_t>(b / 6));
        if ((group >> (5 - b % 6)) & 1u)
            throw parse_error("nonzero padding bit in graph6 payload",
                              base + pos + static_cast<std::size_t>(b / 6));
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// JSON edge list

Graph parse_edge_list(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw parse_error("edge list must be an object {\"n\", \"edges\"}", 0);
    if (!doc["n"].is_number_integer())
        throw parse_error("\"n\" must be an integer", 0);
    int n = doc["n"].get<int>();
    if (n < 1) throw parameter_error("edge list order must be positive");
    Graph g(n);
    if (!doc["edges"].is_array()) throw parse_error("\"edges\" must be an array", 0);
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw parse_error("each edge must be an [i,j] pair of integers", 0);
        int i = e[0].get<int>(), j = e[1].get<int>();
        g.add_edge(i, j); // rejects self-loops and out-of-range; duplicates collapse
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [i, j] : edge_order(g)) edges.push_back({i, j});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

// ---------------------------------------------------------------------------
// operations

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) out.add_edge(i, j);
    return out;
}

Graph disjoint_union(std::span<const Graph> gs) {
    if (gs.empty()) throw parameter_error("disjoint union of an empty list");
    int total = 0;
    for (const auto& g : gs) total += g.order();
    Graph out(total);
    int offset = 0;
    for (const auto& g : gs) {
        for (auto [i, j] : edge_order(g)) out.add_edge(offset + i, offset + j);
        offset += g.order();
    }
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const Graph gs[] = {g1, g2};
    return disjoint_union(std::span<const Graph>(gs, 2));
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph out = disjoint_union(g1, g2);
    for (int i = 0; i < g1.order(); ++i)
        for (int j = 0; j < g2.order(); ++j) out.add_edge(i, g1.order() + j);
    return out;
}

Graph line_graph(const Graph& g) {
    auto edges = edge_order(g);
    const int q = static_cast<int>(edges.size());
    if (q == 0) throw structure_error("line graph of an edgeless graph has no vertices");
    Graph out(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            auto [i1, j1] = edges[a];
            auto [i2, j2] = edges[b];
            if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) out.add_edge(a, b);
        }
    return out;
}

Graph subdivision(const Graph& g) {
    auto edges = edge_order(g);
    const int p = g.order(), q = static_cast<int>(edges.size());
    Graph out(p + q);
    for (int k = 0; k < q; ++k) {
        out.add_edge(edges[k].first, p + k);
        out.add_edge(edges[k].second, p + k);
    }
    return out;
}

namespace {

Graph subdivision_join(const Graph& g1, const Graph& g2, bool join_original_side) {
    if (g1.edge_count() == 0)
        throw structure_error("subdivision join needs g1 with at least one edge");
    const int p1 = g1.order(), q1 = g1.edge_count(), p2 = g2.order();
    Graph s = subdivision(g1);
    Graph out(p1 + q1 + p2);
    for (auto [i, j] : edge_order(s)) out.add_edge(i, j);
    for (auto [i, j] : edge_order(g2)) out.add_edge(p1 + q1 + i, p1 + q1 + j);
    const int lo = join_original_side ? 0 : p1;
    const int hi = join_original_side ? p1 : p1 + q1;
    for (int v = lo; v < hi; ++v)
        for (int w = 0; w < p2; ++w) out.add_edge(v, p1 + q1 + w);
    return out;
}

} // namespace

Graph subdivision_vertex_join(const Graph& g1, const Graph& g2) {
    return subdivision_join(g1, g2, true);
}

Graph subdivision_edge_join(const Graph& g1, const Graph& g2) {
    return subdivision_join(g1, g2, false);
}

IncidenceMatrix incidence_matrix(const Graph& g) {
    auto edges = edge_order(g);
    IncidenceMatrix r;
    r.rows = g.order();
    r.cols = static_cast<int>(edges.size());
    r.entries.assign(static_cast<std::size_t>(r.rows) * r.cols, 0);
    for (int k = 0; k < r.cols; ++k) {
        r.entries[static_cast<std::size_t>(edges[k].first) * r.cols + k] = 1;
        r.entries[static_cast<std::size_t>(edges[k].second) * r.cols + k] = 1;
    }
    return r;
}

std::optional<int> regularity(const Graph& g) {
    int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::queue<int> next;
    next.push(0);
    seen[0] = 1;
    int count = 1;
    while (!next.empty()) {
        int u = next.front();
        next.pop();
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v) && !seen[v]) {
                seen[v] = 1;
                ++count;
                next.push(v);
            }
    }
    return count == n;
}

} // namespace eccx
