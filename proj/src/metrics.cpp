#include "eccx/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <thread>

#include "eccx/errors.hpp"

namespace eccx {

namespace {

int thread_cap() {
    if (const char* env = std::getenv("ECCX_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void bfs_row(const Graph& g, int source, std::vector<int>& dist) {
    const int n = g.order();
    dist.assign(n, -1);
    dist[source] = 0;
    std::queue<int> next;
    next.push(source);
    while (!next.empty()) {
        const int u = next.front();
        next.pop();
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v) && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                next.push(v);
            }
    }
}

} // namespace

SquareMatrix EccentricityProfile::eps_as_matrix() const {
    const int n = static_cast<int>(eps.size());
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = eps[i][j];
    return m;
}

EccentricityProfile profile(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> dist(n);

    const int threads = std::min(thread_cap(), n);
    if (n >= 128 && threads > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int s = t; s < n; s += threads) bfs_row(g, s, dist[s]);
            });
        for (auto& th : pool) th.join();
    } else {
        for (int s = 0; s < n; ++s) bfs_row(g, s, dist[s]);
    }

    EccentricityProfile out{.distances = std::move(dist),
                            .ecc = std::vector<int>(n, 0),
                            .eps = std::vector<std::vector<int>>(n, std::vector<int>(n, 0)),
                            .eccentric_graph = Graph(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (out.distances[i][j] < 0)
                throw connectivity_error("eccentricity matrix needs a connected graph");
            out.ecc[i] = std::max(out.ecc[i], out.distances[i][j]);
        }
    }
    out.radius = *std::min_element(out.ecc.begin(), out.ecc.end());
    out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (out.distances[i][j] == std::min(out.ecc[i], out.ecc[j])) {
                out.eps[i][j] = out.distances[i][j];
                if (i < j) out.eccentric_graph.add_edge(i, j);
            }
        }
    return out;
}

bool is_self_centered(const Graph& g) {
    const auto p = profile(g);
    return p.radius == p.diameter;
}

bool is_epsilon_irreducible(const Graph& g) {
    return is_connected(profile(g).eccentric_graph);
}

long long epsilon_wiener(const Graph& g) {
    const auto p = profile(g);
    long long sum = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) sum += p.eps[i][j];
    return sum;
}

bool is_epsilon_regular(const Graph& g) {
    const auto p = profile(g);
    long long first = 0;
    for (int j = 0; j < g.order(); ++j) first += p.eps[0][j];
    for (int i = 1; i < g.order(); ++i) {
        long long row = 0;
        for (int j = 0; j < g.order(); ++j) row += p.eps[i][j];
        if (row != first) return false;
    }
    return true;
}

RadiusBoundCheck check_radius_bound(const Graph& g) {
    const auto p = profile(g);
    long long wiener = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) wiener += p.eps[i][j];

    RadiusBoundCheck out;
    out.rho = sym_eigenvalues(p.eps_as_matrix()).front();
    out.bound = 2.0 * static_cast<double>(wiener) / g.order();
    out.equality = std::abs(out.rho - out.bound) < 1e-6;
    return out;
}

} // namespace eccx
