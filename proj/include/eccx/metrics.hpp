#ifndef ECCX_METRICS_HPP
#define ECCX_METRICS_HPP

#include <cstdint>
#include <vector>

#include "eccx/graph.hpp"
#include "eccx/linalg.hpp"

namespace eccx {

// Distance and eccentricity data of one connected graph. Distances come
// from a BFS per source vertex; the eccentricity matrix keeps d(i,j)
// exactly when it equals min(ecc[i], ecc[j]) and is integer-valued until
// the eigensolver boundary.
struct EccentricityProfile {
    std::vector<std::vector<int>> distances;
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
    std::vector<std::vector<int>> eps;
    Graph eccentric_graph;

    SquareMatrix eps_as_matrix() const;
};

// Throws connectivity_error on a disconnected input.
EccentricityProfile profile(const Graph& g);

bool is_self_centered(const Graph& g);

// Irreducibility of the eccentricity matrix: connectivity of the eccentric
// graph (the support graph of the matrix). K1 counts as irreducible.
bool is_epsilon_irreducible(const Graph& g);

// Half the sum of all eccentricity-matrix entries; always an integer.
long long epsilon_wiener(const Graph& g);

bool is_epsilon_regular(const Graph& g);

struct RadiusBoundCheck {
    double rho = 0.0;   // largest eccentricity eigenvalue
    double bound = 0.0; // 2 W / p
    bool equality = false;
};

// rho >= bound always (equality exactly for eccentricity-regular graphs);
// equality is flagged at |rho - bound| < 1e-6.
RadiusBoundCheck check_radius_bound(const Graph& g);

} // namespace eccx

#endif
