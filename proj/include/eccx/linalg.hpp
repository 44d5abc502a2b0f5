#ifndef ECCX_LINALG_HPP
#define ECCX_LINALG_HPP

#include <string>
#include <vector>

#include "eccx/graph.hpp"

namespace eccx {

// Default tolerance for grouping eigenvalues, comparing spectra and
// testing integrality. The matrices here are small and integer-valued, so
// Jacobi delivers near machine precision and 1e-6 cleanly separates
// genuinely distinct algebraic values.
inline constexpr double kDefaultTol = 1e-6;

struct SquareMatrix {
    int n = 0;
    std::vector<double> a; // row-major, n*n

    SquareMatrix() = default;
    explicit SquareMatrix(int order)
        : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

SquareMatrix adjacency_matrix(const Graph& g);

struct SpectrumEntry {
    double value = 0.0;
    int multiplicity = 0;
};

// Eigenvalue multiset grouped into (value, multiplicity) pairs, sorted by
// value descending; consecutive representatives differ by more than tol.
struct Spectrum {
    std::vector<SpectrumEntry> pairs;
    double tol = kDefaultTol;

    int total_order() const;
    std::vector<double> expand() const; // sorted descending, with multiplicity
};

struct Partition {
    std::vector<std::vector<int>> blocks;
};

// All eigenvalues of a symmetric matrix, sorted descending. Cyclic Jacobi
// rotations until the off-diagonal Frobenius norm drops below 1e-11 times
// the matrix norm, at most 60 sweeps.
std::vector<double> sym_eigenvalues(const SquareMatrix& m);

// Eigenvalues of a small (order <= 8) general matrix with a real spectrum,
// such as an equitable quotient of a symmetric matrix: characteristic
// polynomial + Durand-Kerner. A residual above 1e-12 after 500 iterations
// is a numeric_error; an imaginary part above 1e-7 is a contract_error
// (it signals a non-equitable partition upstream).
std::vector<double> small_eigenvalues(const SquareMatrix& m);

// Single-linkage grouping of the sorted values: gaps <= tol merge, the
// representative is the group mean.
Spectrum group(std::vector<double> values, double tol = kDefaultTol);

// Sum of multiplicity * |value|.
double energy(const Spectrum& s);

// True iff the total orders match and the sorted eigenvalue multisets pair
// up within tol.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = kDefaultTol);

bool is_integral(const Spectrum& s, double tol = kDefaultTol);

// Equitable quotient: entry (X,Y) is the common row sum over columns Y for
// rows in X. Rows disagreeing by more than 1e-9 raise a partition_error
// naming the offending block pair and row.
SquareMatrix quotient(const SquareMatrix& m, const Partition& p);

// JSON [{"value": ..., "multiplicity": ...}], values rounded to 12
// significant digits.
std::string spectrum_to_json(const Spectrum& s);

double round_significant(double v, int digits = 12);

} // namespace eccx

#endif
