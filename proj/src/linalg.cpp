#include "eccx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "eccx/errors.hpp"

namespace eccx {

SquareMatrix adjacency_matrix(const Graph& g) {
    SquareMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            if (g.adjacent(i, j)) m.at(i, j) = 1.0;
    return m;
}

int Spectrum::total_order() const {
    int total = 0;
    for (const auto& e : pairs) total += e.multiplicity;
    return total;
}

std::vector<double> Spectrum::expand() const {
    std::vector<double> out;
    out.reserve(total_order());
    for (const auto& e : pairs)
        out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

// ---------------------------------------------------------------------------
// cyclic Jacobi

namespace {

double off_diagonal_norm(const SquareMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

double frobenius_norm(const SquareMatrix& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

} // namespace

std::vector<double> sym_eigenvalues(const SquareMatrix& m) {
    const int n = m.n;
    if (n < 1) throw contract_error("eigensolver needs a nonempty matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
                throw contract_error("matrix is not symmetric at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");

    SquareMatrix a = m;
    const double target = 1e-11 * frobenius_norm(a);
    bool converged = off_diagonal_norm(a) <= target;
    for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e154) {
                    t = 1.0 / (2.0 * theta); // avoid theta^2 overflow
                } else {
                    t = std::copysign(1.0, theta) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = akp - s * (akq + tau * akp);
                    a.at(k, q) = akq + s * (akp - tau * akq);
                    a.at(p, k) = a.at(k, p);
                    a.at(q, k) = a.at(k, q);
                }
            }
        }
        converged = off_diagonal_norm(a) <= target;
    }
    if (!converged)
        throw numeric_error("Jacobi iteration did not converge in 60 sweeps");

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = a.at(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

// ---------------------------------------------------------------------------
// characteristic polynomial + Durand-Kerner

namespace {

// Monic characteristic polynomial coefficients c[0..n], c[0] = 1, via
// Faddeev-LeVerrier. Fine in double for orders <= 8 with modest entries.
std::vector<double> characteristic_polynomial(const SquareMatrix& m) {
    const int n = m.n;
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    SquareMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        double trace = 0.0;
        for (int i = 0; i < n; ++i) trace += mk.at(i, i);
        c[k] = -trace / k;
        if (k == n) break;
        // mk <- m * (mk + c[k] I)
        SquareMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += c[k];
        SquareMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l) s += m.at(i, l) * shifted.at(l, j);
                next.at(i, j) = s;
            }
        mk = next;
    }
    return c;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> r = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) r = r * z + c[i];
    return r;
}

std::vector<double> derivative(const std::vector<double>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<double> d(deg);
    for (int i = 0; i < deg; ++i) d[i] = c[i] * (deg - i);
    return d;
}

// An m-fold root of p is a simple root of the (m-1)-th derivative; Newton
// there recovers the machine-precision value a stalled Durand-Kerner
// cluster cannot reach on its own.
std::complex<double> polish_cluster(const std::vector<double>& c, std::complex<double> start,
                                    int multiplicity) {
    std::vector<double> f = c;
    for (int k = 1; k < multiplicity; ++k) f = derivative(f);
    const std::vector<double> fp = derivative(f);
    std::complex<double> w = start;
    for (int iter = 0; iter < 60; ++iter) {
        const std::complex<double> dv = horner(fp, w);
        if (std::abs(dv) == 0.0) break;
        const std::complex<double> step = horner(f, w) / dv;
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

} // namespace

std::vector<double> small_eigenvalues(const SquareMatrix& m) {
    const int n = m.n;
    if (n < 1 || n > 8)
        throw contract_error("small_eigenvalues handles orders 1..8, got " + std::to_string(n));

    const std::vector<double> c = characteristic_polynomial(m);

    double maxc = 0.0;
    for (double v : c) maxc = std::max(maxc, std::abs(v));
    const double radius = 1.0 + maxc;

    // deterministic start: n-th roots of unity scaled by 1+max|coefficient|
    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n;
        z[k] = std::polar(radius, angle);
    }

    // residual: the scale-normalized polynomial value at the iterates (the
    // update size alone stalls near machine noise around multiple roots)
    auto residual_of = [&] {
        double r = 0.0;
        for (int k = 0; k < n; ++k) r = std::max(r, std::abs(horner(c, z[k])));
        return r / radius;
    };
    bool converged = false;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            const std::complex<double> delta = horner(c, z[k]) / denom;
            z[k] -= delta;
            max_step = std::max(max_step, std::abs(delta));
        }
        converged = max_step < 1e-12 || residual_of() < 1e-12;
    }
    if (!converged) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", residual_of());
        throw numeric_error("Durand-Kerner residual " + std::string(buf) +
                            " after 500 iterations");
    }

    // cluster the approximants and polish each cluster at its multiplicity
    std::sort(z.begin(), z.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    double zmax = 0.0;
    for (const auto& v : z) zmax = std::max(zmax, std::abs(v));
    const double cluster_tol = 1e-3 * (1.0 + zmax);

    std::vector<double> values;
    values.reserve(n);
    for (int lo = 0; lo < n;) {
        int hi = lo + 1;
        while (hi < n && std::abs(z[hi] - z[hi - 1]) <= cluster_tol) ++hi;
        std::complex<double> mean = 0.0;
        for (int k = lo; k < hi; ++k) mean += z[k];
        mean /= static_cast<double>(hi - lo);
        std::complex<double> w = polish_cluster(c, mean, hi - lo);
        if (std::abs(w - mean) > cluster_tol) w = mean; // polish ran away, keep the cluster
        if (std::abs(w.imag()) >= 1e-7) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3e", w.imag());
            throw contract_error("eigenvalue with imaginary part " + std::string(buf) +
                                 "; the partition upstream is likely not equitable");
        }
        values.insert(values.end(), hi - lo, w.real());
        lo = hi;
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

// ---------------------------------------------------------------------------
// spectra

Spectrum group(std::vector<double> values, double tol) {
    if (!(tol > 0.0)) throw parameter_error("grouping tolerance must be positive");
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.tol = tol;
    double sum = 0.0;
    int count = 0;
    double last = 0.0;
    for (double v : values) {
        if (count > 0 && last - v <= tol) {
            sum += v;
            ++count;
        } else {
            if (count > 0) s.pairs.push_back({sum / count, count});
            sum = v;
            count = 1;
        }
        last = v;
    }
    if (count > 0) s.pairs.push_back({sum / count, count});
    return s;
}

double energy(const Spectrum& s) {
    double e = 0.0;
    for (const auto& p : s.pairs) e += p.multiplicity * std::abs(p.value);
    return e;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.total_order() != b.total_order()) return false;
    const auto va = a.expand();
    const auto vb = b.expand();
    for (std::size_t i = 0; i < va.size(); ++i)
        if (std::abs(va[i] - vb[i]) > tol) return false;
    return true;
}

bool is_integral(const Spectrum& s, double tol) {
    for (const auto& p : s.pairs)
        if (std::abs(p.value - std::round(p.value)) > tol) return false;
    return true;
}

SquareMatrix quotient(const SquareMatrix& m, const Partition& p) {
    const int n = m.n;
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].empty()) throw partition_error("block " + std::to_string(b) + " is empty");
        for (int v : p.blocks[b]) {
            if (v < 0 || v >= n)
                throw partition_error("index " + std::to_string(v) + " outside matrix order");
            if (owner[v] != -1)
                throw partition_error("index " + std::to_string(v) + " appears in two blocks");
            owner[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw partition_error("index " + std::to_string(v) + " not covered");

    const int k = static_cast<int>(p.blocks.size());
    SquareMatrix f(k);
    for (int bi = 0; bi < k; ++bi) {
        for (int bj = 0; bj < k; ++bj) {
            double ref = 0.0;
            bool first = true;
            double total = 0.0;
            for (int i : p.blocks[bi]) {
                double sum = 0.0;
                for (int j : p.blocks[bj]) sum += m.at(i, j);
                if (first) {
                    ref = sum;
                    first = false;
                } else if (std::abs(sum - ref) > 1e-9) {
                    throw partition_error("partition not equitable for blocks (" +
                                          std::to_string(bi) + "," + std::to_string(bj) +
                                          "): row " + std::to_string(i) + " sums to " +
                                          std::to_string(sum) + ", expected " +
                                          std::to_string(ref));
                }
                total += sum;
            }
            f.at(bi, bj) = total / static_cast<double>(p.blocks[bi].size());
        }
    }
    return f;
}

double round_significant(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    const double magnitude = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
    return std::round(v * magnitude) / magnitude;
}

std::string spectrum_to_json(const Spectrum& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : s.pairs) {
        nlohmann::ordered_json o;
        o["value"] = round_significant(p.value);
        o["multiplicity"] = p.multiplicity;
        arr.push_back(std::move(o));
    }
    return arr.dump();
}

} // namespace eccx
