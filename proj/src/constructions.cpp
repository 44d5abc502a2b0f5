#include "eccx/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "eccx/errors.hpp"
#include "eccx/metrics.hpp"

namespace eccx {

// ---------------------------------------------------------------------------
// cubic enumeration

namespace {

// Backtracking over adjacency rows with the BFS-introduction rule: a
// vertex's neighbours above it are either already-touched vertices or a
// consecutive run of fresh labels. Every connected graph has a BFS
// labelling of this shape, so at least one representative per isomorphism
// class survives.
class CubicEnumerator {
public:
    explicit CubicEnumerator(int n) : n_(n), deg_(n, 0), adj_(n * n, 0) {}

    std::vector<Graph> run() {
        // vertex 0 is forced onto labels 1,2,3
        link(0, 1);
        link(0, 2);
        link(0, 3);
        touched_ = 4;
        extend(1);
        return std::move(found_);
    }

private:
    void link(int i, int j) {
        adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
        ++deg_[i];
        ++deg_[j];
    }
    void unlink(int i, int j) {
        adj_[i * n_ + j] = adj_[j * n_ + i] = 0;
        --deg_[i];
        --deg_[j];
    }

    void extend(int v) {
        if (v == n_) {
            emit();
            return;
        }
        const int need = 3 - deg_[v];
        if (need == 0) {
            // a completed prefix with nothing reaching past v is a
            // separate component
            if (touched_ == v + 1 && v + 1 < n_) return;
            extend(v + 1);
            return;
        }
        std::vector<int> existing;
        for (int w = v + 1; w < touched_; ++w)
            if (deg_[w] < 3) existing.push_back(w);

        const int max_new = std::min(need, n_ - touched_);
        for (int fresh = 0; fresh <= max_new; ++fresh) {
            const int from_existing = need - fresh;
            if (from_existing > static_cast<int>(existing.size())) continue;
            choose(v, existing, 0, from_existing, fresh);
        }
    }

    // pick `remaining` neighbours for v from existing[start..], then
    // `fresh` consecutive new labels
    void choose(int v, const std::vector<int>& existing, std::size_t start, int remaining,
                int fresh) {
        if (remaining == 0) {
            for (int k = 0; k < fresh; ++k) link(v, touched_ + k);
            touched_ += fresh;
            extend(v + 1);
            touched_ -= fresh;
            for (int k = 0; k < fresh; ++k) unlink(v, touched_ + k);
            return;
        }
        for (std::size_t i = start; i + remaining <= existing.size(); ++i) {
            link(v, existing[i]);
            choose(v, existing, i + 1, remaining - 1, fresh);
            unlink(v, existing[i]);
        }
    }

    void emit() {
        if (touched_ != n_) return;
        Graph g(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (adj_[i * n_ + j]) g.add_edge(i, j);
        if (is_connected(g)) found_.push_back(std::move(g));
    }

    int n_;
    int touched_ = 0;
    std::vector<int> deg_;
    std::vector<char> adj_;
    std::vector<Graph> found_;
};

std::string spectrum_key(const Graph& g) {
    std::string key;
    for (double v : sym_eigenvalues(adjacency_matrix(g))) {
        key += std::to_string(std::llround(v * 1e8));
        key += ';';
    }
    return key;
}

Spectrum eps_spectrum(const Graph& g) {
    return group(sym_eigenvalues(profile(g).eps_as_matrix()));
}

ConstructionReport make_report(std::vector<std::pair<std::string, Graph>> graphs,
                               std::string notes) {
    ConstructionReport rep;
    rep.graphs = std::move(graphs);
    rep.notes = std::move(notes);
    const std::size_t k = rep.graphs.size();
    for (const auto& [label, g] : rep.graphs) {
        rep.spectra.push_back(eps_spectrum(g));
        rep.energies.push_back(energy(rep.spectra.back()));
        rep.irreducible.push_back(is_epsilon_irreducible(g));
    }
    rep.pairwise_cospectral.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            rep.pairwise_cospectral[i][j] =
                i == j || spectra_equal(rep.spectra[i], rep.spectra[j]);
    const auto [lo, hi] = std::minmax_element(rep.energies.begin(), rep.energies.end());
    rep.equienergetic = *hi - *lo < 1e-6;
    return rep;
}

std::pair<Graph, Graph> l2_pair(int t) {
    auto [g1, g2] = noncospectral_cubic_pair(t);
    return {line_graph(line_graph(g1)), line_graph(line_graph(g2))};
}

} // namespace

std::vector<Graph> enumerate_cubic(int n) {
    if (n % 2 != 0 || n < 4 || n > 14)
        throw parameter_error("cubic enumeration handles even n in 4..14, got " +
                              std::to_string(n));
    std::vector<Graph> raw = CubicEnumerator(n).run();

    // one representative per sorted-spectrum class, the graph6-smallest
    std::map<std::string, std::pair<std::string, Graph>> classes;
    for (auto& g : raw) {
        std::string key = spectrum_key(g);
        std::string g6 = serialize_graph6(g);
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(std::move(key), std::make_pair(std::move(g6), std::move(g)));
        else if (g6 < it->second.first)
            it->second = std::make_pair(std::move(g6), std::move(g));
    }
    std::vector<std::pair<std::string, Graph>> reps;
    reps.reserve(classes.size());
    for (auto& [key, value] : classes) reps.push_back(std::move(value));
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [g6, g] : reps) out.push_back(std::move(g));
    return out;
}

std::pair<Graph, Graph> noncospectral_cubic_pair(int t) {
    if (t < 3)
        throw hypothesis_error("non-cospectral cubic pairs need t >= 3 "
                               "(K4 is the only cubic graph on 4 vertices)");
    const std::vector<Graph> graphs = enumerate_cubic(2 * t);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Spectrum si = group(sym_eigenvalues(adjacency_matrix(graphs[i])));
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            const Spectrum sj = group(sym_eigenvalues(adjacency_matrix(graphs[j])));
            if (!spectra_equal(si, sj)) return {graphs[i], graphs[j]};
        }
    }
    throw numeric_error("no non-cospectral cubic pair found on " + std::to_string(2 * t) +
                        " vertices");
}

ConstructionReport equienergetic_pair_12t(int t) {
    auto [h1, h2] = l2_pair(t);
    auto rep = make_report(
        {{"join(L2(A),L2(A))", join(h1, h1)}, {"join(L2(B),L2(B))", join(h2, h2)}},
        "A, B = non-cospectral cubic pair on " + std::to_string(2 * t) +
            " vertices; expected energy 72t-56 = " + std::to_string(72 * t - 56));
    return rep;
}

ConstructionReport equienergetic_pair_6t1(int t) {
    auto [h1, h2] = l2_pair(t);
    const Graph k1 = family(Family::complete, {1});
    const double expected =
        24.0 * t - 14.0 + 2.0 * std::sqrt((6.0 * t - 7.0) * (6.0 * t - 7.0) + 6.0 * t);
    auto rep = make_report(
        {{"join(L2(A),K1)", join(h1, k1)}, {"join(L2(B),K1)", join(h2, k1)}},
        "A, B = non-cospectral cubic pair on " + std::to_string(2 * t) +
            " vertices; expected energy 24t-14+2*sqrt((6t-7)^2+6t) = " + std::to_string(expected));
    return rep;
}

ConstructionReport equienergetic_join_family(const Graph& g, int t, PairVariant variant) {
    const auto r = regularity(g);
    if (!r || *r < 2)
        throw hypothesis_error("base graph must be regular with degree >= 2");
    auto [h1, h2] = l2_pair(t);

    const bool vertex_side = variant == PairVariant::sv_pair || variant == PairVariant::sv_triplet;
    auto compose = [&](const Graph& h) {
        return vertex_side ? subdivision_vertex_join(g, h) : subdivision_edge_join(g, h);
    };
    const std::string op = vertex_side ? "sv_join" : "se_join";

    std::vector<std::pair<std::string, Graph>> graphs;
    if (variant == PairVariant::sv_pair || variant == PairVariant::se_pair) {
        graphs.emplace_back(op + "(G,L2(A))", compose(h1));
        graphs.emplace_back(op + "(G,L2(B))", compose(h2));
    } else {
        graphs.emplace_back(op + "(G,L2(A)+L2(A))", compose(disjoint_union(h1, h1)));
        graphs.emplace_back(op + "(G,L2(B)+L2(B))", compose(disjoint_union(h2, h2)));
        graphs.emplace_back(op + "(G,L2(A)+L2(B))", compose(disjoint_union(h1, h2)));
    }
    return make_report(std::move(graphs),
                       "G = " + serialize_graph6(g) + "; A, B = non-cospectral cubic pair on " +
                           std::to_string(2 * t) + " vertices");
}

// ---------------------------------------------------------------------------
// integral scans

namespace {

bool perfect_square(long long x, long long& root) {
    if (x < 0) return false;
    root = std::llround(std::sqrt(static_cast<double>(x)));
    while (root * root > x) --root;
    while ((root + 1) * (root + 1) <= x) ++root;
    return root * root == x;
}

// Integer roots of a monic cubic x^3 + a x^2 + b x + c, if it splits over Z.
bool cubic_splits_over_z(long long a, long long b, long long c, std::vector<long long>& roots) {
    auto eval = [&](long long x) { return ((x + a) * x + b) * x + c; };
    long long r1 = 0;
    bool found = false;
    if (c == 0) {
        r1 = 0;
        found = true;
    } else {
        for (long long d = 1; d * d <= std::abs(c) && !found; ++d) {
            if (std::abs(c) % d != 0) continue;
            for (long long cand : {d, -d, std::abs(c) / d, -std::abs(c) / d}) {
                if (eval(cand) == 0) {
                    r1 = cand;
                    found = true;
                    break;
                }
            }
        }
    }
    if (!found) return false;
    // deflate: x^2 + (a + r1) x + (b + r1 (a + r1))
    const long long p = a + r1;
    const long long q = b + r1 * p;
    const long long disc = p * p - 4 * q;
    long long sq = 0;
    if (!perfect_square(disc, sq)) return false;
    if ((-p + sq) % 2 != 0) return false;
    roots = {r1, (-p + sq) / 2, (-p - sq) / 2};
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return true;
}

IntegralScanRow scan_k_family(const Graph& g1, bool vertex_side, int n, long long square_arg) {
    IntegralScanRow row;
    row.params = {n};
    long long root = 0;
    row.integral_predicate = perfect_square(square_arg, root);
    if (row.integral_predicate) row.certificate = std::to_string(root);
    const Graph kn = family(Family::complete, {n});
    const Graph composite =
        vertex_side ? subdivision_vertex_join(g1, kn) : subdivision_edge_join(g1, kn);
    row.integral_numeric = is_integral(eps_spectrum(composite));
    return row;
}

} // namespace

std::vector<IntegralScanRow> integral_family_scan(IntegralFamily family_id, int lo, int hi) {
    if (lo < 1 || hi < lo || hi > 300)
        throw parameter_error("scan range must satisfy 1 <= lo <= hi <= 300");
    std::vector<IntegralScanRow> rows;
    switch (family_id) {
    case IntegralFamily::k3_svjoin_kn: {
        const Graph k3 = family(Family::complete, {3});
        for (int n = lo; n <= hi; ++n)
            rows.push_back(scan_k_family(k3, true, n, 12LL * n + 9));
        break;
    }
    case IntegralFamily::k11_sejoin_kn: {
        const Graph k11 = family(Family::complete, {11});
        for (int n = lo; n <= hi; ++n)
            rows.push_back(scan_k_family(k11, false, n, 44LL * n + 3645));
        break;
    }
    case IntegralFamily::join_union_complete: {
        if (hi > 40)
            throw parameter_error("join-union scan is cubic in the range; keep hi <= 40");
        for (int n = lo; n <= hi; ++n)
            for (int m = lo; m <= hi; ++m)
                for (int l = m; l <= hi; ++l) {
                    IntegralScanRow row;
                    row.params = {n, m, l};
                    // remaining eigenvalues are -1 and 0; integrality rides on
                    // the quotient cubic x^3 - (n-1) x^2 - (mn+ln+4ml) x - 4ml
                    std::vector<long long> roots;
                    row.integral_predicate = cubic_splits_over_z(
                        -(n - 1),
                        -(static_cast<long long>(m) * n + static_cast<long long>(l) * n +
                          4LL * m * l),
                        -4LL * m * l, roots);
                    if (row.integral_predicate) {
                        for (std::size_t i = 0; i < roots.size(); ++i)
                            row.certificate +=
                                (i ? "," : "") + std::to_string(roots[i]);
                    }
                    const Graph composite =
                        join(family(Family::complete, {n}),
                             disjoint_union(family(Family::complete, {m}),
                                            family(Family::complete, {l})));
                    row.integral_numeric = is_integral(eps_spectrum(composite));
                    rows.push_back(std::move(row));
                }
        break;
    }
    }
    return rows;
}

std::string ConstructionReport::to_json() const {
    nlohmann::ordered_json doc;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        nlohmann::ordered_json entry;
        entry["label"] = graphs[i].first;
        entry["graph6"] = serialize_graph6(graphs[i].second);
        entry["order"] = graphs[i].second.order();
        entry["spectrum"] = nlohmann::ordered_json::parse(spectrum_to_json(spectra[i]));
        entry["energy"] = round_significant(energies[i]);
        entry["irreducible"] = static_cast<bool>(irreducible[i]);
        arr.push_back(std::move(entry));
    }
    doc["graphs"] = std::move(arr);
    auto matrix = nlohmann::ordered_json::array();
    for (const auto& row : pairwise_cospectral) {
        auto jrow = nlohmann::ordered_json::array();
        for (bool b : row) jrow.push_back(b);
        matrix.push_back(std::move(jrow));
    }
    doc["pairwise_cospectral"] = std::move(matrix);
    doc["equienergetic"] = equienergetic;
    doc["notes"] = notes;
    return doc.dump(2);
}

} // namespace eccx
