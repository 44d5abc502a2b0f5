#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eccx/constructions.hpp"
#include "eccx/errors.hpp"
#include "eccx/metrics.hpp"
#include "eccx/theorems.hpp"

namespace py = pybind11;
using namespace eccx;

namespace {

std::vector<std::pair<double, int>> spectrum_pairs(const Spectrum& s) {
    std::vector<std::pair<double, int>> out;
    out.reserve(s.pairs.size());
    for (const auto& p : s.pairs) out.emplace_back(p.value, p.multiplicity);
    return out;
}

Family family_by_name(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "star") return Family::star;
    if (name == "petersen") return Family::petersen;
    if (name == "prism") return Family::prism;
    throw parameter_error("unknown family name " + name);
}

Spectrum eps_spectrum(const Graph& g, double tol) {
    return group(sym_eigenvalues(profile(g).eps_as_matrix()), tol);
}

py::dict analyze(const Graph& g, double tol) {
    const auto prof = profile(g);
    const Spectrum spec = group(sym_eigenvalues(prof.eps_as_matrix()), tol);
    long long wiener = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) wiener += prof.eps[i][j];
    const auto bound = check_radius_bound(g);

    py::dict out;
    out["n"] = g.order();
    out["edges"] = g.edge_count();
    out["eccentricity"] = prof.ecc;
    out["radius"] = prof.radius;
    out["diameter"] = prof.diameter;
    out["eps_matrix"] = prof.eps;
    out["spectrum"] = spectrum_pairs(spec);
    out["energy"] = energy(spec);
    out["epsilon_wiener"] = wiener;
    out["irreducible"] = is_connected(prof.eccentric_graph);
    out["self_centered"] = prof.radius == prof.diameter;
    out["epsilon_regular"] = is_epsilon_regular(g);
    out["rho"] = bound.rho;
    out["rho_lower_bound"] = bound.bound;
    out["bound_equality"] = bound.equality;
    return out;
}

SquareMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw parameter_error("matrix rows must all have length n");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "eccentricity-matrix spectra of graphs and join-type closed forms";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<structure_error>(m, "StructureError", PyExc_ValueError);
    py::register_exception<connectivity_error>(m, "ConnectivityError", PyExc_ValueError);
    py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::string>(), py::arg("n"), py::arg("label") = std::string())
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def_property("label", &Graph::label, &Graph::set_label)
        .def("edges", [](const Graph& g) { return edge_order(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", q=" +
                   std::to_string(g.edge_count()) +
                   (g.label().empty() ? std::string() : ", label='" + g.label() + "'") + ")";
        });

    m.def("family", [](const std::string& name, const std::vector<int>& params) {
              return family(family_by_name(name), params);
          },
          py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("parse_graph6", &parse_graph6);
    m.def("serialize_graph6", &serialize_graph6);
    m.def("parse_edge_list", &parse_edge_list);
    m.def("serialize_edge_list", &serialize_edge_list);

    m.def("complement", &complement);
    m.def("disjoint_union", [](const std::vector<Graph>& gs) {
        return disjoint_union(std::span<const Graph>(gs.data(), gs.size()));
    });
    m.def("join", &join);
    m.def("line_graph", &line_graph);
    m.def("subdivision", &subdivision);
    m.def("subdivision_vertex_join", &subdivision_vertex_join);
    m.def("subdivision_edge_join", &subdivision_edge_join);
    m.def("regularity", &regularity);
    m.def("is_connected", &is_connected);

    m.def("analyze", &analyze, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("eps_spectrum",
          [](const Graph& g, double tol) { return spectrum_pairs(eps_spectrum(g, tol)); },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("epsilon_wiener", &epsilon_wiener);
    m.def("is_epsilon_irreducible", &is_epsilon_irreducible);
    m.def("is_epsilon_regular", &is_epsilon_regular);
    m.def("is_self_centered", &is_self_centered);

    m.def("sym_eigenvalues", [](const std::vector<std::vector<double>>& rows) {
        return sym_eigenvalues(matrix_from_rows(rows));
    });
    m.def("small_eigenvalues", [](const std::vector<std::vector<double>>& rows) {
        return small_eigenvalues(matrix_from_rows(rows));
    });

    auto predict = [](Spectrum (*fn)(const RegularGraphData&, const RegularGraphData&)) {
        return [fn](const Graph& g1, const Graph& g2) {
            return spectrum_pairs(
                fn(RegularGraphData::from_graph(g1), RegularGraphData::from_graph(g2)));
        };
    };
    m.def("predict_sv_join", predict(&predict_sv_join));
    m.def("predict_se_join", predict(&predict_se_join));
    m.def("predict_join_k1", [](const Graph& g) {
        return spectrum_pairs(predict_join_k1(RegularGraphData::from_graph(g)));
    });
    m.def("predict_self_join", [](const Graph& g) {
        return spectrum_pairs(predict_self_join(RegularGraphData::from_graph(g)));
    });
    m.def("predict_join_union", [](const Graph& g0, const Graph& g1, const Graph& g2) {
        const auto d0 = RegularGraphData::from_graph(g0);
        if (d0.r >= d0.p - 1)
            throw hypothesis_error("join-union needs a non-complete first operand");
        return spectrum_pairs(predict_join_union(d0, RegularGraphData::from_graph(g1),
                                                 RegularGraphData::from_graph(g2)));
    });
    m.def("predict_sv_join_union", [](const Graph& g0, const Graph& g1, const Graph& g2) {
        return spectrum_pairs(predict_sv_join_union(RegularGraphData::from_graph(g0),
                                                    RegularGraphData::from_graph(g1),
                                                    RegularGraphData::from_graph(g2)));
    });
    m.def("predict_se_join_union", [](const Graph& g0, const Graph& g1, const Graph& g2) {
        return spectrum_pairs(predict_se_join_union(RegularGraphData::from_graph(g0),
                                                    RegularGraphData::from_graph(g1),
                                                    RegularGraphData::from_graph(g2)));
    });
    m.def("wiener_sv_join", &wiener_sv_join);
    m.def("wiener_se_join", &wiener_se_join);

    m.def("enumerate_cubic", &enumerate_cubic);
    m.def("noncospectral_cubic_pair", &noncospectral_cubic_pair);
    m.def("construct_pair_12t_json", [](int t) { return equienergetic_pair_12t(t).to_json(); });
    m.def("construct_pair_6t1_json", [](int t) { return equienergetic_pair_6t1(t).to_json(); });
    m.def("construct_join_family_json", [](const Graph& g, int t, const std::string& variant) {
        PairVariant v;
        if (variant == "sv_pair") v = PairVariant::sv_pair;
        else if (variant == "se_pair") v = PairVariant::se_pair;
        else if (variant == "sv_triplet") v = PairVariant::sv_triplet;
        else if (variant == "se_triplet") v = PairVariant::se_triplet;
        else throw parameter_error("unknown variant " + variant);
        return equienergetic_join_family(g, t, v).to_json();
    });
    m.def("integral_family_scan", [](const std::string& name, int lo, int hi) {
        IntegralFamily fam;
        if (name == "k3_svjoin_kn") fam = IntegralFamily::k3_svjoin_kn;
        else if (name == "k11_sejoin_kn") fam = IntegralFamily::k11_sejoin_kn;
        else if (name == "join_union_complete") fam = IntegralFamily::join_union_complete;
        else throw parameter_error("unknown scan family " + name);
        std::vector<py::dict> rows;
        for (const auto& row : integral_family_scan(fam, lo, hi)) {
            py::dict r;
            r["params"] = row.params;
            r["integral"] = row.integral_numeric;
            r["predicate"] = row.integral_predicate;
            r["certificate"] = row.certificate;
            rows.push_back(std::move(r));
        }
        return rows;
    });
}
