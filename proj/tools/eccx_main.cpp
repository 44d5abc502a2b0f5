// eccx: eccentricity-matrix spectra of graphs, closed-form verification of
// join-type constructions, equienergetic family builders and integral scans.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eccx/constructions.hpp"
#include "eccx/errors.hpp"
#include "eccx/metrics.hpp"
#include "eccx/theorems.hpp"

using json = nlohmann::ordered_json;
using namespace eccx;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kInput = 2, kHypothesis = 3, kFail = 4 };

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parameter_error("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot open output file " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

// graphs come from files (graph6 lines or a JSON edge list, detected by a
// leading '{') or from family tokens: K5, C4, P3, S4, K3,3, prism, petersen
std::vector<Graph> parse_graph_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty graph input", 0);
    if (text[first] == '{') return {parse_edge_list(text)};
    std::vector<Graph> graphs;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
        graphs.back().set_label(line);
    }
    if (graphs.empty()) throw parse_error("no graph6 lines in input", 0);
    return graphs;
}

Graph graph_from_token(const std::string& token) {
    if (token.empty()) throw parameter_error("empty graph token");
    if (token[0] == '@') return parse_graph_text(read_input(token.substr(1))).front();
    if (token == "prism") return family(Family::prism);
    if (token == "petersen") return family(Family::petersen);

    const char kind = token[0];
    const std::string rest = token.substr(1);
    const auto comma = rest.find(',');
    try {
        if (kind == 'K' && comma != std::string::npos)
            return family(Family::complete_bipartite,
                          {std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1))});
        if (comma != std::string::npos) throw parameter_error("unexpected comma");
        const int p = std::stoi(rest);
        switch (kind) {
        case 'K': return family(Family::complete, {p});
        case 'C': return family(Family::cycle, {p});
        case 'P': return family(Family::path, {p});
        case 'S': return family(Family::star, {p});
        default: break;
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw parameter_error("unrecognized graph token '" + token +
                          "' (expected K<n>, C<n>, P<n>, S<n>, K<a>,<b>, prism, petersen, @file)");
}

json spectrum_json(const Spectrum& s) { return json::parse(spectrum_to_json(s)); }

json analyze_graph(const Graph& g, double tol) {
    const auto prof = profile(g);
    const Spectrum spec = group(sym_eigenvalues(prof.eps_as_matrix()), tol);
    long long wiener = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) wiener += prof.eps[i][j];

    json rep;
    rep["label"] = g.label();
    rep["n"] = g.order();
    rep["edges"] = g.edge_count();
    rep["eccentricity"] = prof.ecc;
    rep["radius"] = prof.radius;
    rep["diameter"] = prof.diameter;
    rep["eps_matrix"] = prof.eps;
    rep["spectrum"] = spectrum_json(spec);
    rep["energy"] = round_significant(energy(spec));
    rep["epsilon_wiener"] = wiener;
    rep["irreducible"] = is_connected(prof.eccentric_graph);
    rep["self_centered"] = prof.radius == prof.diameter;
    rep["epsilon_regular"] = is_epsilon_regular(g);
    const auto bound = check_radius_bound(g);
    rep["radius_bound"] = {{"rho", round_significant(bound.rho)},
                           {"bound", round_significant(bound.bound)},
                           {"equality", bound.equality}};
    return rep;
}

struct VerifyCase {
    std::string theorem;
    int operands;
};

const std::vector<VerifyCase> kTheorems = {
    {"sv-join", 2},      {"se-join", 2},       {"join-k1", 1},       {"self-join", 1},
    {"join-union", 3},   {"sv-join-union", 3}, {"se-join-union", 3},
};

int cmd_verify(const std::string& theorem, const std::vector<std::string>& tokens, double tol,
               const std::string& out_path) {
    std::vector<Graph> gs;
    for (const auto& t : tokens) gs.push_back(graph_from_token(t));
    std::vector<RegularGraphData> ds;
    for (const auto& g : gs) ds.push_back(RegularGraphData::from_graph(g));

    Spectrum predicted;
    Graph built(1);
    if (theorem == "sv-join") {
        predicted = predict_sv_join(ds[0], ds[1]);
        built = subdivision_vertex_join(gs[0], gs[1]);
    } else if (theorem == "se-join") {
        predicted = predict_se_join(ds[0], ds[1]);
        built = subdivision_edge_join(gs[0], gs[1]);
    } else if (theorem == "join-k1") {
        predicted = predict_join_k1(ds[0]);
        built = join(gs[0], family(Family::complete, {1}));
    } else if (theorem == "self-join") {
        predicted = predict_self_join(ds[0]);
        built = join(gs[0], gs[0]);
    } else if (theorem == "join-union") {
        if (ds[0].r >= ds[0].p - 1)
            throw hypothesis_error("join-union needs a non-complete first operand");
        predicted = predict_join_union(ds[0], ds[1], ds[2]);
        built = join(gs[0], disjoint_union(gs[1], gs[2]));
    } else if (theorem == "sv-join-union") {
        predicted = predict_sv_join_union(ds[0], ds[1], ds[2]);
        built = subdivision_vertex_join(gs[0], disjoint_union(gs[1], gs[2]));
    } else if (theorem == "se-join-union") {
        predicted = predict_se_join_union(ds[0], ds[1], ds[2]);
        built = subdivision_edge_join(gs[0], disjoint_union(gs[1], gs[2]));
    } else {
        throw parameter_error("unknown theorem id " + theorem);
    }

    const Spectrum computed = group(sym_eigenvalues(profile(built).eps_as_matrix()), tol);
    double max_dev = 0.0;
    const auto pv = predicted.expand();
    const auto cv = computed.expand();
    if (pv.size() != cv.size()) {
        max_dev = std::numeric_limits<double>::infinity();
    } else {
        for (std::size_t i = 0; i < pv.size(); ++i)
            max_dev = std::max(max_dev, std::abs(pv[i] - cv[i]));
    }
    const bool pass = spectra_equal(predicted, computed, tol);

    json rep;
    rep["theorem"] = theorem;
    rep["operands"] = tokens;
    rep["order"] = built.order();
    rep["predicted"] = spectrum_json(predicted);
    rep["computed"] = spectrum_json(computed);
    rep["max_deviation"] = round_significant(max_dev);
    rep["integral"] = is_integral(computed, tol);
    rep["pass"] = pass;
    write_output(out_path, rep.dump(2));
    return pass ? kOk : kFail;
}

int cmd_construct(const std::string& family_id, int t, const std::string& base_token,
                  const std::string& out_path) {
    ConstructionReport rep;
    if (family_id == "pair12t") {
        rep = equienergetic_pair_12t(t);
    } else if (family_id == "pair6t1") {
        rep = equienergetic_pair_6t1(t);
    } else {
        const Graph base = graph_from_token(base_token);
        PairVariant variant;
        if (family_id == "pair-sv") variant = PairVariant::sv_pair;
        else if (family_id == "pair-se") variant = PairVariant::se_pair;
        else if (family_id == "triplet-sv") variant = PairVariant::sv_triplet;
        else if (family_id == "triplet-se") variant = PairVariant::se_triplet;
        else throw parameter_error("unknown construction family " + family_id);
        rep = equienergetic_join_family(base, t, variant);
    }
    write_output(out_path, rep.to_json());
    return kOk;
}

int cmd_scan(const std::string& family_id, int lo, int hi, const std::string& format,
             const std::string& out_path) {
    IntegralFamily fam;
    if (family_id == "k3-svjoin-kn") fam = IntegralFamily::k3_svjoin_kn;
    else if (family_id == "k11-sejoin-kn") fam = IntegralFamily::k11_sejoin_kn;
    else if (family_id == "join-union-complete") fam = IntegralFamily::join_union_complete;
    else throw parameter_error("unknown scan family " + family_id);

    const auto rows = integral_family_scan(fam, lo, hi);
    bool all_agree = true;
    if (format == "csv") {
        std::string text = fam == IntegralFamily::join_union_complete
                               ? "n,m,l,integral,certificate\n"
                               : "n,integral,certificate\n";
        for (const auto& row : rows) {
            for (int p : row.params) text += std::to_string(p) + ",";
            text += row.integral_numeric ? "true," : "false,";
            text += row.certificate + "\n";
            all_agree = all_agree && row.integral_numeric == row.integral_predicate;
        }
        write_output(out_path, text);
    } else {
        json doc = json::array();
        for (const auto& row : rows) {
            json r;
            r["params"] = row.params;
            r["integral"] = row.integral_numeric;
            r["predicate"] = row.integral_predicate;
            r["certificate"] = row.certificate;
            doc.push_back(std::move(r));
            all_agree = all_agree && row.integral_numeric == row.integral_predicate;
        }
        write_output(out_path, doc.dump(2));
    }
    return all_agree ? kOk : kFail;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"eccentricity-matrix spectra, join-type closed forms, equienergetic "
                 "constructions and integral scans"};
    app.require_subcommand(1);

    std::string input = "-", out_path, format = "json";
    double tol = kDefaultTol;

    auto* analyze = app.add_subcommand("analyze", "eccentricity report for input graphs");
    analyze->add_option("--input", input, "graph6 lines or JSON edge list; '-' for stdin");
    analyze->add_option("--out", out_path, "output path (default stdout)");
    analyze->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--tol", tol, "eigenvalue grouping tolerance")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "closed-form spectrum vs the built graph");
    std::string theorem;
    std::vector<std::string> operands;
    verify->add_option("theorem", theorem, "one of: sv-join, se-join, join-k1, self-join, "
                                           "join-union, sv-join-union, se-join-union")
        ->required();
    verify->add_option("operands", operands, "graph tokens, e.g. C4 K2")->expected(-1);
    verify->add_option("--out", out_path, "output path");
    verify->add_option("--tol", tol, "comparison tolerance")->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "build an equienergetic family instance");
    std::string cfamily, base_token = "K3";
    int t = 3;
    construct->add_option("family", cfamily,
                          "pair12t, pair6t1, pair-sv, pair-se, triplet-sv, triplet-se")
        ->required();
    construct->add_option("t", t, "half the cubic-pair order (t >= 3)")->required();
    construct->add_option("--g", base_token, "base graph token for pair-*/triplet-* families");
    construct->add_option("--out", out_path, "output path");

    auto* scan = app.add_subcommand("scan", "integral-family scan with arithmetic certificates");
    std::string sfamily;
    int nmax = 0, nmin = -1;
    scan->add_option("family", sfamily, "k3-svjoin-kn, k11-sejoin-kn, join-union-complete")
        ->required();
    scan->add_option("nmax", nmax, "upper end of the range")->required();
    scan->add_option("--min", nmin, "lower end (default 2, or 1 for join-union-complete)");
    scan->add_option("--out", out_path, "output path");
    scan->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse error
        return code == 0 ? kOk : kInput;
    }

    if (analyze->parsed()) {
        const auto graphs = parse_graph_text(read_input(input));
        if (format == "csv") {
            std::string text = "graph,value,multiplicity\n";
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const Spectrum s =
                    group(sym_eigenvalues(profile(graphs[i]).eps_as_matrix()), tol);
                for (const auto& p : s.pairs) {
                    std::ostringstream row;
                    row << std::setprecision(12) << i << ',' << round_significant(p.value)
                        << ',' << p.multiplicity << '\n';
                    text += row.str();
                }
            }
            write_output(out_path, text);
        } else {
            if (graphs.size() == 1) {
                write_output(out_path, analyze_graph(graphs[0], tol).dump(2));
            } else {
                json doc = json::array();
                for (const auto& g : graphs) doc.push_back(analyze_graph(g, tol));
                write_output(out_path, doc.dump(2));
            }
        }
        return kOk;
    }
    if (verify->parsed()) {
        for (const auto& known : kTheorems)
            if (known.theorem == theorem) {
                if (static_cast<int>(operands.size()) != known.operands)
                    throw parameter_error(theorem + " expects " +
                                          std::to_string(known.operands) + " operand(s)");
                return cmd_verify(theorem, operands, tol, out_path);
            }
        throw parameter_error("unknown theorem id " + theorem);
    }
    if (construct->parsed()) return cmd_construct(cfamily, t, base_token, out_path);
    if (scan->parsed()) {
        if (nmin < 0) nmin = sfamily == "join-union-complete" ? 1 : 2;
        return cmd_scan(sfamily, nmin, nmax, format, out_path);
    }
    return kInternal;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis error: " << e.what() << '\n';
        return kHypothesis;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const parameter_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const structure_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const connectivity_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
