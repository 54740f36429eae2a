// Command-line front end: runs the series-logarithm and product-formula
// pipelines, emits Matrix Market matrices, JSON certificates/reports, and
// CSV figure data. Exit codes: 0 ok, 1 internal, 2 input invalid, 3 gap
// infeasible, 4 certificate failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unilog/errors.hpp"
#include "unilog/graph.hpp"
#include "unilog/locality.hpp"
#include "unilog/logseries.hpp"
#include "unilog/matrix_market.hpp"
#include "unilog/models.hpp"
#include "unilog/mollifier.hpp"
#include "unilog/opalg.hpp"
#include "unilog/specgap.hpp"
#include "unilog/trotter.hpp"
#include "unilog/types.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace unilog;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitGap = 3;
constexpr int kExitCertificate = 4;

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_error(const std::string& type, const std::string& message, json details = json::object()) {
    json body;
    body["schema"] = 1;
    body["error"] = {{"type", type}, {"message", message}};
    for (auto& [k, v] : details.items()) body["error"][k] = v;
    std::cout << body.dump(2) << std::endl;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgumentError("cannot open output file " + path);
    return out;
}

CMat read_input_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_matrix(in);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return j;
}

// Builtin "ring:n" / "path:n" / "complete:n", otherwise a graph text file.
Graph parse_graph_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        int n = 0;
        try {
            n = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad graph size in spec: " + spec);
        }
        if (kind == "ring") return Graph::ring(n);
        if (kind == "path") return Graph::path(n);
        if (kind == "complete") return Graph::complete(n);
        throw ParseError("unknown builtin graph kind: " + kind);
    }
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open graph file " + spec);
    return Graph::read_text(in);
}

// Graph with an edge wherever u has an off-diagonal nonzero (symmetrized).
Graph sparsity_graph_of(const CMat& u) {
    const int n = static_cast<int>(u.rows());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (u(i, j) != Complex(0.0, 0.0) || u(j, i) != Complex(0.0, 0.0)) {
                edges.push_back({i, j});
            }
        }
    }
    return Graph(n, std::move(edges));
}

json gap_json(const SpectralGap& gap) {
    return {{"arc_start", gap.arc_start},
            {"arc_end", gap.arc_end},
            {"width", gap.width},
            {"zeta", gap.zeta}};
}

void write_decay_csv(const std::string& path, const LocalityReport& rep) {
    auto out = open_output(path);
    out << "distance,max_abs\n";
    for (const auto& p : rep.profile) {
        out << p.distance << ',' << format_g17(p.max_abs) << '\n';
    }
}

json decay_json(const LocalityReport& rep) {
    json d;
    d["points"] = rep.profile.size();
    if (rep.kappa) {
        d["kappa"] = *rep.kappa;
    } else {
        d["kappa"] = nullptr;
    }
    d["kappa_residual"] = rep.kappa_residual;
    return d;
}

void finish_report(json& report, const Stopwatch& watch, const std::string& out_report) {
    report["wall_seconds"] = watch.seconds();
    if (!out_report.empty()) {
        auto out = open_output(out_report);
        out << report.dump(2) << '\n';
    }
    std::cout << report.dump(2) << std::endl;
}

struct LoguArgs {
    std::string input;
    double eps = 1e-3;
    double gamma_fraction = 0.45;
    double gap_threshold = 1e-3;
    bool no_oracle = false;
    std::string out_j = "j.mtx";
    std::string out_cert = "cert.json";
    std::string out_decay = "decay.csv";
    std::string out_report;
};

int cmd_logu(const LoguArgs& args, const std::string& echo) {
    Stopwatch watch;
    const CMat u = read_input_matrix(args.input);
    if (u.rows() != u.cols()) throw DimensionError("input matrix must be square");

    LogSeriesOptions opts;
    opts.gamma_fraction = args.gamma_fraction;
    opts.gap_threshold = args.gap_threshold;
    LogSeriesResult res = build_log_series(u, args.eps, opts);

    const Graph g = sparsity_graph_of(u);
    const LocalityReport decay = sparsity_report(res.series, res.J, g);

    bool cert_ok = res.series.err_unitary <= res.series.tail;
    if (!args.no_oracle) {
        const CMat h = oracle_log(u, res.series.gap.zeta);
        res.series.err_vs_oracle = operator_norm(h - res.J);
        cert_ok = cert_ok && *res.series.err_vs_oracle <= res.series.tail;
    }

    write_matrix_file(args.out_j, res.J, MatrixMarketFormat::array);
    write_decay_csv(args.out_decay, decay);

    json cert;
    cert["schema"] = 1;
    cert["n"] = u.rows();
    cert["gap"] = res.series.gap.width;
    cert["zeta"] = res.series.gap.zeta;
    cert["gamma"] = res.series.gamma;
    cert["K"] = res.series.K;
    cert["tail_bound"] = res.series.tail;
    cert["tail_remainder_heuristic"] = res.series.tail_remainder;
    cert["unitary_defect"] = res.series.unitary_defect;
    if (res.series.err_vs_oracle) {
        cert["err_vs_oracle"] = *res.series.err_vs_oracle;
    } else {
        cert["err_vs_oracle"] = nullptr;
    }
    cert["err_unitary"] = res.series.err_unitary;
    cert["containment_ok"] = true;
    {
        auto out = open_output(args.out_cert);
        out << cert.dump(2) << '\n';
    }

    // Report numbers are recomputed from the emitted files, not carried over.
    const CMat j_back = read_input_matrix(args.out_j);
    const double err_unitary = operator_norm(
        u - std::polar(1.0, -res.series.gap.zeta) * hermitian_exp(j_back, 1.0));

    json report;
    report["schema"] = 1;
    report["command"] = echo;
    report["input"] = {{"path", args.input},
                       {"n", u.rows()},
                       {"unitary_defect", res.series.unitary_defect},
                       {"gap", gap_json(res.series.gap)}};
    report["params"] = {{"eps", args.eps},
                        {"gamma_fraction", args.gamma_fraction},
                        {"gamma", res.series.gamma},
                        {"K", res.series.K}};
    report["certified"] = {{"tail_bound", res.series.tail},
                           {"tail_remainder_heuristic", res.series.tail_remainder}};
    json measured = {{"err_unitary", err_unitary}, {"containment_ok", true}};
    if (res.series.err_vs_oracle) {
        measured["err_vs_oracle"] =
            operator_norm(oracle_log(u, res.series.gap.zeta) - j_back);
    }
    report["measured"] = measured;
    report["decay"] = decay_json(decay);
    report["outputs"] = {{"j", args.out_j}, {"cert", args.out_cert}, {"decay", args.out_decay}};
    finish_report(report, watch, args.out_report);
    return cert_ok ? kExitOk : kExitCertificate;
}

struct TrotterArgs {
    std::string graph_spec;
    double t = 1.0;
    double delta = 0.01;
    std::string out_factors = "factors.json";
    std::string out_report;
};

int cmd_trotter(const TrotterArgs& args, const std::string& echo) {
    Stopwatch watch;
    const Graph g = parse_graph_spec(args.graph_spec);
    const TrotterPlan plan = make_trotter_plan(g, args.t, args.delta);
    const TrotterError err = trotter_error(plan);

    json factors;
    factors["schema"] = 1;
    factors["graph"] = {{"n", g.vertex_count()}, {"edges", g.edge_count()}};
    factors["delta"] = plan.delta;
    factors["steps"] = plan.steps;
    factors["residual_delta"] = plan.residual_delta;
    json classes = json::array();
    for (const auto& cls : plan.coloring.classes) {
        json edges = json::array();
        for (const Edge& e : cls) edges.push_back({e.tail(), e.head()});
        classes.push_back(edges);
    }
    factors["classes"] = classes;
    json factor_list = json::array();
    auto push_step = [&](double d) {
        for (const TrotterFactor& f : plan.step_factors()) {
            factor_list.push_back({{"class", f.class_index},
                                   {"delta", d},
                                   {"sweep", f.second_sweep ? "mirror" : "forward"}});
        }
    };
    for (int s = 0; s < plan.steps; ++s) push_step(plan.t < 0 ? -plan.delta : plan.delta);
    if (plan.residual_delta > 0.0) {
        push_step(plan.t < 0 ? -plan.residual_delta : plan.residual_delta);
    }
    factors["factors"] = factor_list;
    {
        auto out = open_output(args.out_factors);
        out << factors.dump(2) << '\n';
    }

    json report;
    report["schema"] = 1;
    report["command"] = echo;
    report["graph"] = {{"spec", args.graph_spec},
                       {"n", g.vertex_count()},
                       {"edges", g.edge_count()},
                       {"max_degree", max_degree(g)},
                       {"colors", plan.color_count()}};
    report["params"] = {{"t", plan.t},
                        {"delta", plan.delta},
                        {"steps", plan.steps},
                        {"residual_delta", plan.residual_delta},
                        {"lambda", plan.lambda}};
    report["factor_count"] = {{"truncated", plan.factor_count(false)},
                              {"with_residual", plan.factor_count(true)}};
    report["measured"] = {{"err_truncated", err.err_truncated}, {"err_full", err.err_full}};
    report["bound_terms"] = {{"first_m_lambda_delta", err.bound_first},
                             {"second_m_lambda3_t_delta2", err.bound_second}};
    report["outputs"] = {{"factors", args.out_factors}};
    finish_report(report, watch, args.out_report);
    return kExitOk;
}

struct WalkArgs {
    int n = 20;
    std::string out_u = "walk_u.mtx";
    std::string out_spectrum = "walk_spectrum.csv";
    std::string out_heatmap = "walk_h.csv";
    std::string out_report;
};

int cmd_walk(const WalkArgs& args, const std::string& echo) {
    Stopwatch watch;
    const CoinedWalk walk = build_coined_walk(args.n);
    const UnitaryEigensystem sys = unitary_eigensystem(walk.u);
    const SpectralGap gap = find_gap(sys.phases);
    const SpectralGap formula_gap = walk_gap_check(args.n);
    const CMat h = oracle_log(walk.u, gap.zeta);

    write_matrix_file(args.out_u, walk.u, MatrixMarketFormat::coordinate);
    {
        auto out = open_output(args.out_spectrum);
        out << "k,phase\n";
        for (Eigen::Index k = 0; k < sys.phases.size(); ++k) {
            out << k << ',' << format_g17(sys.phases(k)) << '\n';
        }
    }
    {
        auto out = open_output(args.out_heatmap);
        out << "i,j,abs_h\n";
        for (Eigen::Index i = 0; i < h.rows(); ++i) {
            for (Eigen::Index j = 0; j < h.cols(); ++j) {
                out << i << ',' << j << ',' << format_g17(std::abs(h(i, j))) << '\n';
            }
        }
    }

    json report;
    report["schema"] = 1;
    report["command"] = echo;
    report["params"] = {{"n", args.n}, {"dim", 2 * args.n}};
    report["measured"] = {{"unitary_defect", unitary_defect(walk.u)},
                          {"gap", gap_json(gap)},
                          {"formula_gap_width", formula_gap.width},
                          {"max_abs_h", h.cwiseAbs().maxCoeff()}};
    report["outputs"] = {{"u", args.out_u},
                         {"spectrum", args.out_spectrum},
                         {"heatmap", args.out_heatmap}};
    finish_report(report, watch, args.out_report);
    return kExitOk;
}

struct QftArgs {
    int n = 8;
    double alpha = 0.5;
    double eps = 1e-6;
    std::string out_q = "q_alpha.mtx";
    std::string out_report;
};

int cmd_qft(const QftArgs& args, const std::string& echo) {
    Stopwatch watch;
    FourierOp op = build_fourier_op(args.n);
    const CMat q_alpha = fractional_fourier(op, args.alpha, args.eps);
    write_matrix_file(args.out_q, q_alpha, MatrixMarketFormat::array);

    const CMat q4 = op.q * op.q * op.q * op.q;
    const double q4_err = operator_norm(q4 - CMat::Identity(args.n, args.n));
    const double alpha1_err = operator_norm(fractional_fourier(op, 1.0, args.eps) - op.q);
    // Compare (Q^α)² against exact Q when 2α = 1, else against Q^{2α}.
    const CMat squared = q_alpha * q_alpha;
    const double square_err =
        std::abs(2.0 * args.alpha - 1.0) < 1e-15
            ? operator_norm(squared - op.q)
            : operator_norm(squared - fractional_fourier(op, 2.0 * args.alpha, args.eps));

    json report;
    report["schema"] = 1;
    report["command"] = echo;
    report["params"] = {{"n", args.n}, {"alpha", args.alpha}, {"eps", args.eps}};
    report["series"] = {{"K", op.f_series->K},
                        {"gap", gap_json(op.f_series->gap)},
                        {"gamma", op.f_series->gamma},
                        {"tail_bound", op.f_series->tail},
                        {"series_eps", op.f_eps}};
    report["checks"] = {{"q4_err", q4_err},
                        {"alpha1_err", alpha1_err},
                        {"square_err", square_err}};
    report["outputs"] = {{"q_alpha", args.out_q}};
    finish_report(report, watch, args.out_report);
    return kExitOk;
}

struct CoeffsArgs {
    double gamma = 0.5;
    int kmax = 100;
    std::string out = "coeffs.csv";
    std::string out_report;
};

int cmd_coeffs(const CoeffsArgs& args, const std::string& echo) {
    Stopwatch watch;
    const FourierLayer layer(args.gamma, args.kmax);
    {
        auto out = open_output(args.out);
        layer.write_coeff_csv(out);
    }
    json report;
    report["schema"] = 1;
    report["command"] = echo;
    report["params"] = {{"gamma", args.gamma}, {"kmax", args.kmax}};
    report["rows"] = 2 * args.kmax + 1;
    report["quad_tol"] = layer.quad_tol();
    report["outputs"] = {{"coeffs", args.out}};
    finish_report(report, watch, args.out_report);
    return kExitOk;
}

struct VerifyArgs {
    std::string input;
    std::string j_path;
    std::string cert_path;
    std::string out_report;
};

int cmd_verify(const VerifyArgs& args, const std::string& echo) {
    Stopwatch watch;
    const CMat u = read_input_matrix(args.input);
    const CMat j = read_input_matrix(args.j_path);
    const json cert = read_json_file(args.cert_path);
    for (const char* key : {"zeta", "tail_bound", "gap", "K"}) {
        if (!cert.contains(key)) throw ParseError(std::string("certificate missing ") + key);
    }
    const double zeta = cert["zeta"].get<double>();
    const double tail = cert["tail_bound"].get<double>();

    const double defect = unitary_defect(u);
    if (defect > kUnitaryTol) throw NotUnitaryError(defect);
    const double herm_defect = hermitian_defect(j);

    const SpectralGap gap = find_gap(u);
    const double err_unitary = operator_norm(u - std::polar(1.0, -zeta) * hermitian_exp(j, 1.0));
    const double err_oracle = operator_norm(oracle_log(u, zeta) - j);

    const bool gap_matches = std::abs(gap.width - cert["gap"].get<double>()) <= 1e-9;
    const bool hermitian_ok = herm_defect <= kHermitianTol;
    const bool unitary_bound_ok = err_unitary <= tail;
    const bool oracle_bound_ok = err_oracle <= tail;
    const bool pass = gap_matches && hermitian_ok && unitary_bound_ok && oracle_bound_ok;

    json report;
    report["schema"] = 1;
    report["command"] = echo;
    report["inputs"] = {{"u", args.input}, {"j", args.j_path}, {"cert", args.cert_path}};
    report["recomputed"] = {{"unitary_defect", defect},
                            {"hermitian_defect", herm_defect},
                            {"gap_width", gap.width},
                            {"err_unitary", err_unitary},
                            {"err_vs_oracle", err_oracle}};
    report["checks"] = {{"gap_matches_cert", gap_matches},
                        {"j_hermitian", hermitian_ok},
                        {"err_unitary_within_tail", unitary_bound_ok},
                        {"err_oracle_within_tail", oracle_bound_ok}};
    report["pass"] = pass;
    finish_report(report, watch, args.out_report);
    return pass ? kExitOk : kExitCertificate;
}

int run_guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const NotUnitaryError& e) {
        emit_error("not_unitary", e.what(), {{"defect", e.defect}});
        return kExitInput;
    } catch (const NotHermitianError& e) {
        emit_error("not_hermitian", e.what(), {{"defect", e.defect}});
        return kExitInput;
    } catch (const ParseError& e) {
        emit_error("parse", e.what());
        return kExitInput;
    } catch (const DimensionError& e) {
        emit_error("dimension", e.what());
        return kExitInput;
    } catch (const InvalidPartitionError& e) {
        emit_error("invalid_partition", e.what());
        return kExitInput;
    } catch (const InvalidArgumentError& e) {
        emit_error("invalid_argument", e.what());
        return kExitInput;
    } catch (const GapTooSmallError& e) {
        emit_error("gap_infeasible", e.what(), {{"gap", e.gap}});
        return kExitGap;
    } catch (const BranchCutError& e) {
        emit_error("branch_cut", e.what(), {{"nearest_phase", e.nearest_phase}});
        return kExitGap;
    } catch (const TailNotCertifiableError& e) {
        emit_error("tail_not_certifiable", e.what(),
                   {{"best_tail", e.best_tail}, {"k_table", e.k_table}});
        return kExitCertificate;
    } catch (const QuadratureError& e) {
        emit_error("quadrature", e.what());
        return kExitCertificate;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string echo;
    for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
    }

    CLI::App app{"graph-local unitary discretization and sparse logarithms"};
    app.require_subcommand(1);

    LoguArgs logu;
    auto* logu_cmd = app.add_subcommand("logu", "sparse approximate logarithm with certificate");
    logu_cmd->add_option("--input", logu.input, "unitary matrix (Matrix Market)")->required();
    logu_cmd->add_option("--eps", logu.eps, "target accuracy");
    logu_cmd->add_option("--gamma-fraction", logu.gamma_fraction, "gamma as a fraction of the gap");
    logu_cmd->add_option("--gap-threshold", logu.gap_threshold, "refuse gaps below this width");
    logu_cmd->add_flag("--no-oracle", logu.no_oracle, "skip the dense-eigendecomposition check");
    logu_cmd->add_option("--out-j", logu.out_j, "output path for J");
    logu_cmd->add_option("--out-cert", logu.out_cert, "output path for the certificate");
    logu_cmd->add_option("--out-decay", logu.out_decay, "output path for the decay profile");
    logu_cmd->add_option("--out-report", logu.out_report, "also write the report JSON here");

    TrotterArgs trotter;
    auto* trotter_cmd = app.add_subcommand("trotter", "symmetric product formula for e^{itA}");
    trotter_cmd->add_option("--graph", trotter.graph_spec, "ring:n, path:n, complete:n, or file")
        ->required();
    trotter_cmd->add_option("--t", trotter.t, "evolution time");
    trotter_cmd->add_option("--delta", trotter.delta, "step size");
    trotter_cmd->add_option("--out-factors", trotter.out_factors, "output path for the factor list");
    trotter_cmd->add_option("--out-report", trotter.out_report, "also write the report JSON here");

    WalkArgs walk;
    auto* walk_cmd = app.add_subcommand("walk", "coined quantum walk on a ring");
    walk_cmd->add_option("--n", walk.n, "ring size");
    walk_cmd->add_option("--out-u", walk.out_u, "output path for U");
    walk_cmd->add_option("--out-spectrum", walk.out_spectrum, "output path for the spectrum CSV");
    walk_cmd->add_option("--out-heatmap", walk.out_heatmap, "output path for the |H| CSV");
    walk_cmd->add_option("--out-report", walk.out_report, "also write the report JSON here");

    QftArgs qft;
    auto* qft_cmd = app.add_subcommand("qft", "fractional powers of the Fourier matrix");
    qft_cmd->add_option("--n", qft.n, "dimension");
    qft_cmd->add_option("--alpha", qft.alpha, "fractional power");
    qft_cmd->add_option("--eps", qft.eps, "accuracy for the cached logarithm");
    qft_cmd->add_option("--out-q", qft.out_q, "output path for Q^alpha");
    qft_cmd->add_option("--out-report", qft.out_report, "also write the report JSON here");

    CoeffsArgs coeffs;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "sawtooth and smoothed coefficient table");
    coeffs_cmd->add_option("--gamma", coeffs.gamma, "bump half-width");
    coeffs_cmd->add_option("--kmax", coeffs.kmax, "table size");
    coeffs_cmd->add_option("--out", coeffs.out, "output CSV path");
    coeffs_cmd->add_option("--out-report", coeffs.out_report, "also write the report JSON here");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "recompute a certificate from files");
    verify_cmd->add_option("--input", verify.input, "original unitary (Matrix Market)")->required();
    verify_cmd->add_option("--j", verify.j_path, "J matrix (Matrix Market)")->required();
    verify_cmd->add_option("--cert", verify.cert_path, "certificate JSON")->required();
    verify_cmd->add_option("--out-report", verify.out_report, "also write the report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (logu_cmd->parsed()) return run_guarded([&] { return cmd_logu(logu, echo); });
    if (trotter_cmd->parsed()) return run_guarded([&] { return cmd_trotter(trotter, echo); });
    if (walk_cmd->parsed()) return run_guarded([&] { return cmd_walk(walk, echo); });
    if (qft_cmd->parsed()) return run_guarded([&] { return cmd_qft(qft, echo); });
    if (coeffs_cmd->parsed()) return run_guarded([&] { return cmd_coeffs(coeffs, echo); });
    if (verify_cmd->parsed()) return run_guarded([&] { return cmd_verify(verify, echo); });
    return kExitInternal;
}
