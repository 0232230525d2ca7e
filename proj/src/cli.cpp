#include "outerspread/cli.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "outerspread/bounds.hpp"
#include "outerspread/canonical.hpp"
#include "outerspread/enumerate.hpp"
#include "outerspread/fan_secular.hpp"
#include "outerspread/graph6.hpp"
#include "outerspread/parallel.hpp"
#include "outerspread/report.hpp"
#include "outerspread/search.hpp"
#include "outerspread/spectra.hpp"

namespace osp {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int parse_count(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

// splits on top-level commas only; parentheses and brackets nest
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Graph parse_graph_expr(const std::string& expr) {
    const std::string s = trim(expr);
    if (s.empty()) throw std::invalid_argument("empty graph expression");

    if (s.rfind("join(", 0) == 0) {
        if (s.back() != ')') throw std::invalid_argument("join: missing ')'");
        const std::vector<std::string> parts = split_args(s.substr(5, s.size() - 6));
        if (parts.size() != 2) throw std::invalid_argument("join: expected two arguments");
        return join(parse_graph_expr(parts[0]), parse_graph_expr(parts[1]));
    }

    const std::size_t colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string name = s.substr(0, colon);
        const std::string arg = trim(s.substr(colon + 1));
        if (name == "forest") {
            if (arg.size() < 2 || arg.front() != '[' || arg.back() != ']')
                throw std::invalid_argument("forest: expected [a,b,...]");
            std::vector<int> parts;
            for (const std::string& piece : split_args(arg.substr(1, arg.size() - 2)))
                parts.push_back(parse_count(trim(piece)));
            return linear_forest(LinearForestSpec(parts));
        }
        const int k = parse_count(arg);
        if (name == "path") return path(k);
        if (name == "cycle") return cycle(k);
        if (name == "star") return star(k);
        if (name == "complete") return complete(k);
        if (name == "fan") return fan(k);
        if (name == "wheel") return wheel(k);
        throw std::invalid_argument("unknown constructor: '" + name + "'");
    }

    return graph6_decode(s);
}

namespace {

Graph load_graph_arg(const std::string& arg) {
    if (arg == "-") {
        std::string line;
        if (!std::getline(std::cin, line)) throw std::invalid_argument("no graph on stdin");
        return parse_graph_expr(line);
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw std::invalid_argument("cannot open graph file: " + arg.substr(1));
        std::string line;
        if (!std::getline(f, line)) throw std::invalid_argument("empty graph file: " + arg.substr(1));
        return parse_graph_expr(line);
    }
    return parse_graph_expr(arg);
}

struct OutputOpts {
    std::string format = "csv";
    std::string path;
};

void add_output_opts(CLI::App* sc, OutputOpts& o) {
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--out", o.path, "write output to this file instead of stdout");
}

int with_sink(const OutputOpts& o, std::ostream& out, std::ostream& err,
              const std::function<void(std::ostream&)>& body) {
    if (o.path.empty()) {
        body(out);
        return 0;
    }
    std::ofstream file(o.path);
    if (!file) {
        err << "error: cannot open output file: " << o.path << "\n";
        return 2;
    }
    body(file);
    return 0;
}

int emit_table(const Table& t, const OutputOpts& o, std::ostream& out, std::ostream& err) {
    const ReportFormat f = o.format == "json" ? ReportFormat::Json : ReportFormat::Csv;
    return with_sink(o, out, err, [&](std::ostream& sink) { write_report(t, f, sink); });
}

std::string join_strings(const std::vector<std::string>& parts, char sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s.push_back(sep);
        s += parts[i];
    }
    return s;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int u = 0; u < g.vertex_count(); ++u) d = std::max(d, g.degree(u));
    return d;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spread computations and searches over outerplanar graphs"};
    app.require_subcommand(1);

    std::string graph_arg, encode_arg, decode_arg, canon_arg;
    int n_arg = 0, scan_n = 0, n_lo = 2, n_hi = 2, workers = 0;
    long long budget = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::size_t table_limit = 100000;
    bool connected_only = false;
    std::vector<int> n_list;
    OutputOpts o_spread, o_check, o_resid, o_enum, o_max, o_fan, o_conj, o_climb, o_codec;

    CLI::App* sc_spread = app.add_subcommand("spread", "extreme eigenvalues and spread of one graph");
    sc_spread->add_option("--graph", graph_arg, "graph expression, graph6, @file or -")->required();
    sc_spread->add_option("--tol", tol, "eigensolver off-diagonal tolerance");
    add_output_opts(sc_spread, o_spread);

    CLI::App* sc_check = app.add_subcommand("check-bounds", "spectral bound checks and diagnostics");
    auto* opt_cg = sc_check->add_option("--graph", graph_arg, "graph to check");
    auto* opt_cs = sc_check->add_option("--scan-enumerated", scan_n,
                                        "check every connected outerplanar graph with 2..N vertices");
    opt_cg->excludes(opt_cs);
    sc_check->add_option("--workers", workers, "worker threads (0 = default)");
    add_output_opts(sc_check, o_check);

    CLI::App* sc_resid = app.add_subcommand("residuals", "entry and eigenvalue residuals on the fan family");
    sc_resid->add_option("--n", n_list, "fan orders to scan")->required();
    add_output_opts(sc_resid, o_resid);

    CLI::App* sc_enum = app.add_subcommand("enumerate", "stream outerplanar graphs as graph6 lines");
    sc_enum->add_option("--n", n_arg, "vertex count")->required();
    sc_enum->add_flag("--connected", connected_only, "connected classes only");
    sc_enum->add_option("--out", o_enum.path, "write output to this file instead of stdout");

    CLI::App* sc_max = app.add_subcommand("max-spread", "exhaustive spread maximum over connected outerplanar graphs");
    sc_max->add_option("--n", n_arg, "vertex count")->required();
    sc_max->add_option("--workers", workers, "worker threads (0 = default)");
    add_output_opts(sc_max, o_max);

    CLI::App* sc_fan = app.add_subcommand("fan-scan", "spread over every hub-plus-linear-forest partition");
    sc_fan->add_option("--n", n_arg, "vertex count")->required();
    sc_fan->add_option("--table-limit", table_limit, "rows kept in the output table");
    sc_fan->add_option("--workers", workers, "worker threads (0 = default)");
    add_output_opts(sc_fan, o_fan);

    CLI::App* sc_conj = app.add_subcommand("conjecture", "per-n summary of fan, family scan and exhaustive winners");
    sc_conj->add_option("--n-lo", n_lo, "first n")->required();
    sc_conj->add_option("--n-hi", n_hi, "last n")->required();
    sc_conj->add_option("--workers", workers, "worker threads (0 = default)");
    add_output_opts(sc_conj, o_conj);

    CLI::App* sc_climb = app.add_subcommand("climb", "hill-climb from a start graph");
    sc_climb->add_option("--graph", graph_arg, "start graph")->required();
    sc_climb->add_option("--budget", budget, "max accepted steps");
    sc_climb->add_option("--seed", seed, "shuffle seed");
    add_output_opts(sc_climb, o_climb);

    CLI::App* sc_codec = app.add_subcommand("codec", "graph6 encode / decode / canonical form");
    auto* opt_enc = sc_codec->add_option("--encode", encode_arg, "expression to encode as graph6");
    auto* opt_dec = sc_codec->add_option("--decode", decode_arg, "graph6 string to expand");
    auto* opt_can = sc_codec->add_option("--canon", canon_arg, "graph whose canonical form to print");
    opt_enc->excludes(opt_dec);
    opt_enc->excludes(opt_can);
    opt_dec->excludes(opt_can);
    sc_codec->add_option("--out", o_codec.path, "write output to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_spread->parsed()) {
            const Graph g = load_graph_arg(graph_arg);
            const SpreadResult s = spread(g, tol);
            Table t;
            t.columns = {"graph", "n", "edges", "lambda1", "lambda_n", "spread"};
            t.add_row({Value::text(graph_arg), Value::integer(g.vertex_count()),
                       Value::integer(g.edge_count()), Value::real(s.lambda1), Value::real(s.lambda_n),
                       Value::real(s.spread)});
            return emit_table(t, o_spread, out, err);
        }

        if (sc_check->parsed()) {
            if (opt_cg->count() == 0 && opt_cs->count() == 0) {
                err << "error: check-bounds needs --graph or --scan-enumerated\n";
                return 1;
            }
            if (opt_cg->count()) {
                const Graph g = load_graph_arg(graph_arg);
                Table t;
                t.columns = {"check", "lhs", "rhs", "margin", "holds", "value", "detail"};
                bool hard_violation = false;
                for (const LemmaCheck& c : bound_suite(g)) {
                    t.add_row({Value::text(c.name), Value::real(c.lhs), Value::real(c.rhs),
                               Value::real(c.margin), Value::integer(c.holds ? 1 : 0), Value::none(),
                               Value::none()});
                    // the first two bounds are proven for every outerplanar
                    // graph; a failure there is a reportable finding
                    if (!c.holds && c.name.find("extremal") == std::string::npos) hard_violation = true;
                }
                const DegreeSlackStats ds = degree_bound_diagnostic(g);
                const BSetDiagnostic bs = b_set_diagnostic(g);
                auto diag = [&](const std::string& name, double v, Value detail) {
                    t.add_row({Value::text(name), Value::none(), Value::none(), Value::none(),
                               Value::none(), Value::real(v), std::move(detail)});
                };
                diag("degree_slack_x", ds.min_slack_x, Value::none());
                diag("degree_slack_z", ds.min_slack_z, Value::none());
                std::vector<std::string> bset;
                for (int u : bs.b) bset.push_back(std::to_string(u));
                diag("b_set_sum_abs_z", bs.sum_abs_z, Value::text(join_strings(bset, ';')));
                diag("b_set_sum_x", bs.sum_x, Value::text(join_strings(bset, ';')));
                const int rc = emit_table(t, o_check, out, err);
                if (rc != 0) return rc;
                return hard_violation ? 3 : 0;
            }
            if (scan_n < 2 || scan_n > 11)
                throw std::invalid_argument("check-bounds: --scan-enumerated needs 2 <= N <= 11");
            Table t;
            t.columns = {"n", "graphs", "lambda1_max", "min_margin", "violations"};
            long long total_violations = 0;
            for (int n = 2; n <= scan_n; ++n) {
                const std::vector<EnumeratedGraph> all = enumerate_outerplanar(n, true);
                std::vector<double> l1(all.size());
                parallel_for(static_cast<long long>(all.size()), workers,
                             [&](long long i) { l1[i] = spread(all[i].graph).lambda1; });
                const double cap = std::sqrt(static_cast<double>(n)) + 1.0;
                double l1_max = 0.0, min_margin = cap;
                long long violations = 0;
                for (double v : l1) {
                    l1_max = std::max(l1_max, v);
                    min_margin = std::min(min_margin, cap - v);
                    if (cap - v < -1e-9) ++violations;
                }
                total_violations += violations;
                t.add_row({Value::integer(n), Value::integer(static_cast<std::int64_t>(all.size())),
                           Value::real(l1_max), Value::real(min_margin), Value::integer(violations)});
            }
            const int rc = emit_table(t, o_check, out, err);
            if (rc != 0) return rc;
            return total_violations > 0 ? 3 : 0;
        }

        if (sc_resid->parsed()) {
            Table t;
            t.columns = {"n", "forest_edges", "max_res_z", "max_res_x", "err_lambda1", "err_lambda_n"};
            for (int n : n_list) {
                const Graph g = fan(n);
                const EntryResidualStats st = entry_estimate_residual(g);
                const SpreadResult s = spread(g);
                const RefinedPrediction pred = refined_eigenvalue_prediction(n, n - 2);
                t.add_row({Value::integer(n), Value::integer(n - 2), Value::real(st.max_res_z),
                           Value::real(st.max_res_x), Value::real(std::abs(s.lambda1 - pred.lambda1_pred)),
                           Value::real(std::abs(s.lambda_n - pred.lambda_n_pred))});
            }
            return emit_table(t, o_resid, out, err);
        }

        if (sc_enum->parsed()) {
            const std::vector<EnumeratedGraph> all = enumerate_outerplanar(n_arg, connected_only);
            return with_sink(o_enum, out, err, [&](std::ostream& sink) {
                for (const EnumeratedGraph& g : all) sink << g.canon << "\n";
            });
        }

        if (sc_max->parsed()) {
            const SearchResult r = exhaustive_max_spread(n_arg, workers);
            const FanShape shape = classify_fan_shape(r.best);
            Table t;
            t.columns = {"n",    "best",       "best_spread", "runner_up_gap", "tie_count",
                         "ties", "max_degree", "is_fan",      "fan_parts"};
            t.add_row({Value::integer(n_arg), Value::text(r.ties.front()), Value::real(r.best_spread),
                       Value::real(r.runner_up_gap), Value::integer(static_cast<std::int64_t>(r.ties.size())),
                       Value::text(join_strings(r.ties, ';')), Value::integer(max_degree(r.best)),
                       Value::integer(shape.is_fan ? 1 : 0),
                       shape.is_fan && !shape.parts.empty()
                           ? Value::text(LinearForestSpec(shape.parts).to_string())
                           : Value::none()});
            return emit_table(t, o_max, out, err);
        }

        if (sc_fan->parsed()) {
            const FanScanResult r = fan_family_max(n_arg, workers, table_limit);
            return emit_table(r.full_table, o_fan, out, err);
        }

        if (sc_conj->parsed()) {
            const Table t = conjecture_scan(n_lo, n_hi, workers);
            return emit_table(t, o_conj, out, err);
        }

        if (sc_climb->parsed()) {
            const Graph g0 = load_graph_arg(graph_arg);
            const double s0 = spread(g0).spread;
            const SearchResult r = local_search(g0, budget, seed);
            Table t;
            t.columns = {"start", "start_spread", "best", "best_spread", "improved"};
            t.add_row({Value::text(graph_arg), Value::real(s0), Value::text(r.ties.front()),
                       Value::real(r.best_spread), Value::integer(r.best_spread > s0 + 1e-9 ? 1 : 0)});
            return emit_table(t, o_climb, out, err);
        }

        if (sc_codec->parsed()) {
            if (opt_enc->count() + opt_dec->count() + opt_can->count() != 1) {
                err << "error: codec needs exactly one of --encode, --decode, --canon\n";
                return 1;
            }
            return with_sink(o_codec, out, err, [&](std::ostream& sink) {
                if (opt_enc->count()) {
                    sink << graph6_encode(parse_graph_expr(encode_arg)) << "\n";
                } else if (opt_dec->count()) {
                    const Graph g = graph6_decode(decode_arg);
                    sink << g.vertex_count() << " " << g.edge_count() << "\n";
                    for (const auto& [u, v] : g.edges()) sink << u << " " << v << "\n";
                } else {
                    sink << canonical_form(load_graph_arg(canon_arg)) << "\n";
                }
            });
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand\n";
    return 1;
}

}  // namespace osp
