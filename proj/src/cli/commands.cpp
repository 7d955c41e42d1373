#include "interlace/cli.hpp"
#include "interlace/errors.hpp"
#include "interlace/examples.hpp"
#include "interlace/grassmann.hpp"
#include "interlace/involution.hpp"
#include "interlace/network.hpp"
#include "interlace/rsk.hpp"
#include "interlace/schur.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace interlace {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

// "4x5" or "4,5".
std::pair<int, int> parse_size(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == 'x') c = ',';
    auto v = parse_int_list(t);
    if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw ArgumentError("expected a size like 4x5, got '" + text + "'");
    return {v[0], v[1]};
}

struct GlobalOptions {
    std::uint64_t seed = 1;
    int nvars = 5;
    std::string max_size;
    std::string format = "text";
    bool timing = false;
};

// Selection of one or more networks shared by the network-level subcommands.
struct NetworkOptions {
    std::vector<std::string> grids;
    std::string file;
    int interspace = 0;
    std::string schur;  // LAMBDA:T:N
    std::string pair;   // LAMBDA:MU:N
    std::string weights = "unit";

    void attach(CLI::App* app) {
        app->add_option("--grid", grids, "grid network m,n,k (repeatable)");
        app->add_option("--network", file, "network file in the ILNET format");
        app->add_option("--interspace", interspace, "glued witness network for k");
        app->add_option("--schur", schur, "three-term Schur network LAMBDA:T:N, e.g. 3,2,2,1:1:5");
        app->add_option("--interlace-pair", pair, "interlacing pair network LAMBDA:MU:N, e.g. 3,2,1:2,1:4");
        app->add_option("--weights", weights, "grid edge weights")->check(CLI::IsMember({"unit", "random"}));
    }

    bool any() const { return !grids.empty() || !file.empty() || interspace || !schur.empty() || !pair.empty(); }

    std::vector<Network> load(const GlobalOptions& g, const std::vector<std::string>& default_grids) const {
        std::vector<Network> out;
        std::vector<std::string> grid_list = grids;
        if (!g.max_size.empty() && grid_list.empty()) {
            auto [mm, nn] = parse_size(g.max_size);
            for (int m = 3; m <= mm; ++m)
                for (int n = 3; n <= nn; ++n)
                    for (int k = 2; k < std::min(m, n); ++k)
                        grid_list.push_back(std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k));
        }
        if (!any() && grid_list.empty()) grid_list = default_grids;
        for (const auto& grid_arg : grid_list) {
            auto v = parse_int_list(grid_arg);
            if (v.size() != 3) throw ArgumentError("--grid expects m,n,k");
            out.push_back(build_grid_network(v[0], v[1], v[2], weights == "random" ? random_edge_weights(g.seed) : nullptr));
        }
        if (!file.empty()) out.push_back(read_network(read_file(file)));
        if (interspace) out.push_back(build_interspace_witness(interspace));
        if (!schur.empty()) {
            auto parts = split(schur, ':');
            if (parts.size() != 3) throw ArgumentError("--schur expects LAMBDA:T:N");
            out.push_back(build_schur_network(parse_int_list(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])));
        }
        if (!pair.empty()) {
            auto parts = split(pair, ':');
            if (parts.size() != 3) throw ArgumentError("--interlace-pair expects LAMBDA:MU:N");
            out.push_back(build_interlace_pair_network(parse_int_list(parts[0]), parse_int_list(parts[1]),
                                                       std::stoi(parts[2])));
        }
        return out;
    }
};

const std::vector<std::string> kSuiteGrids = {"4,4,2", "5,5,2", "5,5,3"};

std::string label(const Network& g) { return g.name().empty() ? "network" : g.name(); }

// Input matrix for the RSK subcommands.
struct RskInput {
    std::string matrix;
    std::string symbolic;
    std::string random;

    void attach(CLI::App* app) {
        app->add_option("--matrix", matrix, "matrix file, one row per line");
        app->add_option("--symbolic", symbolic, "symbolic input of size MxN");
        app->add_option("--random", random, "seeded rational input of size MxN");
    }

    ExactMatrix load(const GlobalOptions& g) const {
        if (!matrix.empty()) return parse_matrix(read_file(matrix));
        if (!random.empty()) {
            auto [m, n] = parse_size(random);
            return random_input(m, n, g.seed);
        }
        auto [m, n] = parse_size(symbolic.empty() ? "2x2" : symbolic);
        return symbolic_input(m, n);
    }
};

std::pair<bool, std::string> from_check(const CheckReport& r) {
    std::string d = std::to_string(r.checked) + " checked, " + std::to_string(r.failed) + " failed";
    if (!r.ok) d += "; first: " + r.first_failure;
    return {r.ok, d};
}

std::string tau_sample_text() {
    Network g = sample_grid();
    PncPair p = sample_pair(g);
    return format_trace(g, p, tau(g, p));
}

std::string rsk_sample_text() { return format_arrays(RskArrays(symbolic_input(2, 2))); }

std::string schur_sample_text() {
    IdentityParams p;
    p.lambda = {3, 2, 2, 1};
    p.t = 1;
    auto r = verify_identity(SchurIdentity::ThreeTerm, p, 5);
    std::string out = "identity three-term lambda=(3,2,2,1) t=1 n=5\n" + r.statement + "\n";
    out += std::string("holds: ") + (r.holds ? "yes" : "no") + "\n";
    for (const auto& line : verify_three_term_by_network({3, 2, 2, 1}, 1, 5).lines) out += "network " + line + "\n";
    return out;
}

// First differing line, or empty when equal.
std::string first_difference(const std::string& want, const std::string& got) {
    auto a = split(want, '\n'), b = split(got, '\n');
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::string x = i < a.size() ? a[i] : "<end>", y = i < b.size() ? b[i] : "<end>";
        if (x != y) return "line " + std::to_string(i + 1) + ": expected '" + x + "', got '" + y + "'";
    }
    return "";
}

// Parses "lambda=3,2,1 mu=2,1 t=1" (spaces or semicolons between entries).
IdentityParams parse_params(const std::string& text) {
    IdentityParams p;
    std::string t = text;
    for (char& c : t)
        if (c == ';') c = ' ';
    std::istringstream in(t);
    std::string item;
    while (in >> item) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgumentError("expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "lambda" || key == "nu") p.lambda = parse_int_list(value);
        else if (key == "mu") p.mu = parse_int_list(value);
        else if (key == "t") p.t = std::stoi(value);
        else if (key == "c") p.c = std::stoi(value);
        else if (key == "r") p.r = std::stoi(value);
        else throw ArgumentError("unknown parameter '" + key + "'");
    }
    return p;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> replay_outputs() {
    return {{"tau_sample.txt", tau_sample_text()},
            {"rsk_2x2.txt", rsk_sample_text()},
            {"schur_three_term.txt", schur_sample_text()}};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"interlace: path swapping, three-term relations and their applications"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--seed", g.seed, "seed for random weights and inputs");
    app.add_option("--nvars", g.nvars, "number of variables for Schur computations");
    app.add_option("--max-size", g.max_size, "sweep all grids up to m,n");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text"}));
    app.add_flag("--timing", g.timing, "print wall time per check");

    // tau-trace
    auto* tau_cmd = app.add_subcommand("tau-trace", "run the path swap on one pair and print its step log");
    std::string tau_grid, tau_I, tau_J;
    std::size_t tau_index = 0;
    tau_cmd->add_option("--grid", tau_grid, "grid m,n,k (default: the 9x9 sample pair)");
    tau_cmd->add_option("--I", tau_I, "source pattern");
    tau_cmd->add_option("--J", tau_J, "sink pattern");
    tau_cmd->add_option("--index", tau_index, "position of the pair in enumeration order");

    auto* inv_cmd = app.add_subcommand("verify-involution", "exhaustive involution, weight and swap checks");
    NetworkOptions inv_net;
    inv_net.attach(inv_cmd);

    auto* three_cmd = app.add_subcommand("verify-three-term", "wt(I,J) = wt(I,J') + wt(I,J'') for all valid patterns");
    NetworkOptions three_net;
    three_net.attach(three_cmd);

    auto* parity_cmd = app.add_subcommand("verify-parity", "parity relation for every source pattern and even sink set");
    NetworkOptions parity_net;
    parity_net.attach(parity_cmd);
    bool parity_swap_sum = false;
    parity_cmd->add_flag("--source-swap", parity_swap_sum, "also check the source swap sum");

    auto* rsk_cmd = app.add_subcommand("rsk", "print the arrays of the birational RSK map");
    RskInput rsk_in;
    rsk_in.attach(rsk_cmd);
    bool rsk_verify = false;
    rsk_cmd->add_flag("--verify", rsk_verify, "run the octahedron, recursion and star checks");

    auto* octa_cmd = app.add_subcommand("verify-octahedron", "octahedron recurrence on one input");
    RskInput octa_in;
    octa_in.attach(octa_cmd);

    auto* pm_cmd = app.add_subcommand("path-matrix", "print the path matrix of a network");
    NetworkOptions pm_net;
    pm_net.attach(pm_cmd);
    bool pm_check = false;
    pm_cmd->add_flag("--check", pm_check, "also test the interlacing conditions");

    auto* cim_cmd = app.add_subcommand("check-interlacing-matrix", "test the interlacing conditions on a matrix");
    std::string cim_file;
    int cim_k = 0;
    cim_cmd->add_option("--matrix", cim_file, "matrix file")->required();
    cim_cmd->add_option("--k", cim_k, "order k")->required();

    auto* im_cmd = app.add_subcommand("verify-intermat", "determinant identity for all valid patterns");
    NetworkOptions im_net;
    im_net.attach(im_cmd);
    std::string im_file;
    int im_k = 0;
    im_cmd->add_option("--matrix", im_file, "matrix file instead of a network");
    im_cmd->add_option("--k", im_k, "order k for --matrix");

    auto* ms_cmd = app.add_subcommand("mstar", "the forced vanishing set and its realization");
    int ms_k = 2;
    bool ms_list = false;
    ms_cmd->add_option("--k", ms_k, "order k");
    ms_cmd->add_flag("--list", ms_list, "print the set");

    auto* schur_cmd = app.add_subcommand("schur", "Schur identities, positivity and the conjecture checker");
    std::string sc_identity, sc_params, sc_positivity;
    std::vector<std::string> sc_conjecture;
    bool sc_network = false;
    schur_cmd->add_option("--identity", sc_identity, "a..g or a name such as three-term, kirillov");
    schur_cmd->add_option("--params", sc_params, "parameters, e.g. 'lambda=3,2,2,1 t=1'");
    schur_cmd->add_option("--positivity", sc_positivity, "rectangle or removal difference")
        ->check(CLI::IsMember({"rectangle", "removal"}));
    schur_cmd->add_option("--conjecture", sc_conjecture, "two partitions LAMBDA MU")->expected(2);
    schur_cmd->add_flag("--network-route", sc_network, "also compare with pattern weights on the matching path network");

    auto* replay_cmd = app.add_subcommand("replay-examples", "diff the worked examples against golden files");
    bool replay_update = false;
    std::string replay_dir = golden_dir();
    replay_cmd->add_flag("--update-golden", replay_update, "rewrite the golden files");
    replay_cmd->add_option("--golden-dir", replay_dir, "directory of golden files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    RunReport report(command);
    try {
        if (*tau_cmd) {
            Network net = tau_grid.empty() ? sample_grid() : [&] {
                auto v = parse_int_list(tau_grid);
                if (v.size() != 3) throw ArgumentError("--grid expects m,n,k");
                return build_grid_network(v[0], v[1], v[2]);
            }();
            PncPair pair;
            if (tau_grid.empty()) {
                pair = sample_pair(net);
            } else {
                auto pairs = enumerate_pnc(net, parse_int_list(tau_I), parse_int_list(tau_J));
                if (tau_index >= pairs.size())
                    throw ArgumentError("pattern has " + std::to_string(pairs.size()) + " pairs");
                pair = pairs[tau_index];
            }
            TauResult r = tau(net, pair);
            report.add_text(format_trace(net, pair, r));
            report.check("tau(tau(x)) = x", [&] {
                bool ok = tau(net, r.pair).pair == pair;
                return std::pair{ok, std::string()};
            });
        } else if (*inv_cmd) {
            for (const auto& net : inv_net.load(g, kSuiteGrids)) {
                report.check("involution on " + label(net), [&] {
                    auto rep = check_tau_exhaustive(net);
                    bool ok = rep.involution && rep.weight_preserving && rep.end_swap;
                    std::string d = std::to_string(rep.pairs) + " pairs, " + std::to_string(rep.fixed_points) + " fixed";
                    if (!ok) d += "; " + rep.first_failure;
                    return std::pair{ok, d};
                });
            }
        } else if (*three_cmd) {
            for (const auto& net : three_net.load(g, kSuiteGrids)) {
                report.check("three-term relation on " + label(net), [&] {
                    PatternWeights w(net);
                    const int k = net.k();
                    std::size_t n = 0;
                    for (const auto& [I, J] : all_patterns(k)) {
                        if (J.front() == 1 || J.back() == 2 * k - 1) continue;
                        auto r = verify_three_term(w, k, I, J);
                        ++n;
                        if (!r.holds) return std::pair{false, "fails at " + r.detail};
                    }
                    return std::pair{true, std::to_string(n) + " patterns"};
                });
            }
        } else if (*parity_cmd) {
            for (const auto& net : parity_net.load(g, kSuiteGrids)) {
                report.check("parity relation on " + label(net), [&] {
                    PatternWeights w(net);
                    const int k = net.k();
                    IndexSet evens;
                    for (int x = 2; x <= 2 * k - 2; x += 2) evens.push_back(x);
                    std::size_t n = 0;
                    for (const auto& I : subsets(2 * k - 1, k - 1))
                        for (int size = 0; size <= k - 1; ++size)
                            for (const auto& pick : subsets(k - 1, size)) {
                                IndexSet K;
                                for (int i : pick) K.push_back(evens[i - 1]);
                                auto r = verify_parity_relation(w, k, I, K);
                                ++n;
                                if (!r.holds) return std::pair{false, "fails at " + r.detail};
                            }
                    return std::pair{true, std::to_string(n) + " instances"};
                });
                if (parity_swap_sum)
                    report.check("source swap sum on " + label(net), [&] {
                        PatternWeights w(net);
                        auto r = verify_source_swap_sum(w, net.k());
                        return std::pair{r.holds, r.detail};
                    });
            }
        } else if (*rsk_cmd) {
            ExactMatrix x = rsk_in.load(g);
            RskArrays a(x);
            report.add_text(format_arrays(a));
            if (rsk_verify) {
                report.check("octahedron recurrence", [&] { return from_check(verify_octahedron(a)); });
                report.check("star equation", [&] { return from_check(verify_star_all(a)); });
                report.check("y recursion, 2 <= k < min(i,j)",
                             [&] { return from_check(verify_y_recursion(a, RecursionRange::Interior)); });
                report.check("y recursion, 1 <= k <= min(i,j)",
                             [&] { return from_check(verify_y_recursion(a, RecursionRange::Full)); });
            }
        } else if (*octa_cmd) {
            ExactMatrix x = octa_in.load(g);
            report.check("octahedron recurrence", [&] {
                RskArrays a(x);  // also cross-checks the two ybar routes
                return from_check(verify_octahedron(a));
            });
        } else if (*pm_cmd) {
            for (const auto& net : pm_net.load(g, {"4,4,2"})) {
                ExactMatrix m = path_matrix(net);
                report.add_text(label(net) + "\n" + format_matrix(m));
                if (pm_check)
                    report.check("interlacing matrix " + label(net), [&] {
                        auto c = check_interlacing_matrix(m, net.k());
                        return std::pair{c.interlacing, c.certificate};
                    });
            }
        } else if (*cim_cmd) {
            ExactMatrix m = parse_matrix(read_file(cim_file));
            report.check("interlacing matrix", [&] {
                auto c = check_interlacing_matrix(m, cim_k);
                return std::pair{c.interlacing, c.certificate};
            });
        } else if (*im_cmd) {
            std::vector<std::pair<std::string, std::pair<ExactMatrix, int>>> inputs;
            if (!im_file.empty()) {
                if (im_k < 2) throw ArgumentError("--matrix needs --k >= 2");
                inputs.push_back({im_file, {parse_matrix(read_file(im_file)), im_k}});
            }
            if (im_file.empty() || im_net.any())
                for (const auto& net : im_net.load(g, kSuiteGrids)) inputs.push_back({label(net), {path_matrix(net), net.k()}});
            for (const auto& [name, in] : inputs) {
                const auto& [m, k] = in;
                report.check("determinant identity on " + name, [&] {
                    std::size_t n = 0;
                    for (const auto& [I, J] : all_patterns(k)) {
                        if (J.front() == 1 || J.back() == 2 * k - 1) continue;
                        auto r = verify_intermat(m, k, I, J);
                        ++n;
                        if (!r.holds) return std::pair{false, "fails at " + r.detail};
                    }
                    return std::pair{true, std::to_string(n) + " patterns"};
                });
                report.check("Plucker form on " + name, [&] {
                    PluckerVector v = phi_embed(m);
                    std::size_t n = 0;
                    for (const auto& [I, J] : all_patterns(k)) {
                        if (J.front() == 1 || J.back() == 2 * k - 1) continue;
                        auto r = verify_intermat_plucker(v, k, I, J);
                        ++n;
                        if (!r.holds) return std::pair{false, "fails at " + r.detail};
                    }
                    return std::pair{true, std::to_string(n) + " patterns"};
                });
            }
        } else if (*ms_cmd) {
            auto set = mstar_set(ms_k);
            std::string text = "M* for k=" + std::to_string(ms_k) + ": " + std::to_string(set.size()) + " sets\n";
            if (ms_list)
                for (const auto& s : set) text += format_index_set(s) + "\n";
            report.add_text(text);
            report.check("witness vanishing set equals M*", [&] {
                Network net = build_interspace_witness(ms_k);
                PluckerVector v = phi_embed(path_matrix(net));
                auto mm = mstar_membership(v, ms_k);
                std::string d = mm.first_violation ? "first violation " + format_index_set(*mm.first_violation) : "";
                return std::pair{mm.exact_cell, d};
            });
        } else if (*schur_cmd) {
            const int n = g.nvars;
            if (!sc_identity.empty()) {
                SchurIdentity id = parse_identity_name(sc_identity);
                IdentityParams p = parse_params(sc_params);
                auto r = verify_identity(id, p, n);
                report.add_text(r.statement);
                report.record({identity_name(id) + " identity, n=" + std::to_string(n), r.holds,
                               r.holds ? "" : "lhs - rhs = " + (r.lhs - r.rhs).to_string(), 0});
                if (sc_network) {
                    NetworkRouteResult nr;
                    if (id == SchurIdentity::ThreeTerm) nr = verify_three_term_by_network(p.lambda, p.t, n);
                    else if (id == SchurIdentity::InterlacingPairs) nr = verify_interlacing_by_network(p.lambda, p.mu, n);
                    else throw ArgumentError("the network route covers the three-term and interlacing identities");
                    for (const auto& line : nr.lines) report.add_text("network " + line);
                    report.record({"network route", nr.holds, "", 0});
                }
            } else if (!sc_positivity.empty()) {
                IdentityParams p = parse_params(sc_params);
                Polynomial f = sc_positivity == "rectangle" ? rectangle_positivity_difference(p.c, p.r, p.t, n)
                                                            : removal_positivity_difference(p.lambda, p.t, n);
                auto pos = is_schur_positive(f, n);
                report.add_text("difference = " + format_expansion(pos.expansion));
                report.record({sc_positivity + " difference is Schur positive", pos.positive, "", 0});
            } else if (!sc_conjecture.empty()) {
                auto lam = parse_int_list(sc_conjecture[0]), mu = parse_int_list(sc_conjecture[1]);
                auto rep = conjecture_check(lam, mu, app.get_option("--nvars")->count() ? n : 0);
                report.add_text(format_conjecture_report(rep));
                report.record({"conjectured inequalities", rep.all_positive, "", 0});
            } else {
                throw ArgumentError("schur needs --identity, --positivity or --conjecture");
            }
        } else if (*replay_cmd) {
            for (const auto& [name, text] : replay_outputs()) {
                const std::string path = replay_dir + "/" + name;
                if (replay_update) {
                    std::ofstream(path) << text;
                    report.add_text("wrote " + path);
                    continue;
                }
                report.check("replay " + name, [&] {
                    std::ifstream in(path);
                    if (!in) return std::pair{false, std::string("missing golden file ") + path};
                    std::ostringstream ss;
                    ss << in.rdbuf();
                    std::string diff = first_difference(ss.str(), text);
                    return std::pair{diff.empty(), diff};
                });
            }
        }
    } catch (const std::invalid_argument& e) {  // ArgumentError and failed std::stoi
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    out << report.render(g.timing);
    return report.all_pass() ? 0 : 1;
}

}  // namespace interlace
