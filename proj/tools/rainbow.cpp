#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rainbow/builders.hpp"
#include "rainbow/error.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/kernels.hpp"
#include "rainbow/perturbation.hpp"
#include "rainbow/recognizers.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/trees.hpp"

namespace {

using json = nlohmann::json;
using namespace rainbow;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Globals {
    bool json_out = false;
    int brute_cap = kDefaultBruteCap;
    int enum_cap = 14;
};

struct InputSpec {
    std::vector<std::string> graphs;
    std::string file;
};

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string s;
    int number = 0;
    while (std::getline(in, s)) {
        ++number;
        if (!s.empty() && s.back() == '\r') {
            s.pop_back();
        }
        if (!s.empty()) {
            out.push_back({number, s});
        }
    }
    return out;
}

std::vector<Line> gather(const InputSpec& spec) {
    if (!spec.graphs.empty() && !spec.file.empty()) {
        throw CLI::ValidationError("input", "give graphs as arguments or --file, not both");
    }
    if (!spec.graphs.empty()) {
        std::vector<Line> out;
        for (std::size_t i = 0; i < spec.graphs.size(); ++i) {
            out.push_back({static_cast<int>(i + 1), spec.graphs[i]});
        }
        return out;
    }
    if (!spec.file.empty()) {
        std::ifstream in(spec.file);
        if (!in) {
            throw CLI::ValidationError("--file", "cannot open " + spec.file);
        }
        return read_lines(in);
    }
    return read_lines(std::cin);
}

// Runs `body` on each parsed line. Per-line errors are reported in place and
// turn the final exit code into kExitUsage.
template <typename Body>
int for_each_graph(const Globals& g, const InputSpec& spec, Body body) {
    int status = kExitOk;
    for (const auto& line : gather(spec)) {
        try {
            const Graph graph = parse_graph6(line.text);
            body(line.text, graph);
        } catch (const std::exception& e) {
            status = kExitUsage;
            const std::string kind = dynamic_cast<const ParseError*>(&e) ? "parse error" : "error";
            std::cerr << "line " << line.number << ": " << kind << ": " << e.what() << '\n';
            if (g.json_out) {
                std::cout << json{{"line", line.number}, {"input", line.text}, {"error", e.what()}}.dump() << '\n';
            }
        }
    }
    std::cout.flush();
    return status;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(vs[i]);
    }
    return "{" + s + "}";
}

void add_input(CLI::App* cmd, InputSpec& spec) {
    cmd->add_option("graphs", spec.graphs, "graph6 strings (default: read lines from stdin)");
    cmd->add_option("--file", spec.file, "read graph6 lines from a file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2-rainbow independent domination solver and verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json_out, "JSON-lines output");
    app.add_option("--brute-cap", g.brute_cap, "vertex cap for exhaustive search")->check(CLI::Range(1, 32));
    app.add_option("--enum-cap", g.enum_cap, "vertex cap for listing minimum functions")->check(CLI::Range(1, 32));
    std::string isa;
    app.add_option("--isa", isa, "force the evaluation kernel")->check(CLI::IsMember({"scalar", "avx2"}));

    InputSpec solve_in;
    bool want_wzero = false;
    bool want_indep = false;
    bool want_functions = false;
    auto* solve = app.add_subcommand("solve", "gamma, a lexicographically least witness, and optional extras");
    add_input(solve, solve_in);
    solve->add_flag("--wzero", want_wzero, "vertices that every minimum function colors 0");
    solve->add_flag("--indep", want_indep, "independent domination number");
    solve->add_flag("--functions", want_functions, "list every minimum function");

    InputSpec classify_in;
    auto* classify = app.add_subcommand("classify", "stability, edge-removal criticality and family membership");
    add_input(classify, classify_in);

    InputSpec profile_in;
    bool by_vertices = false;
    bool by_edges = false;
    auto* profile = app.add_subcommand("profile", "gamma after deleting each vertex or each edge");
    add_input(profile, profile_in);
    auto* vflag = profile->add_flag("--vertices", by_vertices, "delete each vertex");
    profile->add_flag("--edges", by_edges, "delete each edge")->excludes(vflag);

    auto* gen = app.add_subcommand("gen", "emit graph6 lines");
    gen->require_subcommand(1);
    int gen_n = 0;
    auto* gen_trees = gen->add_subcommand("trees", "every free tree of a given order");
    gen_trees->add_option("--n", gen_n, "order")->required()->check(CLI::Range(1, 40));
    int spider_k = 0;
    auto* gen_spider = gen->add_subcommand("spider", "spider with k legs of length three");
    gen_spider->add_option("--k", spider_k, "legs")->required()->check(CLI::Range(2, 100000));
    std::string gadget_kind;
    std::string gadget_base;
    int gadget_at = 0;
    int gadget_k = 3;
    auto* gen_gadget = gen->add_subcommand("gadget", "attach a gadget to a base graph");
    gen_gadget->add_option("--kind", gadget_kind, "o1 o2 o3 k12 k13 spider k14-1 ... k14-7")->required();
    gen_gadget->add_option("--base", gadget_base, "base graph in graph6")->required();
    gen_gadget->add_option("--at", gadget_at, "attachment vertex")->required();
    gen_gadget->add_option("--k", gadget_k, "leg or edge count for o3, spider and k14-6");

    std::string suite_name;
    harness::SuiteOptions suite_opts;
    bool timing = false;
    bool list_suites = false;
    auto* verify = app.add_subcommand("verify", "run a named verification suite, or all of them");
    verify->add_option("suite", suite_name, "suite name or 'all'");
    verify->add_option("--max-n", suite_opts.max_n, "largest order (suite default if omitted)")->check(CLI::Range(1, 40));
    verify->add_option("--trials", suite_opts.trials, "random trials (suite default if omitted)")->check(CLI::Range(1, 1000000));
    verify->add_option("--seed", suite_opts.seed, "random seed");
    verify->add_flag("--timing", timing, "include wall time in JSON reports");
    verify->add_flag("--list", list_suites, "list suites and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (isa == "scalar") {
        kernels::set_isa(kernels::Isa::Scalar);
    } else if (isa == "avx2") {
        kernels::set_isa(kernels::Isa::Avx2);
    }

    try {
        if (*solve) {
            return for_each_graph(g, solve_in, [&](const std::string& text, const Graph& graph) {
                const auto outcome = gamma(graph, {}, g.brute_cap);
                json j{{"graph6", text}, {"order", graph.order()}, {"gamma", *outcome.weight},
                       {"witness", outcome.witness->to_string()}};
                std::string human = text + "\tgamma=" + std::to_string(*outcome.weight) +
                                    "\twitness=" + outcome.witness->to_string();
                if (want_wzero) {
                    const auto zero = w_zero(graph, g.brute_cap);
                    j["w_zero"] = zero;
                    human += "\tw_zero=" + join(zero);
                }
                if (want_indep) {
                    const int i = independent_domination(graph, g.brute_cap);
                    j["independent_domination"] = i;
                    human += "\ti=" + std::to_string(i);
                }
                if (want_functions) {
                    json list = json::array();
                    for (const auto& f : enumerate_min_functions(graph, g.enum_cap)) {
                        list.push_back(f.to_string());
                    }
                    j["min_functions"] = list;
                    human += "\tfunctions=" + std::to_string(list.size());
                    for (const auto& f : list) {
                        human += " " + f.get<std::string>();
                    }
                }
                std::cout << (g.json_out ? j.dump() : human) << '\n';
            });
        }
        if (*classify) {
            return for_each_graph(g, classify_in, [&](const std::string& text, const Graph& graph) {
                const bool stable = is_stable(graph, g.brute_cap);
                json j{{"graph6", text}, {"order", graph.order()}, {"stable", stable}};
                std::string human = text + "\tstable=" + (stable ? "yes" : "no");
                if (!is_tree(graph)) {
                    j["tree_checks"] = "skipped: not a tree";
                    human += "\ttree checks skipped: not a tree";
                } else {
                    if (graph.size() > 0) {
                        const bool er = is_er_critical(graph, g.brute_cap);
                        j["er_critical"] = er;
                        human += std::string("\ter_critical=") + (er ? "yes" : "no");
                    } else {
                        j["er_critical"] = nullptr;
                        human += "\ter_critical=n/a";
                    }
                    if (graph.order() >= 3) {
                        const auto t = recognize_family_T(graph, g.brute_cap);
                        if (t.accepted()) {
                            j["in_T"] = {{"certificate", to_json(*t.certificate)}, {"vertex_map", t.vertex_map}};
                            human += "\tin_T=yes certificate=" + to_json(*t.certificate).dump();
                        } else {
                            j["in_T"] = {{"rejection", t.rejection}};
                            human += "\tin_T=no (" + t.rejection + ")";
                        }
                        const auto f = recognize_family_F(graph);
                        if (f.accepted()) {
                            j["in_F"] = {{"preimage", emit_graph6(f.preimage->preimage)},
                                         {"originals", f.preimage->originals},
                                         {"subdivision_vertices", f.preimage->subdivision_vertices}};
                            human += "\tin_F=yes preimage=" + emit_graph6(f.preimage->preimage);
                        } else {
                            j["in_F"] = {{"rejection", f.rejection}};
                            human += "\tin_F=no (" + f.rejection + ")";
                        }
                    } else {
                        j["in_T"] = {{"rejection", "order below 3"}};
                        j["in_F"] = {{"rejection", "order below 3"}};
                        human += "\tin_T=no\tin_F=no";
                    }
                }
                std::cout << (g.json_out ? j.dump() : human) << '\n';
            });
        }
        if (*profile) {
            if (!by_vertices && !by_edges) {
                std::cerr << "profile: choose --vertices or --edges\n";
                return kExitUsage;
            }
            return for_each_graph(g, profile_in, [&](const std::string& text, const Graph& graph) {
                json j;
                std::string human;
                if (by_vertices) {
                    const auto p = vertex_removal_profile(graph, g.brute_cap);
                    j = to_json(p);
                    human = to_report(p);
                } else {
                    const auto p = edge_removal_profile(graph, g.brute_cap);
                    j = to_json(p);
                    human = to_report(p);
                }
                j["graph6"] = text;
                if (g.json_out) {
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << "# " << text << '\n' << human;
                }
            });
        }
        if (*gen) {
            if (*gen_trees) {
                FreeTreeEnumerator e(gen_n);
                while (auto t = e.next()) {
                    std::cout << emit_graph6(*t) << '\n';
                }
            } else if (*gen_spider) {
                std::cout << emit_graph6(build_spider(spider_k)) << '\n';
            } else {
                const Graph base = parse_graph6(gadget_base);
                if (!base.contains(gadget_at)) {
                    std::cerr << "gen gadget: --at " << gadget_at << " is not a vertex of the base graph\n";
                    return kExitUsage;
                }
                const auto kind = GadgetKind::parse(gadget_kind, gadget_k);
                std::cout << emit_graph6(attach_gadget(base, gadget_at, kind).graph) << '\n';
            }
            std::cout.flush();
            return kExitOk;
        }
        if (*verify) {
            if (list_suites) {
                for (const auto& s : harness::suites()) {
                    std::cout << s.name << "\t" << s.description << '\n';
                }
                return kExitOk;
            }
            if (suite_name.empty()) {
                std::cerr << "verify: name a suite or 'all' (see verify --list)\n";
                return kExitUsage;
            }
            std::vector<const harness::SuiteEntry*> chosen;
            if (suite_name == "all") {
                for (const auto& s : harness::suites()) {
                    chosen.push_back(&s);
                }
            } else if (const auto* s = harness::find_suite(suite_name)) {
                chosen.push_back(s);
            } else {
                std::cerr << "verify: unknown suite '" << suite_name << "' (see verify --list)\n";
                return kExitUsage;
            }
            suite_opts.brute_cap = g.brute_cap;
            suite_opts.enum_cap = g.enum_cap;
            std::vector<harness::SuiteReport> reports;
            bool failed = false;
            for (const auto* s : chosen) {
                reports.push_back(s->run(suite_opts));
                const auto& r = reports.back();
                failed = failed || !r.passed();
                if (g.json_out) {
                    std::cout << harness::to_json(r, timing).dump() << '\n';
                } else {
                    std::cout << harness::to_text(r);
                }
                std::cout.flush();
            }
            std::cerr << harness::summary_table(reports);
            return failed ? kExitVerification : kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
