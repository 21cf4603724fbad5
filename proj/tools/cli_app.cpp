#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cpow/checks.hpp"
#include "cpow/complex.hpp"
#include "cpow/errors.hpp"
#include "cpow/families.hpp"
#include "cpow/graph.hpp"
#include "cpow/homology.hpp"
#include "cpow/io.hpp"

namespace cpw::cli {

namespace {

constexpr const char* kCheckIds =
    "table, cycle-independence, girth-collapse, suspension, window, star-cluster, "
    "square, total-line, universality, distance, h1, predictions";

std::int64_t face_budget() {
    const char* env = std::getenv("CLIQUEPOWER_MAX_FACES");
    if (!env || !*env) return kDefaultFaceLimit;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v <= 0)
        throw std::invalid_argument(
            "CLIQUEPOWER_MAX_FACES must be a positive integer, got \"" + std::string(env) + "\"");
    return v;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": expected an integer, got \"" + s + "\"");
    }
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": expected a number, got \"" + s + "\"");
    }
}

std::uint64_t to_seed(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": expected a seed, got \"" + s + "\"");
    }
}

// "3..20" or "7"
std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        int v = to_int(s, what);
        return {v, v};
    }
    int lo = to_int(s.substr(0, dots), what);
    int hi = to_int(s.substr(dots + 2), what);
    if (lo > hi) throw std::invalid_argument(what + ": empty range \"" + s + "\"");
    return {lo, hi};
}

cpw::SimplicialComplex base_complex(const std::string& name) {
    using cpw::SimplicialComplex;
    if (name == "triangle") return SimplicialComplex::full_simplex(3);
    if (name == "triangle-boundary") return SimplicialComplex::simplex_boundary(3);
    if (name == "tetrahedron-boundary") return SimplicialComplex::simplex_boundary(4);
    if (name == "two-circles") {
        std::vector<cpw::Face> faces = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
        return SimplicialComplex::from_faces(6, faces);
    }
    throw std::invalid_argument(
        "unknown base complex \"" + name +
        "\" (known: triangle, triangle-boundary, tetrahedron-boundary, two-circles)");
}

struct SourcedGraph {
    cpw::Graph graph;
    std::vector<std::string> meta;
};

cpw::Graph graph_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open \"" + path + "\"");
    return cpw::read_edge_list(f);
}

// family spec = name followed by its parameters, e.g. {"cycle", "9"};
// line/subdiv/total transform the --input graph instead of taking numbers
SourcedGraph resolve_graph(const std::vector<std::string>& family, const std::string& input,
                           std::int64_t max_faces) {
    using namespace cpw;
    if (family.empty()) {
        if (input.empty())
            throw std::invalid_argument("no graph given: use --family or --input");
        return {graph_from_file(input), {"input: " + input}};
    }
    const std::string& name = family[0];
    std::vector<std::string> a(family.begin() + 1, family.end());
    auto want = [&](std::size_t c, const std::string& usage) {
        if (a.size() != c)
            throw std::invalid_argument("family " + name + " expects: " + usage);
    };
    std::string meta = "family:";
    for (const std::string& part : family) meta += " " + part;
    SourcedGraph out;
    out.meta = {meta};

    bool derived = name == "line" || name == "subdiv" || name == "total";
    if (derived) {
        want(0, name + " --input FILE");
        if (input.empty())
            throw std::invalid_argument("family " + name + " needs --input FILE");
        Graph base = graph_from_file(input);
        out.meta.push_back("input: " + input);
        if (name == "line") out.graph = line_graph(base);
        else if (name == "subdiv") out.graph = subdivision(base).graph;
        else out.graph = total_graph(base).graph;
        return out;
    }
    if (!input.empty())
        throw std::invalid_argument("family " + name + " does not take --input");

    if (name == "cycle") {
        want(1, "cycle N");
        out.graph = cycle_graph(to_int(a[0], "cycle N"));
    } else if (name == "path") {
        want(1, "path N");
        out.graph = path_graph(to_int(a[0], "path N"));
    } else if (name == "complete") {
        want(1, "complete N");
        out.graph = complete_graph(to_int(a[0], "complete N"));
    } else if (name == "circular") {
        want(2, "circular N K");
        out.graph = circular_complete(to_int(a[0], "circular N"), to_int(a[1], "circular K"));
    } else if (name == "sgraph") {
        want(2, "sgraph N K");
        out.graph = s_graph(to_int(a[0], "sgraph N"), to_int(a[1], "sgraph K")).graph;
    } else if (name == "threesun") {
        want(0, "threesun");
        out.graph = three_sun();
    } else if (name == "kneser") {
        want(2, "kneser N K");
        out.graph = stable_kneser(to_int(a[0], "kneser N"), to_int(a[1], "kneser K")).graph;
    } else if (name == "gss") {
        want(2, "gss BASE S");
        out.graph = subdivided_skeleton(base_complex(a[0]), to_int(a[1], "gss S"), max_faces).graph;
    } else if (name == "random") {
        want(3, "random N P SEED");
        out.graph = random_graph(to_int(a[0], "random N"), to_double(a[1], "random P"),
                                 to_seed(a[2], "random SEED"));
        out.meta.push_back("prng: mt19937_64");
        out.meta.push_back("seed: " + a[2]);
    } else if (name == "tree") {
        want(2, "tree N SEED");
        out.graph = random_tree(to_int(a[0], "tree N"), to_seed(a[1], "tree SEED"));
        out.meta.push_back("prng: mt19937_64");
        out.meta.push_back("seed: " + a[1]);
    } else {
        throw std::invalid_argument(
            "unknown family \"" + name +
            "\" (known: cycle, path, complete, circular, sgraph, threesun, line, subdiv, "
            "total, kneser, gss, random, tree)");
    }
    return out;
}

// routes output to --output FILE when given, else to the session stream
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write \"" + path + "\"");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void print_profile(std::ostream& out, cpw::HomologyProfile p) {
    p.normalize();
    if (p.betti_minus_one != 0) out << "betti[-1] " << p.betti_minus_one << "\n";
    out << "betti [";
    for (std::size_t i = 0; i < p.betti.size(); ++i) out << (i ? "," : "") << p.betti[i];
    out << "]\n";
    for (std::size_t d = 0; d < p.torsion.size(); ++d) {
        if (p.torsion[d].empty()) continue;
        out << "torsion d=" << d << " [";
        for (std::size_t i = 0; i < p.torsion[d].size(); ++i)
            out << (i ? "," : "") << p.torsion[d][i];
        out << "]\n";
    }
}

void print_reports(std::ostream& out, const std::vector<cpw::CheckReport>& reports,
                   const std::string& format) {
    if (format == "json") {
        out << cpw::reports_json(reports).dump(2) << "\n";
        return;
    }
    for (const cpw::CheckReport& r : reports)
        out << (r.pass ? "ok   " : "FAIL ") << r.id << " " << r.instance << " — " << r.detail
            << "\n";
    std::size_t passed = 0;
    for (const cpw::CheckReport& r : reports) passed += r.pass;
    out << passed << "/" << reports.size() << " checks passed\n";
}

bool all_pass(const std::vector<cpw::CheckReport>& reports) {
    for (const cpw::CheckReport& r : reports)
        if (!r.pass) return false;
    return !reports.empty();
}

cpw::TableTier parse_tier(const std::string& s) {
    if (s == "auto") return cpw::TableTier::automatic;
    if (s == "exact") return cpw::TableTier::exact;
    return cpw::TableTier::field;
}

// every (n, k) pair in the n-range for which the circulant family and its
// half graph both exist
template <typename Fn>
void for_each_circulant(std::pair<int, int> n_range, Fn&& fn) {
    for (int n = std::max(3, n_range.first); n <= n_range.second; ++n)
        for (int k = 1; k < n; ++k)
            if ((n - k - 1) % 2 == 0) fn(n, k);
}

struct CheckArgs {
    std::string id;
    std::string n_range = "3..18";
    std::string m_range = "3..21";
    std::vector<std::string> family;
    std::string input;
    std::string base;
    std::string format = "text";
    std::string output;
    std::string tier = "auto";
    int r = -1;
    int s = -1;
    int u = -1;
    int v = -1;
    int n_max = 60;
};

std::vector<cpw::CheckReport> run_check(const CheckArgs& ca, std::int64_t budget) {
    using namespace cpw;
    std::vector<CheckReport> reports;
    auto graph_name = [&]() {
        if (!ca.family.empty()) {
            std::string s = ca.family[0];
            for (std::size_t i = 1; i < ca.family.size(); ++i) s += " " + ca.family[i];
            return s;
        }
        return ca.input;
    };

    if (ca.id == "table") {
        auto [lo, hi] = parse_range(ca.n_range, "--n");
        for (const TableCell& c : validate_table(lo, hi, parse_tier(ca.tier), budget))
            reports.push_back(table_cell_report(c));
    } else if (ca.id == "cycle-independence") {
        auto [lo, hi] = parse_range(ca.m_range, "--m");
        for (int m = lo; m <= hi; ++m) reports.push_back(validate_cycle_independence(m));
    } else if (ca.id == "girth-collapse") {
        if (ca.r < 1) throw std::invalid_argument("girth-collapse needs --r >= 1");
        SourcedGraph src = resolve_graph(ca.family, ca.input, budget);
        reports.push_back(validate_girth_collapse(src.graph, ca.r, graph_name(), budget));
    } else if (ca.id == "suspension") {
        auto range = parse_range(ca.n_range, "--n");
        for_each_circulant(range, [&](int n, int k) {
            if (n >= 3 * k - 1 && n >= k + 3)
                reports.push_back(validate_suspension_circular(n, k, budget));
            if (n >= 3 * k + 3) reports.push_back(validate_suspension_sgraph(n, k, budget));
        });
    } else if (ca.id == "window") {
        auto range = parse_range(ca.n_range, "--n");
        for_each_circulant(range, [&](int n, int k) {
            if (n >= 3 * k - 1 && n >= k + 3)
                reports.push_back(validate_window_circular(n, k, budget));
            if (n >= 3 * k + 3) reports.push_back(validate_window_sgraph(n, k, budget));
        });
    } else if (ca.id == "star-cluster") {
        if (ca.v < 0) throw std::invalid_argument("star-cluster needs --v VERTEX");
        SourcedGraph src = resolve_graph(ca.family, ca.input, budget);
        reports.push_back(validate_star_cluster(src.graph, ca.v, graph_name(), budget));
    } else if (ca.id == "square") {
        SourcedGraph src = resolve_graph(ca.family, ca.input, budget);
        reports.push_back(validate_square_equivalence(src.graph, graph_name(), budget));
    } else if (ca.id == "total-line") {
        SourcedGraph src = resolve_graph(ca.family, ca.input, budget);
        reports.push_back(validate_total_and_line(src.graph, graph_name(), budget));
    } else if (ca.id == "universality") {
        if (ca.base.empty() || ca.s < 0 || ca.r < 0)
            throw std::invalid_argument("universality needs --base, --s and --r");
        reports.push_back(validate_universality(base_complex(ca.base), ca.s, ca.r, ca.base, budget));
    } else if (ca.id == "distance") {
        if (ca.base.empty() || ca.s < 0 || ca.u < 0 || ca.v < 0)
            throw std::invalid_argument("distance needs --base, --s, --u and --v");
        reports.push_back(validate_distance(base_complex(ca.base), ca.s, ca.u, ca.v, ca.base, budget));
    } else if (ca.id == "h1") {
        if (ca.r < 1) throw std::invalid_argument("h1 needs --r >= 1");
        SourcedGraph src = resolve_graph(ca.family, ca.input, budget);
        reports.push_back(validate_h1_surjectivity(src.graph, ca.r, graph_name(), budget));
    } else if (ca.id == "predictions") {
        reports.push_back(validate_prediction_consistency(ca.n_max));
    } else {
        throw std::invalid_argument("unknown check \"" + ca.id + "\" (known: " + kCheckIds + ")");
    }
    return reports;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"clique complexes of graph powers: generators, homology, validators"};
    app.name("cliquepower");
    app.require_subcommand(1);

    // gen
    std::vector<std::string> gen_family;
    std::string gen_input, gen_output;
    CLI::App* gen = app.add_subcommand("gen", "write a graph as an edge list");
    gen->add_option("family", gen_family, "family name and parameters, e.g. cycle 9")
        ->required()
        ->expected(-1);
    gen->add_option("--input", gen_input, "edge-list file for line/subdiv/total");
    gen->add_option("--output", gen_output, "write here instead of stdout");

    // power
    std::vector<std::string> pow_family;
    std::string pow_input, pow_output;
    int pow_r = 1;
    CLI::App* pow = app.add_subcommand("power", "write the r-th power of a graph");
    pow->add_option("--family", pow_family, "family name and parameters")->expected(-1);
    pow->add_option("--input", pow_input, "edge-list file");
    pow->add_option("--r", pow_r, "power (default 1)");
    pow->add_option("--output", pow_output, "write here instead of stdout");

    // complex
    std::vector<std::string> cx_family;
    std::string cx_input, cx_output, cx_kind = "clique", cx_format = "text";
    int cx_r = 1;
    CLI::App* cx = app.add_subcommand("complex", "write the clique or independence complex");
    cx->add_option("--family", cx_family, "family name and parameters")->expected(-1);
    cx->add_option("--input", cx_input, "edge-list file");
    cx->add_option("--power", cx_r, "graph power before the complex (default 1)");
    cx->add_option("--complex", cx_kind, "clique or independence")
        ->check(CLI::IsMember({"clique", "independence"}));
    cx->add_option("--format", cx_format, "text (facet list) or json")
        ->check(CLI::IsMember({"text", "json"}));
    cx->add_option("--output", cx_output, "write here instead of stdout");

    // homology
    std::vector<std::string> ho_family;
    std::string ho_input, ho_output, ho_kind = "clique", ho_format = "text";
    int ho_r = 1;
    CLI::App* ho = app.add_subcommand("homology", "integer homology of the complex");
    ho->add_option("--family", ho_family, "family name and parameters")->expected(-1);
    ho->add_option("--input", ho_input, "edge-list file");
    ho->add_option("--power", ho_r, "graph power before the complex (default 1)");
    ho->add_option("--complex", ho_kind, "clique or independence")
        ->check(CLI::IsMember({"clique", "independence"}));
    ho->add_option("--format", ho_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    ho->add_option("--output", ho_output, "write here instead of stdout");

    // check
    CheckArgs ca;
    CLI::App* ck = app.add_subcommand("check", "run a validator");
    ck->add_option("id", ca.id, std::string("one of: ") + kCheckIds)->required();
    ck->add_option("--n", ca.n_range, "cycle/circulant size range, e.g. 3..20");
    ck->add_option("--m", ca.m_range, "cycle length range for cycle-independence");
    ck->add_option("--family", ca.family, "family name and parameters")->expected(-1);
    ck->add_option("--input", ca.input, "edge-list file");
    ck->add_option("--base", ca.base,
                   "base complex: triangle, triangle-boundary, tetrahedron-boundary, two-circles");
    ck->add_option("--r", ca.r, "power parameter");
    ck->add_option("--s", ca.s, "subdivision rounds");
    ck->add_option("--u", ca.u, "first edge endpoint (distance)");
    ck->add_option("--v", ca.v, "vertex (star-cluster) / second endpoint (distance)");
    ck->add_option("--n-max", ca.n_max, "bound for predictions (default 60)");
    ck->add_option("--tier", ca.tier, "table tier: auto, exact or field")
        ->check(CLI::IsMember({"auto", "exact", "field"}));
    ck->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    ck->add_option("--output", ca.output, "write here instead of stdout");

    // table
    int tb_nmax = 0, tb_nmin = 3;
    std::string tb_format = "markdown", tb_tier = "auto", tb_output;
    bool tb_predict_only = false;
    CLI::App* tb = app.add_subcommand("table", "homotopy-type chart of cycle powers");
    tb->add_option("n_max", tb_nmax, "largest cycle length")->required();
    tb->add_option("--n-min", tb_nmin, "smallest cycle length (default 3)");
    tb->add_option("--format", tb_format, "markdown, csv or json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
    tb->add_option("--tier", tb_tier, "auto, exact or field")
        ->check(CLI::IsMember({"auto", "exact", "field"}));
    tb->add_flag("--no-verify", tb_predict_only,
                 "predictions only, skip homology (markdown format only)");
    tb->add_option("--output", tb_output, "write here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        std::int64_t budget = face_budget();

        if (*gen) {
            SourcedGraph src = resolve_graph(gen_family, gen_input, budget);
            OutputTarget target(gen_output, out);
            cpw::write_edge_list(target.get(), src.graph, src.meta);
            return 0;
        }
        if (*pow) {
            if (pow_r < 0) throw std::invalid_argument("power needs --r >= 0");
            SourcedGraph src = resolve_graph(pow_family, pow_input, budget);
            src.meta.push_back("power: " + std::to_string(pow_r));
            OutputTarget target(pow_output, out);
            cpw::write_edge_list(target.get(), cpw::power(src.graph, pow_r), src.meta);
            return 0;
        }
        if (*cx) {
            if (cx_r < 0) throw std::invalid_argument("complex needs --power >= 0");
            SourcedGraph src = resolve_graph(cx_family, cx_input, budget);
            cpw::Graph g = cpw::power(src.graph, cx_r);
            cpw::SimplicialComplex k = cx_kind == "clique"
                                           ? cpw::clique_complex(g, std::nullopt, budget)
                                           : cpw::independence_complex(g, std::nullopt, budget);
            OutputTarget target(cx_output, out);
            if (cx_format == "json") target.get() << cpw::complex_json(k).dump(2) << "\n";
            else cpw::write_facet_list(target.get(), k);
            return 0;
        }
        if (*ho) {
            if (ho_r < 0) throw std::invalid_argument("homology needs --power >= 0");
            SourcedGraph src = resolve_graph(ho_family, ho_input, budget);
            cpw::Graph g = cpw::power(src.graph, ho_r);
            cpw::SimplicialComplex k = ho_kind == "clique"
                                           ? cpw::clique_complex(g, std::nullopt, budget)
                                           : cpw::independence_complex(g, std::nullopt, budget);
            cpw::HomologyProfile p = cpw::integer_homology(k, {budget, false});
            OutputTarget target(ho_output, out);
            if (ho_format == "json") target.get() << cpw::profile_json(p).dump(2) << "\n";
            else print_profile(target.get(), p);
            return 0;
        }
        if (*ck) {
            std::vector<cpw::CheckReport> reports = run_check(ca, budget);
            OutputTarget target(ca.output, out);
            print_reports(target.get(), reports, ca.format);
            return all_pass(reports) ? 0 : 1;
        }
        if (*tb) {
            if (tb_nmax < 3 || tb_nmin < 3 || tb_nmin > tb_nmax)
                throw std::invalid_argument("table needs 3 <= --n-min <= n_max");
            OutputTarget target(tb_output, out);
            if (tb_predict_only) {
                if (tb_format != "markdown")
                    throw std::invalid_argument("--no-verify only supports markdown output");
                std::vector<cpw::TableCell> cells;
                for (int n = tb_nmin; n <= tb_nmax; ++n)
                    for (int r = 0; r <= n / 2; ++r)
                        cells.push_back({n, r, cpw::predict_clique_cycle_power(n, r),
                                         cpw::TableTier::exact, false, ""});
                cpw::table_markdown(target.get(), cells, false);
                return 0;
            }
            std::vector<cpw::TableCell> cells =
                cpw::validate_table(tb_nmin, tb_nmax, parse_tier(tb_tier), budget);
            if (tb_format == "json") target.get() << cpw::table_json(cells).dump(2) << "\n";
            else if (tb_format == "csv") cpw::table_csv(target.get(), cells);
            else cpw::table_markdown(target.get(), cells, true);
            for (const cpw::TableCell& c : cells)
                if (!c.verified) return 1;
            return 0;
        }
    } catch (const cpw::face_limit_error& e) {
        err << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cpw::cli
