#include "cpow/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

#include "cpow/errors.hpp"
#include "cpow/morse.hpp"

namespace cpw {

namespace {

std::string face_text(std::span<const Vertex> f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f[i]);
    }
    return out + "}";
}

std::string field_betti_text(const FieldBetti& fb) {
    FieldBetti b = fb;
    b.normalize();
    std::string out = "b[-1]=" + std::to_string(b.betti_minus_one) + " b=[";
    for (std::size_t i = 0; i < b.betti.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b.betti[i]);
    }
    return out + "]";
}

std::string flag_text(const char* label, bool v) {
    return std::string(label) + "=" + (v ? "yes" : "no");
}

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a,
                                        const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> sorted_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> sorted_difference(const std::vector<Vertex>& a,
                                      const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Faces of k that survive `keep`, nonempty ones only, in canonical order.
template <typename Pred>
std::vector<Face> filter_faces(const SimplicialComplex& k, Pred keep) {
    std::vector<Face> out;
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            if (keep(f)) out.emplace_back(f.begin(), f.end());
        }
    return out;
}

} // namespace

WedgePrediction predict_clique_cycle_power(int n, int r) {
    if (n < 3 || r < 0)
        throw std::invalid_argument("predict_clique_cycle_power: need n >= 3 and r >= 0");
    if (2 * r >= n) return WedgePrediction::contractible();
    long long l = r / (n - 2 * r);
    if (static_cast<long long>(r) * (2 * l + 1) == l * n)
        return WedgePrediction::wedge(static_cast<int>(2 * l), n - 2 * r - 1);
    return WedgePrediction::sphere(static_cast<int>(2 * l + 1));
}

WedgePrediction predict_ind_circular(int n, int k) {
    if (n < 2 || k < 0 || k > n - 1)
        throw std::invalid_argument("predict_ind_circular: need n >= 2 and 0 <= k <= n-1");
    if ((n - k - 1) % 2 != 0)
        throw std::invalid_argument("predict_ind_circular: n and k must have opposite parity");
    int r = (n - k - 1) / 2;
    int l = r / (k + 1);
    if (r % (k + 1) == 0) return WedgePrediction::wedge(2 * l, k);
    return WedgePrediction::sphere(2 * l + 1);
}

SquareCondition check_square_condition(const Graph& g) {
    Graph g2 = power(g, 2);
    for (const Face& c : maximal_cliques(g2)) {
        bool dominated = false;
        for (Vertex v = 0; v < g.vertex_count() && !dominated; ++v) {
            bool inside = true;
            for (Vertex x : c)
                if (x != v && !g.adjacent(v, x)) {
                    inside = false;
                    break;
                }
            dominated = inside;
        }
        if (!dominated) return {false, c};
    }
    return {true, {}};
}

SimplicialComplex star_cluster(const Graph& g, Vertex v, std::int64_t max_faces) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("star_cluster: vertex out of range");
    const auto& nv = g.neighbors(v);
    if (nv.empty()) throw std::invalid_argument("star_cluster: vertex is isolated");
    for (std::size_t i = 0; i < nv.size(); ++i)
        for (std::size_t j = i + 1; j < nv.size(); ++j)
            if (g.adjacent(nv[i], nv[j]))
                throw std::invalid_argument("star_cluster: vertex lies in a triangle");

    // candidate vertices: neither v nor adjacent to it
    std::vector<Vertex> u;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (x != v && !g.adjacent(v, x)) u.push_back(x);

    InducedSubgraph sub = induced(g, u);
    SimplicialComplex ind = independence_complex(sub.graph, std::nullopt, max_faces);

    // keep the faces missing the whole neighborhood of some neighbor of v
    std::vector<Face> kept;
    for (int d = 0; d <= ind.dim(); ++d)
        for (int i = 0; i < ind.level_size(d); ++i) {
            auto f = ind.face(d, i);
            Face orig(f.size());
            for (std::size_t t = 0; t < f.size(); ++t) orig[t] = sub.original[f[t]];
            bool ok = false;
            for (Vertex w : nv) {
                bool meets = false;
                for (Vertex x : orig)
                    if (g.adjacent(w, x)) {
                        meets = true;
                        break;
                    }
                if (!meets) {
                    ok = true;
                    break;
                }
            }
            if (ok) kept.push_back(std::move(orig));
        }
    return SimplicialComplex::from_faces(g.vertex_count(), kept, /*close_downward=*/false);
}

WindowExtension window_edge_extension(const Graph& g, std::span<const Vertex> seq,
                                      std::int64_t max_faces) {
    if (seq.size() % 2 != 0)
        throw std::invalid_argument("window_edge_extension: sequence length must be even");
    int d = static_cast<int>(seq.size()) / 2;
    for (Vertex v : seq)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("window_edge_extension: vertex out of range");
    for (int s = 0; s + d < 2 * d; ++s)
        for (int i = s; i <= s + d; ++i)
            for (int j = i + 1; j <= s + d; ++j)
                if (seq[i] == seq[j])
                    throw std::invalid_argument(
                        "window_edge_extension: repeated vertex inside a window");

    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < d; ++i)
        for (int j = d; j < 2 * d; ++j)
            if (j - i <= d) {
                Vertex a = seq[i], b = seq[j];
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
    WindowExtension out{Graph(g.vertex_count(), edges), SimplicialComplex(), false, 0};

    SimplicialComplex ind = independence_complex(g, std::nullopt, max_faces);
    std::vector<Face> kept = filter_faces(ind, [&](std::span<const Vertex> f) {
        for (int s = 0; s <= d; ++s) {
            bool hit = false;
            for (int t = s; t < s + d && !hit; ++t)
                hit = std::binary_search(f.begin(), f.end(), seq[t]);
            if (!hit) return true;
        }
        return false;
    });
    out.window_complex =
        SimplicialComplex::from_faces(g.vertex_count(), kept, /*close_downward=*/false);
    out.window_face_count = out.window_complex.face_count();
    out.faces_equal =
        out.window_complex == independence_complex(out.extended, std::nullopt, max_faces);
    return out;
}

std::int64_t triangle_count(const Graph& g) {
    std::int64_t t = 0;
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbors(u))
            if (w > v && g.adjacent(v, w)) ++t;
    return t;
}

TableCell validate_table_cell(int n, int r, TableTier tier, std::int64_t max_faces) {
    TableCell cell;
    cell.n = n;
    cell.r = r;
    cell.predicted = predict_clique_cycle_power(n, r);
    cell.tier = tier == TableTier::automatic ? (n <= 20 ? TableTier::exact : TableTier::field)
                                             : tier;
    Graph p = power(cycle_graph(n), r);
    if (cell.tier == TableTier::exact) {
        // a vertex adjacent to everything makes the clique complex a cone
        // over its deletion, so the homology is trivial without enumeration
        bool cone = false;
        for (Vertex v = 0; v < n && !cone; ++v) cone = p.degree(v) == n - 1;
        HomologyProfile prof;
        if (cone) {
            cell.computed = "cone (dominating vertex)";
        } else {
            prof = integer_homology(clique_complex(p, std::nullopt, max_faces), {max_faces});
            cell.computed = prof.to_string();
        }
        cell.verified = matches_wedge(prof, cell.predicted);
    } else {
        FieldBettiPair fb = clique_field_betti(p, 2, max_faces);
        FieldBetti shadow = rational_shadow(cell.predicted.profile());
        cell.verified =
            equal_field_betti(fb.rational, shadow) && equal_field_betti(fb.mod_p, shadow);
        cell.computed = "Q: " + field_betti_text(fb.rational) + "; F2: " + field_betti_text(fb.mod_p);
    }
    return cell;
}

std::vector<TableCell> validate_table(int n_min, int n_max, TableTier tier,
                                      std::int64_t max_faces) {
    if (n_min < 3 || n_max < n_min)
        throw std::invalid_argument("validate_table: need 3 <= n_min <= n_max");
    std::vector<TableCell> out;
    for (int n = n_min; n <= n_max; ++n)
        for (int r = 0; r <= n / 2; ++r) out.push_back(validate_table_cell(n, r, tier, max_faces));
    return out;
}

CheckReport table_cell_report(const TableCell& cell) {
    CheckReport rep;
    rep.id = "table";
    rep.instance = "n=" + std::to_string(cell.n) + " r=" + std::to_string(cell.r);
    rep.pass = cell.verified;
    rep.detail = "predicted " + cell.predicted.to_string() + "; computed " + cell.computed +
                 (cell.tier == TableTier::exact ? " [exact]" : " [field]");
    return rep;
}

CheckReport validate_cycle_independence(int m) {
    if (m < 3) throw std::invalid_argument("validate_cycle_independence: need m >= 3");
    int q = m / 3;
    WedgePrediction expected;
    switch (m % 3) {
        case 0: expected = WedgePrediction::wedge(q - 1, 2); break;
        case 1: expected = WedgePrediction::sphere(q - 1); break;
        default: expected = WedgePrediction::sphere(q); break;
    }
    HomologyProfile prof = integer_homology(independence_complex(cycle_graph(m)));
    CheckReport rep;
    rep.id = "cycle-independence";
    rep.instance = "m=" + std::to_string(m);
    rep.pass = matches_wedge(prof, expected);
    rep.detail = "expected " + expected.to_string() + "; computed " + prof.to_string();
    return rep;
}

CheckReport validate_girth_collapse(const Graph& g, int r, const std::string& name,
                                    std::int64_t max_faces) {
    if (r < 1) throw std::invalid_argument("validate_girth_collapse: need r >= 1");
    if (auto c = girth(g); c && *c <= 3 * r)
        throw std::invalid_argument("validate_girth_collapse: girth must exceed 3r");
    CheckReport rep;
    rep.id = "girth-collapse";
    rep.instance = name + " r=" + std::to_string(r);
    rep.pass = true;
    for (int k = 2; k <= r; ++k) {
        SimplicialComplex big = clique_complex(power(g, k), std::nullopt, max_faces);
        SimplicialComplex small = clique_complex(power(g, k - 1), std::nullopt, max_faces);
        Matching m = girth_matching(g, k);
        MatchingCheck mc = verify_matching(big, m);
        bool crit = mc.ok && critical_faces(big, m) == all_faces(small);
        bool coll = elementary_collapse(big, small).collapsed;
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += "k=" + std::to_string(k) + ": " + std::to_string(m.pairs.size()) +
                      " pairs, " + flag_text("acyclic", mc.ok) + ", " +
                      flag_text("critical=lower", crit) + ", " + flag_text("collapse", coll);
        if (!mc.ok) rep.detail += " (" + mc.message + ")";
        rep.pass = rep.pass && mc.ok && crit && coll;
    }
    if (r == 1) rep.detail = "no steps (r=1)";
    return rep;
}

CheckReport validate_suspension_circular(int n, int k, std::int64_t max_faces) {
    if (n < 3 * k - 1)
        throw std::invalid_argument("validate_suspension_circular: need n >= 3k-1");
    Graph t = circular_complete(n, k);
    SGraph s = s_graph(n, k);
    HomologyProfile big = integer_homology(independence_complex(t, std::nullopt, max_faces));
    HomologyProfile half = integer_homology(independence_complex(s.graph, std::nullopt, max_faces));
    CheckReport rep;
    rep.id = "suspension-circulant";
    rep.instance = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    rep.pass = equal_profiles(big, half.suspended());
    rep.detail = "circulant " + big.to_string() + "; shifted half " + half.suspended().to_string();
    return rep;
}

CheckReport validate_suspension_sgraph(int n, int k, std::int64_t max_faces) {
    if (n < 3 * k + 3)
        throw std::invalid_argument("validate_suspension_sgraph: need n >= 3k+3");
    SGraph s = s_graph(n, k);
    Graph t = circular_complete(n - 2 * (k + 1), k);
    HomologyProfile big = integer_homology(independence_complex(s.graph, std::nullopt, max_faces));
    HomologyProfile half = integer_homology(independence_complex(t, std::nullopt, max_faces));
    CheckReport rep;
    rep.id = "suspension-sgraph";
    rep.instance = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    rep.pass = equal_profiles(big, half.suspended());
    rep.detail = "half " + big.to_string() + "; shifted smaller circulant " +
                 half.suspended().to_string();
    return rep;
}

CheckReport validate_star_cluster(const Graph& g, Vertex v, const std::string& name,
                                  std::int64_t max_faces) {
    SimplicialComplex cluster = star_cluster(g, v, max_faces);
    SimplicialComplex ind = independence_complex(g, std::nullopt, max_faces);
    bool sub_ok = true;
    for (int d = 0; d <= cluster.dim() && sub_ok; ++d)
        for (int i = 0; i < cluster.level_size(d) && sub_ok; ++i) {
            auto f = cluster.face(d, i);
            sub_ok = !std::binary_search(f.begin(), f.end(), v) && ind.contains(f);
        }
    HomologyProfile whole = integer_homology(ind);
    HomologyProfile part = integer_homology(cluster);
    CheckReport rep;
    rep.id = "star-cluster";
    rep.instance = name + " v=" + std::to_string(v);
    rep.pass = sub_ok && equal_profiles(whole, part.suspended());
    rep.detail = flag_text("subcomplex", sub_ok) + "; independence " + whole.to_string() +
                 "; shifted cluster " + part.suspended().to_string();
    return rep;
}

namespace {

// Shared tail of the two window validators: the window complex of the
// induced construction must coincide with the star cluster restricted to
// the candidate vertices, and the extended graph must be the expected one
// after relabeling.
CheckReport window_report(const std::string& id, const std::string& instance,
                          const WindowExtension& wx, const SimplicialComplex& cluster,
                          const std::vector<Vertex>& selected, const Graph& relabeled,
                          const Graph& expected) {
    InducedComplex restricted = induced_subcomplex(cluster, selected);
    bool cluster_match = restricted.complex == wx.window_complex &&
                         restricted.complex.face_count() == cluster.face_count();
    bool graph_match = relabeled == expected;
    CheckReport rep;
    rep.id = id;
    rep.instance = instance;
    rep.pass = wx.faces_equal && cluster_match && graph_match;
    rep.detail = std::to_string(wx.window_face_count) + " window faces; " +
                 flag_text("faces=extended-independence", wx.faces_equal) + "; " +
                 flag_text("window=star-cluster", cluster_match) + "; " +
                 flag_text("extended-graph-identified", graph_match);
    return rep;
}

} // namespace

CheckReport validate_window_circular(int n, int k, std::int64_t max_faces) {
    if (n < 3 * k - 1)
        throw std::invalid_argument("validate_window_circular: need n >= 3k-1");
    Graph t = circular_complete(n, k);
    int r = CircularParams{n, k}.r();
    SGraph s = s_graph(n, k); // also enforces r >= 1

    // candidates around vertex 0 carry signed labels -r..-1, 1..r; label
    // l sits at host vertex l or n+l, and at position l-1 or l+2r of the
    // sorted candidate list
    std::vector<Vertex> selected;
    for (int x = 1; x <= r; ++x) selected.push_back(x);
    for (int x = n - r; x <= n - 1; ++x) selected.push_back(x);
    InducedSubgraph sub = induced(t, selected);

    std::vector<Vertex> seq;
    for (int l = -(k - 1); l <= -1; ++l) seq.push_back(l + 2 * r);
    for (int l = 1; l <= k - 1; ++l) seq.push_back(l - 1);
    WindowExtension wx = window_edge_extension(sub.graph, seq, max_faces);

    // line the extension up with the half graph label by label
    std::vector<Vertex> perm(2 * r);
    for (int i = 0; i < 2 * r; ++i) {
        int label = i < r ? i + 1 : i - 2 * r;
        perm[i] = label < 0 ? label + r : label + r - 1;
    }
    return window_report("window-circulant",
                         "n=" + std::to_string(n) + " k=" + std::to_string(k), wx,
                         star_cluster(t, 0, max_faces), selected, relabel(wx.extended, perm),
                         s.graph);
}

CheckReport validate_window_sgraph(int n, int k, std::int64_t max_faces) {
    if (n < 3 * k + 3)
        throw std::invalid_argument("validate_window_sgraph: need n >= 3k+3");
    SGraph s = s_graph(n, k);
    int r = CircularParams{n, k}.r();
    Vertex v = r - 1; // label -1

    // candidates: labels k..r-1 and -r..-2, i.e. positions k+r-1..2r-2 and
    // 0..r-2 of the half graph
    std::vector<Vertex> selected;
    for (int i = 0; i <= r - 2; ++i) selected.push_back(i);
    for (int i = k + r - 1; i <= 2 * r - 2; ++i) selected.push_back(i);
    InducedSubgraph sub = induced(s.graph, selected);

    // sequence -k..-2 then -r..-r+k-2, as positions of the induced graph:
    // label l < 0 sits at position l+r, label l > 0 at position l+r-1-k
    std::vector<Vertex> seq;
    for (int l = -k; l <= -2; ++l) seq.push_back(l + r);
    for (int l = -r; l <= -r + k - 2; ++l) seq.push_back(l + r);
    WindowExtension wx = window_edge_extension(sub.graph, seq, max_faces);

    // walking the surviving labels in cyclic order turns the extension
    // into the smaller circulant
    int n2 = n - 2 * (k + 1);
    std::vector<Vertex> perm(n2);
    for (int i = 0; i < n2; ++i) perm[i] = i <= r - 2 ? i + r - k : i - r + 1;
    return window_report("window-sgraph",
                         "n=" + std::to_string(n) + " k=" + std::to_string(k), wx,
                         star_cluster(s.graph, v, max_faces), selected,
                         relabel(wx.extended, perm), circular_complete(n2, k));
}

CheckReport validate_square_equivalence(const Graph& g, const std::string& name,
                                        std::int64_t max_faces) {
    SquareCondition cond = check_square_condition(g);
    CheckReport rep;
    rep.id = "square";
    rep.instance = name;
    if (!cond.holds) {
        rep.pass = true;
        rep.detail = "condition fails (uncovered clique " + face_text(cond.witness) +
                     "); implication vacuous";
        return rep;
    }
    HomologyProfile base = integer_homology(clique_complex(g, std::nullopt, max_faces));
    HomologyProfile squared =
        integer_homology(clique_complex(power(g, 2), std::nullopt, max_faces));
    rep.pass = equal_profiles(base, squared);
    rep.detail = "condition holds; cl(G) " + base.to_string() + "; cl(G^2) " + squared.to_string();
    return rep;
}

CheckReport validate_total_and_line(const Graph& g, const std::string& name,
                                    std::int64_t max_faces) {
    std::int64_t t = triangle_count(g);
    HomologyProfile base = integer_homology(clique_complex(g, std::nullopt, max_faces));
    HomologyProfile expected = base;
    if (t > 0) {
        if (expected.betti.size() < 3) expected.betti.resize(3, 0);
        expected.betti[2] += t;
    }
    HomologyProfile total =
        integer_homology(clique_complex(total_graph(g).graph, std::nullopt, max_faces));
    bool total_ok = equal_profiles(expected, total);

    CheckReport rep;
    rep.id = "total-line";
    rep.instance = name;
    rep.detail = "triangles=" + std::to_string(t) + "; cl(total) " + total.to_string() +
                 "; expected " + expected.to_string();
    rep.pass = total_ok;
    if (is_connected(g) && g.edge_count() > 0) {
        HomologyProfile line =
            integer_homology(clique_complex(line_graph(g), std::nullopt, max_faces));
        HomologyProfile skel =
            integer_homology(skeleton(clique_complex(g, std::nullopt, max_faces), 2));
        bool line_ok = equal_profiles(line, skel);
        rep.detail += "; cl(line) " + line.to_string() + "; 2-skeleton " + skel.to_string();
        rep.pass = rep.pass && line_ok;
    } else {
        rep.detail += "; line side skipped (needs a connected graph with an edge)";
    }
    return rep;
}

CheckReport validate_universality(const SimplicialComplex& base, int s, int r,
                                  const std::string& name, std::int64_t max_faces) {
    if (s < 3 || r < 1 || r >= (1 << (s - 2)))
        throw std::invalid_argument("validate_universality: need s >= 3 and 1 <= r < 2^{s-2}");
    SubdividedSkeleton sk = subdivided_skeleton(base, s, max_faces);
    HomologyProfile target = integer_homology(base, {max_faces});
    HomologyProfile built =
        integer_homology(clique_complex(power(sk.graph, r), std::nullopt, max_faces));
    CheckReport rep;
    rep.id = "universality";
    rep.instance = name + " s=" + std::to_string(s) + " r=" + std::to_string(r);
    rep.pass = equal_profiles(target, built);
    rep.detail = "base " + target.to_string() + "; clique complex of power " + built.to_string() +
                 " on " + std::to_string(sk.graph.vertex_count()) + " vertices";
    return rep;
}

CheckReport validate_distance(const SimplicialComplex& base, int s, Vertex u, Vertex v,
                              const std::string& name, std::int64_t max_faces) {
    if (s < 1) throw std::invalid_argument("validate_distance: need s >= 1");
    if (u == v) throw std::invalid_argument("validate_distance: need distinct endpoints");
    Face edge{std::min(u, v), std::max(u, v)};
    if (!base.contains(edge))
        throw std::invalid_argument("validate_distance: {u,v} is not an edge of the base");

    SubdividedSkeleton sk = subdivided_skeleton(base, s, max_faces);
    BallAndSphere bu = balls_and_spheres(sk, u);
    BallAndSphere bv = balls_and_spheres(sk, v);
    std::vector<Vertex> open_u = sorted_difference(bu.ball, bu.sphere);
    std::vector<Vertex> open_v = sorted_difference(bv.ball, bv.sphere);
    std::vector<Vertex> side_a = sorted_intersection(open_u, bv.sphere);
    std::vector<Vertex> side_b = sorted_intersection(bu.sphere, open_v);
    std::vector<Vertex> world = sorted_union(open_u, open_v);

    InducedSubgraph sub = induced(sk.graph, world);
    auto position = [&](Vertex x) {
        return static_cast<int>(std::lower_bound(world.begin(), world.end(), x) - world.begin());
    };
    std::vector<int> dist(world.size(), -1);
    std::queue<int> q;
    for (Vertex x : side_a) {
        dist[position(x)] = 0;
        q.push(position(x));
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (Vertex y : sub.graph.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    int best = -1;
    for (Vertex x : side_b) {
        int dx = dist[position(x)];
        if (dx >= 0 && (best < 0 || dx < best)) best = dx;
    }

    CheckReport rep;
    rep.id = "distance";
    rep.instance = name + " s=" + std::to_string(s) + " edge={" + std::to_string(u) + "," +
                   std::to_string(v) + "}";
    rep.pass = !side_a.empty() && !side_b.empty() && best == (1 << s);
    rep.detail = "sides " + std::to_string(side_a.size()) + "/" + std::to_string(side_b.size()) +
                 " vertices; distance " + std::to_string(best) + "; expected " +
                 std::to_string(1 << s);
    return rep;
}

CheckReport validate_h1_surjectivity(const Graph& g, int r, const std::string& name,
                                     std::int64_t max_faces) {
    if (r < 1) throw std::invalid_argument("validate_h1_surjectivity: need r >= 1");
    SimplicialComplex whole = clique_complex(power(g, r), std::nullopt, max_faces);
    SimplicialComplex part = clique_complex(g, std::nullopt, max_faces);
    H1SurjectivityResult res = h1_inclusion_surjective(part, whole);
    CheckReport rep;
    rep.id = "h1-surjectivity";
    rep.instance = name + " r=" + std::to_string(r);
    rep.pass = res.all();
    rep.detail = flag_text("Q", res.rational) + " " + flag_text("F2", res.mod2) + " " +
                 flag_text("F3", res.mod3) + " " + flag_text("F5", res.mod5);
    return rep;
}

CheckReport validate_prediction_consistency(int n_max) {
    if (n_max < 3)
        throw std::invalid_argument("validate_prediction_consistency: need n_max >= 3");
    std::int64_t checked = 0;
    std::string first_bad;
    for (int n = 3; n <= n_max; ++n)
        for (int r = 0; 2 * r < n; ++r) {
            WedgePrediction cycle_side = predict_clique_cycle_power(n, r);
            if (cycle_side != predict_ind_circular(n, n - 2 * r - 1) && first_bad.empty())
                first_bad = "complement identity at n=" + std::to_string(n) +
                            " r=" + std::to_string(r);
            ++checked;
            if (3 * r >= n && 4 * r - n >= 3) {
                WedgePrediction lifted =
                    predict_clique_cycle_power(4 * r - n, 3 * r - n).suspended().suspended();
                if (cycle_side != lifted && first_bad.empty())
                    first_bad = "double suspension at n=" + std::to_string(n) +
                                " r=" + std::to_string(r);
                ++checked;
            }
        }
    CheckReport rep;
    rep.id = "predictions";
    rep.instance = "n<=" + std::to_string(n_max);
    rep.pass = first_bad.empty();
    rep.detail = std::to_string(checked) + " identities checked" +
                 (first_bad.empty() ? "" : "; first failure: " + first_bad);
    return rep;
}

} // namespace cpw
