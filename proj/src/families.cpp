#include "cpow/families.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace cpw {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete_graph: negative vertex count");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph circular_complete(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("circular_complete: need n >= 2 and 1 <= k <= n-1");
    if ((n - k - 1) % 2 != 0)
        throw std::invalid_argument("circular_complete: n and k must have opposite parity");
    CircularParams prm{n, k};
    int r = prm.r();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int d = r + 1; d <= r + k; ++d) {
            int j = (i + d) % n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    return Graph(n, edges);
}

SGraph s_graph(int n, int k) {
    Graph t = circular_complete(n, k); // validates n, k
    int r = CircularParams{n, k}.r();
    if (r < 1) throw std::invalid_argument("s_graph: need n >= k + 3");

    // vertex j carries label j-r (for j < r) or j-r+1, i.e. -r..-1, 1..r
    std::vector<int> label(2 * r);
    for (int j = 0; j < 2 * r; ++j) label[j] = j < r ? j - r : j - r + 1;
    auto host = [&](int lab) { return lab >= 0 ? lab : n + lab; }; // label -> vertex of t

    std::vector<Edge> edges;
    for (int a = 0; a < 2 * r; ++a)
        for (int b = a + 1; b < 2 * r; ++b) {
            bool adj = t.adjacent(host(label[a]), host(label[b]));
            if (label[a] < 0 && label[b] > 0 && -label[a] + label[b] <= k) adj = true;
            if (adj) edges.emplace_back(a, b);
        }
    return {Graph(2 * r, edges), std::move(label), n, k};
}

Graph three_sun() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}});
}

SubdividedGraph subdivision(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges;
    std::vector<Edge> edge_vertex(g.edges());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = edge_vertex[i];
        edges.emplace_back(u, n + i);
        edges.emplace_back(v, n + i);
    }
    return {Graph(n + g.edge_count(), edges), n, std::move(edge_vertex)};
}

SubdividedGraph total_graph(const Graph& g) {
    SubdividedGraph s = subdivision(g);
    s.graph = power(s.graph, 2);
    return s;
}

Graph line_graph(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("line_graph: graph has no edges");
    const auto& es = g.edges();
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    Graph by_incidence(g.edge_count(), edges);

    // must agree with the total graph restricted to the edge vertices
    SubdividedGraph t = total_graph(g);
    std::vector<Vertex> edge_ids(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) edge_ids[i] = t.original_count + i;
    Graph by_total = induced(t.graph, edge_ids).graph;
    if (!(by_incidence == by_total))
        throw std::logic_error("line_graph: incidence and total-graph constructions disagree");
    return by_incidence;
}

StableKneser stable_kneser(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("stable_kneser: need n >= 1, k >= 0");
    int m = 2 * n + k;
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    // lexicographic enumeration of n-subsets of 1..m with no two cyclically
    // consecutive members (1 and m count as consecutive)
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == n) {
            if (cur.size() >= 2 && cur.front() == 1 && cur.back() == m) return;
            sets.push_back(cur);
            return;
        }
        for (int x = next; x <= m; ++x) {
            if (!cur.empty() && x == cur.back() + 1) continue;
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);

    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(sets.size()); ++j) {
            bool disjoint = true;
            for (int a : sets[i]) {
                if (std::binary_search(sets[j].begin(), sets[j].end(), a)) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) edges.emplace_back(i, j);
        }
    return {Graph(static_cast<int>(sets.size()), edges), std::move(sets)};
}

SubdividedSkeleton subdivided_skeleton(const SimplicialComplex& k, int steps,
                                       std::int64_t max_faces) {
    if (steps < 0) throw std::invalid_argument("subdivided_skeleton: negative step count");
    if (k.is_void() || k.dim() < 0)
        throw std::invalid_argument("subdivided_skeleton: complex has no vertices");
    if (k.level_size(0) != k.vertex_count())
        throw std::invalid_argument("subdivided_skeleton: every ambient vertex must be a vertex");

    SimplicialComplex cur = k;
    std::vector<Face> carrier(k.vertex_count());
    std::vector<Vertex> location(k.vertex_count());
    for (Vertex v = 0; v < k.vertex_count(); ++v) {
        carrier[v] = Face{v};
        location[v] = v;
    }

    for (int s = 0; s < steps; ++s) {
        VertexLabelledComplex next = barycentric_subdivision(cur, max_faces);
        std::vector<Face> next_carrier(next.vertex_labels.size());
        for (std::size_t x = 0; x < next.vertex_labels.size(); ++x) {
            Face u;
            for (Vertex old : next.vertex_labels[x])
                u.insert(u.end(), carrier[old].begin(), carrier[old].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            next_carrier[x] = std::move(u);
        }
        // Vertex ids of the subdivision follow canonical face order with the
        // 0-faces first, and every vertex is present, so the singleton {w}
        // becomes vertex w again: locations carry over unchanged.
        carrier = std::move(next_carrier);
        cur = std::move(next.complex);
    }
    return {one_skeleton_graph(cur), steps, std::move(location), std::move(carrier)};
}

BallAndSphere balls_and_spheres(const SubdividedSkeleton& s, Vertex base_v) {
    if (base_v < 0 || base_v >= static_cast<int>(s.base_location.size()))
        throw std::invalid_argument("balls_and_spheres: base vertex out of range");
    int radius = 1 << s.steps;
    DistanceTable dt(s.graph);
    Vertex center = s.base_location[base_v];
    BallAndSphere out;
    for (Vertex x = 0; x < s.graph.vertex_count(); ++x) {
        auto d = dt.dist(center, x);
        if (!d || *d > radius) continue;
        out.ball.push_back(x);
        if (*d == radius) out.sphere.push_back(x);
    }
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p outside [0,1]");
    std::mt19937_64 rng(seed);
    // raw-draw threshold comparison; never std distributions, whose mapping
    // is implementation-defined
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(p * 9007199254740992.0); // p * 2^53
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: need at least 1 vertex");
    if (n == 1) return edgeless_graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    // standard decoding: repeatedly join the smallest leaf to the next code
    // entry
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    std::vector<Edge> edges;
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : prufer) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[leaf]; // consumed
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (a < 0)
                a = v;
            else
                b = v;
        }
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

} // namespace cpw
