#include "cpow/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace cpw {

Graph::Graph(int vertex_count, std::span<const Edge> edge_list) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("graph: negative vertex count");
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    words_ = n_ == 0 ? 1 : (n_ + 63) / 64;
    adj_.assign(n_, {});
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph edgeless_graph(int n) { return Graph(n, std::span<const Edge>{}); }

DistanceTable::DistanceTable(const Graph& g) : n_(g.vertex_count()) {
    d_.assign(static_cast<std::size_t>(n_) * n_, -1);
    std::vector<Vertex> queue;
    queue.reserve(n_);
    for (Vertex s = 0; s < n_; ++s) {
        int* row = d_.data() + static_cast<std::size_t>(s) * n_;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

DistanceTable distances(const Graph& g) { return DistanceTable(g); }

Graph power(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("power: negative exponent");
    if (r == 0) return edgeless_graph(g.vertex_count());
    if (r == 1) return g;
    DistanceTable dt(g);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (dt.within(u, v, r)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (Vertex p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("relabel: not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(n, edges);
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> selected) {
    std::vector<Vertex> keep(selected.begin(), selected.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced: vertex out of range");
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return {Graph(static_cast<int>(keep.size()), edges), std::move(keep)};
}

std::optional<int> girth(const Graph& g) {
    // min over edges uv of 1 + dist(u,v) in g - uv: every shortest cycle
    // passes through some edge, so the minimum is exact.
    int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    for (auto [eu, ev] : g.edges()) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[eu] = 0;
        queue.clear();
        queue.push_back(eu);
        for (std::size_t head = 0; head < queue.size() && dist[ev] < 0; ++head) {
            Vertex u = queue[head];
            if (best && dist[u] >= *best - 1) break; // any completion reaches >= *best
            for (Vertex w : g.neighbors(u)) {
                if (u == eu && w == ev) continue; // drop the edge itself
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[ev] >= 0) {
            int cyc = dist[ev] + 1;
            if (!best || cyc < *best) best = cyc;
        }
    }
    return best;
}

namespace {

// N[u] within N[v] on bit rows: N[u] | {u} must be covered by N[v] | {v}.
bool closed_nbhd_dominated(const Graph& g, Vertex u, Vertex v) {
    int words = g.words_per_row();
    auto ru = g.bit_row(u);
    auto rv = g.bit_row(v);
    for (int w = 0; w < words; ++w) {
        std::uint64_t cu = ru[w];
        std::uint64_t cv = rv[w];
        if (u >> 6 == w) cu |= std::uint64_t{1} << (u & 63);
        if (v >> 6 == w) cv |= std::uint64_t{1} << (v & 63);
        if (cu & ~cv) return false;
    }
    return true;
}

} // namespace

std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (u != v && closed_nbhd_dominated(g, u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

std::optional<std::vector<FoldStep>> dismantle(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("dismantle: empty graph");
    std::vector<FoldStep> steps;
    std::vector<Vertex> alive(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    Graph cur = g;
    while (cur.vertex_count() > 1) {
        auto fold = find_fold(cur);
        if (!fold) return std::nullopt;
        auto [u, v] = *fold;
        steps.push_back({alive[u], alive[v]});
        std::vector<Vertex> keep;
        keep.reserve(cur.vertex_count() - 1);
        for (Vertex w = 0; w < cur.vertex_count(); ++w)
            if (w != u) keep.push_back(w);
        auto sub = induced(cur, keep);
        std::vector<Vertex> next_alive(sub.original.size());
        for (std::size_t i = 0; i < sub.original.size(); ++i)
            next_alive[i] = alive[sub.original[i]];
        cur = std::move(sub.graph);
        alive = std::move(next_alive);
    }
    return steps;
}

namespace {

bool embed_induced(const Graph& g, const Graph& h, std::vector<Vertex>& image,
                   std::vector<bool>& used, std::size_t next) {
    if (next == image.size()) return true;
    Vertex hv = static_cast<Vertex>(next);
    for (Vertex cand = 0; cand < g.vertex_count(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (Vertex prev = 0; prev < hv; ++prev) {
            if (h.adjacent(prev, hv) != g.adjacent(image[prev], cand)) { ok = false; break; }
        }
        if (!ok) continue;
        image[next] = cand;
        used[cand] = true;
        if (embed_induced(g, h, image, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

bool contains_induced(const Graph& g, const Graph& h, int cap) {
    if (h.vertex_count() > cap)
        throw std::invalid_argument("contains_induced: pattern exceeds search cap of " +
                                    std::to_string(cap) + " vertices");
    if (h.vertex_count() > g.vertex_count()) return false;
    std::vector<Vertex> image(h.vertex_count());
    std::vector<bool> used(g.vertex_count(), false);
    return embed_induced(g, h, image, used, 0);
}

namespace {

Graph small_cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

// Triangle 0,1,2 plus degree-2 tips: tip 3+i sees the two triangle
// vertices other than i.
Graph small_three_sun() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {0, 5}, {1, 5}});
}

} // namespace

bool is_stability_free(const Graph& g) {
    static const Graph c4 = small_cycle(4);
    static const Graph c5 = small_cycle(5);
    static const Graph c6 = small_cycle(6);
    static const Graph sun = small_three_sun();
    return !contains_induced(g, c4) && !contains_induced(g, c5) &&
           !contains_induced(g, c6) && !contains_induced(g, sun);
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) { comp[w] = id; stack.push_back(w); }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

} // namespace cpw
