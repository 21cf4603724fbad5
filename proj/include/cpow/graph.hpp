#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cpw {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // stored with first < second

// Finite simple undirected graph on vertices 0..n-1.  Immutable after
// construction.  Adjacency is kept three ways: the canonical sorted edge
// list (serialization, equality), per-vertex sorted neighbor lists
// (enumeration), and packed bit rows (O(1) adjacency tests, fast set
// intersections during clique search).
class Graph {
public:
    Graph() = default;

    // Deduplicates edges; throws std::invalid_argument on self-loops or
    // endpoints outside [0, n).
    Graph(int vertex_count, std::span<const Edge> edge_list);
    Graph(int vertex_count, std::initializer_list<Edge> edge_list)
        : Graph(vertex_count, std::span<const Edge>(edge_list.begin(), edge_list.size())) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    // Packed adjacency row of v: bit w*64+j set iff v ~ (w*64+j).
    std::span<const std::uint64_t> bit_row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    int words_per_row() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;            // sorted, each (u,v) with u < v
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;    // n_ rows of words_ blocks
};

// All-pairs shortest path lengths in edge hops.  Unreachable pairs have no
// value (distinct components); dist(v,v) == 0.
class DistanceTable {
public:
    explicit DistanceTable(const Graph& g);
    int vertex_count() const { return n_; }
    std::optional<int> dist(Vertex u, Vertex v) const {
        int d = d_[static_cast<std::size_t>(u) * n_ + v];
        if (d < 0) return std::nullopt;
        return d;
    }
    bool within(Vertex u, Vertex v, int r) const {
        int d = d_[static_cast<std::size_t>(u) * n_ + v];
        return d >= 0 && d <= r;
    }

private:
    int n_ = 0;
    std::vector<int> d_; // -1 == unreachable
};

// One dismantling step: `removed` had its closed neighborhood contained in
// that of `dominated_by` at the time of removal.  Labels refer to the
// original graph.
struct FoldStep {
    Vertex removed;
    Vertex dominated_by;
};

Graph edgeless_graph(int n);

DistanceTable distances(const Graph& g);

// r-th graph power: u ~ v iff 0 < dist(u,v) <= r.  power(g, 0) is edgeless,
// power(g, 1) == g.  Throws on r < 0.
Graph power(const Graph& g, int r);

Graph complement(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// perm[old] = new vertex id; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Subgraph induced on `selected` (sorted + deduplicated internally).
// `original[i]` maps new vertex i back to the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};
InducedSubgraph induced(const Graph& g, std::span<const Vertex> selected);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Smallest (u, v) in lexicographic order with u != v and N[u] within N[v],
// or nullopt if the graph has no fold.
std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g);

// Greedy fold-until-stuck.  Returns the removal sequence (original labels)
// if the graph dismantles to a single vertex, nullopt otherwise.  Throws on
// the empty graph.
std::optional<std::vector<FoldStep>> dismantle(const Graph& g);

// True iff g has an induced subgraph isomorphic to h, by label backtracking.
// Throws std::invalid_argument when h has more than `cap` vertices.
bool contains_induced(const Graph& g, const Graph& h, int cap = 8);

// No induced 4-, 5- or 6-cycle and no induced 3-sun.
bool is_stability_free(const Graph& g);

bool is_connected(const Graph& g);

// Vertex sets of the connected components, vertices ascending, components
// ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

} // namespace cpw
