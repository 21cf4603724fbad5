#include "cpow/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cpow/errors.hpp"

namespace cpw {

namespace {

// Compare two faces of equal dimension stored as flat chunks.
bool chunk_less(const Vertex* a, const Vertex* b, int len) {
    return std::lexicographical_compare(a, a + len, b, b + len);
}
bool chunk_eq(const Vertex* a, const Vertex* b, int len) { return std::equal(a, a + len, b); }

// Sort a flat level lexicographically and drop duplicates.
void canonicalize_level(std::vector<Vertex>& level, int d) {
    int stride = d + 1;
    std::size_t count = level.size() / stride;
    if (count <= 1) return;
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < count && sorted; ++i)
        if (!chunk_less(level.data() + i * stride, level.data() + (i + 1) * stride, stride))
            sorted = false;
    if (sorted) return;
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return chunk_less(level.data() + a * stride, level.data() + b * stride, stride);
    });
    std::vector<Vertex> out;
    out.reserve(level.size());
    for (std::size_t pos = 0; pos < count; ++pos) {
        const Vertex* f = level.data() + idx[pos] * stride;
        if (!out.empty() && chunk_eq(out.data() + out.size() - stride, f, stride)) continue;
        out.insert(out.end(), f, f + stride);
    }
    level = std::move(out);
}

struct LevelBuilder {
    std::vector<std::vector<Vertex>> levels;

    void add(std::span<const Vertex> face) {
        int d = static_cast<int>(face.size()) - 1;
        if (d < 0) return; // the empty face is implicit
        if (d >= static_cast<int>(levels.size())) levels.resize(d + 1);
        levels[d].insert(levels[d].end(), face.begin(), face.end());
    }
};

} // namespace

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
    SimplicialComplex k;
    k.n_ = vertex_count;
    k.has_empty_face_ = false;
    return k;
}

SimplicialComplex SimplicialComplex::empty_complex(int vertex_count) {
    SimplicialComplex k;
    k.n_ = vertex_count;
    k.has_empty_face_ = true;
    return k;
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::span<const Face> faces,
                                                bool close_downward) {
    if (vertex_count < 0) throw std::invalid_argument("complex: negative vertex count");
    SimplicialComplex k;
    k.n_ = vertex_count;
    k.has_empty_face_ = true;

    LevelBuilder b;
    for (const Face& f : faces) {
        Face s(f);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("complex: face with repeated vertex");
        if (!s.empty() && (s.front() < 0 || s.back() >= vertex_count))
            throw std::invalid_argument("complex: face vertex out of range");
        b.add(s);
    }
    for (int d = 0; d < static_cast<int>(b.levels.size()); ++d) canonicalize_level(b.levels[d], d);

    if (close_downward) {
        for (int d = static_cast<int>(b.levels.size()) - 1; d >= 1; --d) {
            const std::vector<Vertex>& level = b.levels[d];
            int stride = d + 1;
            std::vector<Vertex>& below = b.levels[d - 1];
            Face sub(d);
            for (std::size_t i = 0; i < level.size() / stride; ++i) {
                const Vertex* f = level.data() + i * stride;
                for (int drop = 0; drop < stride; ++drop) {
                    int pos = 0;
                    for (int j = 0; j < stride; ++j)
                        if (j != drop) sub[pos++] = f[j];
                    below.insert(below.end(), sub.begin(), sub.end());
                }
            }
            canonicalize_level(below, d - 1);
        }
    }

    while (!b.levels.empty() && b.levels.back().empty()) b.levels.pop_back();
    k.levels_ = std::move(b.levels);

    if (!close_downward) {
        // Verify closure instead of repairing it.
        for (int d = 1; d <= k.dim(); ++d) {
            Face sub(d);
            for (int i = 0; i < k.level_size(d); ++i) {
                auto f = k.face(d, i);
                for (int drop = 0; drop <= d; ++drop) {
                    int pos = 0;
                    for (int j = 0; j <= d; ++j)
                        if (j != drop) sub[pos++] = f[j];
                    if (!k.face_index(sub))
                        throw std::invalid_argument("complex: face list is not downward closed");
                }
            }
        }
    }
    return k;
}

SimplicialComplex SimplicialComplex::full_simplex(int vertex_count) {
    Face all(vertex_count);
    std::iota(all.begin(), all.end(), 0);
    return from_faces(vertex_count, std::span<const Face>(&all, 1), true);
}

SimplicialComplex SimplicialComplex::simplex_boundary(int vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("simplex_boundary: need at least one vertex");
    std::vector<Face> fs;
    for (int drop = 0; drop < vertex_count; ++drop) {
        Face f;
        for (int j = 0; j < vertex_count; ++j)
            if (j != drop) f.push_back(j);
        fs.push_back(std::move(f));
    }
    return from_faces(vertex_count, fs, true);
}

int SimplicialComplex::dim() const {
    if (!has_empty_face_) return -2;
    return static_cast<int>(levels_.size()) - 1;
}

std::int64_t SimplicialComplex::face_count() const {
    std::int64_t total = 0;
    for (int d = 0; d < static_cast<int>(levels_.size()); ++d)
        total += static_cast<std::int64_t>(levels_[d].size() / (d + 1));
    return total;
}

bool SimplicialComplex::contains(std::span<const Vertex> f) const {
    if (f.empty()) return has_empty_face_;
    return face_index(f).has_value();
}

std::optional<int> SimplicialComplex::face_index(std::span<const Vertex> f) const {
    int d = static_cast<int>(f.size()) - 1;
    if (d < 0 || d >= static_cast<int>(levels_.size())) return std::nullopt;
    Face s(f.begin(), f.end());
    std::sort(s.begin(), s.end());
    const std::vector<Vertex>& level = levels_[d];
    int stride = d + 1;
    std::int64_t lo = 0, hi = static_cast<std::int64_t>(level.size() / stride);
    while (lo < hi) {
        std::int64_t mid = (lo + hi) / 2;
        const Vertex* cand = level.data() + mid * stride;
        if (chunk_eq(cand, s.data(), stride)) return static_cast<int>(mid);
        if (chunk_less(cand, s.data(), stride))
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f(levels_.size());
    for (std::size_t d = 0; d < levels_.size(); ++d)
        f[d] = static_cast<std::int64_t>(levels_[d].size() / (d + 1));
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    int sign = 1;
    for (std::int64_t fd : f_vector()) {
        chi += sign * fd;
        sign = -sign;
    }
    return chi;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
    if (is_void()) return 0;
    return euler_characteristic() - 1;
}

SimplicialComplex SimplicialComplex::adopt_levels(int vertex_count,
                                                  std::vector<std::vector<Vertex>> levels) {
    SimplicialComplex k;
    k.n_ = vertex_count;
    k.has_empty_face_ = true;
    for (int d = 0; d < static_cast<int>(levels.size()); ++d) canonicalize_level(levels[d], d);
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    k.levels_ = std::move(levels);
    return k;
}

// ---------------------------------------------------------------------------
// clique / independence complexes

namespace {

struct CliqueDfs {
    const Graph& g;
    int words;
    int max_size; // faces keep at most this many vertices
    std::int64_t budget;
    std::int64_t count = 0;
    std::vector<std::vector<Vertex>> levels;
    Face current;
    std::vector<std::uint64_t> cand_stack; // one bit row per depth

    CliqueDfs(const Graph& graph, int cap, std::int64_t max_faces)
        : g(graph), words(graph.words_per_row()), max_size(cap), budget(max_faces) {
        cand_stack.assign(static_cast<std::size_t>(words) * (cap + 1), 0);
    }

    void record() {
        if (++count > budget) throw face_limit_error(budget, count);
        int d = static_cast<int>(current.size()) - 1;
        if (d >= static_cast<int>(levels.size())) levels.resize(d + 1);
        levels[d].insert(levels[d].end(), current.begin(), current.end());
    }

    // cand = candidates above the last clique vertex, as a bit row at depth.
    void expand(int depth) {
        record();
        if (static_cast<int>(current.size()) >= max_size) return;
        const std::uint64_t* cand = cand_stack.data() + static_cast<std::size_t>(depth) * words;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                Vertex v = (w << 6) | bit;
                std::uint64_t* next = cand_stack.data() + static_cast<std::size_t>(depth + 1) * words;
                auto row = g.bit_row(v);
                for (int x = 0; x < words; ++x) next[x] = cand[x] & row[x];
                // restrict to candidates past v to emit each clique once
                next[w] &= ~((std::uint64_t{2} << bit) - 1);
                for (int x = 0; x < w; ++x) next[x] = 0;
                current.push_back(v);
                expand(depth + 1);
                current.pop_back();
            }
        }
    }
};

} // namespace

SimplicialComplex clique_complex(const Graph& g, std::optional<int> dim_cap,
                                 std::int64_t max_faces) {
    int cap = dim_cap ? *dim_cap + 1 : g.vertex_count();
    if (cap < 0) cap = 0;
    CliqueDfs dfs(g, cap, max_faces);
    if (cap >= 1) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::uint64_t* root = dfs.cand_stack.data();
            auto row = g.bit_row(v);
            for (int x = 0; x < dfs.words; ++x) root[x] = row[x];
            // candidates strictly above v
            root[v >> 6] &= ~((std::uint64_t{2} << (v & 63)) - 1);
            for (int x = 0; x < (v >> 6); ++x) root[x] = 0;
            dfs.current.assign(1, v);
            dfs.expand(0);
        }
    }

    return SimplicialComplex::adopt_levels(g.vertex_count(), std::move(dfs.levels));
}

SimplicialComplex independence_complex(const Graph& g, std::optional<int> dim_cap,
                                       std::int64_t max_faces) {
    return clique_complex(complement(g), dim_cap, max_faces);
}

// ---------------------------------------------------------------------------
// constructions

SimplicialComplex skeleton(const SimplicialComplex& k, int n) {
    if (k.is_void()) return SimplicialComplex::void_complex(k.vertex_count());
    if (n < -1) throw std::invalid_argument("skeleton: dimension below -1");
    std::vector<Face> fs;
    for (int d = 0; d <= std::min(n, k.dim()); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            fs.emplace_back(f.begin(), f.end());
        }
    return SimplicialComplex::from_faces(k.vertex_count(), fs, false);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    int n = a.vertex_count() + b.vertex_count();
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
    std::int64_t total = (a.face_count() + 1) * (b.face_count() + 1) - 1;
    if (total > kDefaultFaceLimit) throw face_limit_error(kDefaultFaceLimit, total);

    int off = a.vertex_count();
    std::vector<Face> fs;
    fs.reserve(static_cast<std::size_t>(total));
    Face fa, fb;
    // da or db == -1 stands for the empty face on that side
    for (int da = -1; da <= a.dim(); ++da) {
        int ca = da < 0 ? 1 : a.level_size(da);
        for (int ia = 0; ia < ca; ++ia) {
            fa.clear();
            if (da >= 0) {
                auto f = a.face(da, ia);
                fa.assign(f.begin(), f.end());
            }
            for (int db = -1; db <= b.dim(); ++db) {
                int cb = db < 0 ? 1 : b.level_size(db);
                for (int ib = 0; ib < cb; ++ib) {
                    if (da < 0 && db < 0) continue;
                    fb = fa;
                    if (db >= 0) {
                        auto f = b.face(db, ib);
                        for (Vertex v : f) fb.push_back(v + off);
                    }
                    fs.push_back(fb);
                }
            }
        }
    }
    return SimplicialComplex::from_faces(n, fs, false);
}

SimplicialComplex cone(const SimplicialComplex& k) {
    std::vector<Face> point{Face{0}};
    return join(k, SimplicialComplex::from_faces(1, point, true));
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    std::vector<Face> poles{Face{0}, Face{1}};
    return join(k, SimplicialComplex::from_faces(2, poles, true));
}

SimplicialComplex star(const SimplicialComplex& k, Vertex v) {
    if (v < 0 || v >= k.vertex_count()) throw std::invalid_argument("star: vertex out of range");
    if (!k.contains(std::span<const Vertex>(&v, 1)))
        return SimplicialComplex::void_complex(k.vertex_count());
    std::vector<Face> fs;
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            if (!std::binary_search(f.begin(), f.end(), v)) continue;
            fs.emplace_back(f.begin(), f.end());
            Face without;
            without.reserve(f.size() - 1);
            for (Vertex w : f)
                if (w != v) without.push_back(w);
            fs.push_back(std::move(without));
        }
    return SimplicialComplex::from_faces(k.vertex_count(), fs, false);
}

SimplicialComplex link(const SimplicialComplex& k, Vertex v) {
    if (v < 0 || v >= k.vertex_count()) throw std::invalid_argument("link: vertex out of range");
    if (!k.contains(std::span<const Vertex>(&v, 1)))
        return SimplicialComplex::void_complex(k.vertex_count());
    std::vector<Face> fs;
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            if (!std::binary_search(f.begin(), f.end(), v)) continue;
            Face without;
            without.reserve(f.size() - 1);
            for (Vertex w : f)
                if (w != v) without.push_back(w);
            fs.push_back(std::move(without));
        }
    return SimplicialComplex::from_faces(k.vertex_count(), fs, false);
}

VertexLabelledComplex barycentric_subdivision(const SimplicialComplex& k,
                                              std::int64_t max_faces) {
    if (k.is_void() || k.dim() == -1)
        return {k, {}};

    // Global index per nonempty face, in canonical (dimension, lex) order.
    std::vector<std::int64_t> offset(k.dim() + 2, 0);
    for (int d = 0; d <= k.dim(); ++d) offset[d + 1] = offset[d] + k.level_size(d);
    std::int64_t vertices = offset[k.dim() + 1];

    std::vector<Face> labels;
    labels.reserve(static_cast<std::size_t>(vertices));
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            labels.emplace_back(f.begin(), f.end());
        }

    // Chains of faces strictly ordered by inclusion.  Downward closure means
    // every nonempty subset of a face is again a face, so chain extension
    // walks proper subsets.
    std::vector<Face> chains;
    std::int64_t count = 0;
    Face chain; // global face indices, decreasing along the descent
    auto face_gid = [&](const Face& f) -> Vertex {
        return static_cast<Vertex>(offset[f.size() - 1] + *k.face_index(f));
    };
    auto record = [&]() {
        if (++count > max_faces) throw face_limit_error(max_faces, count);
        chains.emplace_back(chain.rbegin(), chain.rend());
    };

    // Proper nonempty subsets of an s-element face are exactly the bit
    // masks 1 .. 2^s-2, so each frame counts its mask down.
    struct Frame {
        Face face;
        unsigned next_mask;
    };
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto top = k.face(d, i);
            Face topf(top.begin(), top.end());
            chain.assign(1, static_cast<Vertex>(offset[d] + i));
            record();
            std::vector<Frame> stack;
            stack.push_back({std::move(topf), (1u << (d + 1)) - 2});
            while (!stack.empty()) {
                Frame& fr = stack.back();
                if (fr.next_mask == 0) {
                    stack.pop_back();
                    chain.pop_back();
                    continue;
                }
                unsigned m = fr.next_mask--;
                Face sub;
                for (std::size_t b = 0; b < fr.face.size(); ++b)
                    if (m & (1u << b)) sub.push_back(fr.face[b]);
                chain.push_back(face_gid(sub));
                record();
                stack.push_back({std::move(sub), (1u << std::popcount(m)) - 2});
            }
        }

    // chain holds gids in decreasing order; reversing made each face sorted.
    SimplicialComplex bk = SimplicialComplex::from_faces(
        static_cast<int>(vertices), chains, false);
    return {std::move(bk), std::move(labels)};
}

InducedComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> selected) {
    std::vector<Vertex> keep(selected.begin(), selected.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v < 0 || v >= k.vertex_count())
            throw std::invalid_argument("induced_subcomplex: vertex out of range");
    if (k.is_void())
        return {SimplicialComplex::void_complex(static_cast<int>(keep.size())), std::move(keep)};
    std::vector<int> pos(k.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<Face> fs;
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            Face mapped;
            mapped.reserve(f.size());
            bool inside = true;
            for (Vertex v : f) {
                if (pos[v] < 0) { inside = false; break; }
                mapped.push_back(pos[v]);
            }
            if (inside) fs.push_back(std::move(mapped));
        }
    return {SimplicialComplex::from_faces(static_cast<int>(keep.size()), fs, false),
            std::move(keep)};
}

Graph one_skeleton_graph(const SimplicialComplex& k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k.level_size(1); ++i) {
        auto f = k.face(1, i);
        edges.emplace_back(f[0], f[1]);
    }
    return Graph(k.vertex_count(), edges);
}

std::vector<Face> facets(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    if (k.dim() == -1) return {Face{}};
    std::vector<std::vector<bool>> covered(k.dim() + 1);
    for (int d = 0; d <= k.dim(); ++d) covered[d].assign(k.level_size(d), false);
    for (int d = 1; d <= k.dim(); ++d) {
        Face sub(d);
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            for (int drop = 0; drop <= d; ++drop) {
                int pos = 0;
                for (int j = 0; j <= d; ++j)
                    if (j != drop) sub[pos++] = f[j];
                covered[d - 1][*k.face_index(sub)] = true;
            }
        }
    }
    std::vector<Face> out;
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i)
            if (!covered[d][i]) {
                auto f = k.face(d, i);
                out.emplace_back(f.begin(), f.end());
            }
    return out;
}

namespace {

struct BronKerbosch {
    const Graph& g;
    int words;
    std::vector<Face> out;
    Face r;

    explicit BronKerbosch(const Graph& graph) : g(graph), words(graph.words_per_row()) {}

    static int popcount(const std::uint64_t* row, int words) {
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
        return c;
    }

    // Bron-Kerbosch with pivoting on |P & N(u)|; ties take the smallest u.
    void run(std::vector<std::uint64_t>& p, std::vector<std::uint64_t>& x) {
        bool empty = true;
        for (int w = 0; w < words && empty; ++w)
            if (p[w] | x[w]) empty = false;
        if (empty) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = p[w] | x[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                Vertex u = (w << 6) | bit;
                auto row = g.bit_row(u);
                int score = 0;
                for (int y = 0; y < words; ++y) score += std::popcount(p[y] & row[y]);
                if (score > best) { best = score; pivot = u; }
            }
        }
        auto prow = g.bit_row(pivot);
        std::vector<Vertex> branch;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = p[w] & ~prow[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                branch.push_back((w << 6) | bit);
            }
        }
        std::vector<std::uint64_t> np(words), nx(words);
        for (Vertex v : branch) {
            auto row = g.bit_row(v);
            for (int w = 0; w < words; ++w) {
                np[w] = p[w] & row[w];
                nx[w] = x[w] & row[w];
            }
            r.push_back(v);
            run(np, nx);
            r.pop_back();
            p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            x[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }
};

} // namespace

std::vector<Face> maximal_cliques(const Graph& g) {
    BronKerbosch bk(g);
    std::vector<std::uint64_t> p(bk.words, 0), x(bk.words, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        p[v >> 6] |= std::uint64_t{1} << (v & 63);
    bk.run(p, x);
    for (Face& f : bk.out) std::sort(f.begin(), f.end());
    std::sort(bk.out.begin(), bk.out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return bk.out;
}

} // namespace cpw
