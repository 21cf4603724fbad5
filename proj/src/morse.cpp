#include "cpow/morse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cpow/errors.hpp"

namespace cpw {

namespace {

std::string face_text(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

bool strictly_increasing(const Face& f) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] >= f[i + 1]) return false;
    return true;
}

// All codimension-1 subfaces of f, each obtained by dropping one vertex.
std::vector<Face> facets_of(const Face& f) {
    std::vector<Face> out;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub;
        sub.reserve(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != drop) sub.push_back(f[j]);
        out.push_back(std::move(sub));
    }
    return out;
}

} // namespace

MatchingCheck verify_matching(const SimplicialComplex& k, const Matching& m) {
    MatchingCheck res;
    auto fail = [&](std::string msg) {
        res.ok = false;
        res.message = std::move(msg);
        return res;
    };

    for (const auto& [sigma, tau] : m.pairs) {
        if (!strictly_increasing(sigma) || !k.contains(sigma))
            throw std::invalid_argument("matching: face " + face_text(sigma) +
                                        " is not a face of the complex");
        if (!strictly_increasing(tau) || !k.contains(tau))
            throw std::invalid_argument("matching: face " + face_text(tau) +
                                        " is not a face of the complex");
    }

    for (const auto& [sigma, tau] : m.pairs) {
        if (tau.size() != sigma.size() + 1 ||
            !std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end()))
            return fail("pair " + face_text(sigma) + " -> " + face_text(tau) +
                        " is not a codimension-1 inclusion");
    }

    std::map<Face, int> pair_of_sigma;
    {
        std::set<Face> used;
        for (std::size_t i = 0; i < m.pairs.size(); ++i) {
            for (const Face* f : {&m.pairs[i].first, &m.pairs[i].second})
                if (!used.insert(*f).second)
                    return fail("face " + face_text(*f) + " occurs in two pairs");
            pair_of_sigma.emplace(m.pairs[i].first, static_cast<int>(i));
        }
    }

    // Directed path relation on pairs: i -> j when sigma_j is a facet of
    // tau_i other than sigma_i.  A directed cycle here is exactly a closed
    // alternating path sigma_0, tau_0, sigma_1, ..., sigma_0.
    int n = static_cast<int>(m.pairs.size());
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i) {
        for (const Face& sub : facets_of(m.pairs[i].second)) {
            if (sub == m.pairs[i].first) continue;
            auto it = pair_of_sigma.find(sub);
            if (it != pair_of_sigma.end()) succ[i].push_back(it->second);
        }
    }

    std::vector<int> color(n, 0); // 0 white, 1 on stack, 2 done
    std::vector<std::pair<int, std::size_t>> stack;
    std::vector<int> path;
    for (int start = 0; start < n; ++start) {
        if (color[start]) continue;
        stack.push_back({start, 0});
        color[start] = 1;
        path.push_back(start);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < succ[node].size()) {
                int to = succ[node][next++];
                if (color[to] == 1) {
                    auto at = std::find(path.begin(), path.end(), to);
                    for (auto it = at; it != path.end(); ++it) {
                        res.cycle.push_back(m.pairs[*it].first);
                        res.cycle.push_back(m.pairs[*it].second);
                    }
                    res.cycle.push_back(m.pairs[to].first);
                    return fail("cyclic path through " +
                                std::to_string((path.end() - at)) + " pairs, starting at " +
                                face_text(m.pairs[to].first));
                }
                if (color[to] == 0) {
                    color[to] = 1;
                    stack.push_back({to, 0});
                    path.push_back(to);
                }
            } else {
                color[node] = 2;
                stack.pop_back();
                path.pop_back();
            }
        }
    }
    return res;
}

std::vector<Face> all_faces(const SimplicialComplex& k) {
    std::vector<Face> out;
    if (k.is_void()) return out;
    out.push_back({});
    for (int d = 0; d <= k.dim(); ++d)
        for (int i = 0; i < k.level_size(d); ++i) {
            auto f = k.face(d, i);
            out.emplace_back(f.begin(), f.end());
        }
    return out;
}

std::vector<Face> critical_faces(const SimplicialComplex& k, const Matching& m) {
    MatchingCheck check = verify_matching(k, m);
    if (!check.ok) throw std::invalid_argument("critical_faces: " + check.message);
    std::set<Face> matched;
    for (const auto& [sigma, tau] : m.pairs) {
        matched.insert(sigma);
        matched.insert(tau);
    }
    std::vector<Face> out;
    for (Face& f : all_faces(k))
        if (!matched.count(f)) out.push_back(std::move(f));
    return out;
}

CollapseResult elementary_collapse(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (l.vertex_count() != k.vertex_count())
        throw std::invalid_argument("collapse: complexes live on different vertex sets");
    for (int d = 0; d <= l.dim(); ++d)
        for (int i = 0; i < l.level_size(d); ++i)
            if (!k.contains(l.face(d, i)))
                throw std::invalid_argument("collapse: target is not a subcomplex");

    CollapseResult res;
    if (l.is_void()) {
        res.collapsed = k.is_void();
        return res;
    }
    if (k.is_void()) return res; // cannot grow the void complex into l

    // Flat face ids: dimensions stacked in order, lex inside each level.
    int dim = k.dim();
    std::vector<std::int64_t> offset(dim + 2, 0);
    for (int d = 0; d <= dim; ++d) offset[d + 1] = offset[d] + k.level_size(d);
    std::int64_t total = offset[dim + 1];
    auto dim_of = [&](std::int64_t gid) {
        int d = 0;
        while (offset[d + 1] <= gid) ++d;
        return d;
    };

    std::vector<char> alive(total, 1), in_l(total, 0);
    std::vector<int> coface_count(total, 0);
    std::vector<std::vector<std::int64_t>> cofaces(total);
    for (int d = 0; d <= dim; ++d) {
        Face sub(d);
        for (int i = 0; i < k.level_size(d); ++i) {
            std::int64_t gid = offset[d] + i;
            auto f = k.face(d, i);
            if (l.contains(f)) in_l[gid] = 1;
            if (d == 0) continue;
            for (int drop = 0; drop <= d; ++drop) {
                int pos = 0;
                for (int j = 0; j <= d; ++j)
                    if (j != drop) sub[pos++] = f[j];
                std::int64_t sid = offset[d - 1] + *k.face_index(sub);
                cofaces[sid].push_back(gid);
                ++coface_count[sid];
            }
        }
    }

    auto remove_face = [&](std::int64_t gid) {
        alive[gid] = 0;
        int d = dim_of(gid);
        if (d == 0) return;
        Face sub(d);
        auto f = k.face(d, static_cast<int>(gid - offset[d]));
        for (int drop = 0; drop <= d; ++drop) {
            int pos = 0;
            for (int j = 0; j <= d; ++j)
                if (j != drop) sub[pos++] = f[j];
            std::int64_t sid = offset[d - 1] + *k.face_index(sub);
            if (alive[sid]) --coface_count[sid];
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t gid = 0; gid < total; ++gid) {
            if (!alive[gid] || in_l[gid] || coface_count[gid] != 1) continue;
            std::int64_t up = -1;
            for (std::int64_t c : cofaces[gid])
                if (alive[c]) up = c;
            if (up < 0) continue;
            int d = dim_of(gid);
            int du = dim_of(up);
            auto f = k.face(d, static_cast<int>(gid - offset[d]));
            auto g = k.face(du, static_cast<int>(up - offset[du]));
            res.steps.push_back({Face(f.begin(), f.end()), Face(g.begin(), g.end())});
            remove_face(up);
            remove_face(gid);
            changed = true;
        }
    }

    std::int64_t left = 0;
    for (std::int64_t gid = 0; gid < total; ++gid) left += alive[gid];
    res.collapsed = left == l.face_count();
    return res;
}

Matching girth_matching(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("girth matching needs k >= 2");
    if (auto c = girth(g); c && *c <= 3 * k)
        throw std::invalid_argument("girth matching needs girth > 3k, got a cycle of length " +
                                    std::to_string(*c));

    DistanceTable dist(g);
    Graph gk = power(g, k);
    constexpr int kMaxCliqueBits = 25;

    Matching m;
    std::set<Face> seen;
    for (const Face& sigma : maximal_cliques(gk)) {
        int s = static_cast<int>(sigma.size());
        // Bit i marks the clique members at graph distance exactly k from
        // sigma[i]: the pairs whose faces the matching must cover.
        std::vector<std::uint32_t> far(s, 0);
        bool any = false;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (dist.dist(sigma[i], sigma[j]) == k) {
                    far[i] |= 1u << j;
                    far[j] |= 1u << i;
                    any = true;
                }
        if (!any) continue;
        if (s > kMaxCliqueBits)
            throw face_limit_error(std::int64_t{1} << kMaxCliqueBits, std::int64_t{1} << s);

        // The induced subgraph of g on the clique must be a tree spanned by
        // short hops; its center is nearer than k to every member.
        InducedSubgraph sub = induced(g, sigma);
        if (sub.graph.edge_count() != s - 1 || !is_connected(sub.graph))
            throw std::logic_error("girth matching: maximal clique does not induce a tree");
        {
            DistanceTable td(sub.graph);
            int diameter = 0;
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b) diameter = std::max(diameter, *td.dist(a, b));
            if (diameter > k)
                throw std::logic_error("girth matching: clique tree has diameter above k");
        }
        std::vector<int> deg(s), live(s, 1);
        for (int v = 0; v < s; ++v) deg[v] = sub.graph.degree(v);
        int remaining = s;
        while (remaining > 2) {
            std::vector<int> leaves;
            for (int v = 0; v < s; ++v)
                if (live[v] && deg[v] <= 1) leaves.push_back(v);
            for (int v : leaves) {
                live[v] = 0;
                --remaining;
                for (Vertex w : sub.graph.neighbors(v))
                    if (live[w]) --deg[w];
            }
        }
        int center = -1;
        for (int v = 0; v < s; ++v)
            if (live[v] && (center < 0 || sigma[v] < sigma[center])) center = v;
        for (int v = 0; v < s; ++v) {
            auto d = dist.dist(sigma[center], sigma[v]);
            if (!d || *d >= k)
                throw std::logic_error("girth matching: tree center is not within distance k-1");
        }

        std::uint32_t center_bit = 1u << center;
        for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
            if (mask & center_bit) continue;
            bool spans_far_pair = false;
            for (int i = 0; i < s && !spans_far_pair; ++i)
                if ((mask >> i & 1) && (far[i] & mask)) spans_far_pair = true;
            if (!spans_far_pair) continue;
            Face f, fv;
            for (int i = 0; i < s; ++i) {
                if (i == center || (mask >> i & 1)) fv.push_back(sigma[i]);
                if (mask >> i & 1) f.push_back(sigma[i]);
            }
            if (!seen.insert(f).second || !seen.insert(fv).second)
                throw std::logic_error("girth matching: face reachable from two maximal cliques");
            m.pairs.push_back({std::move(f), std::move(fv)});
        }
    }
    return m;
}

} // namespace cpw
