#include "cpow/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <gmpxx.h>

#include "cpow/errors.hpp"

namespace cpw {

SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (k.is_void() || d < 0 || d > k.dim())
        throw std::invalid_argument("boundary_matrix: dimension out of range");
    SparseIntMatrix m;
    m.cols = k.level_size(d);
    if (d == 0) {
        m.rows = 1; // the augmentation row
        m.entries.reserve(m.cols);
        for (int i = 0; i < m.cols; ++i) m.entries.push_back({0, i, 1});
        return m;
    }
    m.rows = k.level_size(d - 1);
    m.entries.reserve(static_cast<std::size_t>(m.cols) * (d + 1));
    Face sub(d);
    for (int i = 0; i < m.cols; ++i) {
        auto f = k.face(d, i);
        for (int drop = 0; drop <= d; ++drop) {
            int pos = 0;
            for (int j = 0; j <= d; ++j)
                if (j != drop) sub[pos++] = f[j];
            int row = *k.face_index(sub);
            m.entries.push_back({row, i, (drop % 2 == 0) ? 1LL : -1LL});
        }
    }
    return m;
}

std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& k) {
    std::vector<SparseIntMatrix> out;
    for (int d = 0; d <= k.dim(); ++d) out.push_back(boundary_matrix(k, d));
    return out;
}

bool verify_boundary_squared(const SimplicialComplex& k) {
    if (k.is_void() || k.dim() < 1) return true;
    for (int d = 1; d <= k.dim(); ++d) {
        SparseIntMatrix lo = boundary_matrix(k, d - 1);
        SparseIntMatrix hi = boundary_matrix(k, d);
        // column-indexed view of the lower matrix
        std::vector<std::vector<std::pair<int, long long>>> lo_cols(lo.cols);
        for (const auto& e : lo.entries) lo_cols[e.col].emplace_back(e.row, e.value);
        std::vector<std::vector<std::pair<int, long long>>> hi_cols(hi.cols);
        for (const auto& e : hi.entries) hi_cols[e.col].emplace_back(e.row, e.value);
        std::map<int, long long> acc;
        for (int c = 0; c < hi.cols; ++c) {
            acc.clear();
            for (auto [mid, v1] : hi_cols[c])
                for (auto [row, v2] : lo_cols[mid]) acc[row] += v1 * v2;
            for (auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// profiles

void HomologyProfile::normalize() {
    while (!betti.empty() && betti.back() == 0 &&
           (torsion.size() < betti.size() || torsion.back().empty())) {
        if (torsion.size() == betti.size()) torsion.pop_back();
        betti.pop_back();
    }
    while (!torsion.empty() && torsion.back().empty() && torsion.size() > betti.size())
        torsion.pop_back();
}

bool HomologyProfile::trivial() const {
    if (betti_minus_one != 0) return false;
    for (auto b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

HomologyProfile HomologyProfile::suspended() const {
    HomologyProfile s;
    s.betti_minus_one = 0;
    s.betti.assign(1, betti_minus_one);
    s.betti.insert(s.betti.end(), betti.begin(), betti.end());
    s.torsion.assign(1, {});
    s.torsion.insert(s.torsion.end(), torsion.begin(), torsion.end());
    s.normalize();
    return s;
}

std::string HomologyProfile::to_string() const {
    std::string out = "betti[-1]=" + std::to_string(betti_minus_one) + " betti=[";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(betti[i]);
    }
    out += "]";
    bool any = false;
    for (const auto& t : torsion) any = any || !t.empty();
    if (any) {
        out += " torsion=[";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (i) out += ",";
            out += "[";
            for (std::size_t j = 0; j < torsion[i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(torsion[i][j]);
            }
            out += "]";
        }
        out += "]";
    }
    return out;
}

bool equal_profiles(HomologyProfile a, HomologyProfile b) {
    a.normalize();
    b.normalize();
    if (a.betti_minus_one != b.betti_minus_one || a.betti != b.betti) return false;
    auto nonempty = [](const std::vector<std::vector<long long>>& t) {
        std::vector<std::vector<long long>> out(t);
        while (!out.empty() && out.back().empty()) out.pop_back();
        return out;
    };
    return nonempty(a.torsion) == nonempty(b.torsion);
}

void FieldBetti::normalize() {
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
}

bool equal_field_betti(FieldBetti a, FieldBetti b) {
    a.normalize();
    b.normalize();
    return a.betti_minus_one == b.betti_minus_one && a.betti == b.betti;
}

FieldBetti rational_shadow(const HomologyProfile& p) {
    FieldBetti f;
    f.betti_minus_one = p.betti_minus_one;
    f.betti = p.betti;
    f.normalize();
    return f;
}

// ---------------------------------------------------------------------------
// integer homology

HomologyProfile integer_homology(const SimplicialComplex& k, const HomologyOptions& opt) {
    HomologyProfile out;
    if (k.is_void()) return out;
    if (k.face_count() > opt.max_faces) throw face_limit_error(opt.max_faces, k.face_count());
    if (opt.verify_d_squared && !verify_boundary_squared(k))
        throw std::logic_error("integer_homology: boundary square is nonzero");

    int dim = k.dim();
    if (dim == -1) { // {emptyset}
        out.betti_minus_one = 1;
        return out;
    }

    // ranks[d] = rank of the d-th boundary map, torsion of H_{d-1} from its
    // invariant factors
    std::vector<int> ranks(dim + 2, 0);
    std::vector<std::vector<long long>> tor(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        SmithSummary s = smith_normal_form(boundary_matrix(k, d));
        ranks[d] = s.rank();
        if (d >= 1) {
            for (const mpz_class& v : s.nontrivial()) {
                if (!v.fits_slong_p())
                    throw std::runtime_error("integer_homology: torsion coefficient exceeds long");
                tor[d - 1].push_back(v.get_si());
            }
        }
    }

    out.betti_minus_one = 1 - ranks[0];
    out.betti.resize(dim + 1);
    out.torsion = std::move(tor);
    auto f = k.f_vector();
    for (int d = 0; d <= dim; ++d) out.betti[d] = f[d] - ranks[d] - ranks[d + 1];

    // alternating-sum consistency against the face counts
    std::int64_t chi = -out.betti_minus_one;
    for (int d = 0; d <= dim; ++d) chi += (d % 2 == 0 ? 1 : -1) * out.betti[d];
    if (chi != k.reduced_euler_characteristic())
        throw std::logic_error("integer_homology: Euler characteristic mismatch");

    out.normalize();
    return out;
}

namespace {

FieldBetti field_betti_by_rank(const SimplicialComplex& k, unsigned p_or_zero) {
    FieldBetti out;
    if (k.is_void()) return out;
    int dim = k.dim();
    if (dim == -1) {
        out.betti_minus_one = 1;
        return out;
    }
    std::vector<int> ranks(dim + 2, 0);
    for (int d = 0; d <= dim; ++d) {
        SparseIntMatrix m = boundary_matrix(k, d);
        ranks[d] = p_or_zero == 0 ? rank_rational(m) : rank_mod_p(m, p_or_zero);
    }
    out.betti_minus_one = 1 - ranks[0];
    auto f = k.f_vector();
    out.betti.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) out.betti[d] = f[d] - ranks[d] - ranks[d + 1];
    out.normalize();
    return out;
}

} // namespace

FieldBetti betti_mod_p(const SimplicialComplex& k, unsigned p) {
    return field_betti_by_rank(k, p);
}

FieldBetti betti_rational(const SimplicialComplex& k) { return field_betti_by_rank(k, 0); }

// ---------------------------------------------------------------------------
// wedges

WedgePrediction WedgePrediction::wedge(int d, std::int64_t count) {
    if (count < 0) throw std::invalid_argument("wedge: negative sphere count");
    WedgePrediction w;
    if (count > 0) w.spheres.emplace_back(d, count);
    return w;
}

HomologyProfile WedgePrediction::profile() const {
    HomologyProfile p;
    for (auto [d, c] : spheres) {
        if (d < -1) throw std::invalid_argument("wedge: sphere dimension below -1");
        if (d == -1) {
            // S^{-1} is the empty complex; only a single copy makes sense
            p.betti_minus_one += c;
            continue;
        }
        if (static_cast<int>(p.betti.size()) <= d) p.betti.resize(d + 1, 0);
        p.betti[d] += c;
    }
    p.normalize();
    return p;
}

WedgePrediction WedgePrediction::suspended() const {
    WedgePrediction w;
    for (auto [d, c] : spheres) w.spheres.emplace_back(d + 1, c);
    return w;
}

std::string WedgePrediction::to_string() const {
    if (spheres.empty()) return "*";
    std::string out;
    for (std::size_t i = 0; i < spheres.size(); ++i) {
        auto [d, c] = spheres[i];
        if (i) out += " v ";
        if (c != 1) out += "v^" + std::to_string(c) + " ";
        out += "S^" + std::to_string(d);
    }
    return out;
}

bool matches_wedge(const HomologyProfile& profile, const WedgePrediction& w) {
    return equal_profiles(profile, w.profile());
}

// ---------------------------------------------------------------------------
// field Betti numbers of a clique complex, factored through the complement

bool FieldBettiPair::agree() const { return equal_field_betti(rational, mod_p); }

namespace {

// reduced Betti vector with a slot for dimension -1 at index 0
std::vector<std::int64_t> offset_form(const FieldBetti& b) {
    std::vector<std::int64_t> v;
    v.push_back(b.betti_minus_one);
    v.insert(v.end(), b.betti.begin(), b.betti.end());
    return v;
}

FieldBetti from_offset_form(std::vector<std::int64_t> v) {
    FieldBetti b;
    b.betti_minus_one = v.empty() ? 0 : v[0];
    if (!v.empty()) b.betti.assign(v.begin() + 1, v.end());
    b.normalize();
    return b;
}

// join convolution: reduced Betti of a join is the convolution of reduced
// Betti vectors when dimension -1 sits at index 0.
std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

FieldBettiPair clique_field_betti(const Graph& g, unsigned p, std::int64_t max_faces) {
    FieldBettiPair out;
    out.p = p;
    std::vector<std::int64_t> acc_q{1}, acc_p{1}; // identity for the join
    Graph co = complement(g);
    for (const auto& comp : components(co)) {
        // clique complex factors as the join over complement components;
        // each factor is the clique complex of the induced subgraph of g.
        auto sub = induced(g, comp);
        SimplicialComplex factor = clique_complex(sub.graph, std::nullopt, max_faces);
        acc_q = convolve(acc_q, offset_form(field_betti_by_rank(factor, 0)));
        acc_p = convolve(acc_p, offset_form(field_betti_by_rank(factor, p)));
    }
    out.rational = from_offset_form(std::move(acc_q));
    out.mod_p = from_offset_form(std::move(acc_p));
    return out;
}

// ---------------------------------------------------------------------------
// H_1 surjectivity of an inclusion

namespace {

// boundary_matrix refuses dimensions above dim(k); the surjectivity check
// wants an all-zero matrix there instead.
SparseIntMatrix boundary_matrix_or_empty(const SimplicialComplex& k, int d, int cols) {
    if (!k.is_void() && d >= 0 && d <= k.dim()) return boundary_matrix(k, d);
    SparseIntMatrix m;
    m.rows = 0;
    m.cols = cols;
    return m;
}

// Dense matrix over F_p (p == 0 means the rationals).  Sizes here are tiny,
// so a straightforward row reduction with explicit kernel extraction is
// plenty.
struct DenseField {
    unsigned p; // 0: rationals
    int rows = 0, cols = 0;
    std::vector<mpq_class> q;
    std::vector<std::uint32_t> f;

    DenseField(unsigned p, int r, int c) : p(p), rows(r), cols(c) {
        if (p == 0)
            q.assign(static_cast<std::size_t>(r) * c, mpq_class(0));
        else
            f.assign(static_cast<std::size_t>(r) * c, 0);
    }
    void set(int r, int c, long long v) {
        if (p == 0) {
            q[static_cast<std::size_t>(r) * cols + c] = mpq_class(static_cast<long>(v));
        } else {
            long long m = v % static_cast<long long>(p);
            if (m < 0) m += p;
            f[static_cast<std::size_t>(r) * cols + c] = static_cast<std::uint32_t>(m);
        }
    }
};

std::uint32_t mod_inv(std::uint32_t a, unsigned p) {
    std::uint64_t base = a, acc = 1;
    unsigned e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

// Row echelon; returns pivot column list.  Kernel basis (one vector per
// free column) lands in `kernel` when requested.
std::vector<int> row_reduce(DenseField& m, std::vector<std::vector<mpq_class>>* kernel_q,
                            std::vector<std::vector<std::uint32_t>>* kernel_f) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i) {
            bool nz = m.p == 0 ? m.q[static_cast<std::size_t>(i) * m.cols + c] != 0
                               : m.f[static_cast<std::size_t>(i) * m.cols + c] != 0;
            if (nz) { pr = i; break; }
        }
        if (pr < 0) continue;
        for (int j = 0; j < m.cols; ++j) {
            if (m.p == 0)
                std::swap(m.q[static_cast<std::size_t>(r) * m.cols + j],
                          m.q[static_cast<std::size_t>(pr) * m.cols + j]);
            else
                std::swap(m.f[static_cast<std::size_t>(r) * m.cols + j],
                          m.f[static_cast<std::size_t>(pr) * m.cols + j]);
        }
        if (m.p == 0) {
            mpq_class pv = m.q[static_cast<std::size_t>(r) * m.cols + c];
            for (int j = 0; j < m.cols; ++j) m.q[static_cast<std::size_t>(r) * m.cols + j] /= pv;
            for (int i = 0; i < m.rows; ++i) {
                if (i == r) continue;
                mpq_class fac = m.q[static_cast<std::size_t>(i) * m.cols + c];
                if (fac == 0) continue;
                for (int j = 0; j < m.cols; ++j)
                    m.q[static_cast<std::size_t>(i) * m.cols + j] -=
                        fac * m.q[static_cast<std::size_t>(r) * m.cols + j];
            }
        } else {
            std::uint32_t pv = m.f[static_cast<std::size_t>(r) * m.cols + c];
            std::uint32_t pinv = mod_inv(pv, m.p);
            for (int j = 0; j < m.cols; ++j) {
                auto& x = m.f[static_cast<std::size_t>(r) * m.cols + j];
                x = static_cast<std::uint32_t>(std::uint64_t(x) * pinv % m.p);
            }
            for (int i = 0; i < m.rows; ++i) {
                if (i == r) continue;
                std::uint64_t fac = m.f[static_cast<std::size_t>(i) * m.cols + c];
                if (fac == 0) continue;
                for (int j = 0; j < m.cols; ++j) {
                    auto& x = m.f[static_cast<std::size_t>(i) * m.cols + j];
                    std::uint64_t sub = fac * m.f[static_cast<std::size_t>(r) * m.cols + j] % m.p;
                    x = static_cast<std::uint32_t>((x + m.p - sub) % m.p);
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }

    if (kernel_q || kernel_f) {
        std::vector<char> is_pivot(m.cols, 0);
        for (int c : pivots) is_pivot[c] = 1;
        for (int c = 0; c < m.cols; ++c) {
            if (is_pivot[c]) continue;
            // x_c = 1, pivots solve to minus their row entry at c
            if (m.p == 0) {
                std::vector<mpq_class> v(m.cols, mpq_class(0));
                v[c] = 1;
                for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                    v[pivots[pi]] = -m.q[pi * m.cols + c];
                kernel_q->push_back(std::move(v));
            } else {
                std::vector<std::uint32_t> v(m.cols, 0);
                v[c] = 1;
                for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
                    std::uint32_t x = m.f[pi * m.cols + c];
                    v[pivots[pi]] = x == 0 ? 0 : m.p - x;
                }
                kernel_f->push_back(std::move(v));
            }
        }
    }
    return pivots;
}

bool surjective_over(const SimplicialComplex& sub, const SimplicialComplex& full, unsigned p) {
    int esub = sub.level_size(1);
    int efull = full.level_size(1);
    int vsub = sub.level_size(0);
    int tfull = full.level_size(2);

    // cycles of the subcomplex
    DenseField d1(p, std::max(vsub, 1), std::max(esub, 1));
    {
        SparseIntMatrix m = boundary_matrix_or_empty(sub, 1, esub);
        for (const auto& e : m.entries) d1.set(e.row, e.col, e.value);
    }
    std::vector<std::vector<mpq_class>> kq;
    std::vector<std::vector<std::uint32_t>> kf;
    row_reduce(d1, p == 0 ? &kq : nullptr, p == 0 ? nullptr : &kf);
    std::size_t kdim = p == 0 ? kq.size() : kf.size();
    if (esub == 0) kdim = 0;

    // edge positions of the subcomplex inside the ambient complex
    std::vector<int> edge_map(esub, -1);
    for (int i = 0; i < esub; ++i) {
        auto f = sub.face(1, i);
        edge_map[i] = *full.face_index(f);
    }

    // generators of Z_1(sub) + B_1(full), expressed in the ambient edges
    int gen_cols = static_cast<int>(kdim) + tfull;
    int zfull;
    {
        DenseField dfull(p, std::max(full.level_size(0), 1), std::max(efull, 1));
        SparseIntMatrix m = boundary_matrix_or_empty(full, 1, efull);
        for (const auto& e : m.entries) dfull.set(e.row, e.col, e.value);
        int rank = static_cast<int>(row_reduce(dfull, nullptr, nullptr).size());
        zfull = efull - rank;
    }
    if (gen_cols == 0) return zfull == 0;

    DenseField gens(p, std::max(efull, 1), gen_cols);
    for (std::size_t ki = 0; ki < kdim; ++ki)
        for (int e = 0; e < esub; ++e) {
            if (p == 0) {
                if (kq[ki][e] != 0) {
                    gens.q[static_cast<std::size_t>(edge_map[e]) * gen_cols + ki] = kq[ki][e];
                }
            } else if (kf[ki][e] != 0) {
                gens.f[static_cast<std::size_t>(edge_map[e]) * gen_cols + ki] = kf[ki][e];
            }
        }
    {
        SparseIntMatrix m = boundary_matrix_or_empty(full, 2, tfull);
        for (const auto& e : m.entries)
            gens.set(e.row, static_cast<int>(kdim) + e.col, e.value);
    }
    int span = static_cast<int>(row_reduce(gens, nullptr, nullptr).size());
    return span == zfull;
}

} // namespace

H1SurjectivityResult h1_inclusion_surjective(const SimplicialComplex& sub,
                                             const SimplicialComplex& full) {
    if (sub.vertex_count() != full.vertex_count())
        throw std::invalid_argument("h1_inclusion_surjective: ambient vertex sets differ");
    if (sub.is_void() || full.is_void())
        throw std::invalid_argument("h1_inclusion_surjective: void complex");
    for (int d = 0; d <= sub.dim(); ++d)
        for (int i = 0; i < sub.level_size(d); ++i)
            if (!full.contains(sub.face(d, i)))
                throw std::invalid_argument("h1_inclusion_surjective: not a subcomplex");

    H1SurjectivityResult r;
    r.rational = surjective_over(sub, full, 0);
    r.mod2 = surjective_over(sub, full, 2);
    r.mod3 = surjective_over(sub, full, 3);
    r.mod5 = surjective_over(sub, full, 5);
    return r;
}

} // namespace cpw
