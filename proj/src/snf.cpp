#include "cpow/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "cpow/errors.hpp"

namespace cpw {

namespace {

// --- coefficient rings ------------------------------------------------------

struct ModRing {
    using V = std::uint32_t;
    unsigned p;
    V from_ll(long long x) const {
        long long r = x % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<V>(r);
    }
    bool is_zero(V a) const { return a == 0; }
    V mul(V a, V b) const { return static_cast<V>(std::uint64_t(a) * b % p); }
    V sub(V a, V b) const { return a >= b ? a - b : a + p - b; }
    V add(V a, V b) const {
        V s = a + b;
        return s >= p ? s - p : s;
    }
    V neg(V a) const { return a ? p - a : 0; }
    V inv(V a) const {
        // p prime: a^(p-2)
        std::uint64_t base = a, acc = 1;
        unsigned e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<V>(acc);
    }
};

struct CheckedRing {
    using V = long long;
    V from_ll(long long x) const { return x; }
    bool is_zero(V a) const { return a == 0; }
    V mul(V a, V b) const {
        V r;
        if (__builtin_mul_overflow(a, b, &r)) throw overflow_signal{};
        return r;
    }
    V sub(V a, V b) const {
        V r;
        if (__builtin_sub_overflow(a, b, &r)) throw overflow_signal{};
        return r;
    }
    V add(V a, V b) const {
        V r;
        if (__builtin_add_overflow(a, b, &r)) throw overflow_signal{};
        return r;
    }
    V neg(V a) const { return sub(0, a); }
    static V abs_gcd(V a, V b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
};

struct BigRing {
    using V = mpz_class;
    V from_ll(long long x) const { return V(static_cast<long>(x)); }
    bool is_zero(const V& a) const { return a == 0; }
    V mul(const V& a, const V& b) const { return a * b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V add(const V& a, const V& b) const { return a + b; }
    V neg(const V& a) const { return -a; }
    static V abs_gcd(const V& a, const V& b) {
        V g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
};

// --- sparse elimination engine ---------------------------------------------

// Rows are sorted (col, value) vectors; per-column row lists may hold stale
// ids and are compacted lazily.  Column choice goes through a lazy min-heap
// on (live count, col), so ties and revalidation are deterministic.
template <class Ring>
struct SparseElim {
    using V = typename Ring::V;
    Ring ring;
    int nrows = 0, ncols = 0;
    std::vector<std::vector<std::pair<int, V>>> rows;
    std::vector<std::vector<int>> col_rows;
    std::vector<char> row_done, col_done;
    using HeapItem = std::pair<long long, int>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;

    explicit SparseElim(Ring r) : ring(r) {}

    void load(const SparseIntMatrix& m) {
        nrows = m.rows;
        ncols = m.cols;
        rows.assign(nrows, {});
        col_rows.assign(ncols, {});
        row_done.assign(nrows, 0);
        col_done.assign(ncols, 0);
        std::vector<SparseIntMatrix::Entry> entries(m.entries);
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            if (e.row < 0 || e.row >= nrows || e.col < 0 || e.col >= ncols)
                throw std::invalid_argument("sparse matrix: entry out of range");
            if (i > 0 && entries[i - 1].row == e.row && entries[i - 1].col == e.col)
                throw std::invalid_argument("sparse matrix: duplicate entry");
            V v = ring.from_ll(e.value);
            if (ring.is_zero(v)) continue;
            rows[e.row].emplace_back(e.col, std::move(v));
            col_rows[e.col].push_back(e.row);
        }
        for (int c = 0; c < ncols; ++c)
            if (!col_rows[c].empty())
                heap.emplace(static_cast<long long>(col_rows[c].size()), c);
    }

    bool row_has(int r, int c) const {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it != row.end() && it->first == c;
    }

    const V& value_at(int r, int c) const {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it->second;
    }

    // Drop dead/stale ids; returns live row list (ascending, deduplicated).
    std::vector<int>& compact(int c) {
        auto& list = col_rows[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::size_t out = 0;
        for (int r : list)
            if (!row_done[r] && row_has(r, c)) list[out++] = r;
        list.resize(out);
        return list;
    }

    // target <- alpha*target + beta*pivot_row; registers new column entries.
    void axpy(int target, int pivot_row, const V& alpha, const V& beta,
              std::vector<int>& grown) {
        const auto& pr = rows[pivot_row];
        auto& tr = rows[target];
        std::vector<std::pair<int, V>> out;
        out.reserve(tr.size() + pr.size());
        std::size_t i = 0, j = 0;
        bool scale = !is_one(alpha);
        while (i < tr.size() || j < pr.size()) {
            if (j == pr.size() || (i < tr.size() && tr[i].first < pr[j].first)) {
                V v = scale ? ring.mul(alpha, tr[i].second) : std::move(tr[i].second);
                if (!ring.is_zero(v)) out.emplace_back(tr[i].first, std::move(v));
                ++i;
            } else if (i == tr.size() || pr[j].first < tr[i].first) {
                V v = ring.mul(beta, pr[j].second);
                if (!ring.is_zero(v)) {
                    grown.push_back(pr[j].first);
                    col_rows[pr[j].first].push_back(target);
                    out.emplace_back(pr[j].first, std::move(v));
                }
                ++j;
            } else {
                V a = scale ? ring.mul(alpha, tr[i].second) : std::move(tr[i].second);
                V v = ring.add(std::move(a), ring.mul(beta, pr[j].second));
                if (!ring.is_zero(v)) out.emplace_back(tr[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        tr = std::move(out);
    }

    static bool is_one(const V& v) {
        if constexpr (std::is_same_v<V, mpz_class>)
            return v == 1;
        else
            return v == 1;
    }

    void push_grown(std::vector<int>& grown) {
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        for (int c : grown)
            if (!col_done[c])
                heap.emplace(static_cast<long long>(col_rows[c].size()), c);
        grown.clear();
    }
};

// --- rank over a field ------------------------------------------------------

// kernel shared by mod-p and rational rank: pivot on any nonzero entry in a
// minimal column; `reduce_rows` divides each updated row by its gcd, which
// is a row scaling and thus rank-preserving (used for the integer kernels).
template <class Ring>
int rank_elimination(SparseElim<Ring>& e, bool reduce_rows) {
    using V = typename Ring::V;
    int rank = 0;
    std::vector<int> grown;
    while (!e.heap.empty()) {
        auto [count, c] = e.heap.top();
        e.heap.pop();
        if (e.col_done[c]) continue;
        auto& live = e.compact(c);
        long long actual = static_cast<long long>(live.size());
        if (actual == 0) continue;
        if (actual != count) {
            e.heap.emplace(actual, c);
            continue;
        }
        // pivot: smallest row among those with minimal length
        int pr = live[0];
        for (int r : live)
            if (e.rows[r].size() < e.rows[pr].size() ||
                (e.rows[r].size() == e.rows[pr].size() && r < pr))
                pr = r;
        V pv = e.value_at(pr, c);
        [[maybe_unused]] V pinv{};
        if constexpr (std::is_same_v<Ring, ModRing>) pinv = e.ring.inv(pv);
        for (int r : live) {
            if (r == pr) continue;
            V rv = e.value_at(r, c);
            if constexpr (std::is_same_v<Ring, ModRing>) {
                // r <- r - (rv/pv)*pr
                V f = e.ring.neg(e.ring.mul(rv, pinv));
                V one = 1;
                e.axpy(r, pr, one, f, grown);
            } else {
                // r <- pv*r - rv*pr
                e.axpy(r, pr, pv, e.ring.neg(rv), grown);
                if (reduce_rows) {
                    V g = 0;
                    for (auto& [col, val] : e.rows[r]) {
                        g = Ring::abs_gcd(g, val);
                        if (e.is_one(g)) break;
                    }
                    if (!e.is_one(g) && !e.ring.is_zero(g))
                        for (auto& [col, val] : e.rows[r]) val = val / g;
                }
            }
        }
        e.row_done[pr] = 1;
        e.col_done[c] = 1;
        e.col_rows[c].clear();
        ++rank;
        e.push_grown(grown);
    }
    return rank;
}

} // namespace

int rank_mod_p(const SparseIntMatrix& m, unsigned p) {
    if (p < 2 || p > 1u << 15)
        throw std::invalid_argument("rank_mod_p: modulus out of range");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("rank_mod_p: modulus must be prime");
    SparseElim<ModRing> e(ModRing{p});
    e.load(m);
    return rank_elimination(e, false);
}

int rank_rational(const SparseIntMatrix& m) {
    try {
        SparseElim<CheckedRing> e(CheckedRing{});
        e.load(m);
        return rank_elimination(e, true);
    } catch (const overflow_signal&) {
        SparseElim<BigRing> e(BigRing{});
        e.load(m);
        return rank_elimination(e, true);
    }
}

// --- Smith normal form ------------------------------------------------------

namespace {

// Dense big-integer Smith reduction for the no-unit-pivot core.  Textbook:
// bring the absolutely smallest entry to the corner, reduce its row and
// column with division steps, fix divisibility violations by row addition,
// repeat.  |pivot| strictly drops on every retry, so this terminates.
std::vector<mpz_class> dense_snf(std::vector<std::vector<mpz_class>> a) {
    int nr = static_cast<int>(a.size());
    int nc = nr ? static_cast<int>(a[0].size()) : 0;
    std::vector<mpz_class> inv;
    for (int t = 0; t < std::min(nr, nc); ++t) {
        // locate minimal nonzero entry of the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = t; i < nr; ++i) std::swap(a[i][t], a[i][pj]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < nr; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q = a[i][t] / a[t][t]; // truncated
                if (q != 0)
                    for (int j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) { // remainder smaller than pivot: promote
                    std::swap(a[t], a[i]);
                    settled = false;
                    break;
                }
            }
            if (!settled) continue;
            for (int j = t + 1; j < nc; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q = a[t][j] / a[t][t];
                if (q != 0)
                    for (int i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = t; i < nr; ++i) std::swap(a[i][t], a[i][j]);
                    settled = false;
                    break;
                }
            }
            if (!settled) continue;
            // divisibility: pivot must divide every remaining entry
            for (int i = t + 1; i < nr && settled; ++i)
                for (int j = t + 1; j < nc && settled; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
                        settled = false;
                    }
        }
        inv.push_back(abs(a[t][t]));
    }
    return inv;
}

constexpr int kDenseCoreLimit = 1500;

// Unit-pivot sparse phase; returns invariants.  Restarted with BigRing when
// 64-bit arithmetic overflows.
template <class Ring>
SmithSummary smith_with_ring(const SparseIntMatrix& m, Ring ring) {
    SparseElim<Ring> e(ring);
    e.load(m);
    using V = typename Ring::V;

    long long unit_rank = 0;
    std::vector<int> grown;
    std::vector<std::pair<long long, int>> parked; // (count at parking, col)
    long long version = 0, parked_version = -1;

    auto is_unit = [&](const V& v) {
        if constexpr (std::is_same_v<V, mpz_class>)
            return v == 1 || v == -1;
        else
            return v == 1 || v == -1;
    };

    while (true) {
        if (e.heap.empty()) {
            if (parked.empty() || parked_version == version) break;
            for (auto& [cnt, c] : parked) e.heap.emplace(cnt, c);
            parked.clear();
            parked_version = version;
            continue;
        }
        auto [count, c] = e.heap.top();
        e.heap.pop();
        if (e.col_done[c]) continue;
        auto& live = e.compact(c);
        long long actual = static_cast<long long>(live.size());
        if (actual == 0) continue;
        if (actual != count) {
            e.heap.emplace(actual, c);
            continue;
        }
        int pr = -1;
        for (int r : live) {
            if (!is_unit(e.value_at(r, c))) continue;
            if (pr < 0 || e.rows[r].size() < e.rows[pr].size() ||
                (e.rows[r].size() == e.rows[pr].size() && r < pr))
                pr = r;
        }
        if (pr < 0) { // no unit pivot here for now
            parked.emplace_back(actual, c);
            continue;
        }
        bool negative;
        if constexpr (std::is_same_v<V, mpz_class>)
            negative = e.value_at(pr, c) < 0;
        else
            negative = e.value_at(pr, c) < 0;
        for (int r : live) {
            if (r == pr) continue;
            V rv = e.value_at(r, c);
            // r <- r - rv*sign(pivot)*pr
            V beta = negative ? rv : e.ring.neg(rv);
            V one = e.ring.from_ll(1);
            e.axpy(r, pr, one, beta, grown);
        }
        e.row_done[pr] = 1;
        e.col_done[c] = 1;
        e.col_rows[c].clear();
        ++unit_rank;
        ++version;
        e.push_grown(grown);
    }

    // Whatever is left has no unit entries; reduce it densely.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < e.nrows; ++r)
        if (!e.row_done[r] && !e.rows[r].empty()) live_rows.push_back(r);
    std::vector<char> col_in_use(e.ncols, 0);
    for (int r : live_rows)
        for (auto& [c, v] : e.rows[r]) col_in_use[c] = 1;
    for (int c = 0; c < e.ncols; ++c)
        if (col_in_use[c]) live_cols.push_back(c);

    SmithSummary out;
    out.invariants.assign(static_cast<std::size_t>(unit_rank), mpz_class(1));
    if (!live_rows.empty()) {
        if (static_cast<int>(live_rows.size()) > kDenseCoreLimit ||
            static_cast<int>(live_cols.size()) > kDenseCoreLimit)
            throw std::runtime_error("smith_normal_form: residual dense core exceeds " +
                                     std::to_string(kDenseCoreLimit) + " rows/cols");
        std::vector<int> col_pos(e.ncols, -1);
        for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<int>(i);
        std::vector<std::vector<mpz_class>> dense(
            live_rows.size(), std::vector<mpz_class>(live_cols.size(), mpz_class(0)));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (auto& [c, v] : e.rows[live_rows[i]]) {
                if constexpr (std::is_same_v<V, mpz_class>)
                    dense[i][col_pos[c]] = v;
                else
                    dense[i][col_pos[c]] = mpz_class(static_cast<long>(v));
            }
        for (mpz_class& d : dense_snf(std::move(dense))) out.invariants.push_back(std::move(d));
    }
    return out;
}

} // namespace

SmithSummary smith_normal_form(const SparseIntMatrix& m) {
    try {
        return smith_with_ring(m, CheckedRing{});
    } catch (const overflow_signal&) {
        return smith_with_ring(m, BigRing{});
    }
}

} // namespace cpw
