#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cpw {

// Sparse integer matrix in triplet form.  Rows/cols are 0-based; duplicate
// positions are not allowed.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        long long value;
    };
    std::vector<Entry> entries;
};

// Invariant factors d_1 | d_2 | ... | d_r (all positive, 1s included).
// rank == invariants.size().
struct SmithSummary {
    std::vector<mpz_class> invariants;
    int rank() const { return static_cast<int>(invariants.size()); }
    // Invariant factors > 1, as the torsion part of a cokernel.
    std::vector<mpz_class> nontrivial() const {
        std::vector<mpz_class> out;
        for (const mpz_class& d : invariants)
            if (d > 1) out.push_back(d);
        return out;
    }
};

// Exact Smith normal form over the integers.  Strategy: sparse elimination
// restricted to unit pivots chosen by Markowitz fill cost (64-bit arithmetic
// with overflow checks, redone with big integers if a product ever
// overflows), then a dense big-integer reduction of whatever no-unit-pivot
// core remains.
SmithSummary smith_normal_form(const SparseIntMatrix& m);

// Rank over the field with p elements (p a small prime).
int rank_mod_p(const SparseIntMatrix& m, unsigned p);

// Rank over the rationals, by fraction-free integer elimination with
// per-row gcd reduction (row scaling keeps rank intact).
int rank_rational(const SparseIntMatrix& m);

} // namespace cpw
