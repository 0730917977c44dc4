#pragma once
// Bit-packed F2 vectors, sparse F2 matrices, and the column reductions
// (rank, kernel, incremental echelon with combination tracking) that back
// the homology computations.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace equihom {

using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

class BitVec {
public:
    static constexpr u32 npos = 0xffffffffu;

    BitVec() = default;
    explicit BitVec(u32 size) : size_(size), w_((size + 63) / 64, 0) {}
    static BitVec unit(u32 size, u32 bit);

    u32 size() const { return size_; }
    bool get(u32 i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(u32 i) { w_[i >> 6] |= u64{1} << (i & 63); }
    void flip(u32 i) { w_[i >> 6] ^= u64{1} << (i & 63); }
    BitVec& operator^=(const BitVec& o);     // sizes must match
    bool is_zero() const;
    u32 lowest_set() const;                  // npos when zero
    u32 popcount() const;
    std::vector<u32> ones() const;
    bool operator==(const BitVec&) const = default;

private:
    u32 size_ = 0;
    std::vector<u64> w_;
};

// Sparse matrix over F2; each column holds strictly increasing row indices
// once finalize() has run. toggle() may push duplicates freely: paired
// occurrences of the same entry cancel during finalize().
struct SparseF2Matrix {
    u32 rows = 0, cols = 0;
    std::vector<std::vector<u32>> col;

    SparseF2Matrix() = default;
    SparseF2Matrix(u32 r, u32 c) : rows(r), cols(c), col(c) {}

    void toggle(u32 r, u32 c) { col[c].push_back(r); }
    void finalize();
    bool at(u32 r, u32 c) const;             // requires finalized column
    u64 entry_count() const;
    bool is_zero() const;
    SparseF2Matrix transpose() const;
    BitVec column_vec(u32 c) const;
    BitVec apply(const BitVec& v) const;     // matrix * vector, v.size() == cols
};

u32 rank(const SparseF2Matrix& m);

// Basis of { v : m v = 0 }, as coordinate vectors over the columns of m.
std::vector<BitVec> kernel_basis(const SparseF2Matrix& m);

// Incremental column echelon with combination tracking. Vectors inserted in
// order occupy coordinates 0, 1, 2, ... (dependent inserts still consume a
// coordinate but never appear in any expressed combination). express()
// rewrites a vector in the span as an xor of inserted vectors.
class ColumnEchelon {
public:
    ColumnEchelon(u32 nrows, u32 max_inserts)
        : nrows_(nrows), cap_(max_inserts) {}

    bool insert(const BitVec& v);            // true when v was independent
    std::optional<BitVec> express(const BitVec& v) const;
    u32 rank() const { return static_cast<u32>(pivots_.size()); }
    u32 inserted() const { return n_inserted_; }

private:
    struct PivCol { BitVec v; BitVec comb; };
    u32 nrows_ = 0, cap_ = 0, n_inserted_ = 0;
    std::vector<PivCol> pivots_;
    std::unordered_map<u32, u32> by_pivot_;  // pivot row -> index into pivots_
};

} // namespace equihom
