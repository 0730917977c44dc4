#include "equihom/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace equihom {

BitVec BitVec::unit(u32 size, u32 bit) {
    BitVec v(size);
    v.set(bit);
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (size_ != o.size_)
        throw std::invalid_argument("BitVec xor: size mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::is_zero() const {
    for (u64 w : w_)
        if (w) return false;
    return true;
}

u32 BitVec::lowest_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<u32>(i * 64 + std::countr_zero(w_[i]));
    return npos;
}

u32 BitVec::popcount() const {
    u32 n = 0;
    for (u64 w : w_) n += static_cast<u32>(std::popcount(w));
    return n;
}

std::vector<u32> BitVec::ones() const {
    std::vector<u32> out;
    for (size_t i = 0; i < w_.size(); ++i) {
        u64 w = w_[i];
        while (w) {
            out.push_back(static_cast<u32>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

void SparseF2Matrix::finalize() {
    for (auto& c : col) {
        std::sort(c.begin(), c.end());
        std::vector<u32> kept;
        for (size_t i = 0; i < c.size();) {
            size_t j = i;
            while (j < c.size() && c[j] == c[i]) ++j;
            if ((j - i) & 1) kept.push_back(c[i]);
            i = j;
        }
        c = std::move(kept);
    }
}

bool SparseF2Matrix::at(u32 r, u32 c) const {
    const auto& v = col[c];
    return std::binary_search(v.begin(), v.end(), r);
}

u64 SparseF2Matrix::entry_count() const {
    u64 n = 0;
    for (const auto& c : col) n += c.size();
    return n;
}

bool SparseF2Matrix::is_zero() const { return entry_count() == 0; }

SparseF2Matrix SparseF2Matrix::transpose() const {
    SparseF2Matrix t(cols, rows);
    for (u32 c = 0; c < cols; ++c)
        for (u32 r : col[c]) t.col[r].push_back(c);
    for (auto& c : t.col) std::sort(c.begin(), c.end());
    return t;
}

BitVec SparseF2Matrix::column_vec(u32 c) const {
    BitVec v(rows);
    for (u32 r : col[c]) v.flip(r);
    return v;
}

BitVec SparseF2Matrix::apply(const BitVec& v) const {
    if (v.size() != cols)
        throw std::invalid_argument("SparseF2Matrix::apply: size mismatch");
    BitVec out(rows);
    for (u32 c : v.ones())
        for (u32 r : col[c]) out.flip(r);
    return out;
}

u32 rank(const SparseF2Matrix& m) {
    std::unordered_map<u32, u32> by_pivot;
    std::vector<BitVec> pivots;
    for (u32 c = 0; c < m.cols; ++c) {
        BitVec v = m.column_vec(c);
        for (;;) {
            u32 p = v.lowest_set();
            if (p == BitVec::npos) break;
            auto it = by_pivot.find(p);
            if (it == by_pivot.end()) {
                by_pivot.emplace(p, static_cast<u32>(pivots.size()));
                pivots.push_back(std::move(v));
                break;
            }
            v ^= pivots[it->second];
        }
    }
    return static_cast<u32>(pivots.size());
}

std::vector<BitVec> kernel_basis(const SparseF2Matrix& m) {
    ColumnEchelon ech(m.rows, m.cols);
    std::vector<BitVec> ker;
    for (u32 c = 0; c < m.cols; ++c) {
        BitVec v = m.column_vec(c);
        if (!ech.insert(v)) {
            auto comb = ech.express(v);
            BitVec k(m.cols);
            for (u32 i : comb->ones()) k.flip(i);
            k.flip(c);
            ker.push_back(std::move(k));
        }
    }
    return ker;
}

bool ColumnEchelon::insert(const BitVec& v) {
    if (v.size() != nrows_)
        throw std::invalid_argument("ColumnEchelon::insert: size mismatch");
    if (n_inserted_ >= cap_)
        throw std::logic_error("ColumnEchelon::insert: capacity exceeded");
    u32 idx = n_inserted_++;
    BitVec w = v;
    BitVec comb = BitVec::unit(cap_, idx);
    for (;;) {
        u32 p = w.lowest_set();
        if (p == BitVec::npos) return false;
        auto it = by_pivot_.find(p);
        if (it == by_pivot_.end()) {
            by_pivot_.emplace(p, static_cast<u32>(pivots_.size()));
            pivots_.push_back({std::move(w), std::move(comb)});
            return true;
        }
        w ^= pivots_[it->second].v;
        comb ^= pivots_[it->second].comb;
    }
}

std::optional<BitVec> ColumnEchelon::express(const BitVec& v) const {
    if (v.size() != nrows_)
        throw std::invalid_argument("ColumnEchelon::express: size mismatch");
    BitVec w = v;
    BitVec comb(cap_);
    for (;;) {
        u32 p = w.lowest_set();
        if (p == BitVec::npos) return comb;
        auto it = by_pivot_.find(p);
        if (it == by_pivot_.end()) return std::nullopt;
        w ^= pivots_[it->second].v;
        comb ^= pivots_[it->second].comb;
    }
}

} // namespace equihom
