#pragma once
// Shared assembler: turn an enumerated word set into a ChainComplex.
// Buckets by degree, sorts each bucket into canonical order, then fills the
// boundary matrices, checking that every boundary term drops the degree by
// exactly one and stays inside the enumerated set.

#include "equihom/barcobar.hpp"
#include "equihom/chain.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equihom::internal {

template <class W>
struct Assembled {
    ChainComplex cx;
    std::vector<std::vector<W>> words;   // words[d - cx.lo], sorted ascending
};

template <class W, class DegreeFn, class BoundaryFn, class NameFn>
Assembled<W> assemble_complex(std::vector<W> all, DegreeFn&& degree_of,
                              BoundaryFn&& boundary_of, NameFn&& name_of) {
    Assembled<W> out;
    if (all.empty()) {
        out.cx.dims = {0};
        out.cx.bnd = {SparseF2Matrix(0, 0)};
        out.cx.lo = 0;
        out.cx.hi = 0;
        out.words.resize(1);
        return out;
    }
    int lo = INT_MAX, hi = INT_MIN;
    for (const W& w : all) {
        int d = degree_of(w);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    out.cx.lo = lo;
    out.cx.hi = hi;
    out.words.resize(static_cast<size_t>(hi - lo) + 1);
    for (W& w : all) {
        size_t di = static_cast<size_t>(degree_of(w) - lo);
        out.words[di].push_back(std::move(w));
    }
    for (auto& bucket : out.words) std::sort(bucket.begin(), bucket.end());
    out.cx.dims.resize(out.words.size());
    for (size_t i = 0; i < out.words.size(); ++i)
        out.cx.dims[i] = static_cast<u32>(out.words[i].size());
    out.cx.bnd.reserve(out.words.size());
    for (int d = lo; d <= hi; ++d) {
        size_t di = static_cast<size_t>(d - lo);
        u32 rows = d == lo ? 0 : out.cx.dims[di - 1];
        SparseF2Matrix mat(rows, out.cx.dims[di]);
        for (u32 j = 0; j < out.cx.dims[di]; ++j) {
            const W& w = out.words[di][j];
            for (const W& u : boundary_of(w)) {
                int du = degree_of(u);
                if (du != d - 1)
                    throw AssemblyError("boundary term '" + name_of(u) + "' of '" + name_of(w) +
                                        "' lands in degree " + std::to_string(du) + ", expected " +
                                        std::to_string(d - 1) +
                                        "; at all-zero degrees structure maps must be strict");
                if (di == 0)
                    throw std::logic_error("assemble_complex: word set not closed under boundary "
                                           "(missing '" + name_of(u) + "')");
                const auto& below = out.words[di - 1];
                auto it = std::lower_bound(below.begin(), below.end(), u);
                if (it == below.end() || !(*it == u))
                    throw std::logic_error("assemble_complex: word set not closed under boundary "
                                           "(missing '" + name_of(u) + "')");
                mat.toggle(static_cast<u32>(it - below.begin()), j);
            }
        }
        mat.finalize();
        out.cx.bnd.push_back(std::move(mat));
    }
    return out;
}

} // namespace equihom::internal
