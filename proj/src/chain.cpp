#include "equihom/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace equihom {

int sat_add(int a, int b) {
    if (a == INT_MIN || a == INT_MAX) return a;
    if (b == INT_MIN || b == INT_MAX) return b;
    long long s = static_cast<long long>(a) + b;
    if (s <= INT_MIN) return INT_MIN;
    if (s >= INT_MAX) return INT_MAX;
    return static_cast<int>(s);
}

u32 ChainComplex::dim(int d) const {
    if (d < lo || d > hi) return 0;
    return dims[static_cast<size_t>(d - lo)];
}

SparseF2Matrix ChainComplex::boundary(int d) const {
    if (d < lo || d > hi) return SparseF2Matrix(dim(d - 1), dim(d));
    return bnd[static_cast<size_t>(d - lo)];
}

std::optional<D2Failure> check_d2(const ChainComplex& c) {
    for (int d = c.lo + 1; d <= c.hi; ++d) {
        const SparseF2Matrix& a = c.bnd[static_cast<size_t>(d - c.lo)];
        const SparseF2Matrix& b = c.bnd[static_cast<size_t>(d - 1 - c.lo)];
        if (b.rows == 0) continue;
        for (u32 col = 0; col < a.cols; ++col) {
            BitVec acc(b.rows);
            for (u32 r : a.col[col]) acc ^= b.column_vec(r);
            if (!acc.is_zero()) return D2Failure{d, col};
        }
    }
    return std::nullopt;
}

std::map<int, u32> homology_dims(const ChainComplex& c, DegreeRange window) {
    // One degree beyond the support on each side suffices to witness the
    // vanishing of everything farther out.
    int wl = std::max(window.lo, c.lo - 1);
    int wh = std::min(window.hi, c.hi + 1);
    std::map<int, u32> ranks;   // degree -> rank of bnd at that degree
    auto rank_at = [&](int d) -> u32 {
        auto it = ranks.find(d);
        if (it != ranks.end()) return it->second;
        u32 r = (d < c.lo || d > c.hi) ? 0 : rank(c.bnd[static_cast<size_t>(d - c.lo)]);
        ranks.emplace(d, r);
        return r;
    };
    std::map<int, u32> out;
    for (int d = wl; d <= wh; ++d) {
        if (!c.trusted.contains(d)) continue;
        u32 h = c.dim(d) - rank_at(d) - rank_at(d + 1);
        out[d] = h;
    }
    return out;
}

SparseF2Matrix ChainMap::at(int d, u32 x_dim, u32 y_dim) const {
    if (d < lo || d > hi) return SparseF2Matrix(y_dim, x_dim);
    const SparseF2Matrix& m = comp[static_cast<size_t>(d - lo)];
    if (m.rows != y_dim || m.cols != x_dim)
        throw std::logic_error("ChainMap::at: component shape mismatch");
    return m;
}

std::optional<int> chain_map_defect(const ChainComplex& x, const ChainComplex& y,
                                    const ChainMap& f) {
    for (int d = x.lo; d <= x.hi; ++d) {
        SparseF2Matrix fd = f.at(d, x.dim(d), y.dim(d));
        SparseF2Matrix fd1 = f.at(d - 1, x.dim(d - 1), y.dim(d - 1));
        SparseF2Matrix bx = x.boundary(d);
        SparseF2Matrix by = y.boundary(d);
        for (u32 c = 0; c < x.dim(d); ++c) {
            BitVec lhs = by.apply(fd.column_vec(c));
            BitVec rhs = fd1.apply(bx.column_vec(c));
            if (!(lhs == rhs)) return d;
        }
    }
    return std::nullopt;
}

ChainComplex cone(const ChainComplex& x, const ChainComplex& y, const ChainMap& f) {
    ChainComplex z;
    z.lo = std::min(sat_add(x.lo, 1), y.lo);
    z.hi = std::max(sat_add(x.hi, 1), y.hi);
    if (x.hi < x.lo && y.hi < y.lo) { z = ChainComplex{}; return z; }
    z.dims.resize(static_cast<size_t>(z.hi - z.lo + 1));
    z.bnd.resize(z.dims.size());
    for (int d = z.lo; d <= z.hi; ++d)
        z.dims[static_cast<size_t>(d - z.lo)] = x.dim(d - 1) + y.dim(d);
    for (int d = z.lo; d <= z.hi; ++d) {
        u32 sx = x.dim(d - 1), sy = y.dim(d);
        u32 tx = x.dim(d - 2), ty = y.dim(d - 1);
        SparseF2Matrix m(tx + ty, sx + sy);
        SparseF2Matrix bx = x.boundary(d - 1);
        SparseF2Matrix fd = f.at(d - 1, x.dim(d - 1), y.dim(d - 1));
        for (u32 c = 0; c < sx; ++c) {
            for (u32 r : bx.col[c]) m.toggle(r, c);
            for (u32 r : fd.col[c]) m.toggle(tx + r, c);
        }
        SparseF2Matrix by = y.boundary(d);
        for (u32 c = 0; c < sy; ++c)
            for (u32 r : by.col[c]) m.toggle(tx + r, sx + c);
        m.finalize();
        z.bnd[static_cast<size_t>(d - z.lo)] = std::move(m);
    }
    z.trusted.lo = sat_add(std::max(x.trusted.lo, y.trusted.lo), 1);
    z.trusted.hi = std::min(x.trusted.hi, y.trusted.hi);
    return z;
}

HomologyBasis::HomologyBasis(const ChainComplex& c, int d) : ech_(0, 0) {
    SparseF2Matrix bd = c.boundary(d);
    SparseF2Matrix bd1 = c.boundary(d + 1);
    std::vector<BitVec> cycles = kernel_basis(bd);
    ech_ = ColumnEchelon(c.dim(d), bd1.cols + static_cast<u32>(cycles.size()));
    for (u32 j = 0; j < bd1.cols; ++j) ech_.insert(bd1.column_vec(j));
    for (auto& z : cycles) {
        if (ech_.insert(z)) {
            rep_slot_.push_back(ech_.inserted() - 1);
            reps_.push_back(std::move(z));
        }
    }
}

std::optional<BitVec> HomologyBasis::coords_of(const BitVec& v) const {
    auto comb = ech_.express(v);
    if (!comb) return std::nullopt;
    BitVec out(dim());
    for (u32 i = 0; i < dim(); ++i)
        if (comb->get(rep_slot_[i])) out.set(i);
    return out;
}

SparseF2Matrix induced_map(const HomologyBasis& src, const HomologyBasis& tgt,
                           const SparseF2Matrix& f_d) {
    SparseF2Matrix m(tgt.dim(), src.dim());
    for (u32 j = 0; j < src.dim(); ++j) {
        BitVec y = f_d.apply(src.reps()[j]);
        auto coords = tgt.coords_of(y);
        if (!coords)
            throw std::logic_error("induced_map: image of a cycle is not a cycle");
        for (u32 r : coords->ones()) m.toggle(r, j);
    }
    m.finalize();
    return m;
}

namespace {

bool composite_is_zero(const SparseF2Matrix& first, const SparseF2Matrix& second) {
    for (u32 c = 0; c < first.cols; ++c)
        if (!second.apply(first.column_vec(c)).is_zero()) return false;
    return true;
}

} // namespace

std::vector<ExactnessNode> cone_les_report(const ChainComplex& x, const ChainComplex& y,
                                           const ChainMap& f, DegreeRange window) {
    ChainComplex z = cone(x, y, f);
    std::map<int, HomologyBasis> hx, hy, hz;
    auto basis = [](std::map<int, HomologyBasis>& cache, const ChainComplex& c, int d)
        -> const HomologyBasis& {
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, HomologyBasis(c, d)).first;
        return it->second;
    };
    // chain-level components of Y -> Cone and Cone -> X[-1]
    auto incl = [&](int d) {
        u32 sx = x.dim(d - 1), sy = y.dim(d);
        SparseF2Matrix m(sx + sy, sy);
        for (u32 c = 0; c < sy; ++c) m.toggle(sx + c, c);
        m.finalize();
        return m;
    };
    auto proj = [&](int d) {
        u32 sx = x.dim(d - 1), sy = y.dim(d);
        SparseF2Matrix m(sx, sx + sy);
        for (u32 c = 0; c < sx; ++c) m.toggle(c, c);
        m.finalize();
        return m;
    };
    std::map<int, SparseF2Matrix> fstar, istar, pstar;
    auto get_fstar = [&](int d) -> const SparseF2Matrix& {
        auto it = fstar.find(d);
        if (it == fstar.end())
            it = fstar.emplace(d, induced_map(basis(hx, x, d), basis(hy, y, d),
                                              f.at(d, x.dim(d), y.dim(d)))).first;
        return it->second;
    };
    auto get_istar = [&](int d) -> const SparseF2Matrix& {
        auto it = istar.find(d);
        if (it == istar.end())
            it = istar.emplace(d, induced_map(basis(hy, y, d), basis(hz, z, d), incl(d))).first;
        return it->second;
    };
    auto get_pstar = [&](int d) -> const SparseF2Matrix& {
        auto it = pstar.find(d);
        if (it == pstar.end())
            it = pstar.emplace(d, induced_map(basis(hz, z, d), basis(hx, x, d - 1), proj(d))).first;
        return it->second;
    };
    auto node = [&](int degree, const char* label, bool trusted_ok,
                    const SparseF2Matrix* in, const SparseF2Matrix* out, u32 mid) {
        ExactnessNode n{degree, label, trusted_ok, false, 0, 0, mid};
        if (trusted_ok) {
            n.rank_in = rank(*in);
            n.rank_out = rank(*out);
            n.exact = composite_is_zero(*in, *out) && n.rank_in + n.rank_out == mid;
        }
        return n;
    };
    std::vector<ExactnessNode> nodes;
    for (int d = window.lo; d <= window.hi; ++d) {
        bool t_y = x.trusted.contains(d) && y.trusted.contains(d) && z.trusted.contains(d);
        if (t_y)
            nodes.push_back(node(d, "H(target)", true, &get_fstar(d), &get_istar(d),
                                 basis(hy, y, d).dim()));
        else
            nodes.push_back(node(d, "H(target)", false, nullptr, nullptr, 0));

        bool t_z = y.trusted.contains(d) && z.trusted.contains(d) && x.trusted.contains(d - 1);
        if (t_z)
            nodes.push_back(node(d, "H(cone)", true, &get_istar(d), &get_pstar(d),
                                 basis(hz, z, d).dim()));
        else
            nodes.push_back(node(d, "H(cone)", false, nullptr, nullptr, 0));

        bool t_x = z.trusted.contains(d) && x.trusted.contains(d - 1) && y.trusted.contains(d - 1);
        if (t_x)
            nodes.push_back(node(d - 1, "H(source)", true, &get_pstar(d), &get_fstar(d - 1),
                                 basis(hx, x, d - 1).dim()));
        else
            nodes.push_back(node(d - 1, "H(source)", false, nullptr, nullptr, 0));
    }
    return nodes;
}

} // namespace equihom
