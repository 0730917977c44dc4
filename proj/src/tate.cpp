#include "equihom/tate.hpp"

#include "assemble.hpp"
#include "internal.hpp"

#include <algorithm>
#include <stdexcept>

namespace equihom {

using internal::AlgIndex;
using internal::CoalgIndex;
using internal::ModIndex;
using internal::Word;
using internal::WordIter;
using internal::cancel_pairs;
using internal::reversed_word;
using internal::slice;
using internal::splice;

AInfBimodule dualizing_bimodule(const AInfAlgebra& a) {
    AInfBimodule b;
    b.name = a.name + "_dualizing";
    b.kind = BimodKind::coalgebra_algebra;
    b.basis = a.basis;
    for (const auto& [r, terms] : a.mu) {
        (void)r;
        for (const AlgTerm& t : terms)
            for (size_t lp = 0; lp < t.in.size(); ++lp) {
                BimodTerm bt;
                bt.m_in = t.in[lp];
                bt.in_right = slice(t.in, lp + 1, t.in.size());
                bt.out_left = reversed_word(slice(t.in, 0, lp));
                bt.m_out = t.out;
                b.terms.push_back(std::move(bt));
            }
    }
    return b;
}

bool TwistedWord::operator<(const TwistedWord& o) const {
    size_t s = c.size() + a.size(), os = o.c.size() + o.a.size();
    if (s != os) return s < os;
    if (c != o.c) return c < o.c;
    if (a0 != o.a0) return a0 < o.a0;
    if (a != o.a) return a < o.a;
    return m < o.m;
}

namespace {

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

std::vector<TwistedWord> twisted_boundary_impl(const TwistedComplex& tc, const CoalgIndex& ci,
                                               const AlgIndex& ai, const ModIndex& mi,
                                               const TwistedWord& w) {
    std::vector<TwistedWord> out;
    size_t lp = w.c.size(), k = w.a.size();
    u32 l_max = tc.trunc.l_max;
    // prefix gains one augmentation letter
    if (lp + 1 <= l_max)
        for (u16 b : tc.dual.triv) {
            TwistedWord v = w;
            v.c.insert(v.c.begin(), b);
            out.push_back(std::move(v));
        }
    // one prefix letter splits by the dual coproduct
    for (size_t i = 0; i < lp; ++i)
        for (const Word& mid : ci.all(w.c[i])) {
            if (lp - 1 + mid.size() > l_max) continue;
            out.push_back({splice(w.c, i, i + 1, mid), w.a0, w.a, w.m});
        }
    // the a0 slot moves by the dualizing bimodule
    for (const BimodTerm& t : tc.bimod.terms) {
        if (t.m_in != w.a0 || !is_prefix(t.in_right, w.a)) continue;
        if (lp + t.out_left.size() > l_max) continue;
        Word nc = w.c;
        nc.insert(nc.end(), t.out_left.begin(), t.out_left.end());
        out.push_back({std::move(nc), t.m_out, slice(w.a, t.in_right.size(), k), w.m});
    }
    // inner runs multiply
    for (size_t r = 1; r <= k; ++r)
        for (size_t p = 0; p + r <= k; ++p)
            for (u16 b : ai.eval(slice(w.a, p, p + r)))
                out.push_back({w.c, w.a0, splice(w.a, p, p + r, {b}), w.m});
    // the m slot absorbs a suffix
    for (size_t j = 0; j <= k; ++j)
        for (u16 m2 : mi.eval(slice(w.a, k - j, k), w.m))
            out.push_back({w.c, w.a0, slice(w.a, 0, k - j), m2});
    cancel_pairs(out);
    return out;
}

std::vector<Word> words_up_to(u16 size, u32 max_len) {
    std::vector<Word> out;
    for (u32 len = 0; len <= max_len; ++len) {
        WordIter it(size, len);
        if (it.done) continue;
        do out.push_back(it.w);
        while (it.next());
    }
    return out;
}

} // namespace

int TwistedComplex::degree_of(const TwistedWord& w) const {
    int d = alg.basis.degree(w.a0) + mod.basis.degree(w.m);
    for (u16 x : w.c) d += dual.basis.degree(x) - 1;
    for (u16 x : w.a) d += alg.basis.degree(x) + 1;
    return d;
}

u32 TwistedComplex::index_of(const TwistedWord& w) const {
    int d = degree_of(w);
    if (d < cx.lo || d > cx.hi)
        throw std::out_of_range("twisted word not in complex: " + word_name(w));
    const auto& bucket = words[static_cast<size_t>(d - cx.lo)];
    auto it = std::lower_bound(bucket.begin(), bucket.end(), w);
    if (it == bucket.end() || !(*it == w))
        throw std::out_of_range("twisted word not in complex: " + word_name(w));
    return static_cast<u32>(it - bucket.begin());
}

const TwistedWord& TwistedComplex::word_at(int degree, u32 i) const {
    if (degree < cx.lo || degree > cx.hi)
        throw std::out_of_range("degree outside twisted complex support");
    const auto& bucket = words[static_cast<size_t>(degree - cx.lo)];
    if (i >= bucket.size()) throw std::out_of_range("twisted word index out of range");
    return bucket[i];
}

std::string TwistedComplex::word_name(const TwistedWord& w) const {
    return "(" + term_name(dual.basis, w.c) + " | " + alg.basis.names[w.a0] + " | " +
           term_name(alg.basis, w.a) + " | " + mod.basis.names[w.m] + ")";
}

std::vector<TwistedWord> TwistedComplex::boundary(const TwistedWord& w) const {
    CoalgIndex ci(dual);
    AlgIndex ai(alg);
    ModIndex mi(mod);
    return twisted_boundary_impl(*this, ci, ai, mi, w);
}

std::vector<CobarWord> TwistedComplex::norm_image(const TwistedWord& w) const {
    std::vector<CobarWord> out;
    size_t k = w.a.size();
    for (const auto& [count, terms] : mod.mu) {
        if (count < k + 1) continue;
        size_t j = count - k - 1;
        if (w.c.size() + j > trunc.l_max) continue;
        for (const ModTerm& t : terms) {
            if (t.m_in != w.m || t.a[j] != w.a0) continue;
            if (!std::equal(w.a.begin(), w.a.end(), t.a.begin() + static_cast<long>(j) + 1))
                continue;
            Word nc = w.c;
            Word duals = reversed_word(slice(t.a, 0, j));
            nc.insert(nc.end(), duals.begin(), duals.end());
            out.push_back({0, std::move(nc), t.m_out});
        }
    }
    cancel_pairs(out);
    return out;
}

TwistedComplex twisted_borel_complex(const AInfAlgebra& alg, const AInfModule& m, Truncation t) {
    if (m.side != ModuleSide::left)
        throw std::invalid_argument("twisted_borel_complex: module must be a left module");
    TwistedComplex tw;
    tw.alg = alg;
    tw.dual = dualize_algebra(alg);
    tw.mod = m;
    tw.bimod = dualizing_bimodule(alg);
    tw.trunc = t;
    CoalgIndex ci(tw.dual);
    AlgIndex ai(alg);
    ModIndex mi(m);
    std::vector<TwistedWord> all;
    auto prefixes = words_up_to(alg.basis.size(), t.l_max);
    auto bars = words_up_to(alg.basis.size(), t.k_max);
    for (const Word& c : prefixes)
        for (u16 a0 = 0; a0 < alg.basis.size(); ++a0)
            for (const Word& a : bars)
                for (u16 mm = 0; mm < m.basis.size(); ++mm) all.push_back({c, a0, a, mm});
    auto ac = internal::assemble_complex<TwistedWord>(
        std::move(all), [&](const TwistedWord& w) { return tw.degree_of(w); },
        [&](const TwistedWord& w) { return twisted_boundary_impl(tw, ci, ai, mi, w); },
        [&](const TwistedWord& w) { return tw.word_name(w); });
    tw.cx = std::move(ac.cx);
    tw.words = std::move(ac.words);
    // Trusted range: the dropped prefix side (a subcomplex) lives in degrees
    // at most 2 below lo, the dropped bar side (a quotient with homology
    // concentrated at empty prefixes) in degrees at least 2 above hi.
    int cu = tw.dual.basis.max_degree() - 1;
    int au = 1 + alg.basis.min_degree();
    if (cu < 0 && au >= 0) {
        int amax1 = 1 + alg.basis.max_degree();
        tw.cx.trusted.lo = 2 + (amax1 > 0 ? static_cast<int>(t.k_max) * amax1 : 0) +
                           alg.basis.max_degree() + m.basis.max_degree() +
                           (static_cast<int>(t.l_max) + 1) * cu;
        tw.cx.trusted.hi = (static_cast<int>(t.k_max) + 1) * au + alg.basis.min_degree() +
                           m.basis.min_degree() - 2;
    } else {
        tw.cx.trusted = {INT_MAX, INT_MIN};
    }
    return tw;
}

ChainMap norm_map(const TwistedComplex& src, const CobarComplex& tgt) {
    if (tgt.l_max != src.trunc.l_max)
        throw std::invalid_argument("norm_map: source and target letter caps differ");
    if (tgt.coalg.basis.names != src.dual.basis.names)
        throw std::invalid_argument("norm_map: target coalgebra does not match the dual");
    if (tgt.last.basis.names != src.mod.basis.names)
        throw std::invalid_argument("norm_map: target module does not match the source module");
    ChainMap f;
    f.lo = src.cx.lo;
    f.hi = src.cx.hi;
    f.comp.reserve(static_cast<size_t>(f.hi - f.lo) + 1);
    for (int d = f.lo; d <= f.hi; ++d) {
        SparseF2Matrix mat(tgt.cx.dim(d), src.cx.dim(d));
        const auto& bucket = src.words[static_cast<size_t>(d - f.lo)];
        for (u32 j = 0; j < bucket.size(); ++j) {
            for (const CobarWord& u : src.norm_image(bucket[j])) {
                if (tgt.degree_of(u) != d)
                    throw AssemblyError("norm term '" + tgt.word_name(u) + "' of '" +
                                        src.word_name(bucket[j]) + "' does not preserve degree");
                mat.toggle(tgt.index_of(u), j);
            }
        }
        mat.finalize();
        f.comp.push_back(std::move(mat));
    }
    return f;
}

NormReport verify_norm(const TwistedComplex& src, const CobarComplex& tgt) {
    NormReport rep;
    for (const auto& bucket : src.words) {
        for (const TwistedWord& w : bucket) {
            std::vector<CobarWord> lhs;   // target boundary of the image
            for (const CobarWord& u : src.norm_image(w))
                for (const CobarWord& v : tgt.boundary(u)) lhs.push_back(v);
            std::vector<CobarWord> rhs;   // image of the source boundary
            for (const TwistedWord& v : src.boundary(w))
                for (const CobarWord& u : src.norm_image(v)) rhs.push_back(u);
            cancel_pairs(lhs);
            cancel_pairs(rhs);
            ++rep.checked;
            if (lhs != rhs) {
                rep.pass = false;
                rep.what = "norm fails the chain map identity";
                rep.witness = src.word_name(w);
                return rep;
            }
            for (u16 x = 0; x < src.dual.basis.size(); ++x) {
                if (w.c.size() + 1 > src.trunc.l_max) continue;
                TwistedWord wx = w;
                wx.c.insert(wx.c.begin(), x);
                std::vector<CobarWord> got = src.norm_image(wx);
                std::vector<CobarWord> want;
                for (const CobarWord& u : src.norm_image(w))
                    if (auto p = omega_prepend(x, u, tgt.l_max)) want.push_back(*p);
                cancel_pairs(want);
                ++rep.checked;
                if (got != want) {
                    rep.pass = false;
                    rep.what = "norm fails prepend equivariance on letter " +
                               src.dual.basis.names[x];
                    rep.witness = src.word_name(w);
                    return rep;
                }
            }
        }
    }
    return rep;
}

TateComplex tate_complex(const AInfAlgebra& alg, const AInfModule& m, Truncation t) {
    TateComplex tc;
    tc.source = twisted_borel_complex(alg, m, t);
    tc.target = coborel_complex(alg, m, t.l_max);
    tc.norm = norm_map(tc.source, tc.target);
    tc.cx = cone(tc.source.cx, tc.target.cx, tc.norm);
    return tc;
}

std::vector<ExactnessNode> tate_les_report(const TateComplex& t, DegreeRange window) {
    return cone_les_report(t.source.cx, t.target.cx, t.norm, window);
}

} // namespace equihom
