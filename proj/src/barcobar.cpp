#include "equihom/barcobar.hpp"

#include "assemble.hpp"
#include "internal.hpp"

#include <algorithm>
#include <stdexcept>

namespace equihom {

using internal::AlgIndex;
using internal::CoalgIndex;
using internal::ComodIndex;
using internal::ModIndex;
using internal::Word;
using internal::WordIter;
using internal::cancel_pairs;
using internal::slice;
using internal::splice;

bool BarWord::operator<(const BarWord& o) const {
    if (a.size() != o.a.size()) return a.size() < o.a.size();
    if (a != o.a) return a < o.a;
    if (m != o.m) return m < o.m;
    return n < o.n;
}

bool CobarWord::operator<(const CobarWord& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    if (c != o.c) return c < o.c;
    if (m != o.m) return m < o.m;
    return n < o.n;
}

namespace {

std::vector<BarWord> bar_boundary(const ModIndex& fi, const AlgIndex& ai, const ModIndex& li,
                                  const BarWord& w) {
    std::vector<BarWord> out;
    const Word& a = w.a;
    size_t k = a.size();
    // first slot absorbs a prefix (j = 0 is the slot differential)
    for (size_t j = 0; j <= k; ++j)
        for (u16 m2 : fi.eval(slice(a, 0, j), w.m))
            out.push_back({m2, slice(a, j, k), w.n});
    // last slot absorbs a suffix
    for (size_t j = 0; j <= k; ++j)
        for (u16 n2 : li.eval(slice(a, k - j, k), w.n))
            out.push_back({w.m, slice(a, 0, k - j), n2});
    // inner runs multiply (r = 1 is the letter differential)
    for (size_t r = 1; r <= k; ++r)
        for (size_t p = 0; p + r <= k; ++p)
            for (u16 b : ai.eval(slice(a, p, p + r)))
                out.push_back({w.m, splice(a, p, p + r, {b}), w.n});
    cancel_pairs(out);
    return out;
}

std::vector<CobarWord> cobar_boundary(const ComodIndex& fi, const CoalgIndex& ci,
                                      const ComodIndex& li, u32 l_max, const CobarWord& w) {
    std::vector<CobarWord> out;
    const Word& c = w.c;
    size_t l = c.size();
    // first slot emits letters before the word
    for (const auto& [couts, m2] : fi.all(w.m)) {
        if (l + couts.size() > l_max) continue;
        Word nc = couts;
        nc.insert(nc.end(), c.begin(), c.end());
        out.push_back({m2, std::move(nc), w.n});
    }
    // one letter splits by the coproduct
    for (size_t i = 0; i < l; ++i)
        for (const Word& mid : ci.all(c[i])) {
            if (l - 1 + mid.size() > l_max) continue;
            out.push_back({w.m, splice(c, i, i + 1, mid), w.n});
        }
    // last slot emits letters after the word
    for (const auto& [couts, n2] : li.all(w.n)) {
        if (l + couts.size() > l_max) continue;
        Word nc = c;
        nc.insert(nc.end(), couts.begin(), couts.end());
        out.push_back({w.m, std::move(nc), n2});
    }
    cancel_pairs(out);
    return out;
}

} // namespace

int BarComplex::degree_of(const BarWord& w) const {
    int d = first.basis.degree(w.m) + last.basis.degree(w.n);
    for (u16 x : w.a) d += alg.basis.degree(x) + 1;
    return d;
}

u32 BarComplex::index_of(const BarWord& w) const {
    int d = degree_of(w);
    if (d < cx.lo || d > cx.hi)
        throw std::out_of_range("bar word not in complex: " + word_name(w));
    const auto& bucket = words[static_cast<size_t>(d - cx.lo)];
    auto it = std::lower_bound(bucket.begin(), bucket.end(), w);
    if (it == bucket.end() || !(*it == w))
        throw std::out_of_range("bar word not in complex: " + word_name(w));
    return static_cast<u32>(it - bucket.begin());
}

const BarWord& BarComplex::word_at(int degree, u32 i) const {
    if (degree < cx.lo || degree > cx.hi)
        throw std::out_of_range("degree outside bar complex support");
    const auto& bucket = words[static_cast<size_t>(degree - cx.lo)];
    if (i >= bucket.size()) throw std::out_of_range("bar word index out of range");
    return bucket[i];
}

std::string BarComplex::word_name(const BarWord& w) const {
    return "(" + first.basis.names[w.m] + " | " + term_name(alg.basis, w.a) + " | " +
           last.basis.names[w.n] + ")";
}

std::vector<BarWord> BarComplex::boundary(const BarWord& w) const {
    ModIndex fi(first), li(last);
    AlgIndex ai(alg);
    return bar_boundary(fi, ai, li, w);
}

int CobarComplex::degree_of(const CobarWord& w) const {
    int d = first.basis.degree(w.m) + last.basis.degree(w.n);
    for (u16 x : w.c) d += coalg.basis.degree(x) - 1;
    return d;
}

u32 CobarComplex::index_of(const CobarWord& w) const {
    int d = degree_of(w);
    if (d < cx.lo || d > cx.hi)
        throw std::out_of_range("cobar word not in complex: " + word_name(w));
    const auto& bucket = words[static_cast<size_t>(d - cx.lo)];
    auto it = std::lower_bound(bucket.begin(), bucket.end(), w);
    if (it == bucket.end() || !(*it == w))
        throw std::out_of_range("cobar word not in complex: " + word_name(w));
    return static_cast<u32>(it - bucket.begin());
}

const CobarWord& CobarComplex::word_at(int degree, u32 i) const {
    if (degree < cx.lo || degree > cx.hi)
        throw std::out_of_range("degree outside cobar complex support");
    const auto& bucket = words[static_cast<size_t>(degree - cx.lo)];
    if (i >= bucket.size()) throw std::out_of_range("cobar word index out of range");
    return bucket[i];
}

std::string CobarComplex::word_name(const CobarWord& w) const {
    return "(" + first.basis.names[w.m] + " | " + term_name(coalg.basis, w.c) + " | " +
           last.basis.names[w.n] + ")";
}

std::vector<CobarWord> CobarComplex::boundary(const CobarWord& w) const {
    ComodIndex fi(first), li(last);
    CoalgIndex ci(coalg);
    return cobar_boundary(fi, ci, li, l_max, w);
}

BarComplex bar_complex(const AInfModule& first, const AInfAlgebra& alg,
                       const AInfModule& last, u32 k_max) {
    if (first.side != ModuleSide::right)
        throw std::invalid_argument("bar_complex: first slot needs a right module");
    if (last.side != ModuleSide::left)
        throw std::invalid_argument("bar_complex: last slot needs a left module");
    BarComplex b;
    b.first = first;
    b.alg = alg;
    b.last = last;
    b.k_max = k_max;
    ModIndex fi(first), li(last);
    AlgIndex ai(alg);
    std::vector<BarWord> all;
    for (u32 k = 0; k <= k_max; ++k) {
        WordIter it(alg.basis.size(), k);
        if (it.done) continue;
        do {
            for (u16 m = 0; m < first.basis.size(); ++m)
                for (u16 n = 0; n < last.basis.size(); ++n) all.push_back({m, it.w, n});
        } while (it.next());
    }
    auto ac = internal::assemble_complex<BarWord>(
        std::move(all), [&](const BarWord& w) { return b.degree_of(w); },
        [&](const BarWord& w) { return bar_boundary(fi, ai, li, w); },
        [&](const BarWord& w) { return b.word_name(w); });
    b.cx = std::move(ac.cx);
    b.words = std::move(ac.words);
    // Words with more than k_max letters form the dropped quotient; it is
    // supported in degrees >= (k_max+1)(1+min deg A) + min deg ends, so the
    // homology below that, minus one step of headroom, is the full answer.
    int unit = 1 + alg.basis.min_degree();
    if (unit < 0) {
        b.cx.trusted = {INT_MAX, INT_MIN};
    } else {
        b.cx.trusted.lo = INT_MIN;
        b.cx.trusted.hi = (static_cast<int>(k_max) + 1) * unit + first.basis.min_degree() +
                          last.basis.min_degree() - 2;
    }
    return b;
}

BarComplex borel_complex(const AInfAlgebra& alg, const AInfModule& m, u32 k_max) {
    if (m.side != ModuleSide::left)
        throw std::invalid_argument("borel_complex: module must be a left module");
    return bar_complex(trivial_module(alg, ModuleSide::right), alg, m, k_max);
}

std::vector<BarCut> bar_coproduct(const BarWord& w) {
    std::vector<BarCut> out;
    size_t k = w.a.size();
    for (size_t i = 0; i <= k; ++i)
        out.push_back({{w.m, slice(w.a, 0, i), 0}, {0, slice(w.a, i, k), w.n}});
    return out;
}

CobarComplex cobar_complex(const AInfComodule& first, const AInfCoalgebra& coalg,
                           const AInfComodule& last, u32 l_max) {
    if (first.side != ModuleSide::right)
        throw std::invalid_argument("cobar_complex: first slot needs a right comodule");
    if (last.side != ModuleSide::left)
        throw std::invalid_argument("cobar_complex: last slot needs a left comodule");
    CobarComplex o;
    o.first = first;
    o.coalg = coalg;
    o.last = last;
    o.l_max = l_max;
    ComodIndex fi(first), li(last);
    CoalgIndex ci(coalg);
    std::vector<CobarWord> all;
    for (u32 l = 0; l <= l_max; ++l) {
        WordIter it(coalg.basis.size(), l);
        if (it.done) continue;
        do {
            for (u16 m = 0; m < first.basis.size(); ++m)
                for (u16 n = 0; n < last.basis.size(); ++n) all.push_back({m, it.w, n});
        } while (it.next());
    }
    auto ac = internal::assemble_complex<CobarWord>(
        std::move(all), [&](const CobarWord& w) { return o.degree_of(w); },
        [&](const CobarWord& w) { return cobar_boundary(fi, ci, li, l_max, w); },
        [&](const CobarWord& w) { return o.word_name(w); });
    o.cx = std::move(ac.cx);
    o.words = std::move(ac.words);
    // Words with more than l_max letters form the dropped subcomplex; it is
    // supported in degrees <= (l_max+1)(max deg C - 1) + max deg ends, so
    // the homology above that, plus one step of headroom, is the full answer.
    int unit = coalg.basis.max_degree() - 1;
    if (unit >= 0) {
        o.cx.trusted = {INT_MAX, INT_MIN};
    } else {
        o.cx.trusted.lo = 2 + (static_cast<int>(l_max) + 1) * unit + first.basis.max_degree() +
                          last.basis.max_degree();
        o.cx.trusted.hi = INT_MAX;
    }
    return o;
}

CobarComplex coborel_complex(const AInfAlgebra& alg, const AInfModule& m, u32 l_max) {
    if (m.side != ModuleSide::left)
        throw std::invalid_argument("coborel_complex: module must be a left module");
    AInfCoalgebra dual = dualize_algebra(alg);
    return cobar_complex(trivial_right_comodule(dual), dual, module_to_comodule(m), l_max);
}

std::optional<CobarWord> omega_prepend(u16 letter, const CobarWord& w, u32 l_max) {
    if (w.c.size() + 1 > l_max) return std::nullopt;
    CobarWord v = w;
    v.c.insert(v.c.begin(), letter);
    return v;
}

} // namespace equihom
