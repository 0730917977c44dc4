#include "equihom/ainf.hpp"

#include "internal.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace equihom {

using internal::AlgIndex;
using internal::CoalgIndex;
using internal::ComodIndex;
using internal::ModIndex;
using internal::Word;
using internal::WordIter;
using internal::dual_name;
using internal::names_of;
using internal::reversed_word;
using internal::slice;
using internal::splice;
using internal::toggle;

bool Basis::graded() const {
    for (int d : degrees)
        if (d != 0) return true;
    return false;
}

u16 Basis::index(const std::string& name) const {
    for (u16 i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    throw std::out_of_range("Basis::index: unknown name '" + name + "'");
}

int Basis::min_degree() const {
    int m = 0;
    for (u16 i = 0; i < size(); ++i) m = std::min(m, degree(i));
    return m;
}

int Basis::max_degree() const {
    int m = 0;
    for (u16 i = 0; i < size(); ++i) m = std::max(m, degree(i));
    return m;
}

std::string term_name(const Basis& b, const std::vector<u16>& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += b.names[word[i]];
    }
    return out;
}

// ---- verifiers --------------------------------------------------------------

VerifyReport verify_algebra(const AInfAlgebra& a, u32 k_check) {
    AlgIndex idx(a);
    VerifyReport rep;
    for (u32 k = 1; k <= k_check; ++k) {
        WordIter it(a.basis.size(), k);
        if (it.done) break;
        do {
            const Word& tup = it.w;
            std::set<u16> res;
            for (u32 k2 = 1; k2 <= k; ++k2) {
                for (size_t i = 0; i + k2 <= k; ++i) {
                    for (u16 b : idx.eval(slice(tup, i, i + k2))) {
                        Word outer = splice(tup, i, i + k2, {b});
                        for (u16 o : idx.eval(outer)) toggle(res, o);
                    }
                }
            }
            ++rep.checked;
            if (!res.empty()) {
                rep.pass = false;
                rep.what = "algebra relation fails at arity " + std::to_string(k);
                rep.witness = names_of(a.basis, tup);
                for (u16 o : res) rep.residual.push_back(a.basis.names[o]);
                return rep;
            }
        } while (it.next());
    }
    return rep;
}

VerifyReport verify_module(const AInfAlgebra& a, const AInfModule& m, u32 k_check) {
    AlgIndex ia(a);
    ModIndex im(m);
    bool left = m.side == ModuleSide::left;
    VerifyReport rep;
    for (u32 k = 0; k <= k_check; ++k) {
        WordIter it(a.basis.size(), k);
        if (it.done) break;
        do {
            const Word& tup = it.w;
            for (u16 n = 0; n < m.basis.size(); ++n) {
                std::set<u16> res;
                // inner algebra operation on any run of letters
                for (u32 j = 1; j <= k; ++j) {
                    for (size_t i = 0; i + j <= k; ++i) {
                        for (u16 b : ia.eval(slice(tup, i, i + j))) {
                            Word outer = splice(tup, i, i + j, {b});
                            for (u16 no : im.eval(outer, n)) toggle(res, no);
                        }
                    }
                }
                // inner module operation on the slot-adjacent run, then the rest
                for (u32 j = 0; j <= k; ++j) {
                    Word inner_letters = left ? slice(tup, k - j, k) : slice(tup, 0, j);
                    Word outer_letters = left ? slice(tup, 0, k - j) : slice(tup, j, k);
                    for (u16 n2 : im.eval(inner_letters, n))
                        for (u16 no : im.eval(outer_letters, n2)) toggle(res, no);
                }
                ++rep.checked;
                if (!res.empty()) {
                    rep.pass = false;
                    rep.what = "module relation fails with " + std::to_string(k) + " letters";
                    rep.witness = names_of(a.basis, tup);
                    rep.witness.push_back("| " + m.basis.names[n]);
                    for (u16 o : res) rep.residual.push_back(m.basis.names[o]);
                    return rep;
                }
            }
        } while (it.next());
    }
    return rep;
}

VerifyReport verify_coalgebra(const AInfCoalgebra& c, u32 k_check) {
    CoalgIndex idx(c);
    VerifyReport rep;
    for (u16 x = 0; x < c.basis.size(); ++x) {
        for (u32 k = 1; k <= k_check; ++k) {
            std::set<Word> res;
            for (u32 k1 = 1; k1 <= k; ++k1) {
                u32 k2 = k + 1 - k1;
                for (const Word& outs : idx.eval(x, k1)) {
                    for (size_t i = 0; i < k1; ++i) {
                        for (const Word& mid : idx.eval(outs[i], k2))
                            toggle(res, splice(outs, i, i + 1, mid));
                    }
                }
            }
            ++rep.checked;
            if (!res.empty()) {
                rep.pass = false;
                rep.what = "coalgebra relation fails at arity " + std::to_string(k);
                rep.witness = {c.basis.names[x]};
                for (const Word& w : res) rep.residual.push_back(term_name(c.basis, w));
                return rep;
            }
        }
    }
    return rep;
}

VerifyReport verify_comodule(const AInfCoalgebra& c, const AInfComodule& n, u32 k_check) {
    CoalgIndex ic(c);
    ComodIndex idx(n);
    bool left = n.side == ModuleSide::left;
    VerifyReport rep;
    for (u16 m = 0; m < n.basis.size(); ++m) {
        for (u32 k = 0; k <= k_check; ++k) {
            std::set<std::pair<Word, u16>> res;
            for (u32 k1 = 0; k1 <= k; ++k1) {
                u32 k2 = k - k1;
                for (const auto& [couts, n2] : idx.eval(m, k1)) {
                    // coalgebra coproduct on one emitted letter
                    for (size_t i = 0; i < k1; ++i)
                        for (const Word& mid : ic.eval(couts[i], k2 + 1))
                            toggle(res, {splice(couts, i, i + 1, mid), n2});
                    // iterated coaction; new letters sit adjacent to the slot
                    for (const auto& [c2, n3] : idx.eval(n2, k2)) {
                        Word w = left ? couts : c2;
                        const Word& tail = left ? c2 : couts;
                        w.insert(w.end(), tail.begin(), tail.end());
                        toggle(res, {w, n3});
                    }
                }
            }
            ++rep.checked;
            if (!res.empty()) {
                rep.pass = false;
                rep.what = "comodule relation fails with " + std::to_string(k) + " letters";
                rep.witness = {n.basis.names[m]};
                for (const auto& [w, n2] : res)
                    rep.residual.push_back(term_name(c.basis, w) + " | " + n.basis.names[n2]);
                return rep;
            }
        }
    }
    return rep;
}

namespace {

// A bimodule word: letters on each side of the slot, consumed or emitted
// depending on the kind.
struct BimodWord {
    Word pre;
    u16 m;
    Word suf;
    auto operator<=>(const BimodWord&) const = default;
};

bool starts_with(const Word& w, const Word& prefix) {
    return w.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool ends_with(const Word& w, const Word& suffix) {
    return w.size() >= suffix.size() &&
           std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
}

std::set<BimodWord> bimod_boundary(const AInfBimodule& b, const AlgIndex* ia,
                                   const CoalgIndex* ic, const BimodWord& w) {
    std::set<BimodWord> out;
    bool left_consumes = b.kind == BimodKind::algebra_algebra ||
                         b.kind == BimodKind::algebra_coalgebra;
    bool right_consumes = b.kind == BimodKind::algebra_algebra ||
                          b.kind == BimodKind::coalgebra_algebra;
    // side differentials on existing letters
    auto alg_side = [&](const Word& run, bool is_pre) {
        for (u32 r = 1; r <= run.size(); ++r) {
            for (size_t p = 0; p + r <= run.size(); ++p) {
                for (u16 o : ia->eval(slice(run, p, p + r))) {
                    BimodWord v = w;
                    (is_pre ? v.pre : v.suf) = splice(run, p, p + r, {o});
                    toggle(out, v);
                }
            }
        }
    };
    auto coalg_side = [&](const Word& run, bool is_pre) {
        for (size_t i = 0; i < run.size(); ++i) {
            for (const Word& mid : ic->all(run[i])) {
                BimodWord v = w;
                (is_pre ? v.pre : v.suf) = splice(run, i, i + 1, mid);
                toggle(out, v);
            }
        }
    };
    if (left_consumes) alg_side(w.pre, true);
    else coalg_side(w.pre, true);
    if (right_consumes) alg_side(w.suf, false);
    else coalg_side(w.suf, false);
    // bimodule structure terms act around the slot: consumed letters must be
    // adjacent to it, emitted letters are inserted adjacent to it
    for (const BimodTerm& t : b.terms) {
        if (t.m_in != w.m) continue;
        if (left_consumes) {
            if (!ends_with(w.pre, t.in_left)) continue;
        } else if (!t.in_left.empty()) {
            continue;
        }
        if (right_consumes) {
            if (!starts_with(w.suf, t.in_right)) continue;
        } else if (!t.in_right.empty()) {
            continue;
        }
        BimodWord v;
        if (left_consumes) {
            v.pre = slice(w.pre, 0, w.pre.size() - t.in_left.size());
        } else {
            v.pre = w.pre;
            v.pre.insert(v.pre.end(), t.out_left.begin(), t.out_left.end());
        }
        v.m = t.m_out;
        if (right_consumes) {
            v.suf = slice(w.suf, t.in_right.size(), w.suf.size());
        } else {
            v.suf = t.out_right;
            v.suf.insert(v.suf.end(), w.suf.begin(), w.suf.end());
        }
        toggle(out, v);
    }
    return out;
}

} // namespace

VerifyReport verify_bimodule(const AInfBimodule& b, const AInfAlgebra* a,
                             const AInfCoalgebra* c, u32 k_check) {
    bool left_consumes = b.kind == BimodKind::algebra_algebra ||
                         b.kind == BimodKind::algebra_coalgebra;
    bool right_consumes = b.kind == BimodKind::algebra_algebra ||
                          b.kind == BimodKind::coalgebra_algebra;
    if ((left_consumes || right_consumes) && !a)
        throw std::invalid_argument("verify_bimodule: kind consumes algebra letters, algebra missing");
    if ((!left_consumes || !right_consumes) && !c)
        throw std::invalid_argument("verify_bimodule: kind emits coalgebra letters, coalgebra missing");
    std::optional<AlgIndex> ia;
    std::optional<CoalgIndex> ic;
    if (a) ia.emplace(*a);
    if (c) ic.emplace(*c);
    VerifyReport rep;
    auto side_name = [&](bool consumes, const Word& run) {
        return consumes ? term_name(a->basis, run) : term_name(c->basis, run);
    };
    auto check_word = [&](const BimodWord& w) -> bool {
        std::set<BimodWord> res;
        for (const BimodWord& u : bimod_boundary(b, ia ? &*ia : nullptr, ic ? &*ic : nullptr, w))
            for (const BimodWord& v : bimod_boundary(b, ia ? &*ia : nullptr, ic ? &*ic : nullptr, u))
                toggle(res, v);
        ++rep.checked;
        if (res.empty()) return true;
        rep.pass = false;
        rep.what = "bimodule square-zero fails";
        rep.witness = {side_name(left_consumes, w.pre) + " | " + b.basis.names[w.m] + " | " +
                       side_name(right_consumes, w.suf)};
        for (const BimodWord& v : res)
            rep.residual.push_back(side_name(left_consumes, v.pre) + " | " +
                                   b.basis.names[v.m] + " | " +
                                   side_name(right_consumes, v.suf));
        return false;
    };
    u16 letters = a ? a->basis.size() : 0;
    for (u32 total = 0; total <= k_check; ++total) {
        for (u32 ll = 0; ll <= total; ++ll) {
            u32 rl = total - ll;
            if (!left_consumes && ll > 0) continue;
            if (!right_consumes && rl > 0) continue;
            WordIter li(left_consumes ? letters : 1, left_consumes ? ll : 0);
            if (li.done) continue;
            do {
                WordIter ri(right_consumes ? letters : 1, right_consumes ? rl : 0);
                if (ri.done) continue;
                do {
                    for (u16 m = 0; m < b.basis.size(); ++m) {
                        BimodWord w{left_consumes ? li.w : Word{}, m,
                                    right_consumes ? ri.w : Word{}};
                        if (!check_word(w)) return rep;
                    }
                } while (ri.next());
            } while (li.next());
        }
    }
    return rep;
}

// ---- dualization ------------------------------------------------------------

namespace {

Basis dual_basis(const Basis& b) {
    Basis d;
    for (const auto& n : b.names) d.names.push_back(dual_name(n));
    for (u16 i = 0; i < b.size(); ++i) d.degrees.push_back(-b.degree(i));
    return d;
}

} // namespace

AInfCoalgebra dualize_algebra(const AInfAlgebra& a) {
    AInfCoalgebra c;
    c.name = dual_name(a.name);
    c.basis = dual_basis(a.basis);
    for (const auto& [arity, terms] : a.mu)
        for (const AlgTerm& t : terms)
            c.delta[arity].push_back({t.out, reversed_word(t.in)});
    c.triv = a.aug;
    return c;
}

AInfAlgebra dualize_coalgebra(const AInfCoalgebra& c) {
    AInfAlgebra a;
    a.name = dual_name(c.name);
    a.basis = dual_basis(c.basis);
    for (const auto& [len, terms] : c.delta)
        for (const CoalgTerm& t : terms)
            a.mu[len].push_back({reversed_word(t.out), t.in});
    a.aug = c.triv;
    return a;
}

AInfComodule module_to_comodule(const AInfModule& m) {
    AInfComodule n;
    n.name = m.name;
    n.side = m.side;
    n.basis = m.basis;
    for (const auto& [count, terms] : m.mu)
        for (const ModTerm& t : terms)
            n.delta[count].push_back({t.m_in, reversed_word(t.a), t.m_out});
    return n;
}

AInfComodule dual_module(const AInfModule& m) {
    AInfComodule n;
    n.name = dual_name(m.name);
    n.side = m.side == ModuleSide::left ? ModuleSide::right : ModuleSide::left;
    n.basis = dual_basis(m.basis);
    for (const auto& [count, terms] : m.mu)
        for (const ModTerm& t : terms)
            n.delta[count].push_back({t.m_out, reversed_word(t.a), t.m_in});
    return n;
}

AInfComodule trivial_right_comodule(const AInfCoalgebra& c) {
    AInfComodule n;
    n.name = "unit";
    n.side = ModuleSide::right;
    n.basis.names = {"1"};
    n.basis.degrees = {0};
    for (u16 b : c.triv) n.delta[1].push_back({0, {b}, 0});
    return n;
}

// ---- builders ---------------------------------------------------------------

AInfAlgebra group_algebra(const std::string& name,
                          const std::vector<std::string>& elems,
                          const std::map<std::pair<std::string, std::string>, std::string>& mult) {
    auto known = [&](const std::string& x) {
        return std::find(elems.begin(), elems.end(), x) != elems.end();
    };
    auto prod = [&](const std::string& x, const std::string& y) -> const std::string& {
        auto it = mult.find({x, y});
        if (it == mult.end())
            throw GroupLawError("group_algebra: product (" + x + ", " + y + ") undefined");
        if (!known(it->second))
            throw GroupLawError("group_algebra: product (" + x + ", " + y + ") = '" +
                                it->second + "' is not a basis element");
        return it->second;
    };
    std::string id;
    for (const auto& e : elems) {
        bool ok = true;
        for (const auto& x : elems)
            if (prod(e, x) != x || prod(x, e) != x) { ok = false; break; }
        if (ok) { id = e; break; }
    }
    if (id.empty())
        throw GroupLawError("group_algebra: no two-sided identity element");
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems)
                if (prod(prod(x, y), z) != prod(x, prod(y, z)))
                    throw GroupLawError("group_algebra: associativity fails at (" + x + ", " +
                                        y + ", " + z + ")");
    for (const auto& x : elems) {
        bool has = false;
        for (const auto& y : elems)
            if (prod(x, y) == id && prod(y, x) == id) { has = true; break; }
        if (!has)
            throw GroupLawError("group_algebra: no inverse for '" + x + "'");
    }
    AInfAlgebra a;
    a.name = name;
    a.basis.names = elems;
    a.basis.degrees.assign(elems.size(), 0);
    auto& terms = a.mu[2];
    for (const auto& x : elems)
        for (const auto& y : elems)
            terms.push_back({{a.basis.index(x), a.basis.index(y)}, a.basis.index(prod(x, y))});
    for (u16 i = 0; i < a.basis.size(); ++i) a.aug.push_back(i);
    return a;
}

AInfAlgebra make_z2() {
    return group_algebra("z2", {"e", "g"},
                         {{{"e", "e"}, "e"}, {{"e", "g"}, "g"}, {{"g", "e"}, "g"}, {{"g", "g"}, "e"}});
}

AInfAlgebra make_z3() {
    std::vector<std::string> el = {"e", "g", "h"};
    std::map<std::pair<std::string, std::string>, std::string> mult;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mult[{el[static_cast<size_t>(i)], el[static_cast<size_t>(j)]}] =
            el[static_cast<size_t>((i + j) % 3)];
    return group_algebra("z3", el, mult);
}

AInfAlgebra make_trivial_group() {
    return group_algebra("trivial", {"e"}, {{{"e", "e"}, "e"}});
}

AInfAlgebra exterior_algebra_rank1(int gen_degree) {
    AInfAlgebra a;
    a.name = "exterior1";
    a.basis.names = {"1", "x"};
    a.basis.degrees = {0, gen_degree};
    a.mu[2] = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}};
    a.aug = {0};
    return a;
}

AInfModule trivial_module(const AInfAlgebra& a, ModuleSide side) {
    AInfModule m;
    m.name = "trivial";
    m.side = side;
    m.basis.names = {"m"};
    m.basis.degrees = {0};
    for (u16 b : a.aug) m.mu[1].push_back({{b}, 0, 0});
    return m;
}

AInfModule free_module(const AInfAlgebra& a, ModuleSide side) {
    AInfModule m;
    m.name = a.name + "_free";
    m.side = side;
    m.basis = a.basis;
    // every operation with its slot-side input promoted to the module slot
    for (const auto& [arity, terms] : a.mu) {
        if (arity < 1) continue;
        for (const AlgTerm& t : terms) {
            if (side == ModuleSide::left)
                m.mu[arity - 1].push_back(
                    {slice(t.in, 0, t.in.size() - 1), t.in.back(), t.out});
            else
                m.mu[arity - 1].push_back({slice(t.in, 1, t.in.size()), t.in.front(), t.out});
        }
    }
    return m;
}

} // namespace equihom
