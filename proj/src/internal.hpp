#pragma once
// Shared internals: word utilities and structure-map term indexes used by
// the verifiers and the word-complex assemblers. Not installed.

#include "equihom/ainf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace equihom::internal {

using Word = std::vector<u16>;

template <class T>
void toggle(std::set<T>& s, const T& v) {
    auto it = s.find(v);
    if (it == s.end()) s.insert(v);
    else s.erase(it);
}

// Sort and drop element pairs: the mod-2 reduction of a term list.
template <class T>
void cancel_pairs(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    std::vector<T> kept;
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) & 1) kept.push_back(v[i]);
        i = j;
    }
    v = std::move(kept);
}

// All words of a fixed length over 0..size-1, lexicographically. The empty
// word is produced once even for an empty basis.
struct WordIter {
    u16 size;
    Word w;
    bool done = false;
    WordIter(u16 basis_size, u32 len) : size(basis_size), w(len, 0) {
        if (basis_size == 0 && len > 0) done = true;
    }
    bool next() {
        for (size_t i = w.size(); i-- > 0;) {
            if (++w[i] < size) return true;
            w[i] = 0;
        }
        done = true;
        return false;
    }
};

inline Word slice(const Word& w, size_t from, size_t to) {
    return Word(w.begin() + from, w.begin() + to);
}

inline Word splice(const Word& w, size_t from, size_t to, const Word& mid) {
    Word out(w.begin(), w.begin() + from);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + to, w.end());
    return out;
}

inline Word reversed_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline std::string dual_name(const std::string& s) {
    if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
    return s + "*";
}

inline std::vector<std::string> names_of(const Basis& b, const Word& w) {
    std::vector<std::string> out;
    for (u16 i : w) out.push_back(b.names[i]);
    return out;
}

namespace detail {
inline void reduce_out_lists(std::map<Word, std::vector<u16>>& m) {
    for (auto& [in, outs] : m) {
        std::sort(outs.begin(), outs.end());
        std::vector<u16> kept;
        for (size_t i = 0; i < outs.size();) {
            size_t j = i;
            while (j < outs.size() && outs[j] == outs[i]) ++j;
            if ((j - i) & 1) kept.push_back(outs[i]);
            i = j;
        }
        outs = std::move(kept);
    }
}
} // namespace detail

// Terms indexed by (arity, inputs) with mod-2 reduced output lists.
struct AlgIndex {
    std::map<u32, std::map<Word, std::vector<u16>>> by_arity;
    u32 max_arity = 0;

    explicit AlgIndex(const AInfAlgebra& a) {
        for (const auto& [arity, terms] : a.mu) {
            auto& m = by_arity[arity];
            for (const AlgTerm& t : terms) m[t.in].push_back(t.out);
            max_arity = std::max(max_arity, arity);
        }
        for (auto& [arity, m] : by_arity) detail::reduce_out_lists(m);
    }
    const std::vector<u16>& eval(const Word& in) const {
        static const std::vector<u16> e;
        auto ait = by_arity.find(static_cast<u32>(in.size()));
        if (ait == by_arity.end()) return e;
        auto it = ait->second.find(in);
        return it == ait->second.end() ? e : it->second;
    }
};

// Module terms indexed by (letter word, slot input).
struct ModIndex {
    std::map<u32, std::map<std::pair<Word, u16>, std::vector<u16>>> by_count;
    u32 max_count = 0;

    explicit ModIndex(const AInfModule& m) {
        for (const auto& [count, terms] : m.mu) {
            auto& mm = by_count[count];
            for (const ModTerm& t : terms) mm[{t.a, t.m_in}].push_back(t.m_out);
            max_count = std::max(max_count, count);
        }
        for (auto& [count, mm] : by_count) {
            for (auto& [key, outs] : mm) {
                std::sort(outs.begin(), outs.end());
                std::vector<u16> kept;
                for (size_t i = 0; i < outs.size();) {
                    size_t j = i;
                    while (j < outs.size() && outs[j] == outs[i]) ++j;
                    if ((j - i) & 1) kept.push_back(outs[i]);
                    i = j;
                }
                outs = std::move(kept);
            }
        }
    }
    const std::vector<u16>& eval(const Word& letters, u16 m_in) const {
        static const std::vector<u16> e;
        auto cit = by_count.find(static_cast<u32>(letters.size()));
        if (cit == by_count.end()) return e;
        auto it = cit->second.find({letters, m_in});
        return it == cit->second.end() ? e : it->second;
    }
};

// Coalgebra terms indexed by (output length, input); terms kept as emitted.
struct CoalgIndex {
    std::map<u32, std::map<u16, std::vector<Word>>> by_len;

    explicit CoalgIndex(const AInfCoalgebra& c) {
        for (const auto& [len, terms] : c.delta)
            for (const CoalgTerm& t : terms) by_len[len][t.in].push_back(t.out);
    }
    const std::vector<Word>& eval(u16 in, u32 len) const {
        static const std::vector<Word> e;
        auto lit = by_len.find(len);
        if (lit == by_len.end()) return e;
        auto it = lit->second.find(in);
        return it == lit->second.end() ? e : it->second;
    }
    // All coproducts of one element across every output length.
    std::vector<Word> all(u16 in) const {
        std::vector<Word> out;
        for (const auto& [len, m] : by_len) {
            auto it = m.find(in);
            if (it != m.end()) out.insert(out.end(), it->second.begin(), it->second.end());
        }
        return out;
    }
};

// Comodule terms indexed by (letter count, slot input).
struct ComodIndex {
    std::map<u32, std::map<u16, std::vector<std::pair<Word, u16>>>> by_len;

    explicit ComodIndex(const AInfComodule& n) {
        for (const auto& [len, terms] : n.delta)
            for (const ComodTerm& t : terms) by_len[len][t.m_in].push_back({t.c, t.m_out});
    }
    const std::vector<std::pair<Word, u16>>& eval(u16 in, u32 len) const {
        static const std::vector<std::pair<Word, u16>> e;
        auto lit = by_len.find(len);
        if (lit == by_len.end()) return e;
        auto it = lit->second.find(in);
        return it == lit->second.end() ? e : it->second;
    }
    std::vector<std::pair<Word, u16>> all(u16 in) const {
        std::vector<std::pair<Word, u16>> out;
        for (const auto& [len, m] : by_len) {
            auto it = m.find(in);
            if (it != m.end()) out.insert(out.end(), it->second.begin(), it->second.end());
        }
        return out;
    }
};

} // namespace equihom::internal
