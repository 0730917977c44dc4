#pragma once
// Word complexes of the two-sided bar and cobar constructions. Bar words
// are capped at k_max letters (a subcomplex: the boundary never adds
// letters); cobar words are capped at l_max letters (a quotient: boundary
// terms that would exceed the cap are dropped). Each complex carries the
// trusted degree range on which the capped homology agrees with the
// uncapped one.

#include "equihom/ainf.hpp"
#include "equihom/chain.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equihom {

// Thrown during assembly when some boundary term fails to drop the word
// degree by exactly one. With all basis degrees zero this means a structure
// map is not strict (terms beyond the differential and the binary product
// or coproduct), so such input needs honest degrees instead.
struct AssemblyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (m | a_1 .. a_k | n): m in a right module, n in a left module.
struct BarWord {
    u16 m = 0;
    std::vector<u16> a;
    u16 n = 0;
    bool operator==(const BarWord&) const = default;
    bool operator<(const BarWord& o) const;   // letter count, letters, m, n
};

// (m | c_1 .. c_l | n): m in a right comodule, n in a left comodule.
struct CobarWord {
    u16 m = 0;
    std::vector<u16> c;
    u16 n = 0;
    bool operator==(const CobarWord&) const = default;
    bool operator<(const CobarWord& o) const;
};

struct BarComplex {
    AInfModule first;    // right module filling the m slot
    AInfAlgebra alg;
    AInfModule last;     // left module filling the n slot
    u32 k_max = 0;
    ChainComplex cx;
    std::vector<std::vector<BarWord>> words;   // words[d - cx.lo], sorted

    // deg m + sum(deg a_i + 1) + deg n
    int degree_of(const BarWord& w) const;
    u32 index_of(const BarWord& w) const;      // throws std::out_of_range
    const BarWord& word_at(int degree, u32 i) const;
    std::string word_name(const BarWord& w) const;
    std::vector<BarWord> boundary(const BarWord& w) const;   // mod-2 reduced
};

struct CobarComplex {
    AInfComodule first;  // right comodule filling the m slot
    AInfCoalgebra coalg;
    AInfComodule last;   // left comodule filling the n slot
    u32 l_max = 0;
    ChainComplex cx;
    std::vector<std::vector<CobarWord>> words;

    // deg m + sum(deg c_i - 1) + deg n
    int degree_of(const CobarWord& w) const;
    u32 index_of(const CobarWord& w) const;
    const CobarWord& word_at(int degree, u32 i) const;
    std::string word_name(const CobarWord& w) const;
    std::vector<CobarWord> boundary(const CobarWord& w) const;
};

// B(first, alg, last). Boundary families: the first slot absorbs letter
// prefixes, inner runs multiply, the last slot absorbs letter suffixes.
BarComplex bar_complex(const AInfModule& first, const AInfAlgebra& alg,
                       const AInfModule& last, u32 k_max);

// B(k, A, M) with the trivial right module in the first slot; M is a left
// module. Homology gives the Borel-style invariant of M.
BarComplex borel_complex(const AInfAlgebra& alg, const AInfModule& m, u32 k_max);

// Omega(first, coalg, last). Boundary families: the first slot emits
// letters before the word, letters split by the coproduct, the last slot
// emits letters after the word.
CobarComplex cobar_complex(const AInfComodule& first, const AInfCoalgebra& coalg,
                           const AInfComodule& last, u32 l_max);

// Omega(k, A*, M*): the algebra dualized, the left module M viewed as a
// left comodule over the dual, the trivial right comodule in the first
// slot. Homology gives the co-Borel-style invariant of M.
CobarComplex coborel_complex(const AInfAlgebra& alg, const AInfModule& m, u32 l_max);

// One term of the bar-word coproduct: a cut at letter position i with both
// cut ends closed by slot 0 of a rank-one trivial module.
struct BarCut {
    BarWord lhs, rhs;
    bool operator==(const BarCut&) const = default;
};

// All k+1 cuts of a k-letter word. A chain map into the tensor product of
// the two one-sided bar complexes when the cut slots carry the trivial
// module of the algebra.
std::vector<BarCut> bar_coproduct(const BarWord& w);

// Left concatenation by one letter in the cobar word algebra; nullopt when
// the result would exceed the letter cap.
std::optional<CobarWord> omega_prepend(u16 letter, const CobarWord& w, u32 l_max);

} // namespace equihom
