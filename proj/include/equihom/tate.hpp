#pragma once
// The twisted bar-style complex, the norm chain map into the cobar-style
// complex, and their mapping cone. Homology of the cone is the Tate-style
// invariant that glues the two one-sided invariants along the norm.

#include "equihom/ainf.hpp"
#include "equihom/barcobar.hpp"
#include "equihom/chain.hpp"

#include <string>
#include <vector>

namespace equihom {

struct Truncation {
    u32 k_max = 0;   // cap on bar letters (subcomplex side)
    u32 l_max = 0;   // cap on emitted prefix letters (quotient side)
};

// Bimodule recording how the algebra coacts on itself through its own
// products: for mu(ins) = out and every split position, the slot consumes
// the letters right of the split and emits the duals of the letters left of
// it, in reverse. Slot and consumed letters live in A, emitted letters in
// the dual coalgebra on the same index set.
AInfBimodule dualizing_bimodule(const AInfAlgebra& a);

// (c_1 .. c_l | a0 | a_1 .. a_k | m): emitted dual letters, a distinguished
// algebra letter, consumed algebra letters, a module element.
struct TwistedWord {
    std::vector<u16> c;
    u16 a0 = 0;
    std::vector<u16> a;
    u16 m = 0;
    bool operator==(const TwistedWord&) const = default;
    bool operator<(const TwistedWord& o) const;   // total letters, c, a0, a, m
};

struct TwistedComplex {
    AInfAlgebra alg;
    AInfCoalgebra dual;      // dual coalgebra of alg; prefix letters live here
    AInfModule mod;          // left module filling the m slot
    AInfBimodule bimod;      // dualizing bimodule driving the a0 slot
    Truncation trunc;
    ChainComplex cx;
    std::vector<std::vector<TwistedWord>> words;   // words[d - cx.lo], sorted

    // sum(deg c_i - 1) + deg a0 + sum(deg a_i + 1) + deg m
    int degree_of(const TwistedWord& w) const;
    u32 index_of(const TwistedWord& w) const;      // throws std::out_of_range
    const TwistedWord& word_at(int degree, u32 i) const;
    std::string word_name(const TwistedWord& w) const;
    std::vector<TwistedWord> boundary(const TwistedWord& w) const;   // mod-2 reduced

    // Norm image in the cobar word set: module terms that consume a0 plus
    // all bar letters at once emit the reversed duals of their remaining
    // inputs after the passed-through prefix. Terms whose letter word
    // exceeds l_max are dropped.
    std::vector<CobarWord> norm_image(const TwistedWord& w) const;
};

// Twisted one-sided bar complex of a left module: five boundary families
// (prefix gains an augmentation letter, a prefix letter splits, the a0 slot
// moves by the dualizing bimodule, inner runs multiply, the m slot absorbs
// suffixes). Words keep at most k_max bar letters and l_max prefix letters.
TwistedComplex twisted_borel_complex(const AInfAlgebra& alg, const AInfModule& m,
                                     Truncation t);

struct NormReport {
    bool pass = true;
    std::string what;
    std::string witness;   // word where the identity first fails
    u64 checked = 0;
};

// Degreewise matrix of the norm into a compatible cobar complex (the
// co-Borel complex of the same module with the same l_max).
ChainMap norm_map(const TwistedComplex& src, const CobarComplex& tgt);

// Word-level checks that the norm is a chain map (target boundary of the
// image equals the image of the source boundary, truncation drops on both
// sides) and that it commutes with prepending one dual letter.
NormReport verify_norm(const TwistedComplex& src, const CobarComplex& tgt);

struct TateComplex {
    TwistedComplex source;
    CobarComplex target;
    ChainMap norm;
    ChainComplex cx;        // cone of the norm; X block first in each degree
};

TateComplex tate_complex(const AInfAlgebra& alg, const AInfModule& m, Truncation t);

// Exactness nodes of the homology triangle of the cone over the window.
std::vector<ExactnessNode> tate_les_report(const TateComplex& t, DegreeRange window);

} // namespace equihom
