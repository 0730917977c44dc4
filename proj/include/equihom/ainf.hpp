#pragma once
// Finitely presented homotopy-associative structures over F2: algebras,
// modules, coalgebras, comodules and the four bimodule shapes, with
// relation verifiers that report the first surviving residual as a witness,
// dualization, and the builders for the stock examples.

#include "equihom/f2.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace equihom {

struct Basis {
    std::vector<std::string> names;
    std::vector<int> degrees;            // parallel to names; empty means all 0

    u16 size() const { return static_cast<u16>(names.size()); }
    int degree(u16 i) const { return degrees.empty() ? 0 : degrees[i]; }
    bool graded() const;                 // any nonzero degree
    u16 index(const std::string& name) const;   // throws on unknown name
    int min_degree() const;
    int max_degree() const;
};

// One structure-map term mu^arity(in_1, ..., in_arity) = out (+ others).
struct AlgTerm {
    std::vector<u16> in;
    u16 out;
    bool operator==(const AlgTerm&) const = default;
};

struct AInfAlgebra {
    std::string name;
    Basis basis;
    std::map<u32, std::vector<AlgTerm>> mu;    // arity -> terms
    std::vector<u16> aug;                      // augmentation support, sorted
};

enum class ModuleSide { left, right };

// Module term: `a` lists the consumed algebra letters in word order (on the
// left of the slot for a left module, on the right for a right module).
struct ModTerm {
    std::vector<u16> a;
    u16 m_in, m_out;
    bool operator==(const ModTerm&) const = default;
};

struct AInfModule {
    std::string name;
    ModuleSide side = ModuleSide::left;
    Basis basis;
    std::map<u32, std::vector<ModTerm>> mu;    // letter count -> terms (0 = differential)
};

struct CoalgTerm {
    u16 in;
    std::vector<u16> out;
    bool operator==(const CoalgTerm&) const = default;
};

struct AInfCoalgebra {
    std::string name;
    Basis basis;
    std::map<u32, std::vector<CoalgTerm>> delta;   // output length -> terms
    std::vector<u16> triv;   // support of the element that trivial comodules emit
};

// Comodule term: coaction m_in -> (letters, m_out) with `c` in word order
// relative to the slot (left comodule: letters precede the slot; right
// comodule: letters follow it).
struct ComodTerm {
    u16 m_in;
    std::vector<u16> c;
    u16 m_out;
    bool operator==(const ComodTerm&) const = default;
};

struct AInfComodule {
    std::string name;
    ModuleSide side = ModuleSide::left;
    Basis basis;
    std::map<u32, std::vector<ComodTerm>> delta;   // letter count -> terms
};

// The four bimodule shapes, named by what lives on each side of the slot:
// consumed algebra letters (in_*) and emitted coalgebra letters (out_*).
enum class BimodKind { algebra_algebra, coalgebra_coalgebra, algebra_coalgebra, coalgebra_algebra };

struct BimodTerm {
    std::vector<u16> in_left, in_right;    // consumed letters, word order
    u16 m_in = 0, m_out = 0;
    std::vector<u16> out_left, out_right;  // emitted letters, word order
    bool operator==(const BimodTerm&) const = default;
};

struct AInfBimodule {
    std::string name;
    BimodKind kind = BimodKind::coalgebra_algebra;
    Basis basis;
    std::vector<BimodTerm> terms;
};

// ---- relation verifiers ----------------------------------------------------

struct VerifyReport {
    bool pass = true;
    std::string what;                   // short description of the failure
    std::vector<std::string> witness;   // input word on which the residual survives
    std::vector<std::string> residual;  // surviving output terms
    u64 checked = 0;                    // relation instances evaluated
};

// Quadratic relations on all input words of length <= k_check.
VerifyReport verify_algebra(const AInfAlgebra& a, u32 k_check);
VerifyReport verify_module(const AInfAlgebra& a, const AInfModule& m, u32 k_check);
VerifyReport verify_coalgebra(const AInfCoalgebra& c, u32 k_check);
VerifyReport verify_comodule(const AInfCoalgebra& c, const AInfComodule& n, u32 k_check);

// Square-zero check of the one-sided word differential generated by the
// bimodule structure together with the algebra (consumed letters) and
// coalgebra (emitted letters) it interacts with. Pass nullptr for a side
// the kind does not use.
VerifyReport verify_bimodule(const AInfBimodule& b, const AInfAlgebra* a,
                             const AInfCoalgebra* c, u32 k_check);

// ---- dualization and change of structure -----------------------------------

// mu^k(in_1..in_k) = out dualizes to delta^k(out*) = (in_k*, ..., in_1*):
// outputs are the reversed duals of the inputs. Degrees are negated and the
// augmentation support becomes the distinguished trivial-coaction element.
AInfCoalgebra dualize_algebra(const AInfAlgebra& a);
AInfAlgebra dualize_coalgebra(const AInfCoalgebra& c);

// Same underlying basis: a module over A becomes a comodule over A* on the
// same side, with coaction letters the reversed duals of the consumed ones.
AInfComodule module_to_comodule(const AInfModule& m);

// Dual basis: a left module over A becomes a right comodule over A* (and a
// right module a left comodule), transposing the structure maps.
AInfComodule dual_module(const AInfModule& m);

// One-dimensional comodule whose coaction emits the distinguished element.
AInfComodule trivial_right_comodule(const AInfCoalgebra& c);

// ---- builders ---------------------------------------------------------------

// Thrown when a multiplication table fails a group law; the message names
// the witness elements.
struct GroupLawError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Group algebra F2[G] from a multiplication table. Rejects tables that are
// not closed, lack a two-sided identity, are non-associative, or miss
// inverses, naming a witness in the exception message.
AInfAlgebra group_algebra(const std::string& name,
                          const std::vector<std::string>& elems,
                          const std::map<std::pair<std::string, std::string>, std::string>& mult);

AInfAlgebra make_z2();
AInfAlgebra make_z3();
AInfAlgebra make_trivial_group();
// F2[x]/(x^2) with the generator in the given degree.
AInfAlgebra exterior_algebra_rank1(int gen_degree);

// epsilon-convention trivial module: every augmentation-support element acts
// by identity. (The all-zero convention fails the bar subcomplex property.)
AInfModule trivial_module(const AInfAlgebra& a, ModuleSide side);
// A acting on itself: every operation becomes a module term with the slot
// input taken from the module-side end of the letter word.
AInfModule free_module(const AInfAlgebra& a, ModuleSide side);

// ---- formatting helpers -----------------------------------------------------

std::string term_name(const Basis& b, const std::vector<u16>& word);

} // namespace equihom
