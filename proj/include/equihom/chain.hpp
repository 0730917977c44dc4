#pragma once
// Chain complexes of finite dimensional F2 vector spaces supported on a
// finite degree window. Each complex carries a trusted degree range: the
// degrees whose homology is unaffected by whatever truncation produced the
// complex. Reporting helpers refuse to read outside it.

#include "equihom/f2.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace equihom {

// Inclusive degree interval; INT_MIN / INT_MAX ends mean unbounded.
struct DegreeRange {
    int lo = INT_MIN;
    int hi = INT_MAX;
    bool contains(int d) const { return lo <= d && d <= hi; }
    bool empty() const { return hi < lo; }
};

// a + b where INT_MIN and INT_MAX absorb (used on DegreeRange endpoints).
int sat_add(int a, int b);

struct ChainComplex {
    int lo = 0, hi = -1;                 // support window; hi < lo = zero complex
    std::vector<u32> dims;               // dims[d - lo]
    std::vector<SparseF2Matrix> bnd;     // bnd[d - lo] : C_d -> C_{d-1}
    DegreeRange trusted;

    u32 dim(int d) const;
    SparseF2Matrix boundary(int d) const;    // zero-shaped copy outside support
    DegreeRange support() const { return {lo, hi}; }
};

struct D2Failure {
    int degree;   // boundary-of-boundary fails on a degree `degree` column
    u32 column;
};
std::optional<D2Failure> check_d2(const ChainComplex& c);

// Homology dimensions by degree over an explicit finite window. Degrees
// outside the trusted range are omitted from the result.
std::map<int, u32> homology_dims(const ChainComplex& c, DegreeRange window);

// Degreewise linear map f : X -> Y of degree 0.
struct ChainMap {
    int lo = 0, hi = -1;
    std::vector<SparseF2Matrix> comp;    // comp[d - lo] : X_d -> Y_d
    SparseF2Matrix at(int d, u32 x_dim, u32 y_dim) const;
};

// First degree where bnd_Y f != f bnd_X, if any.
std::optional<int> chain_map_defect(const ChainComplex& x, const ChainComplex& y,
                                    const ChainMap& f);

// Mapping cone: Cone_d = X_{d-1} (+) Y_d (X block first), boundary
// (a, b) -> (bnd_X a, f a + bnd_Y b). Trusted range is
// [max(x.lo, y.lo) + 1, min(x.hi, y.hi)] of the inputs' trusted ranges:
// the degree-d cone homology is determined by homology and induced maps at
// X-degrees d, d-1 and Y-degrees d, d-1.
ChainComplex cone(const ChainComplex& x, const ChainComplex& y, const ChainMap& f);

// Homology basis at one degree: cycle representatives plus the echelon data
// needed to express any cycle as boundaries + representatives.
class HomologyBasis {
public:
    HomologyBasis() : ech_(0, 0) {}
    HomologyBasis(const ChainComplex& c, int d);

    u32 dim() const { return static_cast<u32>(reps_.size()); }
    const std::vector<BitVec>& reps() const { return reps_; }
    // Homology coordinates of a cycle; nullopt when v is not in
    // boundaries + cycles (i.e. not a cycle of the complex).
    std::optional<BitVec> coords_of(const BitVec& v) const;

private:
    std::vector<BitVec> reps_;
    std::vector<u32> rep_slot_;   // echelon coordinate of each representative
    ColumnEchelon ech_;
};

// Matrix of the map induced on homology by the degree-d component f_d.
// Throws when f_d sends some representative outside the cycles of `tgt`.
SparseF2Matrix induced_map(const HomologyBasis& src, const HomologyBasis& tgt,
                           const SparseF2Matrix& f_d);

struct ExactnessNode {
    int degree;             // degree of the middle homology group
    std::string label;      // which group the node sits at
    bool checked;           // false: some involved degree is untrusted, skipped
    bool exact;             // meaningful only when checked
    u32 rank_in, rank_out, dim_mid;
};

// Exactness nodes of the homology triangle of a cone,
//   H_d(X) -> H_d(Y) -> H_d(Cone) -> H_{d-1}(X) -> H_{d-1}(Y),
// at H_d(Y), H_d(Cone) and H_{d-1}(X) for each degree d in the window.
// A node is checked only when every homology group it involves lies in the
// trusted range of its complex; skipped nodes are flagged, not failed.
std::vector<ExactnessNode> cone_les_report(const ChainComplex& x, const ChainComplex& y,
                                           const ChainMap& f, DegreeRange window);

} // namespace equihom
