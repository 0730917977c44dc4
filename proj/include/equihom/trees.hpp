#pragma once
// Rooted planar trees with ordered leaves and internal vertices of arity
// >= 2: the face poset of the associahedron, plus the expansion schemas for
// the quadratic structure relations.

#include "equihom/f2.hpp"

#include <string>
#include <vector>

namespace equihom {

// A leaf has no children; any internal vertex has at least two.
struct Tree {
    std::vector<Tree> kids;
    bool is_leaf() const { return kids.empty(); }
    bool operator==(const Tree&) const = default;
};

u32 leaf_count(const Tree& t);
u32 internal_vertex_count(const Tree& t);
bool is_trivalent(const Tree& t);          // every internal vertex binary

// Sum over internal vertices of (arity - 2); 0 exactly for trivalent trees.
u32 codimension(const Tree& t);

// Fully parenthesized word on x1..xn in leaf order; every internal vertex
// contributes one pair of parentheses.
std::string bracketing(const Tree& t);

// All shapes with n leaves, in a fixed deterministic order
// (root arity ascending, then child shapes recursively).
std::vector<Tree> enumerate_trees(u32 n);

// Internal edges, each identified by the child-index path from the root to
// the internal vertex below the edge.
using EdgePath = std::vector<u32>;
std::vector<EdgePath> internal_edges(const Tree& t);

// Contract the edge: the child vertex's children are spliced into the
// parent's child list in place. Leaf order is preserved and the codimension
// grows by exactly 1.
Tree collapse_edge(const Tree& t, const EdgePath& edge);

// Codim-1 faces (walls) vs codim-0 faces (chambers) of the n-leaf
// associahedron, with the incidence pairs (wall index, chamber index).
struct WallAdjacency {
    std::vector<Tree> walls;
    std::vector<Tree> chambers;
    std::vector<std::pair<u32, u32>> incidence;
};
WallAdjacency wall_adjacency(u32 n);

// Expansion schemas (k1, i, k2) with k1 + k2 = k + 1 and 1 <= i <= k1: the
// inner operation of arity k2 sits in slot i of the outer operation of
// arity k1. There are k (k + 1) / 2 of them.
struct TermSchema {
    u32 k1, i, k2;
    bool operator==(const TermSchema&) const = default;
};
std::vector<TermSchema> ainf_terms(u32 k);

} // namespace equihom
