#include "equihom/trees.hpp"

#include <stdexcept>

namespace equihom {

u32 leaf_count(const Tree& t) {
    if (t.is_leaf()) return 1;
    u32 n = 0;
    for (const Tree& k : t.kids) n += leaf_count(k);
    return n;
}

u32 internal_vertex_count(const Tree& t) {
    if (t.is_leaf()) return 0;
    u32 n = 1;
    for (const Tree& k : t.kids) n += internal_vertex_count(k);
    return n;
}

bool is_trivalent(const Tree& t) {
    if (t.is_leaf()) return true;
    if (t.kids.size() != 2) return false;
    for (const Tree& k : t.kids)
        if (!is_trivalent(k)) return false;
    return true;
}

u32 codimension(const Tree& t) {
    if (t.is_leaf()) return 0;
    u32 c = static_cast<u32>(t.kids.size()) - 2;
    for (const Tree& k : t.kids) c += codimension(k);
    return c;
}

namespace {

void bracketing_rec(const Tree& t, u32& next_leaf, std::string& out) {
    if (t.is_leaf()) {
        out += "x" + std::to_string(++next_leaf);
        return;
    }
    out += "(";
    for (const Tree& k : t.kids) bracketing_rec(k, next_leaf, out);
    out += ")";
}

// Compositions of n into parts >= 1, lexicographic.
void compositions(u32 n, u32 parts, std::vector<u32>& cur, std::vector<std::vector<u32>>& out) {
    if (parts == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (u32 first = 1; first + (parts - 1) <= n; ++first) {
        cur.push_back(first);
        compositions(n - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

void product_over_parts(const std::vector<std::vector<Tree>>& choices, size_t at,
                        std::vector<Tree>& cur, std::vector<Tree>& out_trees) {
    if (at == choices.size()) {
        out_trees.push_back(Tree{cur});
        return;
    }
    for (const Tree& t : choices[at]) {
        cur.push_back(t);
        product_over_parts(choices, at + 1, cur, out_trees);
        cur.pop_back();
    }
}

} // namespace

std::string bracketing(const Tree& t) {
    std::string out;
    u32 next_leaf = 0;
    bracketing_rec(t, next_leaf, out);
    return out;
}

std::vector<Tree> enumerate_trees(u32 n) {
    if (n == 0) throw std::invalid_argument("enumerate_trees: n must be positive");
    if (n == 1) return {Tree{}};
    std::vector<Tree> out;
    for (u32 arity = 2; arity <= n; ++arity) {
        std::vector<std::vector<u32>> comps;
        std::vector<u32> cur;
        compositions(n, arity, cur, comps);
        for (const auto& comp : comps) {
            std::vector<std::vector<Tree>> choices;
            for (u32 part : comp) choices.push_back(enumerate_trees(part));
            std::vector<Tree> stack;
            product_over_parts(choices, 0, stack, out);
        }
    }
    return out;
}

std::vector<EdgePath> internal_edges(const Tree& t) {
    std::vector<EdgePath> out;
    EdgePath cur;
    auto rec = [&](auto&& self, const Tree& v) -> void {
        for (u32 i = 0; i < v.kids.size(); ++i) {
            if (!v.kids[i].is_leaf()) {
                cur.push_back(i);
                out.push_back(cur);
                self(self, v.kids[i]);
                cur.pop_back();
            }
        }
    };
    rec(rec, t);
    return out;
}

Tree collapse_edge(const Tree& t, const EdgePath& edge) {
    if (edge.empty()) throw std::invalid_argument("collapse_edge: empty path");
    Tree out = t;
    Tree* parent = &out;
    for (size_t i = 0; i + 1 < edge.size(); ++i)
        parent = &parent->kids.at(edge[i]);
    u32 at = edge.back();
    Tree child = parent->kids.at(at);
    if (child.is_leaf()) throw std::invalid_argument("collapse_edge: path ends at a leaf");
    parent->kids.erase(parent->kids.begin() + at);
    parent->kids.insert(parent->kids.begin() + at, child.kids.begin(), child.kids.end());
    return out;
}

WallAdjacency wall_adjacency(u32 n) {
    WallAdjacency adj;
    for (const Tree& t : enumerate_trees(n)) {
        u32 c = codimension(t);
        if (c == 0) adj.chambers.push_back(t);
        else if (c == 1) adj.walls.push_back(t);
    }
    for (u32 ci = 0; ci < adj.chambers.size(); ++ci) {
        for (const EdgePath& e : internal_edges(adj.chambers[ci])) {
            Tree w = collapse_edge(adj.chambers[ci], e);
            for (u32 wi = 0; wi < adj.walls.size(); ++wi) {
                if (adj.walls[wi] == w) {
                    adj.incidence.emplace_back(wi, ci);
                    break;
                }
            }
        }
    }
    return adj;
}

std::vector<TermSchema> ainf_terms(u32 k) {
    std::vector<TermSchema> out;
    for (u32 k2 = 1; k2 <= k; ++k2) {
        u32 k1 = k + 1 - k2;
        for (u32 i = 1; i <= k1; ++i) out.push_back({k1, i, k2});
    }
    return out;
}

} // namespace equihom
