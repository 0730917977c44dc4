// Tree combinatorics checked against an independent recursive generator and
// hand-counted face data of the small associahedra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "equihom/trees.hpp"

using namespace equihom;

namespace {

// Independent oracle: every fully parenthesized word with leaves lo..hi,
// built by splitting the leaf interval into >= 2 consecutive blocks. Written
// from the definition, not from the library's enumeration.
std::set<std::string> oracle_words(u32 lo, u32 hi) {
    std::set<std::string> out;
    if (lo == hi) {
        out.insert("x" + std::to_string(lo));
        return out;
    }
    u32 n = hi - lo + 1;
    // Iterate over subsets of the n-1 gaps; a chosen subset of size >= 1
    // cuts the interval into >= 2 blocks.
    for (u32 mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<std::pair<u32, u32>> blocks;
        u32 start = lo;
        for (u32 g = 0; g < n - 1; ++g)
            if (mask & (1u << g)) {
                blocks.push_back({start, lo + g});
                start = lo + g + 1;
            }
        blocks.push_back({start, hi});
        std::vector<std::set<std::string>> choices;
        for (auto [a, b] : blocks) choices.push_back(oracle_words(a, b));
        std::vector<std::set<std::string>::const_iterator> it;
        for (const auto& ch : choices) it.push_back(ch.begin());
        bool done = false;
        while (!done) {
            std::string w = "(";
            for (size_t i = 0; i < it.size(); ++i) w += *it[i];
            w += ")";
            out.insert(w);
            size_t i = it.size();
            while (true) {
                if (i == 0) {
                    done = true;
                    break;
                }
                --i;
                if (++it[i] != choices[i].end()) break;
                it[i] = choices[i].begin();
            }
        }
    }
    return out;
}

const Tree& subtree_at(const Tree& t, const EdgePath& p) {
    const Tree* cur = &t;
    for (u32 i : p) cur = &cur->kids[i];
    return *cur;
}

// Path of edge `e` after collapsing edge `c` in `t` (e != c).
EdgePath adjust_path(const Tree& t, const EdgePath& e, const EdgePath& c) {
    size_t d = 0;
    while (d < e.size() && d < c.size() && e[d] == c[d]) ++d;
    if (d == c.size()) {
        // c is a proper prefix of e: the collapsed vertex's children are
        // spliced in at index c.back(), shifting the next step of e.
        EdgePath out(e.begin(), e.begin() + static_cast<long>(c.size() - 1));
        out.push_back(c.back() + e[c.size()]);
        out.insert(out.end(), e.begin() + static_cast<long>(c.size() + 1), e.end());
        return out;
    }
    if (d + 1 == c.size() && c[d] < e[d]) {
        // Sibling collapse to the left of e's branch shifts the index at
        // depth d by arity - 1.
        EdgePath out = e;
        out[d] += static_cast<u32>(subtree_at(t, c).kids.size()) - 1;
        return out;
    }
    return e;
}

std::string leaves_only(const std::string& w) {
    std::string out;
    for (char ch : w)
        if (ch != '(' && ch != ')') out += ch;
    return out;
}

}  // namespace

TEST_CASE("enumeration matches the independent generator") {
    std::vector<size_t> totals = {1, 3, 11, 45, 197};
    for (u32 n = 2; n <= 6; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        CHECK(trees.size() == totals[n - 2]);
        std::set<std::string> got;
        for (const Tree& t : trees) {
            CHECK(leaf_count(t) == n);
            got.insert(bracketing(t));
        }
        CHECK(got.size() == trees.size());  // no duplicate shapes
        CHECK(got == oracle_words(1, n));
    }
}

TEST_CASE("trivalent counts and codimension bookkeeping") {
    std::vector<size_t> catalan = {1, 2, 5, 14, 42};
    for (u32 n = 2; n <= 6; ++n) {
        size_t triv = 0;
        for (const Tree& t : enumerate_trees(n)) {
            if (is_trivalent(t)) {
                ++triv;
                CHECK(codimension(t) == 0);
            }
            // codim = n - 1 - (number of internal vertices) for any shape.
            CHECK(codimension(t) == n - 1 - internal_vertex_count(t));
            CHECK(internal_edges(t).size() == internal_vertex_count(t) - 1);
        }
        CHECK(triv == catalan[n - 2]);
    }
}

TEST_CASE("face counts of the 4-leaf and 5-leaf associahedra") {
    std::map<u32, u32> by_codim;
    for (const Tree& t : enumerate_trees(4)) ++by_codim[codimension(t)];
    CHECK(by_codim == std::map<u32, u32>{{0, 5}, {1, 5}, {2, 1}});
    by_codim.clear();
    for (const Tree& t : enumerate_trees(5)) ++by_codim[codimension(t)];
    CHECK(by_codim == std::map<u32, u32>{{0, 14}, {1, 21}, {2, 9}, {3, 1}});
}

TEST_CASE("bracketing spells specific shapes") {
    Tree leaf;
    Tree corolla{{leaf, leaf, leaf}};
    CHECK(bracketing(corolla) == "(x1x2x3)");
    Tree pair{{leaf, leaf}};
    Tree left_comb{{pair, leaf}};
    CHECK(bracketing(left_comb) == "((x1x2)x3)");
    Tree right_comb{{leaf, pair}};
    CHECK(bracketing(right_comb) == "(x1(x2x3))");
    CHECK(is_trivalent(left_comb));
    CHECK_FALSE(is_trivalent(corolla));
}

TEST_CASE("collapse raises codimension and keeps leaf order") {
    for (u32 n = 3; n <= 5; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (const EdgePath& e : internal_edges(t)) {
                Tree c = collapse_edge(t, e);
                CHECK(leaf_count(c) == n);
                CHECK(codimension(c) == codimension(t) + 1);
                CHECK(leaves_only(bracketing(c)) == leaves_only(bracketing(t)));
            }
}

TEST_CASE("collapses of distinct edges commute under path adjustment") {
    for (const Tree& t : enumerate_trees(5)) {
        std::vector<EdgePath> edges = internal_edges(t);
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = 0; j < edges.size(); ++j) {
                if (i == j) continue;
                Tree a = collapse_edge(collapse_edge(t, edges[i]),
                                       adjust_path(t, edges[j], edges[i]));
                Tree b = collapse_edge(collapse_edge(t, edges[j]),
                                       adjust_path(t, edges[i], edges[j]));
                CHECK(a == b);
            }
    }
}

TEST_CASE("4-leaf wall and chamber incidence closes into a pentagon") {
    WallAdjacency wa = wall_adjacency(4);
    REQUIRE(wa.walls.size() == 5);
    REQUIRE(wa.chambers.size() == 5);
    REQUIRE(wa.incidence.size() == 10);
    std::map<u32, std::vector<u32>> of_wall, of_chamber;
    for (auto [w, c] : wa.incidence) {
        of_wall[w].push_back(c);
        of_chamber[c].push_back(w);
    }
    for (u32 w = 0; w < 5; ++w) REQUIRE(of_wall[w].size() == 2);
    for (u32 c = 0; c < 5; ++c) REQUIRE(of_chamber[c].size() == 2);
    // Walk chamber -> wall -> chamber; after exactly five walls we must be
    // back at the start having visited every chamber once.
    std::set<u32> seen_walls, seen_chambers;
    u32 cur = 0, prev_wall = 6;
    for (int step = 0; step < 5; ++step) {
        seen_chambers.insert(cur);
        u32 w = of_chamber[cur][0] == prev_wall ? of_chamber[cur][1] : of_chamber[cur][0];
        seen_walls.insert(w);
        cur = of_wall[w][0] == cur ? of_wall[w][1] : of_wall[w][0];
        prev_wall = w;
    }
    CHECK(cur == 0);
    CHECK(seen_walls.size() == 5);
    CHECK(seen_chambers.size() == 5);
}

TEST_CASE("5-leaf chambers each border three walls") {
    WallAdjacency wa = wall_adjacency(5);
    CHECK(wa.walls.size() == 21);
    CHECK(wa.chambers.size() == 14);
    CHECK(wa.incidence.size() == 42);
    std::map<u32, u32> wall_deg, chamber_deg;
    for (auto [w, c] : wa.incidence) {
        ++wall_deg[w];
        ++chamber_deg[c];
    }
    for (u32 w = 0; w < wa.walls.size(); ++w) CHECK(wall_deg[w] == 2);
    for (u32 c = 0; c < wa.chambers.size(); ++c) CHECK(chamber_deg[c] == 3);
    for (const Tree& w : wa.walls) CHECK(codimension(w) == 1);
    for (const Tree& c : wa.chambers) CHECK(is_trivalent(c));
}

TEST_CASE("expansion schemas") {
    for (u32 k = 1; k <= 8; ++k) {
        std::vector<TermSchema> ts = ainf_terms(k);
        CHECK(ts.size() == k * (k + 1) / 2);
        std::set<std::tuple<u32, u32, u32>> uniq;
        for (const TermSchema& s : ts) {
            CHECK(s.k1 + s.k2 == k + 1);
            CHECK(s.k1 >= 1);
            CHECK(s.k2 >= 1);
            CHECK(s.i >= 1);
            CHECK(s.i <= s.k1);
            uniq.insert({s.k1, s.i, s.k2});
        }
        CHECK(uniq.size() == ts.size());
    }
    std::vector<TermSchema> t2 = ainf_terms(2);
    std::set<std::tuple<u32, u32, u32>> got;
    for (const TermSchema& s : t2) got.insert({s.k1, s.i, s.k2});
    CHECK(got == std::set<std::tuple<u32, u32, u32>>{{1, 1, 2}, {2, 1, 1}, {2, 2, 1}});
}
