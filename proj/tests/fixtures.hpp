// Shared test fixtures: small structures whose relations are checkable by hand.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equihom/ainf.hpp"

namespace equihom::fixtures {

// Graded algebra with a nontrivial ternary operation: basis {1, a, b} in
// degrees {0, 1, 4}, unital binary product with a*a = 0, and mu^3(a,a,a) = b.
// The relation suite closes: the only surviving arity-4 pairs are
// mu^2(mu^3(a,a,a), 1) + mu^3(a,a,mu^2(a,1)) and its mirror images.
inline AInfAlgebra massey_algebra() {
    AInfAlgebra a;
    a.name = "massey";
    a.basis.names = {"1", "a", "b"};
    a.basis.degrees = {0, 1, 4};
    a.mu[2] = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{0, 2}, 2}, {{2, 0}, 2}};
    a.mu[3] = {{{1, 1, 1}, 2}};
    a.aug = {0};
    return a;
}

// Left module over the order-2 group algebra where both group elements act as
// the identity and a single two-letter operation {g,g};u -> v records a
// cocycle. Module relations cancel in pairs against mu^2 of the group.
inline AInfModule cocycle_module_z2() {
    AInfModule m;
    m.name = "cocycle";
    m.side = ModuleSide::left;
    m.basis.names = {"u", "v"};
    m.basis.degrees = {0, 1};
    m.mu[1] = {{{0}, 0, 0}, {{0}, 1, 1}, {{1}, 0, 0}, {{1}, 1, 1}};
    m.mu[2] = {{{1, 1}, 0, 1}};
    return m;
}

// Acyclic left module over the one-element group algebra: two generators u, v
// with differential u -> v and the identity action. H(M) = 0, so every
// homology built from it over the trivial algebra must vanish.
inline AInfModule acyclic_module_trivial() {
    AInfModule m;
    m.name = "acyclic";
    m.side = ModuleSide::left;
    m.basis.names = {"u", "v"};
    m.basis.degrees = {1, 0};
    m.mu[0] = {{{}, 0, 1}};
    m.mu[1] = {{{0}, 0, 0}, {{0}, 1, 1}};
    return m;
}

// Symmetric group on three letters as a group algebra; the smallest
// noncommutative example. Elements are named by their one-line permutation
// of "012" under left-to-right composition (apply x, then y).
inline AInfAlgebra make_s3() {
    std::vector<std::string> elems;
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p = {0, 1, 2};
    do {
        perms.push_back(p);
        std::string nm;
        for (int d : p) nm += static_cast<char>('0' + d);
        elems.push_back(nm);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::pair<std::string, std::string>, std::string> mult;
    for (size_t i = 0; i < perms.size(); ++i)
        for (size_t j = 0; j < perms.size(); ++j) {
            std::array<int, 3> c;
            for (int t = 0; t < 3; ++t) c[static_cast<size_t>(t)] =
                perms[j][static_cast<size_t>(perms[i][static_cast<size_t>(t)])];
            std::string nm;
            for (int d : c) nm += static_cast<char>('0' + d);
            mult[{elems[i], elems[j]}] = nm;
        }
    return group_algebra("s3", elems, mult);
}

}  // namespace equihom::fixtures
