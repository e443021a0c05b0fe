#pragma once

#include <string>
#include <vector>

#include "bruck/loop.hpp"
#include "bruck/perm_group.hpp"

namespace bruck::testing {

Perm perm(std::vector<Point> images);
// Perm of the given degree from cycle notation, e.g. "(0 1 2)(3 4)".
Perm cycles(std::size_t degree, const std::string& text);

PermGroup symmetric_group(std::size_t n);
PermGroup cyclic_perm_group(std::size_t n);
PermGroup dihedral_perm_group(std::size_t n);  // order 2n on n points
PermGroup elementary_abelian_perm_group(std::size_t k);  // regular, order 2^k
PermGroup frobenius21();                        // nonabelian, order 21 on 7 points
PermGroup heisenberg27();                       // nonabelian, exponent 3, order 27 on 9 points

Loop cyclic_loop(std::size_t n);
Loop elementary_abelian_loop(std::size_t k);  // order 2^k
// <a, b | a^m = 1, b^k = a^s, a^b = a^r>
Loop metacyclic_loop(std::size_t m, std::size_t k, std::size_t r, std::size_t s);
Loop a4_loop();
// (C4 x C2) : C2 with the given action on (u, v): twist 0 -> (u, v + u), twist 1 -> (u + 2v, v)
Loop c4c2_by_c2_loop(int twist);

struct NamedLoop {
  std::string name;
  Loop loop;
};

// The 42 groups of order <= 16, one per isomorphism class.
std::vector<NamedLoop> small_groups();
// Non-associative order-5 loop of exponent 2 (diagonal all 0).
Loop nonbol_order5();

Loop glauberman21();  // nonassociative Bruck loop of order 21
Loop glauberman27();  // from the exponent-3 Heisenberg group; abelian

// Nonassociative Bol loops of order 8 and exponent 2, found by exhaustive
// search and reduced up to isomorphism.
std::vector<Loop> exponent2_bol_order8();

// Bruck loops used across the structure checks: abelian groups of order
// <= 16, elementary abelian 2-groups, the Glauberman loops, the order-8
// exponent-2 loops and a few direct products.
std::vector<NamedLoop> bruck_corpus();

}  // namespace bruck::testing
