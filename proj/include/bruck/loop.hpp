#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bruck/error.hpp"

namespace bruck {

using Element = std::uint32_t;

// Sorted element list of a subloop; always contains 0.
using SubloopSet = std::vector<Element>;

// A finite loop given by its multiplication table on 0..n-1, with 0 the
// two-sided identity. Tables whose identity sits elsewhere are rejected.
class Loop {
 public:
  Loop() : Loop(1, {0}) {}
  // Throws InvalidLoop naming the first offending row or column.
  Loop(std::size_t n, std::vector<Element> table);
  static Loop from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  // b with a*b = c
  Element left_div(Element a, Element c) const noexcept { return ldiv_[a * n_ + c]; }
  // a with a*b = c
  Element right_div(Element c, Element b) const noexcept { return rdiv_[b * n_ + c]; }
  std::span<const Element> row(Element a) const noexcept { return {table_.data() + a * n_, n_}; }
  std::span<const Element> table() const noexcept { return table_; }

  friend bool operator==(const Loop& a, const Loop& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
};

// ---- identities (OpenMP kernels; serial references for testing) ----

using Triple = std::array<Element, 3>;

// First (x, y, z) in lexicographic order with ((xy)z)y != x((yz)y).
std::optional<Triple> bol_violation(const Loop& loop);
bool check_bol(const Loop& loop);
// First (x, y, z) with (xy)z != x(yz).
std::optional<Triple> associativity_violation(const Loop& loop);
bool is_associative(const Loop& loop);
bool is_commutative(const Loop& loop);

namespace serial {
std::optional<Triple> bol_violation(const Loop& loop);
std::optional<Triple> associativity_violation(const Loop& loop);
}  // namespace serial

std::optional<Element> two_sided_inverse(const Loop& loop, Element x);
// Throws NoTwoSidedInverse if some element lacks one.
bool check_aip(const Loop& loop);
bool check_bruck(const Loop& loop);

// x^m with right bracketing ((x x) x)...; m >= 1
Element right_power(const Loop& loop, Element x, std::uint64_t m);
// x^m with left bracketing x(x(x ...))
Element left_power(const Loop& loop, Element x, std::uint64_t m);

// The following throw NotBol unless check_bol(loop).
std::uint64_t element_order(const Loop& loop, Element x);
std::vector<std::uint64_t> element_orders(const Loop& loop);
std::uint64_t exponent(const Loop& loop);
bool check_exponent_power_of_2(const Loop& loop);

// ---- subloops ----

SubloopSet subloop_closure(const Loop& loop, std::span<const Element> seed);
// All subloops ordered by (size, elements). Throws OrderBoundExceeded.
std::vector<SubloopSet> enumerate_subloops(const Loop& loop, const Bounds& bounds = {});
// The loop induced on `s`; element i of the result is s[i].
Loop subloop_table(const Loop& loop, const SubloopSet& s);
bool is_subloop(const Loop& loop, const SubloopSet& s);

// ---- normality ----

// Orbit label of each element under the inner mapping group Stab_Mlt(0),
// generated by the maps R(x,y), L(x,y), T(x).
std::vector<Element> inner_mapping_orbits(const Loop& loop);
// Union of inner-mapping orbits and the coset partition {xN} is a block system.
bool is_normal_subloop(const Loop& loop, const SubloopSet& n);
std::vector<SubloopSet> normal_subloops(const Loop& loop, const Bounds& bounds = {});
// Smallest normal subloop containing `seed`.
SubloopSet normal_closure(const Loop& loop, std::span<const Element> seed);
// Smallest normal subloop whose quotient is an abelian group.
SubloopSet derived_subloop(const Loop& loop);

// Block index of each element; blocks are numbered by least member. Throws NotNormal.
std::vector<Element> canonical_projection(const Loop& loop, const SubloopSet& n);
Loop quotient_loop(const Loop& loop, const SubloopSet& n);
bool is_soluble(const Loop& loop);

// ---- homomorphisms and constructions ----

struct LoopHom {
  const Loop* source = nullptr;
  const Loop* target = nullptr;
  std::vector<Element> map;
};

bool is_homomorphism(const LoopHom& hom);

// (a, b) is element a * |B| + b.
Loop direct_product(const Loop& a, const Loop& b);
// Isomorphism a -> b found by backtracking over generator images with invariant pruning.
std::optional<std::vector<Element>> find_isomorphism(const Loop& a, const Loop& b);
bool loops_isomorphic(const Loop& a, const Loop& b, const Bounds& bounds = {});

}  // namespace bruck
