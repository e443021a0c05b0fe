#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bruck/error.hpp"
#include "bruck/perm.hpp"
#include "bruck/perm_group.hpp"

namespace bruck {

// ---- element enumeration (OpenMP kernels, serial references below) ----

// All elements in rank order. Throws EnumerationBoundExceeded above the bound.
std::vector<Perm> enumerate_elements(const PermGroup& g, const Bounds& bounds = {});
// order of each element, indexed like `elements`
std::vector<std::uint64_t> element_orders(std::span<const Perm> elements);
// table[r * gens.size() + j] = rank of elements[r]^gens[j]
std::vector<std::uint64_t> conjugation_table(const PermGroup& g, std::span<const Perm> elements,
                                             std::span<const Perm> gens);

namespace serial {
std::vector<Perm> enumerate_elements(const PermGroup& g, const Bounds& bounds = {});
std::vector<std::uint64_t> element_orders(std::span<const Perm> elements);
std::vector<std::uint64_t> conjugation_table(const PermGroup& g, std::span<const Perm> elements,
                                             std::span<const Perm> gens);
}  // namespace serial

// ---- subgroup relations and closures ----

bool is_subgroup(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& n);
// A generating set of g with at most log2|g| elements, chosen greedily from g's generators.
std::vector<Perm> reduced_generators(const PermGroup& g);
PermGroup generated_by(std::size_t degree, std::span<const Perm> elements);
PermGroup join(const PermGroup& a, const PermGroup& b);
// Smallest normal subgroup of g containing s. Throws NotContained unless s is inside g.
PermGroup normal_closure(const PermGroup& g, std::span<const Perm> s);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup intersection(const PermGroup& a, const PermGroup& b, const Bounds& bounds = {});
PermGroup centralizer(const PermGroup& g, std::span<const Perm> s, const Bounds& bounds = {});
PermGroup center(const PermGroup& g, const Bounds& bounds = {});
// Largest normal subgroup of g inside h.
PermGroup core(const PermGroup& g, const PermGroup& h, const Bounds& bounds = {});

// ---- conjugacy classes ----

struct ConjugacyClass {
  Perm representative;  // member of least rank
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::vector<std::uint64_t> members;  // ranks, ascending
};

// Sorted by representative rank; the identity class comes first.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const Bounds& bounds = {});

// ---- characteristic subgroups ----

PermGroup o2(const PermGroup& g, const Bounds& bounds = {});            // largest normal 2-subgroup
PermGroup odd_core(const PermGroup& g, const Bounds& bounds = {});      // O(G)
PermGroup o2prime(const PermGroup& g, const Bounds& bounds = {});       // O^{2'}(G)
PermGroup o2residual(const PermGroup& g, const Bounds& bounds = {});    // O^2(G)

// ---- Sylow subgroups ----

// Normalizer ascent from the trivial group.
PermGroup sylow(const PermGroup& g, std::uint64_t p, const Bounds& bounds = {});
// Normalizer ascent from the p-subgroup `start`; the result contains it.
PermGroup sylow_containing(const PermGroup& g, const PermGroup& start, std::uint64_t p,
                           const Bounds& bounds = {});

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_power(std::uint64_t n, std::uint64_t p);

// ---- cosets ----

// Right cosets H*x of a subgroup H in G. Point stabilizers are recognised
// and handled through the point action; other subgroups need an element list.
class CosetTable {
 public:
  CosetTable(const PermGroup& g, const PermGroup& h, const Bounds& bounds = {});

  std::size_t count() const noexcept { return reps_.size(); }
  std::size_t coset_of(const Perm& x) const;
  const Perm& representative(std::size_t c) const { return reps_.at(c); }
  const std::vector<Perm>& representatives() const noexcept { return reps_; }
  // Permutation induced by x on the cosets (right multiplication).
  Perm action(const Perm& x) const;

 private:
  PermGroup g_;
  std::vector<Perm> reps_;
  // point-stabilizer path
  bool point_mode_ = false;
  std::vector<std::int32_t> point_slot_;
  Point anchor_ = 0;
  // generic path: coset id indexed by rank in g
  std::vector<std::uint32_t> by_rank_;
};

// G acting on the right cosets of a normal subgroup N; the image is G/N.
struct Quotient {
  CosetTable cosets;
  PermGroup image;
  Perm map(const Perm& x) const { return cosets.action(x); }
};

Quotient quotient(const PermGroup& g, const PermGroup& n, const Bounds& bounds = {});

}  // namespace bruck
