#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "bruck/error.hpp"
#include "bruck/folder.hpp"
#include "bruck/loop.hpp"
#include "bruck/perm_group.hpp"

namespace bruck {

enum class FillOrder { RowMajor, ColumnMajor };

struct SearchSpec {
  std::size_t order = 1;
  bool require_bol = false;
  bool require_aip = false;
  bool require_exponent2 = false;  // x*x = 1 for all x
  bool up_to_isomorphism = false;
  std::uint64_t node_budget = 1'000'000;
  FillOrder fill = FillOrder::RowMajor;
};

struct SearchResult {
  std::vector<Loop> loops;  // sorted by table; first of each class when reduced
  std::uint64_t nodes = 0;
};

// Normalized Latin squares satisfying the spec. Orders up to 8 with a
// constraint, up to 6 without. Throws NodeBudgetExceeded, InvalidArgument.
SearchResult enumerate_loops(const SearchSpec& spec);

namespace serial {
SearchResult enumerate_loops(const SearchSpec& spec);
}  // namespace serial

// JSON fixture: spec echo, counts and the representatives with their flags.
nlohmann::json bol_from_search_report(const SearchSpec& spec, const SearchResult& result);

// Cayley table with elements numbered by rank in g.
Loop group_loop(const PermGroup& g, const Bounds& bounds = {});

// x * y = (y x^2 y)^(1/2) on the elements of an odd-order group, numbered by
// rank. This is the right Bol form; (x y^2 x)^(1/2) gives the opposite,
// left Bol loop. Throws EvenOrder.
Loop glauberman_loop(const PermGroup& g, const Bounds& bounds = {});

struct EnvelopeHit {
  LoopFolder folder;
  Loop loop;
  std::vector<std::size_t> classes;  // indices into conjugacy_classes(g)
  bool bol = false;
  bool aip = false;
  bool exponent2 = false;
};

// Folders (G, H, K) with K = {1} plus a union of involution classes, K a
// transversal to every conjugate of H and G = <K>.
std::vector<EnvelopeHit> envelope_search(const PermGroup& g, const PermGroup& h, const Bounds& bounds = {});

}  // namespace bruck
