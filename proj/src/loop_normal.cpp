#include <algorithm>
#include <numeric>
#include <string>

#include "bruck/loop.hpp"

namespace bruck {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }
  Element find(Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
  std::vector<Element> parent;
};

// Coset blocks x*N; returns false unless they partition the loop and the
// product of two blocks is again a block.
bool coset_blocks(const Loop& loop, const SubloopSet& n, std::vector<Element>& block, std::vector<Element>& reps) {
  const std::size_t order = loop.order();
  constexpr Element kUnset = UINT32_MAX;
  block.assign(order, kUnset);
  reps.clear();
  for (Element x = 0; x < order; ++x) {
    if (block[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : n) {
      const Element y = loop.mul(x, m);
      if (block[y] != kUnset) return false;
      block[y] = id;
    }
  }
  for (Element x = 0; x < order; ++x) {
    for (Element m : n) {
      if (block[loop.mul(x, m)] != block[x]) return false;
    }
  }
  // Blocks have equal size, so (a b) landing in one block for all a in A,
  // b in B makes A*B exactly that block.
  std::vector<Element> product(reps.size() * reps.size(), kUnset);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      Element& slot = product[block[a] * reps.size() + block[b]];
      const Element c = block[loop.mul(a, b)];
      if (slot == kUnset) slot = c;
      else if (slot != c) return false;
    }
  }
  return true;
}

bool is_orbit_union(const std::vector<Element>& labels, const SubloopSet& n) {
  std::vector<std::size_t> inside(labels.size(), 0);
  std::vector<std::size_t> total(labels.size(), 0);
  for (Element l : labels) ++total[l];
  for (Element x : n) ++inside[labels[x]];
  for (Element x : n) {
    if (inside[labels[x]] != total[labels[x]]) return false;
  }
  return true;
}

bool normal_with_labels(const Loop& loop, const std::vector<Element>& labels, const SubloopSet& n) {
  if (!is_subloop(loop, n)) return false;
  if (!is_orbit_union(labels, n)) return false;
  std::vector<Element> block;
  std::vector<Element> reps;
  return coset_blocks(loop, n, block, reps);
}

}  // namespace

std::vector<Element> inner_mapping_orbits(const Loop& loop) {
  const auto n = static_cast<Element>(loop.order());
  UnionFind uf(n);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) uf.unite(z, loop.left_div(x, loop.mul(z, x)));  // T(x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = loop.mul(x, y);
      const Element yx = loop.mul(y, x);
      for (Element z = 0; z < n; ++z) {
        uf.unite(z, loop.right_div(loop.mul(loop.mul(z, x), y), xy));     // R(x,y)
        uf.unite(z, loop.left_div(yx, loop.mul(y, loop.mul(x, z))));      // L(x,y)
      }
    }
  }
  std::vector<Element> labels(n);
  for (Element z = 0; z < n; ++z) labels[z] = uf.find(z);
  return labels;
}

bool is_normal_subloop(const Loop& loop, const SubloopSet& n) {
  return normal_with_labels(loop, inner_mapping_orbits(loop), n);
}

std::vector<SubloopSet> normal_subloops(const Loop& loop, const Bounds& bounds) {
  const std::vector<SubloopSet> all = enumerate_subloops(loop, bounds);
  const std::vector<Element> labels = inner_mapping_orbits(loop);
  std::vector<SubloopSet> out;
  for (const SubloopSet& s : all) {
    if (normal_with_labels(loop, labels, s)) out.push_back(s);
  }
  return out;
}

SubloopSet normal_closure(const Loop& loop, std::span<const Element> seed) {
  const std::vector<Element> labels = inner_mapping_orbits(loop);
  SubloopSet current = subloop_closure(loop, seed);
  while (true) {
    std::vector<char> label_in(loop.order(), 0);
    for (Element x : current) label_in[labels[x]] = 1;
    std::vector<Element> widened;
    for (Element x = 0; x < loop.order(); ++x) {
      if (label_in[labels[x]]) widened.push_back(x);
    }
    SubloopSet next = subloop_closure(loop, widened);
    if (next == current) return current;
    current = std::move(next);
  }
}

SubloopSet derived_subloop(const Loop& loop) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<char> hit(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = loop.mul(x, y);
      hit[loop.left_div(loop.mul(y, x), xy)] = 1;  // commutator
      for (Element z = 0; z < n; ++z) {
        hit[loop.left_div(loop.mul(x, loop.mul(y, z)), loop.mul(xy, z))] = 1;  // associator
      }
    }
  }
  std::vector<Element> seed;
  for (Element x = 0; x < n; ++x) {
    if (hit[x]) seed.push_back(x);
  }
  return normal_closure(loop, seed);
}

std::vector<Element> canonical_projection(const Loop& loop, const SubloopSet& n) {
  if (!is_normal_subloop(loop, n)) throw Error(ErrorKind::NotNormal, "subloop of order " + std::to_string(n.size()));
  std::vector<Element> block;
  std::vector<Element> reps;
  coset_blocks(loop, n, block, reps);
  return block;
}

Loop quotient_loop(const Loop& loop, const SubloopSet& n) {
  if (!is_normal_subloop(loop, n)) throw Error(ErrorKind::NotNormal, "subloop of order " + std::to_string(n.size()));
  std::vector<Element> block;
  std::vector<Element> reps;
  coset_blocks(loop, n, block, reps);
  std::vector<Element> table;
  table.reserve(reps.size() * reps.size());
  for (Element a : reps) {
    for (Element b : reps) table.push_back(block[loop.mul(a, b)]);
  }
  return Loop(reps.size(), std::move(table));
}

bool is_soluble(const Loop& loop) {
  // Subloops of soluble loops are soluble, so the derived series decides.
  Loop current = loop;
  while (current.order() > 1) {
    const SubloopSet d = derived_subloop(current);
    if (d.size() == current.order()) return false;
    current = subloop_table(current, d);
  }
  return true;
}

}  // namespace bruck
