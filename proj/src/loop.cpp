#include "bruck/loop.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bruck {

Loop::Loop(std::size_t n, std::vector<Element> table) : n_(n), table_(std::move(table)) {
  if (n_ == 0) throw Error(ErrorKind::InvalidLoop, "order must be positive");
  if (table_.size() != n_ * n_) {
    throw Error(ErrorKind::InvalidLoop, "table has " + std::to_string(table_.size()) + " entries, expected " +
                                            std::to_string(n_ * n_));
  }
  ldiv_.assign(n_ * n_, static_cast<Element>(n_));
  rdiv_.assign(n_ * n_, static_cast<Element>(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const Element c = table_[a * n_ + b];
      if (c >= n_) {
        throw Error(ErrorKind::InvalidLoop, "row " + std::to_string(a) + ", column " + std::to_string(b) +
                                                ": entry " + std::to_string(c) + " out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const Element c = table_[a * n_ + b];
      if (ldiv_[a * n_ + c] != n_) {
        throw Error(ErrorKind::InvalidLoop,
                    "row " + std::to_string(a) + " repeats entry " + std::to_string(c) + " (not a Latin square)");
      }
      ldiv_[a * n_ + c] = static_cast<Element>(b);
    }
  }
  for (std::size_t b = 0; b < n_; ++b) {
    for (std::size_t a = 0; a < n_; ++a) {
      const Element c = table_[a * n_ + b];
      if (rdiv_[b * n_ + c] != n_) {
        throw Error(ErrorKind::InvalidLoop, "column " + std::to_string(b) + " repeats entry " +
                                                std::to_string(c) + " (not a Latin square)");
      }
      rdiv_[b * n_ + c] = static_cast<Element>(a);
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    if (table_[x] != x) {
      throw Error(ErrorKind::InvalidLoop, "row 0 is not the identity permutation at column " + std::to_string(x));
    }
    if (table_[x * n_] != x) {
      throw Error(ErrorKind::InvalidLoop, "column 0 is not the identity permutation at row " + std::to_string(x));
    }
  }
}

Loop Loop::from_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::InvalidLoop, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                              " entries, expected " + std::to_string(rows.size()));
    }
    table.insert(table.end(), rows[i].begin(), rows[i].end());
  }
  return Loop(rows.size(), std::move(table));
}

// ---------------------------------------------------------------------------
// identities

namespace {

std::optional<Triple> bol_violation_at(const Loop& l, Element x) {
  const auto n = static_cast<Element>(l.order());
  for (Element y = 0; y < n; ++y) {
    const Element xy = l.mul(x, y);
    for (Element z = 0; z < n; ++z) {
      const Element lhs = l.mul(l.mul(xy, z), y);
      const Element rhs = l.mul(x, l.mul(l.mul(y, z), y));
      if (lhs != rhs) return Triple{x, y, z};
    }
  }
  return std::nullopt;
}

std::optional<Triple> assoc_violation_at(const Loop& l, Element x) {
  const auto n = static_cast<Element>(l.order());
  for (Element y = 0; y < n; ++y) {
    const Element xy = l.mul(x, y);
    for (Element z = 0; z < n; ++z) {
      if (l.mul(xy, z) != l.mul(x, l.mul(y, z))) return Triple{x, y, z};
    }
  }
  return std::nullopt;
}

// Runs `probe` for every x and keeps the witness with the least x, so the
// result does not depend on scheduling.
template <typename Probe>
std::optional<Triple> first_violation_parallel(const Loop& l, Probe probe) {
  const auto n = static_cast<std::int64_t>(l.order());
  std::int64_t best = n;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t x = 0; x < n; ++x) {
    if (probe(l, static_cast<Element>(x))) best = std::min(best, x);
  }
  if (best == n) return std::nullopt;
  return probe(l, static_cast<Element>(best));
}

}  // namespace

namespace serial {

std::optional<Triple> bol_violation(const Loop& loop) {
  for (Element x = 0; x < loop.order(); ++x) {
    if (auto w = bol_violation_at(loop, x)) return w;
  }
  return std::nullopt;
}

std::optional<Triple> associativity_violation(const Loop& loop) {
  for (Element x = 0; x < loop.order(); ++x) {
    if (auto w = assoc_violation_at(loop, x)) return w;
  }
  return std::nullopt;
}

}  // namespace serial

std::optional<Triple> bol_violation(const Loop& loop) { return first_violation_parallel(loop, bol_violation_at); }

bool check_bol(const Loop& loop) { return !bol_violation(loop).has_value(); }

std::optional<Triple> associativity_violation(const Loop& loop) {
  return first_violation_parallel(loop, assoc_violation_at);
}

bool is_associative(const Loop& loop) { return !associativity_violation(loop).has_value(); }

bool is_commutative(const Loop& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
    }
  }
  return true;
}

std::optional<Element> two_sided_inverse(const Loop& loop, Element x) {
  const Element r = loop.left_div(x, 0);   // x r = 1
  const Element l = loop.right_div(0, x);  // l x = 1
  if (r != l) return std::nullopt;
  return r;
}

bool check_aip(const Loop& loop) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    auto i = two_sided_inverse(loop, x);
    if (!i) throw Error(ErrorKind::NoTwoSidedInverse, "element " + std::to_string(x));
    inv[x] = *i;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (inv[loop.mul(x, y)] != loop.mul(inv[x], inv[y])) return false;
    }
  }
  return true;
}

bool check_bruck(const Loop& loop) {
  if (!check_bol(loop)) return false;
  // Bol loops have two-sided inverses, so check_aip cannot throw here.
  return check_aip(loop);
}

Element right_power(const Loop& loop, Element x, std::uint64_t m) {
  Element p = 0;
  for (std::uint64_t i = 0; i < m; ++i) p = loop.mul(p, x);
  return p;
}

Element left_power(const Loop& loop, Element x, std::uint64_t m) {
  Element p = 0;
  for (std::uint64_t i = 0; i < m; ++i) p = loop.mul(x, p);
  return p;
}

namespace {

void require_bol(const Loop& loop) {
  if (auto w = bol_violation(loop)) {
    throw Error(ErrorKind::NotBol, "powers are not defined; Bol identity fails at (" + std::to_string((*w)[0]) +
                                       ", " + std::to_string((*w)[1]) + ", " + std::to_string((*w)[2]) + ")");
  }
}

std::uint64_t order_unchecked(const Loop& loop, Element x) {
  std::uint64_t m = 1;
  for (Element p = x; p != 0; p = loop.mul(p, x)) ++m;
  return m;
}

}  // namespace

std::uint64_t element_order(const Loop& loop, Element x) {
  require_bol(loop);
  return order_unchecked(loop, x);
}

std::vector<std::uint64_t> element_orders(const Loop& loop) {
  require_bol(loop);
  std::vector<std::uint64_t> out(loop.order());
  for (Element x = 0; x < loop.order(); ++x) out[x] = order_unchecked(loop, x);
  return out;
}

std::uint64_t exponent(const Loop& loop) {
  std::uint64_t e = 1;
  for (std::uint64_t o : element_orders(loop)) e = std::lcm(e, o);
  return e;
}

bool check_exponent_power_of_2(const Loop& loop) {
  const std::uint64_t e = exponent(loop);
  return (e & (e - 1)) == 0;
}

// ---------------------------------------------------------------------------
// subloops

namespace {

// Extends the closed set held in (members, in_set) by `extra` until closed.
void close_up(const Loop& loop, std::vector<Element>& members, std::vector<char>& in_set, std::size_t closed_prefix) {
  for (std::size_t i = closed_prefix; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Element a = members[i];
      const Element b = members[j];
      for (Element c : {loop.mul(a, b), loop.mul(b, a)}) {
        if (!in_set[c]) {
          in_set[c] = 1;
          members.push_back(c);
        }
      }
    }
  }
}

}  // namespace

SubloopSet subloop_closure(const Loop& loop, std::span<const Element> seed) {
  std::vector<char> in_set(loop.order(), 0);
  std::vector<Element> members{0};
  in_set[0] = 1;
  for (Element s : seed) {
    if (s >= loop.order()) throw Error(ErrorKind::InvalidArgument, "seed element out of range");
    if (!in_set[s]) {
      in_set[s] = 1;
      members.push_back(s);
    }
  }
  close_up(loop, members, in_set, 0);
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subloop(const Loop& loop, const SubloopSet& s) {
  if (s.empty() || !std::binary_search(s.begin(), s.end(), Element{0})) return false;
  std::vector<char> in_set(loop.order(), 0);
  for (Element x : s) in_set[x] = 1;
  for (Element a : s) {
    for (Element b : s) {
      if (!in_set[loop.mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<SubloopSet> enumerate_subloops(const Loop& loop, const Bounds& bounds) {
  const std::size_t n = loop.order();
  if (n > bounds.order_bound) {
    throw Error(ErrorKind::OrderBoundExceeded,
                "order " + std::to_string(n) + " exceeds the bound " + std::to_string(bounds.order_bound));
  }
  std::set<SubloopSet> found;
  std::vector<SubloopSet> frontier{SubloopSet{0}};
  found.insert(frontier.front());
  // Every subloop arises from {0} by a chain of single-element extensions.
  while (!frontier.empty()) {
    std::vector<SubloopSet> produced;
    for (const SubloopSet& s : frontier) {
      std::vector<char> base(n, 0);
      for (Element x : s) base[x] = 1;
      const auto count = static_cast<std::int64_t>(n);
      std::vector<SubloopSet> extensions(n);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t xi = 0; xi < count; ++xi) {
        const auto x = static_cast<Element>(xi);
        if (base[x]) continue;
        std::vector<char> in_set = base;
        std::vector<Element> members = s;
        const std::size_t closed = members.size();
        in_set[x] = 1;
        members.push_back(x);
        close_up(loop, members, in_set, closed);
        std::sort(members.begin(), members.end());
        extensions[x] = std::move(members);
      }
      for (SubloopSet& t : extensions) {
        if (t.empty()) continue;
        if (found.insert(t).second) produced.push_back(std::move(t));
      }
    }
    frontier = std::move(produced);
  }
  std::vector<SubloopSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const SubloopSet& a, const SubloopSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Loop subloop_table(const Loop& loop, const SubloopSet& s) {
  if (!is_subloop(loop, s)) throw Error(ErrorKind::InvalidArgument, "element set is not a subloop");
  std::vector<Element> index(loop.order(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<Element>(i);
  std::vector<Element> table;
  table.reserve(s.size() * s.size());
  for (Element a : s) {
    for (Element b : s) table.push_back(index[loop.mul(a, b)]);
  }
  return Loop(s.size(), std::move(table));
}

// ---------------------------------------------------------------------------
// constructions

bool is_homomorphism(const LoopHom& hom) {
  const Loop& a = *hom.source;
  const Loop& b = *hom.target;
  if (hom.map.size() != a.order() || hom.map[0] != 0) return false;
  for (Element x : hom.map) {
    if (x >= b.order()) return false;
  }
  for (Element x = 0; x < a.order(); ++x) {
    for (Element y = 0; y < a.order(); ++y) {
      if (hom.map[a.mul(x, y)] != b.mul(hom.map[x], hom.map[y])) return false;
    }
  }
  return true;
}

Loop direct_product(const Loop& a, const Loop& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element u = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element v = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(u * nb + v);
    }
  }
  return Loop(n, std::move(table));
}

}  // namespace bruck
