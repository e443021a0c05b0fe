#include "bruck/search.hpp"

#include <algorithm>
#include <atomic>

#include "bruck/group_algos.hpp"

namespace bruck {

namespace {

constexpr std::int8_t kEmpty = -1;

struct Cell {
  std::uint8_t row;
  std::uint8_t col;
};

class LatinSearch {
 public:
  LatinSearch(const SearchSpec& spec, std::atomic<std::uint64_t>& nodes, std::atomic<bool>& abort)
      : spec_(spec), n_(spec.order), t_(n_ * n_, kEmpty), rowm_(n_, 0), colm_(n_, 0), nodes_(nodes), abort_(abort) {
    for (std::size_t i = 0; i < n_; ++i) {
      set(0, i, static_cast<std::int8_t>(i));
      if (i != 0) set(i, 0, static_cast<std::int8_t>(i));
    }
    if (spec.require_exponent2) {
      for (std::size_t i = 1; i < n_; ++i) set(i, i, 0);
    }
    const bool by_row = spec.fill == FillOrder::RowMajor;
    for (std::size_t a = 1; a < n_; ++a) {
      for (std::size_t b = 1; b < n_; ++b) {
        const std::size_t r = by_row ? a : b;
        const std::size_t c = by_row ? b : a;
        if (t_[r * n_ + c] == kEmpty) cells_.push_back({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(c)});
      }
    }
    // first row (or column) of free cells
    split_depth_ = 0;
    while (split_depth_ < cells_.size() && (by_row ? cells_[split_depth_].row : cells_[split_depth_].col) == 1) {
      ++split_depth_;
    }
  }

  // All partial assignments of the first `depth` cells that survive pruning.
  void prefixes(std::size_t depth, std::vector<std::vector<std::int8_t>>& out) {
    if (abort_) return;
    if (depth == split_depth_ || depth == cells_.size()) {
      std::vector<std::int8_t> values;
      for (std::size_t d = 0; d < depth; ++d) values.push_back(t_[cells_[d].row * n_ + cells_[d].col]);
      out.push_back(std::move(values));
      return;
    }
    branch(depth, [&] { prefixes(depth + 1, out); });
  }

  void load(const std::vector<std::int8_t>& values) {
    for (std::size_t d = 0; d < values.size(); ++d) set(cells_[d].row, cells_[d].col, values[d]);
  }

  void solve(std::size_t depth, std::vector<Loop>& out) {
    if (abort_) return;
    if (depth == cells_.size()) {
      leaf(out);
      return;
    }
    branch(depth, [&] { solve(depth + 1, out); });
  }

 private:
  template <typename Next>
  void branch(std::size_t depth, Next next) {
    const Cell cell = cells_[depth];
    const std::uint32_t used = rowm_[cell.row] | colm_[cell.col];
    for (std::size_t v = 0; v < n_; ++v) {
      if (used >> v & 1U) continue;
      if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > spec_.node_budget) {
        abort_ = true;
        return;
      }
      set(cell.row, cell.col, static_cast<std::int8_t>(v));
      if (consistent()) next();
      clear(cell.row, cell.col);
      if (abort_) return;
    }
  }

  std::int8_t at(std::int8_t a, std::int8_t b) const {
    return (a < 0 || b < 0) ? kEmpty : t_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }

  void set(std::size_t r, std::size_t c, std::int8_t v) {
    t_[r * n_ + c] = v;
    rowm_[r] |= 1U << v;
    colm_[c] |= 1U << v;
  }

  void clear(std::size_t r, std::size_t c) {
    const std::int8_t v = t_[r * n_ + c];
    t_[r * n_ + c] = kEmpty;
    rowm_[r] &= ~(1U << v);
    colm_[c] &= ~(1U << v);
  }

  // Rejects partial tables where a required identity already fails on
  // fully defined instances.
  bool consistent() const {
    const auto n = static_cast<std::int8_t>(n_);
    if (spec_.require_bol) {
      for (std::int8_t x = 1; x < n; ++x) {
        for (std::int8_t y = 1; y < n; ++y) {
          const std::int8_t xy = at(x, y);
          if (xy < 0) continue;
          for (std::int8_t z = 0; z < n; ++z) {  // z = 0 still constrains: (xy)y = x(yy)
            const std::int8_t lhs = at(at(xy, z), y);
            if (lhs < 0) continue;
            const std::int8_t rhs = at(x, at(at(y, z), y));
            if (rhs >= 0 && lhs != rhs) return false;
          }
        }
      }
    }
    if (spec_.require_aip) {
      std::vector<std::int8_t> inv(n_, kEmpty);
      for (std::int8_t x = 0; x < n; ++x) {
        for (std::int8_t j = 0; j < n; ++j) {
          if (at(x, j) != 0) continue;
          const std::int8_t back = at(j, x);
          if (back >= 0 && back != 0) return false;  // no two-sided inverse
          inv[static_cast<std::size_t>(x)] = j;
        }
      }
      for (std::int8_t x = 1; x < n; ++x) {
        for (std::int8_t y = 1; y < n; ++y) {
          const std::int8_t xy = at(x, y);
          if (xy < 0 || inv[static_cast<std::size_t>(xy)] < 0) continue;
          const std::int8_t rhs = at(inv[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(y)]);
          if (rhs >= 0 && rhs != inv[static_cast<std::size_t>(xy)]) return false;
        }
      }
    }
    return true;
  }

  void leaf(std::vector<Loop>& out) const {
    std::vector<Element> table(t_.begin(), t_.end());
    Loop loop(n_, std::move(table));
    if (spec_.require_bol && serial::bol_violation(loop)) return;
    if (spec_.require_aip) {
      try {
        if (!check_aip(loop)) return;
      } catch (const Error&) {
        return;
      }
    }
    out.push_back(std::move(loop));
  }

  const SearchSpec& spec_;
  std::size_t n_;
  std::vector<std::int8_t> t_;
  std::vector<std::uint32_t> rowm_;
  std::vector<std::uint32_t> colm_;
  std::vector<Cell> cells_;
  std::size_t split_depth_ = 0;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& abort_;
};

void validate(const SearchSpec& spec) {
  const bool constrained = spec.require_bol || spec.require_aip || spec.require_exponent2;
  if (spec.order == 0) throw Error(ErrorKind::InvalidArgument, "search order must be positive");
  if (spec.order > (constrained ? 8U : 6U)) {
    throw Error(ErrorKind::InvalidArgument, "search order " + std::to_string(spec.order) + " exceeds the " +
                                                (constrained ? "constrained limit 8" : "unconstrained limit 6"));
  }
}

bool table_less(const Loop& a, const Loop& b) {
  const auto ta = a.table();
  const auto tb = b.table();
  return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
}

SearchResult finish(std::vector<Loop> loops, std::uint64_t nodes, bool aborted, const SearchSpec& spec) {
  if (aborted) {
    throw Error(ErrorKind::NodeBudgetExceeded, "search exceeded " + std::to_string(spec.node_budget) + " nodes");
  }
  std::sort(loops.begin(), loops.end(), table_less);
  SearchResult result;
  result.nodes = nodes;
  if (!spec.up_to_isomorphism) {
    result.loops = std::move(loops);
    return result;
  }
  for (Loop& l : loops) {
    const bool seen = std::any_of(result.loops.begin(), result.loops.end(),
                                  [&](const Loop& r) { return find_isomorphism(l, r).has_value(); });
    if (!seen) result.loops.push_back(std::move(l));
  }
  return result;
}

}  // namespace

SearchResult enumerate_loops(const SearchSpec& spec) {
  validate(spec);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::vector<std::vector<std::int8_t>> starts;
  LatinSearch(spec, nodes, abort).prefixes(0, starts);

  std::vector<std::vector<Loop>> found(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < starts.size(); ++s) {
    LatinSearch search(spec, nodes, abort);
    search.load(starts[s]);
    search.solve(starts[s].size(), found[s]);
  }
  std::vector<Loop> all;
  for (auto& part : found) {
    for (Loop& l : part) all.push_back(std::move(l));
  }
  return finish(std::move(all), nodes.load(), abort.load(), spec);
}

namespace serial {

SearchResult enumerate_loops(const SearchSpec& spec) {
  validate(spec);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::vector<Loop> all;
  LatinSearch(spec, nodes, abort).solve(0, all);
  return finish(std::move(all), nodes.load(), abort.load(), spec);
}

}  // namespace serial

nlohmann::json bol_from_search_report(const SearchSpec& spec, const SearchResult& result) {
  nlohmann::json loops = nlohmann::json::array();
  std::size_t associative = 0;
  for (const Loop& l : result.loops) {
    nlohmann::json rows = nlohmann::json::array();
    for (Element i = 0; i < l.order(); ++i) {
      const auto row = l.row(i);
      rows.push_back(std::vector<Element>(row.begin(), row.end()));
    }
    const bool assoc = is_associative(l);
    associative += assoc ? 1 : 0;
    bool aip = false;
    try {
      aip = check_aip(l);
    } catch (const Error&) {
    }
    loops.push_back({{"table", rows},
                     {"associative", assoc},
                     {"bol", check_bol(l)},
                     {"aip", aip},
                     {"commutative", is_commutative(l)}});
  }
  return {{"schema", 1},
          {"spec",
           {{"order", spec.order},
            {"bol", spec.require_bol},
            {"aip", spec.require_aip},
            {"exp2", spec.require_exponent2},
            {"iso", spec.up_to_isomorphism},
            {"budget", spec.node_budget}}},
          {"nodes", result.nodes},
          {"count", result.loops.size()},
          {"associative_count", associative},
          {"nonassociative_count", result.loops.size() - associative},
          {"loops", loops}};
}

// ---------------------------------------------------------------------------

Loop group_loop(const PermGroup& g, const Bounds& bounds) {
  const std::vector<Perm> elements = enumerate_elements(g, bounds);
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(g.rank(elements[i] * elements[j]));
  }
  return Loop(n, std::move(table));
}

Loop glauberman_loop(const PermGroup& g, const Bounds& bounds) {
  if (g.order() % 2 == 0) throw Error(ErrorKind::EvenOrder, "group order " + std::to_string(g.order()) + " is even");
  const std::vector<Perm> elements = enumerate_elements(g, bounds);
  const std::size_t n = elements.size();
  std::vector<Element> root(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t o = elements[r].order();
    root[r] = static_cast<Element>(g.rank(elements[r].pow(static_cast<std::int64_t>((o + 1) / 2))));
  }
  std::vector<Element> table(n * n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Perm& x = elements[i];
      const Perm& y = elements[j];
      table[i * n + j] = root[g.rank(y * x * x * y)];
    }
  }
  return Loop(n, std::move(table));
}

// ---------------------------------------------------------------------------

std::vector<EnvelopeHit> envelope_search(const PermGroup& g, const PermGroup& h, const Bounds& bounds) {
  if (!is_subgroup(g, h)) throw Error(ErrorKind::NotContained, "envelope search: H is not a subgroup of G");
  const std::vector<ConjugacyClass> classes = conjugacy_classes(g, bounds);
  std::vector<std::size_t> involutions;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].element_order == 2) involutions.push_back(c);
  }
  const std::uint64_t index = g.order() / h.order();
  std::vector<EnvelopeHit> hits;
  std::vector<std::size_t> chosen;

  auto try_union = [&] {
    std::vector<std::uint64_t> ranks{0};
    for (std::size_t c : chosen) ranks.insert(ranks.end(), classes[c].members.begin(), classes[c].members.end());
    std::sort(ranks.begin() + 1, ranks.end());
    LoopFolder f{g, h, {}};
    for (std::uint64_t r : ranks) f.k.push_back(g.element(r));
    if (transversal_violation(f, bounds) || !is_envelope(f)) return;
    EnvelopeHit hit{f, loop_from_folder(f, bounds), chosen};
    hit.bol = check_bol(hit.loop);
    try {
      hit.aip = check_aip(hit.loop);
    } catch (const Error&) {
      hit.aip = false;
    }
    hit.exponent2 = true;
    for (Element x = 0; x < hit.loop.order(); ++x) hit.exponent2 = hit.exponent2 && hit.loop.mul(x, x) == 0;
    hits.push_back(std::move(hit));
  };

  // subsets of involution classes with total size index - 1
  auto walk = [&](auto&& self, std::size_t from, std::uint64_t size) -> void {
    if (size == index - 1) {
      try_union();
      return;
    }
    for (std::size_t i = from; i < involutions.size(); ++i) {
      const std::uint64_t s = classes[involutions[i]].size;
      if (size + s > index - 1) continue;
      chosen.push_back(involutions[i]);
      self(self, i + 1, size + s);
      chosen.pop_back();
    }
  };
  walk(walk, 0, 0);
  return hits;
}

}  // namespace bruck
