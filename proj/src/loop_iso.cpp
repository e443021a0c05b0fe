#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "bruck/loop.hpp"

namespace bruck {

namespace {

using Invariant = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;

// Steps until x^k returns to 1 under the given bracketing, or 0 if it never does.
template <typename Step>
std::uint32_t power_period(const Loop& loop, Element x, Step step) {
  Element p = x;
  for (std::uint32_t k = 1; k <= loop.order(); ++k) {
    if (p == 0) return k;
    p = step(p);
  }
  return 0;
}

std::vector<Invariant> element_invariants(const Loop& loop) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<Invariant> out(n);
  for (Element x = 0; x < n; ++x) {
    const std::uint32_t right = power_period(loop, x, [&](Element p) { return loop.mul(p, x); });
    const std::uint32_t left = power_period(loop, x, [&](Element p) { return loop.mul(x, p); });
    const Element seed[] = {x};
    const auto closure = static_cast<std::uint32_t>(subloop_closure(loop, seed).size());
    std::uint32_t commuting = 0;
    std::uint32_t idempotent_sq = 0;
    for (Element y = 0; y < n; ++y) {
      if (loop.mul(x, y) == loop.mul(y, x)) ++commuting;
      if (loop.mul(loop.mul(x, y), y) == x) ++idempotent_sq;
    }
    out[x] = {right, left, closure, commuting, idempotent_sq};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Loop& a, const Loop& b, std::vector<Invariant> inv_a, std::vector<Invariant> inv_b)
      : a_(a), b_(b), inv_a_(std::move(inv_a)), inv_b_(std::move(inv_b)),
        f_(a.order(), kUnset), finv_(b.order(), kUnset) {}

  std::optional<std::vector<Element>> run() {
    choose_generators();
    if (!assign(0, 0) || !propagate(0)) return std::nullopt;
    if (!solve(0)) return std::nullopt;
    return f_;
  }

 private:
  static constexpr Element kUnset = UINT32_MAX;

  void choose_generators() {
    std::map<Invariant, std::size_t> frequency;
    for (const Invariant& v : inv_a_) ++frequency[v];
    std::vector<Element> order(a_.order());
    for (Element x = 0; x < order.size(); ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(),
                     [&](Element x, Element y) { return frequency[inv_a_[x]] < frequency[inv_a_[y]]; });
    std::vector<Element> chosen;
    SubloopSet span{0};
    for (Element x : order) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      chosen.push_back(x);
      span = subloop_closure(a_, chosen);
      if (span.size() == a_.order()) break;
    }
    gens_ = std::move(chosen);
  }

  bool assign(Element x, Element y) {
    if (f_[x] != kUnset) return f_[x] == y;
    if (finv_[y] != kUnset) return false;
    if (inv_a_[x] != inv_b_[y]) return false;
    f_[x] = y;
    finv_[y] = x;
    defined_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t q = from; q < defined_.size(); ++q) {
      const Element e = defined_[q];
      for (std::size_t j = 0; j <= q; ++j) {
        const Element d = defined_[j];
        if (!assign(a_.mul(e, d), b_.mul(f_[e], f_[d]))) return false;
        if (!assign(a_.mul(d, e), b_.mul(f_[d], f_[e]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t size) {
    while (defined_.size() > size) {
      const Element x = defined_.back();
      defined_.pop_back();
      finv_[f_[x]] = kUnset;
      f_[x] = kUnset;
    }
  }

  bool solve(std::size_t i) {
    if (i == gens_.size()) return defined_.size() == a_.order();
    const Element g = gens_[i];
    if (f_[g] != kUnset) return solve(i + 1);
    for (Element y = 0; y < b_.order(); ++y) {
      if (finv_[y] != kUnset || inv_a_[g] != inv_b_[y]) continue;
      const std::size_t saved = defined_.size();
      if (assign(g, y) && propagate(saved) && solve(i + 1)) return true;
      undo(saved);
    }
    return false;
  }

  const Loop& a_;
  const Loop& b_;
  std::vector<Invariant> inv_a_;
  std::vector<Invariant> inv_b_;
  std::vector<Element> f_;
  std::vector<Element> finv_;
  std::vector<Element> defined_;
  std::vector<Element> gens_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const Loop& a, const Loop& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<Invariant> inv_a = element_invariants(a);
  std::vector<Invariant> inv_b = element_invariants(b);
  std::vector<Invariant> sa = inv_a;
  std::vector<Invariant> sb = inv_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  return IsoSearch(a, b, std::move(inv_a), std::move(inv_b)).run();
}

bool loops_isomorphic(const Loop& a, const Loop& b, const Bounds& bounds) {
  if (a.order() > bounds.order_bound || b.order() > bounds.order_bound) {
    throw Error(ErrorKind::OrderBoundExceeded, "isomorphism test beyond order " + std::to_string(bounds.order_bound));
  }
  if (a.order() != b.order()) return false;
  if (a.order() <= 16 && enumerate_subloops(a, bounds).size() != enumerate_subloops(b, bounds).size()) return false;
  return find_isomorphism(a, b).has_value();
}

}  // namespace bruck
