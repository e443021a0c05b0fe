#include "bruck/group_algos.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bruck {

namespace {

void check_enumerable(const PermGroup& g, const Bounds& bounds) {
  const std::uint64_t n = g.order();
  if (n > bounds.enumeration_bound) {
    throw Error(ErrorKind::EnumerationBoundExceeded,
                "group of order " + std::to_string(n) + " exceeds the enumeration bound " +
                    std::to_string(bounds.enumeration_bound));
  }
}

bool commutes(const Perm& a, const Perm& b) {
  for (std::size_t x = 0; x < a.degree(); ++x) {
    if (b[a[x]] != a[b[x]]) return false;
  }
  return true;
}

bool normalizes(const PermGroup& p, const Perm& x) {
  return std::all_of(p.strong_generators().begin(), p.strong_generators().end(),
                     [&](const Perm& s) { return p.contains(s.conjugate_by(x)); });
}

PermGroup with_extra(const PermGroup& g, const Perm& x) {
  std::vector<Perm> gens = g.generators();
  gens.push_back(x);
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace

// ---------------------------------------------------------------------------
// element enumeration

namespace serial {

std::vector<Perm> enumerate_elements(const PermGroup& g, const Bounds& bounds) {
  check_enumerable(g, bounds);
  const std::uint64_t n = g.order();
  std::vector<Perm> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(g.element(r));
  return out;
}

std::vector<std::uint64_t> element_orders(std::span<const Perm> elements) {
  std::vector<std::uint64_t> out;
  out.reserve(elements.size());
  for (const Perm& e : elements) out.push_back(e.order());
  return out;
}

std::vector<std::uint64_t> conjugation_table(const PermGroup& g, std::span<const Perm> elements,
                                             std::span<const Perm> gens) {
  std::vector<std::uint64_t> table;
  table.reserve(elements.size() * gens.size());
  for (const Perm& e : elements) {
    for (const Perm& s : gens) table.push_back(g.rank(e.conjugate_by(s)));
  }
  return table;
}

}  // namespace serial

std::vector<Perm> enumerate_elements(const PermGroup& g, const Bounds& bounds) {
  check_enumerable(g, bounds);
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<Perm> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = g.element(static_cast<std::uint64_t>(r));
  return out;
}

std::vector<std::uint64_t> element_orders(std::span<const Perm> elements) {
  const auto n = static_cast<std::int64_t>(elements.size());
  std::vector<std::uint64_t> out(elements.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = elements[static_cast<std::size_t>(r)].order();
  return out;
}

std::vector<std::uint64_t> conjugation_table(const PermGroup& g, std::span<const Perm> elements,
                                             std::span<const Perm> gens) {
  const auto n = static_cast<std::int64_t>(elements.size());
  const std::size_t m = gens.size();
  std::vector<std::uint64_t> table(elements.size() * m);
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    for (std::size_t j = 0; j < m; ++j) table[ru * m + j] = g.rank(elements[ru].conjugate_by(gens[j]));
  }
  return table;
}

// ---------------------------------------------------------------------------
// subgroups

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& x) { return g.contains(x); });
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  if (!is_subgroup(g, n)) return false;
  for (const Perm& x : g.generators()) {
    if (!normalizes(n, x)) return false;
  }
  return true;
}

PermGroup generated_by(std::size_t degree, std::span<const Perm> elements) {
  std::vector<Perm> gens;
  PermGroup group(degree, {});
  for (const Perm& x : elements) {
    if (group.contains(x)) continue;
    gens.push_back(x);
    group = PermGroup(degree, gens);
  }
  return group;
}

std::vector<Perm> reduced_generators(const PermGroup& g) {
  return generated_by(g.degree(), g.generators()).generators();
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "join");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generated_by(a.degree(), gens);
}

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> s) {
  for (const Perm& x : s) {
    if (!g.contains(x)) throw Error(ErrorKind::NotContained, "normal_closure seed " + x.cycles());
  }
  PermGroup n = generated_by(g.degree(), s);
  const std::vector<Perm> conj = reduced_generators(g);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Perm> current = n.generators();
    for (const Perm& x : conj) {
      for (const Perm& y : current) {
        Perm c = y.conjugate_by(x);
        if (!n.contains(c)) {
          n = with_extra(n, c);
          changed = true;
        }
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  const std::vector<Perm> gens = reduced_generators(g);
  std::vector<Perm> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, commutators);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, const Bounds& bounds) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "intersection");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  const std::vector<Perm> elements = enumerate_elements(small, bounds);
  std::vector<Perm> common;
  for (const Perm& x : elements) {
    if (large.contains(x)) common.push_back(x);
  }
  return generated_by(a.degree(), common);
}

PermGroup centralizer(const PermGroup& g, std::span<const Perm> s, const Bounds& bounds) {
  const std::vector<Perm> elements = enumerate_elements(g, bounds);
  std::vector<char> keep(elements.size(), 0);
  const auto n = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) {
    const Perm& x = elements[static_cast<std::size_t>(r)];
    keep[static_cast<std::size_t>(r)] =
        std::all_of(s.begin(), s.end(), [&](const Perm& y) { return commutes(x, y); }) ? 1 : 0;
  }
  std::vector<Perm> found;
  for (std::size_t r = 0; r < elements.size(); ++r) {
    if (keep[r]) found.push_back(elements[r]);
  }
  return generated_by(g.degree(), found);
}

PermGroup center(const PermGroup& g, const Bounds& bounds) {
  const std::vector<Perm> gens = reduced_generators(g);
  return centralizer(g, gens, bounds);
}

PermGroup core(const PermGroup& g, const PermGroup& h, const Bounds& bounds) {
  if (!is_subgroup(g, h)) throw Error(ErrorKind::NotContained, "core: H is not a subgroup of G");
  if (h.is_trivial()) return PermGroup::trivial(g.degree());
  const CosetTable cosets(g, h, bounds);
  std::vector<Perm> image_gens;
  for (const Perm& x : g.generators()) image_gens.push_back(cosets.action(x));
  const PermGroup image(cosets.count(), std::move(image_gens));
  if (image.order() == g.order()) return PermGroup::trivial(g.degree());
  std::vector<Perm> kernel;
  for (const Perm& x : enumerate_elements(h, bounds)) {
    if (cosets.action(x).is_identity()) kernel.push_back(x);
  }
  return generated_by(g.degree(), kernel);
}

// ---------------------------------------------------------------------------
// conjugacy classes

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const Bounds& bounds) {
  const std::vector<Perm> elements = enumerate_elements(g, bounds);
  const std::vector<std::uint64_t> orders = element_orders(elements);
  const std::vector<Perm> gens = reduced_generators(g);
  const std::vector<std::uint64_t> table = conjugation_table(g, elements, gens);
  const std::size_t m = gens.size();

  std::vector<char> seen(elements.size(), 0);
  std::vector<ConjugacyClass> classes;
  for (std::size_t r = 0; r < elements.size(); ++r) {
    if (seen[r]) continue;
    ConjugacyClass cls;
    cls.representative = elements[r];
    cls.element_order = orders[r];
    seen[r] = 1;
    cls.members.push_back(r);
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      const std::size_t cur = cls.members[head];
      for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t next = table[cur * m + j];
        if (!seen[next]) {
          seen[next] = 1;
          cls.members.push_back(next);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.size = cls.members.size();
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---------------------------------------------------------------------------
// characteristic subgroups

namespace {

template <typename Pred>
std::vector<Perm> class_reps_where(const std::vector<ConjugacyClass>& classes, Pred pred) {
  std::vector<Perm> reps;
  for (const ConjugacyClass& c : classes) {
    if (c.element_order > 1 && pred(c.element_order)) reps.push_back(c.representative);
  }
  return reps;
}

}  // namespace

PermGroup o2(const PermGroup& g, const Bounds& bounds) {
  const auto classes = conjugacy_classes(g, bounds);
  std::vector<Perm> keep;
  for (const Perm& rep : class_reps_where(classes, is_power_of_two)) {
    const Perm one[] = {rep};
    if (is_power_of_two(normal_closure(g, one).order())) keep.push_back(rep);
  }
  return normal_closure(g, keep);
}

PermGroup odd_core(const PermGroup& g, const Bounds& bounds) {
  const auto classes = conjugacy_classes(g, bounds);
  std::vector<Perm> keep;
  for (const Perm& rep : class_reps_where(classes, [](std::uint64_t o) { return o % 2 == 1; })) {
    const Perm one[] = {rep};
    if (normal_closure(g, one).order() % 2 == 1) keep.push_back(rep);
  }
  return normal_closure(g, keep);
}

PermGroup o2prime(const PermGroup& g, const Bounds& bounds) {
  const auto classes = conjugacy_classes(g, bounds);
  return normal_closure(g, class_reps_where(classes, is_power_of_two));
}

PermGroup o2residual(const PermGroup& g, const Bounds& bounds) {
  const auto classes = conjugacy_classes(g, bounds);
  return normal_closure(g, class_reps_where(classes, [](std::uint64_t o) { return o % 2 == 1; }));
}

// ---------------------------------------------------------------------------
// Sylow subgroups

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "p_part needs p >= 2");
  std::uint64_t out = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return n != 0 && p_part(n, p) == n; }

PermGroup sylow_containing(const PermGroup& g, const PermGroup& start, std::uint64_t p, const Bounds& bounds) {
  if (!is_subgroup(g, start)) throw Error(ErrorKind::NotContained, "sylow_containing: start is not a subgroup");
  if (!is_p_power(start.order(), p)) {
    throw Error(ErrorKind::InvalidArgument, "sylow_containing: start is not a p-group");
  }
  const std::uint64_t target = p_part(g.order(), p);
  PermGroup current = start;
  if (current.order() == target) return current;
  const std::vector<Perm> elements = enumerate_elements(g, bounds);
  const std::vector<std::uint64_t> orders = element_orders(elements);
  while (current.order() < target) {
    bool grown = false;
    for (std::size_t r = 1; r < elements.size() && !grown; ++r) {
      if (!is_p_power(orders[r], p) || current.contains(elements[r])) continue;
      if (!normalizes(current, elements[r])) continue;
      current = with_extra(current, elements[r]);
      grown = true;
    }
    if (!grown) throw Error(ErrorKind::InvalidArgument, "normalizer ascent stalled below the Sylow order");
  }
  return current;
}

PermGroup sylow(const PermGroup& g, std::uint64_t p, const Bounds& bounds) {
  return sylow_containing(g, PermGroup::trivial(g.degree()), p, bounds);
}

// ---------------------------------------------------------------------------
// cosets

CosetTable::CosetTable(const PermGroup& g, const PermGroup& h, const Bounds& bounds) : g_(g) {
  if (!is_subgroup(g, h)) throw Error(ErrorKind::NotContained, "coset table: H is not a subgroup of G");
  const std::uint64_t index = g.order() / h.order();
  const std::size_t degree = g.degree();

  // Point-stabilizer recognition: H fixes p and |p^G| = |G:H| forces H = G_p.
  for (std::size_t p = 0; p < degree && index <= degree; ++p) {
    const bool fixed = std::all_of(h.generators().begin(), h.generators().end(),
                                   [&](const Perm& x) { return x[p] == p; });
    if (!fixed) continue;
    std::vector<std::int32_t> slot(degree, -1);
    std::vector<Point> orbit{static_cast<Point>(p)};
    std::vector<Perm> reps{Perm(degree)};
    slot[p] = 0;
    for (std::size_t head = 0; head < orbit.size() && orbit.size() <= index; ++head) {
      for (const Perm& x : g.generators()) {
        const Point img = x[orbit[head]];
        if (slot[img] >= 0) continue;
        slot[img] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(img);
        reps.push_back(reps[head] * x);
      }
    }
    if (orbit.size() != index) continue;
    point_mode_ = true;
    anchor_ = static_cast<Point>(p);
    point_slot_ = std::move(slot);
    reps_ = std::move(reps);
    return;
  }

  const std::vector<Perm> elements = enumerate_elements(g, bounds);
  const std::vector<Perm> sub = enumerate_elements(h, bounds);
  constexpr std::uint32_t kUnset = UINT32_MAX;
  by_rank_.assign(elements.size(), kUnset);
  for (std::size_t r = 0; r < elements.size(); ++r) {
    if (by_rank_[r] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(elements[r]);
    for (const Perm& y : sub) by_rank_[g.rank(y * elements[r])] = c;
  }
}

std::size_t CosetTable::coset_of(const Perm& x) const {
  if (point_mode_) {
    const std::int32_t s = point_slot_[x[anchor_]];
    if (s < 0) throw Error(ErrorKind::NotContained, "coset_of: element outside G");
    return static_cast<std::size_t>(s);
  }
  return by_rank_[g_.rank(x)];
}

Perm CosetTable::action(const Perm& x) const {
  std::vector<Point> images(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) images[c] = static_cast<Point>(coset_of(reps_[c] * x));
  return Perm(std::move(images));
}

Quotient quotient(const PermGroup& g, const PermGroup& n, const Bounds& bounds) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  CosetTable cosets(g, n, bounds);
  std::vector<Perm> gens;
  for (const Perm& x : reduced_generators(g)) gens.push_back(cosets.action(x));
  PermGroup image(cosets.count(), std::move(gens));
  return Quotient{std::move(cosets), std::move(image)};
}

}  // namespace bruck
