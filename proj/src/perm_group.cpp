#include "bruck/perm_group.hpp"

#include <algorithm>
#include <string>

namespace bruck {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_) {
    if (g.degree() != degree_) {
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                 " in a group of degree " + std::to_string(degree_));
    }
  }
  for (Point b : base_prefix) {
    if (b >= degree_) throw Error(ErrorKind::InvalidArgument, "base point out of range");
  }
  build(std::move(base_prefix));
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const Level& l : levels_) out.push_back(l.base);
  return out;
}

void PermGroup::rebuild_orbit(Level& level) {
  level.orbit.assign(1, level.base);
  level.slot.assign(degree_, -1);
  level.slot[level.base] = 0;
  level.reps.assign(1, Perm(degree_));
  level.inv_reps.assign(1, Perm(degree_));
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point beta = level.orbit[head];
    for (std::size_t gi : level.gens) {
      const Perm& s = strong_[gi];
      const Point img = s[beta];
      if (level.slot[img] >= 0) continue;
      level.slot[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      Perm rep = level.reps[head] * s;
      level.inv_reps.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm h, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t j = level.slot[h[level.base]];
    if (j < 0) return {std::move(h), l};
    h = h * level.inv_reps[static_cast<std::size_t>(j)];
  }
  return {std::move(h), levels_.size()};
}

void PermGroup::build(std::vector<Point> base_prefix) {
  for (const Perm& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);
  }
  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  for (const Perm& s : strong_) {
    const bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
    if (fixes_base) base.push_back(static_cast<Point>(s.first_moved()));
  }
  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base = base[i];
    for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
      const Perm& s = strong_[gi];
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = s[base[j]] == base[j];
      if (fixes) levels_[i].gens.push_back(gi);
    }
    rebuild_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t j = 0; j < levels_[li].orbit.size() && !extended; ++j) {
      for (std::size_t g = 0; g < levels_[li].gens.size() && !extended; ++g) {
        const Level& level = levels_[li];
        const Perm& s = strong_[level.gens[g]];
        const Point img = s[level.orbit[j]];
        Perm h = level.reps[j] * s * level.inv_reps[static_cast<std::size_t>(level.slot[img])];
        if (h.is_identity()) continue;
        auto [y, stop] = strip(std::move(h), li + 1);
        if (stop == levels_.size() && y.is_identity()) continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base = static_cast<Point>(y.first_moved());
          levels_.push_back(std::move(fresh));
        }
        const std::size_t idx = strong_.size();
        strong_.push_back(std::move(y));
        for (std::size_t m = li + 1; m <= stop; ++m) {
          levels_[m].gens.push_back(idx);
          rebuild_orbit(levels_[m]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& l : levels_) {
    const std::uint64_t len = l.orbit.size();
    if (n > UINT64_MAX / len) throw Error(ErrorKind::InvalidArgument, "group order overflows 64 bits");
    n *= len;
  }
  return n;
}

Perm PermGroup::sift(const Perm& p) const {
  if (p.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "sift");
  return strip(p, 0).first;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = strip(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::uint64_t PermGroup::rank(const Perm& p) const {
  if (p.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "rank");
  std::uint64_t r = 0;
  std::uint64_t stride = 1;
  Perm h = p;
  for (const Level& level : levels_) {
    const std::int32_t j = level.slot[h[level.base]];
    if (j < 0) throw Error(ErrorKind::NotContained, "element " + p.cycles() + " is not in the group");
    r += static_cast<std::uint64_t>(j) * stride;
    stride *= level.orbit.size();
    h = h * level.inv_reps[static_cast<std::size_t>(j)];
  }
  if (!h.is_identity()) throw Error(ErrorKind::NotContained, "element " + p.cycles() + " is not in the group");
  return r;
}

Perm PermGroup::element(std::uint64_t rank) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    digits[l] = static_cast<std::size_t>(rank % levels_[l].orbit.size());
    rank /= levels_[l].orbit.size();
  }
  if (rank != 0) throw Error(ErrorKind::InvalidArgument, "rank out of range");
  Perm g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    if (digits[l] != 0) g = g * levels_[l].reps[digits[l]];
  }
  return g;
}

PermGroup PermGroup::stabilizer(std::size_t level) const {
  if (level >= levels_.size()) return PermGroup(degree_, {});
  std::vector<Perm> gens;
  for (std::size_t gi : levels_[level].gens) gens.push_back(strong_[gi]);
  std::vector<Point> prefix;
  for (std::size_t l = level; l < levels_.size(); ++l) prefix.push_back(levels_[l].base);
  return PermGroup(degree_, std::move(gens), std::move(prefix));
}

}  // namespace bruck
