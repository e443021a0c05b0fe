#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bruck/error.hpp"
#include "bruck/perm.hpp"

namespace bruck {

// A permutation group held as a deterministic stabilizer chain (Schreier-Sims
// with base points chosen as the smallest moved point, after an optional
// caller-supplied prefix). Immutable once built.
class PermGroup {
 public:
  PermGroup() = default;
  // Throws DegreeMismatch if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Perm>& strong_generators() const noexcept { return strong_; }
  std::vector<Point> base() const;
  std::size_t depth() const noexcept { return levels_.size(); }
  std::span<const Point> orbit(std::size_t level) const { return levels_.at(level).orbit; }

  // Product of the fundamental orbit lengths. Throws InvalidArgument if it
  // does not fit in 64 bits.
  std::uint64_t order() const;
  bool is_trivial() const noexcept { return strong_.empty(); }

  bool contains(const Perm& p) const;
  // Residue of sifting `p` through the chain; identity iff p is a member.
  Perm sift(const Perm& p) const;

  // Elements are numbered 0..order()-1 by their transversal coordinates;
  // rank 0 is the identity.
  std::uint64_t rank(const Perm& p) const;
  Perm element(std::uint64_t rank) const;

  // Subgroup generated by the strong generators fixing base[0..level).
  PermGroup stabilizer(std::size_t level) const;

 private:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;   // indices into strong_
    std::vector<Point> orbit;        // orbit[0] == base
    std::vector<std::int32_t> slot;  // point -> index in orbit, or -1
    std::vector<Perm> reps;          // reps[j] maps base to orbit[j]
    std::vector<Perm> inv_reps;
  };

  void build(std::vector<Point> base_prefix);
  void rebuild_orbit(Level& level);
  // Strips `h` from level `start`; returns the residue and the level where it stopped.
  std::pair<Perm, std::size_t> strip(Perm h, std::size_t start) const;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

}  // namespace bruck
