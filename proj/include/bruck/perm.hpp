#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bruck {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 4096;

// A permutation of 0..degree-1 stored as its image array. Products act on
// the right: x^(p*q) = (x^p)^q.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  // Throws InvalidArgument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  std::uint64_t order() const;
  // g^-1 * this * g
  Perm conjugate_by(const Perm& g) const;
  // smallest moved point, or degree() for the identity
  std::size_t first_moved() const noexcept;
  std::string cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Perm make_perm_unchecked(std::vector<Point> images);

  std::vector<Point> images_;
};

Perm make_perm_unchecked(std::vector<Point> images);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

bool is_power_of_two(std::uint64_t n) noexcept;

}  // namespace bruck
