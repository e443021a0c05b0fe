#include "bruck/perm.hpp"

#include <numeric>
#include <sstream>

#include "bruck/error.hpp"

namespace bruck {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) {
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(degree) + " exceeds 4096");
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw Error(ErrorKind::InvalidArgument, "degree exceeds 4096");
  }
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point y = images_[i];
    if (y >= images_.size() || seen[y]) {
      throw Error(ErrorKind::InvalidArgument,
                  "image array is not a bijection at position " + std::to_string(i));
    }
    seen[y] = true;
  }
}

Perm make_perm_unchecked(std::vector<Point> images) { return Perm(std::move(images), Perm::Unchecked{}); }

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Perm(std::move(inv), Unchecked{});
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Perm(std::move(out), Perm::Unchecked{});
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Perm result(degree());
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(result, len);
    const std::uint64_t factor = len / g;
    if (result > UINT64_MAX / factor) {
      throw Error(ErrorKind::InvalidArgument, "permutation order overflows 64 bits");
    }
    result *= factor;
  }
  return result;
}

Perm Perm::conjugate_by(const Perm& g) const {
  // x^(g^-1 p g): g maps x to y, then p, then g.
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[g.images_[x]] = g.images_[images_[x]];
  return Perm(std::move(out), Unchecked{});
}

std::size_t Perm::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace bruck
