#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "bruck/error.hpp"
#include "bruck/perm_group.hpp"

namespace bruck {

// GF(q) for an odd prime power q <= 2^9. Elements are 0..q-1, read as
// polynomials over GF(p) in base-p digits. GF(9) uses x^2 + x + 2; other
// extension fields use the first monic irreducible in digit order.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_.at(a); }  // a != 0
  std::uint32_t primitive() const noexcept { return primitive_; }
  // modulus coefficients, constant term first (empty for prime fields)
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

 private:
  std::uint32_t q_;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t primitive_ = 1;
};

// PGL_2(q) on GF(q) + {inf}, with inf = point q.
struct PglModel {
  std::uint32_t q = 0;
  PermGroup group;  // <x+1, a x, 1/x>
  PermGroup psl;    // derived subgroup
  PermGroup borel;  // stabilizer of inf
  bool admissible = false;  // q = 9 or a Fermat prime >= 5
};

// Throws UnsupportedQ unless q is an odd prime power with 5 <= q <= 512.
PglModel build_pgl2(std::uint32_t q);

struct InvolutionClass {
  Perm representative;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t inner_centralizer_order = 0;  // of the involutions inside psl
  bool centralizers_ok = false;  // 2(q+1) outside psl, 2(q-1) inside
};

// The involutions outside psl. Requires q = 1 mod 4; throws ClassNotFound
// otherwise or if they do not form a single class.
InvolutionClass outer_involution_class(const PglModel& m, const Bounds& bounds = {});

struct SylowOrbitReport {
  std::uint64_t sylow_count = 0;
  std::vector<std::uint64_t> orbit_sizes;  // ascending
  bool borel_sylow_ok = false;  // each P meets B in a Sylow 2-subgroup of B or in order 2
};

SylowOrbitReport borel_orbits_on_sylow2(const PglModel& m, const Bounds& bounds = {});

struct SylowExtensionReport {
  bool ok = true;
  bool exhaustive = false;
  std::size_t max_subset = 0;   // largest |A \ {1}| tried
  std::uint64_t checked = 0;    // subsets A meeting the hypothesis
};

// For A inside {1} + outer class with D = <A> a 2-group and D = (D n B)A,
// some Sylow 2-subgroup Q >= D has Q n B Sylow in B. Exhaustive when the
// class has at most 16 elements, otherwise |A \ {1}| <= 2.
SylowExtensionReport check_sylow_extension(const PglModel& m, const Bounds& bounds = {});

nlohmann::json pgl_report(std::uint32_t q, const Bounds& bounds = {});

// ---- counting ----

using Rational = boost::multiprecision::cpp_rational;

// Subsets J of the index set of qs are bitmasks.
struct CountingSystem {
  std::vector<std::uint32_t> qs;
  Rational n_empty;
  std::vector<std::uint64_t> cj;     // prod q(q-1)/2 over J
  std::vector<Rational> nj_formula;  // n_empty 2^|J| / prod (q-1)
  std::vector<Rational> nj_solved;   // from the triangular system
  bool identity_ok = false;          // prod (q+1) = sum over L of prod q, for every J
};

// Exact solution without any admissibility or integrality checks.
CountingSystem solve_counting_system(const std::vector<std::uint32_t>& qs, const Rational& n_empty);

struct CountingTable {
  std::vector<std::uint32_t> qs;
  std::uint64_t n_empty = 0;
  std::vector<std::uint64_t> cj;
  std::vector<std::uint64_t> nj;
};

// Requires every q to be 9 or a Fermat prime >= 5 (UnsupportedQ) and n_empty
// a power of 2 (InvalidArgument). Throws NonIntegralNJ if some n_J is not a
// nonnegative integer, and InvalidArgument if formula and system disagree.
CountingTable counting_table(const std::vector<std::uint32_t>& qs, std::uint64_t n_empty);
// 2^e n_empty
std::uint64_t sylow_lambda_count(const CountingTable& t);

bool is_fermat_prime(std::uint64_t q);

struct LoopOrder {
  std::uint64_t order = 0;
  std::uint64_t two_part = 0;
};

// |X| = 2^a prod (q_i + 1) and |X|_2 = 2^(a+e)
LoopOrder loop_order_formula(std::uint32_t a, const std::vector<std::uint32_t>& qs);

}  // namespace bruck
