#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruck/error.hpp"
#include "bruck/folder.hpp"
#include "bruck/loop.hpp"

namespace bruck {

// Shape of G/O2(G) for a BX2P folder, recognised from orders: no abstract
// isomorphism test is made.
struct EnvelopeShape {
  std::size_t e = 0;
  std::vector<std::uint32_t> qs;  // ascending
  std::uint64_t o2_order = 0;
  std::uint64_t quotient_order = 0;
  bool quotient_ok = false;  // order, derived index 2^e, perfect derived subgroup
  bool hbar_ok = false;      // |H-bar| = prod q(q-1)
  bool fstar_ok = false;     // C_G(O2(G)) <= O2(G)
  bool kbar_ok = false;      // K-bar \ 1 = outer involutions, a union of classes of size prod(1 + q(q-1)/2)
  std::string diagnostics;   // first failing clause, empty when all pass

  bool ok() const noexcept { return quotient_ok && hbar_ok && fstar_ok && kbar_ok; }
};

// Computes every clause. Throws NotBruck unless f is a BX2P folder.
EnvelopeShape inspect_envelope_shape(const LoopFolder& f, const Bounds& bounds = {});
// As above; throws ShapeMismatch with the diagnostics when a clause fails.
EnvelopeShape verify_theorem1c(const LoopFolder& f, const Bounds& bounds = {});

struct StructureReport {
  SubloopSet odd_part;  // O(X)
  SubloopSet two_part;  // generated by the 2-elements
  bool is_direct_product = false;
  EnvelopeShape envelope_shape;  // of the Baer envelope of two_part
  std::uint64_t n_empty = 0;     // |O2(G) : O2(G) n H| in that envelope
};

// Throws NotBruck, OrderBoundExceeded, and DecompositionFailed when X is not
// the direct product of its odd part and its 2-part.
StructureReport decompose(const Loop& x, const Bounds& bounds = {});
nlohmann::json to_json(const StructureReport& r);

struct EnvelopeFactorization {
  bool ok = false;
  std::uint64_t g_order = 0;
  std::uint64_t odd_order = 0;  // O(G)
  std::uint64_t two_order = 0;  // O^{2'}(G)
};

// G = O(G) x O^{2'}(G) for G = RMult(X). Throws NotBruck.
EnvelopeFactorization check_envelope_factorization(const Loop& x, const Bounds& bounds = {});

// Sylow 2-subloop from a Sylow 2-subgroup Q of the envelope of the 2-part
// with Q n O2(G)H Sylow in O2(G)H. Throws NotBruck, DecompositionFailed.
SubloopSet sylow2_subloop(const Loop& x, const Bounds& bounds = {});
// All subloops of order |X|_2.
std::vector<SubloopSet> sylow2_all(const Loop& x, const Bounds& bounds = {});
// Images of s under H = Stab(0) in the Baer envelope of X, sorted.
std::vector<SubloopSet> h_conjugates(const Loop& x, const SubloopSet& s);
// All subloops of order |X|_2 form one H-orbit.
bool sylow2_conjugacy(const Loop& x, const Bounds& bounds = {});
// Every subloop of 2-power order lies in an H-conjugate of sylow2_subloop(X).
bool sylow2_embedding(const Loop& x, const Bounds& bounds = {});

struct LagrangeAudit {
  bool ok = true;
  std::size_t subloops = 0;
  std::optional<SubloopSet> witness;  // a subloop whose order does not divide |X|
};

LagrangeAudit lagrange_audit(const Loop& x, const Bounds& bounds = {});

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// A subloop Y with |Y|_pi = |X|_pi, or nullopt.
std::optional<SubloopSet> hall_subloop(const Loop& x, const std::vector<std::uint64_t>& primes,
                                       const Bounds& bounds = {});
// hall_subloop for every subset of the primes dividing |X|, listed by bitmask.
std::vector<std::optional<SubloopSet>> hall_subloops(const Loop& x, const Bounds& bounds = {});

struct SolubilityCheck {
  bool via_envelope = false;  // RMult(X) = O(G) x O2(G)
  bool via_series = false;    // is_soluble(X)
  bool agree() const noexcept { return via_envelope == via_series; }
};

// Throws NotBruck.
SolubilityCheck is_soluble_via_envelope(const Loop& x, const Bounds& bounds = {});

}  // namespace bruck
