#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bruck/error.hpp"
#include "bruck/loop.hpp"
#include "bruck/perm_group.hpp"

namespace bruck {

// (G, H, K): H <= G and K a list of elements of G with K[0] = 1. Loop
// element i is K[i].
struct LoopFolder {
  PermGroup g;
  PermGroup h;
  std::vector<Perm> k;
};

// Why axiom (1) fails: K[i] and K[j] share a right coset of H^r, where r is
// the representative of coset `conjugator` of H; or |K| != |G:H| (i == j).
struct TransversalWitness {
  std::size_t conjugator = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

// Checks K[0] = 1, K inside G, H <= G and that K is a transversal to every
// conjugate of H.
std::optional<TransversalWitness> transversal_violation(const LoopFolder& f, const Bounds& bounds = {});

// G = <right translations> with base point 0 first, H = G_0, K[x] = rho_x.
LoopFolder baer_envelope(const Loop& loop);

// x * y is the K-index of the coset H K[x] K[y]. Throws NotATransversal.
Loop loop_from_folder(const LoopFolder& f, const Bounds& bounds = {});

bool is_faithful(const LoopFolder& f, const Bounds& bounds = {});
bool is_envelope(const LoopFolder& f);

bool is_twisted_subgroup(const PermGroup& g, const std::vector<Perm>& k);
// twisted K and K^h = K for h in H
bool is_bruck_folder(const LoopFolder& f);
// Bruck folder with every element of K of 2-power order
bool is_bx2p_folder(const LoopFolder& f);

// ---- subfolders ----

struct Subfolder {
  LoopFolder folder;
  std::vector<Element> parent_index;  // folder.k[i] == parent.k[parent_index[i]]
  // The subloop of the parent loop, sorted.
  SubloopSet subloop() const;
};

// An element of U outside (U n H)(U n K).
struct NoFactorization {
  Perm witness;
};

std::variant<Subfolder, NoFactorization> subfolder_from_subgroup(const LoopFolder& f, const PermGroup& u,
                                                                 const Bounds& bounds = {});

// ---- tau extension ----

// G+ on two copies of G's domain: g acts as (g, phi(g)) with
// phi(hk) = h k^-1, tau swaps the copies.
struct TauExtension {
  PermGroup gplus;
  Perm tau;
  PermGroup hplus;
  std::vector<Perm> lambda;  // tau * lift(K[i]); lambda[0] == tau

  Perm lift(const Perm& g) const;

  // kept for lift()
  PermGroup g;
  std::vector<Perm> phi_by_rank;
};

// Throws NotBruck, AutomorphismUnrealizable.
TauExtension tau_extension(const LoopFolder& f, const Bounds& bounds = {});
// Lambda is closed under conjugation by G+ and consists of involutions.
bool lambda_invariant(const TauExtension& t);

// ---- BX2P folder properties ----

struct LemmaCheck {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

LemmaCheck k_squares_in_o2(const LoopFolder& f, const Bounds& bounds = {});
// 1 in image of K in G/O2(G) and that image is a union of classes.
LemmaCheck kbar_class_union(const LoopFolder& f, const Bounds& bounds = {});
// (h^g)^k = (h^g)^-1 with k in K forces h^2 = 1.
LemmaCheck verify_no_h_inversion(const LoopFolder& f, const Bounds& bounds = {});
// O2(G)H n K = O2(G) n K
LemmaCheck o2h_meets_k_in_o2(const LoopFolder& f, const Bounds& bounds = {});

}  // namespace bruck
