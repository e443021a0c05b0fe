#include "bruck/folder.hpp"

#include <algorithm>
#include <unordered_set>

#include "bruck/group_algos.hpp"

namespace bruck {

namespace {

// kpos[c] = index of the K element in coset c of H.
std::vector<std::size_t> coset_positions(const CosetTable& ct, const std::vector<Perm>& k) {
  std::vector<std::size_t> kpos(ct.count(), k.size());
  for (std::size_t i = 0; i < k.size(); ++i) kpos[ct.coset_of(k[i])] = i;
  return kpos;
}

std::string witness_text(const TransversalWitness& w) {
  if (w.i == w.j) return w.message;
  return w.message + " (K[" + std::to_string(w.i) + "] and K[" + std::to_string(w.j) + "], conjugate " +
         std::to_string(w.conjugator) + ")";
}

}  // namespace

std::optional<TransversalWitness> transversal_violation(const LoopFolder& f, const Bounds& bounds) {
  auto fail = [](std::string msg, std::size_t c = 0, std::size_t i = 0, std::size_t j = 0) {
    return TransversalWitness{c, i, j, std::move(msg)};
  };
  if (f.k.empty() || !f.k[0].is_identity()) return fail("K[0] is not the identity");
  if (f.h.degree() != f.g.degree()) return fail("H and G have different degrees");
  for (std::size_t i = 0; i < f.k.size(); ++i) {
    if (f.k[i].degree() != f.g.degree() || !f.g.contains(f.k[i])) {
      return fail("K[" + std::to_string(i) + "] is not in G", 0, i, i);
    }
  }
  if (!is_subgroup(f.g, f.h)) return fail("H is not a subgroup of G");
  const std::uint64_t index = f.g.order() / f.h.order();
  if (f.k.size() != index) {
    return fail("|K| = " + std::to_string(f.k.size()) + " but |G:H| = " + std::to_string(index));
  }
  const CosetTable ct(f.g, f.h, bounds);
  std::vector<std::size_t> seen(ct.count());
  for (std::size_t r = 0; r < ct.count(); ++r) {
    std::fill(seen.begin(), seen.end(), f.k.size());
    const Perm& rep = ct.representative(r);
    for (std::size_t i = 0; i < f.k.size(); ++i) {
      // H^r k = H^r k'  iff  H r k = H r k'
      const std::size_t c = ct.coset_of(rep * f.k[i]);
      if (seen[c] != f.k.size()) return fail("two elements of K in one coset", r, seen[c], i);
      seen[c] = i;
    }
  }
  return std::nullopt;
}

LoopFolder baer_envelope(const Loop& loop) {
  const std::size_t n = loop.order();
  std::vector<Perm> k;
  k.reserve(n);
  for (Element x = 0; x < n; ++x) {
    std::vector<Point> img(n);
    for (Element z = 0; z < n; ++z) img[z] = static_cast<Point>(loop.mul(z, x));
    k.push_back(make_perm_unchecked(std::move(img)));
  }
  PermGroup g(n, std::vector<Perm>(k.begin() + 1, k.end()), {0});
  PermGroup h = g.depth() == 0 ? PermGroup::trivial(n) : g.stabilizer(1);
  return LoopFolder{std::move(g), std::move(h), std::move(k)};
}

Loop loop_from_folder(const LoopFolder& f, const Bounds& bounds) {
  if (auto w = transversal_violation(f, bounds)) throw Error(ErrorKind::NotATransversal, witness_text(*w));
  const CosetTable ct(f.g, f.h, bounds);
  const std::vector<std::size_t> kpos = coset_positions(ct, f.k);
  const std::size_t n = f.k.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(kpos[ct.coset_of(f.k[i] * f.k[j])]);
  }
  return Loop(n, std::move(table));
}

bool is_faithful(const LoopFolder& f, const Bounds& bounds) { return core(f.g, f.h, bounds).is_trivial(); }

bool is_envelope(const LoopFolder& f) { return generated_by(f.g.degree(), f.k).order() == f.g.order(); }

bool is_twisted_subgroup(const PermGroup& g, const std::vector<Perm>& k) {
  std::unordered_set<Perm, PermHash> set(k.begin(), k.end());
  if (!set.contains(Perm(g.degree()))) return false;
  for (const Perm& x : k) {
    if (!g.contains(x) || !set.contains(x.inverse())) return false;
    for (const Perm& y : k) {
      if (!set.contains(x * y * x)) return false;
    }
  }
  return true;
}

bool is_bruck_folder(const LoopFolder& f) {
  if (!is_twisted_subgroup(f.g, f.k)) return false;
  std::unordered_set<Perm, PermHash> set(f.k.begin(), f.k.end());
  for (const Perm& s : f.h.generators()) {
    for (const Perm& x : f.k) {
      if (!set.contains(x.conjugate_by(s))) return false;
    }
  }
  return true;
}

bool is_bx2p_folder(const LoopFolder& f) {
  if (!is_bruck_folder(f)) return false;
  return std::all_of(f.k.begin(), f.k.end(), [](const Perm& x) { return is_power_of_two(x.order()); });
}

// ---------------------------------------------------------------------------

SubloopSet Subfolder::subloop() const {
  SubloopSet s(parent_index.begin(), parent_index.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::variant<Subfolder, NoFactorization> subfolder_from_subgroup(const LoopFolder& f, const PermGroup& u,
                                                                 const Bounds& bounds) {
  if (!is_subgroup(f.g, u)) throw Error(ErrorKind::NotContained, "subfolder: U is not a subgroup of G");
  PermGroup v = intersection(u, f.h, bounds);
  Subfolder out;
  for (std::size_t i = 0; i < f.k.size(); ++i) {
    if (!u.contains(f.k[i])) continue;
    out.folder.k.push_back(f.k[i]);
    out.parent_index.push_back(static_cast<Element>(i));
  }
  // Products hk with h in H, k in K are distinct, so the count decides.
  if (v.order() * out.folder.k.size() != u.order()) {
    const CosetTable ct(f.g, f.h, bounds);
    const std::vector<std::size_t> kpos = coset_positions(ct, f.k);
    for (const Perm& x : enumerate_elements(u, bounds)) {
      if (!u.contains(f.k[kpos[ct.coset_of(x)]])) return NoFactorization{x};
    }
    throw Error(ErrorKind::InvalidArgument, "subfolder: factorization count failed without a witness");
  }
  out.folder.g = u;
  out.folder.h = std::move(v);
  return out;
}

// ---------------------------------------------------------------------------

Perm TauExtension::lift(const Perm& x) const {
  const std::size_t d = x.degree();
  const Perm& y = phi_by_rank.at(g.rank(x));
  std::vector<Point> img(2 * d);
  for (std::size_t p = 0; p < d; ++p) {
    img[p] = x[p];
    img[p + d] = static_cast<Point>(y[p] + d);
  }
  return make_perm_unchecked(std::move(img));
}

TauExtension tau_extension(const LoopFolder& f, const Bounds& bounds) {
  if (!is_bruck_folder(f)) throw Error(ErrorKind::NotBruck, "tau extension needs a Bruck folder");
  if (auto w = transversal_violation(f, bounds)) throw Error(ErrorKind::NotATransversal, witness_text(*w));
  const std::size_t d = f.g.degree();
  const std::vector<Perm> elements = enumerate_elements(f.g, bounds);
  const CosetTable ct(f.g, f.h, bounds);
  const std::vector<std::size_t> kpos = coset_positions(ct, f.k);

  TauExtension t;
  t.g = f.g;
  t.phi_by_rank.resize(elements.size());
  for (std::size_t r = 0; r < elements.size(); ++r) {
    const Perm kinv = f.k[kpos[ct.coset_of(elements[r])]].inverse();
    t.phi_by_rank[r] = elements[r] * kinv * kinv;  // h k -> h k^-1
  }
  for (std::size_t r = 0; r < elements.size(); ++r) {
    for (const Perm& s : f.g.generators()) {
      if (t.phi_by_rank[f.g.rank(elements[r] * s)] != t.phi_by_rank[r] * t.phi_by_rank[f.g.rank(s)]) {
        throw Error(ErrorKind::AutomorphismUnrealizable, "hk -> hk^-1 is not multiplicative at element rank " +
                                                             std::to_string(r));
      }
    }
  }

  std::vector<Point> swap(2 * d);
  for (std::size_t p = 0; p < d; ++p) {
    swap[p] = static_cast<Point>(p + d);
    swap[p + d] = static_cast<Point>(p);
  }
  t.tau = make_perm_unchecked(std::move(swap));

  std::vector<Perm> gens{t.tau};
  for (const Perm& s : f.g.generators()) gens.push_back(t.lift(s));
  t.gplus = PermGroup(2 * d, std::move(gens));
  std::vector<Perm> hgens{t.tau};
  for (const Perm& s : f.h.generators()) hgens.push_back(t.lift(s));
  t.hplus = PermGroup(2 * d, std::move(hgens));
  for (const Perm& x : f.k) t.lambda.push_back(t.tau * t.lift(x));
  return t;
}

bool lambda_invariant(const TauExtension& t) {
  std::unordered_set<Perm, PermHash> set(t.lambda.begin(), t.lambda.end());
  for (const Perm& x : t.lambda) {
    if (!(x * x).is_identity()) return false;
    for (const Perm& s : t.gplus.generators()) {
      if (!set.contains(x.conjugate_by(s))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

LemmaCheck k_squares_in_o2(const LoopFolder& f, const Bounds& bounds) {
  const PermGroup o = o2(f.g, bounds);
  for (std::size_t i = 0; i < f.k.size(); ++i) {
    if (!o.contains(f.k[i] * f.k[i])) {
      return {false, "K[" + std::to_string(i) + "]^2 is not in O2(G) (element order " +
                         std::to_string(f.k[i].order()) + ")"};
    }
  }
  return {};
}

LemmaCheck kbar_class_union(const LoopFolder& f, const Bounds& bounds) {
  const Quotient q = quotient(f.g, o2(f.g, bounds), bounds);
  std::unordered_set<Perm, PermHash> kbar;
  for (const Perm& x : f.k) kbar.insert(q.map(x));
  if (!kbar.contains(Perm(q.image.degree()))) return {false, "identity missing from the image of K"};
  for (std::size_t i = 0; i < f.k.size(); ++i) {
    const Perm x = q.map(f.k[i]);
    for (const Perm& s : q.image.generators()) {
      if (!kbar.contains(x.conjugate_by(s))) {
        return {false, "a conjugate of the image of K[" + std::to_string(i) + "] leaves the image of K"};
      }
    }
  }
  return {};
}

LemmaCheck verify_no_h_inversion(const LoopFolder& f, const Bounds& bounds) {
  const std::vector<Perm> hs = enumerate_elements(f.h, bounds);
  const CosetTable ct(f.g, f.h, bounds);
  for (const Perm& h : hs) {
    if ((h * h).is_identity()) continue;
    for (const Perm& r : ct.representatives()) {
      const Perm x = h.conjugate_by(r);
      const Perm xinv = x.inverse();
      for (std::size_t i = 0; i < f.k.size(); ++i) {
        if (x.conjugate_by(f.k[i]) == xinv) {
          return {false, "K[" + std::to_string(i) + "] inverts a conjugate of an element of H of order " +
                             std::to_string(h.order())};
        }
      }
    }
  }
  return {};
}

LemmaCheck o2h_meets_k_in_o2(const LoopFolder& f, const Bounds& bounds) {
  const PermGroup o = o2(f.g, bounds);
  const PermGroup u = join(o, f.h);
  for (std::size_t i = 0; i < f.k.size(); ++i) {
    if (u.contains(f.k[i]) != o.contains(f.k[i])) {
      return {false, "K[" + std::to_string(i) + "] lies in O2(G)H but not in O2(G)"};
    }
  }
  return {};
}

}  // namespace bruck
