#include "bruck/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "bruck/group_algos.hpp"

namespace bruck {

namespace {

constexpr std::uint32_t kAdmissibleQ[] = {5, 9, 17, 257, 65537};

bool commute(const PermGroup& a, const PermGroup& b) {
  for (const Perm& x : a.generators()) {
    for (const Perm& y : b.generators()) {
      if (x * y != y * x) return false;
    }
  }
  return true;
}

// Multisets of exactly `count` admissible q (ascending, each >= min_q) with
// prod q(q^2 - 1) = order.
bool factor_shape(std::uint64_t order, std::size_t count, std::uint32_t min_q, std::vector<std::uint32_t>& out) {
  if (count == 0) return order == 1;
  for (std::uint32_t q : kAdmissibleQ) {
    if (q < min_q) continue;
    const std::uint64_t f = std::uint64_t{q} * (std::uint64_t{q} * q - 1);
    if (order % f != 0) continue;
    out.push_back(q);
    if (factor_shape(order / f, count - 1, q, out)) return true;
    out.pop_back();
  }
  return false;
}

std::size_t log2_exact(std::uint64_t n) {
  std::size_t e = 0;
  while (n > 1) {
    n >>= 1U;
    ++e;
  }
  return e;
}

struct Split {
  SubloopSet y;
  SubloopSet z;
};

std::string set_text(const SubloopSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Split split(const Loop& x, const Bounds& bounds) {
  if (!check_bruck(x)) throw Error(ErrorKind::NotBruck, "decompose needs a Bruck loop");
  const std::size_t n = x.order();
  Split s;
  s.y = SubloopSet{0};
  const std::vector<SubloopSet> normals = normal_subloops(x, bounds);
  for (const SubloopSet& m : normals) {
    if (m.size() % 2 == 1 && m.size() > s.y.size()) s.y = m;
  }
  for (const SubloopSet& m : normals) {
    if (m.size() % 2 == 1 && !std::includes(s.y.begin(), s.y.end(), m.begin(), m.end())) {
      throw Error(ErrorKind::DecompositionFailed,
                  "odd normal subloops " + set_text(m) + " and " + set_text(s.y) + " have no common bound");
    }
  }

  const std::vector<std::uint64_t> orders = element_orders(x);
  std::vector<Element> twos;
  for (Element a = 0; a < n; ++a) {
    if (is_power_of_two(orders[a])) twos.push_back(a);
  }
  s.z = subloop_closure(x, twos);
  for (Element a : s.z) {
    if (!is_power_of_two(orders[a])) {
      throw Error(ErrorKind::DecompositionFailed, "the 2-elements generate element " + std::to_string(a) +
                                                      " of order " + std::to_string(orders[a]));
    }
  }

  std::vector<Element> common;
  std::set_intersection(s.y.begin(), s.y.end(), s.z.begin(), s.z.end(), std::back_inserter(common));
  if (common.size() != 1) throw Error(ErrorKind::DecompositionFailed, "Y and Z meet in " + set_text(common));
  if (s.y.size() * s.z.size() != n) {
    throw Error(ErrorKind::DecompositionFailed, "|Y| |Z| = " + std::to_string(s.y.size() * s.z.size()) +
                                                    " but |X| = " + std::to_string(n));
  }
  const Loop yl = subloop_table(x, s.y);
  const Loop zl = subloop_table(x, s.z);
  const Loop prod = direct_product(yl, zl);
  LoopHom hom{&prod, &x, std::vector<Element>(n)};
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i < s.y.size(); ++i) {
    for (std::size_t j = 0; j < s.z.size(); ++j) {
      const Element v = x.mul(s.y[i], s.z[j]);
      hom.map[i * s.z.size() + j] = v;
      hit[v] = 1;
    }
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    throw Error(ErrorKind::DecompositionFailed, "(y, z) -> yz is not onto");
  }
  if (!is_homomorphism(hom)) throw Error(ErrorKind::DecompositionFailed, "(y, z) -> yz is not a homomorphism");
  return s;
}

std::optional<SubloopSet> hall_in(const std::vector<SubloopSet>& subs, std::uint64_t n,
                                  const std::vector<std::uint64_t>& primes) {
  auto pi_part = [&](std::uint64_t m) {
    std::uint64_t r = 1;
    for (std::uint64_t p : primes) r *= p_part(m, p);
    return r;
  };
  const std::uint64_t target = pi_part(n);
  for (const SubloopSet& s : subs) {
    if (pi_part(s.size()) == target) return s;
  }
  return std::nullopt;
}

}  // namespace

EnvelopeShape inspect_envelope_shape(const LoopFolder& f, const Bounds& bounds) {
  if (!is_bx2p_folder(f)) throw Error(ErrorKind::NotBruck, "envelope shape needs a Bruck folder with K of 2-elements");
  EnvelopeShape s;
  auto note = [&s](const std::string& msg) {
    if (s.diagnostics.empty()) s.diagnostics = msg;
  };

  const PermGroup o = o2(f.g, bounds);
  s.o2_order = o.order();
  const Quotient q = quotient(f.g, o, bounds);
  const PermGroup& gbar = q.image;
  s.quotient_order = gbar.order();
  const PermGroup dbar = derived_subgroup(gbar);
  const std::uint64_t index = gbar.order() / dbar.order();

  if (!is_power_of_two(index)) {
    note("G/O2(G) has derived index " + std::to_string(index));
  } else {
    s.e = log2_exact(index);
    if (!factor_shape(gbar.order(), s.e, 0, s.qs)) {
      note("|G/O2(G)| = " + std::to_string(gbar.order()) + " is not a product of " + std::to_string(s.e) +
           " orders of PGL_2(q)");
    } else if (s.e > 0 && derived_subgroup(dbar).order() != dbar.order()) {
      note("the derived subgroup of G/O2(G) is not perfect");
    } else {
      s.quotient_ok = true;
    }
  }

  std::uint64_t borel = 1;
  std::uint64_t kbar_expected = 1;
  for (std::uint32_t qi : s.qs) {
    borel *= std::uint64_t{qi} * (qi - 1);
    kbar_expected *= 1 + std::uint64_t{qi} * (qi - 1) / 2;
  }

  std::vector<Perm> hbar_gens;
  for (const Perm& h : f.h.generators()) hbar_gens.push_back(q.map(h));
  const std::uint64_t hbar = generated_by(gbar.degree(), hbar_gens).order();
  s.hbar_ok = s.quotient_ok && hbar == borel;
  if (!s.hbar_ok) note("|H-bar| = " + std::to_string(hbar) + ", expected " + std::to_string(borel));

  s.fstar_ok = is_subgroup(o, centralizer(f.g, o.generators(), bounds));
  if (!s.fstar_ok) note("C_G(O2(G)) is not inside O2(G)");

  std::unordered_set<Perm, PermHash> kbar;
  for (const Perm& k : f.k) kbar.insert(q.map(k));
  bool outer = true;
  for (const Perm& k : kbar) {
    if (k.is_identity()) continue;
    if (!(k * k).is_identity() || dbar.contains(k)) outer = false;
  }
  const LemmaCheck classes = kbar_class_union(f, bounds);
  s.kbar_ok = s.quotient_ok && outer && classes.ok && kbar.size() == kbar_expected;
  if (!outer) note("K-bar has an element that is not an involution outside the derived subgroup");
  if (!classes.ok) note(classes.detail);
  if (kbar.size() != kbar_expected) {
    note("|K-bar| = " + std::to_string(kbar.size()) + ", expected " + std::to_string(kbar_expected));
  }
  return s;
}

EnvelopeShape verify_theorem1c(const LoopFolder& f, const Bounds& bounds) {
  EnvelopeShape s = inspect_envelope_shape(f, bounds);
  if (!s.ok()) throw Error(ErrorKind::ShapeMismatch, s.diagnostics);
  return s;
}

StructureReport decompose(const Loop& x, const Bounds& bounds) {
  Split s = split(x, bounds);
  StructureReport r;
  const LoopFolder f = baer_envelope(subloop_table(x, s.z));
  r.envelope_shape = inspect_envelope_shape(f, bounds);
  r.n_empty = r.envelope_shape.o2_order / intersection(o2(f.g, bounds), f.h, bounds).order();
  r.odd_part = std::move(s.y);
  r.two_part = std::move(s.z);
  r.is_direct_product = true;
  return r;
}

nlohmann::json to_json(const StructureReport& r) {
  const EnvelopeShape& s = r.envelope_shape;
  return {
      {"odd_part", r.odd_part},
      {"two_part", r.two_part},
      {"is_direct_product", r.is_direct_product},
      {"envelope_shape",
       {{"e", s.e},
        {"qs", s.qs},
        {"o2_order", s.o2_order},
        {"quotient_order", s.quotient_order},
        {"quotient_ok", s.quotient_ok},
        {"hbar_ok", s.hbar_ok},
        {"fstar_ok", s.fstar_ok},
        {"kbar_ok", s.kbar_ok},
        {"diagnostics", s.diagnostics}}},
      {"n_empty", r.n_empty},
  };
}

EnvelopeFactorization check_envelope_factorization(const Loop& x, const Bounds& bounds) {
  if (!check_bruck(x)) throw Error(ErrorKind::NotBruck, "envelope factorization needs a Bruck loop");
  const PermGroup g = baer_envelope(x).g;
  const PermGroup odd = odd_core(g, bounds);
  const PermGroup two = o2prime(g, bounds);
  EnvelopeFactorization r;
  r.g_order = g.order();
  r.odd_order = odd.order();
  r.two_order = two.order();
  r.ok = r.odd_order * r.two_order == r.g_order && commute(odd, two) && intersection(odd, two, bounds).is_trivial();
  return r;
}

SubloopSet sylow2_subloop(const Loop& x, const Bounds& bounds) {
  const Split s = split(x, bounds);
  const LoopFolder f = baer_envelope(subloop_table(x, s.z));
  const PermGroup u = join(o2(f.g, bounds), f.h);
  const PermGroup q = sylow_containing(f.g, sylow(u, 2, bounds), 2, bounds);
  auto sub = subfolder_from_subgroup(f, q, bounds);
  if (const auto* bad = std::get_if<NoFactorization>(&sub)) {
    throw Error(ErrorKind::DecompositionFailed,
                "Sylow 2-subgroup does not factor as (Q n H)(Q n K); witness of order " +
                    std::to_string(bad->witness.order()));
  }
  SubloopSet p;
  for (Element i : std::get<Subfolder>(sub).parent_index) p.push_back(s.z[i]);
  std::sort(p.begin(), p.end());
  if (p.size() != p_part(x.order(), 2)) {
    throw Error(ErrorKind::DecompositionFailed, "Sylow subfolder gives a subloop of order " + std::to_string(p.size()));
  }
  return p;
}

std::vector<SubloopSet> sylow2_all(const Loop& x, const Bounds& bounds) {
  const std::uint64_t target = p_part(x.order(), 2);
  std::vector<SubloopSet> out;
  for (SubloopSet& s : enumerate_subloops(x, bounds)) {
    if (s.size() == target) out.push_back(std::move(s));
  }
  return out;
}

std::vector<SubloopSet> h_conjugates(const Loop& x, const SubloopSet& s) {
  const LoopFolder f = baer_envelope(x);
  std::set<SubloopSet> seen{s};
  std::vector<SubloopSet> frontier{s};
  while (!frontier.empty()) {
    std::vector<SubloopSet> next;
    for (const SubloopSet& t : frontier) {
      for (const Perm& h : f.h.generators()) {
        SubloopSet img;
        img.reserve(t.size());
        for (Element a : t) img.push_back(static_cast<Element>(h[a]));
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool sylow2_conjugacy(const Loop& x, const Bounds& bounds) {
  const std::vector<SubloopSet> all = sylow2_all(x, bounds);
  if (all.empty()) return false;
  const std::vector<SubloopSet> orbit = h_conjugates(x, all.front());
  return std::set<SubloopSet>(all.begin(), all.end()) == std::set<SubloopSet>(orbit.begin(), orbit.end());
}

bool sylow2_embedding(const Loop& x, const Bounds& bounds) {
  const std::vector<SubloopSet> orbit = h_conjugates(x, sylow2_subloop(x, bounds));
  for (const SubloopSet& s : enumerate_subloops(x, bounds)) {
    if (!is_power_of_two(s.size())) continue;
    const bool inside = std::any_of(orbit.begin(), orbit.end(), [&](const SubloopSet& p) {
      return std::includes(p.begin(), p.end(), s.begin(), s.end());
    });
    if (!inside) return false;
  }
  return true;
}

LagrangeAudit lagrange_audit(const Loop& x, const Bounds& bounds) {
  LagrangeAudit a;
  const std::vector<SubloopSet> subs = enumerate_subloops(x, bounds);
  a.subloops = subs.size();
  for (const SubloopSet& s : subs) {
    if (x.order() % s.size() != 0) {
      a.ok = false;
      a.witness = s;
      break;
    }
  }
  return a;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<SubloopSet> hall_subloop(const Loop& x, const std::vector<std::uint64_t>& primes,
                                       const Bounds& bounds) {
  return hall_in(enumerate_subloops(x, bounds), x.order(), primes);
}

std::vector<std::optional<SubloopSet>> hall_subloops(const Loop& x, const Bounds& bounds) {
  const std::vector<SubloopSet> subs = enumerate_subloops(x, bounds);
  const std::vector<std::uint64_t> primes = prime_divisors(x.order());
  std::vector<std::optional<SubloopSet>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::vector<std::uint64_t> pi;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1U) pi.push_back(primes[i]);
    }
    out.push_back(hall_in(subs, x.order(), pi));
  }
  return out;
}

SolubilityCheck is_soluble_via_envelope(const Loop& x, const Bounds& bounds) {
  if (!check_bruck(x)) throw Error(ErrorKind::NotBruck, "the envelope criterion needs a Bruck loop");
  const PermGroup g = baer_envelope(x).g;
  const PermGroup odd = odd_core(g, bounds);
  const PermGroup two = o2(g, bounds);
  SolubilityCheck c;
  c.via_envelope = odd.order() * two.order() == g.order() && commute(odd, two);
  c.via_series = is_soluble(x);
  return c;
}

}  // namespace bruck
