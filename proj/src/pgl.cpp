#include "bruck/pgl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "bruck/group_algos.hpp"

namespace bruck {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// q = p^k with p prime, or {0, 0}
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return {0, 0};
    std::uint32_t k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    return q == 1 ? std::pair{p, k} : std::pair{0U, 0U};
  }
  return {0, 0};
}

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  // m is monic
  while (a.size() >= m.size()) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  // trial division by every monic polynomial of degree 1..k/2
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly find_modulus(std::uint32_t p, std::uint32_t k) {
  if (p == 3 && k == 2) return {2, 1, 1};  // x^2 + x + 2
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::UnsupportedQ, "no irreducible polynomial found");
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  const auto [p, k] = prime_power(q);
  if (p == 0 || p == 2 || q > 512) throw Error(ErrorKind::UnsupportedQ, "q = " + std::to_string(q));
  p_ = p;
  k_ = k;
  if (k > 1) modulus_ = find_modulus(p, k);

  auto digits = [&](std::uint32_t a) {
    Poly d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto encode = [&](const Poly& d) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
  };

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly da = digits(a);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly db = digits(b);
      Poly sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = encode(sum);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      mul_[a * q + b] = encode(k > 1 ? poly_mod(prod, modulus_, p) : prod);
    }
  }
  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  for (std::uint32_t a = 2; a < q; ++a) {
    std::uint32_t x = a;
    std::uint32_t order = 1;
    while (x != 1) {
      x = mul(x, a);
      ++order;
    }
    if (order == q - 1) {
      primitive_ = a;
      break;
    }
  }
}

PglModel build_pgl2(std::uint32_t q) {
  if (q < 5) throw Error(ErrorKind::UnsupportedQ, "q = " + std::to_string(q) + " (need an odd prime power >= 5)");
  const FiniteField f(q);
  const std::size_t degree = q + 1;
  std::vector<Point> shift(degree);
  std::vector<Point> scale(degree);
  std::vector<Point> invert(degree);
  for (std::uint32_t x = 0; x < q; ++x) {
    shift[x] = static_cast<Point>(f.add(x, 1));
    scale[x] = static_cast<Point>(f.mul(f.primitive(), x));
    invert[x] = static_cast<Point>(x == 0 ? q : f.inv(x));
  }
  shift[q] = scale[q] = static_cast<Point>(q);
  invert[q] = 0;
  PglModel m;
  m.q = q;
  m.group = PermGroup(degree, {Perm(shift), Perm(scale), Perm(invert)}, {static_cast<Point>(q)});
  m.psl = derived_subgroup(m.group);
  m.borel = m.group.stabilizer(1);
  m.admissible = q == 9 || (q >= 5 && is_fermat_prime(q));
  return m;
}

InvolutionClass outer_involution_class(const PglModel& m, const Bounds& bounds) {
  if (m.q % 4 != 1) {
    throw Error(ErrorKind::ClassNotFound, "q = " + std::to_string(m.q) + " is not 1 mod 4");
  }
  const std::uint64_t order = m.group.order();
  std::vector<const ConjugacyClass*> outer;
  std::vector<const ConjugacyClass*> inner;
  const std::vector<ConjugacyClass> classes = conjugacy_classes(m.group, bounds);
  for (const ConjugacyClass& c : classes) {
    if (c.element_order != 2) continue;
    (m.psl.contains(c.representative) ? inner : outer).push_back(&c);
  }
  if (outer.size() != 1 || inner.size() != 1) {
    throw Error(ErrorKind::ClassNotFound, std::to_string(outer.size()) + " outer and " +
                                              std::to_string(inner.size()) + " inner involution classes");
  }
  InvolutionClass out;
  out.representative = outer[0]->representative;
  out.size = outer[0]->size;
  out.centralizer_order = order / outer[0]->size;
  out.inner_centralizer_order = order / inner[0]->size;
  out.centralizers_ok = out.centralizer_order == 2ULL * (m.q + 1) && out.inner_centralizer_order == 2ULL * (m.q - 1);
  return out;
}

namespace {

using RankSet = std::vector<std::uint64_t>;  // sorted ranks of a subgroup's elements

RankSet ranks_of(const PermGroup& g, const std::vector<Perm>& elements) {
  RankSet out;
  out.reserve(elements.size());
  for (const Perm& x : elements) out.push_back(g.rank(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Syl_2 as rank sets, listed in discovery order from a fixed Sylow subgroup.
std::vector<RankSet> sylow2_conjugates(const PglModel& m, const Bounds& bounds) {
  const PermGroup p = sylow(m.group, 2, bounds);
  const std::vector<Perm> start = enumerate_elements(p, bounds);
  std::vector<std::vector<Perm>> members{start};
  std::vector<RankSet> out{ranks_of(m.group, start)};
  std::set<RankSet> seen{out[0]};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const Perm& s : m.group.generators()) {
      std::vector<Perm> conj;
      for (const Perm& x : members[head]) conj.push_back(x.conjugate_by(s));
      RankSet key = ranks_of(m.group, conj);
      if (!seen.insert(key).second) continue;
      out.push_back(std::move(key));
      members.push_back(std::move(conj));
    }
  }
  return out;
}

std::uint64_t meet_borel(const PglModel& m, const RankSet& s) {
  std::uint64_t n = 0;
  for (std::uint64_t r : s) n += m.borel.contains(m.group.element(r)) ? 1 : 0;
  return n;
}

}  // namespace

SylowOrbitReport borel_orbits_on_sylow2(const PglModel& m, const Bounds& bounds) {
  const std::vector<RankSet> syl = sylow2_conjugates(m, bounds);
  std::map<RankSet, std::size_t> index;
  for (std::size_t i = 0; i < syl.size(); ++i) index.emplace(syl[i], i);

  std::vector<char> done(syl.size(), 0);
  SylowOrbitReport out;
  out.sylow_count = syl.size();
  for (std::size_t i = 0; i < syl.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit{i};
    done[i] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& b : m.borel.generators()) {
        std::vector<Perm> conj;
        for (std::uint64_t r : syl[orbit[head]]) conj.push_back(m.group.element(r).conjugate_by(b));
        const std::size_t j = index.at(ranks_of(m.group, conj));
        if (done[j]) continue;
        done[j] = 1;
        orbit.push_back(j);
      }
    }
    out.orbit_sizes.push_back(orbit.size());
  }
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
  const std::uint64_t b2 = p_part(m.borel.order(), 2);
  out.borel_sylow_ok = std::all_of(syl.begin(), syl.end(), [&](const RankSet& s) {
    const std::uint64_t n = meet_borel(m, s);
    return n == b2 || n == 2;
  });
  return out;
}

SylowExtensionReport check_sylow_extension(const PglModel& m, const Bounds& bounds) {
  const InvolutionClass outer = outer_involution_class(m, bounds);
  std::vector<Perm> cls;
  for (const ConjugacyClass& c : conjugacy_classes(m.group, bounds)) {
    if (c.representative == outer.representative) {
      for (std::uint64_t r : c.members) cls.push_back(m.group.element(r));
    }
  }
  const std::vector<RankSet> syl = sylow2_conjugates(m, bounds);
  const std::uint64_t b2 = p_part(m.borel.order(), 2);
  std::vector<char> good(syl.size());
  for (std::size_t i = 0; i < syl.size(); ++i) good[i] = meet_borel(m, syl[i]) == b2;

  SylowExtensionReport out;
  out.exhaustive = cls.size() <= 16;
  out.max_subset = out.exhaustive ? cls.size() : 2;
  const std::size_t degree = m.group.degree();

  auto check = [&](const std::vector<Perm>& a, bool with_one) {
    const PermGroup d = generated_by(degree, a);
    if (!is_power_of_two(d.order())) return true;
    const std::vector<Perm> delems = enumerate_elements(d, bounds);
    std::vector<Perm> db;
    for (const Perm& x : delems) {
      if (m.borel.contains(x)) db.push_back(x);
    }
    std::unordered_set<Perm, PermHash> product;
    for (const Perm& b : db) {
      if (with_one) product.insert(b);
      for (const Perm& x : a) product.insert(b * x);
    }
    if (product.size() != delems.size()) return true;  // hypothesis fails
    ++out.checked;
    const RankSet dr = ranks_of(m.group, delems);
    for (std::size_t i = 0; i < syl.size(); ++i) {
      if (good[i] && std::includes(syl[i].begin(), syl[i].end(), dr.begin(), dr.end())) return true;
    }
    return false;
  };

  std::vector<Perm> a;
  auto walk = [&](auto&& self, std::size_t from) -> void {
    if (!out.ok) return;
    out.ok = check(a, true) && (a.empty() || check(a, false));
    if (a.size() == out.max_subset) return;
    for (std::size_t i = from; i < cls.size() && out.ok; ++i) {
      a.push_back(cls[i]);
      self(self, i + 1);
      a.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

nlohmann::json pgl_report(std::uint32_t q, const Bounds& bounds) {
  const PglModel m = build_pgl2(q);
  const InvolutionClass outer = outer_involution_class(m, bounds);
  const SylowOrbitReport orbits = borel_orbits_on_sylow2(m, bounds);
  const SylowExtensionReport ext = check_sylow_extension(m, bounds);
  return {{"q", q},
          {"order", m.group.order()},
          {"borel_order", m.borel.order()},
          {"psl_order", m.psl.order()},
          {"admissible", m.admissible},
          {"outer_class_size", outer.size},
          {"outer_centralizer_order", outer.centralizer_order},
          {"inner_centralizer_order", outer.inner_centralizer_order},
          {"sylow2_count", orbits.sylow_count},
          {"borel_orbit_sizes", orbits.orbit_sizes},
          {"borel_sylow_ok", orbits.borel_sylow_ok},
          {"sylow_extension_ok", ext.ok},
          {"sylow_extension_exhaustive", ext.exhaustive},
          {"sylow_extension_cases", ext.checked}};
}

// ---------------------------------------------------------------------------

CountingSystem solve_counting_system(const std::vector<std::uint32_t>& qs, const Rational& n_empty) {
  if (qs.size() > 16) throw Error(ErrorKind::InvalidArgument, "too many q values");
  const std::size_t subsets = std::size_t{1} << qs.size();
  CountingSystem s;
  s.qs = qs;
  s.n_empty = n_empty;
  s.cj.assign(subsets, 1);
  s.nj_formula.assign(subsets, n_empty);
  s.nj_solved.assign(subsets, 0);
  s.identity_ok = true;
  for (std::size_t j = 0; j < subsets; ++j) {
    Rational lhs = 1;  // prod (q+1) over J
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (!(j >> i & 1U)) continue;
      s.cj[j] *= std::uint64_t{qs[i]} * (qs[i] - 1) / 2;
      s.nj_formula[j] *= Rational(2, qs[i] - 1);
      lhs *= qs[i] + 1;
    }
    // sum over proper subsets L of J (submask enumeration)
    Rational rest = 0;
    Rational identity_rhs = 0;
    for (std::size_t l = j;; l = (l - 1) & j) {
      std::uint64_t prod_q = 1;
      for (std::size_t i = 0; i < qs.size(); ++i) {
        if (l >> i & 1U) prod_q *= qs[i];
      }
      identity_rhs += prod_q;
      if (l != j) rest += s.nj_solved[l] * s.cj[l];
      if (l == 0) break;
    }
    s.identity_ok = s.identity_ok && identity_rhs == lhs;
    // submasks of j are numerically smaller, so they are already solved
    s.nj_solved[j] = (n_empty * lhs - rest) / s.cj[j];
  }
  return s;
}

CountingTable counting_table(const std::vector<std::uint32_t>& qs, std::uint64_t n_empty) {
  for (std::uint32_t q : qs) {
    if (!(q == 9 || (q >= 5 && is_fermat_prime(q)))) {
      throw Error(ErrorKind::UnsupportedQ, "q = " + std::to_string(q) + " is neither 9 nor a Fermat prime >= 5");
    }
  }
  if (!is_power_of_two(n_empty)) throw Error(ErrorKind::InvalidArgument, "n_empty must be a power of 2");
  const CountingSystem s = solve_counting_system(qs, n_empty);
  if (s.nj_formula != s.nj_solved || !s.identity_ok) {
    throw Error(ErrorKind::InvalidArgument, "closed formula and triangular system disagree");
  }
  CountingTable t{qs, n_empty, s.cj, {}};
  for (std::size_t j = 0; j < s.nj_formula.size(); ++j) {
    const Rational& v = s.nj_formula[j];
    if (boost::multiprecision::denominator(v) != 1 || v < 0) {
      throw Error(ErrorKind::NonIntegralNJ, "n_J = " + v.str() + " for subset mask " + std::to_string(j));
    }
    t.nj.push_back(static_cast<std::uint64_t>(boost::multiprecision::numerator(v)));
  }
  return t;
}

std::uint64_t sylow_lambda_count(const CountingTable& t) { return t.n_empty << t.qs.size(); }

bool is_fermat_prime(std::uint64_t q) {
  return q == 3 || q == 5 || q == 17 || q == 257 || q == 65537;
}

LoopOrder loop_order_formula(std::uint32_t a, const std::vector<std::uint32_t>& qs) {
  LoopOrder out{std::uint64_t{1} << a, std::uint64_t{1} << (a + qs.size())};
  for (std::uint32_t q : qs) out.order *= q + 1;
  return out;
}

}  // namespace bruck
