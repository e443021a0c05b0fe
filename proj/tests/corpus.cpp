#include "corpus.hpp"

#include <functional>
#include <sstream>

#include "bruck/search.hpp"

namespace bruck::testing {

Perm perm(std::vector<Point> images) { return Perm(std::move(images)); }

Perm cycles(std::size_t degree, const std::string& text) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const std::size_t end = text.find(')', pos);
    std::istringstream in(text.substr(pos + 1, end - pos - 1));
    std::vector<Point> cyc;
    int v = 0;
    while (in >> v) cyc.push_back(static_cast<Point>(v));
    for (std::size_t i = 0; i < cyc.size(); ++i) images[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = end;
  }
  return Perm(std::move(images));
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<Point>((i + 1) % n);
  std::vector<Point> swap(n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = static_cast<Point>(i);
  if (n > 1) std::swap(swap[0], swap[1]);
  return PermGroup(n, {Perm(shift), Perm(swap)});
}

PermGroup cyclic_perm_group(std::size_t n) {
  std::vector<Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(shift)});
}

PermGroup dihedral_perm_group(std::size_t n) {
  std::vector<Point> shift(n);
  std::vector<Point> flip(n);
  for (std::size_t i = 0; i < n; ++i) {
    shift[i] = static_cast<Point>((i + 1) % n);
    flip[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(shift), Perm(flip)});
}

PermGroup elementary_abelian_perm_group(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Perm> gens;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(x ^ (std::size_t{1} << b));
    gens.emplace_back(img);
  }
  return PermGroup(n, gens);
}

PermGroup frobenius21() {
  std::vector<Point> t(7);
  std::vector<Point> m(7);
  for (std::size_t x = 0; x < 7; ++x) {
    t[x] = static_cast<Point>((x + 1) % 7);
    m[x] = static_cast<Point>((2 * x) % 7);
  }
  return PermGroup(7, {Perm(t), Perm(m)});
}

PermGroup heisenberg27() {
  // Affine maps of F_3^2: two translations and the shear (x, y) -> (x, y + x).
  auto idx = [](std::size_t x, std::size_t y) { return static_cast<Point>(3 * (x % 3) + (y % 3)); };
  std::vector<Point> t1(9);
  std::vector<Point> t2(9);
  std::vector<Point> s(9);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      t1[idx(x, y)] = idx(x + 1, y);
      t2[idx(x, y)] = idx(x, y + 1);
      s[idx(x, y)] = idx(x, y + x);
    }
  }
  return PermGroup(9, {Perm(t1), Perm(t2), Perm(s)});
}

namespace {

Loop table_from(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>(mul(a, b));
  }
  return Loop(n, std::move(table));
}

std::size_t power_mod(std::size_t base, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  for (std::size_t i = 0; i < e; ++i) r = (r * base) % m;
  return r;
}

}  // namespace

Loop cyclic_loop(std::size_t n) {
  return table_from(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

Loop elementary_abelian_loop(std::size_t k) {
  return table_from(std::size_t{1} << k, [](std::size_t a, std::size_t b) { return a ^ b; });
}

Loop metacyclic_loop(std::size_t m, std::size_t k, std::size_t r, std::size_t s) {
  // element a^i b^j is i + m*j; a^i b^j * a^u b^v = a^(i + u r^j) b^(j + v)
  return table_from(m * k, [=](std::size_t x, std::size_t y) {
    const std::size_t i = x % m;
    const std::size_t j = x / m;
    const std::size_t u = y % m;
    const std::size_t v = y / m;
    std::size_t a = (i + u * power_mod(r, j, m)) % m;
    std::size_t b = j + v;
    if (b >= k) {
      b -= k;
      a = (a + s) % m;
    }
    return a + m * b;
  });
}

Loop a4_loop() {
  // C2^2 : C3 with the generator acting as (u, v) -> (v, u + v); element (w, c) is w + 4c.
  auto act = [](std::size_t w, std::size_t times) {
    for (std::size_t t = 0; t < times; ++t) {
      const std::size_t u = w & 1U;
      const std::size_t v = (w >> 1U) & 1U;
      w = v | (((u + v) & 1U) << 1U);
    }
    return w;
  };
  return table_from(12, [&](std::size_t x, std::size_t y) {
    const std::size_t w1 = x % 4;
    const std::size_t c1 = x / 4;
    const std::size_t w2 = y % 4;
    const std::size_t c2 = y / 4;
    return (w1 ^ act(w2, (3 - c1) % 3)) + 4 * ((c1 + c2) % 3);
  });
}

Loop c4c2_by_c2_loop(int twist) {
  // N = C4 x C2 with (u, v) encoded as u + 4v; the C2 acts by an involutory automorphism.
  auto act = [twist](std::size_t w) {
    const std::size_t u = w % 4;
    const std::size_t v = w / 4;
    if (twist == 0) return u + 4 * ((v + u) % 2);
    return (u + 2 * v) % 4 + 4 * v;
  };
  return table_from(16, [&](std::size_t x, std::size_t y) {
    const std::size_t w1 = x % 8;
    const std::size_t c1 = x / 8;
    std::size_t w2 = y % 8;
    const std::size_t c2 = y / 8;
    if (c1 == 1) w2 = act(w2);
    const std::size_t u = (w1 % 4 + w2 % 4) % 4;
    const std::size_t v = (w1 / 4 + w2 / 4) % 2;
    return u + 4 * v + 8 * ((c1 + c2) % 2);
  });
}

std::vector<NamedLoop> small_groups() {
  const Loop c2 = cyclic_loop(2);
  const Loop c4 = cyclic_loop(4);
  const Loop d8 = metacyclic_loop(4, 2, 3, 0);
  const Loop q8 = metacyclic_loop(4, 2, 3, 2);
  return {
      {"C1", cyclic_loop(1)},
      {"C2", c2},
      {"C3", cyclic_loop(3)},
      {"C4", c4},
      {"C2^2", elementary_abelian_loop(2)},
      {"C5", cyclic_loop(5)},
      {"C6", cyclic_loop(6)},
      {"S3", metacyclic_loop(3, 2, 2, 0)},
      {"C7", cyclic_loop(7)},
      {"C8", cyclic_loop(8)},
      {"C4xC2", direct_product(c4, c2)},
      {"C2^3", elementary_abelian_loop(3)},
      {"D8", d8},
      {"Q8", q8},
      {"C9", cyclic_loop(9)},
      {"C3^2", direct_product(cyclic_loop(3), cyclic_loop(3))},
      {"C10", cyclic_loop(10)},
      {"D10", metacyclic_loop(5, 2, 4, 0)},
      {"C11", cyclic_loop(11)},
      {"C12", cyclic_loop(12)},
      {"C6xC2", direct_product(cyclic_loop(6), c2)},
      {"D12", metacyclic_loop(6, 2, 5, 0)},
      {"A4", a4_loop()},
      {"Dic12", metacyclic_loop(3, 4, 2, 0)},
      {"C13", cyclic_loop(13)},
      {"C14", cyclic_loop(14)},
      {"D14", metacyclic_loop(7, 2, 6, 0)},
      {"C15", cyclic_loop(15)},
      {"C16", cyclic_loop(16)},
      {"C4xC4", direct_product(c4, c4)},
      {"(C4xC2):C2", c4c2_by_c2_loop(0)},
      {"C4:C4", metacyclic_loop(4, 4, 3, 0)},
      {"C8xC2", direct_product(cyclic_loop(8), c2)},
      {"M16", metacyclic_loop(8, 2, 5, 0)},
      {"D16", metacyclic_loop(8, 2, 7, 0)},
      {"QD16", metacyclic_loop(8, 2, 3, 0)},
      {"Q16", metacyclic_loop(8, 2, 7, 4)},
      {"C4xC2^2", direct_product(c4, elementary_abelian_loop(2))},
      {"C2xD8", direct_product(c2, d8)},
      {"C2xQ8", direct_product(c2, q8)},
      {"C4oD8", c4c2_by_c2_loop(1)},
      {"C2^4", elementary_abelian_loop(4)},
  };
}

Loop nonbol_order5() {
  return Loop::from_rows({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
}

Loop glauberman21() { return glauberman_loop(frobenius21()); }

Loop glauberman27() { return glauberman_loop(heisenberg27()); }

std::vector<Loop> exponent2_bol_order8() {
  SearchSpec spec;
  spec.order = 8;
  spec.require_bol = true;
  spec.require_exponent2 = true;
  spec.up_to_isomorphism = true;
  std::vector<Loop> out;
  for (Loop& l : enumerate_loops(spec).loops) {
    if (!is_associative(l)) out.push_back(std::move(l));
  }
  return out;
}

std::vector<NamedLoop> bruck_corpus() {
  std::vector<NamedLoop> out;
  for (auto& g : small_groups()) {
    if (is_commutative(g.loop)) out.push_back(std::move(g));
  }
  out.push_back({"C2^5", elementary_abelian_loop(5)});
  out.push_back({"G21", glauberman21()});
  out.push_back({"G27", glauberman27()});
  const std::vector<Loop> b8 = exponent2_bol_order8();
  for (std::size_t i = 0; i < b8.size(); ++i) out.push_back({"B8_" + std::to_string(i), b8[i]});
  out.push_back({"G21xC2", direct_product(glauberman21(), cyclic_loop(2))});
  if (!b8.empty()) {
    out.push_back({"B8_0xC3", direct_product(b8[0], cyclic_loop(3))});
    out.push_back({"B8_0xC2", direct_product(b8[0], cyclic_loop(2))});
  }
  return out;
}

}  // namespace bruck::testing
