#include <doctest.h>

#include <set>

#include "bruck/group_algos.hpp"
#include "corpus.hpp"

using namespace bruck;
using namespace bruck::testing;

namespace {

// Closure of the generators under multiplication, computed naively.
std::set<Perm> brute_elements(std::size_t degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("perm basics") {
  const Perm a = cycles(5, "(0 1 2)");
  const Perm b = cycles(5, "(1 3)");
  CHECK((a * b)[0] == 3);  // 0 -> 1 -> 3
  CHECK(a.order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(4) == a);
  CHECK(b.conjugate_by(a) == a.inverse() * b * a);
  CHECK(a.first_moved() == 0);
  CHECK(Perm(4).first_moved() == 4);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(a * Perm(3), Error);
}

TEST_CASE("group orders match naive closure") {
  const std::vector<PermGroup> groups = {symmetric_group(4), symmetric_group(6), dihedral_perm_group(7),
                                         cyclic_perm_group(12), frobenius21(), heisenberg27(),
                                         elementary_abelian_perm_group(4)};
  for (const PermGroup& g : groups) {
    const auto naive = brute_elements(g.degree(), g.generators());
    CHECK(g.order() == naive.size());
    const auto listed = enumerate_elements(g);
    CHECK(std::set<Perm>(listed.begin(), listed.end()) == naive);
    for (std::uint64_t r = 0; r < listed.size(); ++r) CHECK(g.rank(listed[r]) == r);
  }
  CHECK(PermGroup::trivial(3).order() == 1);
  CHECK(symmetric_group(8).order() == 40320);
}

TEST_CASE("membership and rank") {
  const PermGroup s4 = symmetric_group(4);
  const PermGroup a4 = derived_subgroup(s4);
  CHECK(a4.order() == 12);
  CHECK(a4.contains(cycles(4, "(0 1 2)")));
  CHECK_FALSE(a4.contains(cycles(4, "(0 1)")));
  CHECK_THROWS_AS(a4.rank(cycles(4, "(0 1)")), Error);
  CHECK(s4.element(0).is_identity());
  const PermGroup with_prefix(4, s4.generators(), {3});
  CHECK(with_prefix.base().front() == 3);
  const PermGroup fixer = with_prefix.stabilizer(1);
  CHECK(fixer.order() == 6);
  for (const Perm& h : fixer.generators()) CHECK(h[3] == 3);
}

TEST_CASE("serial and parallel kernels agree") {
  const PermGroup g = symmetric_group(6);
  const auto par = enumerate_elements(g);
  const auto ser = serial::enumerate_elements(g);
  CHECK(par == ser);
  CHECK(element_orders(par) == serial::element_orders(ser));
  CHECK(conjugation_table(g, par, g.generators()) == serial::conjugation_table(g, ser, g.generators()));
  Bounds tight;
  tight.enumeration_bound = 100;
  CHECK_THROWS_AS(enumerate_elements(g, tight), Error);
}

TEST_CASE("subgroup constructions") {
  const PermGroup s4 = symmetric_group(4);
  const PermGroup v4(4, {cycles(4, "(0 1)(2 3)"), cycles(4, "(0 2)(1 3)")});
  CHECK(is_normal(s4, v4));
  const PermGroup c3(4, {cycles(4, "(0 1 2)")});
  CHECK_FALSE(is_normal(s4, c3));
  CHECK(normal_closure(s4, c3.generators()).order() == 12);
  CHECK(join(v4, c3).order() == 12);
  CHECK(intersection(v4, PermGroup(4, {cycles(4, "(0 1)(2 3)"), cycles(4, "(0 1)")})).order() == 2);
  CHECK(center(s4).order() == 1);
  CHECK(center(dihedral_perm_group(4)).order() == 2);
  CHECK(centralizer(s4, std::vector<Perm>{cycles(4, "(0 1)")}).order() == 4);
  CHECK(core(s4, PermGroup(4, {cycles(4, "(0 1)"), cycles(4, "(0 1 2)")})).order() == 1);
  CHECK(core(s4, PermGroup(4, {cycles(4, "(0 1 2 3)"), cycles(4, "(0 2)")})).order() == 4);
  CHECK(reduced_generators(s4).size() <= 4);
  CHECK(generated_by(4, v4.generators()).order() == 4);
}

TEST_CASE("conjugacy classes") {
  const auto classes = conjugacy_classes(symmetric_group(5));
  CHECK(classes.size() == 7);
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == 120);
  CHECK(classes.front().size == 1);
  CHECK(conjugacy_classes(frobenius21()).size() == 5);
}

TEST_CASE("characteristic subgroups") {
  const PermGroup s3 = symmetric_group(3);
  CHECK(odd_core(s3).order() == 3);
  CHECK(o2(s3).order() == 1);
  CHECK(o2prime(s3).order() == 6);
  CHECK(o2residual(s3).order() == 3);
  const PermGroup s4 = symmetric_group(4);
  CHECK(o2(s4).order() == 4);
  CHECK(odd_core(s4).order() == 1);
  CHECK(o2residual(s4).order() == 12);
  CHECK(o2(dihedral_perm_group(4)).order() == 8);
  CHECK(odd_core(frobenius21()).order() == 21);
  CHECK(o2prime(frobenius21()).order() == 1);
}

TEST_CASE("sylow subgroups") {
  const PermGroup s5 = symmetric_group(5);
  CHECK(sylow(s5, 2).order() == 8);
  CHECK(sylow(s5, 3).order() == 3);
  CHECK(sylow(s5, 5).order() == 5);
  const PermGroup start(5, {cycles(5, "(0 1)(2 3)")});
  const PermGroup p = sylow_containing(s5, start, 2);
  CHECK(p.order() == 8);
  CHECK(is_subgroup(p, start));
  CHECK(p_part(96, 2) == 32);
  CHECK(is_p_power(27, 3));
  CHECK_FALSE(is_p_power(12, 2));
}

TEST_CASE("cosets and quotients") {
  const PermGroup s4 = symmetric_group(4);
  const PermGroup stab = s4.stabilizer(1);
  const CosetTable point(s4, stab);
  CHECK(point.count() == 4);
  const PermGroup c4(4, {cycles(4, "(0 1 2 3)")});
  const CosetTable generic(s4, c4);
  CHECK(generic.count() == 6);
  for (const Perm& x : enumerate_elements(s4)) {
    const std::size_t c = generic.coset_of(x);
    CHECK(c4.contains(x * generic.representative(c).inverse()));
  }
  const PermGroup v4(4, {cycles(4, "(0 1)(2 3)"), cycles(4, "(0 2)(1 3)")});
  const Quotient q = quotient(s4, v4);
  CHECK(q.image.order() == 6);
  CHECK(q.map(cycles(4, "(0 1)(2 3)")).is_identity());
  CHECK_THROWS_AS(quotient(s4, c4), Error);
}
