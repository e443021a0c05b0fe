#include <doctest.h>

#include <sstream>

#include "bruck/folder.hpp"
#include "bruck/group_algos.hpp"
#include "bruck/io.hpp"
#include "bruck/search.hpp"
#include "corpus.hpp"

using namespace bruck;
using namespace bruck::testing;

TEST_CASE("baer envelope of small loops") {
  const LoopFolder c2 = baer_envelope(cyclic_loop(2));
  CHECK(c2.g.order() == 2);
  CHECK(c2.h.order() == 1);
  REQUIRE(c2.k.size() == 2);
  CHECK(c2.k[0].is_identity());
  CHECK(c2.k[1] == cycles(2, "(0 1)"));

  const LoopFolder s3 = baer_envelope(metacyclic_loop(3, 2, 2, 0));
  CHECK(s3.g.order() == 6);
  CHECK(s3.h.order() == 1);

  const LoopFolder g21 = baer_envelope(glauberman21());
  CHECK(g21.k.size() == 21);
  CHECK(is_faithful(g21));
  CHECK(is_envelope(g21));
  CHECK(g21.g.order() % 2 == 1);
  CHECK(is_bruck_folder(g21));
  CHECK_FALSE(is_bx2p_folder(g21));
}

TEST_CASE("folder round trip on groups and Bruck loops") {
  for (const auto& [name, l] : small_groups()) {
    INFO(name);
    const LoopFolder f = baer_envelope(l);
    CHECK(loop_from_folder(f) == l);
    CHECK(is_faithful(f));
    CHECK(is_envelope(f));
    CHECK(is_twisted_subgroup(f.g, f.k));
  }
  for (const auto& [name, l] : bruck_corpus()) {
    INFO(name);
    const LoopFolder f = baer_envelope(l);
    CHECK(loop_from_folder(f) == l);
    CHECK(is_bruck_folder(f));
    if (check_exponent_power_of_2(l)) CHECK(is_bx2p_folder(f));
  }
  // a Bol loop that is not Bruck still has a twisted K
  const Loop s3 = metacyclic_loop(3, 2, 2, 0);
  CHECK_FALSE(check_aip(s3));
}

TEST_CASE("loop from an explicit folder") {
  const PermGroup c2(2, {cycles(2, "(0 1)")});
  CHECK(loop_from_folder({c2, PermGroup::trivial(2), {Perm(2), cycles(2, "(0 1)")}}) == cyclic_loop(2));

  const PermGroup s3 = symmetric_group(3);
  const PermGroup t(3, {cycles(3, "(0 1)")});
  const Loop c3 = loop_from_folder({s3, t, {Perm(3), cycles(3, "(0 1 2)"), cycles(3, "(0 2 1)")}});
  CHECK(loops_isomorphic(c3, cyclic_loop(3)));

  // 1 and (0 1) share the coset H
  const LoopFolder bad{s3, t, {Perm(3), cycles(3, "(0 1)"), cycles(3, "(0 1 2)")}};
  CHECK(transversal_violation(bad).has_value());
  CHECK_THROWS_AS(loop_from_folder(bad), Error);
  const LoopFolder short_k{s3, t, {Perm(3), cycles(3, "(0 1 2)")}};
  CHECK(transversal_violation(short_k).has_value());
}

TEST_CASE("axiom (1) needs every conjugate of H") {
  // K = {1, (0 1 2), (1 2)} is a transversal to H = <(0 1)> but two of its
  // elements share a coset of a conjugate of H.
  const PermGroup s3 = symmetric_group(3);
  const PermGroup t(3, {cycles(3, "(0 1)")});
  const LoopFolder f{s3, t, {Perm(3), cycles(3, "(0 1 2)"), cycles(3, "(1 2)")}};
  CHECK(transversal_violation(f).has_value());
}

TEST_CASE("twisted subgroups") {
  const PermGroup s4 = symmetric_group(4);
  const std::vector<Perm> a4 = enumerate_elements(derived_subgroup(s4));
  CHECK(is_twisted_subgroup(s4, a4));
  CHECK_FALSE(is_twisted_subgroup(s4, {Perm(4), cycles(4, "(0 1 2)")}));
  // identity and all involutions of S3
  CHECK(is_twisted_subgroup(symmetric_group(3),
                            {Perm(3), cycles(3, "(0 1)"), cycles(3, "(0 2)"), cycles(3, "(1 2)")}));
}

TEST_CASE("subfolders") {
  const LoopFolder f = baer_envelope(elementary_abelian_loop(3));
  const auto whole = subfolder_from_subgroup(f, f.g);
  REQUIRE(std::holds_alternative<Subfolder>(whole));
  CHECK(std::get<Subfolder>(whole).subloop().size() == 8);

  const auto trivial = subfolder_from_subgroup(f, f.h);
  REQUIRE(std::holds_alternative<Subfolder>(trivial));
  CHECK(std::get<Subfolder>(trivial).subloop() == SubloopSet{0});

  // Subloops of the Glauberman loop through subgroups containing H.
  const Loop g21 = glauberman21();
  const LoopFolder e = baer_envelope(g21);
  const auto sub = subfolder_from_subgroup(e, e.g);
  REQUIRE(std::holds_alternative<Subfolder>(sub));
  const Subfolder& s = std::get<Subfolder>(sub);
  CHECK(loop_from_folder(s.folder) == g21);

  // A subgroup without the factorization: in S3 with H = <(0 1)> and the
  // twisted K = {1, (0 1 2), (0 2 1)}, U = <(0 2)> meets H and K trivially.
  const PermGroup s3 = symmetric_group(3);
  const LoopFolder c3{s3, PermGroup(3, {cycles(3, "(0 1)")}),
                      {Perm(3), cycles(3, "(0 1 2)"), cycles(3, "(0 2 1)")}};
  const auto none = subfolder_from_subgroup(c3, PermGroup(3, {cycles(3, "(0 2)")}));
  REQUIRE(std::holds_alternative<NoFactorization>(none));
  CHECK(std::get<NoFactorization>(none).witness == cycles(3, "(0 2)"));
}

TEST_CASE("subfolder loops are subloops") {
  const Loop l = direct_product(glauberman21(), cyclic_loop(2));
  const LoopFolder f = baer_envelope(l);
  for (const SubloopSet& s : enumerate_subloops(l)) {
    // the subgroup generated by the translations of s, together with H
    std::vector<Perm> gens;
    for (Element x : s) gens.push_back(f.k[x]);
    const PermGroup u = join(generated_by(f.g.degree(), gens), f.h);
    const auto sub = subfolder_from_subgroup(f, u);
    REQUIRE(std::holds_alternative<Subfolder>(sub));
    const SubloopSet got = std::get<Subfolder>(sub).subloop();
    CHECK(is_subloop(l, got));
    CHECK(std::includes(got.begin(), got.end(), s.begin(), s.end()));
  }
}

TEST_CASE("tau extension") {
  const TauExtension c2 = tau_extension(baer_envelope(cyclic_loop(2)));
  CHECK(c2.gplus.order() == 4);
  CHECK(lambda_invariant(c2));

  const LoopFolder c4f = baer_envelope(cyclic_loop(4));
  const TauExtension c4 = tau_extension(c4f);
  CHECK(c4.gplus.order() == 8);
  CHECK_FALSE(is_commutative(group_loop(c4.gplus)));  // dihedral, not abelian
  CHECK(center(c4.gplus).order() == 2);
  for (const Perm& k : c4f.k) CHECK(c4.lift(k).conjugate_by(c4.tau) == c4.lift(k.inverse()));
  CHECK(lambda_invariant(c4));

  const LoopFolder e8 = baer_envelope(elementary_abelian_loop(3));
  const TauExtension t8 = tau_extension(e8);
  for (const Perm& k : e8.k) CHECK(t8.lift(k).conjugate_by(t8.tau) == t8.lift(k));
  CHECK(lambda_invariant(t8));
  for (const Perm& x : t8.lambda) CHECK((x * x).is_identity());

  for (const auto& [name, l] : bruck_corpus()) {
    if (l.order() > 32) continue;
    INFO(name);
    const TauExtension t = tau_extension(baer_envelope(l));
    CHECK(t.gplus.order() == 2 * baer_envelope(l).g.order());
    CHECK(lambda_invariant(t));
  }
  CHECK_THROWS_AS(tau_extension(baer_envelope(metacyclic_loop(3, 2, 2, 0))), Error);
}

TEST_CASE("BX2P folder properties") {
  for (const auto& [name, l] : bruck_corpus()) {
    if (!check_exponent_power_of_2(l)) continue;
    INFO(name);
    const LoopFolder f = baer_envelope(l);
    REQUIRE(is_bx2p_folder(f));
    CHECK(k_squares_in_o2(f).ok);
    CHECK(kbar_class_union(f).ok);
    CHECK(verify_no_h_inversion(f).ok);
    CHECK(o2h_meets_k_in_o2(f).ok);
  }
  // K with an element of order 6: k^2 has order 3, outside any 2-group.
  const PermGroup g(5, {cycles(5, "(0 1 2)(3 4)")});
  const LoopFolder bad{g, PermGroup::trivial(5), enumerate_elements(g)};
  CHECK_FALSE(k_squares_in_o2(bad).ok);
}

TEST_CASE("folder file round trip") {
  const LoopFolder f = baer_envelope(glauberman21());
  std::stringstream io_buf;
  io::write_folder(io_buf, f);
  const LoopFolder back = io::read_folder(io_buf);
  CHECK(back.k == f.k);
  CHECK(back.g.order() == f.g.order());
  CHECK(loop_from_folder(back) == glauberman21());
}
