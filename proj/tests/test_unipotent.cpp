#include <doctest.h>

#include <random>

#include "qm/gf2.hpp"
#include "qm/unipotent.hpp"

using namespace qm::unipotent;
using Elt = GroupTable::Elt;

TEST_CASE("gf2 elimination") {
  qm::gf2::System sys(3);
  auto r = sys.new_row();
  r.flip(0);
  r.flip(2);
  r.flip_rhs();
  CHECK(sys.add(r));
  auto s = sys.new_row();
  s.flip(1);
  s.flip(2);
  CHECK(sys.add(s));
  auto x = sys.solve();
  REQUIRE(x);
  CHECK(((*x)[0] ^ (*x)[2]) == 1);
  CHECK(((*x)[1] ^ (*x)[2]) == 0);
  auto t = sys.new_row();
  t.flip(0);
  t.flip(1);
  CHECK_FALSE(sys.add(t));
  CHECK_FALSE(sys.solve());
}

TEST_CASE("gf2 elimination on random systems with a planted solution") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 70 + trial;
    std::vector<std::uint8_t> planted(n);
    for (auto& b : planted) b = gen() & 1;
    qm::gf2::System sys(n);
    std::vector<std::vector<std::uint8_t>> rows;
    for (std::size_t i = 0; i < n + 10; ++i) {
      auto row = sys.new_row();
      std::vector<std::uint8_t> coeffs(n);
      bool rhs = false;
      for (std::size_t j = 0; j < n; ++j)
        if (gen() % 5 == 0) {
          coeffs[j] = 1;
          row.flip(j);
          rhs ^= planted[j];
        }
      if (rhs) row.flip_rhs();
      rows.push_back(coeffs);
      rows.back().push_back(rhs);
      CHECK(sys.add(row));
    }
    auto x = sys.solve();
    REQUIRE(x);
    for (const auto& row : rows) {
      bool v = false;
      for (std::size_t j = 0; j < n; ++j) v ^= row[j] && (*x)[j];
      CHECK(v == static_cast<bool>(row[n]));
    }
  }
}

TEST_CASE("bit matrices") {
  BitMatrix a = BitMatrix::elementary(4, 0, 1), b = BitMatrix::elementary(4, 1, 2);
  CHECK(a.is_unipotent());
  CHECK((a * a) == BitMatrix::identity(4));
  BitMatrix ab = a * b;
  CHECK(ab.get(0, 2));
  CHECK((ab * ab.inverse()) == BitMatrix::identity(4));
  CHECK(BitMatrix::from_key(4, ab.key()) == ab);
  CHECK(ab.corner(1, 3) == BitMatrix::elementary(3, 0, 1));
  CHECK(to_string(a) == "1100/0100/0010/0001");
}

TEST_CASE("unipotent groups and their subgroups") {
  auto g5 = build_groups(4);
  CHECK(g5.U.order() == 1024);
  CHECK(g5.Ubar.order() == 512);
  CHECK(g5.Z.size() == 2);
  CHECK(g5.U.is_central(g5.Z[1]));
  CHECK(g5.U.element_order(g5.Z[1]) == 2);
  CHECK(g5.Q.size() == 64);
  CHECK(g5.Qbar.size() == 32);
  CHECK(g5.U.verify_axioms());
  CHECK(g5.Ubar.verify_axioms());

  auto g3 = build_groups(2);
  CHECK(g3.U.order() == 8);
  CHECK(g3.Ubar.order() == 4);
  for (Elt a = 0; a < 4; ++a) {
    CHECK(g3.Ubar.mul(a, a) == 0);
    for (Elt b = 0; b < 4; ++b) CHECK(g3.Ubar.mul(a, b) == g3.Ubar.mul(b, a));
  }
  auto g4 = build_groups(3);
  CHECK(g4.U.order() == 64);
  CHECK_THROWS(build_groups(5));
}

TEST_CASE("group constructions") {
  auto C4 = cyclic_group(4);
  CHECK(C4.order() == 4);
  CHECK(C4.element_order(C4.gens()[0]) == 4);
  auto P = direct_product(C4, cyclic_group(2));
  CHECK(P.order() == 8);
  auto S3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  CHECK(S3.order() == 6);
  CHECK_FALSE(S3.is_central(S3.gens()[0]));
  auto U4 = build_groups(3).U;
  auto H = subgroup_table(U4, {U4.gens()[0], U4.gens()[2]});
  CHECK(H.order() == 4);
  for (const auto& [name, G] : small_two_groups()) {
    INFO(name);
    CHECK(G.order() <= 16);
    CHECK((G.order() & (G.order() - 1)) == 0);
  }
}

TEST_CASE("presentation of U_4") {
  auto rep = verify_presentation_u4();
  CHECK(rep.relations_hold);
  CHECK(rep.generated_order == 64);
  REQUIRE(rep.presented_order);
  CHECK(*rep.presented_order == 64);
  CHECK(rep.ok);
  std::size_t changed = 0;
  for (const auto& o : rep.dropped_orders)
    if (o != std::optional<std::size_t>(64)) ++changed;
  CHECK(changed >= 1);
  // dropping a^2 makes a of infinite order
  CHECK_FALSE(rep.dropped_orders[0]);
}

TEST_CASE("coset enumeration on known presentations") {
  Presentation P;
  P.generators = 2;
  P.relators = {{0, 0, 0}, {2, 2}, {0, 2, 0, 2}};
  CHECK(enumerate_order(P) == std::optional<std::size_t>(6));
  // triangle groups (5,3,2) = A_5 and (4,3,2) = S_4
  P.relators = {{0, 0, 0, 0, 0}, {2, 2, 2}, {0, 2, 0, 2}};
  CHECK(enumerate_order(P) == std::optional<std::size_t>(60));
  P.relators = {{0, 0, 0, 0}, {2, 2, 2}, {0, 2, 0, 2}};
  CHECK(enumerate_order(P) == std::optional<std::size_t>(24));
  // binary octahedral group: a^4 = b^3 = (ab)^2
  P.relators = {{0, 0, 0, 0, 3, 3, 3}, {0, 0, 0, 0, 3, 1, 3, 1}};
  CHECK(enumerate_order(P) == std::optional<std::size_t>(48));
  P.relators = {{0, 2, 1, 3}};
  CHECK_FALSE(enumerate_order(P, 1000));
}

TEST_CASE("cartesian square") {
  auto rep = cartesian_square_check();
  CHECK(rep.domain == 512);
  CHECK(rep.fiber_product == 512);
  CHECK(rep.image == 512);
  CHECK(rep.compatible);
  CHECK(rep.bijective);
}

TEST_CASE("lifting homomorphisms") {
  auto g3 = build_groups(2);
  auto V = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK_FALSE(lift_search(V, {1, 2}, g3.U, g3.U_abel));
  auto to_bar = lift_search(V, {1, 2}, g3.Ubar, g3.Ubar_abel);
  REQUIRE(to_bar);
  CHECK(g3.Ubar_abel[(*to_bar)[0]] == 1);
  CHECK(g3.Ubar_abel[(*to_bar)[1]] == 2);

  auto C4 = cyclic_group(4);
  auto lift = lift_search(C4, {1}, g3.U, g3.U_abel);
  REQUIRE(lift);
  CHECK(extend_homomorphism(C4, g3.U, *lift));
  CHECK_THROWS(lift_search(cyclic_group(3), {1}, g3.U, g3.U_abel));

  // a lift to U implies a lift to Ubar
  auto g4 = build_groups(3);
  for (const auto& [name, G] : small_two_groups()) {
    if (G.gens().size() > 3) continue;
    INFO(name);
    auto chars = characters(G);
    for (std::size_t i = 0; i < chars.size(); i += 3) {
      std::vector<std::uint32_t> h;
      for (Elt g : G.gens()) h.push_back(chars[i][g] | (chars[chars.size() - 1 - i][g] << 1) | (chars[i][g] << 2));
      auto up = lift_search(G, h, g4.U, g4.U_abel);
      auto down = lift_search(G, h, g4.Ubar, g4.Ubar_abel);
      if (up) {
        CHECK(down);
        CHECK(extend_homomorphism(G, g4.U, *up));
      }
    }
  }
}

TEST_CASE("cohomology over F_2") {
  auto C2 = cyclic_group(2);
  auto chars = characters(C2);
  REQUIRE(chars.size() == 2);
  // the generator of H^1(Z/2) squares to the nonzero class of H^2
  CHECK_FALSE(cup_vanishes(C2, chars[1], chars[1]));
  auto C4 = cyclic_group(4);
  auto c4 = characters(C4);
  CHECK(cup_vanishes(C4, c4[1], c4[1]));
  auto V = direct_product(C2, C2);
  CHECK(characters(V).size() == 4);
  auto M = trivial_module(V, 2);
  CHECK(M.is_valid());
  Cochain2 zero(V.order() * V.order(), 0);
  CHECK(is_cocycle(M, zero));
  CHECK(coboundary_preimage(M, zero));
}

TEST_CASE("extension class of U_5 over U_3 x U_3 is the cup product") {
  auto rep = h2_class_vs_cup();
  CHECK(rep.bilinear_matches);
  CHECK(rep.equivariant);
  CHECK(rep.extension_is_cocycle);
  CHECK(rep.differ_by_coboundary);
  CHECK(rep.class_nonzero);
  CHECK(rep.ok());
}

TEST_CASE("lifts to U_3 match vanishing cup products") {
  auto rep = u3_lift_vs_cup();
  CHECK(rep.groups >= 20);
  CHECK(rep.pairs > 500);
  CHECK(rep.mismatches == 0);
}
