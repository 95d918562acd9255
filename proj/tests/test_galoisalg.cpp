#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qm/brauer.hpp"
#include "qm/galoisalg.hpp"

using namespace qm;
using namespace qm::galoisalg;

namespace {

// admissible instance: b + c = 1, v1^2 - b v2^2 = a, u1^2 - c u2^2 = d; with same_ad the point
// determines b so that d = a
std::optional<RSTData> random_instance(std::mt19937_64& g, bool same_ad) {
  Rational v1 = oracle::random_rational(g, 6), v2 = oracle::random_rational(g, 6);
  Rational u1 = oracle::random_rational(g, 6), u2 = oracle::random_rational(g, 6);
  if (sgn(v2) == 0 || sgn(u2) == 0) return std::nullopt;
  Rational b = same_ad ? Rational((v1 * v1 - u1 * u1 + u2 * u2) / (v2 * v2 + u2 * u2)) : oracle::random_rational(g, 9);
  Rational c = 1 - b;
  Rational a = v1 * v1 - b * v2 * v2, d = u1 * u1 - c * u2 * u2;
  if (sgn(b) == 0 || sgn(c) == 0 || sgn(a) == 0 || sgn(d) == 0) return std::nullopt;
  try {
    return rst_from_points(a, b, c, d, v1, v2, u1, u2);
  } catch (const Degenerate&) {
    return std::nullopt;
  }
}

Algebra alg(std::initializer_list<long> gens) { return Algebra(gens); }

Element embed_check_product(const Element& alpha, const Element& beta) {
  Algebra F(std::vector<SquareClass>{alpha.algebra().gen(0), beta.algebra().gen(0)});
  return etale::embed(alpha, F, {0}) * etale::embed(beta, F, {1});
}

}  // namespace

TEST_CASE("tower arithmetic") {
  Algebra B{2};
  Element theta(B, {3, 1});
  Tower T(B, {theta, Element(B, {1, 1})});
  CHECK(T.dim() == 8);
  auto t0 = T.monomial(1, Element::one(B));
  CHECK(T.equal(T.mul(t0, t0), T.from_base(theta)));
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 50; ++trial) {
    TowerElement x = T.zero(), y = T.zero(), z = T.zero();
    for (auto* e : {&x, &y, &z})
      for (auto& p : e->parts) p = Element(B, {oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3)});
    CHECK(T.equal(T.mul(T.mul(x, y), z), T.mul(x, T.mul(y, z))));
    CHECK(T.equal(T.mul(x, y), T.mul(y, x)));
    CHECK(T.equal(T.mul(x, T.add(y, z)), T.add(T.mul(x, y), T.mul(x, z))));
  }
  // sqrt 2 -> -sqrt 2 cannot fix T_0 since theta is not fixed
  TowerMap bad{1, {Element::one(B), Element::one(B)}, {1, 2}};
  CHECK_FALSE(T.is_automorphism(bad));
  CHECK(T.is_automorphism(T.identity_map()));
  TowerMap swap_sign{0, {-Element::one(B), Element::one(B)}, {1, 2}};
  CHECK(T.is_automorphism(swap_sign));
  CHECK(T.compose(swap_sign, swap_sign) == T.identity_map());
  CHECK(T.inverse(swap_sign) == swap_sign);
  CHECK(T.fixed_dimension({swap_sign}) == 4);
}

TEST_CASE("U_3 algebra of (2, 17)") {
  Algebra F2{2};
  U3Data d{2, 17, Element(F2, {7, 4}), 1};
  auto K = build_u3(d);
  CHECK(K.report.dim == 8);
  CHECK(K.report.automorphisms);
  CHECK(K.report.relations);
  CHECK(K.commutator_order == 2);
  CHECK(K.report.kernel_fixed_dim == 4);
  CHECK(K.report.kernel_fixed_is_base);
  CHECK(K.report.group_fixed_dim == 1);
  CHECK(K.report.ok());
  CHECK(minus_x_isomorphism(d));
  U3Data neg = d;
  neg.x = -1;
  CHECK(build_u3(neg).report.ok());

  U3Data bad = d;
  bad.alpha = Element(F2, {7, 3});
  CHECK_THROWS_AS(build_u3(bad), InvariantViolated);
  bad = d;
  bad.x = 2;
  CHECK_THROWS_AS(build_u3(bad), InvariantViolated);
}

TEST_CASE("U_3 algebras on random norm data") {
  std::mt19937_64 g(17);
  int built = 0;
  for (int trial = 0; trial < 40 && built < 12; ++trial) {
    long a = oracle::uniform(g, -30, 30);
    if (a == 0) continue;
    a = oracle::squarefree(a);
    if (a == 1) continue;
    Algebra Fa{a};
    Element alpha(Fa, {oracle::uniform(g, -6, 6), oracle::uniform(g, 1, 4)});
    Rational N = etale::norm(alpha);
    if (sgn(N) == 0) continue;
    // b = N, x = 1
    auto K = build_u3(U3Data{a, N, alpha, 1});
    CHECK(K.report.ok());
    ++built;
  }
  CHECK(built >= 10);
}

TEST_CASE("isomorphism test for U_3 algebras") {
  Algebra F2{2}, F17{17};
  // both built from the point 2*4^2 + 17*1^2 = 7^2
  U3Data d{2, 17, Element(F2, {7, 4}), 1};
  auto r = u3_iso_test(d, Element(F17, {7, 1}), 4);
  REQUIRE(std::holds_alternative<U3Iso>(r));
  const auto& iso = std::get<U3Iso>(r);
  Element one = Element::one(iso.omega.algebra());
  CHECK(iso.omega * iso.omega == embed_check_product(d.alpha, Element(F17, {7, 1})));
  CHECK(double_difference(iso.omega, 1, 2) == -one);
  CHECK(iso.x_sign != 0);
  CHECK(iso.y_sign != 0);
  // alpha beta not a square
  auto r2 = u3_iso_test(d, Element(F17, {-7, 1}), 4);
  REQUIRE(std::holds_alternative<U3IsoFailure>(r2));
  CHECK(std::get<U3IsoFailure>(r2).reason == U3IsoFailure::Reason::NotSquare);
  CHECK_THROWS_AS(u3_iso_test(d, Element(F17, {7, 1}), 3), InvariantViolated);
  // a = b: beta the same element in the other slot
  Algebra F2b{2};
  U3Data dd{2, 2, Element(F2, {2, 1}), 1};
  auto r3 = u3_iso_test(dd, Element(F2b, {2, 1}), 1);
  CHECK(std::holds_alternative<U3Iso>(r3));
}

TEST_CASE("U_4 algebra for the triple (2, 17, 2)") {
  // rho = mu = 5 + 2 sqrt 2 have norm 17; eps = rho + mu, N(eps) = 17 (Tr rho + Tr mu)^2
  Algebra F22{2, 2};
  Element eps(F22, {10, 2, 2, 0});
  CHECK(etale::norm(eps) == 17 * 20 * 20);
  auto K = build_u4(U4Data{2, 17, 2, eps, 20});
  CHECK(K.report.dim == 64);
  CHECK(K.report.automorphisms);
  CHECK(K.report.relations);
  CHECK(K.report.kernel_fixed_dim == 8);
  CHECK(K.report.kernel_fixed_is_base);
  CHECK(K.report.group_fixed_dim == 1);

  // b a square
  Algebra F23{2, 3};
  auto K2 = build_u4(U4Data{2, 1, 3, Element::one(F23), 1});
  CHECK(K2.report.ok());
  auto K3 = build_u4(U4Data{2, 4, 3, Element::one(F23), Rational(1, 2)});
  CHECK(K3.report.ok());

  CHECK_THROWS_AS(build_u4(U4Data{2, 17, 2, eps, 19}), InvariantViolated);
  CHECK_THROWS_AS(build_u4(U4Data{2, 3, 2, eps, 20}), InvariantViolated);
}

TEST_CASE("r, s, t from conic points") {
  auto R = rst_from_points(2, 2, -1, 2, 2, 1, 1, 1);
  CHECK(R.r == 12);
  CHECK(R.s == 12);
  CHECK(R.t == 18);
  CHECK(R.l == 3);
  CHECK(R.f == 18);
  CHECK(R.alpha == Element(Algebra{2}, {6, 3}));
  CHECK_THROWS_AS(rst_from_points(2, 2, -1, 2, 2, 1, -1, 1), Degenerate);
  CHECK_THROWS_AS(rst_from_points(2, 2, -1, 2, 2, 2, 1, 1), InvariantViolated);

  auto built = rst_build(2, 2, -1, 2);
  REQUIRE(std::holds_alternative<RSTData>(built));
  const auto& B = std::get<RSTData>(built);
  CHECK(B.v1 * B.v1 - B.b * B.v2 * B.v2 == B.a);
  CHECK(B.u1 * B.u1 - B.c * B.u2 * B.u2 == B.d);
  CHECK(brauer::is_zero({{B.r, B.a}, {B.s, B.b}, {B.t, B.c}}));

  // (3, 2) != 0 in Br(Q)
  auto obs = rst_build(3, 2, -1, 2);
  REQUIRE(std::holds_alternative<SymbolObstruction>(obs));
  CHECK(brauer::hilbert(3, 2, std::get<SymbolObstruction>(obs).place) == -1);
}

TEST_CASE("normalization to b + c = 1") {
  auto n = normalize_bc(2, 17);
  REQUIRE(std::holds_alternative<Normalization>(n));
  const auto& N = std::get<Normalization>(n);
  CHECK(N.b_scaled + N.c_scaled == 1);
  CHECK(SquareClass(N.b_scaled) == SquareClass(2));
  CHECK(SquareClass(N.c_scaled) == SquareClass(17));
  CHECK(std::holds_alternative<SymbolObstruction>(normalize_bc(3, 5)));
}

TEST_CASE("(r, a) + (s, b) + (t, c) vanishes when a = d") {
  std::mt19937_64 g(23);
  int n = 0;
  for (int trial = 0; trial < 400 && n < 120; ++trial) {
    auto R = random_instance(g, true);
    if (!R) continue;
    ++n;
    CHECK(R->a == R->d);
    CHECK(brauer::is_zero({{R->r, R->a}, {R->s, R->b}, {R->t, R->c}}));
  }
  CHECK(n >= 100);
}

TEST_CASE("e = r for the closed-form glue data") {
  auto R = rst_from_points(2, 2, -1, 2, 2, 1, 1, 1);
  auto G = lambda_glue(R);
  CHECK(G.eps == Element(alg({2, -1}), {3, 1, 1, 0}));
  CHECK(G.nu == Element(alg({2, 2}), {2, 1, 1, 0}));
  CHECK(G.omega == Element(alg({2, -1}), {1, 1, 1, 0}));
  CHECK(glue_product(G.eps, G.nu) == G.omega * G.omega * 12);

  auto e = e_invariant(2, 2, -1, 2, G.eps, G.nu, R);
  REQUIRE(std::holds_alternative<EInvariant>(e));
  CHECK(std::get<EInvariant>(e).e == 12);
  CHECK(std::get<EInvariant>(e).omega == G.omega);
  CHECK(std::get<EInvariant>(e).sign == -1);

  // without the hint: F_{2,-1} is a field and e is determined up to the classes 1, 2, -1, -2
  auto e2 = e_invariant(2, 2, -1, 2, G.eps, G.nu);
  REQUIRE(std::holds_alternative<EInvariant>(e2));
  const auto& E2 = std::get<EInvariant>(e2);
  CHECK(E2.sign == -1);
  CHECK(glue_product(G.eps, G.nu) == E2.omega * E2.omega * E2.e);
  SquareClass ratio(E2.e / 12);
  CHECK((ratio == SquareClass(1) || ratio == SquareClass(2) || ratio == SquareClass(-1) || ratio == SquareClass(-2)));

  std::mt19937_64 g(29);
  int n = 0;
  for (int trial = 0; trial < 200 && n < 60; ++trial) {
    auto Ri = random_instance(g, trial % 2 == 0);
    if (!Ri) continue;
    ++n;
    auto Gi = lambda_glue(*Ri);
    CHECK(etale::norm(Gi.eps) == Ri->b * lambda_x(*Ri) * lambda_x(*Ri));
    CHECK(etale::norm(Gi.nu) == Ri->c * lambda_y(*Ri) * lambda_y(*Ri));
    CHECK(glue_product(Gi.eps, Gi.nu) == Gi.omega * Gi.omega * Ri->r);
    CHECK(double_difference(Gi.omega, 1, 2) == Element::scalar(Gi.omega.algebra(), -1));
    auto rep = glue_report(Gi);
    CHECK(rep.norm_ac);
    CHECK(rep.norm_bd);
    CHECK(rep.product);
    CHECK(rep.sign);
  }
  CHECK(n >= 50);
}

TEST_CASE("e for norms from the subalgebras") {
  // eps in F_a, nu in F_d: the product is rational and omega = 1
  Algebra Ac = alg({3, 5}), Bd = alg({7, 3});
  Element eps = Element(Ac, {2, 1, 0, 0}), nu = Element(Bd, {4, 0, 1, 0});
  auto e = e_invariant(3, 7, 5, 3, eps, nu);
  REQUIRE(std::holds_alternative<EInvariant>(e));
  CHECK(std::get<EInvariant>(e).e == etale::norm(Element(Algebra{3}, {2, 1})) * etale::norm(Element(Algebra{3}, {4, 1})));
  CHECK(std::get<EInvariant>(e).omega == Element::one(alg({7, 5})));
  CHECK(std::get<EInvariant>(e).sign == 1);
}

TEST_CASE("glue data and the splitting torsor") {
  auto R = rst_from_points(2, 2, -1, 2, 2, 1, 1, 1);
  auto G = lambda_glue(R);
  CHECK_FALSE(glue_check(G));  // e = 12 is not a square
  // 12 = N(4 + 2 g) in F_{bd} = F_4, g^2 = 1
  CosetFactors f;
  f.nu_bd = Element(Algebra{1}, {4, 2});
  auto H = absorb(G, f);
  CHECK(H.e == 1);
  CHECK(glue_check(H));
  auto rep = glue_report(H);
  CHECK(rep.defined());

  auto P = splitting_point_from_glue(H);
  auto sp = splitting_point_check(P);
  CHECK(sp.ok());
  CHECK(*sp.x_recovered == P.x);
  CHECK(*sp.y_recovered == P.y);
  // N_{a,c}(eps) = b x^2 and N_{b,d}(nu) = c y^2 follow from the torsor equations
  CHECK(etale::norm(P.eps) == P.b * P.x * P.x);
  CHECK(etale::norm(P.nu) == P.c * P.y * P.y);
  auto flipped = flip_sign(P);
  CHECK(splitting_point_check(flipped).ok());
  CHECK(flipped.x == -P.x);

  SplittingPoint scaled = P;
  scaled.omega = P.omega * scaled_root(P.omega.algebra(), 1, 2);
  auto bad = splitting_point_check(scaled);
  CHECK_FALSE(bad.eq3);
  CHECK_FALSE(bad.ok());

  GlueData wrong_sign = H;
  wrong_sign.omega = Element::one(H.omega.algebra());
  CHECK_FALSE(glue_report(wrong_sign).sign);
  CHECK_FALSE(glue_check(wrong_sign));
  GlueData wrong_norm = H;
  wrong_norm.eps = Element(alg({2, -1}), {1, 1, 0, 0});
  CHECK_FALSE(glue_report(wrong_norm).norm_ac);
  CHECK_FALSE(glue_check(wrong_norm));
}
