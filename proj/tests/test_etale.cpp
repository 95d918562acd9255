#include "doctest.h"
#include "oracles.hpp"
#include "qm/etale.hpp"

using namespace qm;
using namespace qm::etale;

namespace {

Element el(const Algebra& A, std::vector<Rational> c) { return Element(A, std::move(c)); }

Element random_element(const Algebra& A, std::mt19937_64& g, long H = 6) {
  Element x(A);
  for (Mask s = 0; s < A.dim(); ++s) x[s] = oracle::random_rational(g, H);
  return x;
}

std::vector<long> as_longs(const Algebra& A) {
  std::vector<long> out;
  for (const auto& c : A.gens()) out.push_back(c.value().get_si());
  return out;
}

}  // namespace

TEST_CASE("multiplication in F_2 and F_{2,17}") {
  Algebra F2{2};
  Element x = el(F2, {1, 1}), y = el(F2, {1, -1});
  CHECK(x * y == Element::scalar(F2, -1));
  Algebra F{2, 17};
  Element z = el(F, {1, 1, 1, 0});
  CHECK(z * z == el(F, {20, 2, 2, 2}));
  CHECK(z * Element::one(F) == z);
}

TEST_CASE("multiplication agrees with the polynomial oracle") {
  auto g = oracle::rng(11);
  for (auto A : {Algebra{2, 17}, Algebra{-1, 3, 5}, Algebra{2, 2}, Algebra{1, -7}, Algebra{6, 10, 15}}) {
    for (int k = 0; k < 30; ++k) {
      Element x = random_element(A, g), y = random_element(A, g);
      CHECK((x * y).coords() == oracle::poly_mul(as_longs(A), x.coords(), y.coords()));
    }
  }
}

TEST_CASE("inverse") {
  Algebra F2{2};
  CHECK(inv(el(F2, {1, 1})) == el(F2, {-1, 1}));
  Algebra F{2, -1};
  Element x = el(F, {1, 1, 1, 0});
  CHECK(x * inv(x) == Element::one(F));
  Algebra D{2, 2};
  Element zd = el(D, {0, 1, -1, 0});  // v - w vanishes on the component w = v
  CHECK(!is_unit(zd));
  CHECK_THROWS_AS(inv(zd), ZeroDivisor);
  // (1 + v)(1 - w) has components -1 and 3 + 2 sqrt2, so it is a unit
  Element u = el(D, {1, 1, -1, -1});
  CHECK(is_unit(u));
  CHECK(u * inv(u) == Element::one(D));
}

TEST_CASE("galois action") {
  Algebra F{2, 17};
  Element x = el(F, {1, 1, 1, 0});
  CHECK(apply_sigma(2, x) == el(F, {1, 1, -1, 0}));
  Element r34 = Element::monomial(F, 3);
  CHECK(apply_sigma(3, r34) == r34);
  CHECK(sigma_minus_one(2, Element::gen(F, 1)) == Element::scalar(F, -1));
}

TEST_CASE("norms and traces") {
  Algebra F{2, 17};
  Element rho = el(F, {1, rat(-3, 2), 0, rat(-1, 2)});
  CHECK(norm(rho) == -9);
  Algebra F2{2};
  CHECK(norm(el(F2, {7, 4})) == 17);
  CHECK(norm_to_sub(rho, F.full_mask()) == rho);
  CHECK(trace(el(F2, {2, 1})) == 4);
  CHECK(trace(el(F2, {0, 1})) == 0);
  Algebra Fb{5};
  CHECK(trace(el(Fb, {1, 1})) == 2);
  // N_{F_{2,17}/F_17} lands in F_17
  Element n17 = norm_to_sub(rho, 2);
  CHECK(n17.algebra() == Algebra{17});
  CHECK(norm(n17) == -9);
}

TEST_CASE("norms agree with real embeddings") {
  auto g = oracle::rng(5);
  Algebra A{2, 3, 5};
  for (int k = 0; k < 20; ++k) {
    Element x = random_element(A, g);
    double prod = 1;
    for (unsigned s = 0; s < 8; ++s) prod *= oracle::evaluate(as_longs(A), x.coords(), s);
    double exact = norm(x).get_d();
    CHECK(std::abs(prod - exact) <= 1e-6 * (1 + std::abs(exact)));
  }
}

TEST_CASE("idempotent split") {
  Algebra A{2, 2};
  auto split = idempotent_split(A, 0, 1);
  CHECK(split.target == Algebra{2});
  Rational p1 = 3, p2 = rat(1, 2), p3 = -5, p4 = 7;
  Element x = el(A, {p1, p2, p3, p4});
  CHECK(split.first(x) == el(split.target, {p1 + 2 * p4, p2 + p3}));
  CHECK(split.second(x) == el(split.target, {p1 - 2 * p4, p2 - p3}));
  CHECK(split.first(Element::one(A)) == Element::one(split.target));
  auto g = oracle::rng(3);
  for (int k = 0; k < 25; ++k) {
    Element a = random_element(A, g), b = random_element(A, g);
    CHECK(split.first(a * b) == split.first(a) * split.first(b));
    CHECK(split.second(a * b) == split.second(a) * split.second(b));
    CHECK(norm(a) == norm(split.first(a)) * norm(split.second(a)));
  }
  CHECK_THROWS_AS(idempotent_split(Algebra{2, 3}, 0, 1), NoRepeatedClass);
}

TEST_CASE("decomposition into fields") {
  for (auto A : {Algebra{2, 2}, Algebra{1, 3}, Algebra{2, 3, 6}, Algebra{1, 1}, Algebra{-1, 2, -2, 5}}) {
    Decomposition D(A);
    std::size_t total = 0;
    for (const auto& c : D.components()) total += c.field.dim();
    CHECK(total == A.dim());
    auto g = oracle::rng(17);
    for (int k = 0; k < 10; ++k) {
      Element a = random_element(A, g), b = random_element(A, g);
      CHECK(D.lift(D.project(a)) == a);
      auto pa = D.project(a), pb = D.project(b), pab = D.project(a * b);
      for (std::size_t j = 0; j < pa.size(); ++j) CHECK(pab[j] == pa[j] * pb[j]);
    }
  }
  CHECK(Decomposition(Algebra{2, 17}).is_field());
}

TEST_CASE("square roots") {
  auto g = oracle::rng(23);
  for (auto A : {Algebra{2, 17}, Algebra{2, 2}, Algebra{-1, 3, 5}, Algebra{1, 5}}) {
    for (int k = 0; k < 8; ++k) {
      Element r = random_element(A, g);
      if (!is_unit(r)) continue;
      Element x = r * r;
      auto s = sqrt(x);
      REQUIRE(s);
      CHECK(*s * *s == x);
      auto all = all_sqrts(x);
      Decomposition D(A);
      CHECK(all.size() == (std::size_t{1} << D.components().size()));
      for (const auto& t : all) CHECK(t * t == x);
    }
  }
  Algebra F{2, 17};
  CHECK(!sqrt(Element::gen(F, 0)).has_value());
  CHECK(*sqrt_rational(F, 34 * 9) == Element::monomial(F, 3, 3));
  CHECK(!sqrt_rational(F, 3).has_value());
}

TEST_CASE("square twists") {
  Algebra F{2, 17};
  auto g = oracle::rng(29);
  for (int k = 0; k < 10; ++k) {
    Element r = random_element(F, g);
    if (!is_unit(r)) continue;
    for (long e : {1L, 3L, -5L, 7L}) {
      Element x = r * r * Rational(e);
      auto t = square_twist(x);
      REQUIRE(t);
      CHECK(field_sqrt(x * *t).has_value());
    }
  }
  CHECK(!square_twist(Element::gen(F, 0) + Element::one(F)).has_value());
}

TEST_CASE("hilbert 90") {
  Algebra F2{2};
  Element beta = hilbert90_witness(Element::scalar(F2, -1));
  CHECK(beta / apply_sigma(1, beta) == Element::scalar(F2, -1));
  CHECK(beta[0] == 0);
  CHECK(hilbert90_witness(Element::one(F2)) == Element::scalar(F2, 2));
  auto g = oracle::rng(31);
  for (auto A : {Algebra{2}, Algebra{-3}, Algebra{1}}) {
    for (int k = 0; k < 30; ++k) {
      Element x = random_element(A, g);
      if (!is_unit(x)) continue;
      Element omega = x / apply_sigma(1, x);
      Element b = hilbert90_witness(omega);
      CHECK(b / apply_sigma(1, b) == omega);
      Element ratio = b / x;
      CHECK(ratio.is_scalar());
    }
  }
  CHECK_THROWS_AS(hilbert90_witness(Element::scalar(F2, 2)), NormNotOne);
}

TEST_CASE("triple norm decomposition") {
  Algebra F{2, 17};
  Element a = Element::one(F) + Element::gen(F, 0), b = Element::one(F) + Element::gen(F, 1);
  auto f = triple_norm_decompose(a * b);
  CHECK(f.rho_a * f.rho_b * f.rho_ab == a * b);
  Element rho = el(F, {1, rat(-3, 2), 0, rat(-1, 2)});
  CHECK_THROWS_AS(triple_norm_decompose(rho), NormNotSquare);
  auto f2 = triple_norm_decompose(rho * rho);
  CHECK(f2.rho_a * f2.rho_b * f2.rho_ab == rho * rho);
  CHECK(apply_sigma(2, f2.rho_a) == f2.rho_a);
  CHECK(apply_sigma(1, f2.rho_b) == f2.rho_b);
  CHECK(apply_sigma(3, f2.rho_ab) == f2.rho_ab);
  auto g = oracle::rng(37);
  for (int k = 0; k < 20; ++k) {
    Element u = random_element(Algebra{2}, g), v = random_element(Algebra{17}, g), w = random_element(Algebra{34}, g);
    if (!is_unit(u) || !is_unit(v) || !is_unit(w)) continue;
    Element w_in_F = Element::scalar(F, w[0]) + sub_generator(F, 3) * w[1];
    Element prod = lift_sub(u, F, 1) * lift_sub(v, F, 2) * w_in_F;
    auto d = triple_norm_decompose(prod);
    CHECK(d.rho_a * d.rho_b * d.rho_ab == prod);
  }
}
