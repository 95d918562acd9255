#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qm/arith.hpp"
#include "qm/brauer.hpp"
#include "qm/etale.hpp"
#include "qm/unipotent.hpp"

namespace qm::galoisalg {

using etale::Algebra;
using etale::Element;
using etale::Mask;

struct InvariantViolated : std::domain_error {
  explicit InvariantViolated(const std::string& what) : std::domain_error(what) {}
};

// q * monomial(mask) squaring to `value`; the class of value must be the monomial's class.
Element scaled_root(const Algebra& A, Mask mask, const Rational& value);
// x in F_u viewed inside A, sending sqrt(u) to sub_generator(A, mask); classes must agree.
Element lift_quadratic(const Element& x, const Algebra& A, Mask mask);
// (sigma_1 - 1)(sigma_2 - 1) omega, multiplicatively.
Element double_difference(const Element& omega, Mask s1, Mask s2);

// B[T_1..T_k] / (T_i^2 - theta_i) for units theta_i of the base B. An element is a list of
// coefficients in B indexed by subsets S of levels (the coefficient of T^S).
struct TowerElement {
  std::vector<Element> parts;
};

// Ring automorphism acting as sigma on B and as T_i -> coeff[i] * T^{target[i]}.
struct TowerMap {
  Mask base_sigma = 0;
  std::vector<Element> coeff;
  std::vector<Mask> target;
  bool operator==(const TowerMap& o) const {
    return base_sigma == o.base_sigma && coeff == o.coeff && target == o.target;
  }
};

class Tower {
 public:
  Tower(Algebra base, std::vector<Element> theta);

  const Algebra& base() const { return base_; }
  std::size_t levels() const { return theta_.size(); }
  std::size_t dim() const { return base_.dim() << levels(); }
  const Element& theta(std::size_t i) const { return theta_[i]; }
  // product of theta_i over i in S
  const Element& theta_product(Mask S) const { return theta_prod_[S]; }

  TowerElement zero() const;
  TowerElement from_base(const Element& b) const;
  TowerElement monomial(Mask S, const Element& b) const;
  // flattened basis: index S * dim(B) + m
  TowerElement basis(std::size_t index) const;
  std::vector<Rational> coords(const TowerElement& x) const;

  TowerElement add(const TowerElement& x, const TowerElement& y) const;
  TowerElement mul(const TowerElement& x, const TowerElement& y) const;
  bool equal(const TowerElement& x, const TowerElement& y) const;

  TowerMap identity_map() const;
  // image of T^S as coeff * T^{mask}
  std::pair<Element, Mask> monomial_image(const TowerMap& f, Mask S) const;
  TowerElement apply(const TowerMap& f, const TowerElement& x) const;
  TowerMap compose(const TowerMap& f, const TowerMap& g) const;  // f after g
  TowerMap inverse(const TowerMap& f) const;
  TowerMap evaluate(const std::vector<TowerMap>& gens, const unipotent::Word& w) const;
  // Defining relations, bijectivity, and f(gy) = f(g) f(y) for generators g and basis vectors y.
  bool is_automorphism(const TowerMap& f) const;
  // Dimension of the common fixed space of the maps.
  std::size_t fixed_dimension(const std::vector<TowerMap>& maps) const;

 private:
  Algebra base_;
  std::vector<Element> theta_;
  std::vector<Element> theta_prod_;
};

struct ActionReport {
  std::size_t dim = 0;
  bool automorphisms = false;
  bool relations = false;
  std::size_t kernel_fixed_dim = 0;  // fixed by the kernel of U -> (Z/2)^n
  bool kernel_fixed_is_base = false;
  std::size_t group_fixed_dim = 0;
  bool ok() const { return automorphisms && relations && kernel_fixed_is_base && group_fixed_dim == 1; }
};

// (F_{a,b})_alpha with sigma_a(sqrt alpha) = x sqrt(b) / sqrt(alpha), sigma_b(sqrt alpha) = sqrt(alpha).
struct U3Data {
  Rational a, b;
  Element alpha;  // in F_a
  Rational x;
};
struct U3Algebra {
  U3Data data;
  Tower tower;
  TowerMap sigma_a, sigma_b;
  unsigned commutator_order = 0;
  ActionReport report;
};
U3Algebra build_u3(const U3Data& d);
// sigma_b is an isomorphism from the algebra built with x to the one built with -x, compatible with the actions.
bool minus_x_isomorphism(const U3Data& d);

// Is (F_{a,b})_alpha isomorphic to (F_{a,b})_beta, where beta in F_b has N_b(beta) = a y^2 and
// sigma_b(sqrt beta) = y sqrt(a) / sqrt(beta)?  Witness: omega in F_{a,b} with omega^2 = alpha beta and
// (sigma_a - 1)(sigma_b - 1) omega = -1; then sqrt(alpha) -> omega / sqrt(beta) is equivariant for the
// sign choices recorded (x -> x_sign * x, y -> y_sign * y).
struct U3Iso {
  Element omega;
  int x_sign = 1, y_sign = 1;
};
struct U3IsoFailure {
  enum class Reason { NotSquare, SignFails } reason;
};
std::variant<U3Iso, U3IsoFailure> u3_iso_test(const U3Data& d, const Element& beta, const Rational& y);

// (F_{a,b,c})_{N_c(eps), N_a(eps), eps}; N_{a,c}(eps) = b x^2.
struct U4Data {
  Rational a, b, c;
  Element eps;  // in F_{a,c}
  Rational x;
};
struct U4Algebra {
  U4Data data;
  Tower tower;
  TowerMap sigma_a, sigma_b, sigma_c;
  ActionReport report;
};
U4Algebra build_u4(const U4Data& d);

// N_a(eps) in F_c and N_c(eps) in F_a for eps in F_{a,c}
Element norm_a(const Element& eps);
Element norm_c(const Element& eps);
// N_a(eps) N_d(nu) in F_{b,c} (b in slot 0, c in slot 1)
Element glue_product(const Element& eps, const Element& nu);

struct GlueData {
  Rational a, b, c, d;
  Element eps;    // F_{a,c}
  Element nu;     // F_{b,d}
  Element omega;  // F_{b,c}
  Rational e;
};
struct GlueReport {
  bool norm_ac = false;   // N_{a,c}(eps) in b Q^x2
  bool norm_bd = false;   // N_{b,d}(nu) in c Q^x2
  bool product = false;   // N_a(eps) N_d(nu) = e omega^2
  bool sign = false;      // (sigma_b - 1)(sigma_c - 1) omega = -1
  bool e_square = false;
  bool defined() const { return norm_ac && norm_bd && product && sign && e_square; }
};
GlueReport glue_report(const GlueData& g);
bool glue_check(const GlueData& g);

// Factors whose norms multiply to e; absorbing them gives glue data with e = 1.
struct CosetFactors {
  std::optional<Element> eps_a, eps_ac, nu_d, nu_bd;  // in F_a, F_ac, F_d, F_bd
};
GlueData absorb(const GlueData& g, const CosetFactors& f);

struct RSTData {
  Rational a, b, c, d;
  Rational v1, v2, u1, u2;
  Rational r, s, t, l, f;
  Element alpha, delta;  // l v1 + l sqrt(a) in F_a, l u1 + l sqrt(d) in F_d
};
struct SymbolObstruction {
  Rational x, y;
  brauer::Place place;
};
struct Degenerate : std::domain_error {
  Degenerate() : std::domain_error("degenerate conic points") {}
};
// v1^2 - b v2^2 = a, u1^2 - c u2^2 = d, nondegenerate, b + c = 1.
RSTData rst_from_points(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const Rational& v1, const Rational& v2, const Rational& u1, const Rational& u2);
std::variant<RSTData, SymbolObstruction> rst_build(const Rational& a, const Rational& b, const Rational& c,
                                                   const Rational& d, std::size_t sweep = 48);

// b' = b X^2 / Z^2, c' = c Y^2 / Z^2 from a point of b X^2 + c Y^2 = Z^2, so that b' + c' = 1.
struct Normalization {
  Rational b, c;
  brauer::ConicPoint point;
  Rational b_scaled, c_scaled;
};
std::variant<Normalization, SymbolObstruction> normalize_bc(const Rational& b, const Rational& c);

// eps = v1/v2 + sqrt(a)/v2 + 1 + sqrt(c), nu = 1 + sqrt(b) + u1/u2 + sqrt(d)/u2,
// omega = (1 + sqrt(b) + sqrt(c)) / (v2 u2), e = r.
GlueData lambda_glue(const RSTData& rst);
// x with N_{a,c}(eps) = b x^2 and y with N_{b,d}(nu) = c y^2 for the glue data above
Rational lambda_x(const RSTData& rst);
Rational lambda_y(const RSTData& rst);

struct EInvariant {
  Rational e;
  Element omega;
  int sign = 0;  // (sigma_b - 1)(sigma_c - 1) omega
};
struct NoOmega {
  Element product;  // N_a(eps) N_d(nu)
};
// e and omega with N_a(eps) N_d(nu) = e omega^2, preferring sign -1. With rst data, the closed-form omega is
// tried first.
std::variant<EInvariant, NoOmega> e_invariant(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d, const Element& eps, const Element& nu,
                                              const std::optional<RSTData>& hint = std::nullopt);

// Points of the torsor (sigma_c - 1) omega = x sqrt(b) / N_a(eps), (sigma_b - 1) omega = y sqrt(c) / N_d(nu),
// N_a(eps) N_d(nu) = omega^2.
struct SplittingPoint {
  Rational a, b, c, d;
  Element eps, nu;
  Rational x, y;
  Element omega;
};
struct SplittingReport {
  bool eq1 = false, eq2 = false, eq3 = false;
  std::optional<Rational> x_recovered, y_recovered;  // from omega; must be rational
  bool ok() const { return eq1 && eq2 && eq3 && x_recovered && y_recovered; }
};
SplittingReport splitting_point_check(const SplittingPoint& p);
// Point attached to glue data with e a square.
SplittingPoint splitting_point_from_glue(const GlueData& g);
// (eps, sigma_b nu, -x, y, sigma_b omega)
SplittingPoint flip_sign(const SplittingPoint& p);

}  // namespace qm::galoisalg
