#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qm/arith.hpp"

namespace qm::etale {

using Mask = std::uint32_t;

// F_{a1,...,an}: basis vectors are products of sqrt(a_i) over subsets, subsets in binary-counter order
// (bit i of the index <-> generator i).
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<SquareClass> gens);
  Algebra(std::initializer_list<long> gens);

  std::size_t rank() const { return gens_.size(); }
  std::size_t dim() const { return std::size_t{1} << gens_.size(); }
  const SquareClass& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<SquareClass>& gens() const { return gens_; }
  Mask full_mask() const { return static_cast<Mask>(dim() - 1); }

  // sqrt(prod_{s}) * sqrt(prod_{t}) = coeff * sqrt(prod_{s xor t})
  const Integer& mono_coeff(Mask s, Mask t) const { return coeff_[s & t]; }

  Algebra restrict(Mask kept) const;

  bool operator==(const Algebra& o) const { return gens_ == o.gens_; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  std::vector<SquareClass> gens_;
  std::vector<Integer> coeff_;  // product of generators over each subset
};

struct AlgebraMismatch : std::invalid_argument {
  AlgebraMismatch() : std::invalid_argument("algebra mismatch") {}
};

struct ZeroDivisor : std::domain_error {
  explicit ZeroDivisor(std::size_t comp)
      : std::domain_error("zero divisor (vanishing idempotent component " + std::to_string(comp) + ")"),
        component(comp) {}
  std::size_t component;
};

class Element {
 public:
  Element() = default;
  explicit Element(Algebra A);
  Element(Algebra A, std::vector<Rational> coords);

  static Element scalar(const Algebra& A, const Rational& q);
  static Element one(const Algebra& A) { return scalar(A, 1); }
  static Element monomial(const Algebra& A, Mask m, const Rational& coeff = 1);
  static Element gen(const Algebra& A, std::size_t i) { return monomial(A, Mask{1} << i); }

  const Algebra& algebra() const { return alg_; }
  const std::vector<Rational>& coords() const { return c_; }
  const Rational& operator[](Mask m) const { return c_[m]; }
  Rational& operator[](Mask m) { return c_[m]; }

  bool is_zero() const;
  bool is_scalar() const;
  Rational scalar_part() const { return c_[0]; }
  // The value as a rational; throws if x is not a scalar.
  Rational to_rational() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element operator*(const Rational& q) const;
  Element operator/(const Rational& q) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  bool operator==(const Element& o) const { return alg_ == o.alg_ && c_ == o.c_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  Algebra alg_;
  std::vector<Rational> c_;
};

Element operator*(const Rational& q, const Element& x);

Element mul(const Element& x, const Element& y);
Element inv(const Element& x);
Element operator/(const Element& x, const Element& y);
bool is_unit(const Element& x);
Element power(const Element& x, unsigned k);

// sigma_S: flips the sign of sqrt(a_i) for every i in S.
Element apply_sigma(Mask sigma, const Element& x);
// Multiplicative (sigma - 1): sigma(x)/x.
Element sigma_minus_one(Mask sigma, const Element& x);

// Norm / trace down to the subalgebra on the kept generators. The result is returned in the
// subalgebra F_{kept}; use lift_sub to view it in the ambient algebra again.
Element norm_to_sub(const Element& x, Mask kept);
Element trace_to_sub(const Element& x, Mask kept);
Rational norm(const Element& x);
Rational trace(const Element& x);
Element lift_sub(const Element& y, const Algebra& ambient, Mask kept);

// Embed x into `target`, sending generator i of x's algebra to slot_map[i]; classes must match.
Element embed(const Element& x, const Algebra& target, const std::vector<std::size_t>& slot_map);

// Element sqrt(q) of A for rational q whose class is a product of generators; nullopt otherwise.
std::optional<Element> sqrt_rational(const Algebra& A, const Rational& q);

// The quadratic subalgebra Q(sqrt(prod_{i in S} a_i)) inside A as an element: its generator.
Element sub_generator(const Algebra& A, Mask S);

// Idempotent decomposition into multiquadratic fields.
struct FieldComponent {
  Algebra field;                   // independent, nontrivial generators
  std::vector<Mask> gen_mask;      // image of each generator of A: coeff * monomial(gen_mask)
  std::vector<Rational> gen_coeff;
};

class Decomposition {
 public:
  explicit Decomposition(const Algebra& A);
  const Algebra& algebra() const { return alg_; }
  const std::vector<FieldComponent>& components() const { return comps_; }
  std::vector<Element> project(const Element& x) const;
  Element lift(const std::vector<Element>& parts) const;
  bool is_field() const { return comps_.size() == 1 && comps_[0].field.rank() == alg_.rank(); }

 private:
  Algebra alg_;
  std::vector<FieldComponent> comps_;
  std::vector<std::vector<Rational>> lift_matrix_;
};

// Square roots. sqrt returns some root; all_sqrts enumerates all roots (sign per field component).
std::optional<Element> sqrt(const Element& x);
std::vector<Element> all_sqrts(const Element& x);
std::optional<Element> field_sqrt(const Element& x);  // x must live in a field component algebra

// Square classes e with e*x a square in A (A a field); returns one representative.
std::optional<Rational> square_twist(const Element& x);

// Idempotent split for a repeated class: F_{..,a(i),..,a(j),..} -> F_{.. without slot j ..}^2.
struct IdempotentSplit {
  Algebra target;
  std::size_t kept_slot;
  std::size_t dropped_slot;
  Element first(const Element& x) const;   // w -> +v
  Element second(const Element& x) const;  // w -> -v
};
IdempotentSplit idempotent_split(const Algebra& A, std::size_t i, std::size_t j);
struct NoRepeatedClass : std::invalid_argument {
  NoRepeatedClass() : std::invalid_argument("no repeated class") {}
};

// Hilbert 90 in the quadratic algebra F_d: beta with omega = beta / sigma(beta).
struct NormNotOne : std::domain_error {
  NormNotOne() : std::domain_error("norm is not 1") {}
};
Element hilbert90_witness(const Element& omega);
// Same inside an arbitrary algebra for the involution sigma, given an anti-invariant unit m.
Element hilbert90_witness(const Element& omega, Mask sigma, const Element& anti);

struct NormNotSquare : std::domain_error {
  NormNotSquare() : std::domain_error("norm is not a square") {}
};
struct TripleFactors {
  Element rho_a, rho_b, rho_ab;  // all in F_{a,b}, in the subalgebras F_a, F_b, F_ab
};
TripleFactors triple_norm_decompose(const Element& rho);

// Helper: some element of F_d with norm one that changes traces (used to perturb witnesses).
Element unit_circle_element(const Algebra& A, Mask sigma, std::size_t gen_index);

}  // namespace qm::etale
