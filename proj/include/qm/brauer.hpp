#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qm/arith.hpp"
#include "qm/etale.hpp"

namespace qm::brauer {

// A place of Q: the infinite place (prime == 0) or a prime.
struct Place {
  Integer prime;  // 0 for infinity

  static Place infinity() { return Place{Integer(0)}; }
  static Place at(const Integer& p) { return Place{p}; }
  bool is_infinite() const { return prime == 0; }
  bool operator==(const Place& o) const { return prime == o.prime; }
  bool operator<(const Place& o) const;
};

std::string to_string(const Place& v);

int hilbert(const Rational& u, const Rational& v, const Place& place);
bool is_local_square(const Rational& u, const Place& place);

using Symbol = std::pair<Rational, Rational>;
using SymbolExpr = std::vector<Symbol>;
using LocalInvariantVector = std::map<Place, int>;  // values in {0,1}

std::vector<Place> relevant_places(const SymbolExpr& e);
std::vector<Place> relevant_places(const std::vector<Rational>& entries);
LocalInvariantVector local_invariants(const SymbolExpr& e);
bool is_zero(const SymbolExpr& e);
// First place with a nonzero invariant, if any.
std::optional<Place> obstruction(const SymbolExpr& e);
bool splits_over_quadratic(const SymbolExpr& e, const Rational& d);
// A place where d is a local square and e has nonzero invariant.
std::optional<Place> splitting_obstruction(const SymbolExpr& e, const Rational& d);

struct ConicPoint {
  Rational x, y, z;  // a x^2 + b y^2 = z^2, not all zero
};
struct NoPoint {
  Place obstruction;
};
std::variant<ConicPoint, NoPoint> conic_point(const Rational& a, const Rational& b);
// A point with x, y, z all nonzero (requires a point to exist and the conic to be nondegenerate).
std::optional<ConicPoint> conic_point_nonzero(const Rational& a, const Rational& b);
// Further points of a x^2 + b y^2 = z^2 obtained by sweeping lines through a base point.
std::vector<ConicPoint> conic_points(const Rational& a, const Rational& b, std::size_t count);

struct NotSplit : std::domain_error {
  explicit NotSplit(Place v) : std::domain_error("symbol does not split at " + to_string(v)), place(std::move(v)) {}
  Place place;
};
// alpha in F_a with N_a(alpha) = b exactly.
etale::Element norm_rep(const Rational& a, const Rational& b);

struct ClassesDiffer : std::domain_error {
  ClassesDiffer() : std::domain_error("quaternion classes differ") {}
};
struct CommonSlot {
  Rational w;              // (a,u) = (a,w) = (b,w) = (b,v)
  etale::Element n_a;      // N_a(n_a) = u / w
  etale::Element n_b;      // N_b(n_b) = v / w
  etale::Element n_ab;     // N_ab(n_ab) = w
};
CommonSlot common_slot(const Rational& a, const Rational& u, const Rational& b, const Rational& v);

// Deterministic search for a rational w satisfying `accept`, over +-(products of `primes`) * q
// with q = 1 or a further prime, q increasing; gives up after `max_extra_primes` values of q or
// after `max_candidates` calls to `accept`.
std::optional<Rational> search_value(const std::vector<Integer>& primes,
                                     const std::function<bool(const Rational&)>& accept,
                                     std::size_t max_extra_primes = 2000,
                                     std::size_t max_candidates = SIZE_MAX);

using DiagonalForm = std::vector<Rational>;
bool form_isotropic(const DiagonalForm& q);
// Isotropic vector of the symmetric bilinear form with Gram matrix G (search over represented values
// up to |t| <= bound for rank 4); nullopt when none was found.
std::optional<std::vector<Rational>> isotropic_vector(const std::vector<std::vector<Rational>>& G, long bound = 10000);

struct AlbertWitness {
  Rational z;
  etale::Element X, Y;  // z = mu X^2 - pi mu Y^2, hence (pi, mu z) = 0 over F_a
};
struct Unknown {
  long bound;
};
std::variant<AlbertWitness, Unknown> albert_z_search(const etale::Element& pi, const etale::Element& mu,
                                                     long bound = 10000);
bool verify_albert(const etale::Element& pi, const etale::Element& mu, const AlbertWitness& w);

// Sums of symbols (pi_i, q_i) over F_a with pi_i in F_a and q_i rational. Places of F_a are given by the
// place of Q below and a branch: 0/1 for the two places over a split place, 0 otherwise.
using QuadraticSymbolExpr = std::vector<std::pair<etale::Element, Rational>>;
struct QuadraticPlace {
  Place below;
  int branch = 0;
};
// Places of F_a where the sum has nonzero invariant (F_a may be split, then both factors are checked).
std::vector<QuadraticPlace> obstructions_over_quadratic(const QuadraticSymbolExpr& e);
bool is_zero_over_quadratic(const QuadraticSymbolExpr& e);

}  // namespace qm::brauer
