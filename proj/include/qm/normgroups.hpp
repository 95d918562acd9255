#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qm/arith.hpp"
#include "qm/brauer.hpp"
#include "qm/etale.hpp"

namespace qm::normgroups {

using brauer::Place;
using etale::Element;

// factors[i] lives in F_{g_i}; the product of their norms is u exactly.
// For the biquadratic query there is a single factor in F_{b,c}.
struct Member {
  std::vector<Element> factors;
};

// value does not lie in N_x N_y N_xy: the product of (y, value)_v over the listed places,
// which are the relevant places where x is a local square, is -1.
struct OmegaObstruction {
  Rational value, x, y;
  std::vector<Place> places;  // places where x is a local square and (y, value)_v = -1
  // Biquadratic queries: xi in F_{x,y} with norm u * value^2, so u is a norm iff value^2 is.
  std::optional<Element> scaled_preimage;
};

struct NonMember {
  std::variant<Place, OmegaObstruction> obstruction;
};

struct Unknown {
  long bound;
};

using Verdict = std::variant<Member, NonMember, Unknown>;

inline bool is_member(const Verdict& v) { return std::holds_alternative<Member>(v); }
inline bool is_nonmember(const Verdict& v) { return std::holds_alternative<NonMember>(v); }
inline bool is_unknown(const Verdict& v) { return std::holds_alternative<Unknown>(v); }

// The product over the relevant places v with x a square in Q_v of (y, u)_v.
int omega(const Rational& u, const Rational& x, const Rational& y);
// Some place where none of x, y, xy is a local square (the biquadratic algebra has a degree 4 completion).
std::optional<Place> full_local_degree_place(const Rational& x, const Rational& y);
// u lies in the product of the local norm groups N_{g}(Q_v^x).
bool locally_in_product(const Rational& u, const std::vector<Rational>& groups, const Place& v);

Verdict member_single(const Rational& u, const Rational& a);
Verdict member_double(const Rational& u, const Rational& x, const Rational& y);
Verdict member_triple_sym(const Rational& u, const Rational& x, const Rational& y);
Verdict member_biquadratic(const Rational& u, const Rational& b, const Rational& c);
// `bound` caps the number of candidate values tried by the certificate search.
Verdict member_triple_general(const Rational& u, const Rational& g1, const Rational& g2, const Rational& g3,
                              long bound = 20000);
// Dispatch on the number of groups (1, 2 or 3).
Verdict member(const Rational& u, const std::vector<Rational>& groups, long bound = 20000);

bool verify_member(const Rational& u, const std::vector<Rational>& groups, const Member& m);
bool verify_member_biquadratic(const Rational& u, const Rational& b, const Rational& c, const Member& m);
// Re-checks a local obstruction for the norm product, or an omega obstruction for N_x N_y N_xy.
bool verify_nonmember(const Rational& u, const std::vector<Rational>& groups, const NonMember& n);

bool verify_nonmember_biquadratic(const Rational& u, const Rational& b, const Rational& c, const NonMember& n);

std::string describe(const Verdict& v);

}  // namespace qm::normgroups
