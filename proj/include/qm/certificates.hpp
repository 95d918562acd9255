#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "qm/arith.hpp"
#include "qm/brauer.hpp"
#include "qm/etale.hpp"
#include "qm/galoisalg.hpp"
#include "qm/normgroups.hpp"

namespace qm::certificates {

using json = nlohmann::json;

// Rationals travel as "p/q" strings; integers in JSON are accepted on input.
json encode(const Rational& q);
Rational decode_rational(const json& j);
json encode(const std::vector<Rational>& v);
std::vector<Rational> decode_rationals(const json& j);
// {"classes": [...], "coords": [...]}
json encode(const etale::Element& x);
etale::Element decode_element(const json& j);
// "inf" or the prime as a string
json encode(const brauer::Place& v);
brauer::Place decode_place(const json& j);

json conic(const Rational& a, const Rational& b, const brauer::ConicPoint& p);
json symbol_obstruction(const Rational& x, const Rational& y, const brauer::Place& v);
// Member -> "norm", NonMember -> "local_obstruction" or "omega_obstruction", Unknown -> "unknown".
json membership(const Rational& u, const std::vector<Rational>& groups, const normgroups::Verdict& v);
json biquadratic_membership(const Rational& u, const Rational& b, const Rational& c, const normgroups::Verdict& v);
json u4(const galoisalg::U4Data& d);
json glue(const galoisalg::GlueData& g);
json norm_identity(const etale::Element& x, const Rational& value);
json rst(const galoisalg::RSTData& r);
json alpha_delta(const Rational& a, const etale::Element& alpha, const etale::Element& delta, const Rational& x,
             const Rational& y);

struct Check {
  bool ok = false;
  std::string kind;
  std::string detail;
};
// Re-checks one certificate from scratch; malformed input gives ok = false with a reason.
Check verify(const json& cert);
// Every certificate and obstruction inside a response envelope (or a bare certificate, or an array).
std::vector<Check> verify_all(const json& doc);

}  // namespace qm::certificates
