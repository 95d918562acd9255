#include "qm/certificates.hpp"

#include <stdexcept>

#include "qm/massey.hpp"

namespace qm::certificates {

using brauer::Place;
using etale::Algebra;
using etale::Element;

json encode(const Rational& q) { return to_string(q); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as a \"p/q\" string");
}

json encode(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(encode(q));
  return out;
}

std::vector<Rational> decode_rationals(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(decode_rational(x));
  return out;
}

json encode(const Element& x) {
  json classes = json::array();
  for (const auto& g : x.algebra().gens()) classes.push_back(to_string(g.value()));
  return {{"classes", classes}, {"coords", encode(x.coords())}};
}

Element decode_element(const json& j) {
  std::vector<SquareClass> gens;
  for (const auto& c : j.at("classes")) gens.emplace_back(decode_rational(c));
  Algebra A(gens);
  auto coords = decode_rationals(j.at("coords"));
  if (coords.size() != A.dim()) throw std::invalid_argument("coordinate count does not match the algebra");
  return Element(A, coords);
}

json encode(const Place& v) { return v.is_infinite() ? std::string("inf") : to_string(v.prime); }

Place decode_place(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : std::to_string(j.get<long>());
  if (s == "inf") return Place::infinity();
  Integer p(s);
  if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument("not a place: " + s);
  return Place::at(p);
}

json conic(const Rational& a, const Rational& b, const brauer::ConicPoint& p) {
  return {{"kind", "conic"}, {"a", encode(a)}, {"b", encode(b)}, {"point", encode(std::vector<Rational>{p.x, p.y, p.z})}};
}

json symbol_obstruction(const Rational& x, const Rational& y, const Place& v) {
  return {{"kind", "symbol_obstruction"}, {"x", encode(x)}, {"y", encode(y)}, {"place", encode(v)}};
}

namespace {

json omega_json(const Rational& u, const normgroups::OmegaObstruction& ob) {
  json places = json::array();
  for (const auto& p : ob.places) places.push_back(encode(p));
  json out = {{"kind", "omega_obstruction"}, {"u", encode(u)},         {"value", encode(ob.value)},
              {"x", encode(ob.x)},           {"y", encode(ob.y)},      {"omega", normgroups::omega(ob.value, ob.x, ob.y)},
              {"places", places}};
  if (ob.scaled_preimage) out["preimage"] = encode(*ob.scaled_preimage);
  return out;
}

normgroups::OmegaObstruction omega_from_json(const json& j) {
  normgroups::OmegaObstruction ob{decode_rational(j.at("value")), decode_rational(j.at("x")),
                                  decode_rational(j.at("y")), {}, std::nullopt};
  for (const auto& p : j.at("places")) ob.places.push_back(decode_place(p));
  if (j.contains("preimage")) ob.scaled_preimage = decode_element(j.at("preimage"));
  return ob;
}

json nonmember_json(const Rational& u, const normgroups::NonMember& n) {
  if (const auto* v = std::get_if<Place>(&n.obstruction))
    return {{"kind", "local_obstruction"}, {"u", encode(u)}, {"place", encode(*v)}};
  return omega_json(u, std::get<normgroups::OmegaObstruction>(n.obstruction));
}

json elements(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(encode(x));
  return out;
}

}  // namespace

json membership(const Rational& u, const std::vector<Rational>& groups, const normgroups::Verdict& v) {
  json out;
  if (const auto* m = std::get_if<normgroups::Member>(&v))
    out = {{"kind", "norm"}, {"u", encode(u)}, {"factors", elements(m->factors)}};
  else if (const auto* n = std::get_if<normgroups::NonMember>(&v))
    out = nonmember_json(u, *n);
  else
    out = {{"kind", "unknown"}, {"u", encode(u)}, {"bound", std::get<normgroups::Unknown>(v).bound}};
  out["groups"] = encode(groups);
  return out;
}

json biquadratic_membership(const Rational& u, const Rational& b, const Rational& c, const normgroups::Verdict& v) {
  json out;
  if (const auto* m = std::get_if<normgroups::Member>(&v))
    out = {{"kind", "norm_biquadratic"}, {"u", encode(u)}, {"xi", encode(m->factors.at(0))}};
  else if (const auto* n = std::get_if<normgroups::NonMember>(&v))
    out = nonmember_json(u, *n);
  else
    out = {{"kind", "unknown"}, {"u", encode(u)}, {"bound", std::get<normgroups::Unknown>(v).bound}};
  out["biquadratic"] = encode(std::vector<Rational>{b, c});
  return out;
}

json u4(const galoisalg::U4Data& d) {
  return {{"kind", "u4"}, {"a", encode(d.a)}, {"b", encode(d.b)}, {"c", encode(d.c)}, {"eps", encode(d.eps)},
          {"x", encode(d.x)}};
}

json glue(const galoisalg::GlueData& g) {
  return {{"kind", "glue"},        {"a", encode(g.a)},     {"b", encode(g.b)},         {"c", encode(g.c)},
          {"d", encode(g.d)},      {"eps", encode(g.eps)}, {"nu", encode(g.nu)},       {"omega", encode(g.omega)},
          {"e", encode(g.e)}};
}

json norm_identity(const Element& x, const Rational& value) {
  return {{"kind", "norm_identity"}, {"element", encode(x)}, {"value", encode(value)}};
}

json rst(const galoisalg::RSTData& r) {
  return {{"kind", "rst"},
          {"abcd", encode(std::vector<Rational>{r.a, r.b, r.c, r.d})},
          {"points", encode(std::vector<Rational>{r.v1, r.v2, r.u1, r.u2})},
          {"rst", encode(std::vector<Rational>{r.r, r.s, r.t})}};
}

json alpha_delta(const Rational& a, const Element& alpha, const Element& delta, const Rational& x, const Rational& y) {
  return {{"kind", "alpha_delta"}, {"a", encode(a)}, {"alpha", encode(alpha)}, {"delta", encode(delta)},
          {"x", encode(x)},    {"y", encode(y)}};
}

namespace {

bool check_cert(const std::string& kind, const json& j, std::string& detail) {
  if (kind == "conic") {
    auto p = decode_rationals(j.at("point"));
    if (p.size() != 3 || (p[0] == 0 && p[1] == 0 && p[2] == 0)) return false;
    return decode_rational(j.at("a")) * p[0] * p[0] + decode_rational(j.at("b")) * p[1] * p[1] == p[2] * p[2];
  }
  if (kind == "symbol_obstruction")
    return brauer::hilbert(decode_rational(j.at("x")), decode_rational(j.at("y")), decode_place(j.at("place"))) == -1;
  if (kind == "norm") {
    normgroups::Member m;
    for (const auto& e : j.at("factors")) m.factors.push_back(decode_element(e));
    return normgroups::verify_member(decode_rational(j.at("u")), decode_rationals(j.at("groups")), m);
  }
  if (kind == "norm_biquadratic") {
    auto bc = decode_rationals(j.at("biquadratic"));
    if (bc.size() != 2) return false;
    return normgroups::verify_member_biquadratic(decode_rational(j.at("u")), bc[0], bc[1],
                                                 normgroups::Member{{decode_element(j.at("xi"))}});
  }
  if (kind == "local_obstruction") {
    normgroups::NonMember n{decode_place(j.at("place"))};
    Rational u = decode_rational(j.at("u"));
    if (j.contains("biquadratic")) {
      auto bc = decode_rationals(j.at("biquadratic"));
      return bc.size() == 2 && normgroups::verify_nonmember_biquadratic(u, bc[0], bc[1], n);
    }
    return normgroups::verify_nonmember(u, decode_rationals(j.at("groups")), n);
  }
  if (kind == "omega_obstruction") {
    auto ob = omega_from_json(j);
    if (j.at("omega").get<int>() != -1 || normgroups::omega(ob.value, ob.x, ob.y) != -1) {
      detail = "omega does not evaluate to -1";
      return false;
    }
    Rational u = decode_rational(j.at("u"));
    normgroups::NonMember n{ob};
    if (j.contains("biquadratic")) {
      auto bc = decode_rationals(j.at("biquadratic"));
      return bc.size() == 2 && normgroups::verify_nonmember_biquadratic(u, bc[0], bc[1], n);
    }
    return normgroups::verify_nonmember(u, decode_rationals(j.at("groups")), n);
  }
  if (kind == "u4") {
    galoisalg::U4Data d{decode_rational(j.at("a")), decode_rational(j.at("b")), decode_rational(j.at("c")),
                        decode_element(j.at("eps")), decode_rational(j.at("x"))};
    return galoisalg::build_u4(d).report.ok();
  }
  if (kind == "glue") {
    galoisalg::GlueData g{decode_rational(j.at("a")),    decode_rational(j.at("b")),  decode_rational(j.at("c")),
                          decode_rational(j.at("d")),    decode_element(j.at("eps")), decode_element(j.at("nu")),
                          decode_element(j.at("omega")), decode_rational(j.at("e"))};
    return galoisalg::glue_check(g);
  }
  if (kind == "norm_identity") return etale::norm(decode_element(j.at("element"))) == decode_rational(j.at("value"));
  if (kind == "rst") {
    auto abcd = decode_rationals(j.at("abcd")), pts = decode_rationals(j.at("points")), want = decode_rationals(j.at("rst"));
    if (abcd.size() != 4 || pts.size() != 4 || want.size() != 3) return false;
    auto R = galoisalg::rst_from_points(abcd[0], abcd[1], abcd[2], abcd[3], pts[0], pts[1], pts[2], pts[3]);
    return R.r == want[0] && R.s == want[1] && R.t == want[2];
  }
  if (kind == "alpha_delta") {
    Rational a = decode_rational(j.at("a"));
    auto g = massey::alpha_delta_condition(a, a, decode_element(j.at("alpha")), decode_element(j.at("delta")),
                                       decode_rational(j.at("x")), decode_rational(j.at("y")));
    return g.holds == massey::Tri::Yes;
  }
  detail = "unknown certificate kind";
  return false;
}

}  // namespace

Check verify(const json& cert) {
  Check out;
  try {
    out.kind = cert.at("kind").get<std::string>();
    out.ok = check_cert(out.kind, cert, out.detail);
    if (!out.ok && out.detail.empty()) out.detail = "certificate does not check";
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = e.what();
  }
  return out;
}

std::vector<Check> verify_all(const json& doc) {
  std::vector<Check> out;
  if (doc.is_array()) {
    for (const auto& x : doc) {
      auto sub = verify_all(x);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (doc.is_object() && doc.contains("kind")) {
    out.push_back(verify(doc));
  } else if (doc.is_object()) {
    for (const char* key : {"certificates", "obstructions"})
      if (doc.contains(key))
        for (const auto& c : doc.at(key)) out.push_back(verify(c));
  }
  return out;
}

}  // namespace qm::certificates
