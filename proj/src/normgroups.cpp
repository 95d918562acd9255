#include "qm/normgroups.hpp"

#include <set>
#include <sstream>

namespace qm::normgroups {

using brauer::SymbolExpr;
using etale::Algebra;

namespace {

Algebra quadratic(const Rational& g) { return Algebra({SquareClass(g)}); }
Element one_in(const Rational& g) { return Element::one(quadratic(g)); }

std::vector<Integer> search_primes(const std::vector<Rational>& values) {
  std::set<Integer> primes{Integer(2)};
  for (const auto& q : values)
    for (const auto& p : prime_support(q)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

bool splits(const Rational& a, const Rational& b) { return brauer::is_zero(SymbolExpr{{a, b}}); }

// u in N_x N_y without building a certificate.
bool double_holds(const Rational& u, const Rational& x, const Rational& y) {
  if (SquareClass(x).is_one() || SquareClass(y).is_one()) return true;
  return brauer::splits_over_quadratic(SymbolExpr{{x, u}}, x * y);
}

Member trivial_slot(const Rational& u, const std::vector<Rational>& groups, std::size_t slot) {
  Member m;
  for (std::size_t i = 0; i < groups.size(); ++i)
    m.factors.push_back(i == slot ? brauer::norm_rep(groups[i], u) : one_in(groups[i]));
  return m;
}

std::optional<std::size_t> square_slot(const std::vector<Rational>& groups) {
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (SquareClass(groups[i]).is_one()) return i;
  return std::nullopt;
}

Verdict checked(Verdict v, const Rational& u, const std::vector<Rational>& groups) {
  if (auto* m = std::get_if<Member>(&v))
    if (!verify_member(u, groups, *m)) throw std::logic_error("norm product certificate failed verification");
  return v;
}

}  // namespace

int omega(const Rational& u, const Rational& x, const Rational& y) {
  int s = 1;
  for (const auto& v : brauer::relevant_places(std::vector<Rational>{u, x, y}))
    if (brauer::is_local_square(x, v)) s *= brauer::hilbert(y, u, v);
  return s;
}

std::optional<Place> full_local_degree_place(const Rational& x, const Rational& y) {
  for (const auto& v : brauer::relevant_places(std::vector<Rational>{x, y}))
    if (!brauer::is_local_square(x, v) && !brauer::is_local_square(y, v) && !brauer::is_local_square(x * y, v))
      return v;
  return std::nullopt;
}

bool locally_in_product(const Rational& u, const std::vector<Rational>& groups, const Place& v) {
  if (groups.empty()) throw std::invalid_argument("empty norm product");
  for (const auto& g : groups)
    if (brauer::is_local_square(g, v)) return true;
  for (std::size_t i = 1; i < groups.size(); ++i)
    if (!brauer::is_local_square(groups[0] * groups[i], v)) return true;
  return brauer::hilbert(groups[0], u, v) == 1;
}

Verdict member_single(const Rational& u, const Rational& a) {
  if (auto v = brauer::obstruction(SymbolExpr{{a, u}})) return NonMember{*v};
  return checked(Member{{brauer::norm_rep(a, u)}}, u, {a});
}

Verdict member_double(const Rational& u, const Rational& x, const Rational& y) {
  std::vector<Rational> groups{x, y};
  if (auto s = square_slot(groups)) return checked(trivial_slot(u, groups, *s), u, groups);
  if (auto v = brauer::splitting_obstruction(SymbolExpr{{x, u}}, x * y)) return NonMember{*v};
  auto w = brauer::search_value(search_primes({u, x, y}),
                                [&](const Rational& w) { return splits(y, w) && splits(x, u / w); });
  if (!w) throw std::logic_error("member_double: certificate search exhausted");
  return checked(Member{{brauer::norm_rep(x, u / *w), brauer::norm_rep(y, *w)}}, u, groups);
}

Verdict member_triple_sym(const Rational& u, const Rational& x, const Rational& y) {
  std::vector<Rational> groups{x, y, x * y};
  if (auto s = square_slot(groups)) return checked(trivial_slot(u, groups, *s), u, groups);
  if (!full_local_degree_place(x, y) && omega(u, x, y) == -1) {
    OmegaObstruction ob{u, x, y, {}, std::nullopt};
    for (const auto& v : brauer::relevant_places(std::vector<Rational>{u, x, y}))
      if (brauer::is_local_square(x, v) && brauer::hilbert(y, u, v) == -1) ob.places.push_back(v);
    return NonMember{ob};
  }
  auto w = brauer::search_value(search_primes({u, x, y}), [&](const Rational& w) {
    return splits(x * y, w) && double_holds(u / w, x, y);
  });
  if (!w) throw std::logic_error("member_triple_sym: certificate search exhausted");
  auto d = std::get<Member>(member_double(u / *w, x, y));
  return checked(Member{{d.factors[0], d.factors[1], brauer::norm_rep(x * y, *w)}}, u, groups);
}

Verdict member_biquadratic(const Rational& u, const Rational& b, const Rational& c) {
  Algebra A({SquareClass(b), SquareClass(c)});
  etale::Decomposition D(A);
  auto finish = [&](Element xi) -> Verdict {
    Member m{{std::move(xi)}};
    if (!verify_member_biquadratic(u, b, c, m)) throw std::logic_error("biquadratic certificate failed verification");
    return m;
  };
  if (!D.is_field()) {
    const auto& comps = D.components();
    std::vector<Element> parts;
    for (const auto& comp : comps) parts.push_back(Element::one(comp.field));
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (comps[j].field.rank() == 0) {
        parts[j] = Element::scalar(comps[j].field, u);
        return finish(D.lift(parts));
      }
    // every component is the same quadratic field
    Rational d = comps[0].field.gen(0).as_rational();
    auto single = member_single(u, d);
    if (auto* n = std::get_if<NonMember>(&single)) return *n;
    parts[0] = std::get<Member>(single).factors[0];
    return finish(D.lift(parts));
  }
  for (const auto& g : {b, c})
    if (auto v = brauer::obstruction(SymbolExpr{{g, u}})) return NonMember{*v};
  Element rho = brauer::norm_rep(b, u), mu = brauer::norm_rep(c, u);
  Rational d = etale::trace(rho) + etale::trace(mu);
  if (d == 0) {
    rho = -rho;
    d = etale::trace(rho) + etale::trace(mu);
  }
  Element turn = etale::unit_circle_element(rho.algebra(), 1, 0);
  while (d == 0) {
    rho = rho * turn;
    d = etale::trace(rho) + etale::trace(mu);
  }
  Element lifted = etale::lift_sub(rho, A, 1) + etale::lift_sub(mu, A, 2);  // norm u d^2
  auto sym = member_triple_sym(d, b, c);
  if (auto* n = std::get_if<NonMember>(&sym)) {
    auto& ob = std::get<OmegaObstruction>(n->obstruction);
    ob.scaled_preimage = lifted;
    return *n;
  }
  const auto& f = std::get<Member>(sym).factors;
  Element fbc = Element::scalar(A, f[2][0]) + etale::sub_generator(A, 3) * f[2][1];
  Element denom = etale::lift_sub(f[0], A, 1) * etale::lift_sub(f[1], A, 2) * fbc;
  return finish(lifted / denom);
}

Verdict member_triple_general(const Rational& u, const Rational& g1, const Rational& g2, const Rational& g3,
                              long bound) {
  std::vector<Rational> groups{g1, g2, g3};
  if (auto s = square_slot(groups)) return checked(trivial_slot(u, groups, *s), u, groups);
  std::vector<SquareClass> cls;
  for (const auto& g : groups) cls.emplace_back(g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      std::size_t k = 3 - i - j;
      if (cls[i] == cls[j]) {
        auto r = member_double(u, groups[i], groups[k]);
        if (auto* m = std::get_if<Member>(&r)) {
          Member out{{one_in(g1), one_in(g2), one_in(g3)}};
          out.factors[i] = m->factors[0];
          out.factors[k] = m->factors[1];
          return checked(out, u, groups);
        }
        return r;
      }
    }
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
    if (cls[k] != cls[i] * cls[j]) continue;
    auto r = member_triple_sym(u, groups[i], groups[j]);
    if (auto* m = std::get_if<Member>(&r)) {
      Member out{{one_in(g1), one_in(g2), one_in(g3)}};
      out.factors[i] = m->factors[0];
      out.factors[j] = m->factors[1];
      out.factors[k] = m->factors[2];
      return checked(out, u, groups);
    }
    return r;
  }
  for (const auto& v : brauer::relevant_places(std::vector<Rational>{u, g1, g2, g3}))
    if (!locally_in_product(u, groups, v)) return NonMember{v};
  if (bound <= 0) return Unknown{bound};
  auto w = brauer::search_value(
      search_primes({u, g1, g2, g3}), [&](const Rational& w) { return splits(g3, w) && double_holds(u / w, g1, g2); },
      2000, static_cast<std::size_t>(bound));
  if (!w) return Unknown{bound};
  auto d = std::get<Member>(member_double(u / *w, g1, g2));
  return checked(Member{{d.factors[0], d.factors[1], brauer::norm_rep(g3, *w)}}, u, groups);
}

Verdict member(const Rational& u, const std::vector<Rational>& groups, long bound) {
  if (sgn(u) == 0) throw std::invalid_argument("u must be nonzero");
  for (const auto& g : groups)
    if (sgn(g) == 0) throw std::invalid_argument("group classes must be nonzero");
  switch (groups.size()) {
    case 1:
      return member_single(u, groups[0]);
    case 2:
      return member_double(u, groups[0], groups[1]);
    case 3:
      return member_triple_general(u, groups[0], groups[1], groups[2], bound);
    default:
      throw std::invalid_argument("expected 1 to 3 norm groups");
  }
}

bool verify_member(const Rational& u, const std::vector<Rational>& groups, const Member& m) {
  if (m.factors.size() != groups.size()) return false;
  Rational prod = 1;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (m.factors[i].algebra() != quadratic(groups[i])) return false;
    prod *= etale::norm(m.factors[i]);
  }
  return prod == u;
}

bool verify_member_biquadratic(const Rational& u, const Rational& b, const Rational& c, const Member& m) {
  if (m.factors.size() != 1) return false;
  if (m.factors[0].algebra() != Algebra({SquareClass(b), SquareClass(c)})) return false;
  return etale::norm(m.factors[0]) == u;
}

bool verify_nonmember(const Rational& u, const std::vector<Rational>& groups, const NonMember& n) {
  if (const auto* v = std::get_if<Place>(&n.obstruction)) return !locally_in_product(u, groups, *v);
  const auto& ob = std::get<OmegaObstruction>(n.obstruction);
  if (ob.value != u || groups.size() != 3) return false;
  std::multiset<SquareClass> want{SquareClass(ob.x), SquareClass(ob.y), SquareClass(ob.x * ob.y)}, have;
  for (const auto& g : groups) have.insert(SquareClass(g));
  if (want != have) return false;
  for (const auto& c : want)
    if (c.is_one()) return false;
  return !full_local_degree_place(ob.x, ob.y) && omega(u, ob.x, ob.y) == -1;
}

bool verify_nonmember_biquadratic(const Rational& u, const Rational& b, const Rational& c, const NonMember& n) {
  if (const auto* v = std::get_if<Place>(&n.obstruction))
    return brauer::hilbert(b, u, *v) == -1 || brauer::hilbert(c, u, *v) == -1;
  const auto& ob = std::get<OmegaObstruction>(n.obstruction);
  if (!ob.scaled_preimage) return false;
  const Element& xi = *ob.scaled_preimage;
  if (xi.algebra() != Algebra({SquareClass(b), SquareClass(c)})) return false;
  if (etale::norm(xi) != u * ob.value * ob.value) return false;
  return verify_nonmember(ob.value, {b, c, b * c}, NonMember{ob});
}

std::string describe(const Verdict& v) {
  std::ostringstream out;
  if (const auto* m = std::get_if<Member>(&v)) {
    out << "member (" << m->factors.size() << " factor" << (m->factors.size() == 1 ? "" : "s") << ")";
  } else if (const auto* n = std::get_if<NonMember>(&v)) {
    if (const auto* p = std::get_if<Place>(&n->obstruction))
      out << "not a member: local obstruction at " << brauer::to_string(*p);
    else
      out << "not a member: omega(" << to_string(std::get<OmegaObstruction>(n->obstruction).value) << ") = -1";
  } else {
    out << "unknown (search bound " << std::get<Unknown>(v).bound << ")";
  }
  return out.str();
}

}  // namespace qm::normgroups
