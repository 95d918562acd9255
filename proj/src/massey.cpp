#include "qm/massey.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qm/brauer.hpp"
#include "qm/certificates.hpp"

namespace qm::massey {

using brauer::Place;
using brauer::SymbolExpr;
using etale::Algebra;
using etale::Element;
using galoisalg::RSTData;
namespace cert = certificates;

std::string to_string(Tri t) {
  switch (t) {
    case Tri::No:
      return "no";
    case Tri::Yes:
      return "yes";
    default:
      return "unknown";
  }
}

namespace {

nlohmann::json tri_json(Tri t) {
  if (t == Tri::Unknown) return "unknown";
  return t == Tri::Yes;
}

void require_nonzero(std::initializer_list<Rational> xs) {
  for (const auto& x : xs)
    if (sgn(x) == 0) throw std::invalid_argument("classes must be nonzero");
}

std::string str(const Rational& q) { return qm::to_string(q); }

// Marks the verdict as not defined if one of the cup products is nonzero.
bool screen(MasseyVerdict& v, const std::vector<std::pair<Rational, Rational>>& pairs) {
  for (const auto& [x, y] : pairs)
    if (auto p = brauer::obstruction(SymbolExpr{{x, y}})) {
      v.defined = v.vanishes = Tri::No;
      v.obstructions.push_back(cert::symbol_obstruction(x, y, *p));
      v.trace.push_back("(" + str(x) + "," + str(y) + ") is nonzero at " + brauer::to_string(*p));
      return true;
    }
  return false;
}

Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

}  // namespace

nlohmann::json to_json(const MasseyVerdict& v) {
  nlohmann::json out;
  out["verdict"] = {{"defined", tri_json(v.defined)}, {"vanishes", tri_json(v.vanishes)}};
  out["defined"] = tri_json(v.defined);
  out["vanishes"] = tri_json(v.vanishes);
  out["certificates"] = v.certificates;
  out["obstructions"] = v.obstructions;
  if (!v.obstructions.empty()) out["obstruction"] = v.obstructions.front();
  out["trace"] = v.trace;
  return out;
}

MasseyVerdict triple(const Rational& a, const Rational& b, const Rational& c) {
  require_nonzero({a, b, c});
  MasseyVerdict v;
  if (screen(v, {{a, b}, {b, c}})) return v;
  Element rho = brauer::norm_rep(a, b), mu = brauer::norm_rep(c, b);
  Algebra Ac({SquareClass(a), SquareClass(c)});
  Element turn = etale::unit_circle_element(rho.algebra(), 1, 0);
  for (int attempt = 0; attempt < 64; ++attempt, rho = rho * turn) {
    for (int sign : {1, -1}) {
      Element m = mu * Rational(sign);
      Rational d = etale::trace(rho) + etale::trace(m);
      if (d == 0) continue;
      Element eps = etale::lift_sub(rho, Ac, 1) + etale::lift_sub(m, Ac, 2);
      if (!etale::is_unit(eps)) continue;
      auto x = rational_sqrt(etale::norm(eps) / b);
      if (!x) throw std::logic_error("triple: N(rho + mu) is not b times a square");
      galoisalg::U4Data D{a, b, c, eps, *x};
      if (!galoisalg::build_u4(D).report.ok()) throw std::logic_error("triple: U_4-algebra failed verification");
      v.defined = v.vanishes = Tri::Yes;
      v.trace.push_back("rho in F_a with norm b, mu in F_c with norm b, Tr rho + Tr mu = " + str(d));
      v.trace.push_back("eps = rho + mu in F_{a,c}, N(eps) = b * " + str(*x) + "^2; U_4-algebra verified");
      v.certificates.push_back(cert::u4(D));
      return v;
    }
  }
  throw std::logic_error("triple: no invertible eps found");
}

namespace {

void record_test(MasseyVerdict& v, const char* name, const Rational& u, const std::vector<Rational>& groups,
                 const normgroups::Verdict& m) {
  std::ostringstream line;
  line << name << " = " << str(u) << " in N_" << str(groups[0]) << " N_" << str(groups[1]) << " N_"
       << str(groups[2]) << ": " << normgroups::describe(m);
  v.trace.push_back(line.str());
  if (normgroups::is_member(m))
    v.certificates.push_back(cert::membership(u, groups, m));
  else if (normgroups::is_nonmember(m))
    v.obstructions.push_back(cert::membership(u, groups, m));
}

// (alpha x, delta y) over F_a as a sum of symbols with rational second entries, when a reduction applies.
std::optional<brauer::QuadraticSymbolExpr> clause1_expr(const Element& alpha, const Element& delta, const Rational& x,
                                                        const Rational& y) {
  const Algebra& Fa = alpha.algebra();
  auto scal = [&](const Rational& q) { return Element::scalar(Fa, q); };
  Element sd = etale::apply_sigma(1, delta);
  Element s1 = alpha + sd, s2 = alpha + delta;
  if (alpha.is_scalar())
    return brauer::QuadraticSymbolExpr{{delta, alpha.scalar_part() * x}, {scal(y), alpha.scalar_part() * x}};
  if (delta.is_scalar())
    return brauer::QuadraticSymbolExpr{{alpha, delta.scalar_part() * y}, {scal(x), delta.scalar_part() * y}};
  if (s1.is_scalar() && s1.scalar_part() != 0) {
    // alpha + sigma(delta) = L gives (alpha, delta) = (alpha, L N(delta)) + (sigma delta, L) + (L, -1)
    Rational L = s1.scalar_part();
    return brauer::QuadraticSymbolExpr{
        {alpha, L * etale::norm(delta) * y}, {sd, L}, {scal(L), -1}, {delta, x}, {scal(x), y}};
  }
  if (s2.is_scalar() && s2.scalar_part() != 0) {
    // alpha + delta = L gives (alpha, delta) = (alpha, L) + (delta, L) + (L, -1)
    Rational L = s2.scalar_part();
    return brauer::QuadraticSymbolExpr{{alpha, L * y}, {delta, L * x}, {scal(L), -1}, {scal(x), y}};
  }
  return std::nullopt;
}

// y with (alpha x, delta y) = 0: first among small classes built from the primes involved, then through the
// Albert form of (alpha x, delta n_bc).
std::optional<Rational> alpha_delta_y(const Rational& a, const Element& alpha, const Element& delta, const Rational& x,
                                  const Rational& n_bc, long bound) {
  std::vector<Integer> primes{2};
  for (const Rational& q : {a, x, n_bc, etale::norm(alpha), etale::norm(delta)})
    for (const auto& p : prime_support(q)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.size() <= 12) {
    auto y = brauer::search_value(
        primes,
        [&](const Rational& y) {
          auto e = clause1_expr(alpha, delta, x, y);
          return e && brauer::is_zero_over_quadratic(*e);
        },
        64, static_cast<std::size_t>(bound));
    if (y) return y;
  }
  auto w = brauer::albert_z_search(alpha * x, delta * n_bc, bound);
  if (const auto* z = std::get_if<brauer::AlbertWitness>(&w)) return n_bc * z->z;
  return std::nullopt;
}

}  // namespace

FourReport four_report(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                       const Options& opt) {
  require_nonzero({a, b, c, d});
  FourReport R;
  MasseyVerdict& v = R.verdict;
  if (!is_rational_square(a * d)) {
    v.trace.push_back("a d is not a square: outside the decided family, no verdict");
    return R;
  }
  if (screen(v, {{a, b}, {b, c}, {c, d}})) return R;
  if (d != a) v.trace.push_back("d = " + str(d) + " differs from a by a square; using d = a");

  std::variant<galoisalg::Normalization, galoisalg::SymbolObstruction> nv;
  try {
    nv = galoisalg::normalize_bc(b, c);
  } catch (const galoisalg::Degenerate&) {
    v.trace.push_back("b X^2 + c Y^2 = Z^2 has no point with X Y Z != 0: no verdict");
    return R;
  }
  if (const auto* ob = std::get_if<galoisalg::SymbolObstruction>(&nv)) {
    v.defined = v.vanishes = Tri::No;
    v.obstructions.push_back(cert::symbol_obstruction(ob->x, ob->y, ob->place));
    return R;
  }
  const auto& N = std::get<galoisalg::Normalization>(nv);
  const Rational &B = N.b_scaled, &C = N.c_scaled;
  v.trace.push_back("b -> " + str(B) + ", c -> " + str(C) + " from the point (" + str(N.point.x) + ", " +
                    str(N.point.y) + ", " + str(N.point.z) + ") of b X^2 + c Y^2 = Z^2, so b + c = 1");
  v.certificates.push_back(cert::conic(b, c, N.point));

  std::variant<RSTData, galoisalg::SymbolObstruction> rv;
  try {
    rv = galoisalg::rst_build(a, B, C, a);
  } catch (const galoisalg::Degenerate&) {
    v.trace.push_back("no nondegenerate conic points found: no verdict");
    return R;
  }
  if (const auto* ob = std::get_if<galoisalg::SymbolObstruction>(&rv)) {
    v.defined = v.vanishes = Tri::No;
    v.obstructions.push_back(cert::symbol_obstruction(ob->x, ob->y, ob->place));
    return R;
  }
  const RSTData& S = std::get<RSTData>(rv);
  R.rst = S;
  v.trace.push_back("v = (" + str(S.v1) + ", " + str(S.v2) + "), u = (" + str(S.u1) + ", " + str(S.u2) +
                    "): r = " + str(S.r) + ", s = " + str(S.s) + ", t = " + str(S.t));
  v.certificates.push_back(cert::rst(S));
  if (!brauer::is_zero(SymbolExpr{{S.r, a}, {S.s, B}, {S.t, C}}))
    throw std::logic_error("(r,a) + (s,b) + (t,c) is nonzero");

  std::vector<Rational> gr{a, a * B, a * C}, gs{B, a * B, B * C}, gt{C, a * C, B * C};
  R.r_test = normgroups::member(S.r, gr, opt.search_bound);
  R.s_test = normgroups::member(S.s, gs, opt.search_bound);
  R.t_test = normgroups::member(S.t, gt, opt.search_bound);
  record_test(v, "r", S.r, gr, *R.r_test);
  record_test(v, "s", S.s, gs, *R.s_test);
  record_test(v, "t", S.t, gt, *R.t_test);

  int yes = 0, no = 0;
  for (const auto* m : {&*R.r_test, &*R.s_test, &*R.t_test}) {
    yes += normgroups::is_member(*m);
    no += normgroups::is_nonmember(*m);
  }
  if (yes && no) throw std::logic_error("membership tests for r, s, t disagree");

  if (is_rational_square(a * B * C)) {
    auto th = thm13(b, c, opt);
    v.trace.push_back("a b c is a square: <bc,b,c,bc> decision gives defined = " + to_string(th.defined));
    if (th.defined != Tri::Unknown && ((yes && th.defined == Tri::No) || (no && th.defined == Tri::Yes)))
      throw std::logic_error("norm tests disagree with the <bc,b,c,bc> decision");
    v.obstructions.insert(v.obstructions.begin(), th.obstructions.begin(), th.obstructions.end());
    if (!yes && !no && th.defined != Tri::Unknown) {
      v.defined = v.vanishes = th.defined;
      for (auto& c2 : th.certificates) v.certificates.push_back(c2);
      return R;
    }
  }

  if (no) {
    v.defined = v.vanishes = Tri::No;
    return R;
  }
  if (!yes) {
    v.trace.push_back("no membership test decided within the search bound");
    return R;
  }
  v.defined = v.vanishes = Tri::Yes;
  if (const auto* m = std::get_if<normgroups::Member>(&*R.r_test)) {
    galoisalg::CosetFactors f;
    f.eps_a = m->factors[0];
    f.nu_bd = m->factors[1];
    f.eps_ac = m->factors[2];
    auto G = galoisalg::absorb(galoisalg::lambda_glue(S), f);
    if (!galoisalg::glue_check(G)) throw std::logic_error("glue data from the r certificate failed");
    v.certificates.push_back(cert::glue(G));
    v.trace.push_back("glue data with e = " + str(G.e) + " verified");
  }
  if (const auto* m = std::get_if<normgroups::Member>(&*R.t_test)) {
    Rational n_bc = etale::norm(m->factors[2]);
    Rational x = etale::norm(m->factors[0]) * n_bc;
    if (auto y = alpha_delta_y(a, S.alpha, S.delta, x, n_bc, opt.search_bound)) {
      if (alpha_delta_condition(a, a, S.alpha, S.delta, x, *y).holds != Tri::Yes)
        throw std::logic_error("witness from the t certificate fails");
      v.certificates.push_back(cert::alpha_delta(a, S.alpha, S.delta, x, *y));
      v.trace.push_back("(alpha x, delta y) = (alpha x, c) = 0 with x = " + str(x) + ", y = " + str(*y));
    } else {
      v.trace.push_back("no y found for x = " + str(x) + " within the search bound");
    }
  }
  return R;
}

MasseyVerdict four(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Options& opt) {
  return four_report(a, b, c, d, opt).verdict;
}

MasseyVerdict four_abca(const Rational& a, const Rational& b, const Rational& c, const Options& opt) {
  return four(a, b, c, a, opt);
}

Element minus_f2_witness(const RSTData& S) {
  Algebra A({SquareClass(S.b), SquareClass(S.c)});
  Element rb = galoisalg::scaled_root(A, 1, S.b), rc = galoisalg::scaled_root(A, 2, S.c);
  Element one = Element::one(A);
  Element rho = one * (S.l * S.v1) + rb * rc * S.l;
  Element mu = (one + rc) * (S.l * S.v2);
  Element v = one * S.v1 + rb * S.v2, u = one * S.u1 + rc * S.u2;
  Element xi2 = (v + u) * (v / rb + rc) / (rc * Rational(2));
  return (rho + mu) * xi2 / (rb * (S.l * S.v2));
}

MasseyVerdict thm13(const Rational& b, const Rational& c, const Options& opt) {
  require_nonzero({b, c});
  MasseyVerdict v;
  v.trace.push_back("<bc,b,c,bc> with b = " + str(b) + ", c = " + str(c));
  if (screen(v, {{b, c}})) return v;
  auto m = normgroups::member_biquadratic(-1, b, c);
  v.trace.push_back("-1 in N_{b,c}: " + normgroups::describe(m));
  if (normgroups::is_unknown(m)) return v;
  if (const auto* n = std::get_if<normgroups::NonMember>(&m)) {
    v.defined = v.vanishes = Tri::No;
    normgroups::Verdict shown = m;
    if (std::holds_alternative<normgroups::OmegaObstruction>(n->obstruction) && !normgroups::full_local_degree_place(b, c)) {
      // prefer the smallest k with omega(k) = -1 and -k^2 a norm
      for (long k = 2; k <= 200; ++k) {
        if (normgroups::omega(k, b, c) != -1) continue;
        auto sym = normgroups::member_triple_sym(k, b, c);
        auto xi = normgroups::member_biquadratic(-Rational(k * k), b, c);
        if (!normgroups::is_nonmember(sym) || !normgroups::is_member(xi)) continue;
        auto ob = std::get<normgroups::OmegaObstruction>(std::get<normgroups::NonMember>(sym).obstruction);
        ob.scaled_preimage = std::get<normgroups::Member>(xi).factors[0];
        normgroups::NonMember small{ob};
        if (!normgroups::verify_nonmember_biquadratic(-1, b, c, small)) continue;
        shown = small;
        v.trace.push_back("smallest k with omega(k) = -1 and -k^2 in N_{b,c}: k = " + std::to_string(k));
        break;
      }
    }
    v.obstructions.push_back(cert::biquadratic_membership(-1, b, c, shown));
    return v;
  }
  v.defined = v.vanishes = Tri::Yes;
  v.certificates.push_back(cert::biquadratic_membership(-1, b, c, m));
  try {
    auto nv = galoisalg::normalize_bc(b, c);
    const auto& N = std::get<galoisalg::Normalization>(nv);
    const Rational &B = N.b_scaled, &C = N.c_scaled;
    auto rv = galoisalg::rst_build(B * C, B, C, B * C);
    if (const auto* S = std::get_if<RSTData>(&rv)) {
      Element xi = minus_f2_witness(*S);
      if (etale::norm(xi) != -S->f * S->f) throw std::logic_error("N(xi) != -f^2");
      v.certificates.push_back(cert::norm_identity(xi, -S->f * S->f));
      v.trace.push_back("-f^2 = " + str(-S->f * S->f) + " is a norm from F_{" + str(B) + "," + str(C) + "}");
    }
  } catch (const galoisalg::Degenerate&) {
    v.trace.push_back("no nondegenerate conic points; -f^2 check skipped");
  }
  (void)opt;
  return v;
}

bool HWReport::ok() const {
  return symbols_zero && identities && omega3 == -1 && xi_norm == -9 && verdict.defined == Tri::No &&
         verdict.vanishes == Tri::No;
}

HWReport hw() {
  HWReport R;
  Rational a = 34, b = 2, c = 17;
  R.symbols_zero = brauer::is_zero(SymbolExpr{{a, b}}) && brauer::is_zero(SymbolExpr{{b, c}}) &&
                   brauer::is_zero(SymbolExpr{{c, a}});
  R.identities = Rational(2 * 4 * 4 + 17 * 1 * 1) == Rational(7 * 7) && Rational(2 * 1 * 1 - 1 * 1 * 1) == 1 &&
                 Rational(17 * 1 * 1 - 1 * 4 * 4) == Rational(1 * 1);
  R.omega3 = normgroups::omega(3, b, c);
  R.xi = Element(Algebra{2, 17}, {1, rat(-3, 2), 0, rat(-1, 2)});
  R.xi_norm = etale::norm(R.xi);
  R.verdict = four(a, b, c, a);
  return R;
}

nlohmann::json to_json(const HWReport& r) {
  auto out = to_json(r.verdict);
  out["hw"] = {{"symbols_zero", r.symbols_zero},
               {"identities", r.identities},
               {"omega3", r.omega3},
               {"xi", cert::encode(r.xi)},
               {"xi_norm", cert::encode(r.xi_norm)},
               {"ok", r.ok()}};
  return out;
}

AlphaDeltaResult alpha_delta_condition(const Rational& a, const Rational& d, const Element& alpha, const Element& delta,
                                const Rational& x, const Rational& y) {
  require_nonzero({a, d, x, y});
  AlphaDeltaResult g;
  if (!is_rational_square(a * d)) return g;
  const Algebra& Fa = alpha.algebra();
  if (Fa.rank() != 1 || Fa.gen(0) != SquareClass(a) || delta.algebra() != Fa)
    throw std::invalid_argument("alpha and delta must lie in F_a");
  if (!etale::is_unit(alpha) || !etale::is_unit(delta)) throw std::invalid_argument("alpha and delta must be units");
  Rational b = etale::norm(alpha), c = etale::norm(delta);
  Element ax = alpha * x;

  g.clause2 = tri(brauer::is_zero_over_quadratic({{ax, c}}));

  auto e1 = clause1_expr(alpha, delta, x, y);
  Element s1 = alpha + etale::apply_sigma(1, delta);
  if (e1 && !alpha.is_scalar() && !delta.is_scalar() && s1.is_scalar() && is_rational_square(s1.scalar_part()))
    g.corestriction_zero = brauer::is_zero(SymbolExpr{{b, y}, {x, c}});
  if (e1) g.clause1 = tri(brauer::is_zero_over_quadratic(*e1));

  if (brauer::is_zero(SymbolExpr{{c, b}})) {
    Element mu = brauer::norm_rep(c, b);
    Rational t = etale::trace(alpha) + etale::trace(mu);
    if (t != 0) {
      bool member = normgroups::is_member(normgroups::member_double(t * x, c, a * c));
      g.reduction_agrees = member == (g.clause2 == Tri::Yes);
    }
  }

  if (g.clause2 == Tri::No) {
    g.holds = Tri::No;
    g.failed_clause = 2;
  } else if (g.clause1 == Tri::No) {
    g.holds = Tri::No;
    g.failed_clause = 1;
  } else if (g.clause1 == Tri::Yes) {
    g.holds = Tri::Yes;
  }
  return g;
}

}  // namespace qm::massey
