#include "qm/galoisalg.hpp"

#include <bit>

#include "qm/linalg.hpp"

namespace qm::galoisalg {

using etale::apply_sigma;
using etale::embed;
using etale::inv;
using etale::norm_to_sub;

namespace {

Algebra algebra_of(std::initializer_list<Rational> gens) {
  std::vector<SquareClass> classes;
  for (const auto& g : gens) classes.emplace_back(g);
  return Algebra(std::move(classes));
}

bool has_classes(const Element& x, std::initializer_list<Rational> gens) {
  return x.algebra() == algebra_of(gens);
}

// words over generators 0, 1, 2 (inverse of g is 2g + 1)
unipotent::Word commutator_word(const unipotent::Word& x, const unipotent::Word& y) {
  auto invert = [](const unipotent::Word& w) {
    unipotent::Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it ^ 1);
    return out;
  };
  unipotent::Word out = invert(x);
  for (int g : invert(y)) out.push_back(g);
  for (int g : x) out.push_back(g);
  for (int g : y) out.push_back(g);
  return out;
}

bool fixes_base(const Tower& T, const TowerMap& f) {
  for (std::size_t m = 0; m < T.base().dim(); ++m)
    if (!T.equal(T.apply(f, T.basis(m)), T.basis(m))) return false;
  return true;
}

Element n_d(const Element& nu) { return norm_to_sub(nu, 1); }

std::optional<brauer::Place> conic_obstruction(const Rational& x, const Rational& y) {
  auto r = brauer::conic_point(x, y);
  if (auto* np = std::get_if<brauer::NoPoint>(&r)) return np->obstruction;
  return std::nullopt;
}

}  // namespace

Element scaled_root(const Algebra& A, Mask mask, const Rational& value) {
  const Integer& mono = A.mono_coeff(mask, mask);
  if (SquareClass(value) != SquareClass(mono)) throw std::invalid_argument("scaled_root: class mismatch");
  auto q = rational_sqrt(value / Rational(mono));
  return Element::monomial(A, mask, *q);
}

Element lift_quadratic(const Element& x, const Algebra& A, Mask mask) {
  const Algebra& F = x.algebra();
  if (F.rank() != 1 || F.gen(0) != SquareClass(A.mono_coeff(mask, mask))) throw etale::AlgebraMismatch();
  return Element::scalar(A, x[0]) + etale::sub_generator(A, mask) * x[1];
}

Element double_difference(const Element& omega, Mask s1, Mask s2) {
  return apply_sigma(s1 ^ s2, omega) * omega / (apply_sigma(s1, omega) * apply_sigma(s2, omega));
}

Tower::Tower(Algebra base, std::vector<Element> theta) : base_(std::move(base)), theta_(std::move(theta)) {
  for (const auto& t : theta_)
    if (t.algebra() != base_ || !etale::is_unit(t)) throw std::invalid_argument("tower: theta must be base units");
  std::size_t n = std::size_t{1} << theta_.size();
  theta_prod_.assign(n, Element::one(base_));
  for (Mask S = 1; S < n; ++S) {
    unsigned i = static_cast<unsigned>(std::countr_zero(S));
    theta_prod_[S] = theta_prod_[S & (S - 1)] * theta_[i];
  }
}

TowerElement Tower::zero() const {
  return TowerElement{std::vector<Element>(std::size_t{1} << levels(), Element(base_))};
}

TowerElement Tower::from_base(const Element& b) const { return monomial(0, b); }

TowerElement Tower::monomial(Mask S, const Element& b) const {
  TowerElement x = zero();
  x.parts[S] = b;
  return x;
}

TowerElement Tower::basis(std::size_t index) const {
  std::size_t d = base_.dim();
  return monomial(static_cast<Mask>(index / d), Element::monomial(base_, static_cast<Mask>(index % d)));
}

std::vector<Rational> Tower::coords(const TowerElement& x) const {
  std::vector<Rational> out;
  out.reserve(dim());
  for (const auto& p : x.parts) out.insert(out.end(), p.coords().begin(), p.coords().end());
  return out;
}

TowerElement Tower::add(const TowerElement& x, const TowerElement& y) const {
  TowerElement out = x;
  for (std::size_t S = 0; S < out.parts.size(); ++S) out.parts[S] += y.parts[S];
  return out;
}

TowerElement Tower::mul(const TowerElement& x, const TowerElement& y) const {
  TowerElement out = zero();
  for (Mask S = 0; S < x.parts.size(); ++S) {
    if (x.parts[S].is_zero()) continue;
    for (Mask R = 0; R < y.parts.size(); ++R) {
      if (y.parts[R].is_zero()) continue;
      Element term = x.parts[S] * y.parts[R];
      if (S & R) term = term * theta_prod_[S & R];
      out.parts[S ^ R] += term;
    }
  }
  return out;
}

bool Tower::equal(const TowerElement& x, const TowerElement& y) const { return x.parts == y.parts; }

TowerMap Tower::identity_map() const {
  TowerMap f;
  for (std::size_t i = 0; i < levels(); ++i) {
    f.coeff.push_back(Element::one(base_));
    f.target.push_back(Mask{1} << i);
  }
  return f;
}

std::pair<Element, Mask> Tower::monomial_image(const TowerMap& f, Mask S) const {
  Element c = Element::one(base_);
  Mask M = 0;
  for (std::size_t i = 0; i < levels(); ++i) {
    if (!(S >> i & 1)) continue;
    c = c * f.coeff[i];
    if (M & f.target[i]) c = c * theta_prod_[M & f.target[i]];
    M ^= f.target[i];
  }
  return {c, M};
}

TowerElement Tower::apply(const TowerMap& f, const TowerElement& x) const {
  TowerElement out = zero();
  for (Mask S = 0; S < x.parts.size(); ++S) {
    if (x.parts[S].is_zero()) continue;
    auto [c, M] = monomial_image(f, S);
    out.parts[M] += apply_sigma(f.base_sigma, x.parts[S]) * c;
  }
  return out;
}

TowerMap Tower::compose(const TowerMap& f, const TowerMap& g) const {
  TowerMap h;
  h.base_sigma = f.base_sigma ^ g.base_sigma;
  for (std::size_t i = 0; i < levels(); ++i) {
    auto [c, M] = monomial_image(f, g.target[i]);
    h.coeff.push_back(apply_sigma(f.base_sigma, g.coeff[i]) * c);
    h.target.push_back(M);
  }
  return h;
}

TowerMap Tower::inverse(const TowerMap& f) const {
  TowerMap h;
  h.base_sigma = f.base_sigma;
  h.coeff.assign(levels(), Element(base_));
  h.target.assign(levels(), 0);
  std::vector<bool> found(levels(), false);
  for (Mask S = 1; S < (Mask{1} << levels()); ++S) {
    auto [c, M] = monomial_image(f, S);
    if (!std::has_single_bit(M)) continue;
    auto j = static_cast<std::size_t>(std::countr_zero(M));
    h.coeff[j] = apply_sigma(f.base_sigma, inv(c));
    h.target[j] = S;
    found[j] = true;
  }
  for (bool ok : found)
    if (!ok) throw std::domain_error("tower map is not invertible");
  return h;
}

TowerMap Tower::evaluate(const std::vector<TowerMap>& gens, const unipotent::Word& w) const {
  TowerMap r = identity_map();
  for (int x : w) {
    const TowerMap& g = gens.at(static_cast<std::size_t>(x / 2));
    r = compose(r, (x & 1) ? inverse(g) : g);
  }
  return r;
}

bool Tower::is_automorphism(const TowerMap& f) const {
  std::size_t k = levels();
  if (f.coeff.size() != k || f.target.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!etale::is_unit(f.coeff[i])) return false;
    if (f.coeff[i] * f.coeff[i] * theta_prod_[f.target[i]] != apply_sigma(f.base_sigma, theta_[i])) return false;
  }
  // targets independent over F_2
  std::vector<bool> hit(std::size_t{1} << k, false);
  for (Mask S = 0; S < hit.size(); ++S) {
    Mask M = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (S >> i & 1) M ^= f.target[i];
    if (hit[M]) return false;
    hit[M] = true;
  }
  std::vector<TowerElement> basis_vecs, images;
  for (std::size_t i = 0; i < dim(); ++i) {
    basis_vecs.push_back(basis(i));
    images.push_back(apply(f, basis_vecs.back()));
  }
  // f(g y) = f(g) f(y) for algebra generators g and basis vectors y; by induction f is multiplicative
  std::vector<std::size_t> gens;
  for (std::size_t g = 0; g < base_.rank(); ++g) gens.push_back(std::size_t{1} << g);
  for (std::size_t i = 0; i < k; ++i) gens.push_back((std::size_t{1} << i) * base_.dim());
  for (std::size_t i : gens)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!equal(apply(f, mul(basis_vecs[i], basis_vecs[j])), mul(images[i], images[j]))) return false;
  return true;
}

std::size_t Tower::fixed_dimension(const std::vector<TowerMap>& maps) const {
  std::size_t n = dim();
  linalg::Mat rows;
  for (const auto& f : maps) {
    linalg::Mat block(n, linalg::Vec(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
      auto col = coords(apply(f, basis(j)));
      for (std::size_t i = 0; i < n; ++i) block[i][j] = col[i];
      block[j][j] -= 1;
    }
    rows.insert(rows.end(), block.begin(), block.end());
  }
  if (rows.empty()) return n;
  return n - linalg::rank(rows);
}

U3Algebra build_u3(const U3Data& d) {
  if (sgn(d.x) == 0 || !has_classes(d.alpha, {d.a}) || !etale::is_unit(d.alpha))
    throw InvariantViolated("alpha must be a unit of F_a and x nonzero");
  if (etale::norm(d.alpha) != d.b * d.x * d.x) throw InvariantViolated("N_a(alpha) != b x^2");
  Algebra B = algebra_of({d.a, d.b});
  Element theta = embed(d.alpha, B, {0});
  U3Algebra K{d, Tower(B, {theta}), {}, {}, 0, {}};
  const Tower& T = K.tower;
  K.sigma_a = TowerMap{1, {scaled_root(B, 2, d.b) * d.x / theta}, {1}};
  K.sigma_b = TowerMap{2, {Element::one(B)}, {1}};
  std::vector<TowerMap> gens{K.sigma_a, K.sigma_b};
  TowerMap id = T.identity_map();
  TowerMap comm = T.evaluate(gens, commutator_word({0}, {2}));
  K.commutator_order = comm == id ? 1 : (T.compose(comm, comm) == id ? 2 : 0);

  ActionReport& rep = K.report;
  rep.dim = T.dim();
  rep.automorphisms = T.is_automorphism(K.sigma_a) && T.is_automorphism(K.sigma_b);
  rep.relations = T.evaluate(gens, {0, 0}) == id && T.evaluate(gens, {2, 2}) == id && K.commutator_order == 2;
  rep.kernel_fixed_dim = T.fixed_dimension({comm});
  rep.kernel_fixed_is_base = rep.kernel_fixed_dim == B.dim() && fixes_base(T, comm);
  rep.group_fixed_dim = T.fixed_dimension(gens);
  return K;
}

bool minus_x_isomorphism(const U3Data& d) {
  U3Data neg = d;
  neg.x = -d.x;
  U3Algebra plus = build_u3(d), minus = build_u3(neg);
  const Tower& T = plus.tower;
  TowerMap phi{2, {Element::one(T.base())}, {1}};
  return T.is_automorphism(phi) && T.compose(phi, plus.sigma_a) == T.compose(minus.sigma_a, phi) &&
         T.compose(phi, plus.sigma_b) == T.compose(minus.sigma_b, phi);
}

std::variant<U3Iso, U3IsoFailure> u3_iso_test(const U3Data& d, const Element& beta, const Rational& y) {
  if (sgn(d.x) == 0 || !has_classes(d.alpha, {d.a}) || etale::norm(d.alpha) != d.b * d.x * d.x)
    throw InvariantViolated("N_a(alpha) != b x^2");
  if (sgn(y) == 0 || !has_classes(beta, {d.b}) || etale::norm(beta) != d.a * y * y)
    throw InvariantViolated("N_b(beta) != a y^2");
  Algebra F = algebra_of({d.a, d.b});
  Element al = embed(d.alpha, F, {0}), be = embed(beta, F, {1});
  auto roots = etale::all_sqrts(al * be);
  if (roots.empty()) return U3IsoFailure{U3IsoFailure::Reason::NotSquare};
  Element minus_one = Element::scalar(F, -1);
  Element xb = scaled_root(F, 2, d.b) * d.x / al, ya = scaled_root(F, 1, d.a) * y / be;
  for (const auto& w : roots) {
    if (!etale::is_unit(w) || double_difference(w, 1, 2) != minus_one) continue;
    U3Iso iso{w, 0, 0};
    Element da = etale::sigma_minus_one(1, w), db = etale::sigma_minus_one(2, w);
    iso.x_sign = da == xb ? 1 : (da == -xb ? -1 : 0);
    iso.y_sign = db == ya ? 1 : (db == -ya ? -1 : 0);
    if (iso.x_sign && iso.y_sign) return iso;
  }
  return U3IsoFailure{U3IsoFailure::Reason::SignFails};
}

Element norm_a(const Element& eps) { return norm_to_sub(eps, 2); }
Element norm_c(const Element& eps) { return norm_to_sub(eps, 1); }

Element glue_product(const Element& eps, const Element& nu) {
  Algebra F(std::vector<SquareClass>{nu.algebra().gen(0), eps.algebra().gen(1)});
  return embed(norm_a(eps), F, {1}) * embed(n_d(nu), F, {0});
}

U4Algebra build_u4(const U4Data& d) {
  if (sgn(d.x) == 0 || !has_classes(d.eps, {d.a, d.c}) || !etale::is_unit(d.eps))
    throw InvariantViolated("eps must be a unit of F_{a,c} and x nonzero");
  if (etale::norm(d.eps) != d.b * d.x * d.x) throw InvariantViolated("N_{a,c}(eps) != b x^2");
  Algebra B = algebra_of({d.a, d.b, d.c});
  Element alpha = embed(norm_c(d.eps), B, {0}), gamma = embed(norm_a(d.eps), B, {2}), eps = embed(d.eps, B, {0, 2});
  U4Algebra K{d, Tower(B, {alpha, gamma, eps}), {}, {}, {}, {}};
  const Tower& T = K.tower;
  Element one = Element::one(B), xb = scaled_root(B, 2, d.b) * d.x, eps_inv = inv(eps);
  K.sigma_a = TowerMap{1, {xb / alpha, one, eps_inv}, {1, 2, 6}};
  K.sigma_b = TowerMap{2, {one, one, one}, {1, 2, 4}};
  K.sigma_c = TowerMap{4, {one, xb / gamma, eps_inv}, {1, 2, 5}};
  std::vector<TowerMap> gens{K.sigma_a, K.sigma_b, K.sigma_c};

  ActionReport& rep = K.report;
  rep.dim = T.dim();
  rep.automorphisms = T.is_automorphism(K.sigma_a) && T.is_automorphism(K.sigma_b) && T.is_automorphism(K.sigma_c);
  TowerMap id = T.identity_map();
  rep.relations = true;
  for (const auto& w : unipotent::u4_presentation().relators)
    if (!(T.evaluate(gens, w) == id)) rep.relations = false;
  unipotent::Word ab = commutator_word({0}, {2}), bc = commutator_word({2}, {4});
  std::vector<TowerMap> kernel{T.evaluate(gens, ab), T.evaluate(gens, bc), T.evaluate(gens, commutator_word(ab, {4}))};
  rep.kernel_fixed_dim = T.fixed_dimension(kernel);
  bool base_fixed = true;
  for (const auto& g : kernel) base_fixed = base_fixed && fixes_base(T, g);
  rep.kernel_fixed_is_base = rep.kernel_fixed_dim == B.dim() && base_fixed;
  rep.group_fixed_dim = T.fixed_dimension(gens);
  return K;
}

GlueReport glue_report(const GlueData& g) {
  GlueReport rep;
  if (!has_classes(g.eps, {g.a, g.c}) || !has_classes(g.nu, {g.b, g.d}) || !has_classes(g.omega, {g.b, g.c}))
    return rep;
  rep.norm_ac = is_rational_square(etale::norm(g.eps) / g.b);
  rep.norm_bd = is_rational_square(etale::norm(g.nu) / g.c);
  rep.product = sgn(g.e) != 0 && glue_product(g.eps, g.nu) == g.omega * g.omega * g.e;
  rep.sign = etale::is_unit(g.omega) &&
             double_difference(g.omega, 1, 2) == Element::scalar(g.omega.algebra(), -1);
  rep.e_square = sgn(g.e) != 0 && is_rational_square(g.e);
  return rep;
}

bool glue_check(const GlueData& g) { return glue_report(g).defined(); }

GlueData absorb(const GlueData& g, const CosetFactors& f) {
  GlueData out = g;
  const Algebra &Ac = g.eps.algebra(), &Bd = g.nu.algebra();
  if (f.eps_a) {
    out.eps = out.eps / lift_quadratic(*f.eps_a, Ac, 1);
    out.e /= etale::norm(*f.eps_a);
  }
  if (f.eps_ac) {
    out.eps = out.eps / lift_quadratic(*f.eps_ac, Ac, 3);
    out.e /= etale::norm(*f.eps_ac);
  }
  if (f.nu_d) {
    out.nu = out.nu / lift_quadratic(*f.nu_d, Bd, 2);
    out.e /= etale::norm(*f.nu_d);
  }
  if (f.nu_bd) {
    out.nu = out.nu / lift_quadratic(*f.nu_bd, Bd, 3);
    out.e /= etale::norm(*f.nu_bd);
  }
  return out;
}

RSTData rst_from_points(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const Rational& v1, const Rational& v2, const Rational& u1, const Rational& u2) {
  if (b + c != 1) throw InvariantViolated("b + c != 1");
  if (v1 * v1 - b * v2 * v2 != a || u1 * u1 - c * u2 * u2 != d) throw InvariantViolated("points off the conics");
  if (sgn(v1 * v2 * u1 * u2 * (v1 + v2) * (u1 + u2) * (v1 + u1)) == 0) throw Degenerate();
  RSTData R{a, b, c, d, v1, v2, u1, u2, 0, 0, 0, 0, 0, {}, {}};
  R.r = 2 * (v1 + v2) * (u1 + u2) * v2 * u2;
  R.s = 2 * (v1 + u1) * (u1 + u2);
  R.t = 2 * (v1 + u1) * (v1 + v2);
  R.l = v1 + u1;
  R.f = 2 * R.l * (v1 + v2);
  Algebra Fa = algebra_of({a}), Fd = algebra_of({d});
  R.alpha = Element::scalar(Fa, R.l * v1) + scaled_root(Fa, 1, a) * R.l;
  R.delta = Element::scalar(Fd, R.l * u1) + scaled_root(Fd, 1, d) * R.l;
  return R;
}

std::variant<RSTData, SymbolObstruction> rst_build(const Rational& a, const Rational& b, const Rational& c,
                                                   const Rational& d, std::size_t sweep) {
  if (b + c != 1) throw InvariantViolated("b + c != 1");
  if (auto v = conic_obstruction(a, b)) return SymbolObstruction{a, b, *v};
  if (auto v = conic_obstruction(d, c)) return SymbolObstruction{c, d, *v};
  auto usable = [](const std::vector<brauer::ConicPoint>& pts) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& p : pts)
      if (sgn(p.x) != 0 && sgn(p.y) != 0 && sgn(p.z) != 0) out.emplace_back(p.z / p.x, p.y / p.x);
    return out;
  };
  auto V = usable(brauer::conic_points(a, b, sweep)), U = usable(brauer::conic_points(d, c, sweep));
  for (std::size_t total = 0; total + 2 <= V.size() + U.size(); ++total)
    for (std::size_t i = 0; i < V.size() && i <= total; ++i) {
      std::size_t j = total - i;
      if (j >= U.size()) continue;
      for (int signs = 0; signs < 4; ++signs) {
        Rational v1 = V[i].first, v2 = V[i].second * (signs & 1 ? -1 : 1);
        Rational u1 = U[j].first * (signs & 2 ? -1 : 1), u2 = U[j].second;
        if (sgn((v1 + v2) * (u1 + u2) * (v1 + u1)) == 0) continue;
        return rst_from_points(a, b, c, d, v1, v2, u1, u2);
      }
    }
  throw Degenerate();
}

std::variant<Normalization, SymbolObstruction> normalize_bc(const Rational& b, const Rational& c) {
  if (auto v = conic_obstruction(b, c)) return SymbolObstruction{b, c, *v};
  auto p = brauer::conic_point_nonzero(b, c);
  if (!p) throw Degenerate();
  Rational bs = b * p->x * p->x / (p->z * p->z), cs = c * p->y * p->y / (p->z * p->z);
  return Normalization{b, c, *p, bs, cs};
}

GlueData lambda_glue(const RSTData& R) {
  Algebra Ac = algebra_of({R.a, R.c}), Bd = algebra_of({R.b, R.d}), Bc = algebra_of({R.b, R.c});
  Element eps = Element::scalar(Ac, R.v1 / R.v2 + 1) + scaled_root(Ac, 1, R.a) / R.v2 + scaled_root(Ac, 2, R.c);
  Element nu = Element::scalar(Bd, R.u1 / R.u2 + 1) + scaled_root(Bd, 1, R.b) + scaled_root(Bd, 2, R.d) / R.u2;
  Element omega = (Element::one(Bc) + scaled_root(Bc, 1, R.b) + scaled_root(Bc, 2, R.c)) / (R.v2 * R.u2);
  return GlueData{R.a, R.b, R.c, R.d, eps, nu, omega, R.r};
}

Rational lambda_x(const RSTData& R) { return 2 * (R.v1 / R.v2 + 1); }
Rational lambda_y(const RSTData& R) { return 2 * (R.u1 / R.u2 + 1); }

std::variant<EInvariant, NoOmega> e_invariant(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d, const Element& eps, const Element& nu,
                                              const std::optional<RSTData>& hint) {
  if (!has_classes(eps, {a, c}) || !has_classes(nu, {b, d})) throw etale::AlgebraMismatch();
  Element P = glue_product(eps, nu);
  const Algebra& F = P.algebra();
  auto sign_of = [&](const Element& w) {
    return double_difference(w, 1, 2) == Element::scalar(F, -1) ? -1 : 1;
  };
  if (hint) {
    Element w = (Element::one(F) + scaled_root(F, 1, hint->b) + scaled_root(F, 2, hint->c)) / (hint->v2 * hint->u2);
    Element e = P / (w * w);
    if (e.is_scalar()) return EInvariant{e.to_rational(), w, sign_of(w)};
  }
  if (P.is_scalar()) return EInvariant{P.to_rational(), Element::one(F), 1};

  etale::Decomposition D(F);
  auto parts = D.project(P);
  const auto& comps = D.components();
  auto twist = etale::square_twist(parts[0]);
  if (!twist) return NoOmega{P};
  const Algebra& K0 = comps[0].field;
  std::optional<EInvariant> first;
  for (Mask m = 0; m < K0.dim(); ++m) {
    Rational e = *twist * Rational(K0.mono_coeff(m, m));
    std::vector<Element> roots;
    for (const auto& part : parts) {
      auto r = etale::field_sqrt(part / e);
      if (!r) break;
      roots.push_back(*r);
    }
    if (roots.size() != parts.size()) continue;
    for (std::uint32_t signs = 0; signs < (1u << roots.size()); ++signs) {
      std::vector<Element> chosen;
      for (std::size_t i = 0; i < roots.size(); ++i) chosen.push_back(signs >> i & 1 ? -roots[i] : roots[i]);
      Element w = D.lift(chosen);
      if (!etale::is_unit(w)) continue;
      EInvariant res{e, w, sign_of(w)};
      if (res.sign == -1) return res;
      if (!first) first = res;
    }
  }
  if (first) return *first;
  return NoOmega{P};
}

SplittingReport splitting_point_check(const SplittingPoint& p) {
  SplittingReport rep;
  if (!has_classes(p.eps, {p.a, p.c}) || !has_classes(p.nu, {p.b, p.d}) || !has_classes(p.omega, {p.b, p.c}) ||
      !etale::is_unit(p.omega) || !etale::is_unit(p.eps) || !etale::is_unit(p.nu))
    return rep;
  const Algebra& F = p.omega.algebra();
  Element Na = embed(norm_a(p.eps), F, {1}), Nd = embed(n_d(p.nu), F, {0});
  Element rb = scaled_root(F, 1, p.b), rc = scaled_root(F, 2, p.c);
  Element dc = etale::sigma_minus_one(2, p.omega), db = etale::sigma_minus_one(1, p.omega);
  rep.eq1 = dc == rb * p.x / Na;
  rep.eq2 = db == rc * p.y / Nd;
  rep.eq3 = Na * Nd == p.omega * p.omega;
  Element xr = dc * Na / rb, yr = db * Nd / rc;
  if (xr.is_scalar()) rep.x_recovered = xr.to_rational();
  if (yr.is_scalar()) rep.y_recovered = yr.to_rational();
  return rep;
}

SplittingPoint splitting_point_from_glue(const GlueData& g) {
  auto k = rational_sqrt(g.e);
  if (!k) throw InvariantViolated("e is not a square");
  SplittingPoint p{g.a, g.b, g.c, g.d, g.eps, g.nu, 0, 0, g.omega * *k};
  const Algebra& F = p.omega.algebra();
  Element Na = embed(norm_a(p.eps), F, {1}), Nd = embed(n_d(p.nu), F, {0});
  Element xr = etale::sigma_minus_one(2, p.omega) * Na / scaled_root(F, 1, p.b);
  Element yr = etale::sigma_minus_one(1, p.omega) * Nd / scaled_root(F, 2, p.c);
  if (!xr.is_scalar() || !yr.is_scalar()) throw InvariantViolated("x or y is not rational");
  p.x = xr.to_rational();
  p.y = yr.to_rational();
  return p;
}

SplittingPoint flip_sign(const SplittingPoint& p) {
  SplittingPoint q = p;
  q.nu = apply_sigma(1, p.nu);
  q.omega = apply_sigma(1, p.omega);
  q.x = -p.x;
  return q;
}

}  // namespace qm::galoisalg
