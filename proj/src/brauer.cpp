#include "qm/brauer.hpp"

#include <algorithm>
#include <set>

#include "qm/linalg.hpp"

namespace qm::brauer {

using etale::Element;

bool Place::operator<(const Place& o) const {
  // infinity sorts last
  if (is_infinite() != o.is_infinite()) return o.is_infinite();
  return prime < o.prime;
}

std::string to_string(const Place& v) { return v.is_infinite() ? "inf" : v.prime.get_str(); }

namespace {

Integer as_integer_class(const Rational& q) { return q.get_num() * q.get_den(); }

// n = p^k * unit
std::pair<long, Integer> split_power(Integer n, const Integer& p) {
  long k = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++k;
  }
  return {k, n};
}

int legendre(const Integer& a, const Integer& p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

int mod8(const Integer& n) {
  Integer r = n % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

}  // namespace

int hilbert(const Rational& u_in, const Rational& v_in, const Place& place) {
  if (sgn(u_in) == 0 || sgn(v_in) == 0) throw std::invalid_argument("hilbert: zero entry");
  Integer u = squarefree_part(u_in), v = squarefree_part(v_in);
  if (place.is_infinite()) return (u < 0 && v < 0) ? -1 : 1;
  const Integer& p = place.prime;
  auto [alpha, u1] = split_power(u, p);
  auto [beta, v1] = split_power(v, p);
  if (p == 2) {
    int a = mod8(u1), b = mod8(v1);
    int eps_a = ((a - 1) / 2) & 1, eps_b = ((b - 1) / 2) & 1;
    int om_a = ((a * a - 1) / 8) & 1, om_b = ((b * b - 1) / 8) & 1;
    int e = (eps_a * eps_b + alpha * om_b + beta * om_a) & 1;
    return e ? -1 : 1;
  }
  int s = 1;
  Integer eps = ((p - 1) / 2) % 2;
  if ((alpha * beta) % 2 && eps == 1) s = -s;
  if (beta % 2) s *= legendre(u1, p);
  if (alpha % 2) s *= legendre(v1, p);
  return s;
}

bool is_local_square(const Rational& u_in, const Place& place) {
  if (sgn(u_in) == 0) throw std::invalid_argument("is_local_square: zero");
  if (place.is_infinite()) return sgn(u_in) > 0;
  Integer u = as_integer_class(u_in);
  const Integer& p = place.prime;
  auto [k, unit] = split_power(u, p);
  if (k % 2) return false;
  if (p == 2) return mod8(unit) == 1;
  return legendre(unit, p) == 1;
}

std::vector<Place> relevant_places(const std::vector<Rational>& entries) {
  std::set<Integer> primes{Integer(2)};
  for (const auto& q : entries)
    for (const auto& p : prime_support(q)) primes.insert(p);
  std::vector<Place> out;
  for (const auto& p : primes) out.push_back(Place::at(p));
  out.push_back(Place::infinity());
  return out;
}

std::vector<Place> relevant_places(const SymbolExpr& e) {
  std::vector<Rational> entries;
  for (const auto& [u, v] : e) {
    entries.push_back(u);
    entries.push_back(v);
  }
  return relevant_places(entries);
}

LocalInvariantVector local_invariants(const SymbolExpr& e) {
  LocalInvariantVector out;
  int total = 0;
  for (const auto& v : relevant_places(e)) {
    int s = 0;
    for (const auto& [a, b] : e)
      if (hilbert(a, b, v) == -1) s ^= 1;
    out[v] = s;
    total += s;
  }
  if (total % 2) throw std::logic_error("reciprocity violated in local invariant computation");
  return out;
}

bool is_zero(const SymbolExpr& e) { return !obstruction(e).has_value(); }

std::optional<Place> obstruction(const SymbolExpr& e) {
  for (const auto& [v, s] : local_invariants(e))
    if (s) return v;
  return std::nullopt;
}

std::optional<Place> splitting_obstruction(const SymbolExpr& e, const Rational& d) {
  for (const auto& [v, s] : local_invariants(e))
    if (s && is_local_square(d, v)) return v;
  return std::nullopt;
}

bool splits_over_quadratic(const SymbolExpr& e, const Rational& d) { return !splitting_obstruction(e, d); }

namespace {

struct RawPoint {
  Rational x, y, z;
};

Integer crt_sqrt(const Integer& a, const Integer& m) {
  // m squarefree positive; a must be a square modulo every prime of m
  Integer t = 0, mod = 1;
  for (const auto& [p, e] : factor(m)) {
    Integer r = sqrt_mod_prime(a, p);
    // combine t (mod `mod`) with r (mod p)
    Integer inv, mm = mod % p;
    mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
    Integer k = ((r - t) % p + p) % p * inv % p;
    t += mod * k;
    mod *= p;
  }
  t %= m;
  if (t * 2 > m) t -= m;
  return t;
}

// a x^2 + b y^2 = z^2 for squarefree integers a, b known to be solvable.
RawPoint legendre_descent(const Integer& a, const Integer& b, int depth) {
  if (depth > 4000) throw std::logic_error("conic descent did not terminate");
  if (a == 1) return {1, 0, 1};
  if (b == 1) return {0, 1, 1};
  if (a == -b) return {1, 1, 0};
  if (abs(a) > abs(b)) {
    RawPoint p = legendre_descent(b, a, depth + 1);
    return {p.y, p.x, p.z};
  }
  Integer m = abs(b);
  Integer t = crt_sqrt(a, m);
  Integer k = (t * t - a) / b;
  if (k == 0) throw std::logic_error("conic descent reached a square");
  Integer k0 = squarefree_part(k);
  Rational s = *rational_sqrt(Rational(k) / Rational(k0));
  RawPoint p = legendre_descent(a, k0, depth + 1);
  Rational Y = p.y / s;
  Rational z = p.z * Rational(t) + Rational(a) * p.x;
  Rational x = p.z + p.x * Rational(t);
  Rational y = Rational(k) * Y;
  return {x, y, z};
}

ConicPoint primitive(const Rational& x, const Rational& y, const Rational& z) {
  Integer l = 1;
  for (const auto* q : {&x, &y, &z}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
  Integer X = Integer(x * l), Y = Integer(y * l), Z = Integer(z * l);
  Integer g = 0;
  for (const auto* n : {&X, &Y, &Z}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n->get_mpz_t());
  return ConicPoint{Rational(abs(X) / g), Rational(abs(Y) / g), Rational(abs(Z) / g)};
}

bool on_conic(const Rational& a, const Rational& b, const ConicPoint& p) {
  return a * p.x * p.x + b * p.y * p.y == p.z * p.z && !(p.x == 0 && p.y == 0 && p.z == 0);
}

}  // namespace

std::variant<ConicPoint, NoPoint> conic_point(const Rational& a, const Rational& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("conic_point: zero coefficient");
  if (auto v = obstruction({{a, b}})) return NoPoint{*v};
  Integer A = squarefree_part(a), B = squarefree_part(b);
  RawPoint p = legendre_descent(A, B, 0);
  Rational sa = *rational_sqrt(a / Rational(A)), sb = *rational_sqrt(b / Rational(B));
  ConicPoint out = primitive(p.x / sa, p.y / sb, p.z);
  if (!on_conic(a, b, out)) throw std::logic_error("conic point failed verification");
  return out;
}

std::vector<ConicPoint> conic_points(const Rational& a, const Rational& b, std::size_t count) {
  auto base = conic_point(a, b);
  if (std::holds_alternative<NoPoint>(base)) return {};
  ConicPoint P = std::get<ConicPoint>(base);
  std::vector<ConicPoint> out{P};
  std::set<std::array<Rational, 3>> seen{{P.x, P.y, P.z}};
  auto Q = [&](const Rational& x, const Rational& y, const Rational& z) -> Rational { return a * x * x + b * y * y - z * z; };
  for (long m = 0; out.size() < count && m < 100000; ++m) {
    for (long sgnm : {1L, -1L}) {
      if (m == 0 && sgnm == -1) continue;
      Rational mm(m * sgnm);
      for (const auto& D : {std::array<Rational, 3>{1, mm, 0}, std::array<Rational, 3>{0, 1, mm},
                            std::array<Rational, 3>{mm, 0, 1}}) {
        Rational qd = Q(D[0], D[1], D[2]);
        if (sgn(qd) == 0) continue;
        Rational bpd = a * P.x * D[0] + b * P.y * D[1] - P.z * D[2];
        Rational x = P.x * qd - 2 * bpd * D[0];
        Rational y = P.y * qd - 2 * bpd * D[1];
        Rational z = P.z * qd - 2 * bpd * D[2];
        if (x == 0 && y == 0 && z == 0) continue;
        ConicPoint c = primitive(x, y, z);
        if (!on_conic(a, b, c)) throw std::logic_error("swept conic point failed verification");
        if (seen.insert({c.x, c.y, c.z}).second) out.push_back(c);
        if (out.size() >= count) break;
      }
      if (out.size() >= count) break;
    }
  }
  return out;
}

std::optional<ConicPoint> conic_point_nonzero(const Rational& a, const Rational& b) {
  for (const auto& p : conic_points(a, b, 12))
    if (sgn(p.x) != 0 && sgn(p.y) != 0 && sgn(p.z) != 0) return p;
  return std::nullopt;
}

Element norm_rep(const Rational& a, const Rational& b) {
  if (auto v = obstruction({{a, b}})) throw NotSplit(*v);
  etale::Algebra A({SquareClass(a)});
  Element g = Element::gen(A, 0);
  Element alpha(A);
  if (A.gen(0).is_one()) {
    alpha = Element::scalar(A, (b + 1) / 2) + g * ((b - 1) / 2);
  } else {
    auto pt = std::get<ConicPoint>(conic_point(Rational(A.gen(0).value()), b));
    alpha = (Element::scalar(A, pt.z) + g * pt.x) / pt.y;
  }
  if (etale::norm(alpha) != b) throw std::logic_error("norm_rep failed verification");
  return alpha;
}

std::optional<Rational> search_value(const std::vector<Integer>& primes_in,
                                     const std::function<bool(const Rational&)>& accept,
                                     std::size_t max_extra_primes, std::size_t max_candidates) {
  std::vector<Integer> primes = primes_in;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.size() > 16) throw std::invalid_argument("search_value: too many primes");
  Integer q = 1;
  std::size_t tried = 0;
  for (std::size_t extra = 0; extra <= max_extra_primes; ++extra) {
    for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
      Integer base = q;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) base *= primes[i];
      for (int s : {1, -1}) {
        if (tried++ >= max_candidates) return std::nullopt;
        Rational w(base * s);
        if (accept(w)) return w;
      }
    }
    do {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    } while (std::binary_search(primes.begin(), primes.end(), q));
  }
  return std::nullopt;
}

CommonSlot common_slot(const Rational& a, const Rational& u, const Rational& b, const Rational& v) {
  if (!is_zero({{a, u}, {b, v}})) throw ClassesDiffer();
  std::vector<Integer> primes{2};
  for (const auto* q : {&a, &u, &b, &v})
    for (const auto& p : prime_support(*q)) primes.push_back(p);
  auto w = search_value(primes, [&](const Rational& w) {
    return is_zero({{a, u * w}}) && is_zero({{b, v * w}}) && is_zero({{a * b, w}});
  });
  if (!w) throw std::logic_error("common slot search exhausted");
  return CommonSlot{*w, norm_rep(a, u / *w), norm_rep(b, v / *w), norm_rep(a * b, *w)};
}

bool form_isotropic(const DiagonalForm& q) {
  std::size_t n = q.size();
  for (const auto& c : q)
    if (sgn(c) == 0) throw std::invalid_argument("form_isotropic: zero coefficient");
  if (n <= 1) return false;
  if (n == 2) return is_rational_square(-q[0] * q[1]);
  bool pos = false, neg = false;
  for (const auto& c : q) (sgn(c) > 0 ? pos : neg) = true;
  if (n >= 5) return pos && neg;
  Rational d = 1;
  for (const auto& c : q) d *= c;
  for (const auto& v : relevant_places(q)) {
    int eps = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) eps *= hilbert(q[i], q[j], v);
    bool iso;
    if (n == 3)
      iso = hilbert(-1, -d, v) == eps;
    else
      iso = !is_local_square(d, v) || eps == hilbert(-1, -1, v);
    if (!iso) return false;
  }
  return true;
}

namespace {

using linalg::Vec;

Rational bilinear(const std::vector<Vec>& G, const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0 && sgn(G[i][j]) != 0) s += x[i] * G[i][j] * y[j];
  }
  return s;
}

Vec combo(const std::vector<Vec>& basis, const std::vector<Rational>& coeff) {
  Vec v(basis[0].size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeff[k] * basis[k][i];
  return v;
}

// Rational (X, Y) with d1 X^2 + d2 Y^2 = t, assuming <d1, d2> anisotropic and representing t.
std::optional<std::pair<Rational, Rational>> represent_binary(const Rational& d1, const Rational& d2,
                                                              const Rational& t) {
  auto pt = conic_point(d1 / t, d2 / t);
  if (std::holds_alternative<NoPoint>(pt)) return std::nullopt;
  auto p = std::get<ConicPoint>(pt);
  if (sgn(p.z) == 0) return std::nullopt;
  return std::make_pair(p.x / p.z, p.y / p.z);
}

}  // namespace

std::optional<std::vector<Rational>> isotropic_vector(const std::vector<std::vector<Rational>>& G, long bound) {
  std::size_t n = G.size();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    basis.push_back(e);
  }
  std::vector<Vec> ortho;
  std::vector<Rational> diag;
  while (!basis.empty()) {
    Vec v = basis.front();
    basis.erase(basis.begin());
    Rational qv = bilinear(G, v, v);
    if (sgn(qv) == 0) return v;
    for (auto& w : basis) {
      Rational c = bilinear(G, w, v) / qv;
      for (std::size_t i = 0; i < n; ++i) w[i] -= c * v[i];
    }
    ortho.push_back(v);
    diag.push_back(qv);
  }
  std::size_t r = diag.size();
  // a pair inside the diagonal form
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (auto s = rational_sqrt(-diag[j] / diag[i])) {
        std::vector<Rational> c(r, 0);
        c[i] = *s;
        c[j] = 1;
        return combo(ortho, c);
      }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        if (!form_isotropic({diag[i], diag[j], diag[k]})) continue;
        auto rep = represent_binary(diag[i], diag[j], -diag[k]);
        if (!rep) continue;
        std::vector<Rational> c(r, 0);
        c[i] = rep->first;
        c[j] = rep->second;
        c[k] = 1;
        return combo(ortho, c);
      }
  if (r < 4) return std::nullopt;
  const Rational &d1 = diag[0], &d2 = diag[1], &d3 = diag[2], &d4 = diag[3];
  if (!form_isotropic({d1, d2, d3, d4})) return std::nullopt;
  for (long m = 1; m <= bound; ++m) {
    if (SquareClass(m).value() != m) continue;
    for (long s : {1L, -1L}) {
      Rational t(m * s);
      if (!form_isotropic({d1, d2, -t}) || !form_isotropic({d3, d4, t})) continue;
      auto left = represent_binary(d1, d2, t);
      auto right = represent_binary(d3, d4, -t);
      if (!left || !right) continue;
      std::vector<Rational> c(r, 0);
      c[0] = left->first;
      c[1] = left->second;
      c[2] = right->first;
      c[3] = right->second;
      return combo(ortho, c);
    }
  }
  return std::nullopt;
}

std::variant<AlbertWitness, Unknown> albert_z_search(const Element& pi, const Element& mu, long bound) {
  const etale::Algebra& A = pi.algebra();
  if (A.rank() != 1 || mu.algebra() != A) throw std::invalid_argument("albert_z_search expects F_a elements");
  Element one = Element::one(A), zero(A);
  if (auto m = etale::sqrt(mu); m && etale::is_unit(*m)) {
    AlbertWitness w{1, etale::inv(*m), zero};
    if (verify_albert(pi, mu, w)) return w;
  }
  if (auto p = etale::sqrt(pi); p && etale::is_unit(*p)) {
    Element mi = etale::inv(mu);
    AlbertWitness w{1, (one + mi) / Rational(2), (one - mi) * etale::inv(*p * Rational(2))};
    if (verify_albert(pi, mu, w)) return w;
  }
  // Gram matrix of the transfer s(mu X^2 - pi mu Y^2) on (X0, X1, Y0, Y1)
  std::vector<Element> basis = {one, Element::gen(A, 0)};
  std::vector<std::vector<Rational>> G(4, std::vector<Rational>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool xi = i < 2, xj = j < 2;
      if (xi != xj) continue;
      Element f = basis[i % 2] * basis[j % 2] * (xi ? mu : -(pi * mu));
      G[i][j] = f[1];
    }
  auto v = isotropic_vector(G, bound);
  if (v) {
    Element X = one * (*v)[0] + basis[1] * (*v)[1];
    Element Y = one * (*v)[2] + basis[1] * (*v)[3];
    Element val = mu * X * X - pi * mu * Y * Y;
    if (val.is_scalar() && sgn(val[0]) != 0) {
      AlbertWitness w{val[0], X, Y};
      if (verify_albert(pi, mu, w)) return w;
    }
  }
  return Unknown{bound};
}

bool verify_albert(const Element& pi, const Element& mu, const AlbertWitness& w) {
  if (sgn(w.z) == 0) return false;
  Element val = mu * w.X * w.X - pi * mu * w.Y * w.Y;
  return val == Element::scalar(pi.algebra(), w.z);
}

}  // namespace qm::brauer

namespace qm::brauer {

namespace {

// s with s^2 = a mod p^k, for a a unit square in Z_p
Integer padic_sqrt(const Integer& a, const Integer& p, unsigned k) {
  Integer mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
  if (p == 2) {
    Integer s = 1, step;
    for (unsigned j = 3; j <= k; ++j) {
      Integer m2;
      mpz_ui_pow_ui(m2.get_mpz_t(), 2, j + 1);
      Integer r = (s * s - a) % m2;
      if (r != 0) {
        mpz_ui_pow_ui(step.get_mpz_t(), 2, j - 1);
        s += step;
      }
    }
    return s;
  }
  Integer s = sqrt_mod_prime(a, p);
  for (unsigned prec = 1; prec < k; prec *= 2) {
    Integer inv2s, two_s = 2 * s;
    mpz_invert(inv2s.get_mpz_t(), two_s.get_mpz_t(), mod.get_mpz_t());
    s = (s - (s * s - a) * inv2s) % mod;
    if (s < 0) s += mod;
  }
  return s;
}

// Small integer in the Q_p-square class of pi0 + sign * pi1 * sqrt(a).
Integer padic_embedding_class(const Rational& pi0, const Rational& pi1, int sign, const Integer& a, const Integer& p) {
  Integer D;
  mpz_lcm(D.get_mpz_t(), pi0.get_den().get_mpz_t(), pi1.get_den().get_mpz_t());
  Rational s0 = pi0 * D, s1 = pi1 * D * sign;
  Integer P0 = s0.get_num(), P1 = s1.get_num();
  for (unsigned k = 40;; k *= 2) {
    Integer mod;
    mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
    Integer z = (P0 + P1 * padic_sqrt(a, p, k)) % mod;
    if (z < 0) z += mod;
    if (z == 0) continue;
    Integer u, Du;
    unsigned v = static_cast<unsigned>(mpz_remove(u.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
    if (v + 6 > k) continue;
    // the value is z / D, in the class of z D
    v += static_cast<unsigned>(mpz_remove(Du.get_mpz_t(), D.get_mpz_t(), p.get_mpz_t()));
    // small representative of the same square class
    Integer r = u * Du % (p == 2 ? Integer(8) : p);
    return v % 2 ? r * p : r;
  }
}

int real_sign(const Rational& pi0, const Rational& pi1, int sign, const Integer& a) {
  Rational t = pi1 * sign;
  if (sgn(t) == 0) return sgn(pi0);
  if (sgn(pi0) == 0 || sgn(pi0) == sgn(t)) return sgn(t);
  // opposite signs: compare pi0^2 with t^2 a
  Rational diff = pi0 * pi0 - t * t * Rational(a);
  return sgn(diff) > 0 ? sgn(pi0) : sgn(t);
}

}  // namespace

std::vector<QuadraticPlace> obstructions_over_quadratic(const QuadraticSymbolExpr& e) {
  std::vector<QuadraticPlace> out;
  if (e.empty()) return out;
  const etale::Algebra& A = e[0].first.algebra();
  if (A.rank() != 1) throw std::invalid_argument("symbols over a quadratic algebra expected");
  const Integer& a = A.gen(0).value();
  for (const auto& [pi, q] : e)
    if (pi.algebra() != A || !etale::is_unit(pi) || sgn(q) == 0)
      throw std::invalid_argument("symbol entries must be units of the same algebra");
  if (a == 1) {
    for (int branch : {0, 1}) {
      SymbolExpr rational;
      for (const auto& [pi, q] : e) rational.emplace_back(branch ? Rational(pi[0] - pi[1]) : Rational(pi[0] + pi[1]), q);
      for (const auto& [v, inv] : local_invariants(rational))
        if (inv) out.push_back({v, branch});
    }
    return out;
  }
  std::vector<Rational> entries{Rational(a)};
  for (const auto& [pi, q] : e) {
    entries.push_back(q);
    entries.push_back(etale::norm(pi));
    if (sgn(pi[0])) entries.push_back(pi[0]);
    if (sgn(pi[1])) entries.push_back(pi[1]);
  }
  for (const Place& v : relevant_places(entries)) {
    if (v.is_infinite()) {
      if (a < 0) continue;
      for (int branch : {0, 1}) {
        int total = 0;
        for (const auto& [pi, q] : e)
          if (real_sign(pi[0], pi[1], branch ? -1 : 1, a) < 0 && sgn(q) < 0) total ^= 1;
        if (total) out.push_back({v, branch});
      }
      continue;
    }
    if (!is_local_square(Rational(a), v)) {
      // non-split place: corestriction is injective, so (pi, q)_w is read off (N pi, q)_p
      int total = 0;
      for (const auto& [pi, q] : e)
        if (hilbert(etale::norm(pi), q, v) < 0) total ^= 1;
      if (total) out.push_back({v, 0});
      continue;
    }
    for (int branch : {0, 1}) {
      int total = 0;
      for (const auto& [pi, q] : e) {
        Integer z = padic_embedding_class(pi[0], pi[1], branch ? -1 : 1, a, v.prime);
        if (hilbert(Rational(z), q, v) < 0) total ^= 1;
      }
      if (total) out.push_back({v, branch});
    }
  }
  return out;
}

bool is_zero_over_quadratic(const QuadraticSymbolExpr& e) { return obstructions_over_quadratic(e).empty(); }

}  // namespace qm::brauer
