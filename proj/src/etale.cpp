#include "qm/etale.hpp"

#include <bit>

#include "qm/linalg.hpp"

namespace qm::etale {

namespace {

// Bits of m at the positions listed in `kept`, packed to the low end.
Mask compress(Mask m, Mask kept) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; i < 32; ++i)
    if (kept >> i & 1) {
      if (m >> i & 1) out |= Mask{1} << k;
      ++k;
    }
  return out;
}

Mask expand(Mask m, Mask kept) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; i < 32; ++i)
    if (kept >> i & 1) {
      if (m >> k & 1) out |= Mask{1} << i;
      ++k;
    }
  return out;
}

void require_same(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra()) throw AlgebraMismatch();
}

}  // namespace

Algebra::Algebra(std::vector<SquareClass> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 12) throw std::invalid_argument("too many generators");
  coeff_.assign(dim(), Integer(1));
  for (Mask s = 1; s < dim(); ++s) {
    int low = std::countr_zero(s);
    coeff_[s] = coeff_[s & (s - 1)] * gens_[low].value();
  }
}

Algebra::Algebra(std::initializer_list<long> gens) {
  std::vector<SquareClass> g;
  for (long v : gens) g.emplace_back(v);
  *this = Algebra(std::move(g));
}

Algebra Algebra::restrict(Mask kept) const {
  std::vector<SquareClass> g;
  for (std::size_t i = 0; i < rank(); ++i)
    if (kept >> i & 1) g.push_back(gens_[i]);
  return Algebra(std::move(g));
}

Element::Element(Algebra A) : alg_(std::move(A)), c_(alg_.dim(), Rational(0)) {}

Element::Element(Algebra A, std::vector<Rational> coords) : alg_(std::move(A)), c_(std::move(coords)) {
  if (c_.size() != alg_.dim()) throw std::invalid_argument("coordinate count does not match algebra");
}

Element Element::scalar(const Algebra& A, const Rational& q) {
  Element x(A);
  x.c_[0] = q;
  return x;
}

Element Element::monomial(const Algebra& A, Mask m, const Rational& coeff) {
  if (m >= A.dim()) throw std::out_of_range("monomial outside algebra");
  Element x(A);
  x.c_[m] = coeff;
  return x;
}

bool Element::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Element::is_scalar() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Element::to_rational() const {
  if (!is_scalar()) throw std::domain_error("element is not rational");
  return c_[0];
}

Element Element::operator+(const Element& o) const {
  require_same(*this, o);
  Element r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Element Element::operator-(const Element& o) const {
  require_same(*this, o);
  Element r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Element Element::operator*(const Element& o) const { return mul(*this, o); }

Element Element::operator*(const Rational& q) const {
  Element r = *this;
  for (auto& v : r.c_) v *= q;
  return r;
}

Element Element::operator/(const Rational& q) const {
  if (sgn(q) == 0) throw std::domain_error("division by zero");
  Element r = *this;
  for (auto& v : r.c_) v /= q;
  return r;
}

Element operator*(const Rational& q, const Element& x) { return x * q; }

Element mul(const Element& x, const Element& y) {
  require_same(x, y);
  const Algebra& A = x.algebra();
  Element r(A);
  Rational t;
  for (Mask s = 0; s < A.dim(); ++s) {
    if (sgn(x[s]) == 0) continue;
    for (Mask u = 0; u < A.dim(); ++u) {
      if (sgn(y[u]) == 0) continue;
      t = x[s] * y[u];
      const Integer& k = A.mono_coeff(s, u);
      if (k != 1) t *= k;
      r[s ^ u] += t;
    }
  }
  return r;
}

Element power(const Element& x, unsigned k) {
  Element r = Element::one(x.algebra());
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

bool is_unit(const Element& x) {
  Decomposition D(x.algebra());
  for (const auto& part : D.project(x))
    if (part.is_zero()) return false;
  return true;
}

Element inv(const Element& x) {
  const Algebra& A = x.algebra();
  std::size_t n = A.dim();
  linalg::Mat M(n, linalg::Vec(n, 0));
  for (Mask t = 0; t < n; ++t)
    for (Mask s = 0; s < n; ++s)
      if (sgn(x[s]) != 0) M[s ^ t][t] += x[s] * A.mono_coeff(s, t);
  linalg::Vec e(n, 0);
  e[0] = 1;
  auto sol = linalg::solve(M, e);
  if (!sol) {
    Decomposition D(A);
    auto parts = D.project(x);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].is_zero()) throw ZeroDivisor(i);
    throw std::logic_error("singular multiplication map without a zero component");
  }
  return Element(A, std::move(*sol));
}

Element operator/(const Element& x, const Element& y) { return x * inv(y); }

Element apply_sigma(Mask sigma, const Element& x) {
  Element r = x;
  for (Mask s = 0; s < x.algebra().dim(); ++s)
    if (std::popcount(s & sigma) % 2) r[s] = -r[s];
  return r;
}

Element sigma_minus_one(Mask sigma, const Element& x) { return apply_sigma(sigma, x) / x; }

namespace {

Element compress_to_sub(const Element& y, Mask kept) {
  const Algebra& A = y.algebra();
  Mask discard = A.full_mask() & ~kept;
  Element out(A.restrict(kept));
  for (Mask s = 0; s < A.dim(); ++s) {
    if (sgn(y[s]) == 0) continue;
    if (s & discard) throw std::logic_error("norm/trace left the kept subalgebra");
    out[compress(s, kept)] = y[s];
  }
  return out;
}

}  // namespace

Element norm_to_sub(const Element& x, Mask kept) {
  const Algebra& A = x.algebra();
  kept &= A.full_mask();
  Mask discard = A.full_mask() & ~kept;
  Element acc = Element::one(A);
  // iterate over all subsets of the discarded generators
  Mask t = 0;
  do {
    acc = acc * apply_sigma(t, x);
    t = (t - discard) & discard;
  } while (t != 0);
  return compress_to_sub(acc, kept);
}

Element trace_to_sub(const Element& x, Mask kept) {
  const Algebra& A = x.algebra();
  kept &= A.full_mask();
  Mask discard = A.full_mask() & ~kept;
  Element acc(A);
  Mask t = 0;
  do {
    acc = acc + apply_sigma(t, x);
    t = (t - discard) & discard;
  } while (t != 0);
  return compress_to_sub(acc, kept);
}

Rational norm(const Element& x) { return norm_to_sub(x, 0).to_rational(); }
Rational trace(const Element& x) { return trace_to_sub(x, 0).to_rational(); }

Element lift_sub(const Element& y, const Algebra& ambient, Mask kept) {
  if (ambient.restrict(kept) != y.algebra()) throw AlgebraMismatch();
  Element out(ambient);
  for (Mask s = 0; s < y.algebra().dim(); ++s) out[expand(s, kept)] = y[s];
  return out;
}

Element embed(const Element& x, const Algebra& target, const std::vector<std::size_t>& slot_map) {
  const Algebra& A = x.algebra();
  if (slot_map.size() != A.rank()) throw std::invalid_argument("embed: slot map size");
  Mask used = 0;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    if (slot_map[i] >= target.rank() || A.gen(i) != target.gen(slot_map[i]) || (used >> slot_map[i] & 1))
      throw AlgebraMismatch();
    used |= Mask{1} << slot_map[i];
  }
  Element out(target);
  for (Mask s = 0; s < A.dim(); ++s) {
    Mask t = 0;
    for (std::size_t i = 0; i < A.rank(); ++i)
      if (s >> i & 1) t |= Mask{1} << slot_map[i];
    out[t] = x[s];
  }
  return out;
}

std::optional<Element> sqrt_rational(const Algebra& A, const Rational& q) {
  if (sgn(q) == 0) return Element(A);
  SquareClass c(q);
  for (Mask s = 0; s < A.dim(); ++s) {
    const Integer& prod = A.mono_coeff(s, s);
    if (SquareClass(prod) != c) continue;
    auto lam = rational_sqrt(q / Rational(prod));
    if (!lam) continue;
    return Element::monomial(A, s, *lam);
  }
  return std::nullopt;
}

Element sub_generator(const Algebra& A, Mask S) {
  const Integer& prod = A.mono_coeff(S, S);
  SquareClass c(prod);
  auto k = rational_sqrt(Rational(prod) / Rational(c.value()));
  return Element::monomial(A, S, 1 / *k);
}

Decomposition::Decomposition(const Algebra& A) : alg_(A) {
  struct Work {
    std::vector<SquareClass> L;
    std::vector<Mask> mask;
    std::vector<Rational> coeff;
  };
  std::vector<Work> work(1);
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const SquareClass& a = A.gen(i);
    std::vector<Work> next;
    for (auto& w : work) {
      std::optional<Mask> hit;
      Integer prod = 1;
      for (Mask s = 0; s < (Mask{1} << w.L.size()) && !hit; ++s) {
        Integer p = 1;
        for (std::size_t k = 0; k < w.L.size(); ++k)
          if (s >> k & 1) p *= w.L[k].value();
        if (SquareClass(p) == a) {
          hit = s;
          prod = p;
        }
      }
      if (!hit) {
        w.L.push_back(a);
        w.mask.push_back(Mask{1} << (w.L.size() - 1));
        w.coeff.push_back(1);
        next.push_back(std::move(w));
      } else {
        Rational lam = *rational_sqrt(Rational(a.value()) / Rational(prod));
        Work plus = w, minus = w;
        plus.mask.push_back(*hit);
        plus.coeff.push_back(lam);
        minus.mask.push_back(*hit);
        minus.coeff.push_back(-lam);
        next.push_back(std::move(plus));
        next.push_back(std::move(minus));
      }
    }
    work = std::move(next);
  }
  for (auto& w : work) comps_.push_back(FieldComponent{Algebra(w.L), w.mask, w.coeff});

  std::size_t n = A.dim();
  linalg::Mat T;
  for (const auto& comp : comps_) {
    std::size_t base = T.size();
    T.resize(base + comp.field.dim(), linalg::Vec(n, 0));
    for (Mask s = 0; s < n; ++s) {
      Rational c = 1;
      Mask m = 0;
      for (std::size_t i = 0; i < A.rank(); ++i) {
        if (!(s >> i & 1)) continue;
        c *= comp.gen_coeff[i] * comp.field.mono_coeff(m, comp.gen_mask[i]);
        m ^= comp.gen_mask[i];
      }
      T[base + m][s] += c;
    }
  }
  auto Ti = linalg::inverse(T);
  if (!Ti) throw std::logic_error("idempotent decomposition is not invertible");
  lift_matrix_ = std::move(*Ti);
}

std::vector<Element> Decomposition::project(const Element& x) const {
  if (x.algebra() != alg_) throw AlgebraMismatch();
  std::vector<Element> parts;
  for (const auto& comp : comps_) {
    Element y(comp.field);
    for (Mask s = 0; s < alg_.dim(); ++s) {
      if (sgn(x[s]) == 0) continue;
      Rational c = x[s];
      Mask m = 0;
      for (std::size_t i = 0; i < alg_.rank(); ++i) {
        if (!(s >> i & 1)) continue;
        c *= comp.gen_coeff[i] * comp.field.mono_coeff(m, comp.gen_mask[i]);
        m ^= comp.gen_mask[i];
      }
      y[m] += c;
    }
    parts.push_back(std::move(y));
  }
  return parts;
}

Element Decomposition::lift(const std::vector<Element>& parts) const {
  linalg::Vec v;
  if (parts.size() != comps_.size()) throw std::invalid_argument("lift: component count");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].algebra() != comps_[j].field) throw AlgebraMismatch();
    v.insert(v.end(), parts[j].coords().begin(), parts[j].coords().end());
  }
  return Element(alg_, linalg::apply(lift_matrix_, v));
}

namespace {

Element lower_half(const Element& x) {
  const Algebra& A = x.algebra();
  Mask kept = A.full_mask() >> 1;
  Element out(A.restrict(kept));
  for (Mask s = 0; s < out.algebra().dim(); ++s) out[s] = x[s];
  return out;
}

Element upper_half(const Element& x) {
  const Algebra& A = x.algebra();
  Mask kept = A.full_mask() >> 1;
  Element out(A.restrict(kept));
  Mask top = Mask{1} << (A.rank() - 1);
  for (Mask s = 0; s < out.algebra().dim(); ++s) out[s] = x[s | top];
  return out;
}

Element join_halves(const Algebra& A, const Element& lo, const Element& hi) {
  Element out(A);
  Mask top = Mask{1} << (A.rank() - 1);
  for (Mask s = 0; s < lo.algebra().dim(); ++s) {
    out[s] = lo[s];
    out[s | top] = hi[s];
  }
  return out;
}

}  // namespace

std::optional<Element> field_sqrt(const Element& x) {
  const Algebra& K = x.algebra();
  if (x.is_zero()) return x;
  if (K.rank() == 0) {
    auto r = rational_sqrt(x[0]);
    if (!r) return std::nullopt;
    return Element::scalar(K, *r);
  }
  Rational d(K.gen(K.rank() - 1).value());
  Element x0 = lower_half(x), x1 = upper_half(x);
  const Algebra& Kp = x0.algebra();
  if (x1.is_zero()) {
    if (auto p = field_sqrt(x0)) return join_halves(K, *p, Element(Kp));
    if (auto q = field_sqrt(x0 / d)) return join_halves(K, Element(Kp), *q);
    return std::nullopt;
  }
  auto n = field_sqrt(x0 * x0 - x1 * x1 * d);
  if (!n) return std::nullopt;
  for (int sgnv : {1, -1}) {
    Element w = (x0 + *n * Rational(sgnv)) / Rational(2);
    if (w.is_zero()) continue;
    auto p = field_sqrt(w);
    if (!p || p->is_zero()) continue;
    Element q = x1 * inv(*p * Rational(2));
    Element r = join_halves(K, *p, q);
    if (r * r == x) return r;
  }
  return std::nullopt;
}

std::optional<Element> sqrt(const Element& x) {
  Decomposition D(x.algebra());
  std::vector<Element> roots;
  for (const auto& part : D.project(x)) {
    auto r = field_sqrt(part);
    if (!r) return std::nullopt;
    roots.push_back(std::move(*r));
  }
  return D.lift(roots);
}

std::vector<Element> all_sqrts(const Element& x) {
  Decomposition D(x.algebra());
  std::vector<Element> roots;
  for (const auto& part : D.project(x)) {
    auto r = field_sqrt(part);
    if (!r) return {};
    roots.push_back(std::move(*r));
  }
  std::vector<Element> out;
  std::size_t k = roots.size();
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << k); ++signs) {
    bool redundant = false;
    std::vector<Element> choice;
    for (std::size_t j = 0; j < k; ++j) {
      bool neg = signs >> j & 1;
      if (neg && roots[j].is_zero()) redundant = true;
      choice.push_back(neg ? -roots[j] : roots[j]);
    }
    if (!redundant) out.push_back(D.lift(choice));
  }
  return out;
}

std::optional<Rational> square_twist(const Element& x) {
  const Algebra& K = x.algebra();
  if (x.is_zero()) return std::nullopt;
  if (K.rank() == 0) return x[0];
  Rational d(K.gen(K.rank() - 1).value());
  Element x0 = lower_half(x), x1 = upper_half(x);
  auto accept = [&](const Rational& e) { return field_sqrt(x * e).has_value(); };
  if (x1.is_zero()) {
    if (auto e = square_twist(x0); e && accept(*e)) return e;
    if (auto e = square_twist(x0 / d); e && accept(*e)) return e;
    return std::nullopt;
  }
  auto n = field_sqrt(x0 * x0 - x1 * x1 * d);
  if (!n) return std::nullopt;
  for (int sgnv : {1, -1}) {
    Element w = (x0 + *n * Rational(sgnv)) / Rational(2);
    if (w.is_zero()) continue;
    if (auto e = square_twist(w); e && accept(*e)) return e;
  }
  return std::nullopt;
}

Element IdempotentSplit::first(const Element& x) const {
  Element out(target);
  const Algebra& A = x.algebra();
  for (Mask s = 0; s < A.dim(); ++s) {
    if (sgn(x[s]) == 0) continue;
    Mask w = s >> dropped_slot & 1;
    Mask rest = s & ~(Mask{1} << dropped_slot);
    Mask low = rest & ((Mask{1} << dropped_slot) - 1);
    Mask t = low | ((rest >> 1) & ~((Mask{1} << dropped_slot) - 1));
    Rational c = x[s];
    if (w) {
      Mask k = Mask{1} << (kept_slot < dropped_slot ? kept_slot : kept_slot - 1);
      c *= target.mono_coeff(t, k);
      t ^= k;
    }
    out[t] += c;
  }
  return out;
}

Element IdempotentSplit::second(const Element& x) const {
  Element y = x;
  for (Mask s = 0; s < x.algebra().dim(); ++s)
    if (s >> dropped_slot & 1) y[s] = -y[s];
  return first(y);
}

IdempotentSplit idempotent_split(const Algebra& A, std::size_t i, std::size_t j) {
  if (i == j || i >= A.rank() || j >= A.rank() || A.gen(i) != A.gen(j)) throw NoRepeatedClass();
  std::vector<SquareClass> g;
  for (std::size_t k = 0; k < A.rank(); ++k)
    if (k != j) g.push_back(A.gen(k));
  return IdempotentSplit{Algebra(std::move(g)), i, j};
}

Element hilbert90_witness(const Element& omega, Mask sigma, const Element& anti) {
  if (omega * apply_sigma(sigma, omega) != Element::one(omega.algebra())) throw NormNotOne();
  Element one = Element::one(omega.algebra());
  Element beta = one + omega;
  if (!is_unit(beta)) beta = anti * (one - omega);
  if (!is_unit(beta) || beta / apply_sigma(sigma, beta) != omega)
    throw std::logic_error("hilbert90: witness construction failed");
  return beta;
}

Element hilbert90_witness(const Element& omega) {
  if (omega.algebra().rank() != 1) throw std::invalid_argument("hilbert90_witness expects a quadratic algebra");
  return hilbert90_witness(omega, 1, Element::gen(omega.algebra(), 0));
}

TripleFactors triple_norm_decompose(const Element& rho) {
  const Algebra& A = rho.algebra();
  if (A.rank() != 2) throw std::invalid_argument("triple_norm_decompose expects F_{a,b}");
  Rational n = norm(rho);
  auto x = rational_sqrt(n);
  if (sgn(n) == 0 || !x) throw NormNotSquare();
  Element anti_ab = Element::monomial(A, 3);
  Element omega = rho * apply_sigma(3, rho) / *x;
  Element rho_ab = hilbert90_witness(omega, 1, anti_ab);
  Element tau = rho / rho_ab;
  Element kappa = apply_sigma(1, tau) / tau;
  Element tau_a = hilbert90_witness(inv(kappa), 1, Element::gen(A, 0));
  Element tau_b = tau / tau_a;
  if (apply_sigma(1, tau_b) != tau_b || apply_sigma(2, tau_a) != tau_a || tau_a * tau_b * rho_ab != rho)
    throw std::logic_error("triple_norm_decompose: factors failed verification");
  return TripleFactors{tau_a, tau_b, rho_ab};
}

Element unit_circle_element(const Algebra& A, Mask sigma, std::size_t gen_index) {
  Element g = Element::gen(A, gen_index);
  for (long t = 1;; ++t) {
    Element z = Element::scalar(A, t) + g;
    if (is_unit(z)) return z / apply_sigma(sigma, z);
  }
}

}  // namespace qm::etale
