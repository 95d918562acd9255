#pragma once

// Independent reference implementations used to freeze expected values and to cross-check the
// library. Nothing here calls into the code under test except for plain data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "qm/arith.hpp"

namespace oracle {

using qm::Integer;
using qm::Rational;

// Polynomial product in Q[x_1..x_n]/(x_i^2 - a_i) on exponent vectors.
inline std::vector<Rational> poly_mul(const std::vector<long>& gens, const std::vector<Rational>& x,
                                      const std::vector<Rational>& y) {
  std::size_t n = gens.size(), dim = std::size_t{1} << n;
  std::map<std::vector<int>, Rational> acc;
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      if (x[s] == 0 || y[t] == 0) continue;
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = int(s >> i & 1) + int(t >> i & 1);
      acc[e] += x[s] * y[t];
    }
  std::vector<Rational> out(dim, 0);
  for (auto& [e, c] : acc) {
    Rational k = c;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 2) k *= gens[i];
      if (e[i] == 1) idx |= std::size_t{1} << i;
    }
    out[idx] += k;
  }
  return out;
}

// Real evaluation with sqrt(a_i) -> sign_i * sqrt(a_i); all a_i > 0.
inline double evaluate(const std::vector<long>& gens, const std::vector<Rational>& x, unsigned signs) {
  double v = 0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    double m = x[s].get_d();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (s >> i & 1) m *= ((signs >> i & 1) ? -1.0 : 1.0) * std::sqrt(double(gens[i]));
    v += m;
  }
  return v;
}

// (a, b)_p by counting primitive solutions of a x^2 + b y^2 = z^2 modulo p^k (k = 3, or 6 for p = 2).
inline int hilbert_bruteforce(long a, long b, long p) {
  long k = p == 2 ? 6 : 3, m = 1;
  for (long i = 0; i < k; ++i) m *= p;
  auto md = [m](long v) { return ((v % m) + m) % m; };
  std::vector<char> unit_sqrt(m, 0), any_sqrt(m, 0);
  for (long z = 0; z < m; ++z) {
    long s = md(z * z);
    any_sqrt[s] = 1;
    if (z % p) unit_sqrt[s] = 1;
  }
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      long s = md(md(a) * md(x * x) + md(b) * md(y * y));
      bool prim = (x % p) || (y % p);
      if (prim ? any_sqrt[s] : unit_sqrt[s]) return 1;
    }
  return -1;
}

inline long squarefree(long n) {
  long sign = n < 0 ? -1 : 1, m = n < 0 ? -n : n, out = 1;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;
}

// Small integer point on a x^2 + b y^2 = z^2 with max(|x|,|y|) <= H, (x, y) != 0.
inline std::optional<std::array<long, 3>> conic_search(long a, long b, long H) {
  for (long h = 1; h <= H; ++h)
    for (long x = 0; x <= h; ++x)
      for (long y = 0; y <= h; ++y) {
        if (std::max(x, y) != h) continue;
        long v = a * x * x + b * y * y;
        if (v < 0) continue;
        long z = std::lround(std::sqrt(double(v)));
        for (long zz = std::max(0L, z - 1); zz <= z + 1; ++zz)
          if (zz * zz == v) return std::array<long, 3>{x, y, zz};
      }
  return std::nullopt;
}

// Square classes of nonzero values P^2 - g Q^2 with |P|, |Q| <= H, with one witness each.
struct NormClassTable {
  std::map<long, std::pair<long, long>> witness;
};

inline NormClassTable norm_classes(long g, long H) {
  NormClassTable t;
  for (long P = 0; P <= H; ++P)
    for (long Q = 0; Q <= H; ++Q) {
      long v = P * P - g * Q * Q;
      if (v == 0) continue;
      long c = squarefree(v);
      t.witness.emplace(c, std::make_pair(P, Q));
    }
  return t;
}

inline long class_product(long a, long b) {
  long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  return (a / g) * (b / g);
}

// Brute-force decision of u in N_x N_y N_z by class products; returns witnesses (P,Q) per factor.
struct TripleHit {
  long cx, cy, cz;
  std::pair<long, long> wx, wy, wz;
};

inline std::optional<TripleHit> triple_search(long u, const NormClassTable& X, const NormClassTable& Y,
                                              const NormClassTable& Z) {
  long cu = squarefree(u);
  for (const auto& [cx, wx] : X.witness)
    for (const auto& [cy, wy] : Y.witness) {
      long need = class_product(class_product(cu, cx), cy);
      auto it = Z.witness.find(need);
      if (it != Z.witness.end()) return TripleHit{cx, cy, need, wx, wy, it->second};
    }
  return std::nullopt;
}

inline long powmod(long b, long e, long m) {
  long r = 1;
  b %= m;
  if (b < 0) b += m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

// (a,b)_p for odd p from the textbook formula with Euler's criterion.
inline int hilbert_odd(long a, long b, long p) {
  int alpha = 0, beta = 0;
  while (a % p == 0) a /= p, ++alpha;
  while (b % p == 0) b /= p, ++beta;
  int s = (alpha * beta % 2 && p % 4 == 3) ? -1 : 1;
  if (beta % 2 && powmod(a, (p - 1) / 2, p) != 1) s = -s;
  if (alpha % 2 && powmod(b, (p - 1) / 2, p) != 1) s = -s;
  return s;
}

// (a,b) = 0 over Q: brute force at 2, the formula at odd primes dividing ab, signs at infinity.
inline bool symbol_zero(long a, long b) {
  if (a < 0 && b < 0) return false;
  if (hilbert_bruteforce(a, b, 2) == -1) return false;
  for (long n : {a, b}) {
    long m = n < 0 ? -n : n;
    for (long p = 3; p <= m; p += 2)
      if (m % p == 0) {
        if (hilbert_odd(a, b, p) == -1) return false;
        while (m % p == 0) m /= p;
      }
  }
  return true;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline Rational random_rational(std::mt19937_64& g, long H) {
  long n = uniform(g, -H, H), d = uniform(g, 1, H);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace oracle
