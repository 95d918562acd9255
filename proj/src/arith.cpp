#include "qm/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qm {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string t) {
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    return t;
  };
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  std::string num = strip(s.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : strip(s.substr(slash + 1));
  auto valid = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, g = 1, q = 1, tmp;
    unsigned long r = 1, m = 128;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          tmp = abs(x - y);
          q = q * tmp;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        tmp = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

struct FactorCache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, Factorization> table;
};

FactorCache& cache() {
  static FactorCache c;
  return c;
}

}  // namespace

const Factorization& factor(const Integer& n_in) {
  if (n_in == 0) throw std::invalid_argument("factor(0)");
  Integer n = abs(n_in);
  std::string key = n.get_str(16);
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.table.find(key);
    if (it != c.table.end()) return it->second;
  }
  std::map<Integer, unsigned> acc;
  Integer m = n;
  static const unsigned small_limit = 2000;
  for (unsigned p = 2; p < small_limit && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      acc[Integer(p)] += 1;
      m /= p;
    }
  }
  factor_into(m, acc);
  Factorization f(acc.begin(), acc.end());
  std::unique_lock lock(c.mutex);
  return c.table.emplace(key, std::move(f)).first->second;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part(0)");
  Integer out = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(n))
    if (e % 2) out *= p;
  return out;
}

Integer squarefree_part(const Rational& q) {
  if (q == 0) throw std::invalid_argument("squarefree_part(0)");
  return squarefree_part(Integer(q.get_num() * q.get_den()));
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto n = integer_sqrt_exact(q.get_num());
  if (!n) return std::nullopt;
  auto d = integer_sqrt_exact(q.get_den());
  if (!d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

bool is_rational_square(const Rational& q) { return q != 0 && rational_sqrt(q).has_value(); }

std::vector<Integer> prime_support(const Rational& q) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor(q.get_num())) out.push_back(p);
  if (q.get_den() != 1)
    for (const auto& [p, e] : factor(q.get_den())) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw std::invalid_argument("valuation(0)");
  auto count = [&](Integer n) {
    long v = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++v;
    }
    return v;
  };
  return count(q.get_num()) - count(q.get_den());
}

Integer sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
    throw std::domain_error("sqrt_mod_prime: not a residue");
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) z += 1;
  Integer c, t, r, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long mm = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < mm; ++j) b = b * b % p;
    mm = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  Integer other = p - r;
  return r < other ? r : other;
}

SquareClass::SquareClass(long v) : value_(squarefree_part(Integer(v))) {}
SquareClass::SquareClass(const Integer& v) : value_(squarefree_part(v)) {}
SquareClass::SquareClass(const Rational& q) : value_(squarefree_part(q)) {}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  SquareClass out;
  out.value_ = value_ * o.value_ / (g * g);
  return out;
}

std::string to_string(const SquareClass& c) { return c.value().get_str(); }

}  // namespace qm
