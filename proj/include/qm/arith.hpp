#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qm {

using Integer = mpz_class;
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Prime factorization of |n| (n != 0), primes ascending. Results are memoized.
using Factorization = std::vector<std::pair<Integer, unsigned>>;
const Factorization& factor(const Integer& n);

bool is_probable_prime(const Integer& n);

// Signed squarefree part; for a rational p/q this is the squarefree part of p*q.
Integer squarefree_part(const Integer& n);
Integer squarefree_part(const Rational& q);

std::optional<Integer> integer_sqrt_exact(const Integer& n);
std::optional<Rational> rational_sqrt(const Rational& q);
bool is_rational_square(const Rational& q);

// Primes dividing the numerator or the denominator.
std::vector<Integer> prime_support(const Rational& q);

// Valuation of a nonzero rational at a prime.
long valuation(const Rational& q, const Integer& p);

// Square root of a modulo an odd prime p (a must be a residue); smallest root.
Integer sqrt_mod_prime(const Integer& a, const Integer& p);

// Element of Q^x / Q^x2 as a signed squarefree integer.
class SquareClass {
 public:
  SquareClass() : value_(1) {}
  SquareClass(long v);  // NOLINT(google-explicit-constructor)
  explicit SquareClass(const Integer& v);
  explicit SquareClass(const Rational& q);

  const Integer& value() const { return value_; }
  bool is_one() const { return value_ == 1; }
  Rational as_rational() const { return Rational(value_); }

  SquareClass operator*(const SquareClass& o) const;
  bool operator==(const SquareClass& o) const { return value_ == o.value_; }
  bool operator!=(const SquareClass& o) const { return value_ != o.value_; }
  bool operator<(const SquareClass& o) const { return value_ < o.value_; }

 private:
  Integer value_;
};

std::string to_string(const SquareClass& c);

}  // namespace qm
