#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "milnorforge/integer_matrix.hpp"

namespace milnorforge {

// Scalar arithmetic of a prime field: the rationals (characteristic 0) or
// F_p. Elements of F_p are stored as integer-valued rationals in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(unsigned long characteristic);

  unsigned long characteristic() const { return p_; }

  Rational reduce(const Rational& a) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  // Throws DomainError on division by zero.
  Rational inv(const Rational& a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  unsigned long p_ = 0;
};

// Univariate polynomial, coefficients low degree first, no trailing zeros.
// The zero polynomial has an empty coefficient vector.
struct Polynomial {
  std::vector<Rational> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const Rational& leading() const { return coeffs.back(); }
  Rational coefficient(std::size_t i) const;

  void trim();
  bool operator==(const Polynomial&) const = default;

  // e.g. "x^2 - 3*x + 1/2"; the variable name is configurable.
  std::string to_string(const std::string& var = "x") const;
};

namespace poly {

Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const PrimeField& f, const Polynomial& a, const Rational& c);
// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const PrimeField& f,
                                         const Polynomial& a,
                                         const Polynomial& b);
Polynomial mod(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial monic_gcd(const PrimeField& f, Polynomial a, Polynomial b);
// s with s*a = 1 mod m; requires gcd(a, m) = 1.
Polynomial inverse_mod(const PrimeField& f, const Polynomial& a,
                       const Polynomial& m);
Polynomial pow_mod(const PrimeField& f, Polynomial base, Integer e,
                   const Polynomial& m);
Rational evaluate(const PrimeField& f, const Polynomial& a, const Rational& x);

// Rabin's test for a monic polynomial over F_p, p > 0.
bool is_irreducible_mod_p(const PrimeField& f, const Polynomial& a);

}  // namespace poly

// Phi_N over the rationals, monic of degree phi(N).
Polynomial cyclotomic_polynomial(unsigned long n);

// Number-theory helpers shared by the field and covers modules.
std::vector<unsigned long> prime_divisors(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);
bool is_prime(unsigned long n);
unsigned long euler_phi(unsigned long n);
// Smallest s >= 1 with a^s = 1 mod n; requires gcd(a, n) = 1.
unsigned long multiplicative_order(unsigned long a, unsigned long n);

}  // namespace milnorforge
