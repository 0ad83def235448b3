#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "milnorforge/polynomial.hpp"

namespace milnorforge {

class FieldElement;

// A finite extension of a prime field, F[x]/(modulus), with modulus monic and
// irreducible. Characteristic 0 fields are always cyclotomic, Q[x]/(Phi_N);
// the rationals themselves are Q[x]/(Phi_1) = Q[x]/(x - 1).
//
// Algebraic closures are never built. Every matrix that the covers module
// feeds into rank computations has entries in the subfield generated by the
// N-th roots of unity, and rank does not change under field extension, so
// any field containing those roots gives the same dimensions as the
// algebraic closure would.
class FieldSpec {
 public:
  static FieldSpec rationals();
  // Q[x]/(Phi_n), n >= 1.
  static FieldSpec cyclotomic(unsigned long n);
  // F_p[x]/(modulus). Throws DomainError if p is not prime or modulus is not
  // monic irreducible over F_p.
  static FieldSpec finite(unsigned long p, Polynomial modulus);

  unsigned long characteristic() const;
  std::size_t degree() const;
  const Polynomial& modulus() const;
  const PrimeField& prime_field() const;
  // N when the field was built as Q[x]/(Phi_N).
  std::optional<unsigned long> cyclotomic_order() const;
  // p^degree for finite fields; throws for characteristic 0.
  Integer order() const;
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long v) const;
  FieldElement from_rational(const Rational& v) const;
  // Class of x.
  FieldElement generator() const;
  // Reduces an arbitrary polynomial modulo the modulus.
  FieldElement element(const Polynomial& p) const;
  // Parses strings produced by FieldElement::to_string ("x^2 - 3*x + 1/2").
  FieldElement parse(const std::string& text) const;
  // Finite fields only: the element whose coefficient vector is the base-p
  // expansion of index (constant term = least significant digit).
  FieldElement enumerate(const Integer& index) const;

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  struct Data;

 private:
  explicit FieldSpec(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() = default;

  const FieldSpec& field() const { return field_; }
  // Coefficients of the canonical representative, length = field degree.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in the prime field.
  bool is_scalar() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  // Throws DomainError for zero.
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  FieldElement pow(const Integer& e) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  FieldElement(FieldSpec f, std::vector<Rational> c)
      : field_(std::move(f)), coeffs_(std::move(c)) {}
  void check_same_field(const FieldElement& rhs) const;
  Polynomial as_polynomial() const;

  FieldSpec field_{FieldSpec::rationals()};
  std::vector<Rational> coeffs_{Rational(0)};

  friend class FieldSpec;
};

// Smallest finite field of characteristic p containing the N-th roots of
// unity: F_{p^s} with s the multiplicative order of p mod N. The modulus is
// the first monic irreducible of degree s in the enumeration order of
// FieldSpec::enumerate. Throws DomainError when p | N or p is not prime.
FieldSpec splitting_field(unsigned long p, unsigned long n);

// A deterministic element of exact multiplicative order n. Throws
// DomainError when the field has none.
FieldElement root_of_unity(const FieldSpec& field, unsigned long n);

// Exact multiplicative order, or 0 if it exceeds `limit`.
unsigned long multiplicative_order(const FieldElement& a, unsigned long limit);

}  // namespace milnorforge
