#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "milnorforge/field.hpp"
#include "milnorforge/field_matrix.hpp"
#include "milnorforge/integer_matrix.hpp"
#include "milnorforge/presentation.hpp"

namespace milnorforge {

// Element of Z[F]: integer combination of freely reduced words.
class FreeGroupRingElement {
 public:
  FreeGroupRingElement() = default;
  static FreeGroupRingElement one();
  static FreeGroupRingElement word(const Word& w);

  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreeGroupRingElement operator+(const FreeGroupRingElement& rhs) const;
  FreeGroupRingElement operator-(const FreeGroupRingElement& rhs) const;
  FreeGroupRingElement operator*(const FreeGroupRingElement& rhs) const;
  FreeGroupRingElement& operator+=(const FreeGroupRingElement& rhs);
  bool operator==(const FreeGroupRingElement& rhs) const = default;

  void add_term(const Word& w, const Integer& c);

 private:
  std::map<Word, Integer> terms_;
};

// Element of Z[Z_N]: exponent -> coefficient, exponents reduced mod N, zero
// coefficients dropped.
class CyclicGroupRingElement {
 public:
  explicit CyclicGroupRingElement(long n);

  long order() const { return n_; }
  const std::map<long, Integer>& terms() const { return terms_; }
  Integer coefficient(long exponent) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(long exponent, const Integer& c);
  CyclicGroupRingElement operator+(const CyclicGroupRingElement& rhs) const;
  CyclicGroupRingElement operator*(const CyclicGroupRingElement& rhs) const;
  bool operator==(const CyclicGroupRingElement& rhs) const = default;

 private:
  long n_;
  std::map<long, Integer> terms_;
};

// Fox derivative d w / d x_generator in Z[F]. Throws InputError when the
// generator index is out of range.
FreeGroupRingElement fox_derivative(const Word& w, std::size_t generator,
                                    std::size_t generator_count);

// Ring homomorphisms Z[F] -> k and Z[F] -> Z[Z_N] determined by the image of
// each generator. Throws InputError when a generator in `e` has no value.
FieldElement specialize(const FreeGroupRingElement& e, const std::vector<FieldElement>& values,
                        const FieldSpec& field);
CyclicGroupRingElement specialize(const FreeGroupRingElement& e,
                                  const std::vector<long>& residues, long n);

// Image of a Fox derivative in the group ring of H_1(F) = Z^g: exponent
// vector -> coefficient.
using LaurentPolynomial = std::map<std::vector<long>, Integer>;

// Abelianized Fox Jacobian: entry (r, j) is the image of d relator_r / d x_j.
// Computed directly from prefix exponent vectors, without expanding in Z[F].
std::vector<std::vector<LaurentPolynomial>> abelianized_jacobian(const GroupPresentation& p);

FieldElement evaluate(const LaurentPolynomial& e, const std::vector<FieldElement>& values,
                      const FieldSpec& field);
CyclicGroupRingElement evaluate(const LaurentPolynomial& e, const std::vector<long>& residues,
                                long n);

}  // namespace milnorforge
