#include "milnorforge/fox.hpp"

#include "milnorforge/error.hpp"

namespace milnorforge {

FreeGroupRingElement FreeGroupRingElement::one() { return word({}); }

FreeGroupRingElement FreeGroupRingElement::word(const Word& w) {
  FreeGroupRingElement e;
  e.add_term(free_reduce(w), 1);
  return e;
}

void FreeGroupRingElement::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeGroupRingElement FreeGroupRingElement::operator+(const FreeGroupRingElement& rhs) const {
  FreeGroupRingElement out = *this;
  out += rhs;
  return out;
}

FreeGroupRingElement& FreeGroupRingElement::operator+=(const FreeGroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

FreeGroupRingElement FreeGroupRingElement::operator-(const FreeGroupRingElement& rhs) const {
  FreeGroupRingElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
  return out;
}

FreeGroupRingElement FreeGroupRingElement::operator*(const FreeGroupRingElement& rhs) const {
  FreeGroupRingElement out;
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : rhs.terms_) out.add_term(concat(u, v), a * b);
  return out;
}

namespace {

long reduce_mod(long e, long n) {
  e %= n;
  return e < 0 ? e + n : e;
}

std::size_t letter_generator(int letter) { return static_cast<std::size_t>(std::abs(letter)) - 1; }

}  // namespace

CyclicGroupRingElement::CyclicGroupRingElement(long n) : n_(n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
}

Integer CyclicGroupRingElement::coefficient(long exponent) const {
  auto it = terms_.find(reduce_mod(exponent, n_));
  return it == terms_.end() ? Integer(0) : it->second;
}

void CyclicGroupRingElement::add_term(long exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(reduce_mod(exponent, n_), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CyclicGroupRingElement CyclicGroupRingElement::operator+(const CyclicGroupRingElement& rhs) const {
  if (rhs.n_ != n_) throw InputError("group ring elements over different cyclic groups");
  CyclicGroupRingElement out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

CyclicGroupRingElement CyclicGroupRingElement::operator*(const CyclicGroupRingElement& rhs) const {
  if (rhs.n_ != n_) throw InputError("group ring elements over different cyclic groups");
  CyclicGroupRingElement out(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

FreeGroupRingElement fox_derivative(const Word& w, std::size_t generator,
                                    std::size_t generator_count) {
  if (generator >= generator_count)
    throw InputError("unknown generator index " + std::to_string(generator));
  FreeGroupRingElement out;
  Word prefix;
  for (int letter : w) {
    if (letter_generator(letter) >= generator_count)
      throw InputError("word letter out of range");
    if (letter_generator(letter) == generator) {
      if (letter > 0) {
        out.add_term(prefix, 1);
      } else {
        // d(x^-1)/dx = -x^-1.
        out.add_term(concat(prefix, {letter}), -1);
      }
    }
    prefix = concat(prefix, {letter});
  }
  return out;
}

FieldElement specialize(const FreeGroupRingElement& e, const std::vector<FieldElement>& values,
                        const FieldSpec& field) {
  FieldElement sum = field.zero();
  for (const auto& [w, c] : e.terms()) {
    FieldElement term = field.one();
    for (int letter : w) {
      const std::size_t g = letter_generator(letter);
      if (g >= values.size())
        throw InputError("no value assigned to generator " + std::to_string(g));
      term *= letter > 0 ? values[g] : values[g].inverse();
    }
    sum += term * field.from_rational(Rational(c));
  }
  return sum;
}

CyclicGroupRingElement specialize(const FreeGroupRingElement& e,
                                  const std::vector<long>& residues, long n) {
  CyclicGroupRingElement out(n);
  for (const auto& [w, c] : e.terms()) {
    long exponent = 0;
    for (int letter : w) {
      const std::size_t g = letter_generator(letter);
      if (g >= residues.size())
        throw InputError("no residue assigned to generator " + std::to_string(g));
      exponent += letter > 0 ? residues[g] : -residues[g];
    }
    out.add_term(exponent, c);
  }
  return out;
}

std::vector<std::vector<LaurentPolynomial>> abelianized_jacobian(const GroupPresentation& p) {
  const std::size_t g = p.generator_count();
  std::vector<std::vector<LaurentPolynomial>> out(p.relators.size(),
                                                  std::vector<LaurentPolynomial>(g));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::vector<long> prefix(g, 0);
    for (int letter : p.relators[r]) {
      const std::size_t j = letter_generator(letter);
      if (j >= g) throw InputError("relator letter out of range");
      LaurentPolynomial& entry = out[r][j];
      if (letter > 0) {
        entry[prefix] += 1;
        if (entry[prefix] == 0) entry.erase(prefix);
        ++prefix[j];
      } else {
        --prefix[j];
        entry[prefix] -= 1;
        if (entry[prefix] == 0) entry.erase(prefix);
      }
    }
  }
  return out;
}

FieldElement evaluate(const LaurentPolynomial& e, const std::vector<FieldElement>& values,
                      const FieldSpec& field) {
  FieldElement sum = field.zero();
  for (const auto& [exponents, c] : e) {
    if (exponents.size() > values.size()) throw InputError("missing generator value");
    FieldElement term = field.from_rational(Rational(c));
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] != 0) term *= values[i].pow(exponents[i]);
    sum += term;
  }
  return sum;
}

CyclicGroupRingElement evaluate(const LaurentPolynomial& e, const std::vector<long>& residues,
                                long n) {
  CyclicGroupRingElement out(n);
  for (const auto& [exponents, c] : e) {
    if (exponents.size() > residues.size()) throw InputError("missing generator residue");
    long exponent = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      exponent = (exponent + (exponents[i] % n) * (residues[i] % n)) % n;
    out.add_term(exponent, c);
  }
  return out;
}

}  // namespace milnorforge
