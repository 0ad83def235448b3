#include "milnorforge/field.hpp"

#include <cctype>
#include <utility>

#include "milnorforge/error.hpp"

namespace milnorforge {

struct FieldSpec::Data {
  PrimeField base;
  Polynomial modulus;
  std::optional<unsigned long> cyclotomic;
  std::string name;
};

namespace {

std::vector<Rational> pad(const Polynomial& p, std::size_t n) {
  std::vector<Rational> c = p.coeffs;
  c.resize(n);
  return c;
}

}  // namespace

FieldSpec FieldSpec::rationals() {
  static const FieldSpec q = cyclotomic(1);
  return q;
}

FieldSpec FieldSpec::cyclotomic(unsigned long n) {
  if (n == 0) throw DomainError("cyclotomic field requires N >= 1");
  auto d = std::make_shared<Data>();
  d->base = PrimeField(0);
  d->modulus = cyclotomic_polynomial(n);
  d->cyclotomic = n;
  d->name = d->modulus.degree() == 1 ? "Q" : "Q[x]/Phi_" + std::to_string(n);
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::finite(unsigned long p, Polynomial modulus) {
  if (!is_prime(p))
    throw DomainError("finite field characteristic must be prime, got " +
                      std::to_string(p));
  PrimeField base(p);
  for (auto& c : modulus.coeffs) c = base.reduce(c);
  modulus.trim();
  if (modulus.degree() < 1 || modulus.leading() != 1)
    throw DomainError("finite field modulus must be monic of degree >= 1");
  if (!poly::is_irreducible_mod_p(base, modulus))
    throw DomainError("finite field modulus " + modulus.to_string() +
                      " is reducible over F_" + std::to_string(p));
  auto d = std::make_shared<Data>();
  d->base = base;
  d->modulus = std::move(modulus);
  d->name = d->modulus.degree() == 1
                ? "GF(" + std::to_string(p) + ")"
                : "GF(" + std::to_string(p) + "^" +
                      std::to_string(d->modulus.degree()) + ")";
  return FieldSpec(std::move(d));
}

unsigned long FieldSpec::characteristic() const {
  return data_->base.characteristic();
}
std::size_t FieldSpec::degree() const {
  return static_cast<std::size_t>(data_->modulus.degree());
}
const Polynomial& FieldSpec::modulus() const { return data_->modulus; }
const PrimeField& FieldSpec::prime_field() const { return data_->base; }
std::optional<unsigned long> FieldSpec::cyclotomic_order() const {
  return data_->cyclotomic;
}
std::string FieldSpec::name() const { return data_->name; }

Integer FieldSpec::order() const {
  if (characteristic() == 0) throw DomainError("field of characteristic 0 is infinite");
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), characteristic(), degree());
  return q;
}

FieldElement FieldSpec::zero() const {
  return FieldElement(*this, std::vector<Rational>(degree()));
}

FieldElement FieldSpec::one() const { return from_integer(1); }

FieldElement FieldSpec::from_integer(long v) const {
  return from_rational(Rational(v));
}

FieldElement FieldSpec::from_rational(const Rational& v) const {
  std::vector<Rational> c(degree());
  c[0] = data_->base.reduce(v);
  return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::generator() const {
  return element(Polynomial({Rational(0), Rational(1)}));
}

FieldElement FieldSpec::element(const Polynomial& p) const {
  Polynomial reduced = p;
  for (auto& c : reduced.coeffs) c = data_->base.reduce(c);
  reduced.trim();
  reduced = poly::mod(data_->base, reduced, data_->modulus);
  return FieldElement(*this, pad(reduced, degree()));
}

FieldElement FieldSpec::enumerate(const Integer& index) const {
  if (characteristic() == 0) throw DomainError("enumerate requires a finite field");
  if (index < 0 || index >= order()) throw InputError("element index out of range");
  std::vector<Rational> c(degree());
  Integer rest = index;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer digit;
    mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                   characteristic());
    c[i] = Rational(digit);
  }
  return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::parse(const std::string& text) const {
  // Grammar: term (('+'|'-') term)*, term = [coef ['*']] ['x' ['^' k]] | coef
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&]() -> FieldElement {
    throw InputError("cannot parse field element '" + text + "'");
  };
  std::vector<Rational> acc;
  auto add_term = [&](const Rational& c, std::size_t k) {
    if (acc.size() <= k) acc.resize(k + 1);
    acc[k] += c;
  };
  skip();
  if (i == text.size()) fail();
  bool first = true;
  while (i < text.size()) {
    skip();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail();
    }
    first = false;
    Rational coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    if (i > start) {
      try {
        coef = Rational(text.substr(start, i - start));
        coef.canonicalize();
      } catch (const std::invalid_argument&) {
        fail();
      }
      if (coef.get_den() == 0) fail();
      have_coef = true;
    }
    skip();
    std::size_t power = 0;
    if (i < text.size() && text[i] == '*') {
      if (!have_coef) fail();
      ++i;
      skip();
      if (i >= text.size() || text[i] != 'x') fail();
    }
    if (i < text.size() && text[i] == 'x') {
      ++i;
      power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t s = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == s) fail();
        power = std::stoul(text.substr(s, i - s));
      }
    } else if (!have_coef) {
      fail();
    }
    add_term(sign * coef, power);
    skip();
  }
  return element(Polynomial(std::move(acc)));
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  if (data_ == other.data_) return true;
  return characteristic() == other.characteristic() &&
         data_->modulus == other.data_->modulus;
}

// -------------------------------------------------------------- FieldElement

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (field_ != rhs.field_)
    throw DomainError("mixed fields: " + field_.name() + " and " +
                      rhs.field_.name());
}

Polynomial FieldElement::as_polynomial() const { return Polynomial(coeffs_); }

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool FieldElement::is_scalar() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  FieldElement out = *this;
  out += rhs;
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  FieldElement out = *this;
  out -= rhs;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  const PrimeField& f = field_.prime_field();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = f.add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  const PrimeField& f = field_.prime_field();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = f.sub(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  const PrimeField& f = field_.prime_field();
  for (auto& c : out.coeffs_) c = f.neg(c);
  return out;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  const PrimeField& f = field_.prime_field();
  if (coeffs_.size() == 1)
    return FieldElement(field_, {f.mul(coeffs_[0], rhs.coeffs_[0])});
  if (is_zero() || rhs.is_zero()) return field_.zero();
  // Schoolbook product followed by reduction modulo the monic modulus.
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  const auto& m = field_.modulus().coeffs;
  for (std::size_t k = prod.size(); k-- > n;) {
    Rational c = f.reduce(prod[k]);
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] -= c * m[i];
  }
  prod.resize(n);
  for (auto& c : prod) c = f.reduce(c);
  return FieldElement(field_, std::move(prod));
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  *this = *this * rhs;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in " + field_.name());
  const PrimeField& f = field_.prime_field();
  if (coeffs_.size() == 1) return FieldElement(field_, {f.inv(coeffs_[0])});
  Polynomial inv = poly::inverse_mod(f, as_polynomial(), field_.modulus());
  return FieldElement(field_, pad(inv, coeffs_.size()));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  return *this * rhs.inverse();
}

FieldElement FieldElement::pow(long e) const { return pow(Integer(e)); }

FieldElement FieldElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  FieldElement result = field_.one();
  FieldElement base = *this;
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::string FieldElement::to_string() const {
  return as_polynomial().to_string("x");
}

// ------------------------------------------------------------ constructions

FieldSpec splitting_field(unsigned long p, unsigned long n) {
  if (!is_prime(p))
    throw DomainError("splitting field requires a prime characteristic, got " +
                      std::to_string(p));
  if (n == 0) throw DomainError("splitting field requires N >= 1");
  if (n % p == 0)
    throw DomainError("hypothesis violated: characteristic " + std::to_string(p) +
                      " divides the cover order N = " + std::to_string(n));
  const unsigned long s = multiplicative_order(p % n, n);
  const PrimeField base(p);
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, s);
  for (Integer v = 0; v < count; ++v) {
    std::vector<Rational> c(s + 1);
    Integer rest = v;
    for (unsigned long i = 0; i < s; ++i) {
      Integer digit;
      mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p);
      c[i] = Rational(digit);
    }
    c[s] = 1;
    Polynomial candidate(std::move(c));
    if (poly::is_irreducible_mod_p(base, candidate))
      return FieldSpec::finite(p, std::move(candidate));
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

unsigned long multiplicative_order(const FieldElement& a, unsigned long limit) {
  if (a.is_zero()) return 0;
  FieldElement x = a;
  for (unsigned long k = 1; k <= limit; ++k) {
    if (x.is_one()) return k;
    x *= a;
  }
  return 0;
}

namespace {

bool has_exact_order(const FieldElement& a, unsigned long n) {
  if (!a.pow(static_cast<long>(n)).is_one()) return false;
  for (unsigned long q : prime_divisors(n))
    if (a.pow(static_cast<long>(n / q)).is_one()) return false;
  return true;
}

}  // namespace

FieldElement root_of_unity(const FieldSpec& field, unsigned long n) {
  if (n == 0) throw DomainError("root of unity order must be >= 1");
  if (field.characteristic() == 0) {
    const unsigned long m = field.cyclotomic_order().value_or(1);
    // Roots of unity in Q(zeta_m) are +-zeta_m^k.
    if (m % n == 0) return field.generator().pow(static_cast<long>(m / n));
    if (n % 2 == 0 && m % 2 == 1 && m % (n / 2) == 0)
      return -field.generator().pow(static_cast<long>(m / (n / 2)));
    throw DomainError(field.name() + " contains no root of unity of order " +
                      std::to_string(n));
  }
  const Integer q_minus_1 = field.order() - 1;
  if (q_minus_1 % n != 0)
    throw DomainError(field.name() + " contains no root of unity of order " +
                      std::to_string(n));
  const Integer cofactor = q_minus_1 / n;
  for (Integer v = 1; v <= q_minus_1; ++v) {
    FieldElement a = field.enumerate(v).pow(cofactor);
    if (has_exact_order(a, n)) return a;
  }
  throw DomainError("no root of unity found");  // unreachable: F* is cyclic
}

}  // namespace milnorforge
