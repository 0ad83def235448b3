#include "milnorforge/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "milnorforge/error.hpp"

namespace milnorforge {

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(unsigned long characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw DomainError("characteristic must be 0 or a prime, got " +
                      std::to_string(p_));
}

Rational PrimeField::reduce(const Rational& a) const {
  if (p_ == 0) return a;
  Integer pz(p_);
  Integer num = a.get_num();
  Integer den = a.get_den();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  if (den != 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw DomainError("denominator divisible by the characteristic");
    r = r * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
  }
  return Rational(r);
}

Rational PrimeField::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  Integer r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Rational(r);
}

Rational PrimeField::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  Integer r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Rational(r);
}

Rational PrimeField::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  Integer r = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
  return Rational(r);
}

Rational PrimeField::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Rational(Integer(p_) - a.get_num());
}

Rational PrimeField::inv(const Rational& a) const {
  if (a == 0) throw DomainError("division by zero");
  if (p_ == 0) return 1 / a;
  Integer r;
  Integer pz(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz.get_mpz_t());
  return Rational(r);
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs.size() ? coeffs[i] : Rational(0);
}

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    Rational c = coeffs[k];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

namespace poly {

Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f.add(a.coefficient(i), b.coefficient(i));
  return Polynomial(std::move(c));
}

Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f.sub(a.coefficient(i), b.coefficient(i));
  return Polynomial(std::move(c));
}

Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  for (auto& v : c) v = f.reduce(v);
  return Polynomial(std::move(c));
}

Polynomial scale(const PrimeField& f, const Polynomial& a, const Rational& c) {
  std::vector<Rational> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs[i], c);
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const PrimeField& f,
                                         const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs;
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead_inv = f.inv(b.leading());
  for (long k = a.degree(); k >= db; --k) {
    const Rational c = f.mul(r[static_cast<std::size_t>(k)], lead_inv);
    q[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (long i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k - db + i);
      r[idx] = f.sub(r[idx], f.mul(c, b.coeffs[static_cast<std::size_t>(i)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial mod(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  return divmod(f, a, b).second;
}

Polynomial monic_gcd(const PrimeField& f, Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.leading()));
}

Polynomial inverse_mod(const PrimeField& f, const Polynomial& a,
                       const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m, r1 = mod(f, a, m);
  Polynomial s0, s1 = Polynomial({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(f, r0, r1);
    Polynomial s = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("element is not invertible");
  return mod(f, scale(f, s0, f.inv(r0.leading())), m);
}

Polynomial pow_mod(const PrimeField& f, Polynomial base, Integer e,
                   const Polynomial& m) {
  if (e < 0) throw DomainError("negative exponent in pow_mod");
  Polynomial result({Rational(1)});
  result = mod(f, result, m);
  base = mod(f, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mod(f, mul(f, result, base), m);
    e >>= 1;
    if (e > 0) base = mod(f, mul(f, base, base), m);
  }
  return result;
}

Rational evaluate(const PrimeField& f, const Polynomial& a, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = a.coeffs.size(); k-- > 0;)
    acc = f.add(f.mul(acc, x), a.coeffs[k]);
  return acc;
}

bool is_irreducible_mod_p(const PrimeField& f, const Polynomial& a) {
  const unsigned long p = f.characteristic();
  if (p == 0) throw DomainError("irreducibility test requires characteristic p");
  const long s = a.degree();
  if (s < 1) return false;
  if (s == 1) return true;
  const Polynomial x({Rational(0), Rational(1)});
  // x^(p^k) mod a for k = 0..s
  std::vector<Polynomial> frob{mod(f, x, a)};
  for (long k = 1; k <= s; ++k)
    frob.push_back(pow_mod(f, frob.back(), Integer(p), a));
  if (sub(f, frob[static_cast<std::size_t>(s)], mod(f, x, a)).is_zero() == false)
    return false;
  for (unsigned long q : prime_divisors(static_cast<unsigned long>(s))) {
    const Polynomial h = sub(f, frob[static_cast<std::size_t>(s) / q], x);
    if (monic_gcd(f, a, h).degree() != 0) return false;
  }
  return true;
}

}  // namespace poly

Polynomial cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw DomainError("cyclotomic polynomial requires N >= 1");
  const PrimeField q;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Polynomial result = poly::sub(q, Polynomial::monomial(1, n),
                                Polynomial({Rational(1)}));
  for (unsigned long d : divisors(n)) {
    if (d == n) continue;
    result = poly::divmod(q, result, cyclotomic_polynomial(d)).first;
  }
  return result;
}

// ------------------------------------------------------------- number theory

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

unsigned long multiplicative_order(unsigned long a, unsigned long n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1)
    throw DomainError("multiplicative order requires gcd(a, n) = 1");
  const Integer modulus(n);
  const Integer base(a % n);
  Integer x = base;
  for (unsigned long s = 1;; ++s) {
    if (x == 1) return s;
    x = (x * base) % modulus;
  }
}

}  // namespace milnorforge
