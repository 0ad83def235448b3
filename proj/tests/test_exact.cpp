#include <gtest/gtest.h>

#include <random>

#include "milnorforge/error.hpp"
#include "milnorforge/field.hpp"
#include "milnorforge/field_matrix.hpp"
#include "milnorforge/integer_matrix.hpp"
#include "milnorforge/polynomial.hpp"
#include "support/oracles.hpp"

using namespace milnorforge;

namespace {

std::vector<long> factors(const SNFResult& r) {
  std::vector<long> out;
  for (const auto& f : r.invariant_factors) out.push_back(f.get_si());
  return out;
}

Polynomial poly_of(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

TEST(SmithNormalForm, DiagonalInput) {
  const auto r = smith_normal_form(IntegerMatrix{{2, 0}, {0, 2}});
  EXPECT_EQ(factors(r), (std::vector<long>{2, 2}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(SmithNormalForm, ZeroMatrix) {
  const auto r = smith_normal_form(IntegerMatrix(1, 1));
  EXPECT_TRUE(r.invariant_factors.empty());
  EXPECT_EQ(r.rank, 0u);
}

TEST(SmithNormalForm, EmptyMatrix) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix(0, 3)).rank, 0u);
  EXPECT_EQ(smith_normal_form(IntegerMatrix(4, 0)).rank, 0u);
}

TEST(SmithNormalForm, HandReducedTwoByTwo) {
  // gcd of entries 2, |det| = 8.
  EXPECT_EQ(factors(smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}})), (std::vector<long>{2, 4}));
}

TEST(SmithNormalForm, NonCoprimeDiagonalIsReordered) {
  // diag(4, 6) ~ diag(2, 12).
  EXPECT_EQ(factors(smith_normal_form(IntegerMatrix{{4, 0}, {0, 6}})), (std::vector<long>{2, 12}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{4, 0}, {0, 6}}).torsion().size(), 2u);
}

TEST(SmithNormalForm, RandomMatricesFormDivisibilityChainWithOracleRank) {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::bernoulli_distribution sparse(0.4);
  for (int trial = 0; trial < 300; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) ? 0 : entry(rng);
    const auto r = smith_normal_form(m);
    ASSERT_EQ(r.rank, oracle::bareiss_rank(m));
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
      ASSERT_GE(r.invariant_factors[i], 1);
      if (i + 1 < r.invariant_factors.size())
        ASSERT_EQ(r.invariant_factors[i + 1] % r.invariant_factors[i], 0);
    }
    // For square full-rank input the product of factors is |det|; compare
    // with the product of the Bareiss pivot chain via a 1x1 reduction.
    if (m.rows() == m.cols() && r.rank == m.rows()) {
      Integer prod = 1;
      for (const auto& f : r.invariant_factors) prod *= f;
      // Determinant by cofactor-free elimination over Q.
      std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
      Rational det = 1;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        if (p != c) {
          std::swap(a[p], a[c]);
          det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
          const Rational f = a[i][c] / a[c][c];
          for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[c][j];
        }
      }
      ASSERT_EQ(Rational(prod), abs(det));
    }
  }
}

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly_of({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly_of({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), poly_of({1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  const PrimeField q(0);
  for (unsigned long n = 1; n <= 40; ++n) {
    Polynomial prod = poly_of({1});
    for (unsigned long d : divisors(n)) prod = poly::mul(q, prod, cyclotomic_polynomial(d));
    Polynomial target = Polynomial::monomial(1, n);
    target.coeffs[0] -= 1;
    ASSERT_EQ(prod, target) << "n = " << n;
    ASSERT_EQ(cyclotomic_polynomial(n).degree(), static_cast<long>(euler_phi(n)));
  }
}

TEST(SplittingField, Degrees) {
  EXPECT_EQ(splitting_field(2, 15).degree(), 4u);
  EXPECT_EQ(splitting_field(7, 3).degree(), 1u);
  EXPECT_EQ(splitting_field(3, 8).degree(), 2u);
  EXPECT_EQ(splitting_field(2, 15).order(), 16);
}

TEST(SplittingField, RejectsCharacteristicDividingN) {
  EXPECT_THROW(splitting_field(3, 15), DomainError);
  EXPECT_THROW(splitting_field(4, 3), DomainError);
}

TEST(SplittingField, ModulusIsFirstIrreducibleInEnumerationOrder) {
  // Degree-4 monic polynomials over F_2 enumerated with the constant term as
  // the least significant bit: x^4+x+1 (index 16+3) is the first irreducible.
  EXPECT_EQ(splitting_field(2, 15).modulus(), poly_of({1, 1, 0, 0, 1}));
  // Over F_3, degree 2: x^2+1 is the first irreducible.
  EXPECT_EQ(splitting_field(3, 8).modulus(), poly_of({1, 0, 1}));
}

TEST(RootOfUnity, FrozenChoices) {
  const auto f7 = splitting_field(7, 3);
  const auto g = root_of_unity(f7, 3);
  EXPECT_TRUE(g.pow(3L).is_one());
  EXPECT_FALSE(g.is_one());
  EXPECT_EQ(g, f7.from_integer(4));
  EXPECT_EQ(root_of_unity(splitting_field(5, 2), 2), splitting_field(5, 2).from_integer(4));
  const auto q15 = FieldSpec::cyclotomic(15);
  EXPECT_EQ(root_of_unity(q15, 15), q15.generator());
}

TEST(RootOfUnity, ExactOrderAndCyclotomicRootProperty) {
  const std::vector<std::pair<unsigned long, unsigned long>> cases = {
      {2, 3}, {2, 5}, {2, 7}, {2, 9}, {2, 15}, {3, 4}, {3, 8}, {5, 6}, {7, 9}, {11, 10}, {13, 12}};
  for (auto [p, n] : cases) {
    const FieldSpec f = splitting_field(p, n);
    const FieldElement z = root_of_unity(f, n);
    ASSERT_TRUE(z.pow(static_cast<long>(n)).is_one());
    for (unsigned long d : divisors(n))
      if (d < n) ASSERT_FALSE(z.pow(static_cast<long>(d)).is_one()) << p << " " << n << " " << d;
    // Phi_n(z) = 0.
    const Polynomial phi = cyclotomic_polynomial(n);
    FieldElement value = f.zero();
    for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
      value += f.from_rational(phi.coeffs[i]) * z.pow(static_cast<long>(i));
    ASSERT_TRUE(value.is_zero());
  }
  for (unsigned long n = 1; n <= 30; ++n) {
    const FieldSpec f = FieldSpec::cyclotomic(n);
    for (unsigned long m : {n, 1ul}) {
      if (n % m) continue;
      const FieldElement z = root_of_unity(f, m);
      ASSERT_EQ(multiplicative_order(z, 1000), m);
    }
  }
  // Even order inside an odd cyclotomic field uses -x^k.
  const FieldSpec q15 = FieldSpec::cyclotomic(15);
  EXPECT_EQ(multiplicative_order(root_of_unity(q15, 30), 1000), 30u);
}

TEST(FieldArithmetic, RandomAxiomsOverSeveralFields) {
  std::mt19937 rng(7);
  const std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::cyclotomic(5),
                                         FieldSpec::cyclotomic(12), splitting_field(2, 15),
                                         splitting_field(3, 8), splitting_field(7, 3)};
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (const auto& f : fields) {
    auto random = [&] {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < f.degree(); ++i) c.emplace_back(coeff(rng));
      return f.element(Polynomial(c));
    };
    for (int i = 0; i < 40; ++i) {
      const auto a = random(), b = random(), c = random();
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(a * (b * c), (a * b) * c);
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
      ASSERT_EQ(f.parse(a.to_string()), a);
    }
  }
}

TEST(FieldArithmetic, MixedFieldsRejected) {
  const auto a = FieldSpec::cyclotomic(5).one();
  const auto b = FieldSpec::cyclotomic(7).one();
  EXPECT_THROW(a + b, DomainError);
}

TEST(FieldMatrixRank, Examples) {
  const FieldSpec f2 = splitting_field(2, 1);
  FieldMatrix id(f2, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) id(i, j) = i == j ? f2.one() : f2.zero();
  EXPECT_EQ(rank(id), 3u);

  const FieldSpec q = FieldSpec::rationals();
  const FieldMatrix zero(q, 2, 5);
  const auto rk = rank_and_kernel(zero);
  EXPECT_EQ(rk.rank, 0u);
  EXPECT_EQ(rk.kernel.size(), 5u);

  const FieldSpec q5 = FieldSpec::cyclotomic(5);
  const FieldElement z = q5.generator();
  const auto m = FieldMatrix::from_rows(q5, {{q5.one(), z}, {z.pow(2L), z.pow(3L)}});
  EXPECT_EQ(rank(m), 1u);
}

TEST(FieldMatrixRank, MixedFieldsRejected) {
  const FieldSpec q5 = FieldSpec::cyclotomic(5);
  const FieldSpec q7 = FieldSpec::cyclotomic(7);
  EXPECT_THROW(FieldMatrix::from_rows(q5, {{q5.one(), q7.one()}}), DomainError);
}

TEST(FieldMatrixRank, RandomKernelVectorsAnnihilate) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<int> dim(1, 6);
  const std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::cyclotomic(9),
                                         splitting_field(2, 15), splitting_field(5, 4)};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 25; ++trial) {
      FieldMatrix m(f, dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::vector<Rational> c;
          for (std::size_t d = 0; d < f.degree(); ++d) c.emplace_back(coeff(rng));
          m(i, j) = f.element(Polynomial(c));
        }
      const auto rk = rank_and_kernel(m);
      ASSERT_EQ(rk.rank + rk.kernel.size(), m.cols());
      for (const auto& v : rk.kernel)
        for (const auto& x : m.apply(v)) ASSERT_TRUE(x.is_zero());
    }
  }
}

TEST(Arithmetic, MultiplicativeOrderAndDivisors) {
  EXPECT_EQ(multiplicative_order(2ul, 15ul), 4u);
  EXPECT_EQ(multiplicative_order(3ul, 8ul), 2u);
  EXPECT_EQ(divisors(12), (std::vector<unsigned long>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(prime_divisors(60), (std::vector<unsigned long>{2, 3, 5}));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
}
