#include <gtest/gtest.h>

#include "milnorforge/catalog.hpp"
#include "milnorforge/error.hpp"
#include "milnorforge/lattice.hpp"
#include "milnorforge/multinet.hpp"
#include "support/oracles.hpp"

using namespace milnorforge;

namespace {

Multinet make(const Arrangement& a, const std::vector<std::vector<std::string>>& classes,
              std::vector<long> m) {
  Multinet out{a, {}, std::move(m), {}};
  std::vector<std::size_t> cls(a.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<std::size_t> idx;
    for (const auto& l : classes[i]) {
      idx.push_back(a.index_of(l));
      cls[a.index_of(l)] = i;
    }
    std::sort(idx.begin(), idx.end());
    out.classes.push_back(idx);
  }
  // Base locus: flats meeting at least two classes.
  for (const Flat& f : rank2_flats(a)) {
    std::set<std::size_t> present;
    for (std::size_t h : f.hyperplanes) present.insert(cls[h]);
    if (present.size() > 1) out.base_locus.push_back(f);
  }
  return out;
}

Multinet b3_multinet() {
  return make(catalog("B3"), {{"x", "y-z", "y+z"}, {"y", "x-z", "x+z"}, {"z", "x-y", "x+y"}},
              {2, 2, 2, 1, 1, 1, 1, 1, 1});
}

std::vector<std::size_t> class_vector(const Multinet& m) { return m.class_of(); }

}  // namespace

TEST(VerifyMultinet, B3PointedMultinetPasses) {
  const auto v = verify_multinet(b3_multinet());
  EXPECT_TRUE(v.ok) << v.witness;
  EXPECT_EQ(v.d, 4);
}

TEST(VerifyMultinet, PencilSingletonNet) {
  const auto m = make(catalog("pencil(3)"), {{"x"}, {"y"}, {"x-y"}}, {1, 1, 1});
  const auto v = verify_multinet(m);
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.d, 1);
  EXPECT_EQ(m.flat_weight(m.base_locus.at(0), 0), 1);
}

TEST(VerifyMultinet, GenericPartitionsAllFail) {
  const Arrangement a = catalog("generic(3,3)");
  const auto m = make(a, {{"h1"}, {"h2"}, {"h3"}}, {1, 1, 1});
  const auto v = verify_multinet(m);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.violated.has_value());
  // Every base flat {hi, hj} misses the third class.
  EXPECT_EQ(*v.violated, MultinetAxiom::kBalancedBaseLocus);
  for (std::size_t k = 3; k <= 3; ++k) EXPECT_TRUE(oracle::exhaustive_multinets(a, k, 3).empty());
}

TEST(VerifyMultinet, ReportsEachAxiom) {
  auto m = b3_multinet();
  m.multiplicities[0] = 1;
  EXPECT_EQ(*verify_multinet(m).violated, MultinetAxiom::kConstantClassWeight);

  auto two = make(catalog("pencil(3)"), {{"x", "y"}, {"x-y"}}, {1, 1, 2});
  EXPECT_EQ(*verify_multinet(two).violated, MultinetAxiom::kAtLeastThreeClasses);

  auto missing = b3_multinet();
  missing.base_locus.pop_back();
  EXPECT_EQ(*verify_multinet(missing).violated, MultinetAxiom::kCrossPairsInBaseLocus);

  // pencil(4) with a 2-element class: balanced for m=(1,1,2,2) but the two
  // lines of the first class only meet at the base point.
  auto disconnected = make(catalog("pencil(4)"), {{"x", "y"}, {"x-y"}, {"x-2y"}}, {1, 1, 2, 2});
  EXPECT_EQ(*verify_multinet(disconnected).violated, MultinetAxiom::kClassConnectivity);
}

TEST(VerifyMultinet, InputErrors) {
  auto m = b3_multinet();
  m.classes[0].push_back(42);
  EXPECT_THROW(verify_multinet(m), InputError);
  auto dup = b3_multinet();
  dup.classes[1].push_back(0);
  EXPECT_THROW(verify_multinet(dup), InputError);
  auto zero = b3_multinet();
  zero.multiplicities[3] = 0;
  EXPECT_THROW(verify_multinet(zero), InputError);
}

TEST(SearchMultinets, B3FindsThePointedMultinet) {
  MultinetSearchOptions o;
  o.k_min = o.k_max = 3;
  o.max_mult = 2;
  const auto found = search_multinets(catalog("B3"), o);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].multiplicities, (std::vector<long>{2, 2, 2, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(found[0].classes, b3_multinet().classes);
  EXPECT_TRUE(verify_multinet(found[0]).ok);
}

TEST(SearchMultinets, PencilFourMatchesExhaustiveOracle) {
  const Arrangement a = catalog("pencil(4)");
  const auto found = search_multinets(a);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].classes.size(), 4u);
  EXPECT_TRUE(oracle::exhaustive_multinets(a, 3, 1).empty());
  EXPECT_EQ(oracle::exhaustive_multinets(a, 4, 1).size(), 1u);
}

TEST(SearchMultinets, GenericHasNone) {
  MultinetSearchOptions o;
  o.k_min = o.k_max = 3;
  o.max_mult = 2;
  EXPECT_TRUE(search_multinets(catalog("generic(4,3)"), o).empty());
  EXPECT_TRUE(oracle::exhaustive_multinets(catalog("generic(4,3)"), 3, 2).empty());
}

TEST(SearchMultinets, AgreesWithExhaustiveOracleOnSmallCatalog) {
  for (const std::string name : {"A3", "pencil(3)", "pencil(5)", "boolean(3)", "deletedB3"}) {
    const Arrangement a = catalog(name);
    for (std::size_t k = 3; k <= 4; ++k)
      for (long mm = 1; mm <= 2; ++mm) {
        if (name == "deletedB3" && mm == 2 && k == 4) continue;  // oracle too slow
        MultinetSearchOptions o;
        o.k_min = o.k_max = k;
        o.max_mult = mm;
        const auto found = search_multinets(a, o);
        const auto expected = oracle::exhaustive_multinets(a, k, mm);
        ASSERT_EQ(found.size(), expected.size()) << name << " k=" << k << " mult=" << mm;
        for (std::size_t i = 0; i < found.size(); ++i) {
          EXPECT_EQ(class_vector(found[i]), expected[i].class_of);
          EXPECT_EQ(found[i].multiplicities, expected[i].multiplicities);
          EXPECT_TRUE(verify_multinet(found[i]).ok);
        }
      }
  }
}

TEST(SearchMultinets, A3HasTheThreeNet) {
  MultinetSearchOptions o;
  o.k_min = o.k_max = 3;
  const auto found = search_multinets(catalog("A3"), o);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].class_weight(0), 2);
}

TEST(SearchMultinets, InvariantsOfVerifiedMultinets) {
  MultinetSearchOptions o;
  o.max_mult = 3;
  for (const std::string name : {"A3", "B3", "pencil(4)"}) {
    for (const auto& m : search_multinets(catalog(name), o)) {
      const auto v = verify_multinet(m);
      ASSERT_TRUE(v.ok);
      long total = 0;
      for (long x : m.multiplicities) total += x;
      EXPECT_EQ(static_cast<long>(m.class_count()) * v.d, total);
      for (const Flat& z : m.base_locus) {
        long sum = 0;
        for (std::size_t h : z.hyperplanes) sum += m.multiplicities[h];
        EXPECT_EQ(static_cast<long>(m.class_count()) * m.flat_weight(z, 0), sum);
      }
    }
  }
}

TEST(SearchMultinets, BoundExceeded) {
  EXPECT_THROW(search_multinets(catalog("generic(15,3)")), DomainError);
  MultinetSearchOptions o;
  o.max_mult = 0;
  EXPECT_THROW(search_multinets(catalog("A3"), o), InputError);
}

TEST(PointedHyperplanes, B3CertificatesForCoordinateHyperplanes) {
  const auto certs = pointed_hyperplanes(b3_multinet());
  ASSERT_EQ(certs.size(), 3u);
  const Arrangement b3 = catalog("B3");
  EXPECT_EQ(certs[2].hyperplane, b3.index_of("z"));
  EXPECT_EQ(certs[2].multiplicity, 2);
  EXPECT_EQ(certs[2].primes, (std::vector<unsigned long>{2}));
}

TEST(PointedHyperplanes, ReducedNetHasNone) {
  EXPECT_TRUE(
      pointed_hyperplanes(make(catalog("pencil(3)"), {{"x"}, {"y"}, {"x-y"}}, {1, 1, 1})).empty());
}

TEST(PointedHyperplanes, RescaledNetHasNone) {
  const auto m = make(catalog("pencil(3)"), {{"x"}, {"y"}, {"x-y"}}, {2, 2, 2});
  ASSERT_TRUE(verify_multinet(m).ok);
  EXPECT_TRUE(pointed_hyperplanes(m).empty());
}

TEST(PointedHyperplanes, UnverifiedRejected) {
  auto m = b3_multinet();
  m.multiplicities[0] = 1;
  EXPECT_THROW(pointed_hyperplanes(m), DomainError);
}

TEST(PointedHyperplanes, MonomialCertifiesItsPrime) {
  for (unsigned long p : {2ul, 3ul}) {
    MultinetSearchOptions o;
    o.k_min = o.k_max = 3;
    o.max_mult = static_cast<long>(p);
    bool certified = false;
    for (const auto& m : search_multinets(catalog("monomial(" + std::to_string(p) + ")"), o))
      for (const auto& c : pointed_hyperplanes(m))
        certified = certified || std::count(c.primes.begin(), c.primes.end(), p) > 0;
    EXPECT_TRUE(certified) << p;
  }
}
