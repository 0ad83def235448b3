#include <gtest/gtest.h>

#include <map>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/catalog.hpp"
#include "milnorforge/error.hpp"
#include "milnorforge/lattice.hpp"
#include "support/oracles.hpp"

using namespace milnorforge;

namespace {

std::vector<std::vector<std::size_t>> hyperplane_sets(const std::vector<Flat>& flats) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : flats) out.push_back(f.hyperplanes);
  return out;
}

std::vector<long> integer_coeffs(const Polynomial& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs) out.push_back(c.get_num().get_si());
  return out;
}

const std::vector<std::string> kRationalCatalog = {
    "boolean(2)", "boolean(3)", "boolean(4)", "pencil(2)", "pencil(3)", "pencil(5)",
    "generic(4,3)", "generic(5,3)", "generic(6,4)", "B3", "deletedB3", "A3"};

}  // namespace

TEST(Catalog, B3OrderAndLabels) {
  const Arrangement b3 = catalog("B3");
  EXPECT_EQ(b3.size(), 9u);
  EXPECT_EQ(b3.ambient_dim(), 3u);
  EXPECT_EQ(b3.labels(), (std::vector<std::string>{"x", "y", "z", "x-y", "x+y", "x-z", "x+z",
                                                   "y-z", "y+z"}));
  EXPECT_EQ(b3.form(4)[1], b3.field().one());  // x+y
  EXPECT_TRUE(b3.is_real());
}

TEST(Catalog, DeletedB3IsB3MinusZ) {
  const Arrangement d = catalog("deletedB3");
  EXPECT_EQ(d.labels(), deletion(catalog("B3"), "z").labels());
  EXPECT_EQ(d.size(), 8u);
  const auto del = catalog_deletion("deletedB3");
  ASSERT_TRUE(del.has_value());
  EXPECT_EQ(del->parent, "B3");
  EXPECT_EQ(del->deleted, "z");
}

TEST(Catalog, MonomialThree) {
  const Arrangement m = catalog("monomial(3)");
  EXPECT_EQ(m.size(), 12u);
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_FALSE(m.is_real());
  EXPECT_EQ(m.field().cyclotomic_order(), 3u);
  // Coordinate points (x=y=0 etc.) carry p+2 = 5 lines, the nine points
  // [1 : zeta^a : zeta^b] carry 3, and x=0 meets y-zeta^j z in a double point.
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& f : rank2_flats(m)) ++sizes[f.hyperplanes.size()];
  EXPECT_EQ(sizes, (std::map<std::size_t, std::size_t>{{2, 9}, {3, 9}, {5, 3}}));
}

TEST(Catalog, PencilAndErrors) {
  EXPECT_EQ(catalog("pencil(3)").size(), 3u);
  EXPECT_EQ(catalog("pencil(3)").rank(), 2u);
  EXPECT_THROW(catalog("nonsense"), InputError);
  EXPECT_THROW(catalog("pencil(0)"), InputError);
  EXPECT_THROW(catalog("generic(3)"), InputError);
}

TEST(ArrangementValidation, RejectsBadInput) {
  const FieldSpec q = FieldSpec::rationals();
  auto v = [&](long a, long b) { return LinearForm{q.from_integer(a), q.from_integer(b)}; };
  EXPECT_THROW(Arrangement(q, 2, {v(1, 0), v(2, 0)}, {"a", "b"}), InputError);
  EXPECT_THROW(Arrangement(q, 2, {v(0, 0)}, {"a"}), InputError);
  EXPECT_THROW(Arrangement(q, 2, {v(1, 0), v(0, 1)}, {"a", "a"}), InputError);
  EXPECT_THROW(Arrangement(q, 2, {v(1, 0)}, {"a", "b"}), InputError);
  EXPECT_THROW(MultiArrangement(catalog("pencil(3)"), {1, 0, 1}), InputError);
  EXPECT_THROW(MultiArrangement(catalog("pencil(3)"), {1, 1}), InputError);
}

TEST(Rank2Flats, Examples) {
  EXPECT_EQ(hyperplane_sets(rank2_flats(catalog("pencil(4)"))),
            (std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}}));
  EXPECT_EQ(hyperplane_sets(rank2_flats(catalog("boolean(3)"))),
            (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& f : rank2_flats(catalog("B3"))) ++sizes[f.hyperplanes.size()];
  EXPECT_EQ(sizes, (std::map<std::size_t, std::size_t>{{2, 6}, {3, 4}, {4, 3}}));
}

TEST(Rank2Flats, AgreeWithPairClosureOracle) {
  for (const auto& name : kRationalCatalog) {
    const Arrangement a = catalog(name);
    const auto flats = rank2_flats(a);
    ASSERT_EQ(hyperplane_sets(flats), oracle::rank2_flats(a)) << name;
    std::size_t pairs = 0;
    for (const auto& f : flats) {
      pairs += f.hyperplanes.size() * (f.hyperplanes.size() - 1) / 2;
      ASSERT_EQ(f.rank, 2u);
    }
    ASSERT_EQ(pairs, a.size() * (a.size() - 1) / 2) << name;
  }
}

TEST(Lattice, BooleanTwo) {
  const FlatLattice l = full_lattice(catalog("boolean(2)"));
  ASSERT_EQ(l.by_rank.size(), 3u);
  EXPECT_EQ(l.by_rank[0][0].mobius, 1);
  EXPECT_EQ(l.by_rank[1].size(), 2u);
  EXPECT_EQ(l.by_rank[1][0].mobius, -1);
  EXPECT_EQ(l.by_rank[1][1].mobius, -1);
  EXPECT_EQ(l.by_rank[2][0].mobius, 1);
  EXPECT_EQ(l.size(), 4u);
}

TEST(Lattice, PencilTopMobius) {
  for (long n = 2; n <= 7; ++n) {
    const FlatLattice l = full_lattice(catalog("pencil(" + std::to_string(n) + ")"));
    EXPECT_EQ(l.by_rank.at(2).at(0).mobius, n - 1);
  }
}

TEST(Lattice, MobiusRecursionOnCatalog) {
  for (const auto& name : kRationalCatalog) {
    const Arrangement a = catalog(name);
    const FlatLattice l = full_lattice(a);
    EXPECT_EQ(l.by_rank[0].size(), 1u);
    EXPECT_EQ(l.by_rank[0][0].mobius, 1);
    for (std::size_t r = 1; r < l.by_rank.size(); ++r)
      for (const auto& x : l.by_rank[r]) {
        Integer sum = 0;
        for (std::size_t s = 0; s <= r; ++s)
          for (const auto& y : l.by_rank[s]) {
            const bool below = std::includes(x.flat.hyperplanes.begin(), x.flat.hyperplanes.end(),
                                             y.flat.hyperplanes.begin(), y.flat.hyperplanes.end());
            if (below) sum += y.mobius;
          }
        ASSERT_EQ(sum, 0) << name;
      }
  }
}

TEST(Lattice, MonomialLatticeSatisfiesRecursion) {
  const FlatLattice l = full_lattice(catalog("monomial(3)"));
  Integer total = 0;
  for (const auto& level : l.by_rank)
    for (const auto& x : level) total += x.mobius;
  // Sum of mu over the whole lattice is chi(1) = 0.
  EXPECT_EQ(total, 0);
}

TEST(Lattice, BoundExceeded) {
  LatticeOptions o;
  o.max_hyperplanes = 8;
  EXPECT_THROW(full_lattice(catalog("B3"), o), DomainError);
}

TEST(CharacteristicPolynomial, Examples) {
  EXPECT_EQ(integer_coeffs(characteristic_polynomial(full_lattice(catalog("boolean(3)")))),
            (std::vector<long>{-1, 3, -3, 1}));
  for (long n = 2; n <= 6; ++n)
    EXPECT_EQ(integer_coeffs(characteristic_polynomial(
                  full_lattice(catalog("pencil(" + std::to_string(n) + ")")))),
              (std::vector<long>{n - 1, -n, 1}));
  EXPECT_EQ(integer_coeffs(characteristic_polynomial(full_lattice(catalog("B3")))),
            (std::vector<long>{-15, 23, -9, 1}));
  EXPECT_EQ(integer_coeffs(characteristic_polynomial(full_lattice(catalog("A3")))),
            (std::vector<long>{-6, 11, -6, 1}));
}

TEST(CharacteristicPolynomial, VanishesAtOne) {
  for (const auto& name : kRationalCatalog) {
    const Polynomial chi = characteristic_polynomial(full_lattice(catalog(name)));
    Rational sum = 0;
    for (const auto& c : chi.coeffs) sum += c;
    ASSERT_EQ(sum, 0) << name;
  }
}

TEST(Deletion, PreservesOrderAndFlats) {
  const Arrangement b3 = catalog("B3");
  const Arrangement d = deletion(b3, "z");
  EXPECT_EQ(d.size(), 8u);
  EXPECT_EQ(deletion(deletion(b3, "x"), "y").labels(), deletion(deletion(b3, "y"), "x").labels());
  EXPECT_THROW(deletion(b3, "w"), InputError);
  const auto parent = rank2_flats(b3);
  for (const auto& f : rank2_flats(d)) {
    std::vector<std::size_t> in_parent;
    for (std::size_t h : f.hyperplanes) in_parent.push_back(b3.index_of(d.label(h)));
    bool contained = false;
    for (const auto& g : parent)
      contained = contained || std::includes(g.hyperplanes.begin(), g.hyperplanes.end(),
                                             in_parent.begin(), in_parent.end());
    EXPECT_TRUE(contained);
  }
  EXPECT_EQ(deletion(catalog("boolean(3)"), "z").ambient_dim(), 3u);
}

TEST(Decone, Examples) {
  EXPECT_THROW(decone(catalog("pencil(3)"), "x"), DomainError);
  EXPECT_THROW(decone(catalog("monomial(3)"), "x"), DomainError);

  const AffineArrangement b = decone(catalog("boolean(3)"), "z");
  ASSERT_EQ(b.lines.size(), 2u);
  EXPECT_EQ(b.at_infinity, "z");
  EXPECT_NE(b.lines[0].a * b.lines[1].b - b.lines[1].a * b.lines[0].b, 0);

  const AffineArrangement d = decone(catalog("deletedB3"), "y");
  ASSERT_EQ(d.lines.size(), 7u);
  // Substituting y = 1: x, x-1, x+1, x-z, x+z, 1-z, 1+z in the (x, z) plane.
  std::vector<std::string> labels;
  for (const auto& l : d.lines) labels.push_back(l.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"x", "x-y", "x+y", "x-z", "x+z", "y-z", "y+z"}));
  EXPECT_EQ(d.lines[1].a, 1);
  EXPECT_EQ(d.lines[1].b, 0);
  EXPECT_EQ(d.lines[1].c, -1);
}
