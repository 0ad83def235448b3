#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/lattice.hpp"

namespace milnorforge {

// Candidate multinet: classes A_1..A_k partitioning the hyperplane indices,
// multiplicities m_H >= 1, and the base locus X (a set of rank-2 flats).
struct Multinet {
  Arrangement arrangement;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> multiplicities;
  std::vector<Flat> base_locus;

  std::size_t class_count() const { return classes.size(); }
  // Sum of multiplicities over class i.
  long class_weight(std::size_t i) const;
  // n_Z measured on class i: sum of m_H over H in A_i containing Z.
  long flat_weight(const Flat& z, std::size_t i) const;
  // Class index of each hyperplane.
  std::vector<std::size_t> class_of() const;
};

enum class MultinetAxiom {
  kAtLeastThreeClasses,
  kConstantClassWeight,
  kCrossPairsInBaseLocus,
  kBalancedBaseLocus,
  kClassConnectivity,
};

std::string axiom_name(MultinetAxiom axiom);

struct MultinetVerification {
  bool ok = false;
  std::optional<MultinetAxiom> violated;
  std::string witness;
  // Common class weight d (0 when the classes are unbalanced).
  long d = 0;
};

// Checks the five axioms in the order listed in MultinetAxiom and reports
// the first violation. Connectivity is checked on the graph whose vertices
// are the hyperplanes of a class and whose edges are pairs meeting outside
// the base locus. Throws InputError when the classes are not a partition of
// the hyperplane indices, a multiplicity is not positive, or a base-locus
// entry is not a rank-2 flat of the arrangement.
MultinetVerification verify_multinet(const Multinet& candidate);

struct MultinetSearchOptions {
  std::size_t k_min = 3;
  std::size_t k_max = 4;
  long max_mult = 1;
  std::size_t max_hyperplanes = 14;
};

// Every multinet with k in [k_min, k_max] and multiplicities <= max_mult, up
// to relabelling of classes. Classes are numbered by least hyperplane index;
// results are ordered by k, then class assignment, then multiplicity vector.
// Throws DomainError when the arrangement exceeds max_hyperplanes.
std::vector<Multinet> search_multinets(const Arrangement& a,
                                       const MultinetSearchOptions& options = {});

struct PointedCertificate {
  std::size_t hyperplane = 0;
  long multiplicity = 0;
  std::vector<unsigned long> primes;
};

// Hyperplanes H with m_H > 1 and m_H | n_Z for every base-locus flat Z on H.
// Empty for a rescaled multinet (gcd of multiplicities > 1): its multiple
// fibers come from the rescaling, not from the arrangement. Throws DomainError when the multinet fails verification.
std::vector<PointedCertificate> pointed_hyperplanes(const Multinet& m);

}  // namespace milnorforge
