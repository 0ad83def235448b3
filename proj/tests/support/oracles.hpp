#pragma once

// Independent reference implementations used to freeze expected values.
// None of these share code paths with the routines they check beyond the
// basic number types.

#include <cstddef>
#include <random>
#include <vector>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/covers.hpp"
#include "milnorforge/integer_matrix.hpp"
#include "milnorforge/presentation.hpp"

namespace oracle {

using milnorforge::Integer;
using milnorforge::Rational;

// Fraction-free Gaussian elimination.
std::size_t bareiss_rank(const milnorforge::IntegerMatrix& m);

// Rank over Q of rational row vectors.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

// Rank-2 flats of an arrangement over Q: closures of every pair, found by
// testing each hyperplane against the pair with rational elimination.
std::vector<std::vector<std::size_t>> rank2_flats(const milnorforge::Arrangement& a);

// H_1 of the kernel of F_g -> Z_N (x_i -> weights[i]) modulo the relators,
// via a Schreier transversal, rewriting of conjugated relators and an SNF of
// the abelianized relation matrix. Describes the component of the base
// point when the map is not onto.
milnorforge::HomologyReport reidemeister_schreier_h1(const milnorforge::GroupPresentation& p,
                                                     long n, const std::vector<long>& weights);

// Random presentation on g generators whose relators all map to 0 in Z_N
// under `weights`.
milnorforge::GroupPresentation random_presentation(std::mt19937& rng, std::size_t g,
                                                   std::size_t relators, std::size_t max_length,
                                                   long n, const std::vector<long>& weights);

struct MultinetCandidate {
  std::vector<std::size_t> class_of;
  std::vector<long> multiplicities;
};

// Every multinet with exactly k classes and multiplicities <= max_mult, by
// enumerating all set partitions and multiplicity vectors and checking the
// axioms directly. Partitions are in restricted-growth form.
std::vector<MultinetCandidate> exhaustive_multinets(const milnorforge::Arrangement& a,
                                                    std::size_t k, long max_mult);

}  // namespace oracle
