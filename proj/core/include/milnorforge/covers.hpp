#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/fox.hpp"
#include "milnorforge/presentation.hpp"

namespace milnorforge {

// N-fold cyclic cover of a presentation complex, classified by the map
// sending generator i to weights[i] mod N. The deconed hyperplane carries
// the implicit weight N - sum(weights) mod N.
struct CyclicCover {
  GroupPresentation presentation;
  long n = 1;
  std::vector<long> weights;

  // gcd of N and every weight: the number of path components.
  long components() const;
};

struct CoverOptions {
  std::optional<std::string> deconed_at;
  std::optional<Rational> rotation;
};

// The cover F(A, m) -> U(A) classified by x_H -> m_H, N = sum of weights.
CyclicCover milnor_cover(const MultiArrangement& ma, const CoverOptions& options = {});

struct HomologyReport {
  long betti = 0;
  // Invariant factors > 1, as a divisibility chain.
  std::vector<Integer> torsion;
  long components = 1;

  std::size_t factors_divisible_by(unsigned long p) const;
};

// H_1 of the cover, integrally. For a disconnected cover the report
// describes one component (all are homeomorphic) and records the component
// count. The boundary map C_2 -> C_1 is the Fox Jacobian pushed to Z[Z_N]
// and expanded by the regular representation; since im d_1 is free, the
// torsion of C_1 / im d_2 equals the torsion of H_1, and
// betti = gN - (N - 1) - rank d_2.
HomologyReport h1_integral(const CyclicCover& cover);

// Rank-one local system: one nonzero value per generator.
struct LocalSystem {
  FieldSpec field;
  std::vector<FieldElement> values;
};

// dim H_1(U, k_rho) = (g - rank d_1(rho)) - rank J(rho). Throws InputError
// when the value count is wrong, a value is zero, or values lie in another
// field.
std::size_t h1_local(const GroupPresentation& p, const LocalSystem& l);

struct CharacterScan {
  // 0 for the cyclotomic field Q[x]/Phi_N.
  unsigned long characteristic = 0;
  std::string field;
  // dims[t] = dim H_1(U, k_{rho_t}) with rho_t(x_H) = zeta^(t m_H).
  std::vector<std::size_t> dims;
  std::size_t total = 0;
};

struct MilnorFiberReport {
  long n = 0;
  std::vector<std::string> labels;
  std::vector<long> weights;
  std::string deconed_at;
  Rational rotation;
  std::size_t relator_count = 0;

  CharacterScan characteristic_zero;
  // One scan per requested prime, in increasing order.
  std::vector<CharacterScan> finite;
  HomologyReport integral;

  // p -> total_p > total_0.
  std::map<unsigned long, bool> verdicts;
  // p -> characters t with dim_p(t) > dim_0(t).
  std::map<unsigned long, std::vector<long>> witnesses;

  // Sum of characteristic-0 dims equals the integral Betti number (summed
  // over components).
  bool decomposition_consistent() const;
  // total_p = betti + #{invariant factors divisible by p}, per component.
  bool universal_coefficients_consistent(unsigned long p) const;
  const CharacterScan& scan(unsigned long characteristic) const;
};

struct ScanOptions {
  CoverOptions cover;
  // 0 = hardware concurrency, capped by MILNORFORGE_THREADS when set.
  std::size_t threads = 0;
  // Skip the integral computation (the report's integral field stays empty).
  bool integral = true;
  std::function<void(const std::string&)> progress;
};

// Number of worker threads for the character scan.
std::size_t scan_thread_count(std::size_t requested);

// Throws DomainError naming the hypothesis when p divides N or p is not
// prime, and for arrangements the presentation pipeline rejects.
MilnorFiberReport milnor_report(const MultiArrangement& ma,
                                const std::vector<unsigned long>& primes,
                                const ScanOptions& options = {});

struct TorsionVerdict {
  unsigned long prime = 0;
  long n = 0;
  // Some rho_t has dim 0 in characteristic 0 while every rho_t has dim >= 1
  // over the characteristic-p splitting field.
  bool theorem_form = false;
  // total_p > total_0.
  bool dimension_jump = false;
  std::vector<long> witnesses;
  std::size_t total_zero = 0;
  std::size_t total_p = 0;
};

TorsionVerdict detect_torsion_ptors1(const MultiArrangement& ma, unsigned long p,
                                     const ScanOptions& options = {});

}  // namespace milnorforge
