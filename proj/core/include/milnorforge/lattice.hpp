#pragma once

#include <cstddef>
#include <vector>

#include "milnorforge/arrangement.hpp"

namespace milnorforge {

// A closed set of hyperplane indices (sorted ascending) and its rank.
struct Flat {
  std::vector<std::size_t> hyperplanes;
  std::size_t rank = 0;

  bool contains(std::size_t h) const;
  bool operator==(const Flat&) const = default;
};

// Every rank-2 flat, sorted lexicographically by hyperplane list. Each
// unordered pair of hyperplanes lies in exactly one of them.
std::vector<Flat> rank2_flats(const Arrangement& a);

struct LatticeFlat {
  Flat flat;
  Integer mobius;
};

struct FlatLattice {
  std::size_t ambient_dim = 0;
  // by_rank[r] lists the flats of rank r, sorted by hyperplane list.
  std::vector<std::vector<LatticeFlat>> by_rank;

  std::size_t rank() const { return by_rank.empty() ? 0 : by_rank.size() - 1; }
  std::size_t size() const;
};

struct LatticeOptions {
  std::size_t max_hyperplanes = 16;
};

// Breadth-first closure of (flat + hyperplane). Throws DomainError when the
// arrangement exceeds options.max_hyperplanes (hard limit 64).
FlatLattice full_lattice(const Arrangement& a, LatticeOptions options = {});

// chi(t) = sum over flats X of mu(X) t^(ambient_dim - rank X). Coefficients
// are integers stored low degree first.
Polynomial characteristic_polynomial(const FlatLattice& lattice);

}  // namespace milnorforge
