#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnorforge/arrangement.hpp"

namespace milnorforge {

// Named arrangements, addressed as "name" or "name(params)":
//
//   boolean(n)     coordinate hyperplanes of C^n (x, y, z for n <= 3, else x1..xn)
//   pencil(n)      n concurrent lines in C^2: x, y, x-y, x-2y, ...
//   generic(n, l)  n hyperplanes in general position in C^l (Vandermonde rows)
//   B3             x, y, z, x-y, x+y, x-z, x+z, y-z, y+z
//   deletedB3      B3 without z
//   A3             x, y, z, x-y, x-z, y-z (essential braid arrangement)
//   monomial(p)    A(p,1,3) over Q[x]/Phi_p, with zeta = x:
//                  x, y, z, then x - zeta^j y, x - zeta^j z, y - zeta^j z
//                  for j = 0..p-1 (family by family)
//
// Throws InputError for unknown names or bad parameters.
Arrangement catalog(const std::string& spec);

// Names accepted by catalog(), with parameter placeholders.
std::vector<std::string> catalog_names();

// For catalog entries that are deletions of another entry (deletedB3 is
// B3 minus z), the parent and the deleted label.
struct CatalogDeletion {
  std::string parent;
  std::string deleted;
};
std::optional<CatalogDeletion> catalog_deletion(const std::string& spec);

}  // namespace milnorforge
