#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/multinet.hpp"

namespace milnorforge {

struct ParallelConnectionSpec {
  Arrangement left;
  std::string left_base;
  Arrangement right;
  std::string right_base;
};

// Glues two arrangements along their base hyperplanes in dimension
// l_L + l_R - 1. Each side is first rewritten in coordinates whose first
// coordinate is its base form; left forms keep coordinates 1..l_L, right
// forms share coordinate 1 and use fresh ones after that. The right base
// hyperplane is dropped (it coincides with the left one). Right labels that
// collide with left labels get a trailing "'". Throws DomainError when the
// fields differ or a side has fewer than two hyperplanes.
Arrangement parallel_connection(const ParallelConnectionSpec& spec);

struct PolarizedArrangement {
  Arrangement result;
  std::vector<long> weights;
  // Fresh coordinate name per hyperplane with m_H >= 2, e.g. "w_x".
  std::vector<std::string> new_coordinates;
  // Labels of the hyperplane each new coordinate is attached to.
  std::vector<std::string> attached_to;
};

// A||m: for each H with m_H >= 2 (in arrangement order) adjoin a coordinate
// w_H and the hyperplanes f_H - i w_H, i = 1..m_H-1, labelled "<H>.<i>".
// Original hyperplanes come first and keep their labels.
PolarizedArrangement polarize(const MultiArrangement& ma);

// 1 + #{H : m_H >= 3}.
long predicted_torsion_degree(const MultiArrangement& ma);

struct CoverCompatibility {
  // N of (A, m).
  long multi_order = 0;
  // |A||m|, the order of the all-ones cover of the polarization.
  long polarized_order = 0;
  // Size of the pencil attached at each original hyperplane (m_H).
  std::vector<std::pair<std::string, long>> pencils;
  bool consistent = false;
};

CoverCompatibility cover_compatibility_check(const MultiArrangement& ma);

// Primes p certified by pointed multinets on `parent` whose pointed
// hyperplane is `deleted` (p | m_deleted), in increasing order.
std::vector<unsigned long> pointed_primes_at(const Arrangement& parent, const std::string& deleted,
                                             const MultinetSearchOptions& options);

}  // namespace milnorforge
