#include "milnorforge/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "milnorforge/error.hpp"
#include "milnorforge/field_matrix.hpp"

namespace milnorforge {

bool Flat::contains(std::size_t h) const {
  return std::binary_search(hyperplanes.begin(), hyperplanes.end(), h);
}

std::size_t FlatLattice::size() const {
  std::size_t total = 0;
  for (const auto& level : by_rank) total += level.size();
  return total;
}

std::vector<Flat> rank2_flats(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  std::vector<Flat> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      Flat flat;
      flat.rank = 2;
      for (std::size_t h = 0; h < n; ++h) {
        if (h == i || h == j) {
          flat.hyperplanes.push_back(h);
          continue;
        }
        const std::size_t idx[] = {i, j, h};
        if (a.rank_of(idx) == 2) flat.hyperplanes.push_back(h);
      }
      for (std::size_t x : flat.hyperplanes)
        for (std::size_t y : flat.hyperplanes) covered[x][y] = true;
      out.push_back(std::move(flat));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Flat& l, const Flat& r) { return l.hyperplanes < r.hyperplanes; });
  return out;
}

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// Row-reduced basis of the span of the given forms, used to test membership
// of further forms without redoing the elimination.
class Span {
 public:
  Span(const Arrangement& a, const std::vector<std::size_t>& idx) : field_(a.field()) {
    for (std::size_t i : idx) insert(a.form(i));
  }

  std::size_t dim() const { return basis_.size(); }

  bool contains(const LinearForm& f) const { return reduce(f).second; }

  void insert(const LinearForm& f) {
    auto [v, zero] = reduce(f);
    if (zero) return;
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    const FieldElement inv = v[p].inverse();
    for (auto& c : v) c *= inv;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
  }

 private:
  std::pair<LinearForm, bool> reduce(LinearForm v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const FieldElement c = v[pivots_[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!basis_[k][j].is_zero()) v[j] -= c * basis_[k][j];
    }
    const bool zero =
        std::all_of(v.begin(), v.end(), [](const FieldElement& e) { return e.is_zero(); });
    return {std::move(v), zero};
  }

  FieldSpec field_;
  std::vector<LinearForm> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

FlatLattice full_lattice(const Arrangement& a, LatticeOptions options) {
  const std::size_t n = a.size();
  const std::size_t bound = std::min<std::size_t>(options.max_hyperplanes, 64);
  if (n > bound)
    throw DomainError("full lattice enumeration bound exceeded: " + std::to_string(n) +
                      " hyperplanes > " + std::to_string(bound));

  std::vector<std::vector<Mask>> levels{{Mask{0}}};
  while (true) {
    std::vector<Mask> next;
    for (Mask flat : levels.back()) {
      const auto idx = members(flat);
      for (std::size_t h = 0; h < n; ++h) {
        if (flat >> h & 1) continue;
        Span span(a, idx);
        span.insert(a.form(h));
        Mask closure = flat | (Mask{1} << h);
        for (std::size_t k = 0; k < n; ++k)
          if (!(closure >> k & 1) && span.contains(a.form(k))) closure |= Mask{1} << k;
        next.push_back(closure);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }

  FlatLattice lattice;
  lattice.ambient_dim = a.ambient_dim();
  std::map<Mask, Integer> mu;
  for (std::size_t r = 0; r < levels.size(); ++r) {
    std::vector<LatticeFlat> level;
    for (Mask x : levels[r]) {
      Integer value = 0;
      if (r == 0) {
        value = 1;
      } else {
        for (const auto& [y, mu_y] : mu)
          if ((y & x) == y && y != x) value -= mu_y;
      }
      level.push_back({Flat{members(x), r}, value});
    }
    for (const auto& lf : level) {
      Mask m = 0;
      for (std::size_t h : lf.flat.hyperplanes) m |= Mask{1} << h;
      mu[m] = lf.mobius;
    }
    std::sort(level.begin(), level.end(), [](const LatticeFlat& l, const LatticeFlat& r) {
      return l.flat.hyperplanes < r.flat.hyperplanes;
    });
    lattice.by_rank.push_back(std::move(level));
  }
  return lattice;
}

Polynomial characteristic_polynomial(const FlatLattice& lattice) {
  std::vector<Rational> c(lattice.ambient_dim + 1);
  for (const auto& level : lattice.by_rank)
    for (const auto& lf : level) c[lattice.ambient_dim - lf.flat.rank] += Rational(lf.mobius);
  return Polynomial(std::move(c));
}

}  // namespace milnorforge
