#include "milnorforge/multinet.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "milnorforge/error.hpp"

namespace milnorforge {

long Multinet::class_weight(std::size_t i) const {
  long d = 0;
  for (std::size_t h : classes.at(i)) d += multiplicities.at(h);
  return d;
}

long Multinet::flat_weight(const Flat& z, std::size_t i) const {
  long n = 0;
  for (std::size_t h : classes.at(i))
    if (z.contains(h)) n += multiplicities.at(h);
  return n;
}

std::vector<std::size_t> Multinet::class_of() const {
  std::vector<std::size_t> out(arrangement.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t h : classes[i]) out.at(h) = i;
  return out;
}

std::string axiom_name(MultinetAxiom axiom) {
  switch (axiom) {
    case MultinetAxiom::kAtLeastThreeClasses: return "at-least-three-classes";
    case MultinetAxiom::kConstantClassWeight: return "constant-class-weight";
    case MultinetAxiom::kCrossPairsInBaseLocus: return "cross-pairs-in-base-locus";
    case MultinetAxiom::kBalancedBaseLocus: return "balanced-base-locus";
    case MultinetAxiom::kClassConnectivity: return "class-connectivity";
  }
  return "unknown";
}

namespace {

std::string label_list(const Arrangement& a, const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += a.label(idx[i]);
  }
  return out + "}";
}

// Index of the rank-2 flat through each pair.
std::vector<std::vector<std::size_t>> pair_flat_table(std::size_t n,
                                                      const std::vector<Flat>& flats) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, flats.size()));
  for (std::size_t f = 0; f < flats.size(); ++f)
    for (std::size_t x : flats[f].hyperplanes)
      for (std::size_t y : flats[f].hyperplanes)
        if (x != y) table[x][y] = f;
  return table;
}

bool class_connected(const std::vector<std::size_t>& members,
                     const std::vector<std::vector<std::size_t>>& pair_flat,
                     const std::vector<bool>& in_base) {
  if (members.size() <= 1) return true;
  std::vector<bool> seen(members.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < members.size(); ++v) {
      if (seen[v]) continue;
      if (in_base[pair_flat[members[u]][members[v]]]) continue;
      seen[v] = true;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == members.size();
}

}  // namespace

MultinetVerification verify_multinet(const Multinet& m) {
  const Arrangement& a = m.arrangement;
  const std::size_t n = a.size();
  if (m.multiplicities.size() != n)
    throw InputError("multiplicity vector length does not match the arrangement");
  for (long v : m.multiplicities)
    if (v < 1) throw InputError("multiplicities must be positive");
  std::vector<int> seen(n, 0);
  for (const auto& cls : m.classes)
    for (std::size_t h : cls) {
      if (h >= n) throw InputError("hyperplane index out of range in multinet classes");
      ++seen[h];
    }
  for (std::size_t h = 0; h < n; ++h)
    if (seen[h] != 1)
      throw InputError("multinet classes do not partition the arrangement (hyperplane '" +
                       a.label(h) + "')");

  const std::vector<Flat> flats = rank2_flats(a);
  std::vector<bool> in_base(flats.size() + 1, false);
  for (const Flat& z : m.base_locus) {
    auto it = std::find_if(flats.begin(), flats.end(), [&](const Flat& f) {
      return f.hyperplanes == z.hyperplanes;
    });
    if (it == flats.end())
      throw InputError("base-locus entry " + label_list(a, z.hyperplanes) +
                       " is not a rank-2 flat");
    in_base[static_cast<std::size_t>(it - flats.begin())] = true;
  }
  const auto pair_flat = pair_flat_table(n, flats);
  const auto class_of = m.class_of();

  MultinetVerification out;
  auto fail = [&](MultinetAxiom axiom, std::string witness) {
    out.ok = false;
    out.violated = axiom;
    out.witness = std::move(witness);
    return out;
  };

  const std::size_t k = m.classes.size();
  if (k < 3)
    return fail(MultinetAxiom::kAtLeastThreeClasses,
                "only " + std::to_string(k) + " classes");

  const long d = m.class_weight(0);
  for (std::size_t i = 1; i < k; ++i)
    if (m.class_weight(i) != d)
      return fail(MultinetAxiom::kConstantClassWeight,
                  "class " + label_list(a, m.classes[i]) + " has weight " +
                      std::to_string(m.class_weight(i)) + ", class " +
                      label_list(a, m.classes[0]) + " has weight " + std::to_string(d));
  out.d = d;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (class_of[x] != class_of[y] && !in_base[pair_flat[x][y]])
        return fail(MultinetAxiom::kCrossPairsInBaseLocus,
                    a.label(x) + " and " + a.label(y) + " meet at " +
                        label_list(a, flats[pair_flat[x][y]].hyperplanes) +
                        ", which is not in the base locus");

  for (const Flat& z : m.base_locus) {
    const long n0 = m.flat_weight(z, 0);
    for (std::size_t i = 1; i < k; ++i)
      if (m.flat_weight(z, i) != n0)
        return fail(MultinetAxiom::kBalancedBaseLocus,
                    "flat " + label_list(a, z.hyperplanes) + " has weight " +
                        std::to_string(n0) + " on class 0 but " +
                        std::to_string(m.flat_weight(z, i)) + " on class " +
                        std::to_string(i));
  }

  for (const auto& cls : m.classes)
    if (!class_connected(cls, pair_flat, in_base))
      return fail(MultinetAxiom::kClassConnectivity,
                  "class " + label_list(a, cls) + " is disconnected off the base locus");

  out.ok = true;
  return out;
}

namespace {

class Searcher {
 public:
  Searcher(const Arrangement& a, const MultinetSearchOptions& opt)
      : a_(a), opt_(opt), n_(a.size()), flats_(rank2_flats(a)) {
    pair_flat_ = pair_flat_table(n_, flats_);
    flats_of_.assign(n_, {});
    for (std::size_t f = 0; f < flats_.size(); ++f)
      for (std::size_t h : flats_[f].hyperplanes) flats_of_[h].push_back(f);
  }

  std::vector<Multinet> run() {
    for (std::size_t k = std::max<std::size_t>(opt_.k_min, 3); k <= opt_.k_max; ++k)
      search_k(k);
    return std::move(results_);
  }

 private:
  void search_k(std::size_t k) {
    k_ = k;
    // Flats with fewer than k hyperplanes cannot meet every class, so they
    // are monochromatic: merge their hyperplanes into one group.
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (const Flat& f : flats_) {
      if (f.hyperplanes.size() >= k) continue;
      for (std::size_t h : f.hyperplanes) {
        std::size_t r1 = root(f.hyperplanes[0]), r2 = root(h);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
    groups_.clear();
    std::vector<std::size_t> group_index(n_, n_);
    for (std::size_t h = 0; h < n_; ++h) {
      const std::size_t r = root(h);
      if (group_index[r] == n_) {
        group_index[r] = groups_.size();
        groups_.emplace_back();
      }
      groups_[group_index[r]].push_back(h);
    }
    if (groups_.size() < k) return;
    cls_.assign(n_, k);
    assign_group(0, 0);
  }

  // Backtracking over class labels per group with restricted growth.
  void assign_group(std::size_t g, std::size_t used) {
    if (g == groups_.size()) {
      if (used == k_) evaluate_partition();
      return;
    }
    const std::size_t remaining = groups_.size() - g;
    for (std::size_t c = 0; c <= std::min(used, k_ - 1); ++c) {
      const std::size_t new_used = std::max(used, c + 1);
      if (k_ - new_used > remaining - 1) continue;
      for (std::size_t h : groups_[g]) cls_[h] = c;
      if (partial_ok(g)) assign_group(g + 1, new_used);
    }
    for (std::size_t h : groups_[g]) cls_[h] = k_;
  }

  // A flat that already meets two classes must be able to meet all k.
  bool partial_ok(std::size_t g) const {
    for (std::size_t h : groups_[g]) {
      for (std::size_t f : flats_of_[h]) {
        std::vector<bool> present(k_, false);
        std::size_t distinct = 0, open = 0;
        for (std::size_t x : flats_[f].hyperplanes) {
          if (cls_[x] == k_) {
            ++open;
          } else if (!present[cls_[x]]) {
            present[cls_[x]] = true;
            ++distinct;
          }
        }
        if (distinct >= 2 && distinct + open < k_) return false;
      }
    }
    return true;
  }

  void evaluate_partition() {
    std::vector<bool> in_base(flats_.size() + 1, false);
    std::vector<std::size_t> base;
    for (std::size_t f = 0; f < flats_.size(); ++f) {
      std::set<std::size_t> present;
      for (std::size_t x : flats_[f].hyperplanes) present.insert(cls_[x]);
      if (present.size() == 1) continue;
      if (present.size() != k_) return;
      in_base[f] = true;
      base.push_back(f);
    }
    std::vector<std::vector<std::size_t>> classes(k_);
    for (std::size_t h = 0; h < n_; ++h) classes[cls_[h]].push_back(h);
    for (const auto& c : classes)
      if (!class_connected(c, pair_flat_, in_base)) return;

    // Equal-sum constraints: the classes themselves, then each base flat
    // split by class.
    std::vector<std::vector<std::vector<std::size_t>>> groups;
    groups.push_back(classes);
    for (std::size_t f : base) {
      std::vector<std::vector<std::size_t>> split(k_);
      for (std::size_t x : flats_[f].hyperplanes) split[cls_[x]].push_back(x);
      groups.push_back(std::move(split));
    }
    constraints_ = std::move(groups);
    base_ = std::move(base);
    classes_ = std::move(classes);
    mult_.assign(n_, 0);
    assign_mult(0);
  }

  bool mult_feasible() const {
    for (const auto& group : constraints_) {
      long lo_max = 0, hi_min = -1;
      for (const auto& subset : group) {
        long sum = 0, open = 0;
        for (std::size_t h : subset) {
          if (mult_[h] == 0) ++open;
          else sum += mult_[h];
        }
        lo_max = std::max(lo_max, sum + open);
        const long hi = sum + open * opt_.max_mult;
        hi_min = hi_min < 0 ? hi : std::min(hi_min, hi);
      }
      if (lo_max > hi_min) return false;
    }
    return true;
  }

  void assign_mult(std::size_t h) {
    if (h == n_) {
      record();
      return;
    }
    for (long m = 1; m <= opt_.max_mult; ++m) {
      mult_[h] = m;
      if (mult_feasible()) assign_mult(h + 1);
    }
    mult_[h] = 0;
  }

  void record() {
    Multinet m{a_, classes_, mult_, {}};
    for (std::size_t f : base_) m.base_locus.push_back(flats_[f]);
    results_.push_back(std::move(m));
  }

  const Arrangement& a_;
  MultinetSearchOptions opt_;
  std::size_t n_;
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> pair_flat_;
  std::vector<std::vector<std::size_t>> flats_of_;

  std::size_t k_ = 0;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::size_t> cls_;

  std::vector<std::vector<std::vector<std::size_t>>> constraints_;
  std::vector<std::size_t> base_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<long> mult_;

  std::vector<Multinet> results_;
};

}  // namespace

std::vector<Multinet> search_multinets(const Arrangement& a,
                                       const MultinetSearchOptions& options) {
  if (a.size() > options.max_hyperplanes)
    throw DomainError("multinet search bound exceeded: " + std::to_string(a.size()) +
                      " hyperplanes > " + std::to_string(options.max_hyperplanes));
  if (options.max_mult < 1) throw InputError("max_mult must be at least 1");
  return Searcher(a, options).run();
}

std::vector<PointedCertificate> pointed_hyperplanes(const Multinet& m) {
  const MultinetVerification v = verify_multinet(m);
  if (!v.ok)
    throw DomainError("pointed certificates require a verified multinet; axiom " +
                      axiom_name(*v.violated) + " fails: " + v.witness);
  std::vector<PointedCertificate> out;
  long content = 0;
  for (long x : m.multiplicities) content = std::gcd(content, x);
  if (content != 1) return out;
  for (std::size_t h = 0; h < m.arrangement.size(); ++h) {
    const long mh = m.multiplicities[h];
    if (mh <= 1) continue;
    bool divides = true;
    const std::size_t c = m.class_of()[h];
    for (const Flat& z : m.base_locus)
      if (z.contains(h) && m.flat_weight(z, c) % mh != 0) divides = false;
    if (!divides) continue;
    out.push_back({h, mh, prime_divisors(static_cast<unsigned long>(mh))});
  }
  return out;
}

}  // namespace milnorforge
