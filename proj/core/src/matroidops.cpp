#include "milnorforge/matroidops.hpp"

#include <algorithm>
#include <set>

#include "milnorforge/error.hpp"

namespace milnorforge {

namespace {

// Coefficients of every form in a basis of the dual space whose first
// element is the base form, followed by the coordinates other than the
// base form's leading one.
std::vector<LinearForm> rebase(const Arrangement& a, std::size_t base) {
  const LinearForm& b = a.form(base);
  std::size_t lead = 0;
  while (b[lead].is_zero()) ++lead;
  std::vector<LinearForm> out;
  for (const LinearForm& f : a.forms()) {
    const FieldElement c = f[lead] / b[lead];
    LinearForm g{c};
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != lead) g.push_back(f[j] - c * b[j]);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

Arrangement parallel_connection(const ParallelConnectionSpec& spec) {
  const Arrangement& l = spec.left;
  const Arrangement& r = spec.right;
  if (l.field() != r.field())
    throw DomainError("parallel connection requires one coefficient field, got " +
                      l.field().name() + " and " + r.field().name());
  if (l.size() < 2 || r.size() < 2)
    throw DomainError("parallel connection requires at least two hyperplanes on each side");
  const std::size_t lb = l.index_of(spec.left_base);
  const std::size_t rb = r.index_of(spec.right_base);
  const std::size_t dim = l.ambient_dim() + r.ambient_dim() - 1;
  const FieldSpec& field = l.field();

  std::vector<LinearForm> forms;
  std::vector<std::string> labels;
  for (LinearForm f : rebase(l, lb)) {
    f.resize(dim, field.zero());
    forms.push_back(std::move(f));
  }
  labels = l.labels();

  const auto right = rebase(r, rb);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i == rb) continue;
    LinearForm f(dim, field.zero());
    f[0] = right[i][0];
    for (std::size_t j = 1; j < right[i].size(); ++j) f[l.ambient_dim() + j - 1] = right[i][j];
    forms.push_back(std::move(f));
    std::string label = r.label(i);
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
    labels.push_back(std::move(label));
  }
  // The Arrangement constructor rejects proportional forms, which would
  // signal an inconsistent gluing.
  return Arrangement(field, dim, std::move(forms), std::move(labels));
}

PolarizedArrangement polarize(const MultiArrangement& ma) {
  const Arrangement& a = ma.base();
  const FieldSpec& field = a.field();
  std::vector<std::size_t> attached;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ma.weight(i) >= 2) attached.push_back(i);
  const std::size_t dim = a.ambient_dim() + attached.size();

  std::vector<LinearForm> forms;
  std::vector<std::string> labels = a.labels();
  for (LinearForm f : a.forms()) {
    f.resize(dim, field.zero());
    forms.push_back(std::move(f));
  }
  PolarizedArrangement out{a, ma.weights(), {}, {}};
  for (std::size_t k = 0; k < attached.size(); ++k) {
    const std::size_t h = attached[k];
    out.new_coordinates.push_back("w_" + a.label(h));
    out.attached_to.push_back(a.label(h));
    for (long i = 1; i < ma.weight(h); ++i) {
      LinearForm f = forms[h];
      f[a.ambient_dim() + k] = field.from_integer(-i);
      forms.push_back(std::move(f));
      labels.push_back(a.label(h) + "." + std::to_string(i));
    }
  }
  out.result = Arrangement(field, dim, std::move(forms), std::move(labels));
  return out;
}

long predicted_torsion_degree(const MultiArrangement& ma) {
  return 1 + static_cast<long>(std::count_if(ma.weights().begin(), ma.weights().end(),
                                             [](long m) { return m >= 3; }));
}

CoverCompatibility cover_compatibility_check(const MultiArrangement& ma) {
  CoverCompatibility out;
  out.multi_order = ma.total_weight();
  out.polarized_order = static_cast<long>(polarize(ma).result.size());
  for (std::size_t i = 0; i < ma.base().size(); ++i)
    out.pencils.emplace_back(ma.base().label(i), ma.weight(i));
  out.consistent = out.multi_order == out.polarized_order;
  return out;
}

std::vector<unsigned long> pointed_primes_at(const Arrangement& parent, const std::string& deleted,
                                             const MultinetSearchOptions& options) {
  const std::size_t h = parent.index_of(deleted);
  std::set<unsigned long> primes;
  for (const Multinet& m : search_multinets(parent, options))
    for (const PointedCertificate& c : pointed_hyperplanes(m))
      if (c.hyperplane == h) primes.insert(c.primes.begin(), c.primes.end());
  return {primes.begin(), primes.end()};
}

}  // namespace milnorforge
