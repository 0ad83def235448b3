#include "milnorforge/arrangement.hpp"

#include <numeric>
#include <set>
#include <utility>

#include "milnorforge/error.hpp"
#include "milnorforge/field_matrix.hpp"

namespace milnorforge {

namespace {

std::size_t rank_of_forms(const FieldSpec& field,
                          const std::vector<const LinearForm*>& rows,
                          std::size_t dim) {
  if (rows.empty()) return 0;
  FieldMatrix m(field, rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = (*rows[i])[j];
  return rank(m);
}

}  // namespace

Arrangement::Arrangement(FieldSpec field, std::size_t ambient_dim,
                         std::vector<LinearForm> forms,
                         std::vector<std::string> labels)
    : field_(std::move(field)),
      ambient_dim_(ambient_dim),
      forms_(std::move(forms)),
      labels_(std::move(labels)) {
  if (field_.characteristic() != 0)
    throw DomainError("arrangements are supported over Q and cyclotomic fields only");
  if (ambient_dim_ == 0) throw InputError("ambient dimension must be positive");
  if (forms_.size() != labels_.size())
    throw InputError("number of labels does not match number of forms");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (!seen.insert(labels_[i]).second)
      throw InputError("duplicate hyperplane label '" + labels_[i] + "'");
    if (forms_[i].size() != ambient_dim_)
      throw InputError("form '" + labels_[i] + "' has " +
                       std::to_string(forms_[i].size()) + " coefficients, expected " +
                       std::to_string(ambient_dim_));
    bool nonzero = false;
    for (const auto& c : forms_[i]) {
      if (c.field() != field_)
        throw DomainError("form '" + labels_[i] + "' is not over " + field_.name());
      nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw InputError("form '" + labels_[i] + "' is zero");
  }
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t j = i + 1; j < forms_.size(); ++j)
      if (rank_of_forms(field_, {&forms_[i], &forms_[j]}, ambient_dim_) < 2)
        throw InputError("hyperplanes '" + labels_[i] + "' and '" + labels_[j] +
                         "' coincide; arrangements must be simple");
}

std::optional<std::size_t> Arrangement::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t Arrangement::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown hyperplane label '" + label + "'");
}

std::size_t Arrangement::rank() const {
  std::vector<std::size_t> all(size());
  std::iota(all.begin(), all.end(), 0);
  return rank_of(all);
}

std::size_t Arrangement::rank_of(std::span<const std::size_t> indices) const {
  std::vector<const LinearForm*> rows;
  rows.reserve(indices.size());
  for (std::size_t i : indices) rows.push_back(&forms_.at(i));
  return rank_of_forms(field_, rows, ambient_dim_);
}

bool Arrangement::is_real() const {
  for (const auto& f : forms_)
    for (const auto& c : f)
      if (!c.is_scalar()) return false;
  return true;
}

MultiArrangement::MultiArrangement(Arrangement base, std::vector<long> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.size())
    throw InputError("weight vector has " + std::to_string(weights_.size()) +
                     " entries but the arrangement has " +
                     std::to_string(base_.size()) + " hyperplanes");
  for (long w : weights_)
    if (w < 1) throw InputError("weights must be positive integers");
}

MultiArrangement::MultiArrangement(Arrangement base)
    : MultiArrangement(base, std::vector<long>(base.size(), 1)) {}

long MultiArrangement::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0L);
}

Arrangement deletion(const Arrangement& a, const std::string& label) {
  const std::size_t skip = a.index_of(label);
  std::vector<LinearForm> forms;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == skip) continue;
    forms.push_back(a.form(i));
    labels.push_back(a.label(i));
  }
  return Arrangement(a.field(), a.ambient_dim(), std::move(forms), std::move(labels));
}

AffineArrangement decone(const Arrangement& a, const std::string& h0) {
  const std::size_t r = a.rank();
  if (r != 3)
    throw DomainError("decone requires a central arrangement of rank 3, got rank " +
                      std::to_string(r));
  if (!a.is_real())
    throw DomainError(
        "decone requires real coefficients: the fundamental-group pipeline "
        "supports complexified-real arrangements only");
  const std::size_t infinity = a.index_of(h0);
  const std::size_t n = a.size();
  const std::size_t dim = a.ambient_dim();

  std::vector<std::vector<Rational>> forms(n, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) forms[i][j] = a.form(i)[j].coefficients()[0];

  // Pivot columns of the row-reduced span.
  std::vector<std::size_t> pivots;
  {
    auto m = forms;
    std::size_t row = 0;
    for (std::size_t c = 0; c < dim && row < n; ++c) {
      std::size_t p = row;
      while (p < n && m[p][c] == 0) ++p;
      if (p == n) continue;
      std::swap(m[p], m[row]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == row || m[i][c] == 0) continue;
        const Rational f = m[i][c] / m[row][c];
        for (std::size_t j = c; j < dim; ++j) m[i][j] -= f * m[row][j];
      }
      pivots.push_back(c);
      ++row;
    }
  }
  auto essential = [&](std::size_t i) {
    return std::vector<Rational>{forms[i][pivots[0]], forms[i][pivots[1]],
                                 forms[i][pivots[2]]};
  };

  const auto g = essential(infinity);
  std::size_t lead = 0;
  while (g[lead] == 0) ++lead;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < 3; ++j)
    if (j != lead) rest.push_back(j);

  AffineArrangement out;
  out.at_infinity = h0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == infinity) continue;
    const auto f = essential(i);
    const Rational c0 = f[lead] / g[lead];
    AffineLine line;
    line.label = a.label(i);
    line.a = f[rest[0]] - c0 * g[rest[0]];
    line.b = f[rest[1]] - c0 * g[rest[1]];
    line.c = c0;
    out.lines.push_back(std::move(line));
  }
  return out;
}

}  // namespace milnorforge
