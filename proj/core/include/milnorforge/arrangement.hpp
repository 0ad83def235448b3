#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "milnorforge/field.hpp"

namespace milnorforge {

using LinearForm = std::vector<FieldElement>;

// A simple central arrangement: n pairwise non-proportional nonzero linear
// forms on C^ambient_dim, all over one characteristic-0 coefficient field
// (Q or a cyclotomic field). Hyperplane order is significant; weight
// vectors and catalog documentation are positional.
class Arrangement {
 public:
  Arrangement(FieldSpec field, std::size_t ambient_dim,
              std::vector<LinearForm> forms, std::vector<std::string> labels);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return forms_.size(); }

  const LinearForm& form(std::size_t i) const { return forms_.at(i); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(const std::string& label) const;
  // Throws InputError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  // Rank of the whole arrangement (codimension of the center).
  std::size_t rank() const;
  std::size_t rank_of(std::span<const std::size_t> indices) const;
  // True when every coefficient lies in Q, i.e. the arrangement is the
  // complexification of a real one.
  bool is_real() const;

 private:
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<LinearForm> forms_;
  std::vector<std::string> labels_;
};

// (A, m): positive integer weight per hyperplane, N = sum of the weights.
class MultiArrangement {
 public:
  MultiArrangement(Arrangement base, std::vector<long> weights);
  // All weights equal to one.
  explicit MultiArrangement(Arrangement base);

  const Arrangement& base() const { return base_; }
  const std::vector<long>& weights() const { return weights_; }
  long weight(std::size_t i) const { return weights_.at(i); }
  long total_weight() const;

 private:
  Arrangement base_;
  std::vector<long> weights_;
};

// A without hyperplane `label`; relative order of the rest is preserved.
Arrangement deletion(const Arrangement& a, const std::string& label);

// Real affine line a*u + b*v + c = 0.
struct AffineLine {
  std::string label;
  Rational a, b, c;
};

struct AffineArrangement {
  std::vector<AffineLine> lines;
  // Label of the hyperplane sent to infinity.
  std::string at_infinity;
};

// Sends H0 to infinity. The essential part of A is taken first (forms
// restricted to the pivot coordinates of their row-reduced span), then f_H0
// is completed to a basis by the standard coordinate vectors other than its
// first nonzero coordinate; setting f_H0 = 1 leaves each remaining form
// affine in the two other coordinates. Requires rank 3 and real coefficients.
AffineArrangement decone(const Arrangement& a, const std::string& h0);

}  // namespace milnorforge
