#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/wiring.hpp"

namespace milnorforge {

// Word in a free group: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
// Free reduction of the concatenation.
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);
// Exponent sum of each generator.
std::vector<long> exponent_sums(const Word& w, std::size_t generator_count);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // Label of the hyperplane sent to infinity (empty for bare presentations).
  std::string deconed_at;
  // Rotation parameter of the wiring diagram used.
  Rational rotation;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t index_of(const std::string& label) const;
};

// Token used for the inverse of generator i in textual words: the
// upper-cased label when that is unambiguous, otherwise label + "^-1".
std::string inverse_token(const std::vector<std::string>& generators, std::size_t i);
// Space-separated tokens, e.g. "a b A B".
std::string word_to_string(const Word& w, const std::vector<std::string>& generators);
// Throws InputError for an unknown token.
Word word_from_string(const std::string& text, const std::vector<std::string>& generators);

// One generator per wire. At each vertex with wires w_1..w_r (top to
// bottom) whose current meridian words are W_1..W_r, the relators are
// [W_1...W_r, W_j] for j < r. Passing the vertex, wire s takes the word
// (W_1...W_{s-1}) W_s (W_1...W_{s-1})^-1, i.e. it is conjugated by the wires
// that were above it in the bundle.
GroupPresentation braid_presentation(const WiringDiagram& w);

// Default hyperplane at infinity: the last one with weight 1 when weights
// are given (the last hyperplane if none has weight 1), else the last one.
std::string default_deconing_hyperplane(const Arrangement& a,
                                        const std::vector<long>* weights = nullptr);

// Presentation of pi_1 of the projectivized complement on the meridians of
// every hyperplane other than h0, in arrangement order. Rank 3 goes through
// decone, wiring and braid_presentation; rank <= 2 (a pencil) gives the free
// group on n - 1 generators. Throws DomainError for rank > 3 or non-real
// coefficients.
GroupPresentation projective_presentation(const Arrangement& a, const std::string& h0,
                                          std::optional<Rational> rotation = std::nullopt);

}  // namespace milnorforge
