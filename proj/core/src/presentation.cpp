#include "milnorforge/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "milnorforge/error.hpp"

namespace milnorforge {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

std::vector<long> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<long> out(generator_count, 0);
  for (int letter : w) {
    const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (g >= generator_count) throw InputError("word letter out of range");
    out[g] += letter > 0 ? 1 : -1;
  }
  return out;
}

std::size_t GroupPresentation::index_of(const std::string& label) const {
  auto it = std::find(generators.begin(), generators.end(), label);
  if (it == generators.end()) throw InputError("unknown generator '" + label + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

std::string inverse_token(const std::vector<std::string>& generators, std::size_t i) {
  const std::string& label = generators.at(i);
  std::string upper = label;
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper != label && std::find(generators.begin(), generators.end(), upper) == generators.end()) {
    // The upper-cased form must not also be some other label's inverse.
    std::size_t clashes = 0;
    for (const auto& other : generators) {
      std::string u = other;
      for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (u == upper) ++clashes;
    }
    if (clashes == 1) return upper;
  }
  return label + "^-1";
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generators) {
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    out += letter > 0 ? generators.at(g) : inverse_token(generators, g);
  }
  return out;
}

Word word_from_string(const std::string& text, const std::vector<std::string>& generators) {
  std::map<std::string, int> tokens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    tokens[generators[i]] = static_cast<int>(i) + 1;
    tokens[inverse_token(generators, i)] = -(static_cast<int>(i) + 1);
  }
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    auto it = tokens.find(token);
    if (it == tokens.end()) throw InputError("unknown generator token '" + token + "'");
    w.push_back(it->second);
  }
  return free_reduce(w);
}

GroupPresentation braid_presentation(const WiringDiagram& w) {
  const std::size_t n = w.labels.size();
  GroupPresentation out;
  out.generators = w.labels;
  out.rotation = w.rotation;

  std::vector<Word> words(n);
  for (std::size_t i = 0; i < n; ++i) words[i] = {static_cast<int>(i) + 1};
  std::vector<std::size_t> order = w.initial_order;  // top to bottom

  for (const WiringVertex& v : w.vertices) {
    const std::size_t r = v.wires.size();
    const auto first = std::find(order.begin(), order.end(), v.wires.front());
    const std::size_t top = static_cast<std::size_t>(first - order.begin());
    if (top + r > order.size() || !std::equal(v.wires.begin(), v.wires.end(), first))
      throw std::logic_error("wiring diagram vertex wires are not adjacent");

    Word product;
    for (std::size_t s : v.wires) product = concat(product, words[s]);
    for (std::size_t k = 0; k + 1 < r; ++k)
      out.relators.push_back(commutator(product, words[v.wires[k]]));

    Word above;
    std::vector<Word> next(r);
    for (std::size_t s = 0; s < r; ++s) {
      next[s] = concat(concat(above, words[v.wires[s]]), inverse(above));
      above = concat(above, words[v.wires[s]]);
    }
    for (std::size_t s = 0; s < r; ++s) {
      words[v.wires[s]] = std::move(next[s]);
      order[top + r - 1 - s] = v.wires[s];
    }
  }
  return out;
}

std::string default_deconing_hyperplane(const Arrangement& a, const std::vector<long>* weights) {
  if (a.size() == 0) throw InputError("empty arrangement has no hyperplane to decone at");
  if (weights) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (weights->at(i) == 1) return a.label(i);
  }
  return a.label(a.size() - 1);
}

GroupPresentation projective_presentation(const Arrangement& a, const std::string& h0,
                                          std::optional<Rational> rotation) {
  const std::size_t infinity = a.index_of(h0);
  const std::size_t r = a.rank();
  if (r > 3)
    throw DomainError("the fundamental-group pipeline requires rank at most 3, got rank " +
                      std::to_string(r));
  if (r <= 2) {
    GroupPresentation out;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != infinity) out.generators.push_back(a.label(i));
    out.deconed_at = h0;
    return out;
  }
  GroupPresentation out = braid_presentation(wiring(decone(a, h0), rotation));
  out.deconed_at = h0;
  return out;
}

}  // namespace milnorforge
