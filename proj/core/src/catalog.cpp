#include "milnorforge/catalog.hpp"

#include <cctype>
#include <sstream>

#include "milnorforge/error.hpp"

namespace milnorforge {

namespace {

struct ParsedSpec {
  std::string name;
  std::vector<long> params;
};

ParsedSpec parse_spec(const std::string& spec) {
  ParsedSpec out;
  const auto open = spec.find('(');
  out.name = spec.substr(0, open);
  if (open == std::string::npos) return out;
  const auto close = spec.find(')', open);
  if (close == std::string::npos || close + 1 != spec.size())
    throw InputError("malformed catalog spec '" + spec + "'");
  std::stringstream body(spec.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.params.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad catalog parameter '" + item + "' in '" + spec + "'");
    }
  }
  return out;
}

void expect_params(const ParsedSpec& s, std::size_t count, const std::string& usage) {
  if (s.params.size() != count) throw InputError("catalog entry expects " + usage);
}

class Builder {
 public:
  Builder(FieldSpec field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  void add(const std::string& label, const std::vector<long>& coeffs) {
    LinearForm f;
    for (long c : coeffs) f.push_back(field_.from_integer(c));
    add(label, std::move(f));
  }
  void add(const std::string& label, LinearForm f) {
    labels_.push_back(label);
    forms_.push_back(std::move(f));
  }
  FieldElement integer(long v) const { return field_.from_integer(v); }

  Arrangement build() { return Arrangement(field_, dim_, std::move(forms_), std::move(labels_)); }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<LinearForm> forms_;
  std::vector<std::string> labels_;
};

Arrangement b3() {
  Builder b(FieldSpec::rationals(), 3);
  b.add("x", {1, 0, 0});
  b.add("y", {0, 1, 0});
  b.add("z", {0, 0, 1});
  b.add("x-y", {1, -1, 0});
  b.add("x+y", {1, 1, 0});
  b.add("x-z", {1, 0, -1});
  b.add("x+z", {1, 0, 1});
  b.add("y-z", {0, 1, -1});
  b.add("y+z", {0, 1, 1});
  return b.build();
}

Arrangement boolean(long n) {
  if (n < 1) throw InputError("boolean(n) requires n >= 1");
  Builder b(FieldSpec::rationals(), static_cast<std::size_t>(n));
  static const char* small[] = {"x", "y", "z"};
  for (long i = 0; i < n; ++i) {
    std::vector<long> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i)] = 1;
    b.add(n <= 3 ? small[i] : "x" + std::to_string(i + 1), c);
  }
  return b.build();
}

Arrangement pencil(long n) {
  if (n < 1) throw InputError("pencil(n) requires n >= 1");
  Builder b(FieldSpec::rationals(), 2);
  b.add("x", {1, 0});
  if (n >= 2) b.add("y", {0, 1});
  for (long i = 1; i + 2 <= n; ++i)
    b.add(i == 1 ? "x-y" : "x-" + std::to_string(i) + "y", {1, -i});
  return b.build();
}

Arrangement generic(long n, long l) {
  if (n < 1 || l < 1) throw InputError("generic(n,l) requires n, l >= 1");
  Builder b(FieldSpec::rationals(), static_cast<std::size_t>(l));
  for (long i = 1; i <= n; ++i) {
    std::vector<long> c;
    long v = 1;
    for (long k = 0; k < l; ++k, v *= i) c.push_back(v);
    b.add("h" + std::to_string(i), c);
  }
  return b.build();
}

Arrangement a3() {
  Builder b(FieldSpec::rationals(), 3);
  b.add("x", {1, 0, 0});
  b.add("y", {0, 1, 0});
  b.add("z", {0, 0, 1});
  b.add("x-y", {1, -1, 0});
  b.add("x-z", {1, 0, -1});
  b.add("y-z", {0, 1, -1});
  return b.build();
}

Arrangement monomial(long p) {
  if (p < 2) throw InputError("monomial(p) requires p >= 2");
  const FieldSpec field = FieldSpec::cyclotomic(static_cast<unsigned long>(p));
  const FieldElement zeta = field.generator();
  Builder b(field, 3);
  b.add("x", {1, 0, 0});
  b.add("y", {0, 1, 0});
  b.add("z", {0, 0, 1});
  const char* names[] = {"x", "y", "z"};
  const std::pair<int, int> families[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [u, v] : families) {
    for (long j = 0; j < p; ++j) {
      LinearForm f(3, field.zero());
      f[static_cast<std::size_t>(u)] = field.one();
      f[static_cast<std::size_t>(v)] = -zeta.pow(j);
      std::string label = std::string(names[u]) + "-";
      if (j == 1) label += "zeta*";
      if (j > 1) label += "zeta^" + std::to_string(j) + "*";
      label += names[v];
      b.add(label, std::move(f));
    }
  }
  return b.build();
}

}  // namespace

Arrangement catalog(const std::string& spec) {
  const ParsedSpec s = parse_spec(spec);
  if (s.name == "B3") {
    expect_params(s, 0, "no parameters");
    return b3();
  }
  if (s.name == "deletedB3") {
    expect_params(s, 0, "no parameters");
    return deletion(b3(), "z");
  }
  if (s.name == "A3") {
    expect_params(s, 0, "no parameters");
    return a3();
  }
  if (s.name == "boolean") {
    expect_params(s, 1, "boolean(n)");
    return boolean(s.params[0]);
  }
  if (s.name == "pencil") {
    expect_params(s, 1, "pencil(n)");
    return pencil(s.params[0]);
  }
  if (s.name == "generic") {
    expect_params(s, 2, "generic(n,l)");
    return generic(s.params[0], s.params[1]);
  }
  if (s.name == "monomial") {
    expect_params(s, 1, "monomial(p)");
    return monomial(s.params[0]);
  }
  throw InputError("unknown catalog arrangement '" + spec + "'");
}

std::vector<std::string> catalog_names() {
  return {"boolean(n)", "pencil(n)", "generic(n,l)", "B3", "deletedB3", "A3", "monomial(p)"};
}

std::optional<CatalogDeletion> catalog_deletion(const std::string& spec) {
  if (parse_spec(spec).name == "deletedB3") return CatalogDeletion{"B3", "z"};
  return std::nullopt;
}

}  // namespace milnorforge
