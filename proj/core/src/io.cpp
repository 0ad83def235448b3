#include "milnorforge/io.hpp"

#include <algorithm>
#include <stdexcept>

#include "milnorforge/error.hpp"

namespace milnorforge {

namespace {

std::vector<std::string> labels_of(const Arrangement& a, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(a.label(i));
  return out;
}

std::vector<std::size_t> indices_of(const Arrangement& a, const Json& labels) {
  if (!labels.is_array()) throw InputError("expected an array of hyperplane labels");
  std::vector<std::size_t> out;
  for (const auto& l : labels) {
    if (!l.is_string()) throw InputError("hyperplane labels must be strings");
    out.push_back(a.index_of(l.get<std::string>()));
  }
  return out;
}

template <typename T>
T get_field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string(what) + " has a malformed \"" + key + "\"");
  }
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json field_to_json(const FieldSpec& f) {
  if (f.characteristic() != 0)
    throw InputError("only characteristic-0 fields appear in arrangement documents");
  const unsigned long n = f.cyclotomic_order().value_or(1);
  if (n == 1) return "Q";
  return Json{{"cyclotomic", n}};
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw InputError("unknown field \"" + j.get<std::string>() + "\"");
  }
  const long n = get_field<long>(j, "cyclotomic", "field");
  if (n < 1) throw InputError("cyclotomic order must be positive");
  return FieldSpec::cyclotomic(static_cast<unsigned long>(n));
}

Json arrangement_to_json(const Arrangement& a, const std::vector<long>* weights) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["ambient_dim"] = a.ambient_dim();
  Json hs = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json coeffs = Json::array();
    for (const auto& c : a.form(i)) coeffs.push_back(c.to_string());
    hs.push_back(Json{{"label", a.label(i)}, {"coeffs", coeffs}});
  }
  j["hyperplanes"] = hs;
  if (weights) j["weights"] = *weights;
  return j;
}

ParsedArrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("arrangement document must be a JSON object");
  if (!j.contains("field")) throw InputError("arrangement is missing \"field\"");
  const FieldSpec field = field_from_json(j.at("field"));
  const long dim = get_field<long>(j, "ambient_dim", "arrangement");
  if (dim < 1) throw InputError("ambient_dim must be positive");
  const Json hs = get_field<Json>(j, "hyperplanes", "arrangement");
  if (!hs.is_array()) throw InputError("\"hyperplanes\" must be an array");
  std::vector<LinearForm> forms;
  std::vector<std::string> labels;
  for (const auto& h : hs) {
    labels.push_back(get_field<std::string>(h, "label", "hyperplane"));
    const auto coeffs = get_field<std::vector<Json>>(h, "coeffs", "hyperplane");
    LinearForm f;
    for (const auto& c : coeffs) {
      if (c.is_string()) f.push_back(field.parse(c.get<std::string>()));
      else if (c.is_number_integer()) f.push_back(field.from_integer(c.get<long>()));
      else throw InputError("coefficients must be strings or integers");
    }
    forms.push_back(std::move(f));
  }
  ParsedArrangement out{Arrangement(field, static_cast<std::size_t>(dim), std::move(forms),
                                    std::move(labels)),
                        std::nullopt};
  if (j.contains("weights")) {
    out.weights = get_field<std::vector<long>>(j, "weights", "arrangement");
    MultiArrangement check(out.arrangement, *out.weights);
  }
  return out;
}

Json multinet_to_json(const Multinet& m) {
  const Arrangement& a = m.arrangement;
  Json classes = Json::array();
  for (const auto& c : m.classes) classes.push_back(labels_of(a, c));
  Json mult = Json::object();
  for (std::size_t i = 0; i < a.size(); ++i) mult[a.label(i)] = m.multiplicities.at(i);
  Json base = Json::array();
  for (const Flat& z : m.base_locus) base.push_back(labels_of(a, z.hyperplanes));
  return Json{{"classes", classes},
              {"multiplicities", mult},
              {"multiplicity_vector", m.multiplicities},
              {"base_locus", base},
              {"k", m.classes.size()},
              {"d", m.classes.empty() ? 0 : m.class_weight(0)}};
}

Multinet multinet_from_json(const Json& j, const Arrangement& a) {
  Multinet m{a, {}, std::vector<long>(a.size(), 1), {}};
  for (const auto& c : get_field<Json>(j, "classes", "multinet")) {
    auto idx = indices_of(a, c);
    std::sort(idx.begin(), idx.end());
    m.classes.push_back(std::move(idx));
  }
  const Json mult = get_field<Json>(j, "multiplicities", "multinet");
  if (mult.is_array()) {
    if (mult.size() != a.size()) throw InputError("multiplicity vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) m.multiplicities[i] = mult[i].get<long>();
  } else if (mult.is_object()) {
    for (const auto& [label, v] : mult.items()) {
      if (!v.is_number_integer()) throw InputError("multiplicities must be integers");
      m.multiplicities[a.index_of(label)] = v.get<long>();
    }
  } else {
    throw InputError("\"multiplicities\" must be an object or an array");
  }
  for (const auto& z : get_field<Json>(j, "base_locus", "multinet")) {
    Flat f;
    f.hyperplanes = indices_of(a, z);
    std::sort(f.hyperplanes.begin(), f.hyperplanes.end());
    f.rank = 2;
    m.base_locus.push_back(std::move(f));
  }
  return m;
}

Json verification_to_json(const MultinetVerification& v) {
  Json j{{"ok", v.ok}};
  if (v.violated) {
    j["violated"] = axiom_name(*v.violated);
    j["witness"] = v.witness;
  } else {
    j["d"] = v.d;
  }
  return j;
}

Json certificates_to_json(const Multinet& m, const std::vector<PointedCertificate>& certs) {
  Json out = Json::array();
  for (const auto& c : certs)
    out.push_back(Json{{"hyperplane", m.arrangement.label(c.hyperplane)},
                       {"multiplicity", c.multiplicity},
                       {"primes", c.primes}});
  return out;
}

Json presentation_to_json(const GroupPresentation& p) {
  Json relators = Json::array();
  for (const Word& w : p.relators) relators.push_back(word_to_string(w, p.generators));
  return Json{{"generators", p.generators},
              {"relators", relators},
              {"deconed_at", p.deconed_at},
              {"rotation", p.rotation.get_str()}};
}

Json homology_to_json(const HomologyReport& h) {
  Json torsion = Json::array();
  for (const auto& f : h.torsion) torsion.push_back(integer_to_json(f));
  return Json{{"betti", h.betti}, {"torsion", torsion}, {"components", h.components}};
}

namespace {

Json dims_to_json(const CharacterScan& s) {
  Json j = Json::object();
  for (std::size_t t = 0; t < s.dims.size(); ++t) j[std::to_string(t)] = s.dims[t];
  return j;
}

}  // namespace

Json milnor_report_to_json(const MilnorFiberReport& r) {
  Json per = Json::object();
  per["0"] = dims_to_json(r.characteristic_zero);
  for (const auto& s : r.finite) per[std::to_string(s.characteristic)] = dims_to_json(s);
  Json fields = Json::object();
  Json totals = Json::object();
  fields["0"] = r.characteristic_zero.field;
  totals["0"] = r.characteristic_zero.total;
  for (const auto& s : r.finite) {
    fields[std::to_string(s.characteristic)] = s.field;
    totals[std::to_string(s.characteristic)] = s.total;
  }
  Json verdicts = Json::object();
  Json witnesses = Json::object();
  Json uct = Json::object();
  for (const auto& [p, v] : r.verdicts) {
    verdicts[std::to_string(p)] = v;
    witnesses[std::to_string(p)] = r.witnesses.at(p);
    uct[std::to_string(p)] = r.universal_coefficients_consistent(p);
  }
  Json torsion = Json::array();
  for (const auto& f : r.integral.torsion) torsion.push_back(integer_to_json(f));
  return Json{{"N", r.n},
              {"labels", r.labels},
              {"weights", r.weights},
              {"deconed_at", r.deconed_at},
              {"rotation", r.rotation.get_str()},
              {"relators", r.relator_count},
              {"fields", fields},
              {"perCharacter", per},
              {"totals", totals},
              {"betti", r.integral.betti},
              {"torsion", torsion},
              {"components", r.integral.components},
              {"verdicts", verdicts},
              {"witnesses", witnesses},
              {"decompositionConsistent", r.decomposition_consistent()},
              {"universalCoefficientsConsistent", uct}};
}

Json torsion_verdict_to_json(const TorsionVerdict& v) {
  return Json{{"prime", v.prime},
              {"N", v.n},
              {"theoremForm", v.theorem_form},
              {"dimensionJump", v.dimension_jump},
              {"certified", v.theorem_form || v.dimension_jump},
              {"witnesses", v.witnesses},
              {"totalCharacteristicZero", v.total_zero},
              {"totalCharacteristicP", v.total_p}};
}

Json lattice_to_json(const FlatLattice& lattice, const Arrangement& a) {
  Json ranks = Json::array();
  for (const auto& level : lattice.by_rank) {
    Json flats = Json::array();
    for (const auto& f : level)
      flats.push_back(Json{{"hyperplanes", labels_of(a, f.flat.hyperplanes)},
                           {"mobius", integer_to_json(f.mobius)}});
    ranks.push_back(flats);
  }
  Json counts = Json::array();
  for (const auto& level : lattice.by_rank) counts.push_back(level.size());
  return Json{{"rank", lattice.rank()}, {"flat_counts", counts}, {"flats_by_rank", ranks}};
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
    const Rational c = p.coefficient(d);
    if (c.get_den() != 1) throw std::logic_error("characteristic polynomial is not integral");
    coeffs.push_back(integer_to_json(c.get_num()));
  }
  return Json{{"coefficients", coeffs}, {"polynomial", p.to_string("t")}};
}

Json polarized_to_json(const PolarizedArrangement& p) {
  Json j = arrangement_to_json(p.result);
  Json coords = Json::array();
  for (std::size_t i = 0; i < p.new_coordinates.size(); ++i)
    coords.push_back(Json{{"coordinate", p.new_coordinates[i]}, {"attached_to", p.attached_to[i]}});
  j["provenance"] = Json{{"weights", p.weights}, {"new_coordinates", coords}};
  return j;
}

Json cover_compatibility_to_json(const CoverCompatibility& c) {
  Json pencils = Json::object();
  for (const auto& [label, m] : c.pencils) pencils[label] = m;
  return Json{{"N_multiarrangement", c.multi_order},
              {"N_polarization", c.polarized_order},
              {"pencils", pencils},
              {"consistent", c.consistent}};
}

}  // namespace milnorforge
