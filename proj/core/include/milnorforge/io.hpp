#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/covers.hpp"
#include "milnorforge/lattice.hpp"
#include "milnorforge/matroidops.hpp"
#include "milnorforge/multinet.hpp"
#include "milnorforge/presentation.hpp"

namespace milnorforge {

// Key order is preserved so that reports are byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

// Machine-size integers become JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& v);

// "Q" or {"cyclotomic": N}.
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

// {"field", "ambient_dim", "hyperplanes": [{"label", "coeffs"}], "weights"?}
Json arrangement_to_json(const Arrangement& a, const std::vector<long>* weights = nullptr);

struct ParsedArrangement {
  Arrangement arrangement;
  std::optional<std::vector<long>> weights;
};
// Throws InputError for malformed documents.
ParsedArrangement arrangement_from_json(const Json& j);

// {"classes": [[labels]], "multiplicities": {label: m}, "base_locus": [[labels]]}
Json multinet_to_json(const Multinet& m);
Multinet multinet_from_json(const Json& j, const Arrangement& a);
Json verification_to_json(const MultinetVerification& v);
Json certificates_to_json(const Multinet& m, const std::vector<PointedCertificate>& certs);

// {"generators", "relators", "deconed_at", "rotation"}
Json presentation_to_json(const GroupPresentation& p);
Json homology_to_json(const HomologyReport& h);
// {"N", "perCharacter": {"0": {"t": dim}, "p": {...}}, "betti", "torsion",
//  "verdicts": {"p": bool}, "witnesses": {"p": [t]}} plus bookkeeping.
Json milnor_report_to_json(const MilnorFiberReport& r);
Json torsion_verdict_to_json(const TorsionVerdict& v);

Json lattice_to_json(const FlatLattice& lattice, const Arrangement& a);
// Integer coefficients, constant term first, and a display string in t.
Json polynomial_to_json(const Polynomial& p);

Json polarized_to_json(const PolarizedArrangement& p);
Json cover_compatibility_to_json(const CoverCompatibility& c);

}  // namespace milnorforge
