#include "milnorforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "milnorforge/arrangement.hpp"
#include "milnorforge/catalog.hpp"
#include "milnorforge/covers.hpp"
#include "milnorforge/error.hpp"
#include "milnorforge/io.hpp"
#include "milnorforge/lattice.hpp"
#include "milnorforge/matroidops.hpp"
#include "milnorforge/multinet.hpp"
#include "milnorforge/presentation.hpp"

namespace milnorforge::cli {

namespace {

struct InputOptions {
  std::string catalog;
  std::string input;
  std::vector<long> weights;
  std::string output;
  std::string deconed_at;
  std::string rotation;
  bool verbose = false;
};

struct Loaded {
  Arrangement arrangement;
  std::optional<std::vector<long>> weights;
  // Catalog spec when the arrangement came from --catalog.
  std::string catalog;
};

void add_input_options(CLI::App* sub, InputOptions& o) {
  sub->add_option("--catalog", o.catalog, "Catalog arrangement, e.g. B3 or pencil(4)");
  sub->add_option("--input", o.input, "Arrangement JSON file");
  sub->add_option("--weights", o.weights, "Comma-separated weights in hyperplane order")
      ->delimiter(',');
  sub->add_option("--output", o.output, "Write the report to this file instead of stdout");
  sub->add_flag("-v,--verbose", o.verbose, "Progress messages on stderr");
}

void add_pipeline_options(CLI::App* sub, InputOptions& o) {
  sub->add_option("--deconed-at", o.deconed_at, "Hyperplane sent to infinity");
  sub->add_option("--rotation", o.rotation, "Sweep rotation parameter t (rational)");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Loaded load_source(const std::string& catalog_spec, const std::string& input_path) {
  if (catalog_spec.empty() == input_path.empty())
    throw InputError("exactly one of --catalog and --input is required");
  if (!catalog_spec.empty()) return {catalog(catalog_spec), std::nullopt, catalog_spec};
  ParsedArrangement parsed = arrangement_from_json(read_json_file(input_path));
  return {std::move(parsed.arrangement), std::move(parsed.weights), ""};
}

Loaded load(const InputOptions& o) {
  Loaded l = load_source(o.catalog, o.input);
  if (!o.weights.empty()) l.weights = o.weights;
  if (l.weights) MultiArrangement check(l.arrangement, *l.weights);
  return l;
}

MultiArrangement multi(const Loaded& l) {
  return l.weights ? MultiArrangement(l.arrangement, *l.weights) : MultiArrangement(l.arrangement);
}

CoverOptions cover_options(const InputOptions& o) {
  CoverOptions c;
  if (!o.deconed_at.empty()) c.deconed_at = o.deconed_at;
  if (!o.rotation.empty()) {
    try {
      Rational t(o.rotation);
      t.canonicalize();
      c.rotation = t;
    } catch (const std::invalid_argument&) {
      throw InputError("--rotation expects a rational number, got '" + o.rotation + "'");
    }
  }
  return c;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::ostream& err, const InputOptions& o)
      : out_(out), err_(err), opts_(o) {}

  void progress(const std::string& msg) const {
    if (opts_.verbose) err_ << "[milnorforge] " << msg << '\n';
  }

  std::function<void(const std::string&)> progress_callback() const {
    if (!opts_.verbose) return {};
    return [this](const std::string& m) { progress(m); };
  }

  void emit(const std::string& command, const Json& body) const {
    Json doc{{"schemaVersion", 1}, {"command", command}};
    merge(doc, body);
    const std::string text = doc.dump(2) + "\n";
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opts_.output);
    if (!file) throw InputError("cannot write '" + opts_.output + "'");
    file << text;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  const InputOptions& opts_;
};

std::vector<Multinet> load_multinets(const std::string& path, const Arrangement& a) {
  const Json j = read_json_file(path);
  std::vector<Multinet> out;
  if (j.contains("multinets")) {
    for (const auto& m : j.at("multinets"))
      out.push_back(multinet_from_json(m.contains("multinet") ? m.at("multinet") : m, a));
  } else {
    out.push_back(multinet_from_json(j, a));
  }
  return out;
}

struct SearchParams {
  std::size_t k = 0;
  std::size_t k_min = 3;
  std::size_t k_max = 4;
  long max_mult = 1;

  MultinetSearchOptions options() const {
    MultinetSearchOptions o;
    o.k_min = k ? k : k_min;
    o.k_max = k ? k : k_max;
    o.max_mult = max_mult;
    return o;
  }
};

void add_search_options(CLI::App* sub, SearchParams& p) {
  sub->add_option("--k", p.k, "Number of classes (overrides --k-min/--k-max)");
  sub->add_option("--k-min", p.k_min, "Smallest class count")->capture_default_str();
  sub->add_option("--k-max", p.k_max, "Largest class count")->capture_default_str();
  sub->add_option("--max-mult", p.max_mult, "Largest multiplicity")->capture_default_str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor fiber homology of hyperplane arrangements", "milnorforge"};
  app.require_subcommand(1);
  InputOptions o;
  SearchParams search;
  std::vector<unsigned long> primes;
  unsigned long prime = 0;
  std::size_t threads = 0;
  std::string multinet_path;
  std::string catalog_name;
  bool list = false;

  auto* cat = app.add_subcommand("catalog", "Emit a catalog arrangement as JSON");
  cat->add_option("name", catalog_name, "Catalog name, e.g. B3, pencil(4), generic(5,3)");
  cat->add_flag("--list", list, "List catalog names");
  cat->add_option("--output", o.output, "Write the arrangement to this file");

  auto* lat = app.add_subcommand("lattice", "Intersection lattice with Mobius values");
  add_input_options(lat, o);
  auto* chr = app.add_subcommand("charpoly", "Characteristic polynomial");
  add_input_options(chr, o);

  auto* mn = app.add_subcommand("multinet", "Multinet search and verification");
  mn->require_subcommand(1);
  auto* mn_search = mn->add_subcommand("search", "All multinets in a class-count range");
  add_input_options(mn_search, o);
  add_search_options(mn_search, search);
  auto* mn_verify = mn->add_subcommand("verify", "Check the multinet axioms");
  add_input_options(mn_verify, o);
  mn_verify->add_option("--multinet", multinet_path, "Multinet JSON file")->required();

  auto* pt = app.add_subcommand("pointed", "Pointed-multinet certificates");
  add_input_options(pt, o);
  add_search_options(pt, search);
  pt->add_option("--multinet", multinet_path, "Use this multinet instead of searching");

  auto* ml = app.add_subcommand("milnor", "Per-character and integral H1 of the Milnor fiber");
  add_input_options(ml, o);
  add_pipeline_options(ml, o);
  ml->add_option("--primes", primes, "Comma-separated characteristics to compare")
      ->delimiter(',');
  ml->add_option("--threads", threads, "Character-scan threads (0 = automatic)");

  auto* tr = app.add_subcommand("torsion", "p-torsion verdict for H1 of the Milnor fiber");
  add_input_options(tr, o);
  add_pipeline_options(tr, o);
  tr->add_option("--prime", prime, "Prime to test")->required();
  tr->add_option("--threads", threads, "Character-scan threads (0 = automatic)");

  auto* pl = app.add_subcommand("polarize", "Polarization A||m and its predictions");
  add_input_options(pl, o);
  pl->add_option("--prime", prime, "Prime carried by the pointed multinet");
  pl->add_option("--max-mult", search.max_mult,
                 "Multiplicity bound when searching the parent for a pointed multinet");

  InputOptions right;
  std::string left_base, right_base;
  auto* cn = app.add_subcommand("connect", "Parallel connection of two arrangements");
  cn->add_option("--left", o.catalog, "Left catalog arrangement");
  cn->add_option("--left-input", o.input, "Left arrangement JSON file");
  cn->add_option("--left-base", left_base, "Base hyperplane of the left side")->required();
  cn->add_option("--right", right.catalog, "Right catalog arrangement");
  cn->add_option("--right-input", right.input, "Right arrangement JSON file");
  cn->add_option("--right-base", right_base, "Base hyperplane of the right side")->required();
  cn->add_option("--output", o.output, "Write the arrangement to this file");

  auto* pr = app.add_subcommand("presentation", "Braid-monodromy presentation of pi_1");
  add_input_options(pr, o);
  add_pipeline_options(pr, o);

  auto* cv = app.add_subcommand("cover", "Integral H1 of the weighted cyclic cover");
  add_input_options(cv, o);
  add_pipeline_options(cv, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  Emitter emitter(out, err, o);

  if (cat->parsed()) {
    if (list || catalog_name.empty()) {
      emitter.emit("catalog", Json{{"names", catalog_names()}});
      return kSuccess;
    }
    const Arrangement a = catalog(catalog_name);
    Json body{{"name", catalog_name}};
    merge(body, arrangement_to_json(a));
    emitter.emit("catalog", body);
    return kSuccess;
  }

  if (lat->parsed() || chr->parsed()) {
    const Loaded l = load(o);
    const FlatLattice lattice = full_lattice(l.arrangement);
    if (lat->parsed()) {
      emitter.emit("lattice", lattice_to_json(lattice, l.arrangement));
    } else {
      emitter.emit("charpoly", Json{{"characteristicPolynomial",
                                     polynomial_to_json(characteristic_polynomial(lattice))}});
    }
    return kSuccess;
  }

  if (mn_search->parsed()) {
    const Loaded l = load(o);
    emitter.progress("searching multinets");
    const auto found = search_multinets(l.arrangement, search.options());
    Json list_json = Json::array();
    for (const auto& m : found) list_json.push_back(multinet_to_json(m));
    emitter.emit("multinet search", Json{{"count", found.size()}, {"multinets", list_json}});
    return kSuccess;
  }

  if (mn_verify->parsed()) {
    const Loaded l = load(o);
    Json reports = Json::array();
    bool all_ok = true;
    for (const auto& m : load_multinets(multinet_path, l.arrangement)) {
      const auto v = verify_multinet(m);
      all_ok = all_ok && v.ok;
      reports.push_back(verification_to_json(v));
    }
    emitter.emit("multinet verify", Json{{"ok", all_ok}, {"verifications", reports}});
    return kSuccess;
  }

  if (pt->parsed()) {
    const Loaded l = load(o);
    std::vector<Multinet> nets;
    if (!multinet_path.empty()) {
      nets = load_multinets(multinet_path, l.arrangement);
    } else {
      emitter.progress("searching multinets");
      nets = search_multinets(l.arrangement, search.options());
    }
    Json entries = Json::array();
    for (const auto& m : nets)
      entries.push_back(Json{{"multinet", multinet_to_json(m)},
                             {"certificates", certificates_to_json(m, pointed_hyperplanes(m))}});
    emitter.emit("pointed", Json{{"count", nets.size()}, {"multinets", entries}});
    return kSuccess;
  }

  if (ml->parsed() || tr->parsed()) {
    const Loaded l = load(o);
    ScanOptions scan;
    scan.cover = cover_options(o);
    scan.threads = threads;
    scan.progress = emitter.progress_callback();
    if (ml->parsed()) {
      const auto report = milnor_report(multi(l), primes, scan);
      emitter.emit("milnor", milnor_report_to_json(report));
    } else {
      const auto verdict = detect_torsion_ptors1(multi(l), prime, scan);
      emitter.emit("torsion", torsion_verdict_to_json(verdict));
    }
    return kSuccess;
  }

  if (pl->parsed()) {
    const Loaded l = load(o);
    const MultiArrangement ma = multi(l);
    const PolarizedArrangement p = polarize(ma);
    std::vector<unsigned long> carried;
    if (prime != 0) {
      if (!is_prime(prime)) throw InputError("--prime must be prime");
      carried.push_back(prime);
    } else if (!l.catalog.empty()) {
      if (const auto del = catalog_deletion(l.catalog)) {
        emitter.progress("searching " + del->parent + " for pointed multinets at " + del->deleted);
        MultinetSearchOptions opts;
        opts.max_mult = std::max<long>(search.max_mult, 2);
        carried = pointed_primes_at(catalog(del->parent), del->deleted, opts);
      }
    }
    emitter.emit("polarize",
                 Json{{"arrangement", polarized_to_json(p)},
                      {"hyperplaneCount", p.result.size()},
                      {"rank", p.result.rank()},
                      {"predictedTorsionDegree", predicted_torsion_degree(ma)},
                      {"primes", carried},
                      {"coverCompatibility", cover_compatibility_to_json(cover_compatibility_check(ma))}});
    return kSuccess;
  }

  if (cn->parsed()) {
    const Loaded left = load_source(o.catalog, o.input);
    const Loaded rightl = load_source(right.catalog, right.input);
    const Arrangement glued =
        parallel_connection({left.arrangement, left_base, rightl.arrangement, right_base});
    Json body = arrangement_to_json(glued);
    body["rank"] = glued.rank();
    emitter.emit("connect", body);
    return kSuccess;
  }

  if (pr->parsed() || cv->parsed()) {
    const Loaded l = load(o);
    const MultiArrangement ma = multi(l);
    const CyclicCover cover = milnor_cover(ma, cover_options(o));
    if (pr->parsed()) {
      emitter.emit("presentation", presentation_to_json(cover.presentation));
    } else {
      emitter.progress("computing integral homology");
      Json body{{"N", cover.n}, {"deconed_at", cover.presentation.deconed_at}};
      merge(body, homology_to_json(h1_integral(cover)));
      emitter.emit("cover", body);
    }
    return kSuccess;
  }
  err << "usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace milnorforge::cli
