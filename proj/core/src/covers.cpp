#include "milnorforge/covers.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "milnorforge/error.hpp"
#include "milnorforge/field_matrix.hpp"

namespace milnorforge {

namespace {

long reduce_mod(long e, long n) {
  e %= n;
  return e < 0 ? e + n : e;
}

}  // namespace

long CyclicCover::components() const {
  long c = n;
  for (long w : weights) c = std::gcd(c, reduce_mod(w, n));
  return c;
}

CyclicCover milnor_cover(const MultiArrangement& ma, const CoverOptions& options) {
  const Arrangement& a = ma.base();
  const std::string h0 = options.deconed_at ? *options.deconed_at
                                            : default_deconing_hyperplane(a, &ma.weights());
  CyclicCover cover;
  cover.presentation = projective_presentation(a, h0, options.rotation);
  cover.n = ma.total_weight();
  for (const auto& label : cover.presentation.generators)
    cover.weights.push_back(ma.weight(a.index_of(label)) % cover.n);
  return cover;
}

std::size_t HomologyReport::factors_divisible_by(unsigned long p) const {
  return static_cast<std::size_t>(std::count_if(torsion.begin(), torsion.end(), [&](const Integer& f) {
    return mpz_divisible_ui_p(f.get_mpz_t(), p) != 0;
  }));
}

HomologyReport h1_integral(const CyclicCover& cover) {
  if (cover.n < 1) throw InputError("cover order N must be positive");
  const GroupPresentation& p = cover.presentation;
  const std::size_t g = p.generator_count();
  if (cover.weights.size() != g)
    throw InputError("cover weight count does not match the generator count");

  HomologyReport out;
  out.components = cover.components();
  const long n = cover.n / out.components;
  std::vector<long> residues;
  for (long w : cover.weights) residues.push_back(reduce_mod(w, cover.n) / out.components);

  const auto jacobian = abelianized_jacobian(p);
  const std::size_t rows = p.relators.size() * static_cast<std::size_t>(n);
  const std::size_t cols = g * static_cast<std::size_t>(n);
  IntegerMatrix d2(rows, cols);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t j = 0; j < g; ++j) {
      const CyclicGroupRingElement e = evaluate(jacobian[r][j], residues, n);
      for (const auto& [k, c] : e.terms())
        for (long a = 0; a < n; ++a)
          d2(r * n + a, j * n + reduce_mod(a + k, n)) += c;
    }
  const SNFResult snf = smith_normal_form(std::move(d2));
  out.betti = static_cast<long>(cols) - (n - 1) - static_cast<long>(snf.rank);
  out.torsion = snf.torsion();
  return out;
}

namespace {

std::size_t local_dimension(const std::vector<std::vector<FieldElement>>& jacobian,
                            const std::vector<FieldElement>& values, const FieldSpec& field) {
  const std::size_t g = values.size();
  const bool trivial =
      std::all_of(values.begin(), values.end(), [](const FieldElement& v) { return v.is_one(); });
  const std::size_t rank_d1 = trivial ? 0 : 1;
  if (jacobian.empty()) return g - rank_d1;
  FieldMatrix m(field, jacobian.size(), g);
  for (std::size_t r = 0; r < jacobian.size(); ++r)
    for (std::size_t j = 0; j < g; ++j) m(r, j) = jacobian[r][j];
  return g - rank_d1 - rank(m);
}

}  // namespace

std::size_t h1_local(const GroupPresentation& p, const LocalSystem& l) {
  const std::size_t g = p.generator_count();
  if (l.values.size() != g)
    throw InputError("local system has " + std::to_string(l.values.size()) +
                     " values for " + std::to_string(g) + " generators");
  for (const auto& v : l.values) {
    if (v.field() != l.field) throw InputError("local system values lie in a different field");
    if (v.is_zero()) throw InputError("local system values must be invertible");
  }
  const auto jacobian = abelianized_jacobian(p);
  std::vector<std::vector<FieldElement>> entries(jacobian.size());
  for (std::size_t r = 0; r < jacobian.size(); ++r)
    for (std::size_t j = 0; j < g; ++j)
      entries[r].push_back(evaluate(jacobian[r][j], l.values, l.field));
  return local_dimension(entries, l.values, l.field);
}

std::size_t scan_thread_count(std::size_t requested) {
  std::size_t threads = requested;
  if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MILNORFORGE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) threads = std::min(threads, static_cast<std::size_t>(cap));
  }
  return std::max<std::size_t>(threads, 1);
}

namespace {

// Per-character dimensions over `field`, which must contain a primitive
// N-th root of unity. `cyclic` holds the Jacobian pushed to Z[Z_N].
CharacterScan scan_characters(const std::vector<std::vector<CyclicGroupRingElement>>& cyclic,
                              const std::vector<long>& residues, long n, const FieldSpec& field,
                              std::size_t threads) {
  const FieldElement zeta = root_of_unity(field, static_cast<unsigned long>(n));
  std::vector<FieldElement> powers{field.one()};
  for (long k = 1; k < n; ++k) powers.push_back(powers.back() * zeta);

  CharacterScan scan;
  scan.characteristic = field.characteristic();
  scan.field = field.name();
  scan.dims.assign(static_cast<std::size_t>(n), 0);

  auto dimension_at = [&](long t) {
    std::vector<FieldElement> values;
    for (long w : residues) values.push_back(powers[static_cast<std::size_t>(reduce_mod(t * w, n))]);
    std::vector<std::vector<FieldElement>> entries(cyclic.size());
    for (std::size_t r = 0; r < cyclic.size(); ++r)
      for (const auto& e : cyclic[r]) {
        FieldElement x = field.zero();
        for (const auto& [k, c] : e.terms())
          x += powers[static_cast<std::size_t>(reduce_mod(t * k, n))] *
               field.from_rational(Rational(c));
        entries[r].push_back(std::move(x));
      }
    return local_dimension(entries, values, field);
  };

  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (long t = next++; t < n; t = next++) scan.dims[static_cast<std::size_t>(t)] = dimension_at(t);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const std::size_t count = std::min<std::size_t>(threads, static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  scan.total = std::accumulate(scan.dims.begin(), scan.dims.end(), std::size_t{0});
  return scan;
}

void check_prime_hypothesis(unsigned long p, long n) {
  if (!is_prime(p)) throw DomainError("requested characteristic " + std::to_string(p) + " is not prime");
  if (n % static_cast<long>(p) == 0)
    throw DomainError("hypothesis violated: p does not divide N is required, but p = " +
                      std::to_string(p) + " divides N = " + std::to_string(n));
}

}  // namespace

bool MilnorFiberReport::decomposition_consistent() const {
  return characteristic_zero.total ==
         static_cast<std::size_t>(integral.betti * integral.components);
}

bool MilnorFiberReport::universal_coefficients_consistent(unsigned long p) const {
  const std::size_t expected =
      (static_cast<std::size_t>(integral.betti) + integral.factors_divisible_by(p)) *
      static_cast<std::size_t>(integral.components);
  return scan(p).total == expected;
}

const CharacterScan& MilnorFiberReport::scan(unsigned long characteristic) const {
  if (characteristic == 0) return characteristic_zero;
  for (const auto& s : finite)
    if (s.characteristic == characteristic) return s;
  throw InputError("no scan for characteristic " + std::to_string(characteristic));
}

MilnorFiberReport milnor_report(const MultiArrangement& ma,
                                const std::vector<unsigned long>& primes,
                                const ScanOptions& options) {
  const long n = ma.total_weight();
  std::vector<unsigned long> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (unsigned long p : sorted) check_prime_hypothesis(p, n);

  auto progress = [&](const std::string& msg) {
    if (options.progress) options.progress(msg);
  };

  progress("building presentation");
  const CyclicCover cover = milnor_cover(ma, options.cover);
  const GroupPresentation& pres = cover.presentation;

  MilnorFiberReport report;
  report.n = n;
  report.labels = ma.base().labels();
  report.weights = ma.weights();
  report.deconed_at = pres.deconed_at;
  report.rotation = pres.rotation;
  report.relator_count = pres.relators.size();

  const auto jacobian = abelianized_jacobian(pres);
  std::vector<std::vector<CyclicGroupRingElement>> cyclic(jacobian.size());
  for (std::size_t r = 0; r < jacobian.size(); ++r)
    for (const auto& e : jacobian[r]) cyclic[r].push_back(evaluate(e, cover.weights, n));

  const std::size_t threads = scan_thread_count(options.threads);
  progress("scanning " + std::to_string(n) + " characters over " +
           FieldSpec::cyclotomic(static_cast<unsigned long>(n)).name());
  report.characteristic_zero = scan_characters(
      cyclic, cover.weights, n, FieldSpec::cyclotomic(static_cast<unsigned long>(n)), threads);
  for (unsigned long p : sorted) {
    const FieldSpec field = splitting_field(p, static_cast<unsigned long>(n));
    progress("scanning " + std::to_string(n) + " characters over " + field.name());
    report.finite.push_back(scan_characters(cyclic, cover.weights, n, field, threads));
    const CharacterScan& s = report.finite.back();
    report.verdicts[p] = s.total > report.characteristic_zero.total;
    auto& witnesses = report.witnesses[p];
    for (long t = 0; t < n; ++t)
      if (s.dims[static_cast<std::size_t>(t)] >
          report.characteristic_zero.dims[static_cast<std::size_t>(t)])
        witnesses.push_back(t);
  }
  if (options.integral) {
    progress("computing integral homology of the " + std::to_string(n) + "-fold cover");
    report.integral = h1_integral(cover);
  }
  return report;
}

TorsionVerdict detect_torsion_ptors1(const MultiArrangement& ma, unsigned long p,
                                     const ScanOptions& options) {
  ScanOptions scan_options = options;
  scan_options.integral = false;
  const MilnorFiberReport report = milnor_report(ma, {p}, scan_options);
  const CharacterScan& zero = report.characteristic_zero;
  const CharacterScan& finite = report.scan(p);

  TorsionVerdict v;
  v.prime = p;
  v.n = report.n;
  v.total_zero = zero.total;
  v.total_p = finite.total;
  v.dimension_jump = report.verdicts.at(p);
  v.witnesses = report.witnesses.at(p);
  const bool some_zero = std::any_of(zero.dims.begin(), zero.dims.end(),
                                     [](std::size_t d) { return d == 0; });
  const bool all_positive = std::all_of(finite.dims.begin(), finite.dims.end(),
                                        [](std::size_t d) { return d >= 1; });
  v.theorem_form = some_zero && all_positive;
  return v;
}

}  // namespace milnorforge
