#include "apostol/campaign.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string_view>

#include "apostol/combinatorics.hpp"
#include "apostol/identities.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace apostol {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view identity, std::uint64_t index) {
  return mix64(mix64(master + fnv1a64(identity)) + index);
}

// mt19937_64 is fully specified by the standard; the bounded draw below avoids
// std::uniform_int_distribution, whose output is implementation-defined and
// would break byte-identical replay across toolchains.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : eng_(seed) {}

  int below(int n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return static_cast<int>(v % bound);
  }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // Numerator in [-20, 20], denominator in [1, 20] (reduced afterwards).
  Rational rational() { return make_rational(range(-20, 20), range(1, 20)); }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

Rational sample_mu(InstanceRng& rng) {
  for (;;) {
    Rational mu = rng.rational();
    if (mu != 1) return mu;
  }
}

// lambda != 0, mu != 1, lambda != mu - 1 unless (lambda, mu) = (1, 2).
Params sample_params(InstanceRng& rng) {
  for (;;) {
    const Rational lambda = rng.nonzero_rational();
    const Rational mu = sample_mu(rng);
    if (lambda + 1 - mu == 0 && mu != 2) continue;
    return Params(lambda, mu);
  }
}

Params sample_regular_params(InstanceRng& rng) {
  for (;;) {
    Params p = sample_params(rng);
    if (p.kind() == ParamsKind::Regular) return p;
  }
}

struct Instance {
  int n = 0;
  int m = 1;
  int l = 0;
  Rational lambda = Rational(1);
  Rational mu = Rational(0);
  Rational x = Rational(0);
  Rational y = Rational(0);
};

Rational rat(int p, int q = 1) { return make_rational(p, q); }

Instance inst(int n, Rational lambda, Rational mu, Rational x = Rational(0),
              Rational y = Rational(0)) {
  Instance t;
  t.n = n;
  t.lambda = std::move(lambda);
  t.mu = std::move(mu);
  t.x = std::move(x);
  t.y = std::move(y);
  return t;
}

struct IdentityDef {
  const char* id;
  std::vector<Instance> (*edges)();
  Instance (*sample)(InstanceRng&, int max_n, std::uint64_t index);
  CheckReport (*run)(const Instance&);
};

const Rational kOne(1);

// --- per-identity samplers / fixed edge sets --------------------------------

Instance sample_monomial_det(InstanceRng& rng, int max_n, std::uint64_t index) {
  Instance t;
  t.n = rng.range(0, max_n);
  if (index % 5 == 0) {
    t.lambda = kOne;
  } else {
    do {
      t.lambda = rng.nonzero_rational();
    } while (t.lambda == -1);
  }
  t.x = rng.rational();
  return t;
}

Instance sample_monomial_classical(InstanceRng& rng, int max_n, std::uint64_t) {
  Instance t;
  t.n = rng.range(0, max_n);
  t.x = rng.rational();
  return t;
}

Instance sample_general(InstanceRng& rng, int max_n, std::uint64_t) {
  const Params p = sample_params(rng);
  Instance t = inst(rng.range(0, max_n), p.lambda(), p.mu(), rng.rational(), rng.rational());
  return t;
}

Instance sample_connection(InstanceRng& rng, int max_n, std::uint64_t) {
  for (;;) {
    const Params p = sample_params(rng);
    if (p.lambda() == -1) continue;
    return inst(rng.range(0, max_n), p.lambda(), p.mu(), rng.rational());
  }
}

Instance sample_raabe(InstanceRng& rng, int max_n, std::uint64_t) {
  static constexpr int kOddM[] = {1, 3, 5, 7};
  Instance t;
  t.n = rng.range(0, max_n);
  t.m = kOddM[rng.below(4)];
  t.mu = sample_mu(rng);
  t.x = rng.rational();
  return t;
}

Instance sample_raabe_classical_bernoulli(InstanceRng& rng, int max_n, std::uint64_t) {
  Instance t;
  t.n = rng.range(0, max_n);
  t.m = rng.range(1, 6);
  t.x = rng.rational();
  return t;
}

Instance sample_raabe_classical_euler(InstanceRng& rng, int max_n, std::uint64_t) {
  static constexpr int kOddM[] = {1, 3, 5, 7};
  Instance t;
  t.n = rng.range(0, max_n);
  t.m = kOddM[rng.below(4)];
  t.x = rng.rational();
  return t;
}

Instance sample_regular(InstanceRng& rng, int max_n, std::uint64_t) {
  const Params p = sample_regular_params(rng);
  return inst(rng.range(0, max_n), p.lambda(), p.mu(), rng.rational());
}

Instance sample_upsilon(InstanceRng& rng, int max_n, std::uint64_t) {
  const Params p = sample_regular_params(rng);
  return inst(rng.range(1, std::max(1, max_n)), p.lambda(), p.mu(), rng.rational());
}

Instance sample_derivative(InstanceRng& rng, int max_n, std::uint64_t) {
  const Params p = sample_params(rng);
  Instance t = inst(rng.range(0, max_n), p.lambda(), p.mu());
  t.l = rng.range(0, t.n + 3);
  return t;
}

Instance sample_recurrence(InstanceRng& rng, int max_n, std::uint64_t) {
  for (;;) {
    const Params p = sample_regular_params(rng);
    if (p.mu() == 2) continue;
    return inst(rng.range(0, max_n), p.lambda(), p.mu(), rng.rational());
  }
}

Instance sample_umbral_cross(InstanceRng& rng, int max_n, std::uint64_t) {
  const Params p = sample_params(rng);
  Instance t = inst(rng.range(0, max_n), p.lambda(), p.mu(), rng.rational(), rng.rational());
  t.m = rng.range(0, max_n - t.n);
  return t;
}

std::vector<Instance> edges_monomial_det() {
  std::vector<Instance> v;
  v.push_back(inst(0, rat(2), rat(0), rat(1, 3)));
  v.push_back(inst(1, rat(1), rat(0), rat(1, 2)));
  v.push_back(inst(3, rat(1), rat(0), rat(0)));
  return v;
}

std::vector<Instance> edges_monomial_classical() {
  std::vector<Instance> v;
  v.push_back(inst(0, kOne, rat(0), rat(5)));
  v.push_back(inst(2, kOne, rat(0), rat(1)));
  v.push_back(inst(4, kOne, rat(0), rat(0)));
  return v;
}

std::vector<Instance> edges_addition() {
  std::vector<Instance> v;
  v.push_back(inst(5, rat(1), rat(2), rat(1, 2), rat(0)));
  v.push_back(inst(3, rat(1), rat(0), rat(0), rat(1)));
  v.push_back(inst(2, rat(2), rat(0), rat(1), rat(-1)));
  v.push_back(inst(0, rat(3), rat(2), rat(0), rat(0)));
  return v;
}

std::vector<Instance> edges_numbers_from_polys() {
  std::vector<Instance> v;
  v.push_back(inst(0, rat(3), rat(0), rat(2)));
  v.push_back(inst(2, rat(1), rat(2), rat(1, 3)));
  v.push_back(inst(1, rat(2), rat(0), rat(7)));
  return v;
}

std::vector<Instance> edges_connection() {
  std::vector<Instance> v;
  v.push_back(inst(0, rat(1), rat(0), rat(1)));
  v.push_back(inst(2, rat(1), rat(0), rat(1, 2)));
  v.push_back(inst(3, rat(2), rat(2), rat(1)));
  return v;
}

std::vector<Instance> edges_raabe() {
  std::vector<Instance> v;
  Instance a = inst(4, kOne, rat(5), rat(2, 3));
  a.m = 1;
  Instance b = inst(2, kOne, rat(0), rat(1, 2));
  b.m = 3;
  Instance c = inst(3, kOne, rat(3), rat(0));
  c.m = 3;
  Instance d = inst(0, kOne, rat(2), rat(1));
  d.m = 5;
  v = {a, b, c, d};
  return v;
}

std::vector<Instance> edges_raabe_classical_bernoulli() {
  std::vector<Instance> v;
  Instance a = inst(1, kOne, rat(0), rat(0));
  a.m = 2;
  Instance b = inst(2, kOne, rat(0), rat(1));
  b.m = 3;
  Instance c = inst(0, kOne, rat(0), rat(5));
  c.m = 1;
  Instance d = inst(2, kOne, rat(0), rat(1, 2));
  d.m = 1;
  v = {a, b, c, d};
  return v;
}

std::vector<Instance> edges_raabe_classical_euler() {
  std::vector<Instance> v;
  Instance a = inst(0, kOne, rat(0), rat(0));
  a.m = 3;
  Instance b = inst(2, kOne, rat(0), rat(1, 2));
  b.m = 1;
  Instance c = inst(1, kOne, rat(0), rat(1, 3));
  c.m = 5;
  v = {a, b, c};
  return v;
}

std::vector<Instance> edges_explicit() {
  std::vector<Instance> v;
  v.push_back(inst(0, rat(5), rat(3), rat(1, 4)));
  v.push_back(inst(2, rat(3), rat(2), rat(1, 2)));
  v.push_back(inst(1, rat(2), rat(0), rat(0)));
  return v;
}

std::vector<Instance> edges_convex() {
  std::vector<Instance> v;
  v.push_back(inst(3, rat(1), rat(0), rat(2, 5)));
  v.push_back(inst(2, rat(3), rat(2), rat(1, 2)));
  v.push_back(inst(3, rat(3), rat(3), rat(1)));
  return v;
}

std::vector<Instance> edges_upsilon() {
  std::vector<Instance> v;
  v.push_back(inst(1, rat(1), rat(0), rat(1)));
  v.push_back(inst(1, rat(1), rat(3), rat(1)));  // minimal AsPrinted counterexample
  v.push_back(inst(2, rat(1), rat(3), rat(1)));  // printed-rhs counterexample
  v.push_back(inst(2, rat(3), rat(3), rat(1, 2)));
  v.push_back(inst(1, rat(1), rat(0), rat(0)));
  v.push_back(inst(2, rat(3), rat(2), rat(2)));
  return v;
}

std::vector<Instance> edges_derivative() {
  std::vector<Instance> v;
  Instance a = inst(5, rat(1), rat(2));
  a.l = 0;
  Instance b = inst(3, rat(1), rat(0));
  b.l = 1;
  Instance c = inst(2, rat(2), rat(0));
  c.l = 3;
  Instance d = inst(4, rat(1), rat(2));
  d.l = 4;
  v = {a, b, c, d};
  return v;
}

std::vector<Instance> edges_integral() {
  std::vector<Instance> v;
  v.push_back(inst(3, rat(1), rat(3), rat(1, 2), rat(1, 2)));
  v.push_back(inst(1, rat(1), rat(2), rat(0), rat(1)));
  v.push_back(inst(2, rat(2), rat(0), rat(1, 2), rat(3, 2)));
  v.push_back(inst(0, rat(1), rat(0), rat(0), rat(0)));
  return v;
}

std::vector<Instance> edges_recurrence() {
  std::vector<Instance> v;
  v.push_back(inst(0, rat(1), rat(0), rat(0)));
  v.push_back(inst(2, rat(1), rat(4), rat(0)));
  v.push_back(inst(1, rat(3), rat(3), rat(1, 2)));
  return v;
}

std::vector<Instance> edges_umbral_translation() {
  std::vector<Instance> v;
  v.push_back(inst(0, rat(2), rat(0), rat(3)));
  v.push_back(inst(2, rat(1), rat(2), rat(0)));
  v.push_back(inst(3, rat(2), rat(0), rat(1, 3)));
  return v;
}

std::vector<Instance> edges_umbral_cross() {
  std::vector<Instance> v;
  Instance a = inst(2, rat(1), rat(0), rat(1, 2), rat(0));
  a.m = 0;
  Instance b = inst(2, rat(1), rat(0), rat(0), rat(1));
  b.m = 1;
  Instance c = inst(3, rat(3), rat(3), rat(1, 2), rat(-1, 3));
  c.m = 2;
  v = {a, b, c};
  return v;
}

// --- runners -----------------------------------------------------------------

CheckReport run_monomial_det(const Instance& t) {
  return check_monomial_determinantal(t.n, t.lambda, t.x);
}
CheckReport run_monomial_classical(const Instance& t) { return check_monomial_classical(t.n, t.x); }
CheckReport run_addition(const Instance& t) {
  return check_addition(t.n, Params(t.lambda, t.mu), t.x, t.y);
}
CheckReport run_numbers_from_polys(const Instance& t) {
  return check_numbers_from_polys(t.n, Params(t.lambda, t.mu), t.x);
}
CheckReport run_connection(const Instance& t) {
  return check_connection_prop(t.n, Params(t.lambda, t.mu), t.x);
}
CheckReport run_raabe(const Instance& t) { return check_raabe(t.n, t.m, t.mu, t.x); }
CheckReport run_raabe_classical_bernoulli(const Instance& t) {
  return check_raabe_classical(t.n, t.m, t.x, RaabeFamily::Bernoulli);
}
CheckReport run_raabe_classical_euler(const Instance& t) {
  return check_raabe_classical(t.n, t.m, t.x, RaabeFamily::Euler);
}
CheckReport run_explicit(const Instance& t) {
  return check_explicit_euler_form(t.n, Params(t.lambda, t.mu), t.x);
}
CheckReport run_convex(const Instance& t) {
  return check_convex_combination(t.n, Params(t.lambda, t.mu), t.x);
}
CheckReport run_upsilon_as_printed(const Instance& t) {
  return check_upsilon_identity(t.n, Params(t.lambda, t.mu), t.x, UpsilonVariant::AsPrinted);
}
CheckReport run_upsilon_rescaled(const Instance& t) {
  return check_upsilon_identity(t.n, Params(t.lambda, t.mu), t.x, UpsilonVariant::Rescaled);
}
CheckReport run_derivative(const Instance& t) {
  return check_derivative(t.n, t.l, Params(t.lambda, t.mu));
}
CheckReport run_integral(const Instance& t) {
  return check_integral(t.n, Params(t.lambda, t.mu), t.x, t.y);
}
CheckReport run_recurrence(const Instance& t) {
  return check_recurrence(t.n, Params(t.lambda, t.mu), t.x);
}
CheckReport run_umbral_translation(const Instance& t) {
  return check_umbral_translation(t.n, Params(t.lambda, t.mu), t.x);
}
CheckReport run_umbral_cross(const Instance& t) {
  return check_umbral_cross(t.n, t.m, Params(t.lambda, t.mu), t.x, t.y);
}

const IdentityDef kIdentities[] = {
    {"monomial_determinantal", edges_monomial_det, sample_monomial_det, run_monomial_det},
    {"monomial_classical", edges_monomial_classical, sample_monomial_classical,
     run_monomial_classical},
    {"addition", edges_addition, sample_general, run_addition},
    {"numbers_from_polys", edges_numbers_from_polys, sample_general, run_numbers_from_polys},
    {"connection_prop", edges_connection, sample_connection, run_connection},
    {"raabe", edges_raabe, sample_raabe, run_raabe},
    {"raabe_classical_bernoulli", edges_raabe_classical_bernoulli,
     sample_raabe_classical_bernoulli, run_raabe_classical_bernoulli},
    {"raabe_classical_euler", edges_raabe_classical_euler, sample_raabe_classical_euler,
     run_raabe_classical_euler},
    {"explicit_euler_form", edges_explicit, sample_regular, run_explicit},
    {"convex_combination", edges_convex, sample_regular, run_convex},
    {"upsilon:AsPrinted", edges_upsilon, sample_upsilon, run_upsilon_as_printed},
    {"upsilon:Rescaled", edges_upsilon, sample_upsilon, run_upsilon_rescaled},
    {"derivative", edges_derivative, sample_derivative, run_derivative},
    {"integral", edges_integral, sample_general, run_integral},
    {"recurrence", edges_recurrence, sample_recurrence, run_recurrence},
    {"umbral_translation", edges_umbral_translation, sample_general, run_umbral_translation},
    {"umbral_cross", edges_umbral_cross, sample_umbral_cross, run_umbral_cross},
};

const IdentityDef* find_identity(std::string_view id) {
  for (const IdentityDef& def : kIdentities)
    if (id == def.id) return &def;
  return nullptr;
}

CheckReport safe_run(const IdentityDef& def, const Instance& t) {
  try {
    return def.run(t);
  } catch (const std::exception& e) {
    CheckReport r;
    r.identity_id = def.id;
    r.instance.emplace_back("error", e.what());
    r.equal = false;
    return r;
  }
}

}  // namespace

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const IdentityDef& def : kIdentities) v.emplace_back(def.id);
    return v;
  }();
  return ids;
}

std::vector<std::string> resolve_identities(const std::vector<std::string>& requested) {
  if (requested.empty()) return identity_catalog();
  std::vector<std::string> out;
  const auto add = [&out](std::string id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
  };
  for (const std::string& name : requested) {
    if (name == "all") {
      for (const std::string& id : identity_catalog()) add(id);
    } else if (name == "upsilon") {
      add("upsilon:AsPrinted");
      add("upsilon:Rescaled");
    } else if (name == "raabe_classical") {
      add("raabe_classical_bernoulli");
      add("raabe_classical_euler");
    } else if (find_identity(name) != nullptr) {
      add(name);
    } else {
      throw std::invalid_argument("unknown identity \"" + name + "\"");
    }
  }
  return out;
}

void validate(const CampaignConfig& config) {
  if (config.instances_per_identity < 1)
    throw std::invalid_argument("instances must be a positive integer");
  if (config.max_n < 1) throw std::invalid_argument("max-n must be a positive integer");
  if (config.max_n + 2 > config.order)
    throw std::invalid_argument("max-n + 2 must not exceed order (headroom for V_{n+1})");
  resolve_identities(config.identities);
}

CampaignResult run_campaign(const CampaignConfig& config, RunMode mode) {
  validate(config);
  const std::vector<std::string> ids = resolve_identities(config.identities);
  prewarm_binomials(config.order + 4);

  struct Task {
    const IdentityDef* def;
    Instance instance;
    std::uint64_t seed;
    std::uint64_t index;
  };
  std::vector<Task> tasks;
  for (const std::string& id : ids) {
    const IdentityDef* def = find_identity(id);
    std::uint64_t index = 0;
    for (Instance& edge : def->edges()) {
      const std::uint64_t seed = derive_seed(config.seed, id, index);
      tasks.push_back({def, std::move(edge), seed, index});
      ++index;
    }
    for (int i = 0; i < config.instances_per_identity; ++i, ++index) {
      const std::uint64_t seed = derive_seed(config.seed, id, index);
      InstanceRng rng(seed);
      tasks.push_back({def, def->sample(rng, config.max_n, index), seed, index});
    }
  }

  CampaignResult result;
  result.reports.resize(tasks.size());
  const auto run_one = [&](size_t i) {
    CheckReport r = safe_run(*tasks[i].def, tasks[i].instance);
    r.seed = tasks[i].seed;
    r.index = tasks[i].index;
    result.reports[i] = std::move(r);
  };

  if (mode == RunMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size()); ++i)
      run_one(static_cast<size_t>(i));
  } else {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  }

  std::sort(result.reports.begin(), result.reports.end(),
            [](const CheckReport& a, const CheckReport& b) {
              if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
              return a.index < b.index;
            });

  CampaignSummary& s = result.summary;
  std::map<std::string, std::array<int, 3>> per_identity;  // equal, documented, undocumented
  for (const CheckReport& r : result.reports) {
    auto& stats = per_identity[r.identity_id];
    ++s.total;
    if (r.equal) {
      ++s.equal;
      ++stats[0];
    } else if (!r.note.empty()) {
      ++s.documented;
      ++stats[1];
    } else {
      ++s.undocumented;
      ++stats[2];
    }
  }
  for (const auto& [id, stats] : per_identity) {
    std::string line = "identity " + id + ": " + std::to_string(stats[0] + stats[1] + stats[2]) +
                       " instances, " + std::to_string(stats[0]) + " equal";
    if (stats[1] > 0) line += ", " + std::to_string(stats[1]) + " documented-erratum";
    if (stats[2] > 0) line += ", " + std::to_string(stats[2]) + " counterexamples";
    s.lines.push_back(std::move(line));
  }
  if (per_identity.count("upsilon:AsPrinted") && per_identity.count("upsilon:Rescaled")) {
    const bool printed_ok = per_identity["upsilon:AsPrinted"][1] == 0 &&
                            per_identity["upsilon:AsPrinted"][2] == 0;
    const bool rescaled_ok = per_identity["upsilon:Rescaled"][1] == 0 &&
                             per_identity["upsilon:Rescaled"][2] == 0;
    if (rescaled_ok && !printed_ok)
      s.lines.push_back(
          "upsilon variant resolution: Rescaled validates; AsPrinted fails and is recorded "
          "as an erratum (minimal counterexample in the report notes)");
    else if (printed_ok && rescaled_ok)
      s.lines.push_back("upsilon variant resolution: both variants agree on the sampled instances");
    else if (printed_ok)
      s.lines.push_back("upsilon variant resolution: AsPrinted validates; Rescaled fails");
    else
      s.lines.push_back("upsilon variant resolution: neither variant validates");
  }
  s.lines.push_back("total: " + std::to_string(s.total) + " reports, " + std::to_string(s.equal) +
                    " equal, " + std::to_string(s.documented) + " documented errata, " +
                    std::to_string(s.undocumented) + " counterexamples");

  result.exit_code = s.undocumented > 0 ? 1 : 0;
  return result;
}

}  // namespace apostol
