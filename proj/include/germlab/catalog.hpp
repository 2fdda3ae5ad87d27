#pragma once

// Classical germ catalog (ADE singularities, Brieskorn polynomials), seeded
// random generators for finite maps and isolated germs, and the verification
// suite that drives the theorem checker over many instances.

#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/map_germ.hpp"
#include "germlab/milnor.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/rng.hpp"
#include "germlab/standard_basis.hpp"

namespace germlab {

// Irreducibility of the germ at the origin over the complex numbers. Honest
// tri-state: the catalog leaves it Unknown where no rule is wired in.
enum class Irreducibility { Yes, No, Unknown };

inline const char* to_string(Irreducibility i) {
  switch (i) {
    case Irreducibility::Yes: return "yes";
    case Irreducibility::No: return "no";
    case Irreducibility::Unknown: return "unknown";
  }
  return "?";
}

struct CatalogEntry {
  std::string name;
  Polynomial germ;
  long long mu;  // classical value; the engines are checked against it
  Irreducibility irreducible;
};

// A_k (k >= 1): x^{k+1} + y^2, D_k (k >= 4): x^{k-1} + x*y^2,
// E_6/E_7/E_8: x^3 + y^4, x^3 + x*y^3, x^3 + y^5. All have mu = k.
inline CatalogEntry ade(char series, unsigned k, const Ring& ring) {
  if (ring.dimension() != 2) throw InvalidParameterError("ADE germs live in two variables");
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial y = Polynomial::variable(ring, 1);
  switch (series) {
    case 'A': {
      if (k < 1) throw InvalidParameterError("A_k needs k >= 1");
      // x^{k+1} + y^2 splits into two smooth branches iff k+1 is even.
      Irreducibility irr = k % 2 == 0 ? Irreducibility::Yes : Irreducibility::No;
      return {"A" + std::to_string(k), x.pow(k + 1) + y * y, k, irr};
    }
    case 'D': {
      if (k < 4) throw InvalidParameterError("D_k needs k >= 4");
      // x * (x^{k-2} + y^2): visibly reducible.
      return {"D" + std::to_string(k), x.pow(k - 1) + x * y * y, k, Irreducibility::No};
    }
    case 'E': {
      switch (k) {
        case 6: return {"E6", x.pow(3) + y.pow(4), 6, Irreducibility::Yes};
        case 7: return {"E7", x.pow(3) + x * y.pow(3), 7, Irreducibility::No};
        case 8: return {"E8", x.pow(3) + y.pow(5), 8, Irreducibility::Yes};
        default: throw InvalidParameterError("E_k needs k in {6, 7, 8}");
      }
    }
    default: throw InvalidParameterError("series must be 'A', 'D' or 'E'");
  }
}

// sum_i x_i^{a_i} with all a_i >= 2; mu = prod (a_i - 1). Irreducibility is
// the coprimality rule in two variables and deliberately Unknown beyond that.
inline CatalogEntry brieskorn(std::span<const unsigned> exponents, const Ring& ring) {
  if (exponents.size() != ring.dimension()) throw ArityMismatchError();
  Polynomial germ(ring);
  long long mu = 1;
  std::string name = "Brieskorn[";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 2) throw InvalidParameterError("Brieskorn exponents must be >= 2");
    germ += Polynomial::term(ring, Monomial::variable(ring.dimension(), i, exponents[i]),
                             Rational(1));
    mu *= exponents[i] - 1;
    name += (i ? "," : "") + std::to_string(exponents[i]);
  }
  name += "]";
  Irreducibility irr = Irreducibility::Unknown;
  if (ring.dimension() == 2)
    irr = std::gcd(exponents[0], exponents[1]) == 1 ? Irreducibility::Yes : Irreducibility::No;
  return {std::move(name), std::move(germ), mu, irr};
}

// Sparse polynomial whose terms have total degree in [min_degree, max_degree],
// optionally avoiding one variable entirely. Coefficients are nonzero
// integers in [-4, 4]; each candidate monomial enters with probability 1/3.
// Iteration order is fixed, so the result is a pure function of the stream.
inline Polynomial random_polynomial(const Ring& ring, unsigned min_degree, unsigned max_degree,
                                    SplitMix64& rng, std::size_t skip_var = static_cast<std::size_t>(-1)) {
  std::size_t n = ring.dimension();
  Polynomial p(ring);
  std::vector<unsigned> exps(n, 0);
  for (;;) {
    unsigned deg = 0;
    for (unsigned e : exps) deg += e;
    bool banned = skip_var < n && exps[skip_var] > 0;
    if (deg >= min_degree && deg <= max_degree && !banned && rng.below(3) == 0) {
      long c = static_cast<long>(rng.in_range(-4, 3));
      if (c >= 0) ++c;
      p += Polynomial::term(ring, Monomial(exps), Rational(c));
    }
    std::size_t i = 0;
    while (i < n && exps[i] + 1 > max_degree) exps[i++] = 0;
    if (i == n) break;
    ++exps[i];
  }
  return p;
}

// F_i = x_i^{a_i} + p_i(other variables), redrawn until the multiplicity is
// finite. The pure-power backbone makes success overwhelmingly likely.
inline MapGerm random_finite_map(const Ring& ring, unsigned max_degree, std::uint64_t seed,
                                 unsigned degree_cap = kDefaultDegreeCap) {
  if (max_degree < 1) throw InvalidParameterError("max_degree must be >= 1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < ring.dimension(); ++i) {
      unsigned a = 1 + static_cast<unsigned>(rng.below(max_degree));
      Polynomial comp = Polynomial::term(ring, Monomial::variable(ring.dimension(), i, a),
                                         Rational(1));
      comps.push_back(comp + random_polynomial(ring, 1, max_degree, rng, i));
    }
    MapGerm F(std::move(comps));
    try {
      if (local_multiplicity(F, degree_cap)) return F;
    } catch (const DegreeCapExceededError&) {
    }
  }
  throw GenerationExhaustedError();
}

// Pure-power backbone plus cross terms of order >= 2, redrawn until the
// Milnor number is finite (so the germ is singular with isolated singularity).
inline Polynomial random_isolated_germ(const Ring& ring, unsigned max_degree, std::uint64_t seed,
                                       unsigned degree_cap = kDefaultDegreeCap) {
  if (max_degree < 2) throw InvalidParameterError("max_degree must be >= 2");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Polynomial g(ring);
    for (std::size_t i = 0; i < ring.dimension(); ++i) {
      unsigned b = 2 + static_cast<unsigned>(rng.below(max_degree - 1));
      g += Polynomial::term(ring, Monomial::variable(ring.dimension(), i, b), Rational(1));
    }
    g += random_polynomial(ring, 2, max_degree, rng);
    try {
      if (!g.is_zero() && g.constant_term() == 0 &&
          milnor_number(g, degree_cap).kind == MilnorResult::Kind::Finite)
        return g;
    } catch (const DegreeCapExceededError&) {
    }
  }
  throw GenerationExhaustedError();
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  unsigned num_cases = 100;
  unsigned n = 2;  // 2 or 3 variables
  unsigned max_degree = 3;
  unsigned degree_cap = kDefaultDegreeCap;
  bool generated_germs = false;  // odd-indexed cases draw a random isolated germ
  bool identity_maps = false;    // force F = id (every case becomes an equality case)
};

struct SuiteCase {
  std::size_t index = 0;
  std::uint64_t case_seed = 0;
  std::string germ_name;
  std::optional<Polynomial> germ;
  std::optional<MapGerm> map;
  std::optional<VerificationReport> report;
  std::string classification;  // holds | violated | outside_hypotheses | skipped:<reason>
};

struct SuiteCounters {
  unsigned holds = 0;
  unsigned violated = 0;
  unsigned outside_hypotheses = 0;
  unsigned equality_cases = 0;  // sub-count of holds with mu_W = mu_V
  std::map<std::string, unsigned> skipped;

  unsigned skipped_total() const {
    unsigned t = 0;
    for (const auto& [reason, c] : skipped) t += c;
    return t;
  }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteCase> cases;
  SuiteCounters counters;
  double elapsed_seconds = 0;
};

// Catalog germs the suite cycles through: irreducible representatives are
// preferred so that pure pullbacks (the theorem's hypothesis) are common.
inline std::vector<CatalogEntry> suite_germ_pool(const Ring& ring) {
  std::vector<CatalogEntry> pool;
  if (ring.dimension() == 2) {
    for (unsigned k : {2u, 4u, 6u, 8u}) pool.push_back(ade('A', k, ring));
    pool.push_back(ade('E', 6, ring));
    pool.push_back(ade('E', 8, ring));
    for (auto [a, b] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 4u}, {3u, 5u}, {4u, 5u}}) {
      unsigned exps[] = {a, b};
      pool.push_back(brieskorn(exps, ring));
    }
  } else if (ring.dimension() == 3) {
    for (auto [a, b, c] : {std::tuple{2u, 2u, 2u}, {2u, 2u, 3u}, {2u, 3u, 3u}, {2u, 3u, 4u},
                           {3u, 3u, 3u}}) {
      unsigned exps[] = {a, b, c};
      pool.push_back(brieskorn(exps, ring));
    }
  } else {
    throw InvalidParameterError("suite runs in 2 or 3 variables");
  }
  return pool;
}

// Case k: germ = pool[k mod |pool|] (or a generated germ on odd k when
// enabled), map drawn from seed + (k+1)*0x9E3779B97F4A7C15. This seed-to-case
// mapping is a stable contract; reports for equal configs are identical.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.n != 2 && cfg.n != 3) throw InvalidParameterError("n must be 2 or 3");
  if (cfg.num_cases < 1) throw InvalidParameterError("num_cases must be >= 1");
  if (cfg.max_degree < 1) throw InvalidParameterError("max_degree must be >= 1");
  Ring ring(cfg.n == 2 ? std::vector<std::string>{"x", "y"}
                       : std::vector<std::string>{"x", "y", "z"});
  std::vector<CatalogEntry> pool = suite_germ_pool(ring);

  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.config = cfg;
  for (std::size_t k = 0; k < cfg.num_cases; ++k) {
    std::uint64_t case_seed = cfg.seed + (static_cast<std::uint64_t>(k) + 1) * kGolden;
    SuiteCase c;
    c.index = k;
    c.case_seed = case_seed;

    auto skip_case = [&](SkipReason why) {
      c.classification = std::string("skipped:") + to_string(why);
      ++rep.counters.skipped[to_string(why)];
      rep.cases.push_back(std::move(c));
    };

    if (cfg.generated_germs && k % 2 == 1) {
      try {
        c.germ = random_isolated_germ(ring, std::max(3u, cfg.max_degree),
                                      case_seed ^ 0xD1B54A32D192ED03ull, cfg.degree_cap);
        c.germ_name = "generated";
      } catch (const GenerationExhaustedError&) {
        skip_case(SkipReason::GenerationExhausted);
        continue;
      }
    } else {
      const CatalogEntry& entry = pool[k % pool.size()];
      c.germ = entry.germ;
      c.germ_name = entry.name;
    }

    if (cfg.identity_maps) {
      c.map = MapGerm::identity(ring);
    } else {
      try {
        c.map = random_finite_map(ring, cfg.max_degree, case_seed, cfg.degree_cap);
      } catch (const GenerationExhaustedError&) {
        skip_case(SkipReason::GenerationExhausted);
        continue;
      }
    }

    VerificationReport vr = verify_theorem(*c.germ, *c.map, cfg.degree_cap);
    if (vr.inequality == Verdict::Skipped) {
      c.report = std::move(vr);
      c.classification = std::string("skipped:") + to_string(c.report->skip_reason);
      ++rep.counters.skipped[to_string(c.report->skip_reason)];
    } else if (!vr.preimage->pure) {
      // Computable end to end but the hypothesis g compose F = h^r fails:
      // logged as an observation, never as a verdict about the statement.
      c.report = std::move(vr);
      c.classification = "outside_hypotheses";
      ++rep.counters.outside_hypotheses;
    } else if (vr.inequality == Verdict::Violated || vr.corollary == Verdict::Violated) {
      c.report = std::move(vr);
      c.classification = "violated";
      ++rep.counters.violated;
    } else {
      if (vr.mu_w->mu == vr.mu_v->mu) ++rep.counters.equality_cases;
      c.report = std::move(vr);
      c.classification = "holds";
      ++rep.counters.holds;
    }
    rep.cases.push_back(std::move(c));
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace germlab
