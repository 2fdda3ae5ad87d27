// Acceptance gate. Runs the full battery of exactness, invariance and
// reproducibility checks and prints one PASS/FAIL line per criterion with
// measured wall times. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "germlab/germlab.hpp"
#include "support/test_support.hpp"

using namespace germlab;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

struct Gate {
  int failures = 0;

  void report(int index, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", index, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  template <typename Body>
  void run(int index, Body&& body) {
    try {
      std::pair<bool, std::string> r = body();
      report(index, r.first, r.second);
    } catch (const std::exception& e) {
      report(index, false, std::string("unexpected exception: ") + e.what());
    }
  }
};

std::vector<CatalogEntry> ade_catalog(const Ring& r) {
  std::vector<CatalogEntry> entries;
  for (unsigned k = 1; k <= 10; ++k) entries.push_back(ade('A', k, r));
  for (unsigned k = 4; k <= 8; ++k) entries.push_back(ade('D', k, r));
  for (unsigned k : {6u, 7u, 8u}) entries.push_back(ade('E', k, r));
  return entries;
}

long long int_det(const std::vector<std::vector<long long>>& m) {
  if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Random invertible integer matrix with entries in [-3, 3].
std::vector<std::vector<long long>> random_invertible(std::size_t n, SplitMix64& rng) {
  for (;;) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (auto& row : m)
      for (auto& e : row) e = static_cast<long long>(rng.in_range(0, 6)) - 3;
    if (int_det(m) != 0) return m;
  }
}

std::vector<Polynomial> linear_forms(const Ring& ring,
                                     const std::vector<std::vector<long long>>& m) {
  std::vector<Polynomial> forms;
  for (const auto& row : m) {
    Polynomial f(ring);
    for (std::size_t j = 0; j < row.size(); ++j)
      f += Polynomial::variable(ring, j) * Rational(static_cast<long>(row[j]));
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace

int main() {
  Gate gate;
  Ring r2({"x", "y"});
  Ring r3({"x", "y", "z"});
  std::vector<SuiteReport> suite_reports;

  gate.run(1, [&]() -> std::pair<bool, std::string> {
    auto t0 = Clock::now();
    std::vector<CatalogEntry> entries = ade_catalog(r2);
    std::string bad;
    for (const CatalogEntry& e : entries) {
      MilnorResult sb = milnor_number(e.germ);
      long long oracle = milnor_oracle(e.germ);
      if (sb.kind != MilnorResult::Kind::Finite || sb.mu != e.mu || oracle != e.mu)
        bad += " " + e.name;
    }
    double el = since(t0);
    bool ok = bad.empty() && el < 30.0;
    if (!bad.empty())
      return {false, "catalog mismatch at" + bad};
    return {ok, fmt("mu exact on %zu ADE germs, both engines (%.2f s, limit 30 s)",
                    entries.size(), el)};
  });

  gate.run(2, [&]() -> std::pair<bool, std::string> {
    auto t0 = Clock::now();
    unsigned checked = 0;
    std::string bad;
    for (unsigned a = 2; a <= 6; ++a)
      for (unsigned b = 2; b <= 6; ++b) {
        unsigned exps[] = {a, b};
        CatalogEntry e = brieskorn(exps, r2);
        long long expected = static_cast<long long>(a - 1) * (b - 1);
        MilnorResult m = milnor_number(e.germ);
        if (e.mu != expected || m.kind != MilnorResult::Kind::Finite || m.mu != expected)
          bad += " " + e.name;
        ++checked;
      }
    for (unsigned a = 2; a <= 6; ++a)
      for (unsigned b = 2; b <= 6; ++b)
        for (unsigned c = 2; c <= 6; ++c) {
          unsigned exps[] = {a, b, c};
          CatalogEntry e = brieskorn(exps, r3);
          long long expected = static_cast<long long>(a - 1) * (b - 1) * (c - 1);
          MilnorResult m = milnor_number(e.germ);
          if (e.mu != expected || m.kind != MilnorResult::Kind::Finite || m.mu != expected)
            bad += " " + e.name;
          ++checked;
        }
    double el = since(t0);
    if (!bad.empty()) return {false, "product law fails at" + bad};
    return {el < 120.0,
            fmt("mu = prod(a_i - 1) on %u Brieskorn germs (%.2f s, limit 120 s)", checked, el)};
  });

  gate.run(3, [&]() -> std::pair<bool, std::string> {
    auto t0 = Clock::now();
    SuiteConfig c2;
    c2.seed = 7;
    c2.num_cases = 200;
    c2.n = 2;
    SuiteConfig c3;
    c3.seed = 7;
    c3.num_cases = 50;
    c3.n = 3;
    suite_reports.push_back(run_suite(c2));
    suite_reports.push_back(run_suite(c3));
    double el = since(t0);
    unsigned violated = 0;
    unsigned skipped = 0;
    unsigned total = 0;
    for (const SuiteReport& rep : suite_reports) {
      violated += rep.counters.violated;
      skipped += rep.counters.skipped_total();
      total += rep.config.num_cases;
    }
    double frac = static_cast<double>(skipped) / total;
    bool ok = violated == 0 && frac < 0.20 && el < 300.0;
    return {ok, fmt("%u cases (200 in n=2, 50 in n=3), %u violated, %u skipped (%.1f%%) "
                    "(%.1f s, limit 300 s)",
                    total, violated, skipped, 100.0 * frac, el)};
  });

  gate.run(4, [&]() -> std::pair<bool, std::string> {
    if (suite_reports.empty()) return {false, "suite reports unavailable"};
    unsigned computed = 0;
    unsigned smooth_w = 0;
    bool ok = true;
    for (const SuiteReport& rep : suite_reports)
      for (const SuiteCase& c : rep.cases) {
        if (!c.report || !c.report->mu_w || !c.report->mu_w->has_mu()) continue;
        ++computed;
        if (c.report->corollary == Verdict::Violated) ok = false;
        if (c.report->mu_w->mu == 0) {
          ++smooth_w;
          if (!c.report->mu_v || c.report->mu_v->mu != 0) ok = false;
        }
      }
    return {ok, fmt("mu(W) = 0 implies mu(V) = 0 intact over %u computed cases "
                    "(%u smooth pullbacks)",
                    computed, smooth_w)};
  });

  gate.run(5, [&]() -> std::pair<bool, std::string> {
    Polynomial x = Polynomial::variable(r2, 0);
    Polynomial y = Polynomial::variable(r2, 1);
    Polynomial g = x.pow(3) - y * y;
    MapGerm F({x, y * y});
    VerificationReport rep = verify_theorem(g, F);
    bool ok = rep.mu_v && rep.mu_v->kind == MilnorResult::Kind::Finite && rep.mu_v->mu == 2 &&
              rep.mu_w && rep.mu_w->kind == MilnorResult::Kind::Finite && rep.mu_w->mu == 6 &&
              rep.preimage && rep.preimage->r == 1 && rep.preimage->pure &&
              rep.inequality == Verdict::Holds;
    // The truncation oracle must reproduce both invariants.
    ok = ok && milnor_oracle(rep.g_reduced) == 2 && milnor_oracle(rep.preimage->h) == 6;
    return {ok, "g = x^3 - y^2 through F = (x, y^2): mu_V = 2, mu_W = 6, r = 1, pure, "
                "both engines"};
  });

  gate.run(6, [&]() -> std::pair<bool, std::string> {
    if (suite_reports.empty()) return {false, "suite reports unavailable"};
    unsigned pure_cases = 0;
    std::string bad;
    for (const SuiteReport& rep : suite_reports)
      for (const SuiteCase& c : rep.cases) {
        if (!c.report || !c.report->preimage || !c.report->preimage->pure) continue;
        ++pure_cases;
        const ReducedPreimage& p = *c.report->preimage;
        try {
          Polynomial q = divide_exact(p.pullback, p.h.pow(static_cast<unsigned>(p.r)));
          if (!q.is_constant() || q.is_zero()) bad += " " + std::to_string(c.index);
        } catch (const NotDivisibleError&) {
          bad += " " + std::to_string(c.index);
        }
      }
    if (!bad.empty()) return {false, "pullback is not h^r at case" + bad};
    return {pure_cases > 0,
            fmt("pullback equals h^r up to a nonzero constant on %u pure cases", pure_cases)};
  });

  gate.run(7, [&]() -> std::pair<bool, std::string> {
    auto t0 = Clock::now();
    std::vector<CatalogEntry> germs = ade_catalog(r2);
    for (CatalogEntry& e : suite_germ_pool(r3)) germs.push_back(std::move(e));
    unsigned checked = 0;
    std::string bad;
    for (std::size_t gi = 0; gi < germs.size(); ++gi) {
      const CatalogEntry& e = germs[gi];
      const Ring& ring = e.germ.ring();
      std::size_t n = ring.dimension();
      SplitMix64 rng(0xACCE5500u + gi * 977u);
      for (unsigned trial = 0; trial < 50; ++trial) {
        auto m = random_invertible(n, rng);
        Polynomial moved = e.germ.substitute(linear_forms(ring, m));
        MilnorResult res = milnor_number(moved);
        ++checked;
        if (res.kind != MilnorResult::Kind::Finite || res.mu != e.mu) {
          bad += " " + e.name;
          break;
        }
      }
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Polynomial> forms;
        for (std::size_t i = 0; i < n; ++i)
          forms.push_back(Polynomial::variable(ring, perm[i]));
        MilnorResult res = milnor_number(e.germ.substitute(forms));
        ++checked;
        if (res.kind != MilnorResult::Kind::Finite || res.mu != e.mu) {
          bad += " " + e.name + "(perm)";
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    double el = since(t0);
    if (!bad.empty()) return {false, "mu moved under a coordinate change at" + bad};
    return {true, fmt("mu invariant on %zu germs x (50 linear changes + all permutations), "
                      "%u computations (%.1f s)",
                      germs.size(), checked, el)};
  });

  gate.run(8, [&]() -> std::pair<bool, std::string> {
    auto t0 = Clock::now();
    long long max_mu = 0;
    std::string bad;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      Polynomial f = random_isolated_germ(r2, 8, seed);
      MilnorResult sb = milnor_number(f);
      long long oracle = milnor_oracle(f);
      if (sb.kind != MilnorResult::Kind::Finite || sb.mu != oracle)
        bad += " " + std::to_string(seed);
      else
        max_mu = std::max(max_mu, sb.mu);
    }
    double el = since(t0);
    if (!bad.empty()) return {false, "engines disagree at seed" + bad};
    return {true, fmt("standard basis == truncation oracle on 100 random germs "
                      "(degree <= 8, max mu %lld) (%.1f s)",
                      max_mu, el)};
  });

  gate.run(9, [&]() -> std::pair<bool, std::string> {
    auto first = testsupport::run_cli({"suite", "--seed", "7"});
    auto second = testsupport::run_cli({"suite", "--seed", "7"});
    if (first.code != 0 || second.code != 0)
      return {false, fmt("suite exited with %d and %d", first.code, second.code)};
    nlohmann::json a = nlohmann::json::parse(first.out);
    nlohmann::json b = nlohmann::json::parse(second.out);
    a.erase("timing");
    b.erase("timing");
    std::string da = a.dump(2);
    std::string db = b.dump(2);
    bool ok = da == db;
    return {ok, fmt("suite --seed 7 twice: reports byte-identical after excluding timing "
                    "(%zu bytes)",
                    da.size())};
  });

  if (gate.failures > 0) std::printf("%d criterion(s) failed\n", gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
