// Command-line front end. Every subcommand prints one JSON report document to
// stdout (and, with --json FILE, also to a file). Exit codes: 0 success/holds,
// 2 malformed input or usage, 3 no finite invariant (not through origin, not
// finite, non-isolated, cap exceeded, skipped), 4 theorem violation.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "germlab/germlab.hpp"

namespace {

using namespace germlab;

Ring ring_from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  names.push_back(cur);
  return Ring(names);
}

struct Outcome {
  nlohmann::json result;
  int code = 0;
};

int milnor_exit_code(const MilnorResult& r) { return r.has_mu() ? 0 : 3; }

MilnorResult oracle_as_result(const Polynomial& f, unsigned cap) {
  long long mu = milnor_oracle(f, cap);
  return mu == 0 ? MilnorResult::smooth_point() : MilnorResult::finite(mu);
}

Outcome run_milnor(const Ring& ring, const std::string& f_text, unsigned cap, bool oracle) {
  Polynomial f = parse_polynomial(f_text, ring);
  MilnorResult r = oracle ? oracle_as_result(f, cap) : milnor_number(f, cap);
  return {to_json(r), milnor_exit_code(r)};
}

Outcome run_mult(const Ring& ring, const std::string& map_text, unsigned cap) {
  MapGerm F(parse_components(map_text, ring));
  auto m = local_multiplicity(F, cap);
  if (!m) return {{{"kind", "not_finite"}}, 3};
  return {{{"kind", "finite"}, {"multiplicity", *m}}, 0};
}

Outcome run_pullback(const Ring& ring, const std::string& map_text, const std::string& g_text) {
  MapGerm F(parse_components(map_text, ring));
  Polynomial g = parse_polynomial(g_text, ring);
  if (g.is_zero()) throw ZeroPolynomialError();
  if (g.constant_term() != 0) throw NotThroughOriginError();
  Polynomial g_reduced = squarefree_part(g);
  ReducedPreimage rp = reduced_preimage(g_reduced, F);
  nlohmann::json j = to_json(rp);
  j["g_reduced"] = g_reduced.to_string();
  return {j, 0};
}

Outcome run_verify(const Ring& ring, const std::string& map_text, const std::string& g_text,
                   unsigned cap) {
  MapGerm F(parse_components(map_text, ring));
  Polynomial g = parse_polynomial(g_text, ring);
  VerificationReport rep = verify_theorem(g, F, cap);
  int code = 0;
  if (rep.inequality == Verdict::Skipped)
    code = 3;
  else if (rep.inequality == Verdict::Violated || rep.corollary == Verdict::Violated)
    code = 4;
  return {to_json(rep), code};
}

Outcome run_nf(const Ring& ring, const std::string& p_text,
               const std::vector<std::string>& ideal_texts, unsigned cap) {
  Polynomial p = parse_polynomial(p_text, ring);
  std::vector<Polynomial> gens;
  for (const std::string& t : ideal_texts) gens.push_back(parse_polynomial(t, ring));
  Polynomial nf = mora_normal_form(p, gens, cap);
  return {{{"normal_form", nf.to_string()}}, 0};
}

Outcome run_suite_cmd(const SuiteConfig& cfg) {
  SuiteReport rep = run_suite(cfg);
  return {to_json(rep), rep.counters.violated > 0 ? 4 : 0};
}

int emit(const std::string& command, const nlohmann::json& inputs, const Outcome& out,
         double elapsed_seconds, const std::string& json_path) {
  nlohmann::json doc = make_document(command, inputs, out.result, elapsed_seconds);
  std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    file << text;
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germ-lab: exact Milnor numbers of hypersurface germs and pullbacks "
               "through finite map germs"};
  app.require_subcommand(1);

  std::string vars = "x,y";
  std::string json_path;
  unsigned cap = kDefaultDegreeCap;
  std::string poly_text;
  std::string map_text;
  std::vector<std::string> ideal_texts;
  bool oracle = false;

  auto add_common = [&](CLI::App* sub, bool with_cap = true) {
    sub->add_option("--vars", vars, "comma-separated variable names")->capture_default_str();
    sub->add_option("--json", json_path, "also write the report to this file");
    if (with_cap)
      sub->add_option("--degree-cap", cap, "abort local computations past this total degree")
          ->capture_default_str();
  };

  CLI::App* milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface germ");
  milnor->add_option("poly", poly_text, "polynomial germ, e.g. \"x^3 - y^2\"")->required();
  milnor->add_flag("--oracle", oracle, "use the truncation-dimension engine instead");
  add_common(milnor);

  CLI::App* mult = app.add_subcommand("mult", "local multiplicity of a map germ");
  mult->add_option("--map", map_text, "components separated by ';', e.g. \"x^2; y^3\"")
      ->required();
  add_common(mult);

  CLI::App* pullback =
      app.add_subcommand("pullback", "reduced preimage of a germ under a map germ");
  pullback->add_option("--map", map_text, "components separated by ';'")->required();
  pullback->add_option("poly", poly_text, "hypersurface germ to pull back")->required();
  add_common(pullback, false);

  CLI::App* verify =
      app.add_subcommand("verify", "check mu(preimage) >= mu(germ) and the smoothness corollary");
  verify->add_option("--map", map_text, "components separated by ';'")->required();
  verify->add_option("poly", poly_text, "hypersurface germ")->required();
  add_common(verify);

  CLI::App* nf = app.add_subcommand("nf", "Mora weak normal form modulo an ideal");
  nf->add_option("poly", poly_text, "polynomial to reduce")->required();
  nf->add_option("--ideal", ideal_texts, "generator (repeatable)")->required();
  add_common(nf);

  SuiteConfig cfg;
  CLI::App* suite = app.add_subcommand("suite", "randomized verification suite");
  suite->add_option("--seed", cfg.seed, "suite seed")->capture_default_str();
  suite->add_option("--cases", cfg.num_cases, "number of cases")->capture_default_str();
  suite->add_option("--n", cfg.n, "number of variables (2 or 3)")->capture_default_str();
  suite->add_option("--max-degree", cfg.max_degree, "degree budget for generated maps")
      ->capture_default_str();
  suite->add_option("--degree-cap", cfg.degree_cap, "abort local computations past this degree")
      ->capture_default_str();
  suite->add_flag("--generated-germs", cfg.generated_germs,
                  "draw random isolated germs on odd-indexed cases");
  suite->add_flag("--identity-maps", cfg.identity_maps, "force the identity map on every case");
  suite->add_option("--json", json_path, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command;
  nlohmann::json inputs;
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome out;
    if (app.got_subcommand(milnor)) {
      command = "milnor";
      Ring ring = ring_from_csv(vars);
      inputs = {{"vars", ring.names()}, {"f", poly_text}, {"degree_cap", cap},
                {"engine", oracle ? "oracle" : "standard_basis"}};
      out = run_milnor(ring, poly_text, cap, oracle);
    } else if (app.got_subcommand(mult)) {
      command = "mult";
      Ring ring = ring_from_csv(vars);
      inputs = {{"vars", ring.names()}, {"map", map_text}, {"degree_cap", cap}};
      out = run_mult(ring, map_text, cap);
    } else if (app.got_subcommand(pullback)) {
      command = "pullback";
      Ring ring = ring_from_csv(vars);
      inputs = {{"vars", ring.names()}, {"map", map_text}, {"g", poly_text}};
      out = run_pullback(ring, map_text, poly_text);
    } else if (app.got_subcommand(verify)) {
      command = "verify";
      Ring ring = ring_from_csv(vars);
      inputs = {{"vars", ring.names()}, {"map", map_text}, {"g", poly_text},
                {"degree_cap", cap}};
      out = run_verify(ring, map_text, poly_text, cap);
    } else if (app.got_subcommand(nf)) {
      command = "nf";
      Ring ring = ring_from_csv(vars);
      inputs = {{"vars", ring.names()}, {"poly", poly_text}, {"ideal", ideal_texts},
                {"degree_cap", cap}};
      out = run_nf(ring, poly_text, ideal_texts, cap);
    } else {
      command = "suite";
      inputs = to_json(cfg);
      out = run_suite_cmd(cfg);
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, inputs, out, elapsed, json_path);
  } catch (const NotThroughOriginError&) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, inputs, {{{"kind", "not_through_origin"}}, 3}, elapsed, json_path);
  } catch (const ZeroPullbackError&) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, inputs, {{{"kind", "zero_pullback"}}, 3}, elapsed, json_path);
  } catch (const DegreeCapExceededError&) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, inputs, {{{"kind", "degree_cap_exceeded"}}, 3}, elapsed, json_path);
  } catch (const CapExceededWithoutStabilizationError&) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, inputs, {{{"kind", "cap_exceeded_without_stabilization"}}, 3}, elapsed,
                json_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
