#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "germlab/germlab.hpp"
#include "support/test_support.hpp"

using namespace germlab;
using nlohmann::json;
using testsupport::run_cli;

namespace {

json load_schema() {
#ifdef GERMLAB_SOURCE_DIR
  std::string path = std::string(GERMLAB_SOURCE_DIR) + "/schemas/report.schema.json";
#else
  std::string path = "schemas/report.schema.json";
#endif
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

// Parses stdout as a single document and enforces the invariants every
// report shares: schema validity and exact numbers outside of timing.
json checked_document(const testsupport::CliResult& res) {
  INFO(res.out);
  INFO(res.err);
  json doc = json::parse(res.out);
  static const json schema = load_schema();
  REQUIRE(testsupport::schema_check(schema, doc) == "");
  REQUIRE(testsupport::find_float(doc) == "");
  REQUIRE(doc["schema_version"] == "1");
  return doc;
}

}  // namespace

TEST_CASE("cli milnor reports the cusp invariant with both engines") {
  auto res = run_cli({"milnor", "x^3 - y^2"});
  REQUIRE(res.code == 0);
  json doc = checked_document(res);
  REQUIRE(doc["command"] == "milnor");
  REQUIRE(doc["inputs"]["engine"] == "standard_basis");
  REQUIRE(doc["result"]["kind"] == "finite");
  REQUIRE(doc["result"]["mu"] == 2);

  auto oracle = run_cli({"milnor", "x^3 - y^2", "--oracle"});
  REQUIRE(oracle.code == 0);
  json odoc = checked_document(oracle);
  REQUIRE(odoc["inputs"]["engine"] == "oracle");
  REQUIRE(odoc["result"]["mu"] == 2);
}

TEST_CASE("cli milnor flags non-isolated and non-vanishing germs") {
  auto non = run_cli({"milnor", "x^2*y^2"});
  REQUIRE(non.code == 3);
  json ndoc = checked_document(non);
  REQUIRE(ndoc["result"]["kind"] == "non_isolated");
  REQUIRE_FALSE(ndoc["result"].contains("mu"));

  auto away = run_cli({"milnor", "x + 1"});
  REQUIRE(away.code == 3);
  REQUIRE(checked_document(away)["result"]["kind"] == "not_through_origin");

  auto oracle_non = run_cli({"milnor", "x^2*y^2", "--oracle"});
  REQUIRE(oracle_non.code == 3);
  REQUIRE(checked_document(oracle_non)["result"]["kind"] ==
          "cap_exceeded_without_stabilization");
}

TEST_CASE("cli mult computes local multiplicities") {
  auto res = run_cli({"mult", "--map", "x^2; y^3"});
  REQUIRE(res.code == 0);
  json doc = checked_document(res);
  REQUIRE(doc["result"]["kind"] == "finite");
  REQUIRE(doc["result"]["multiplicity"] == 6);

  auto three = run_cli({"mult", "--map", "x^2; y^3; z", "--vars", "x,y,z"});
  REQUIRE(three.code == 0);
  REQUIRE(checked_document(three)["result"]["multiplicity"] == 6);

  auto bad = run_cli({"mult", "--map", "x; x*y"});
  REQUIRE(bad.code == 3);
  REQUIRE(checked_document(bad)["result"]["kind"] == "not_finite");
}

TEST_CASE("cli pullback prints the reduced preimage of the worked instance") {
  auto res = run_cli({"pullback", "--map", "x; y^2", "x^3 - y^2"});
  REQUIRE(res.code == 0);
  json doc = checked_document(res);
  REQUIRE(doc["result"]["g_reduced"] == "x^3 - y^2");
  REQUIRE(doc["result"]["pullback"] == "x^3 - y^4");
  REQUIRE(doc["result"]["h"] == "x^3 - y^4");
  REQUIRE(doc["result"]["r"] == 1);
  REQUIRE(doc["result"]["pure"] == true);

  // The printed strings parse back to the library's own answer.
  Ring r({"x", "y"});
  Polynomial g = Polynomial::variable(r, 0).pow(3) - Polynomial::variable(r, 1).pow(2);
  MapGerm F({Polynomial::variable(r, 0), Polynomial::variable(r, 1).pow(2)});
  ReducedPreimage rp = reduced_preimage(g, F);
  REQUIRE(parse_polynomial(doc["result"]["pullback"].get<std::string>(), r) == rp.pullback);
  REQUIRE(parse_polynomial(doc["result"]["h"].get<std::string>(), r) == rp.h);
}

TEST_CASE("cli verify checks the worked instance end to end") {
  auto res = run_cli({"verify", "--map", "x; y^2", "x^3 - y^2"});
  REQUIRE(res.code == 0);
  json doc = checked_document(res);
  REQUIRE(doc["result"]["mu_v"]["mu"] == 2);
  REQUIRE(doc["result"]["mu_w"]["mu"] == 6);
  REQUIRE(doc["result"]["multiplicity"] == 2);
  REQUIRE(doc["result"]["inequality"] == "holds");
  REQUIRE(doc["result"]["corollary"] == "holds");
}

TEST_CASE("cli verify reports skips with exit code 3") {
  auto res = run_cli({"verify", "--map", "x; x*y", "x"});
  REQUIRE(res.code == 3);
  json doc = checked_document(res);
  REQUIRE(doc["result"]["inequality"] == "skipped");
  REQUIRE(doc["result"]["skip_reason"] == "map_not_finite");
}

TEST_CASE("cli nf reduces to the weak normal form") {
  auto res = run_cli({"nf", "x", "--ideal", "x - x^2"});
  REQUIRE(res.code == 0);
  json doc = checked_document(res);
  REQUIRE(doc["result"]["normal_form"] == "0");

  auto escape = run_cli({"nf", "y", "--ideal", "x"});
  REQUIRE(escape.code == 0);
  REQUIRE(checked_document(escape)["result"]["normal_form"] == "y");

  auto capped = run_cli({"nf", "x", "--ideal", "x + y^10", "--degree-cap", "5"});
  REQUIRE(capped.code == 3);
  REQUIRE(checked_document(capped)["result"]["kind"] == "degree_cap_exceeded");
}

TEST_CASE("cli rejects malformed input with exit code 2") {
  REQUIRE(run_cli({"milnor", "x +"}).code == 2);
  REQUIRE(run_cli({"milnor", "x^3", "--vars", "a,b"}).code == 2);
  REQUIRE(run_cli({"milnor", "1/0"}).code == 2);
  REQUIRE(run_cli({"mult", "--map", "x"}).code == 2);
  REQUIRE(run_cli({"mult", "--map", "x;; y"}).code == 2);
  REQUIRE(run_cli({"verify", "--map", "x; y^2", "0"}).code == 2);
  REQUIRE(run_cli({"nf", "x"}).code == 2);
  REQUIRE(run_cli({"bogus"}).code == 2);
  REQUIRE(run_cli({}).code == 2);
  // Errors go to stderr, never into the report stream.
  auto res = run_cli({"milnor", "x +"});
  REQUIRE(res.out.empty());
  REQUIRE_FALSE(res.err.empty());
}

TEST_CASE("cli writes the same document to a json file on request") {
  std::string path = "/tmp/germlab_cli_test_" + std::to_string(getpid()) + ".json";
  auto res = run_cli({"milnor", "x^3 - y^2", "--json", path});
  REQUIRE(res.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  REQUIRE(buf.str() == res.out);
  std::remove(path.c_str());
}

TEST_CASE("cli suite runs and is reproducible for a fixed seed") {
  auto first = run_cli({"suite", "--seed", "7", "--cases", "10"});
  REQUIRE(first.code == 0);
  json doc1 = checked_document(first);
  REQUIRE(doc1["command"] == "suite");
  REQUIRE(doc1["result"]["counters"]["violated"] == 0);
  REQUIRE(doc1["result"]["cases"].size() == 10);
  REQUIRE(doc1["inputs"]["seed"] == 7);

  auto second = run_cli({"suite", "--seed", "7", "--cases", "10"});
  REQUIRE(second.code == 0);
  json doc2 = json::parse(second.out);
  // Identical up to wall-clock timing.
  doc1.erase("timing");
  doc2.erase("timing");
  REQUIRE(doc1.dump() == doc2.dump());
}
