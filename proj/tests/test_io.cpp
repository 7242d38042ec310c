#include <doctest.h>

#include <random>
#include <sstream>

#include "morseforge/cli.hpp"
#include "morseforge/io.hpp"
#include "support.hpp"

using namespace morseforge;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args, const std::string& input, std::string* output) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  if (output) *output = out.str();
  return code;
}

}  // namespace

TEST_CASE("cplx text parsing") {
  std::istringstream in(
      "# a three-vertex path\n"
      "u v\n"
      "\n"
      "v w   # trailing comment\n");
  SimplicialComplex k = read_complex(in);
  CHECK(k.vertex_count() == 3);
  CHECK(k.facet_count() == 2);

  std::istringstream round(write_cplx(k));
  CHECK(read_complex(round) == k);
}

TEST_CASE("poset text parsing") {
  std::istringstream in(
      "elem a 0\n"
      "elem b 0\n"
      "elem ab 1\n"
      "cover a ab\n"
      "cover b ab\n");
  Poset p = read_poset(in);
  CHECK(p.element_count() == 3);
  CHECK(p.cover_count() == 2);

  std::istringstream round(write_poset_text(p));
  Poset again = read_poset(round);
  CHECK(again.element_count() == 3);
  CHECK(diagram_isomorphic(p, again));
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 6; ++trial) {
    SimplicialComplex k = testsupport::random_complex(rng, 6, 3, "v");
    CHECK(complex_from_json(to_json(k)) == k);
  }
  Poset h = hasse_diagram(cycle_complex(4));
  Poset back = poset_from_json(to_json(h));
  CHECK(back.element_count() == h.element_count());
  CHECK(back.covers() == h.covers());
}

TEST_CASE("cli: gen then morse then betti, piped") {
  std::string complex_json;
  REQUIRE(run({"gen", "cycle", "4", "--leaf"}, "", &complex_json) == 0);
  std::string morse_json;
  REQUIRE(run({"morse", "-"}, complex_json, &morse_json) == 0);
  std::string betti_json;
  REQUIRE(run({"betti", "-"}, morse_json, &betti_json) == 0);
  json b = json::parse(betti_json);
  CHECK(b.at("betti") == json::array({0, 0, 1}));
  CHECK(b.at("coeff") == "Z2");
}

TEST_CASE("cli: gen path 2 gives the worked example") {
  std::string out;
  REQUIRE(run({"gen", "path", "2"}, "", &out) == 0);
  json j = json::parse(out);
  CHECK(j.at("vertices") == json::array({"u", "v", "w"}));
  std::string morse_out;
  REQUIRE(run({"morse", "-"}, out, &morse_out) == 0);
  json m = json::parse(morse_out);
  CHECK(m.at("vertices").size() == 4);
  CHECK(m.at("facets").size() == 3);
  CHECK(m.at("vertex_pairs").size() == 4);
}

TEST_CASE("cli: sc reports the core") {
  std::string gen;
  REQUIRE(run({"gen", "full_simplex", "2"}, "", &gen) == 0);
  std::string out;
  REQUIRE(run({"sc", "-"}, gen, &out) == 0);
  json j = json::parse(out);
  CHECK(j.at("strongly_collapsible") == true);
  CHECK(j.at("core_size") == 1);
  CHECK(j.at("trace").size() == 2);
}

TEST_CASE("cli: f consumes poset text") {
  std::string out;
  REQUIRE(run({"f", "-"},
              "elem a 0\nelem ab 1\ncover a ab\n", &out) == 0);
  json j = json::parse(out);
  CHECK(j.at("vertices").size() == 1);
}

TEST_CASE("cli: aut and alg1") {
  std::string gen;
  REQUIRE(run({"gen", "cycle", "3"}, "", &gen) == 0);
  std::string morse_out;
  REQUIRE(run({"morse", "-"}, gen, &morse_out) == 0);
  std::string aut_out;
  REQUIRE(run({"aut", "-"}, morse_out, &aut_out) == 0);
  CHECK(json::parse(aut_out).at("order") == 12);

  std::string star;
  REQUIRE(run({"gen", "star", "2"}, "", &star) == 0);
  std::string alg;
  REQUIRE(run({"alg1", "-", "--exact"}, star, &alg) == 0);
  json a = json::parse(alg);
  CHECK(a.at("pattern_found") == true);
  CHECK(a.at("exact") == true);
}

TEST_CASE("cli: exit codes") {
  std::string out;
  CHECK(run({}, "", &out) == 2);
  CHECK(run({"bogus", "x"}, "", &out) == 2);
  CHECK(run({"gen", "cycle", "2"}, "", &out) == 1);
  json err = json::parse(out);
  CHECK(err.at("error").at("code") == "BadParameter");
}

TEST_CASE("product order report serializes with all quantities and flags") {
  ProductOrderReport r = product_order_check(star_complex(2), star_complex(3));
  json j = to_json(r);
  for (const char* key : {"aut_morse_union", "aut_k1", "aut_k2", "product", "exception_found",
                          "exception_bound", "predicted_equal", "observed_equal", "consistent"})
    CHECK(j.contains(key));
  CHECK(j.at("aut_k1") == 2);
  CHECK(j.at("aut_k2") == 6);
  CHECK(j.at("consistent") == true);
}

TEST_CASE("cli: pure and core") {
  std::string gen;
  REQUIRE(run({"gen", "path", "1"}, "", &gen) == 0);
  std::string pure_out;
  REQUIRE(run({"pure", "-"}, gen, &pure_out) == 0);
  json p = json::parse(pure_out);
  CHECK(p.at("vertices").size() == 2);
  CHECK(p.at("facets").size() == 2);

  std::string simplex;
  REQUIRE(run({"gen", "full_simplex", "2"}, "", &simplex) == 0);
  std::string core_out;
  REQUIRE(run({"core", "-"}, simplex, &core_out) == 0);
  json c = json::parse(core_out);
  CHECK(c.at("core").at("vertices").size() == 1);
  CHECK(c.at("trace").size() == 2);
}

TEST_CASE("catalog files round-trip and are re-verified on load") {
  PatternCatalog cat = builtin_catalog();
  std::string text = write_catalog_text(cat);
  std::istringstream in(text);
  PatternCatalog back = read_catalog(in);
  REQUIRE(back.entries.size() == cat.entries.size());
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(back.entries[i].name == cat.entries[i].name);
    CHECK(back.entries[i].strongly_collapsible == cat.entries[i].strongly_collapsible);
    CHECK(back.entries[i].instances.size() == cat.entries[i].instances.size());
  }

  // A wrong verdict is caught at load time.
  std::istringstream bogus(
      "elem a 0\n"
      "elem ab 1\n"
      "cover a ab\n"
      "verdict not one-edge\n");
  testsupport::expect_error(errc::consistency_error, [&] { read_catalog(bogus); });
}

TEST_CASE("cli: named check") {
  std::string out;
  REQUIRE(run({"check", "path2-golden"}, "", &out) == 0);
  CHECK(out.find("[PASS] path2-golden") != std::string::npos);
}
