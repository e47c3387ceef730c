#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covlift/error.hpp"
#include "covlift/generator.hpp"
#include "covlift/report.hpp"
#include "support.hpp"

using namespace covlift;
using namespace covlift::testing;

namespace {

const std::string kPetersenPath = COVLIFT_DATA_DIR "/petersen.json";

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::OracleDisagreement;
}

Json check_json(const Instance& in, OracleMode mode = OracleMode::Off) {
  CheckOptions options;
  options.oracle = mode;
  return run_check(build_fixture(in), options).report;
}

}  // namespace

TEST_CASE("the Petersen instance file") {
  const Instance in = load_instance(kPetersenPath);
  CHECK(in.vertices.size() == 10);
  CHECK(in.edges.size() == 15);
  CHECK(in.base == "0");
  REQUIRE(in.cotree_arcs);
  CHECK(in.cotree_arcs->at(0) == LabelPair{"5", "8"});
  CHECK(in.group == std::vector<std::int64_t>{2, 2, 4});
  CHECK(in.voltages.at(0) == VoltageEntry{{"5", "8"}, {1, 1, 1}});
  REQUIRE(in.automorphisms.size() == 4);
  CHECK(in.automorphisms[2].first == "alpha3");

  const Fixture fx = build_fixture(in);
  CHECK_FALSE(fx.gauge_reduced);
  CHECK(fx.matrices.per_prime.at(0).b == petersen_b());
  for (std::size_t i = 0; i < 4; ++i) CHECK(homology_matrix(fx.basis, fx.automorphisms[i].alpha) == petersen_s(i));

  const Json report = check_json(in, OracleMode::Both);
  CHECK(report["summary"]["lifting"] == Json::array({"alpha1", "alpha4"}));
  CHECK(report["summary"]["not_lifting"] == Json::array({"alpha2", "alpha3"}));
  CHECK(report["summary"]["oracle_disagreements"].empty());
  const Json& a2 = report["automorphisms"][1]["primes"][0];
  CHECK(a2["i0"] == 2);
  CHECK(a2["witness"]["row"] == 2);
  CHECK(a2["witness"]["col"] == 1);
  CHECK(report["primes"][0]["s"] == Json::array({0, 1, 1, 2, 2, 2}));
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycle_notation("(0)(13)") == std::vector<LabelPair>{{"0", "0"}, {"1", "3"}, {"3", "1"}});
  CHECK(parse_cycle_notation("(123)") == std::vector<LabelPair>{{"1", "2"}, {"2", "3"}, {"3", "1"}});
  CHECK(parse_cycle_notation("(v10 v11)(a,b)") ==
        std::vector<LabelPair>{{"v10", "v11"}, {"v11", "v10"}, {"a", "b"}, {"b", "a"}});
  CHECK(parse_cycle_notation("") == std::vector<LabelPair>{});
  CHECK(code_of([] { parse_cycle_notation("(01"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_cycle_notation("01)"); }) == ErrorCode::ParseError);

  const Graph g = petersen();
  for (const std::string& cycles : petersen_alpha_cycles())
    CHECK(parse_cycle_notation(cycle_notation(g, from_cycles(g, cycles))) ==
          parse_cycle_notation(cycle_notation(g, check_automorphism(g, parse_cycle_notation(cycles)))));
  CHECK(cycle_notation(g, from_cycles(g, "(0)(123)(468)(579)")) == "(0)(123)(468)(579)");
}

TEST_CASE("mapping and cycle forms give the same report") {
  Instance cycles = load_instance(kPetersenPath);
  Instance mapping = cycles;
  for (auto& [name, spec] : mapping.automorphisms) spec = parse_cycle_notation(std::get<std::string>(spec));
  CHECK(check_json(cycles).dump() == check_json(mapping).dump());
}

TEST_CASE("instances round-trip through JSON") {
  const Instance in = load_instance(kPetersenPath);
  CHECK(parse_instance(to_json(in)) == in);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance gen = generate_instance(seed);
    CHECK(parse_instance_text(to_json(gen).dump()) == gen);
  }
}

TEST_CASE("malformed instances") {
  const auto parse = [](const std::string& text) { return code_of([&] { build_fixture(parse_instance_text(text)); }); };
  CHECK(parse("[]") == ErrorCode::ParseError);
  CHECK(parse("{not json") == ErrorCode::ParseError);
  CHECK(parse(R"j({"edges": []})j") == ErrorCode::ParseError);
  CHECK(parse(R"j({"vertices": ["a","b"], "edges": [["a","b"]], "group": [2], "voltages": {"a-b": [1]}})j") ==
        ErrorCode::ParseError);
  CHECK(parse(R"j({"vertices": ["a","b"], "edges": [["a","b"]], "group": [2,2], "voltages": {"a>b": [1]}})j") ==
        ErrorCode::ParseError);
  CHECK(parse(R"j({"vertices": ["a","b"], "edges": [["a","b"]], "group": [1]})j") == ErrorCode::OrderTooSmall);
  CHECK(parse(R"j({"vertices": ["a","b","c"], "edges": [["a","b"]], "group": [2]})j") == ErrorCode::Disconnected);
  const std::string swap_ends =
      R"j({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]], "group": [2], "automorphisms": {"x": "(ab)"}})j";
  CHECK(parse(swap_ends) == ErrorCode::NotAdjacencyPreserving);
  CHECK(parse(R"j({"vertices": ["a","b"], "edges": [["a","b"]], "base": "z", "group": [2]})j") ==
        ErrorCode::BaseNotInGraph);
  CHECK(code_of([] { load_instance("/nonexistent/instance.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("a tree has nothing to obstruct") {
  const Instance in = parse_instance_text(R"j({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]],
    "group": [4], "voltages": {"a>b": 1}, "automorphisms": {"flip": "(ac)(b)", "id": "(a)(b)(c)"}})j");
  const Fixture fx = build_fixture(in);
  CHECK(fx.gauge_reduced);
  CHECK(fx.basis.rank() == 0);
  const Json report = check_json(in, OracleMode::Both);
  CHECK(report["summary"]["lifting"] == Json::array({"flip", "id"}));
  CHECK(report["automorphisms"][0]["primes"].empty());
  CHECK(report["summary"]["oracle_disagreements"].empty());
}

TEST_CASE("non-reduced input is gauge-reduced before the criterion") {
  GenOptions options;
  options.non_reduced = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance in = generate_instance(seed, options);
    const Fixture fx = build_fixture(in);
    CHECK(fx.voltages.t_reduced());
    CheckOptions check;
    check.oracle = OracleMode::Both;
    CHECK(run_check(fx, check).disagreements.empty());
  }
}

TEST_CASE("generator is deterministic and produces valid instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance a = generate_instance(seed), b = generate_instance(seed);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK_FALSE(a.automorphisms.empty());
    CHECK_NOTHROW(build_fixture(a));
  }
  CHECK(to_json(generate_instance(1)).dump() != to_json(generate_instance(2)).dump());
  CHECK(enumerate_automorphisms(petersen()).size() == 120);
  CHECK(enumerate_automorphisms(validate_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})).size() == 2);
}

TEST_CASE("normal form reports") {
  const Json pet = normal_form_report(petersen_b());
  CHECK(pet["s"] == Json::array({0, 1, 1, 2, 2, 2}));
  CHECK(pet["i0"] == 2);
  CHECK(pet["verified"] == true);
  const std::string text = render_normal_form_text(pet);
  CHECK(text.find("verified") != std::string::npos);

  const Json zero = normal_form_report(ModMatrix(PrimePower(3, 2), 2, 2));
  CHECK(zero["s"] == Json::array({2, 2}));
  CHECK(zero["pivot_count"] == 0);

  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const Json r = normal_form_report(random_mod_matrix(rng, PrimePower(3, 2), 4, 3));
    CHECK(r["verified"] == true);
    CHECK(r["s"].size() == 4);
  }
}
