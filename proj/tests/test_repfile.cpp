#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "testutil.hpp"

using namespace klmkit;
using klmtest::make_rng;

namespace {

const FieldSpec Q = FieldSpec::rational();

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/klmkit_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("rep files round-trip through parse and emit") {
  auto rng = make_rng(91);
  std::vector<Representation> reps = {
      klmtest::random_trivial_rep(2, 2, Q, rng),
      klmtest::random_trivial_rep(3, 1, FieldSpec::prime(7), rng),
      example_burau(3, Scalar::parse("7/3", Q), Scalar::parse("1", Q)),
      example_heun(Scalar::parse("3", Q)),
      klmtest::random_cyclic_dim1(3, Q, rng)};
  for (const Representation& rep : reps) {
    std::string text = rep_to_json_text(rep);
    Representation back = rep_from_json_text(text);
    CHECK(back.x_mats == rep.x_mats);
    CHECK(back.g_mats == rep.g_mats);
    CHECK(back.group.tag == rep.group.tag);
    CHECK(rep_to_json_text(back) == text);
  }
}

TEST_CASE("load errors carry the right category") {
  TempFile bad_json("bad.json", "{ not json");
  CHECK_THROWS_AS(load_rep(bad_json.path), parse_error);

  TempFile bad_scalar("badscalar.json", R"({
    "field": {"kind": "rational"}, "n": 1, "dim": 1,
    "x": [[["1/0"]]], "group": {"kind": "trivial", "generators": []}
  })");
  CHECK_THROWS_AS(load_rep(bad_scalar.path), parse_error);

  TempFile singular("singular.json", R"({
    "field": {"kind": "rational"}, "n": 1, "dim": 1,
    "x": [[["0"]]], "group": {"kind": "trivial", "generators": []}
  })");
  CHECK_THROWS_AS(load_rep(singular.path), domain_error);
  CHECK(validate(load_rep_raw(singular.path)).ok() == false);

  CHECK_THROWS_AS(load_rep("/nonexistent/path.json"), parse_error);
}

TEST_CASE("full_braid files pin the Artin data") {
  Representation burau =
      example_burau(3, Scalar::parse("2", Q), Scalar::parse("1", Q));
  nlohmann::json j = nlohmann::json::parse(rep_to_json_text(burau));

  // alpha may be omitted for full_braid generators
  nlohmann::json no_alpha = j;
  for (auto& gen : no_alpha["group"]["generators"]) gen.erase("alpha");
  Representation back = rep_from_json_text(no_alpha.dump());
  CHECK(back.group.generators[0].alpha == BraidWord(3, {1}));
  CHECK(back.group.generators[1].alpha == BraidWord(3, {2}));

  // a wrong alpha is rejected
  nlohmann::json wrong = j;
  wrong["group"]["generators"][0]["alpha"] = {2};
  CHECK_THROWS_AS(rep_from_json_text(wrong.dump()), parse_error);
}

TEST_CASE("pipeline with an inline input representation") {
  Representation hg = example_hypergeometric(Scalar::parse("2", Q),
                                             Scalar::parse("3", Q));
  TempFile pf("pinline.json",
              std::string(R"({"input": )") + rep_to_json_text(hg) +
                  R"(, "steps": [{"op": "klm", "lambda": "5"}]})");
  Pipeline p = load_pipeline("/tmp/klmkit_test_pinline.json");
  Representation out;
  auto reports = run_pipeline(p, out);
  REQUIRE(reports.size() == 1);
  CHECK(out.dim == 2);
}

TEST_CASE("built-in examples") {
  // burau at lambda 1 gives the classical sigma matrix
  Representation burau =
      example_burau(2, Scalar::one(Q), Scalar::one(Q));
  Representation lm = long_moody(burau, Scalar::one(Q)).rep;
  ExactMatrix expect(2, 2, Q);
  expect.at(0, 1) = Scalar::one(Q);
  expect.at(1, 0) = Scalar::one(Q);
  CHECK(lm.g_mats[0] == expect);

  Representation heun = example_heun(Scalar::parse("3", Q));
  CHECK(heun.n == 4);
  CHECK(heun.group.tag == GroupKindTag::Free);
  for (int j = 0; j < 3; ++j)
    CHECK(heun.group.generators[j].alpha ==
          BraidWord(4, {j + 1, j + 1}));
  CHECK(heun.x_mats[1].at(0, 0).str() == "3");

  CHECK_THROWS_AS(example_burau(1, Scalar::one(Q), Scalar::one(Q)),
                  domain_error);
  CHECK_THROWS_AS(example_heun(Scalar::zero(Q)), domain_error);
}

TEST_CASE("pipelines") {
  Representation hg = example_hypergeometric(Scalar::parse("2", Q),
                                             Scalar::parse("3", Q));
  TempFile repfile("hg.json", rep_to_json_text(hg));

  SUBCASE("empty steps is the identity") {
    TempFile pf("p0.json", R"({"input": "hg.json", "steps": []})");
    // input path resolves relative to the pipeline file; both are in /tmp
    Pipeline p = load_pipeline("/tmp/klmkit_test_p0.json");
    Representation out;
    auto reports = run_pipeline(p, out);
    CHECK(reports.empty());
    CHECK(rep_to_json_text(out) == rep_to_json_text(hg));
  }

  SUBCASE("mul then inverse mul restores the input exactly") {
    TempFile pf("p1.json", R"({
      "input": "hg.json",
      "steps": [
        {"op": "mul", "chi": {"x": ["4", "1/3"], "g": []}},
        {"op": "mul", "chi": {"x": ["1/4", "3"], "g": []}},
        {"op": "check"}
      ]
    })");
    Pipeline p = load_pipeline("/tmp/klmkit_test_p1.json");
    Representation out;
    auto reports = run_pipeline(p, out);
    CHECK(reports.size() == 3);
    CHECK(rep_to_json_text(out) == rep_to_json_text(hg));
  }

  SUBCASE("klm steps log dims and compose") {
    TempFile pf("p2.json", R"({
      "input": "hg.json",
      "steps": [ {"op": "klm", "lambda": "5"}, {"op": "klm", "lambda": "1/5"} ]
    })");
    Pipeline p = load_pipeline("/tmp/klmkit_test_p2.json");
    Representation out;
    auto reports = run_pipeline(p, out);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].dim_after == 2);
    CHECK(reports[1].dim_after == 1);
    CHECK(reports[0].detail.find("klm_dim=2") != std::string::npos);
    // the composite is the identity functor on this NT seed
    CHECK(are_isomorphic(out, hg).verdict == Tri::Yes);
  }

  SUBCASE("bad steps fail with the step index") {
    TempFile pf("p3.json", R"({
      "input": "hg.json",
      "steps": [ {"op": "mul", "chi": {"x": ["0", "1"], "g": []}} ]
    })");
    Pipeline p = load_pipeline("/tmp/klmkit_test_p3.json");
    Representation out;
    try {
      run_pipeline(p, out);
      FAIL("expected a step failure");
    } catch (const domain_error& e) {
      CHECK(std::string(e.what()).find("step 0") != std::string::npos);
    }
  }

  SUBCASE("inline input and unknown ops") {
    TempFile pf("p4.json", std::string(R"({"input": )") +
                               rep_to_json_text(hg) +
                               R"(, "steps": [{"op": "frobnicate"}]})");
    CHECK_THROWS_AS(load_pipeline("/tmp/klmkit_test_p4.json"), parse_error);
  }
}

TEST_CASE("pipeline runs are deterministic") {
  Representation heun = example_heun(Scalar::parse("3", Q));
  TempFile repfile("heun.json", rep_to_json_text(heun));
  TempFile pf("pdet.json", R"({
    "input": "heun.json",
    "steps": [ {"op": "klm", "lambda": "2"}, {"op": "restrict"} ]
  })");
  Pipeline p = load_pipeline("/tmp/klmkit_test_pdet.json");
  Representation out1, out2;
  run_pipeline(p, out1);
  run_pipeline(p, out2);
  CHECK(rep_to_json_text(out1) == rep_to_json_text(out2));
}
