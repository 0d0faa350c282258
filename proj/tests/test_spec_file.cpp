#include <doctest.h>

#include <string>

#include "nbai/spec_file.hpp"
#include "test_util.hpp"

using namespace nbai;
using nbai::test::code_of;

namespace {

const std::string kSettings = NBAI_SETTINGS_DIR;

std::string error_text(const std::string& text) {
  try {
    parse_spec_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("bundled setting1") {
  const auto spec = parse_spec(kSettings + "/setting1.spec");
  CHECK(spec.setting_id == "setting1");
  CHECK(spec.mu1 == 1.0);
  CHECK(spec.mu2_list == std::vector<double>{0.80, 0.85, 0.90, 0.95, 0.99});
  CHECK(spec.variance_pairs ==
        std::vector<VariancePair>{{1, 5}, {1, 10}, {1, 20}, {1, 50}});
  CHECK(spec.pair_values == PairValues::Variances);
  CHECK(spec.strategies.size() == 5);
  CHECK(spec.trials == 1000);
  CHECK(spec.config.horizon == 10000);
  CHECK(spec.config.checkpoints.size() == 100);
  CHECK(spec.config.checkpoints.front() == 100);
  CHECK(spec.config.checkpoints.back() == 10000);
}

TEST_CASE("bundled setting2 and setting3") {
  const auto s2 = parse_spec(kSettings + "/setting2.spec");
  CHECK(s2.variance_pairs.front() == VariancePair{5, 5});
  const auto s3 = parse_spec(kSettings + "/setting3.spec");
  CHECK(s3.mu1 == 10.0);
  CHECK(s3.mu2_list == std::vector<double>{9.80, 9.85, 9.90, 9.95, 9.99});
}

TEST_CASE("defaults fill missing keys") {
  const auto spec = parse_spec_text(
      "mu1: 1\nmu2: [0.5]\nvariance_pairs: [[1, 2]]\n", "mine");
  CHECK(spec.setting_id == "mine");
  CHECK(spec.trials == 1000);
  CHECK(spec.config.horizon == 10000);
  CHECK(spec.config.checkpoints.size() == 100);
  CHECK(spec.config.init_rounds == 10);
  CHECK(spec.config.trunc.c_mu == 100.0);
  CHECK(spec.config.trunc.c_sigma2 == 1e-4);
  CHECK(!spec.config.mixing);
  CHECK(spec.strategies.size() == 5);
}

TEST_CASE("overrides take precedence") {
  SpecOverrides ov;
  ov.trials = 200;
  ov.horizon = 2000;
  ov.master_seed = 42;
  const auto spec = parse_spec(kSettings + "/setting1.spec", ov);
  CHECK(spec.trials == 200);
  CHECK(spec.config.horizon == 2000);
  CHECK(spec.config.checkpoints.size() == 20);
  CHECK(spec.config.master_seed == 42);

  ov.checkpoint_step = 500;
  CHECK(parse_spec(kSettings + "/setting1.spec", ov).config.checkpoints ==
        std::vector<int>{500, 1000, 1500, 2000});
}

TEST_CASE("explicit checkpoints and options") {
  const auto spec = parse_spec_text(
      "mu1: 1\nmu2: [0.5]\nvariance_pairs: [[1, 2]]\nhorizon: 400\n"
      "checkpoints: [10, 400]\nstrategies: [oracle]\npair_values: std_devs\n"
      "mixing: true\nseed: 9\n");
  CHECK(spec.config.checkpoints == std::vector<int>{10, 400});
  CHECK(spec.strategies == std::vector<StrategyKind>{StrategyKind::Oracle});
  CHECK(spec.pair_values == PairValues::StdDevs);
  CHECK(spec.config.mixing);
  CHECK(spec.config.master_seed == 9);
}

TEST_CASE("parse errors name line and field") {
  const std::string base = "mu1: 1\nmu2: [0.5]\nvariance_pairs: [[1, 2]]\n";
  auto msg = error_text(base + "colour: red\n");
  CHECK(msg.find("line 4") != std::string::npos);
  CHECK(msg.find("colour") != std::string::npos);

  msg = error_text(base + "trials: many\n");
  CHECK(msg.find("trials") != std::string::npos);
  CHECK(msg.find("line 4") != std::string::npos);

  CHECK(code_of([&] { parse_spec_text(base + "strategies: [greedy]\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { parse_spec_text("mu1: 1\nvariance_pairs: [[1,2]]\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { parse_spec_text(base + "variance_pairs: [[1,2,3]]\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { parse_spec_text("mu1: [1\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { parse_spec("/nonexistent/x.spec"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("validation errors") {
  const std::string base = "mu1: 1\nmu2: [0.5]\nvariance_pairs: [[1, 2]]\n";
  CHECK(code_of([&] { parse_spec_text(base + "trials: 0\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([&] { parse_spec_text("mu1: 1\nmu2: [1]\nvariance_pairs: [[1, 2]]\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([&] { parse_spec_text(base + "variance_pairs: [[0, 2]]\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([&] { parse_spec_text(base + "init_rounds: 3\n"); }) ==
        ErrorCode::ValidationError);
  CHECK(code_of([&] {
          parse_spec_text(base + "horizon: 100\ncheckpoints: [200]\n");
        }) == ErrorCode::ValidationError);
}
