#include "nbai/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nbai/error.hpp"

namespace nbai {

namespace {

[[noreturn]] void parse_error(const YAML::Mark& mark, const std::string& field,
                              const std::string& msg) {
  std::ostringstream os;
  os << "line " << (mark.line + 1) << ", field '" << field << "': " << msg;
  throw Error(ErrorCode::ParseError, os.str());
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) parse_error(node.Mark(), field, "expected a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    parse_error(node.Mark(), field, "cannot convert '" + node.Scalar() + "'");
  }
}

template <typename T>
std::vector<T> scalar_list(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) parse_error(node.Mark(), field, "expected a list");
  std::vector<T> out;
  for (const YAML::Node& item : node) out.push_back(scalar<T>(item, field));
  return out;
}

const std::set<std::string> kKeys = {
    "setting_id", "mu1",        "mu2",        "variance_pairs",
    "pair_values", "strategies", "trials",     "horizon",
    "checkpoint_step", "checkpoints", "init_rounds", "c_mu",
    "c_sigma2",   "mixing",     "seed"};

}  // namespace

ExperimentSpec parse_spec_text(const std::string& text,
                               const std::string& default_id,
                               const SpecOverrides& overrides) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    parse_error(e.mark, "<document>", e.msg);
  }
  if (!root.IsMap()) {
    parse_error(root.Mark(), "<document>", "expected a key/value mapping");
  }

  ExperimentSpec spec;
  spec.setting_id = default_id;
  int checkpoint_step = 100;
  std::optional<std::vector<int>> explicit_checkpoints;
  bool have_mu1 = false;

  for (const auto& kv : root) {
    const std::string key = scalar<std::string>(kv.first, "<key>");
    const YAML::Node& v = kv.second;
    if (!kKeys.count(key)) parse_error(kv.first.Mark(), key, "unknown key");

    if (key == "setting_id") {
      spec.setting_id = scalar<std::string>(v, key);
    } else if (key == "mu1") {
      spec.mu1 = scalar<double>(v, key);
      have_mu1 = true;
    } else if (key == "mu2") {
      spec.mu2_list = scalar_list<double>(v, key);
    } else if (key == "variance_pairs") {
      if (!v.IsSequence()) parse_error(v.Mark(), key, "expected a list");
      for (const YAML::Node& pair : v) {
        const auto xs = scalar_list<double>(pair, key);
        if (xs.size() != 2) {
          parse_error(pair.Mark(), key, "each pair needs exactly two values");
        }
        spec.variance_pairs.push_back({xs[0], xs[1]});
      }
    } else if (key == "pair_values") {
      const auto s = scalar<std::string>(v, key);
      if (s == "variances") {
        spec.pair_values = PairValues::Variances;
      } else if (s == "std_devs") {
        spec.pair_values = PairValues::StdDevs;
      } else {
        parse_error(v.Mark(), key, "expected 'variances' or 'std_devs'");
      }
    } else if (key == "strategies") {
      spec.strategies.clear();
      for (const auto& name : scalar_list<std::string>(v, key)) {
        try {
          spec.strategies.push_back(parse_strategy(name));
        } catch (const Error& e) {
          parse_error(v.Mark(), key, e.what());
        }
      }
    } else if (key == "trials") {
      spec.trials = scalar<int>(v, key);
    } else if (key == "horizon") {
      spec.config.horizon = scalar<int>(v, key);
    } else if (key == "checkpoint_step") {
      checkpoint_step = scalar<int>(v, key);
    } else if (key == "checkpoints") {
      explicit_checkpoints = scalar_list<int>(v, key);
    } else if (key == "init_rounds") {
      spec.config.init_rounds = scalar<int>(v, key);
    } else if (key == "c_mu") {
      spec.config.trunc.c_mu = scalar<double>(v, key);
    } else if (key == "c_sigma2") {
      spec.config.trunc.c_sigma2 = scalar<double>(v, key);
    } else if (key == "mixing") {
      spec.config.mixing = scalar<bool>(v, key);
    } else if (key == "seed") {
      spec.config.master_seed = scalar<std::uint64_t>(v, key);
    }
  }
  if (!have_mu1) parse_error(root.Mark(), "mu1", "missing required key");
  if (spec.mu2_list.empty()) {
    parse_error(root.Mark(), "mu2", "missing required key");
  }
  if (spec.variance_pairs.empty()) {
    parse_error(root.Mark(), "variance_pairs", "missing required key");
  }

  if (overrides.trials) spec.trials = *overrides.trials;
  if (overrides.horizon) spec.config.horizon = *overrides.horizon;
  if (overrides.master_seed) spec.config.master_seed = *overrides.master_seed;
  if (overrides.checkpoint_step) {
    checkpoint_step = *overrides.checkpoint_step;
    explicit_checkpoints.reset();
  }
  spec.config.checkpoints =
      explicit_checkpoints ? *explicit_checkpoints
                           : checkpoint_grid(checkpoint_step,
                                             spec.config.horizon);
  spec.validate();
  return spec;
}

ExperimentSpec parse_spec(const std::filesystem::path& path,
                          const SpecOverrides& overrides) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path.stem().string(), overrides);
}

}  // namespace nbai
