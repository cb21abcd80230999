#include "config.hpp"

#include <set>

#include "rothkit/error.hpp"

namespace rothkit::cli {

namespace {

const std::set<std::string> kExperimentKeys = {"bohr_rank", "bohr_radius"};

Rational rational_value(const Json& v, const std::string& key) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(v.get<std::int64_t>()));
  if (v.is_number()) return exact_rational(v.get<double>());
  fail(ErrorKind::Parse, "constant '" + key + "' must be a number or a rational string");
}

double number(const Json& v, const std::string& key) {
  require(v.is_number(), ErrorKind::Parse, "constant '" + key + "' must be a number");
  return v.get<double>();
}

std::size_t count(const Json& v, const std::string& key) {
  require(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0),
          ErrorKind::Parse, "constant '" + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

bool same_kind(const Json& a, const Json& b) {
  if (a.is_number() && b.is_number()) {
    // integers stay integers; doubles accept any number
    return a.is_number_float() || b.is_number_integer();
  }
  return a.type() == b.type();
}

}  // namespace

Json tool_json() { return {{"name", "rothkit"}, {"version", ROTHKIT_VERSION}}; }

Json default_config(const std::string& command) {
  Json c{{"seed", 1}, {"constants", Json::object()}, {"format", "json"}, {"out", ""}};
  if (command == "r3") {
    c["n"] = 20;
  } else if (command == "iterate") {
    c["group"] = "401";
    c["set"] = "random";
    c["density"] = 0.2;
    c["m"] = 2;
  } else if (command == "verify") {
    c["suite"] = "all";
    c["budget"] = 1;
  } else if (command == "ap-experiment") {
    c["group"] = "401";
    c["set"] = "random";
    c["l"] = "same";
    c["density"] = 0.2;
    c["m"] = 2;
    c["epsilon"] = 0.5;
    c["delta"] = 0.2;
    c["trials"] = 200;
    c["mode"] = "moment";
  } else {
    fail(ErrorKind::Parse, "unknown command '" + command + "'");
  }
  return c;
}

void merge_config(Json& base, const Json& layer) {
  require(layer.is_object(), ErrorKind::Parse, "config must be a JSON object");
  for (const auto& [key, value] : layer.items()) {
    require(base.contains(key), ErrorKind::Parse, "unknown config key '" + key + "'");
    require(same_kind(base[key], value), ErrorKind::Parse, "config key '" + key + "' has the wrong type");
    if (key == "constants") {
      for (const auto& [ck, cv] : value.items()) base[key][ck] = cv;
    } else {
      base[key] = value;
    }
  }
}

void apply_constants(const Json& constants, IncrementParams& p) {
  require(constants.is_object(), ErrorKind::Parse, "constants must be a JSON object");
  for (const auto& [key, v] : constants.items()) {
    if (key == "sample_constant") p.ap.sample_constant = number(v, key);
    else if (key == "density_constant") p.ap.density_constant = number(v, key);
    else if (key == "r_constant") p.ap.r_constant = number(v, key);
    else if (key == "tau_constant") p.ap.tau_constant = number(v, key);
    else if (key == "rank_constant") p.ap.rank_constant = number(v, key);
    else if (key == "fold_constant") p.ap.fold_constant = number(v, key);
    else if (key == "max_sample_length") p.ap.max_sample_length = count(v, key);
    else if (key == "verify_cap") p.ap.verify_cap = count(v, key);
    else if (key == "ap_trials") p.ap.ap_trials = count(v, key);
    else if (key == "sample_length") p.ap.k = count(v, key);
    else if (key == "c_narrow") p.c_narrow = rational_value(v, key);
    else if (key == "c_dev") p.c_dev = number(v, key);
    else if (key == "eps_constant") p.eps_constant = number(v, key);
    else if (key == "delta_constant") p.delta_constant = number(v, key);
    else if (key == "ff_small_target") p.ff_small_target = rational_value(v, key);
    else if (key == "ff_large_target") p.ff_large_target = rational_value(v, key);
    else if (key == "two_set_target") p.two_set_target = rational_value(v, key);
    else if (key == "iterator_target") p.iterator_target = rational_value(v, key);
    else if (!kExperimentKeys.count(key)) fail(ErrorKind::Parse, "unknown constant '" + key + "'");
  }
  require(p.c_narrow > 0 && p.c_dev > 0 && p.eps_constant > 0 && p.delta_constant > 0, ErrorKind::Parse,
          "constants must be positive");
}

IncrementParams params_from(const Json& cfg) {
  IncrementParams p;
  if (cfg.contains("m")) p.m = cfg["m"].get<int>();
  if (cfg.contains("epsilon")) p.ap.epsilon = cfg["epsilon"].get<double>();
  if (cfg.contains("delta")) p.ap.delta = cfg["delta"].get<double>();
  if (cfg.contains("trials")) p.ap.trials = cfg["trials"].get<std::size_t>();
  p.ap.m = p.m;
  p.ap.seed = cfg["seed"].get<std::uint64_t>();
  apply_constants(cfg["constants"], p);
  return p;
}

Json constants_json(const IncrementParams& p) {
  return {{"sample_constant", p.ap.sample_constant},
          {"density_constant", p.ap.density_constant},
          {"r_constant", p.ap.r_constant},
          {"tau_constant", p.ap.tau_constant},
          {"rank_constant", p.ap.rank_constant},
          {"fold_constant", p.ap.fold_constant},
          {"max_sample_length", p.ap.max_sample_length},
          {"verify_cap", p.ap.verify_cap},
          {"ap_trials", p.ap.ap_trials},
          {"sample_length", p.ap.k},
          {"c_narrow", to_string(p.c_narrow)},
          {"c_dev", p.c_dev},
          {"eps_constant", p.eps_constant},
          {"delta_constant", p.delta_constant},
          {"ff_small_target", to_string(p.ff_small_target)},
          {"ff_large_target", to_string(p.ff_large_target)},
          {"two_set_target", to_string(p.two_set_target)},
          {"iterator_target", to_string(p.iterator_target)}};
}

}  // namespace rothkit::cli
