#include "app.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "rothkit/error.hpp"
#include "rothkit/r3.hpp"
#include "sets.hpp"
#include "suites.hpp"

namespace rothkit::cli {

namespace {

struct Outcome {
  Json result;
  bool pass = false;
  std::string csv;
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> raw;
  std::string config_path;
};

const std::map<std::string, std::string> kHelp = {
    {"group", "group spec N1xN2x..."},
    {"set", "set source: random | full | squares | base3 | product:J | interval:N[:LIST] | r3:N | file:PATH"},
    {"l", "second set for mu_A*1_L ('same' reuses A)"},
    {"density", "density for random sets"},
    {"seed", "random seed"},
    {"m", "moment parameter m"},
    {"epsilon", "epsilon"},
    {"delta", "delta"},
    {"trials", "Monte Carlo trials"},
    {"n", "interval length N for r3"},
    {"suite", "moments | bohr | sampling | increment | r3 | all"},
    {"budget", "instance-count multiplier (>= 1)"},
    {"mode", "moment | set | bootstrap | subspace"},
    {"constants", "JSON object of constant overrides, or @path to one"},
    {"format", "json | csv"},
    {"out", "write the report here instead of stdout"},
    {"jsonl", "also write one JSON line per iteration step here"},
};

Json flag_value(const Json& like, const std::string& key, const std::string& text) {
  try {
    if (key == "constants") {
      if (!text.empty() && text[0] == '@') {
        std::ifstream f(text.substr(1));
        require(static_cast<bool>(f), ErrorKind::Parse, "cannot open constants file " + text.substr(1));
        return Json::parse(f);
      }
      return Json::parse(text);
    }
    if (like.is_number_unsigned() || (like.is_number_integer() && key == "seed")) {
      std::size_t used = 0;
      const auto v = std::stoull(text, &used);
      require(used == text.size() && text[0] != '-', ErrorKind::Parse, "");
      return v;
    }
    if (like.is_number_integer()) {
      std::size_t used = 0;
      const auto v = std::stoll(text, &used);
      require(used == text.size(), ErrorKind::Parse, "");
      return v;
    }
    if (like.is_number_float()) {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      require(used == text.size(), ErrorKind::Parse, "");
      return v;
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, "--" + key + ": " + e.what());
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "--" + key + ": cannot parse '" + text + "'");
  }
  return text;
}

Json resolve(Command& c) {
  Json cfg = default_config(c.name);
  if (c.name == "iterate") cfg["jsonl"] = "";
  if (!c.config_path.empty()) {
    std::ifstream f(c.config_path);
    require(static_cast<bool>(f), ErrorKind::Parse, "cannot open config " + c.config_path);
    Json file;
    try {
      file = Json::parse(f);
    } catch (const Json::exception& e) {
      fail(ErrorKind::Parse, "config " + c.config_path + ": " + e.what());
    }
    merge_config(cfg, file);
  }
  Json flags = Json::object();
  for (const auto& [key, text] : c.raw) {
    if (c.app->get_option("--" + key)->count() == 0) continue;
    flags[key] = flag_value(cfg[key], key, text);
  }
  merge_config(cfg, flags);
  const std::string fmt = cfg["format"].get<std::string>();
  require(fmt == "json" || fmt == "csv", ErrorKind::Parse, "--format must be json or csv");
  if (cfg.contains("m")) require(cfg["m"].get<int>() >= 1, ErrorKind::Parse, "--m must be >= 1");
  return cfg;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Scalars of nested objects as dotted keys; arrays are left out.
void flatten(const Json& j, const std::string& prefix, std::string& out) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) flatten(v, key, out);
    else if (v.is_primitive()) out += csv_escape(key) + "," + csv_escape(scalar_text(v)) + "\n";
  }
}

std::string flat_csv(const Json& result) {
  std::string out = "key,value\n";
  flatten(result, "", out);
  return out;
}

Json set_info(const SetSource& s) {
  Json j = subset_json(s.set, false);
  if (s.integers) j["integers"] = *s.integers;
  return j;
}

Outcome do_r3(const Json& cfg) {
  const R3Result r = r3_exact(cfg["n"].get<int>());
  Outcome o;
  o.result = r3_json(r);
  o.pass = r.agree && r.witness_ok;
  std::string w;
  for (std::size_t i = 0; i < r.witness.size(); ++i) w += (i ? " " : "") + std::to_string(r.witness[i]);
  o.csv = "n,value,agree,witness\n" + std::to_string(r.n) + "," + std::to_string(r.value) + "," +
          (r.agree ? "true" : "false") + "," + w + "\n";
  return o;
}

Outcome do_iterate(const Json& cfg, const IncrementParams& params) {
  Rng rng = Rng(params.ap.seed).split(1);
  const SetSource src =
      make_set(cfg["set"].get<std::string>(), cfg["group"].get<std::string>(), cfg["density"].get<double>(), rng);
  require(!src.set.empty(), ErrorKind::Parse, "the chosen set is empty");
  const IterationTrace t = run_iteration(src.set.group(), src.set, params);
  Outcome o;
  o.result = {{"set", set_info(src)}, {"trace", trace_json(t)}};
  o.pass = t.all_verified && t.within_bound && t.densities_increase;
  o.csv = "step,rank,radius,alpha,set_size,bohr_size,t_count,kind,branch,verified\n";
  for (const IterationStep& s : t.steps) {
    std::ostringstream row;
    row << s.index << ',' << s.rank << ',' << Json(s.radius).dump() << ',' << to_string(s.alpha) << ','
        << s.set_size << ',' << s.bohr_size << ',' << s.t_count << ',' << to_string(s.certificate.kind) << ','
        << csv_escape(s.certificate.branch) << ',' << (s.verified ? "true" : "false") << '\n';
    o.csv += row.str();
  }
  const std::string jsonl = cfg["jsonl"].get<std::string>();
  if (!jsonl.empty()) {
    std::ofstream f(jsonl);
    require(static_cast<bool>(f), ErrorKind::Parse, "cannot write " + jsonl);
    f << trace_jsonl(t);
  }
  return o;
}

Outcome do_verify(const Json& cfg, const IncrementParams& params) {
  const SuiteReport r = verify_suite(cfg["suite"].get<std::string>(), cfg["budget"].get<int>(), params);
  Outcome o;
  o.result = suite_json(r);
  o.pass = r.pass;
  o.csv = "id,pass,detail\n";
  for (const Check& c : r.checks) {
    o.csv += c.id + "," + (c.pass ? "true" : "false") + "," + csv_escape(c.detail) + "\n";
  }
  return o;
}

BohrSet experiment_bohr(const Group& g, const Json& constants, std::uint64_t seed) {
  const std::size_t rank = constants.value("bohr_rank", std::size_t{0});
  if (rank == 0) return BohrSet::build(g, {g.zero()}, 2.0);
  Rng rng = Rng(seed).split(3);
  std::vector<Index> freqs;
  for (std::size_t i = 0; i < rank; ++i) freqs.push_back(1 + rng.below(g.size() - 1));
  return regularize(BohrSet::build(g, freqs, constants.value("bohr_radius", 1.0)));
}

Outcome do_ap_experiment(const Json& cfg, const IncrementParams& params) {
  const std::string group = cfg["group"].get<std::string>();
  const double density = cfg["density"].get<double>();
  Rng rng_a = Rng(params.ap.seed).split(1);
  const SetSource a = make_set(cfg["set"].get<std::string>(), group, density, rng_a);
  const std::string lspec = cfg["l"].get<std::string>();
  Rng rng_l = Rng(params.ap.seed).split(2);
  const SetSource l = lspec == "same" ? a : make_set(lspec, group, density, rng_l);
  require(a.set.group() == l.set.group(), ErrorKind::Parse, "A and L live in different groups");
  require(!a.set.empty() && !l.set.empty(), ErrorKind::Parse, "A and L must be nonempty");
  const Group& g = a.set.group();

  Outcome o;
  o.result = {{"a", set_info(a)}, {"l", set_info(l)}};
  const std::string mode = cfg["mode"].get<std::string>();
  const std::vector<double> flat(g.size(), 1.0 / static_cast<double>(g.size()));
  try {
    if (mode == "moment") {
      const MomentEstimate e = moment_estimate(a.set, l.set, params.ap, flat);
      o.result["moment"] = moment_json(e);
      o.pass = e.pass;
    } else if (mode == "set") {
      const Subset whole = Subset::full(g);
      const APSetReport r = almost_period_set(a.set, l.set, whole, params.ap, MeasurePair{flat, flat, whole}, 1);
      o.result["almost_periods"] = ap_set_json(r);
      o.pass = r.verified;
    } else if (mode == "bootstrap") {
      const BohrSet b = experiment_bohr(g, cfg["constants"], params.ap.seed);
      const BootstrapReport r = bohr_bootstrap(a.set, l.set, b, params.ap);
      o.result["bohr"] = bohr_json(b);
      o.result["bootstrap"] = bootstrap_json(r);
      o.pass = r.pair_invariant && r.verified;
    } else if (mode == "subspace") {
      const SubspaceReport r = subspace_ap(a.set, l.set, 2 * params.m, params.ap.epsilon, params.ap);
      o.result["subspace"] = subspace_json(r);
      o.pass = r.verified;
    } else {
      fail(ErrorKind::Parse, "unknown mode '" + mode + "'");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SamplingFailure) throw;
    o.result["error"] = e.what();
    o.pass = false;
  }
  o.result["mode"] = mode;
  o.csv = flat_csv(o.result);
  return o;
}

bool usage_kind(ErrorKind k) {
  return k == ErrorKind::Parse || k == ErrorKind::Budget || k == ErrorKind::InvalidGroup ||
         k == ErrorKind::Unsupported || k == ErrorKind::Domain || k == ErrorKind::GroupMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Desk-scale density-increment toolkit for 3-term progressions", "rothkit"};
  app.set_version_flag("--version", std::string(ROTHKIT_VERSION));
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Command>> commands;
  const std::vector<std::pair<std::string, std::string>> names = {
      {"r3", "exact r3(N) by two independent searches"},
      {"iterate", "run the density-increment iteration on a set"},
      {"verify", "run lemma verification suites"},
      {"ap-experiment", "sampling and almost-periodicity experiments"}};
  for (const auto& [name, help] : names) {
    auto c = std::make_unique<Command>();
    c->name = name;
    c->app = app.add_subcommand(name, help);
    c->app->add_option("--config", c->config_path, "JSON config file; flags override it");
    Json keys = default_config(name);
    if (name == "iterate") keys["jsonl"] = "";
    for (const auto& [key, unused] : keys.items()) {
      (void)unused;
      c->app->add_option("--" + key, c->raw[key], kHelp.at(key));
    }
    commands.push_back(std::move(c));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Command* chosen = nullptr;
  for (auto& c : commands) {
    if (c->app->parsed()) chosen = c.get();
  }

  Json cfg;
  IncrementParams params;
  try {
    cfg = resolve(*chosen);
    params = params_from(cfg);
  } catch (const Error& e) {
    err << "rothkit: " << e.what() << "\n";
    return 2;
  }

  Outcome o;
  try {
    if (chosen->name == "r3") o = do_r3(cfg);
    else if (chosen->name == "iterate") o = do_iterate(cfg, params);
    else if (chosen->name == "verify") o = do_verify(cfg, params);
    else o = do_ap_experiment(cfg, params);
  } catch (const Error& e) {
    err << "rothkit: " << e.what() << "\n";
    return usage_kind(e.kind()) ? 2 : 1;
  }

  std::string text;
  if (cfg["format"] == "csv") {
    text = o.csv;
  } else {
    const Json report{{"tool", tool_json()},
                      {"command", chosen->name},
                      {"config", cfg},
                      {"constants", constants_json(params)},
                      {"result", o.result},
                      {"pass", o.pass}};
    text = report.dump(2) + "\n";
  }
  const std::string path = cfg["out"].get<std::string>();
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!f) {
      err << "rothkit: cannot write " << path << "\n";
      return 2;
    }
    f << text;
  }
  return o.pass ? 0 : 1;
}

}  // namespace rothkit::cli
