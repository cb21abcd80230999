#include "rothkit/serialize.hpp"

#include <fstream>
#include <sstream>

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

Json rational_json(const Rational& q) { return {{"exact", to_string(q)}, {"value", to_double(q)}}; }

Json optional_index(const Group& g, const std::optional<Index>& x) {
  return x ? element_json(g, *x) : Json(nullptr);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == token.size() && !token.empty(), ErrorKind::Parse,
          "line " + std::to_string(line) + ": bad integer '" + token + "'");
  return v;
}

}  // namespace

Json element_json(const Group& g, Index x) {
  const Coords c = g.coords_of(x);
  if (c.size() == 1) return c[0];
  return c;
}

Json subset_json(const Subset& s, bool with_members) {
  Json j{{"group", s.group().to_string()}, {"size", s.size()}};
  if (with_members) {
    Json members = Json::array();
    for (const Index x : s.members()) members.push_back(element_json(s.group(), x));
    j["members"] = std::move(members);
  }
  return j;
}

Json bohr_json(const BohrSet& b, bool with_members) {
  Json freqs = Json::array();
  for (const Index gamma : b.frequencies()) freqs.push_back(element_json(b.group(), gamma));
  Json j{{"group", b.group().to_string()},
         {"frequencies", std::move(freqs)},
         {"rank", b.rank()},
         {"radius", b.radius()},
         {"root_radius", b.root_radius()},
         {"scale", to_string(b.scale())},
         {"size", b.size()}};
  if (with_members) j["members"] = subset_json(b.members())["members"];
  return j;
}

Json certificate_json(const Certificate& c, bool with_sets) {
  Json j{{"kind", to_string(c.kind)}, {"branch", c.branch}};
  switch (c.kind) {
    case CertificateKind::Many3APs: {
      j["count"] = c.count;
      j["threshold"] = rational_json(c.threshold);
      Json sets = Json::array();
      for (const Subset& s : c.sets) sets.push_back(subset_json(s, with_sets));
      j["sets"] = std::move(sets);
      break;
    }
    case CertificateKind::Increment: {
      j["structure_kind"] = to_string(c.structure_kind);
      if (c.structure) j["structure"] = subset_json(*c.structure, with_sets);
      if (c.bohr) j["bohr"] = bohr_json(*c.bohr);
      if (!c.subspace_basis.empty()) j["subspace_basis"] = c.subspace_basis;
      if (c.base) j["x"] = element_json(c.base->group(), c.x);
      j["alpha"] = rational_json(c.alpha);
      j["alpha_new"] = rational_json(c.alpha_new);
      j["factor"] = to_string(c.factor);
      break;
    }
    case CertificateKind::Exhausted:
      j["reason"] = c.reason;
      break;
  }
  Json diag = Json::object();
  for (const auto& [k, v] : c.diagnostics) diag[k] = v;
  j["diagnostics"] = std::move(diag);
  return j;
}

Json step_json(const IterationStep& s) {
  Json j{{"index", s.index},
         {"rank", s.rank},
         {"radius", s.radius},
         {"scale", to_string(s.scale)},
         {"alpha", rational_json(s.alpha)},
         {"set_size", s.set_size},
         {"bohr_size", s.bohr_size},
         {"t_count", s.t_count},
         {"seed", s.seed},
         {"certificate", certificate_json(s.certificate)},
         {"verified", s.verified}};
  if (s.bohr) j["bohr"] = bohr_json(*s.bohr);
  return j;
}

Json trace_json(const IterationTrace& t) {
  Json steps = Json::array();
  for (const IterationStep& s : t.steps) steps.push_back(step_json(s));
  return {{"group", t.group},
          {"initial_alpha", rational_json(t.initial_alpha)},
          {"step_bound", t.step_bound},
          {"steps", std::move(steps)},
          {"all_verified", t.all_verified},
          {"densities_increase", t.densities_increase},
          {"within_bound", t.within_bound},
          {"outcome", to_string(t.outcome)}};
}

std::string trace_jsonl(const IterationTrace& t) {
  std::string out;
  for (const IterationStep& s : t.steps) {
    out += step_json(s).dump();
    out += '\n';
  }
  return out;
}

Json r3_json(const R3Result& r) {
  return {{"n", r.n},
          {"value", r.value},
          {"witness", r.witness},
          {"methods", r.methods},
          {"branch_bound_value", r.branch_bound_value},
          {"bitmask_value", r.bitmask_value},
          {"agree", r.agree},
          {"witness_ok", r.witness_ok}};
}

Json moment_json(const MomentEstimate& e) {
  return {{"m", e.m},         {"k", e.k},
          {"epsilon", e.epsilon}, {"trials", e.trials},
          {"seed", e.seed},   {"empirical", e.empirical},
          {"std_error", e.std_error}, {"analytic", e.analytic},
          {"pass", e.pass}};
}

Json ap_set_json(const APSetReport& r) {
  const Group& g = r.periods.group();
  return {{"periods", subset_json(r.periods)},
          {"m", r.m},
          {"n", r.n},
          {"epsilon", r.epsilon},
          {"k", r.k},
          {"k_capped", r.k_capped},
          {"tuples_tried", r.tuples_tried},
          {"threshold", r.threshold},
          {"doubling", r.doubling},
          {"density_ratio", r.density_ratio},
          {"density_bound", r.density_bound},
          {"theorem_rhs", r.theorem_rhs},
          {"chained_rhs", r.chained_rhs},
          {"max_lhs", r.max_lhs},
          {"checked", r.checked},
          {"population", r.population},
          {"sampled", r.sampled},
          {"violation", optional_index(g, r.violation)},
          {"verified", r.verified},
          {"seed", r.seed}};
}

Json bootstrap_json(const BootstrapReport& r) {
  Json j{{"eta", r.eta},
         {"n", r.n},
         {"r", r.r},
         {"tau", r.tau},
         {"doubling", r.doubling},
         {"pair_invariant", r.pair_invariant},
         {"new_rank", r.new_rank},
         {"rank_bound", r.rank_bound},
         {"radius_bound", r.radius_bound},
         {"rhs", r.rhs},
         {"rhs_alt", r.rhs_alt},
         {"max_lhs", r.max_lhs},
         {"averaged_lhs", r.averaged_lhs},
         {"averaged_ok", r.averaged_ok},
         {"fourier_sup", r.fourier_sup},
         {"fourier_bound", r.fourier_bound},
         {"fourier_ok", r.fourier_ok},
         {"transfer", {{"lhs", r.transfer.lhs},
                       {"rhs", r.transfer.rhs},
                       {"hypothesis", r.transfer.hypothesis},
                       {"holds", r.transfer.holds}}},
         {"checked", r.checked},
         {"sampled", r.sampled},
         {"verified", r.verified}};
  if (r.b_tau) j["b_tau"] = bohr_json(*r.b_tau);
  if (r.t_set) {
    j["t_set"] = bohr_json(*r.t_set);
    j["violation"] = optional_index(r.t_set->group(), r.violation);
    j["sampling"] = ap_set_json(r.sampling);
    j["chang"] = {{"lambda_size", r.chang.lambda.size()},
                  {"leftovers", r.chang.leftovers.size()},
                  {"max_word_length", r.chang.max_word_length},
                  {"radius_prime", r.chang.radius_prime},
                  {"spectrum_size", r.chang.large_spectrum.characters.size()},
                  {"relative_density", r.chang.relative_density},
                  {"lambda_bound", r.chang.lambda_bound},
                  {"radius_bound", r.chang.radius_bound},
                  {"verified", r.chang.verified}};
  }
  return j;
}

Json subspace_json(const SubspaceReport& r) {
  const Group& g = r.subspace.group();
  return {{"basis", r.basis},
          {"codimension", r.codimension},
          {"subspace", subset_json(r.subspace, false)},
          {"sampling", ap_set_json(r.sampling)},
          {"folds", r.folds},
          {"rhs", r.rhs},
          {"max_lhs", r.max_lhs},
          {"checked", r.checked},
          {"sampled", r.sampled},
          {"violation", optional_index(g, r.violation)},
          {"verified", r.verified}};
}

SetFile parse_set_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  SetFile out;
  std::optional<Group> group;
  std::vector<Index> members;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream h(line);
      std::string word, arg, extra;
      h >> word >> arg;
      require(!(h >> extra) && !arg.empty(), ErrorKind::Parse, "header must be 'group SPEC' or 'integers N'");
      if (word == "group") {
        group = Group::parse(arg);
      } else if (word == "integers") {
        out.integers = true;
        out.n = parse_int(arg, line_no);
        require(out.n >= 1, ErrorKind::Parse, "integers N needs N >= 1");
      } else {
        fail(ErrorKind::Parse, "unknown header '" + word + "'");
      }
      have_header = true;
      continue;
    }
    if (out.integers) {
      out.values.push_back(parse_int(line, line_no));
      continue;
    }
    Coords coords;
    std::istringstream cs(line);
    std::string tok;
    while (std::getline(cs, tok, ',')) coords.push_back(parse_int(trim(tok), line_no));
    require(coords.size() == group->dimension(), ErrorKind::Parse,
            "line " + std::to_string(line_no) + ": expected " + std::to_string(group->dimension()) +
                " coordinates");
    for (std::size_t j = 0; j < coords.size(); ++j) {
      require(coords[j] >= 0 && coords[j] < group->orders()[j], ErrorKind::Parse,
              "line " + std::to_string(line_no) + ": coordinate out of range");
    }
    members.push_back(group->index_of(coords));
  }
  require(have_header, ErrorKind::Parse, "set file has no header");
  if (out.integers) {
    out.set = embed_interval(out.values, out.n);
  } else {
    out.set = Subset(*group, std::move(members));
  }
  return out;
}

SetFile read_set_file(const std::string& path) {
  std::ifstream f(path);
  require(static_cast<bool>(f), ErrorKind::Parse, "cannot open set file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_set_text(ss.str());
}

std::string format_set_file(const Subset& s) {
  std::string out = "group " + s.group().to_string() + "\n";
  for (const Index x : s.members()) {
    const Coords c = s.group().coords_of(x);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(c[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rothkit
