#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rothkit/almost_period.hpp"
#include "rothkit/bohr.hpp"
#include "rothkit/increment.hpp"
#include "rothkit/r3.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

using Json = nlohmann::json;

// Cyclic groups serialize elements as integers, products as coordinate arrays.
Json element_json(const Group& g, Index x);
Json subset_json(const Subset& s, bool with_members = true);
Json bohr_json(const BohrSet& b, bool with_members = false);
Json certificate_json(const Certificate& c, bool with_sets = false);
Json step_json(const IterationStep& s);
Json trace_json(const IterationTrace& t);
// One JSON object per line, one line per step.
std::string trace_jsonl(const IterationTrace& t);
Json r3_json(const R3Result& r);
Json moment_json(const MomentEstimate& e);
Json ap_set_json(const APSetReport& r);
Json bootstrap_json(const BootstrapReport& r);
Json subspace_json(const SubspaceReport& r);

// Set files: a header "group N1xN2x..." followed by one element per line as
// comma-separated coordinates, or "integers N" followed by elements of {1..N}
// (embedded into Z/(2N+1)). Blank lines and '#' comments are ignored.
struct SetFile {
  Subset set{Group::make({1})};
  bool integers = false;
  std::int64_t n = 0;
  std::vector<std::int64_t> values;  // integers mode only
};

SetFile parse_set_text(const std::string& text);
SetFile read_set_file(const std::string& path);
std::string format_set_file(const Subset& s);

}  // namespace rothkit
