#pragma once

#include <string>
#include <vector>

#include "rothkit/increment.hpp"
#include "rothkit/serialize.hpp"

namespace rothkit::cli {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<Check> checks;  // sorted by id
  bool pass = false;
};

// which: moments | bohr | sampling | increment | r3 | all. budget >= 1 scales instance counts.
SuiteReport verify_suite(const std::string& which, int budget, const IncrementParams& params);

Json suite_json(const SuiteReport& r);

}  // namespace rothkit::cli
