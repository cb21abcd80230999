#pragma once

#include <optional>
#include <string>

#include "rothkit/rng.hpp"
#include "rothkit/serialize.hpp"

namespace rothkit::cli {

// Set sources:
//   random            each element kept with probability `density`
//   full              the whole group
//   squares           {x^2 : x in G} (coordinatewise)
//   base3             cyclic only: x < N/2 whose base-3 digits are all 0 or 1
//   product:J         {x : x_1, ..., x_J in {0, 1}}
//   interval:N[:LIST] a subset of {1..N} (default all of it) embedded in Z/(2N+1)
//   r3:N              an exact r3 witness for {1..N}, embedded in Z/(2N+1)
//   file:PATH         a set file (see serialize.hpp)
// Sources that fix their own group ignore `group`.
struct SetSource {
  Subset set{Group::make({1})};
  std::optional<std::vector<std::int64_t>> integers;
};

SetSource make_set(const std::string& spec, const std::string& group, double density, Rng& rng);

}  // namespace rothkit::cli
