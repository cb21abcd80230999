#include "sets.hpp"

#include <sstream>

#include "rothkit/error.hpp"
#include "rothkit/r3.hpp"

namespace rothkit::cli {

namespace {

std::int64_t to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(!s.empty() && used == s.size(), ErrorKind::Parse, "bad " + what + " '" + s + "'");
  return v;
}

SetSource embedded(std::vector<std::int64_t> values, std::int64_t n) {
  SetSource out;
  out.set = embed_interval(values, n);
  out.integers = std::move(values);
  return out;
}

}  // namespace

SetSource make_set(const std::string& spec, const std::string& group, double density, Rng& rng) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "file") {
    require(!arg.empty(), ErrorKind::Parse, "file: needs a path");
    const SetFile f = read_set_file(arg);
    SetSource out;
    out.set = f.set;
    if (f.integers) out.integers = f.values;
    return out;
  }
  if (kind == "interval") {
    const auto sep = arg.find(':');
    const std::int64_t n = to_int(arg.substr(0, sep), "interval length");
    require(n >= 1, ErrorKind::Parse, "interval:N needs N >= 1");
    std::vector<std::int64_t> values;
    if (sep == std::string::npos) {
      for (std::int64_t x = 1; x <= n; ++x) values.push_back(x);
    } else {
      std::istringstream in(arg.substr(sep + 1));
      std::string tok;
      while (std::getline(in, tok, ',')) values.push_back(to_int(tok, "interval element"));
    }
    return embedded(std::move(values), n);
  }
  if (kind == "r3") {
    const std::int64_t n = to_int(arg, "r3 length");
    return embedded(r3_exact(static_cast<int>(n)).witness, n);
  }

  const Group g = Group::parse(group);
  SetSource out;
  if (kind == "random") {
    require(density >= 0.0 && density <= 1.0, ErrorKind::Parse, "density must lie in [0,1]");
    out.set = random_subset(g, density, rng);
  } else if (kind == "full") {
    out.set = Subset::full(g);
  } else if (kind == "squares") {
    std::vector<Index> members;
    for (Index x = 0; x < g.size(); ++x) {
      Coords c = g.coords_of(x);
      for (std::size_t j = 0; j < c.size(); ++j) c[j] = c[j] * c[j] % g.orders()[j];
      members.push_back(g.index_of(c));
    }
    out.set = Subset(g, std::move(members));
  } else if (kind == "base3") {
    require(g.is_cyclic(), ErrorKind::Parse, "base3 needs a cyclic group");
    const auto n = static_cast<std::int64_t>(g.size());
    std::vector<Index> members;
    for (std::int64_t x = 0; 2 * x < n; ++x) {
      bool ok = true;
      for (std::int64_t y = x; y > 0 && ok; y /= 3) ok = y % 3 < 2;
      if (ok) members.push_back(static_cast<Index>(x));
    }
    out.set = Subset(g, std::move(members));
  } else if (kind == "product") {
    const std::int64_t j = to_int(arg, "product width");
    require(j >= 0 && static_cast<std::size_t>(j) <= g.dimension(), ErrorKind::Parse,
            "product:J needs 0 <= J <= dimension");
    std::vector<Index> members;
    for (Index x = 0; x < g.size(); ++x) {
      const Coords c = g.coords_of(x);
      bool ok = true;
      for (std::int64_t i = 0; i < j; ++i) ok = ok && c[i] < 2;
      if (ok) members.push_back(x);
    }
    out.set = Subset(g, std::move(members));
  } else {
    fail(ErrorKind::Parse, "unknown set source '" + spec + "'");
  }
  return out;
}

}  // namespace rothkit::cli
