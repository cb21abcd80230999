#include "rothkit/finite_field.hpp"

#include "rothkit/error.hpp"

namespace rothkit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<Coords>& rows, std::size_t n, std::int64_t q) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && mod(rows[sel][col], q) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const auto inv = inverse_mod(mod(rows[r][col], q), q);
    for (auto& v : rows[r]) v = mod(v * inv, q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const auto factor = mod(rows[i][col], q);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = mod(rows[i][j] - factor * rows[r][j], q);
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

bool is_elementary_abelian(const Group& g, std::int64_t& q) {
  q = g.orders().front();
  if (!is_prime(q)) return false;
  for (const auto n : g.orders()) {
    if (n != q) return false;
  }
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  std::int64_t t = 0, nt = 1, r = q, nr = mod(a, q);
  while (nr != 0) {
    const auto quot = r / nr;
    t -= quot * nt;
    std::swap(t, nt);
    r -= quot * nr;
    std::swap(r, nr);
  }
  require(r == 1, ErrorKind::Domain, "element is not invertible mod q");
  return mod(t, q);
}

std::size_t rank_mod(std::vector<Coords> rows, std::int64_t q) {
  if (rows.empty()) return 0;
  const auto n = rows.front().size();
  return reduce(rows, n, q).size();
}

std::vector<Coords> nullspace_mod(std::vector<Coords> rows, std::size_t n, std::int64_t q) {
  for (const auto& row : rows) {
    require(row.size() == n, ErrorKind::DimensionMismatch, "row length != n");
  }
  const auto pivots = reduce(rows, n, q);
  std::vector<bool> is_pivot(n, false);
  for (const auto c : pivots) is_pivot[c] = true;
  std::vector<Coords> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Coords v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod(-rows[i][free], q);
    basis.push_back(std::move(v));
  }
  return basis;
}

Subset span_mod(const Group& g, const std::vector<Coords>& basis) {
  std::vector<Index> gens;
  for (const auto& v : basis) gens.push_back(g.index_of(v));
  std::vector<Index> members{0};
  for (const Index gen : gens) {
    const auto q = g.orders().front();
    const std::size_t current = members.size();
    Index step = gen;
    for (std::int64_t c = 1; c < q; ++c) {
      for (std::size_t i = 0; i < current; ++i) members.push_back(g.add(members[i], step));
      step = g.add(step, gen);
    }
  }
  std::vector<std::uint8_t> mask(g.size(), 0);
  for (const Index x : members) mask[x] = 1;
  return Subset::from_mask(g, mask);
}

Annihilator annihilator(const Group& g, const std::vector<Index>& characters) {
  std::int64_t q = 0;
  require(is_elementary_abelian(g, q), ErrorKind::Unsupported,
          "annihilators need a group of the form F_q^n");
  std::vector<Coords> rows;
  for (const Index c : characters) rows.push_back(g.coords_of(c));
  Annihilator out;
  out.basis = nullspace_mod(std::move(rows), g.dimension(), q);
  out.codimension = g.dimension() - out.basis.size();
  out.members = span_mod(g, out.basis);
  return out;
}

}  // namespace rothkit
