#pragma once

#include <cstdint>
#include <vector>

#include "rothkit/group.hpp"
#include "rothkit/subset.hpp"

namespace rothkit {

bool is_prime(std::int64_t q);
// True when g = (Z/q)^n for a prime q; q is written out.
bool is_elementary_abelian(const Group& g, std::int64_t& q);

std::int64_t inverse_mod(std::int64_t a, std::int64_t q);
// Rank over F_q of the given row vectors.
std::size_t rank_mod(std::vector<Coords> rows, std::int64_t q);
// Basis of {t : <row, t> = 0 mod q for every row}, each vector of length n.
std::vector<Coords> nullspace_mod(std::vector<Coords> rows, std::size_t n, std::int64_t q);
// All F_q-combinations of the basis vectors as a subset of g.
Subset span_mod(const Group& g, const std::vector<Coords>& basis);

struct Annihilator {
  std::vector<Coords> basis;
  std::size_t codimension = 0;
  Subset members{Group::make({1})};
};

// Gamma^perp = {t : gamma(t) = 1 for all gamma in Gamma} for g = F_q^n, with
// characters given by rank.
Annihilator annihilator(const Group& g, const std::vector<Index>& characters);

}  // namespace rothkit
