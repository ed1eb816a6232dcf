#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nonevade/lattice.hpp"

namespace nonevade {

// Smallest complete lattice containing `poset`, built from its cuts (A, B)
// with A the lower bounds of B and B the upper bounds of A. A principal cut
// (down-set of a single element p) keeps p's label; any other cut is labelled
// "[m1+m2+...]" from the maximal elements of A, "[]" when A is empty.
// Elements are ordered by |A|, then by the members of A.
Lattice dedekind_macneille(const Poset& poset);

// Random poset on `n` points labelled p1..pn: each pair i < j is related
// with probability `edge_probability`, then closed transitively.
Poset random_poset(std::size_t n, double edge_probability, std::uint64_t seed);

struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t m = 0;              // second factor for "product"
  double edge_probability = 0.3;   // "random" only
  std::uint64_t seed = 0;          // "random" only
};

// Families: chain n, boolean n, divisor n, partition n, product n m (chain
// n x chain m), diamond n (M_n), pentagon (N_5), random n p seed.
// Throws UnknownFamily or ParamOutOfRange.
Lattice generate(std::string_view family, const FamilyParams& params);

const std::vector<std::string>& family_names();

// "a", "b", ..., "z", "aa", "ab", ...
std::string letter_label(std::size_t index);

}  // namespace nonevade
