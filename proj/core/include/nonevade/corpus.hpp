#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nonevade/lattice.hpp"

namespace nonevade {

struct CorpusLattice {
  std::string name;
  std::string provenance;  // family and parameters, including any seed
  Lattice lattice;
};

struct CorpusOptions {
  std::size_t random_count = 500;
  std::uint64_t seed = 1;
  std::size_t random_max_size = 14;
};

// Chains of 2..8 elements, B2..B4, divisors of 12, 24, 36, 60, partition
// lattices of 3 and 4, M3, N5 and the 3x3 grid.
std::vector<CorpusLattice> named_corpus();

// Completion of a seeded random poset. Instance k uses seed `seed + k`, a
// poset of 3 + k % 8 points and edge probability 0.2 + 0.1 * (k / 8 % 5);
// the point count is lowered until the completion has at most `max_size`
// elements.
CorpusLattice random_corpus_lattice(std::size_t k, std::uint64_t seed, std::size_t max_size);

// named_corpus() followed by the random instances, sorted by name.
std::vector<CorpusLattice> build_corpus(const CorpusOptions& options = {});

}  // namespace nonevade
