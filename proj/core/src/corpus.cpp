#include "nonevade/corpus.hpp"

#include <algorithm>
#include <cstdio>

#include "nonevade/generate.hpp"

namespace nonevade {

namespace {

CorpusLattice named(std::string name, std::string_view family, std::int64_t n, std::int64_t m = 0) {
  FamilyParams params;
  params.n = n;
  params.m = m;
  std::string provenance = std::string(family) + " n=" + std::to_string(n);
  if (m) provenance += " m=" + std::to_string(m);
  return {std::move(name), std::move(provenance), generate(family, params)};
}

}  // namespace

std::vector<CorpusLattice> named_corpus() {
  std::vector<CorpusLattice> out;
  for (int n = 2; n <= 8; ++n) out.push_back(named("chain" + std::to_string(n), "chain", n));
  for (int n = 2; n <= 4; ++n) out.push_back(named("boolean" + std::to_string(n), "boolean", n));
  for (int d : {12, 24, 36, 60}) out.push_back(named("divisor" + std::to_string(d), "divisor", d));
  for (int n : {3, 4}) out.push_back(named("partition" + std::to_string(n), "partition", n));
  out.push_back(named("m3", "diamond", 3));
  out.push_back(named("n5", "pentagon", 0));
  out.push_back(named("product3x3", "product", 3, 3));
  return out;
}

CorpusLattice random_corpus_lattice(std::size_t k, std::uint64_t seed, std::size_t max_size) {
  FamilyParams params;
  params.seed = seed + k;
  params.n = 3 + static_cast<std::int64_t>(k % 8);
  params.edge_probability = 0.2 + 0.1 * static_cast<double>(k / 8 % 5);
  for (;;) {
    Lattice lattice = generate("random", params);
    if (lattice.size() <= max_size || params.n == 0) {
      char name[32];
      std::snprintf(name, sizeof name, "random%04zu", k);
      char provenance[96];
      std::snprintf(provenance, sizeof provenance, "random n=%lld p=%.1f seed=%llu",
                    static_cast<long long>(params.n), params.edge_probability,
                    static_cast<unsigned long long>(params.seed));
      return {name, provenance, std::move(lattice)};
    }
    --params.n;
  }
}

std::vector<CorpusLattice> build_corpus(const CorpusOptions& options) {
  auto out = named_corpus();
  for (std::size_t k = 0; k < options.random_count; ++k)
    out.push_back(random_corpus_lattice(k, options.seed, options.random_max_size));
  std::ranges::sort(out, [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace nonevade
