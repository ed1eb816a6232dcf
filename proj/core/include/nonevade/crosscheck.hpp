#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nonevade/certifier.hpp"
#include "nonevade/corpus.hpp"

namespace nonevade {

struct SuiteCaps {
  std::size_t nonevasive = 12;        // brute_nonevasive vertex cap
  std::size_t oracle_interior = 10;   // run the oracle when |P̄| is at most this
  std::size_t game = 16;              // exhaustive_check ground cap
  std::size_t collapsible = 1 << 14;  // brute_collapsible face cap
};

// Checks every proof step as certification runs: the link/deletion
// identities as complex equalities, the complement identities behind each
// split, and prune invariance. Failures are collected, not thrown.
class ProofAuditor : public CertifyObserver {
 public:
  void on_split(const SplitEvent& event) override;
  void on_prune(const PruneEvent& event) override;

  std::size_t splits() const noexcept { return splits_; }
  std::size_t prunes() const noexcept { return prunes_; }
  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::size_t splits_ = 0;
  std::size_t prunes_ = 0;
  std::vector<std::string> failures_;
};

struct InstanceResult {
  std::string lattice;
  std::string element;
  std::size_t interior_size = 0;  // |P̄|
  std::size_t faces = 0;
  std::size_t pairs = 0;
  bool certified = false;
  bool verified = false;
  bool identities = false;
  bool oracle_run = false;
  bool oracle_nonevasive = false;
  bool collapsible_run = false;
  bool collapsible = false;
  bool collapse_ok = false;
  bool game_run = false;
  bool game_ok = false;
  std::size_t max_queries = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

struct LatticeResult {
  std::string name;
  std::string provenance;
  std::size_t size = 0;
  std::int64_t mobius = 0;
  std::int64_t reduced_euler = 0;
  bool noncomplemented = false;
  bool crapo_ok = false;
};

struct SuiteReport {
  std::vector<LatticeResult> lattices;
  std::vector<InstanceResult> instances;
  bool ok() const noexcept;
};

InstanceResult check_instance(const CorpusLattice& entry, ElementIndex x, const SuiteCaps& caps);
LatticeResult check_lattice(const CorpusLattice& entry);

// Every corpus lattice and every interior element; results in corpus order.
SuiteReport run_suite(const std::vector<CorpusLattice>& corpus, const SuiteCaps& caps);

}  // namespace nonevade
