#include "nonevade/crosscheck.hpp"

#include <algorithm>

#include "nonevade/chain_game.hpp"
#include "nonevade/error.hpp"
#include "nonevade/oracles.hpp"

namespace nonevade {

namespace {

Complex complex_of(const Lattice& lattice, ElementIndex x) {
  return order_complex(interior_without_complements(lattice, x));
}

std::vector<std::string> complement_labels(const Lattice& lattice, ElementIndex x) {
  return labels_of(lattice, complements(lattice, x));
}

}  // namespace

void ProofAuditor::on_split(const SplitEvent& e) {
  ++splits_;
  const std::string where = "split at '" + e.lattice.label(e.vertex) + "' (" +
                            std::string(split_mode_name(e.mode)) + ")";
  const Complex parent = complex_of(e.lattice, e.element);
  const std::string& y = e.lattice.label(e.vertex);
  if (complex_of(e.deletion_lattice, e.deletion_element) != deletion(parent, y))
    failures_.push_back(where + ": deletion identity");
  if (complex_of(e.link_lattice, e.link_element) != link(parent, y))
    failures_.push_back(where + ": link identity");

  const auto co = complement_labels(e.lattice, e.element);
  const bool case1 = e.mode == SplitMode::Case1Atom || e.mode == SplitMode::Case1Coatom;
  if (case1) {
    if (complement_labels(e.deletion_lattice, e.deletion_element) != co)
      failures_.push_back(where + ": complements after removing the vertex");
    std::vector<std::string> inside;
    for (const auto& c : co)
      if (e.link_lattice.find(c)) inside.push_back(c);
    if (complement_labels(e.link_lattice, e.link_element) != inside)
      failures_.push_back(where + ": complements in the interval");
  } else if (!co.empty() || !complement_labels(e.deletion_lattice, e.deletion_element).empty() ||
             !complement_labels(e.link_lattice, e.link_element).empty()) {
    failures_.push_back(where + ": case 2 with complements present");
  }
}

void ProofAuditor::on_prune(const PruneEvent& e) {
  ++prunes_;
  if (complex_of(e.lattice, e.element) != complex_of(e.pruned, e.pruned_element))
    failures_.push_back("prune at '" + e.lattice.label(e.element) + "': complex changed");
}

bool SuiteReport::ok() const noexcept {
  return std::ranges::all_of(lattices, [](const auto& l) { return l.crapo_ok; }) &&
         std::ranges::all_of(instances, [](const auto& i) { return i.ok(); });
}

InstanceResult check_instance(const CorpusLattice& entry, ElementIndex x, const SuiteCaps& caps) {
  const Lattice& lattice = entry.lattice;
  InstanceResult r;
  r.lattice = entry.name;
  r.element = lattice.label(x);
  try {
    const auto inner = interior_without_complements(lattice, x);
    r.interior_size = inner.size();
    const Complex complex = order_complex(inner);
    r.faces = complex.face_count();

    ProofAuditor auditor;
    const auto result = certify(lattice, x, &auditor);
    r.certified = true;
    r.identities = auditor.failures().empty();
    for (const auto& f : auditor.failures()) r.failures.push_back(f);

    const auto verdict = verify_certificate(complex, *result.certificate);
    r.verified = verdict.ok;
    if (!verdict) r.failures.push_back("verify failed at " + verdict.path + ": " + verdict.reason);

    if (r.interior_size <= caps.oracle_interior && r.interior_size <= caps.nonevasive) {
      r.oracle_run = true;
      r.oracle_nonevasive = brute_nonevasive(complex, caps.nonevasive);
      if (!r.oracle_nonevasive) r.failures.push_back("brute_nonevasive rejects the complex");
    }

    if (r.verified) {
      const auto seq = extract_collapses(*result.certificate, complex);
      r.pairs = seq.pairs.size();
      r.collapse_ok = 2 * r.pairs + 1 == r.faces;
      if (!r.collapse_ok) r.failures.push_back("collapse count differs from (faces - 1) / 2");
    }

    if (r.faces <= caps.collapsible && r.interior_size <= caps.oracle_interior) {
      r.collapsible_run = true;
      const auto witness = brute_collapsible(complex, caps.collapsible);
      r.collapsible = witness.has_value();
      if (!witness) r.failures.push_back("brute_collapsible finds no sequence");
      else replay_collapses(complex, *witness);
      if (reduced_euler(complex) != 0) r.failures.push_back("reduced Euler characteristic is not 0");
    }

    if (r.interior_size <= caps.game) {
      r.game_run = true;
      const auto ground = inner.labels();
      const auto strategy = compile_strategy(*result.certificate, ground);
      const auto report = exhaustive_check(*strategy, ground, lattice, caps.game);
      r.max_queries = report.max_queries;
      r.game_ok = report.mismatches == 0 && report.repeated_queries == 0 &&
                  report.max_queries + 1 <= r.interior_size;
      if (!r.game_ok)
        r.failures.push_back("game: " + std::to_string(report.mismatches) + " mismatches, max " +
                             std::to_string(report.max_queries) + " queries");
    }
  } catch (const Error& e) {
    r.failures.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return r;
}

LatticeResult check_lattice(const CorpusLattice& entry) {
  LatticeResult r;
  r.name = entry.name;
  r.provenance = entry.provenance;
  r.size = entry.lattice.size();
  r.mobius = mobius(entry.lattice);
  r.reduced_euler = interior_reduced_euler(entry.lattice);
  r.noncomplemented = find_noncomplemented_element(entry.lattice).has_value();
  r.crapo_ok = r.mobius == r.reduced_euler && (!r.noncomplemented || r.mobius == 0);
  return r;
}

SuiteReport run_suite(const std::vector<CorpusLattice>& corpus, const SuiteCaps& caps) {
  SuiteReport report;
  for (const auto& entry : corpus) {
    report.lattices.push_back(check_lattice(entry));
    for (ElementIndex x : entry.lattice.interior_elements())
      report.instances.push_back(check_instance(entry, x, caps));
  }
  return report;
}

}  // namespace nonevade
