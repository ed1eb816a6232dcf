// Runs the seven acceptance criteria over the full corpus and prints one
// PASS/FAIL line for each. Exit status is nonzero if any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "nonevade/certifier.hpp"
#include "nonevade/chain_game.hpp"
#include "nonevade/corpus.hpp"
#include "nonevade/crosscheck.hpp"
#include "nonevade/error.hpp"
#include "nonevade/generate.hpp"
#include "nonevade/oracles.hpp"
#include "nonevade/order_complex.hpp"

using namespace nonevade;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;

  void fail(const std::string& what) {
    if (failures++ < 5) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

std::string instance_name(const CorpusLattice& e, ElementIndex x) { return e.name + "/" + e.lattice.label(x); }

template <typename F>
void for_each_instance(const std::vector<CorpusLattice>& corpus, F&& f) {
  for (const auto& e : corpus)
    for (auto x : e.lattice.interior_elements()) f(e, x);
}

std::size_t trimmed_splits(const Certificate& cert) {
  if (auto* p = std::get_if<PruneNode>(&cert.node)) return trimmed_splits(*p->child);
  if (auto* s = std::get_if<SplitNode>(&cert.node))
    return !s->context.trimmed.empty() + trimmed_splits(*s->dl) + trimmed_splits(*s->lk);
  return 0;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome universal_certification(const std::vector<CorpusLattice>& corpus, std::size_t& count) {
  Outcome o;
  std::size_t trimmed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for_each_instance(corpus, [&](const CorpusLattice& e, ElementIndex x) {
    ++count;
    try {
      const auto r = certify(e.lattice, x);
      trimmed += trimmed_splits(*r.certificate);
      const auto c = order_complex(interior_without_complements(e.lattice, x));
      const auto v = verify_certificate(c, *r.certificate);
      if (!v) o.fail(instance_name(e, x) + " verify failed at " + v.path);
    } catch (const Error& err) {
      o.fail(instance_name(e, x) + " " + std::string(error_code_name(err.code())) + ": " + err.what());
    }
  });
  const double secs = seconds_since(t0);
  if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << count << " instances in " << secs << " s, " << trimmed << " splits with a trimmed link interval";
  if (o.detail.empty()) o.detail = s.str();
  return o;
}

// Builds a certificate straight from the definition, or nothing when the
// complex is evasive.
CertificatePtr definitional_certificate(const Complex& c) {
  if (c.vertex_count() == 1) return make_leaf(c.vertices().front());
  for (const auto& v : c.vertices()) {
    CertificatePtr lk;
    try {
      lk = definitional_certificate(link(c, v));
    } catch (const Error&) {
      continue;  // empty link
    }
    if (!lk) continue;
    auto dl = definitional_certificate(deletion(c, v));
    if (dl) return make_split(v, SplitMode::Case1Atom, {}, dl, lk);
  }
  return nullptr;
}

CertificatePtr random_certificate(const Complex& c, std::mt19937_64& rng, int depth = 0) {
  if (c.vertex_count() == 1 || depth > 8) return make_leaf(c.vertices().front());
  const auto& v = c.vertices()[rng() % c.vertex_count()];
  Complex dl = c, lk = c;
  try {
    dl = deletion(c, v);
    lk = link(c, v);
  } catch (const Error&) {
    return make_leaf(v);
  }
  return make_split(v, SplitMode::Case1Atom, {}, random_certificate(dl, rng, depth + 1),
                    random_certificate(lk, rng, depth + 1));
}

Complex random_complex(std::mt19937_64& rng) {
  const std::size_t n = 3 + rng() % 5;
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<FaceMask> facets;
  const FaceMask full = (FaceMask{1} << n) - 1;
  std::uniform_int_distribution<FaceMask> pick(1, full);
  const std::size_t k = 1 + rng() % 4;
  FaceMask covered = 0;
  for (std::size_t i = 0; i < k; ++i) {
    FaceMask f = pick(rng);
    while (std::popcount(f) > 3) f &= f - 1;
    facets.push_back(f);
    covered |= f;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!(covered >> i & 1U)) facets.push_back(FaceMask{1} << i);
  return Complex(vs, facets);
}

Outcome oracle_equivalence(const std::vector<CorpusLattice>& corpus, std::size_t& checked) {
  Outcome o;
  for_each_instance(corpus, [&](const CorpusLattice& e, ElementIndex x) {
    const auto c = order_complex(interior_without_complements(e.lattice, x));
    if (c.vertex_count() > 10) return;
    ++checked;
    if (!brute_nonevasive(c)) o.fail(instance_name(e, x) + " brute_nonevasive = false");
  });

  std::mt19937_64 rng(20240517);
  std::size_t nonevasive = 0, evasive = 0;
  for (int i = 0; i < 50; ++i) {
    const auto c = random_complex(rng);
    const bool truth = brute_nonevasive(c);
    (truth ? nonevasive : evasive)++;
    std::vector<CertificatePtr> candidates;
    if (auto d = definitional_certificate(c)) candidates.push_back(d);
    for (int k = 0; k < 20; ++k) candidates.push_back(random_certificate(c, rng));
    bool any_accepted = false;
    for (const auto& cert : candidates) {
      if (!verify_certificate(c, *cert)) continue;
      any_accepted = true;
      if (!truth) o.fail("random complex " + std::to_string(i) + ": certificate accepted on evasive complex");
    }
    if (truth && !any_accepted) o.fail("random complex " + std::to_string(i) + ": no certificate for nonevasive complex");
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " corpus complexes; 50 random complexes (" + std::to_string(nonevasive) +
               " nonevasive, " + std::to_string(evasive) + " evasive)";
  if (evasive == 0 || nonevasive == 0) o.fail("random sample did not cover both outcomes");
  return o;
}

Outcome collapse_extraction(const std::vector<CorpusLattice>& corpus) {
  Outcome o;
  std::size_t total_pairs = 0;
  for_each_instance(corpus, [&](const CorpusLattice& e, ElementIndex x) {
    try {
      const auto c = order_complex(interior_without_complements(e.lattice, x));
      const auto seq = extract_collapses(*certify(e.lattice, x).certificate, c);
      const auto end = replay_collapses(c, seq);
      if (end.vertex_count() != 1) o.fail(instance_name(e, x) + " replay did not end at a point");
      const auto faces = c.face_count();
      if (faces % 2 == 0 || seq.pairs.size() != (faces - 1) / 2)
        o.fail(instance_name(e, x) + " pairs " + std::to_string(seq.pairs.size()) + " faces " + std::to_string(faces));
      total_pairs += seq.pairs.size();
    } catch (const Error& err) {
      o.fail(instance_name(e, x) + " " + err.what());
    }
  });
  if (o.pass) o.detail = std::to_string(total_pairs) + " free pairs replayed";
  return o;
}

Outcome query_bound(const std::vector<CorpusLattice>& corpus) {
  Outcome o;
  std::size_t games = 0, largest = 0;
  double slowest = 0.0;
  for_each_instance(corpus, [&](const CorpusLattice& e, ElementIndex x) {
    const auto ground = interior_without_complements(e.lattice, x).labels();
    if (ground.size() > 16) return;
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = compile_strategy(*certify(e.lattice, x).certificate, ground);
    const auto r = exhaustive_check(*s, ground, e.lattice, 16);
    slowest = std::max(slowest, seconds_since(t0));
    ++games;
    largest = std::max(largest, ground.size());
    if (r.subsets_tested != (std::size_t{1} << ground.size())) o.fail(instance_name(e, x) + " subset count");
    if (r.mismatches) o.fail(instance_name(e, x) + " " + std::to_string(r.mismatches) + " mismatches");
    if (r.repeated_queries) o.fail(instance_name(e, x) + " repeated queries");
    if (r.max_queries + 1 > ground.size())
      o.fail(instance_name(e, x) + " max_queries " + std::to_string(r.max_queries) + " > |P|-1");
  });
  if (slowest >= 180.0) o.fail("slowest instance took " + std::to_string(slowest) + " s");
  if (o.pass)
    o.detail = std::to_string(games) + " games, largest ground " + std::to_string(largest) + ", slowest " +
               std::to_string(slowest) + " s";
  return o;
}

Outcome crapo(const std::vector<CorpusLattice>& corpus) {
  Outcome o;
  std::size_t noncomplemented = 0;
  for (const auto& e : corpus) {
    const auto mu = mobius(e.lattice);
    const auto chi = interior_reduced_euler(e.lattice);
    if (mu != chi) o.fail(e.name + " mobius " + std::to_string(mu) + " != reduced euler " + std::to_string(chi));
    if (find_noncomplemented_element(e.lattice)) {
      ++noncomplemented;
      if (mu != 0 || chi != 0) o.fail(e.name + " noncomplemented but mobius " + std::to_string(mu));
    }
  }
  if (o.pass)
    o.detail = std::to_string(corpus.size()) + " lattices, " + std::to_string(noncomplemented) + " noncomplemented";
  return o;
}

Outcome proof_identities(const std::vector<CorpusLattice>& corpus) {
  Outcome o;
  std::size_t splits = 0, prunes = 0;
  for_each_instance(corpus, [&](const CorpusLattice& e, ElementIndex x) {
    ProofAuditor auditor;
    try {
      certify(e.lattice, x, &auditor);
    } catch (const Error& err) {
      o.fail(instance_name(e, x) + " " + err.what());
      return;
    }
    splits += auditor.splits();
    prunes += auditor.prunes();
    for (const auto& f : auditor.failures()) o.fail(instance_name(e, x) + " " + f);
  });
  if (splits == 0) o.fail("no splits audited");
  if (o.pass) o.detail = std::to_string(splits) + " splits, " + std::to_string(prunes) + " prunes audited";
  return o;
}

Outcome spot_checks() {
  Outcome o;
  const auto d12 = generate("divisor", {.n = 12});
  const auto r = certify(d12, "2");
  const auto* root = std::get_if<SplitNode>(&r.certificate->node);
  if (!root || root->vertex != "3" || root->context.z != "6") o.fail("certify(D12, 2) root");

  const auto b2 = generate("boolean", {.n = 2});
  if (!(*certify(b2, "a").certificate == *make_prune({"b"}, make_leaf("a")))) o.fail("certify(B2, a)");

  if (mobius(generate("boolean", {.n = 3})) != -1) o.fail("mobius(B3)");
  if (mobius(d12) != 0) o.fail("mobius(D12)");
  if (o.pass) o.detail = "D12 root 3 z=6; B2 prune; mobius(B3)=-1; mobius(D12)=0";
  return o;
}

}  // namespace

int main() {
  const auto corpus = build_corpus();
  std::cout << "corpus: " << corpus.size() << " lattices\n";

  std::size_t instances = 0, oracle_checked = 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 universal certification", [&] { return universal_certification(corpus, instances); }},
      {"2 oracle equivalence", [&] { return oracle_equivalence(corpus, oracle_checked); }},
      {"3 collapse extraction", [&] { return collapse_extraction(corpus); }},
      {"4 query bound", [&] { return query_bound(corpus); }},
      {"5 crapo corollary", [&] { return crapo(corpus); }},
      {"6 proof identities", [&] { return proof_identities(corpus); }},
      {"7 known values", [&] { return spot_checks(); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
