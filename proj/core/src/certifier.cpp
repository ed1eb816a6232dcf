#include "nonevade/certifier.hpp"

#include <set>

#include <algorithm>
#include <unordered_map>

#include "nonevade/error.hpp"

namespace nonevade {

std::string_view split_mode_name(SplitMode mode) {
  switch (mode) {
    case SplitMode::Case1Atom: return "case1_atom";
    case SplitMode::Case1Coatom: return "case1_coatom";
    case SplitMode::Case2Atom: return "case2_atom";
    case SplitMode::Case2Coatom: return "case2_coatom";
  }
  return "unknown";
}

std::optional<SplitMode> parse_split_mode(std::string_view name) {
  for (auto m : {SplitMode::Case1Atom, SplitMode::Case1Coatom, SplitMode::Case2Atom,
                 SplitMode::Case2Coatom})
    if (split_mode_name(m) == name) return m;
  return std::nullopt;
}

std::string_view decision_name(Decision decision) {
  switch (decision) {
    case Decision::Leaf: return "leaf";
    case Decision::Case1Atom: return "case1_atom";
    case Decision::Case1Coatom: return "case1_coatom";
    case Decision::Prune: return "prune";
    case Decision::Case2Atom: return "case2_atom";
    case Decision::Case2Coatom: return "case2_coatom";
  }
  return "unknown";
}

bool operator==(const Certificate& a, const Certificate& b) {
  auto same = [](const CertificatePtr& p, const CertificatePtr& q) {
    if (!p || !q) return p == q;
    return *p == *q;
  };
  if (a.node.index() != b.node.index()) return false;
  if (auto* l = std::get_if<LeafNode>(&a.node)) return l->vertex == std::get<LeafNode>(b.node).vertex;
  if (auto* p = std::get_if<PruneNode>(&a.node)) {
    const auto& q = std::get<PruneNode>(b.node);
    return p->removed == q.removed && same(p->child, q.child);
  }
  const auto& s = std::get<SplitNode>(a.node);
  const auto& t = std::get<SplitNode>(b.node);
  return s.vertex == t.vertex && s.mode == t.mode && s.context.bottom == t.context.bottom &&
         s.context.top == t.context.top && s.context.z == t.context.z &&
         s.context.trimmed == t.context.trimmed && same(s.dl, t.dl) &&
         same(s.lk, t.lk);
}

CertificatePtr make_leaf(std::string vertex) {
  return std::make_shared<const Certificate>(Certificate{LeafNode{std::move(vertex)}});
}

CertificatePtr make_prune(std::vector<std::string> removed, CertificatePtr child) {
  return std::make_shared<const Certificate>(
      Certificate{PruneNode{std::move(removed), std::move(child)}});
}

CertificatePtr make_split(std::string vertex, SplitMode mode, SplitContext context,
                          CertificatePtr dl, CertificatePtr lk) {
  return std::make_shared<const Certificate>(Certificate{
      SplitNode{std::move(vertex), mode, std::move(context), std::move(dl), std::move(lk)}});
}

std::set<std::string> certificate_vertices(const Certificate& cert) {
  if (auto* l = std::get_if<LeafNode>(&cert.node)) return {l->vertex};
  if (auto* p = std::get_if<PruneNode>(&cert.node)) return certificate_vertices(*p->child);
  const auto& s = std::get<SplitNode>(cert.node);
  auto out = certificate_vertices(*s.dl);
  out.insert(s.vertex);
  return out;
}

std::size_t certificate_size(const Certificate& cert) {
  if (std::holds_alternative<LeafNode>(cert.node)) return 1;
  if (auto* p = std::get_if<PruneNode>(&cert.node)) return 1 + certificate_size(*p->child);
  const auto& s = std::get<SplitNode>(cert.node);
  return 1 + certificate_size(*s.dl) + certificate_size(*s.lk);
}

namespace {

[[noreturn]] void internal(std::string_view tag, const std::string& detail) {
  throw Error(ErrorCode::InternalAssertion,
              "InternalAssertion(" + std::string(tag) + "): " + detail);
}

struct Choice {
  Decision decision = Decision::Leaf;
  ElementIndex vertex = 0;
  std::vector<ElementIndex> removed;
};

// Interior elements lying in a comparability component that meets an atom
// or coatom complement of x.
std::vector<ElementIndex> prunable_set(const Lattice& L, const std::vector<ElementIndex>& co) {
  auto is_complement = [&](ElementIndex e) { return std::ranges::binary_search(co, e); };
  std::vector<ElementIndex> seeds;
  for (ElementIndex a : L.atoms())
    if (is_complement(a)) seeds.push_back(a);
  for (ElementIndex b : L.coatoms())
    if (is_complement(b)) seeds.push_back(b);
  std::vector<ElementIndex> removed;
  if (seeds.empty()) return removed;
  for (const auto& component : comparability_components(L))
    if (std::ranges::any_of(component, [&](ElementIndex e) {
          return std::ranges::find(seeds, e) != seeds.end();
        }))
      removed.insert(removed.end(), component.begin(), component.end());
  std::ranges::sort(removed);
  return removed;
}

bool comparable_to_extremes(const Lattice& L, ElementIndex x) {
  for (ElementIndex a : L.atoms())
    if (!L.comparable(a, x)) return false;
  for (ElementIndex b : L.coatoms())
    if (!L.comparable(b, x)) return false;
  return true;
}

// The first applicable case, scanning atoms before coatoms in canonical order.
Choice choose(const Lattice& L, ElementIndex x, const std::vector<ElementIndex>& co,
              std::size_t interior_size, TraceEntry& entry) {
  if (interior_size == 1 && co.empty()) return {Decision::Leaf, x, {}};

  for (ElementIndex y : L.atoms()) {
    if (L.leq(y, x)) {
      entry.rejected.push_back({L.label(y), "below-x"});
    } else if (L.join(x, y) == L.top()) {
      entry.rejected.push_back({L.label(y), "complement"});
    } else {
      return {Decision::Case1Atom, y, {}};
    }
  }
  for (ElementIndex y : L.coatoms()) {
    if (L.leq(x, y)) {
      entry.rejected.push_back({L.label(y), "above-x"});
    } else if (L.meet(x, y) == L.bottom()) {
      entry.rejected.push_back({L.label(y), "complement"});
    } else {
      return {Decision::Case1Coatom, y, {}};
    }
  }

  if (auto s = prunable_set(L, co); !s.empty()) return {Decision::Prune, 0, std::move(s)};

  for (ElementIndex y : L.atoms())
    if (y != x) return {Decision::Case2Atom, y, {}};
  for (ElementIndex y : L.coatoms())
    if (y != x) return {Decision::Case2Coatom, y, {}};
  internal("case2-no-candidate", "no atom or coatom other than '" + L.label(x) + "'");
}

// Preconditions of each case. Returns a failure tag, or nullopt if the
// choice is admissible.
std::optional<std::string> inadmissible(const Lattice& L, ElementIndex x,
                                        const std::vector<ElementIndex>& co,
                                        const std::vector<ElementIndex>& inner, const Choice& c) {
  const bool in_interior = std::ranges::binary_search(inner, c.vertex);
  switch (c.decision) {
    case Decision::Leaf:
      if (inner.size() != 1 || c.vertex != x) return "leaf-not-single-point";
      if (!co.empty()) return "leaf-with-complements";
      return std::nullopt;
    case Decision::Case1Atom:
      if (!L.is_atom(c.vertex)) return "not-an-atom";
      if (L.leq(c.vertex, x)) return "vertex-below-x";
      if (L.join(x, c.vertex) == L.top()) return "z-is-top";
      if (!in_interior) return "split-vertex-not-in-interior";
      return std::nullopt;
    case Decision::Case1Coatom:
      if (!L.is_coatom(c.vertex)) return "not-a-coatom";
      if (L.leq(x, c.vertex)) return "vertex-above-x";
      if (L.meet(x, c.vertex) == L.bottom()) return "z-is-bottom";
      if (!in_interior) return "split-vertex-not-in-interior";
      return std::nullopt;
    case Decision::Prune:
      if (c.removed.empty() || c.removed != prunable_set(L, co)) return "prune-set-mismatch";
      return std::nullopt;
    case Decision::Case2Atom:
    case Decision::Case2Coatom: {
      const bool atom = c.decision == Decision::Case2Atom;
      if (!co.empty()) return "case2-complements-nonempty";
      if (!comparable_to_extremes(L, x)) return "case2-x-not-comparable";
      if (atom ? !L.is_atom(c.vertex) : !L.is_coatom(c.vertex)) return "case2-not-extreme";
      if (c.vertex == x) return "case2-vertex-is-x";
      if (!in_interior) return "split-vertex-not-in-interior";
      return std::nullopt;
    }
  }
  return "unknown-decision";
}

std::vector<std::string> labels_where(const Lattice& L, const std::vector<ElementIndex>& elems,
                                      auto&& keep) {
  std::vector<std::string> out;
  for (ElementIndex e : elems)
    if (keep(e)) out.push_back(L.label(e));
  return out;
}

class Certifier {
 public:
  Certifier(CertifyObserver* observer, const CertifyTrace* replay)
      : observer_(observer), replay_(replay) {}

  CertificatePtr run(const Lattice& L, ElementIndex x, std::size_t depth) {
    const auto co = complements(L, x);
    const auto inner = interior_without_complements(L, x).members();
    if (!std::ranges::binary_search(inner, x))
      internal("x-not-in-interior", "'" + L.label(x) + "' missing from its own interior");

    TraceEntry entry{depth, L.size(), inner.size(), L.label(x), Decision::Leaf, {}, {}, {}};
    Choice choice = replay_ ? from_trace(L, x, entry) : choose(L, x, co, inner.size(), entry);
    if (auto bad = inadmissible(L, x, co, inner, choice)) {
      if (replay_) throw Error(ErrorCode::TraceMismatch, "trace decision rejected: " + *bad);
      internal(*bad, "at element '" + L.label(x) + "'");
    }

    entry.decision = choice.decision;
    if (choice.decision == Decision::Prune) {
      entry.removed = labels_of(L, choice.removed);
    } else {
      entry.vertex = L.label(choice.vertex);
    }
    if (!replay_) trace_.entries.push_back(entry);

    switch (choice.decision) {
      case Decision::Leaf:
        return make_leaf(L.label(x));
      case Decision::Prune:
        return prune(L, x, co, choice.removed, depth);
      case Decision::Case1Atom:
      case Decision::Case1Coatom:
        return case1(L, x, co, choice.vertex, choice.decision == Decision::Case1Atom, depth);
      case Decision::Case2Atom:
      case Decision::Case2Coatom:
        return case2(L, x, choice.vertex, choice.decision == Decision::Case2Atom, depth);
    }
    internal("unknown-decision", "");
  }

  CertifyTrace take_trace() { return std::move(trace_); }

  void finish_replay() const {
    if (replay_ && next_ != replay_->entries.size())
      throw Error(ErrorCode::TraceMismatch, "trace has unused entries");
  }

 private:
  static Lattice guarded(std::string_view what, auto&& build) {
    try {
      return build();
    } catch (const Error& e) {
      internal("sublattice-invalid", std::string(what) + ": " + e.what());
    }
  }

  CertificatePtr case1(const Lattice& L, ElementIndex x, const std::vector<ElementIndex>& co,
                       ElementIndex y, bool atom, std::size_t depth) {
    // Deletion child: the same element in L \ {y}, whose complements of x
    // coincide with those in L.
    const Lattice dl = guarded("remove y", [&] { return atom ? remove_atom(L, y) : remove_coatom(L, y); });
    const ElementIndex dl_x = dl.index_of(L.label(x));
    if (labels_of(dl, complements(dl, dl_x)) != labels_of(L, co))
      internal("claim1-complements", "Co(x) changed after removing '" + L.label(y) + "'");

    // Link child: z = x v y in [y, 1] (dually x ^ y in [0, y]), whose
    // complements are those of x inside the interval.
    if (atom ? L.meet(x, y) != L.bottom() : L.join(x, y) != L.top())
      internal("y-not-disjoint-from-x", "'" + L.label(y) + "'");
    const ElementIndex z = atom ? L.join(x, y) : L.meet(x, y);
    if (z == (atom ? L.top() : L.bottom())) internal("z-is-bound", "'" + L.label(z) + "'");
    const Lattice iv = guarded("interval", [&] {
      return atom ? interval(L, y, L.top()) : interval(L, L.bottom(), y);
    });
    const ElementIndex iv_z = iv.index_of(L.label(z));
    const auto in_interval = labels_where(L, co, [&](ElementIndex c) {
      return atom ? L.leq(y, c) : L.leq(c, y);
    });

    // Claim 2 asserts Co_iv(z) = Co(x) n iv. Only the inclusion from left to
    // right holds in general; in a non-modular lattice some c in Co(x) n iv
    // can have c ^ z > y (dually c v z < y). Those elements belong to Co(x)
    // but not to Co_iv(z), so they are trimmed from the interval before the
    // recursion. With nothing to trim this is the plain interval.
    const auto iv_co_list = labels_of(iv, complements(iv, iv_z));
    const std::set<std::string> iv_co(iv_co_list.begin(), iv_co_list.end());
    const std::set<std::string> inside(in_interval.begin(), in_interval.end());
    std::vector<ElementIndex> trimmed;
    for (const auto& c : in_interval)
      if (!iv_co.contains(c)) trimmed.push_back(iv.index_of(c));
    for (const auto& c : iv_co_list)
      if (!inside.contains(c))
        internal("claim2-complements", "'" + c + "' complements '" + L.label(z) + "' only inside the interval");
    std::ranges::sort(trimmed);
    const Lattice lk = trimmed.empty() ? iv : guarded("trim interval", [&] { return remove_elements(iv, trimmed); });
    const ElementIndex lk_z = lk.index_of(L.label(z));
    const auto expected = labels_where(L, co, [&](ElementIndex c) {
      return (atom ? L.leq(y, c) : L.leq(c, y)) && lk.find(L.label(c)).has_value();
    });
    if (labels_of(lk, complements(lk, lk_z)) != expected)
      internal("claim2-complements", "complements of '" + L.label(z) + "' in the link lattice differ");

    return split(L, x, y, atom ? SplitMode::Case1Atom : SplitMode::Case1Coatom, dl, dl_x, lk, lk_z,
                 depth, labels_of(iv, trimmed));
  }

  CertificatePtr case2(const Lattice& L, ElementIndex x, ElementIndex y, bool atom,
                       std::size_t depth) {
    const Lattice dl = guarded("remove y", [&] { return atom ? remove_atom(L, y) : remove_coatom(L, y); });
    const Lattice lk = guarded("interval", [&] {
      return atom ? interval(L, y, L.top()) : interval(L, L.bottom(), y);
    });
    const ElementIndex dl_x = dl.index_of(L.label(x));
    const ElementIndex lk_x = lk.index_of(L.label(x));
    if (!complements(dl, dl_x).empty() || !complements(lk, lk_x).empty())
      internal("case2-children-complements", "child lattice has complements of '" + L.label(x) + "'");
    return split(L, x, y, atom ? SplitMode::Case2Atom : SplitMode::Case2Coatom, dl, dl_x, lk, lk_x,
                 depth);
  }

  CertificatePtr split(const Lattice& L, ElementIndex x, ElementIndex y, SplitMode mode,
                       const Lattice& dl, ElementIndex dl_x, const Lattice& lk, ElementIndex lk_x,
                       std::size_t depth, std::vector<std::string> trimmed = {}) {
    if (dl.size() >= L.size() || lk.size() >= L.size())
      internal("termination", "child lattice is not smaller");
    if (observer_) observer_->on_split({L, x, y, mode, dl, dl_x, lk, lk_x});
    auto dl_cert = run(dl, dl_x, depth + 1);
    auto lk_cert = run(lk, lk_x, depth + 1);
    SplitContext context{lk.label(lk.bottom()), lk.label(lk.top()), lk.label(lk_x), std::move(trimmed)};
    return make_split(L.label(y), mode, std::move(context), std::move(dl_cert), std::move(lk_cert));
  }

  CertificatePtr prune(const Lattice& L, ElementIndex x, const std::vector<ElementIndex>& co,
                       const std::vector<ElementIndex>& removed, std::size_t depth) {
    if (std::ranges::binary_search(removed, x)) internal("x-in-S", "'" + L.label(x) + "'");
    for (ElementIndex s : removed)
      if (!std::ranges::binary_search(co, s))
        internal("S-not-in-complements", "'" + L.label(s) + "' is not a complement");
    const Lattice pruned = guarded("remove S", [&] { return remove_elements(L, removed); });
    const ElementIndex px = pruned.index_of(L.label(x));
    const auto expected = labels_where(
        L, co, [&](ElementIndex c) { return !std::ranges::binary_search(removed, c); });
    if (labels_of(pruned, complements(pruned, px)) != expected)
      internal("pruned-complements", "complements changed beyond the removed set");
    if (observer_) observer_->on_prune({L, x, removed, pruned, px});
    auto child = run(pruned, px, depth + 1);
    return make_prune(labels_of(L, removed), std::move(child));
  }

  Choice from_trace(const Lattice& L, ElementIndex x, const TraceEntry& here) {
    if (next_ >= replay_->entries.size()) throw Error(ErrorCode::TraceMismatch, "trace exhausted");
    const TraceEntry& e = replay_->entries[next_++];
    if (e.depth != here.depth || e.element != here.element || e.lattice_size != here.lattice_size ||
        e.interior_size != here.interior_size)
      throw Error(ErrorCode::TraceMismatch,
                  "trace entry " + std::to_string(next_ - 1) + " does not match the current step");
    auto index = [&](const std::string& label) {
      auto i = L.find(label);
      if (!i) throw Error(ErrorCode::TraceMismatch, "trace names unknown element '" + label + "'");
      return *i;
    };
    Choice c{e.decision, x, {}};
    if (e.decision == Decision::Prune) {
      for (const auto& r : e.removed) c.removed.push_back(index(r));
      std::ranges::sort(c.removed);
    } else {
      c.vertex = index(e.vertex);
    }
    return c;
  }

  CertifyObserver* observer_;
  const CertifyTrace* replay_;
  std::size_t next_ = 0;
  CertifyTrace trace_;
};

}  // namespace

CertifyResult certify(const Lattice& lattice, ElementIndex x, CertifyObserver* observer) {
  if (x >= lattice.size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  if (!lattice.is_interior(x))
    throw Error(ErrorCode::ElementOnBoundary,
                "'" + lattice.label(x) + "' is the bottom or top; x must be an interior element");
  Certifier certifier(observer, nullptr);
  auto cert = certifier.run(lattice, x, 0);
  return {std::move(cert), certifier.take_trace()};
}

CertifyResult certify(const Lattice& lattice, std::string_view x, CertifyObserver* observer) {
  return certify(lattice, lattice.index_of(x), observer);
}

CertificatePtr replay_trace(const Lattice& lattice, ElementIndex x, const CertifyTrace& trace) {
  if (!lattice.is_interior(x))
    throw Error(ErrorCode::ElementOnBoundary, "'" + lattice.label(x) + "' is not interior");
  Certifier certifier(nullptr, &trace);
  auto cert = certifier.run(lattice, x, 0);
  certifier.finish_replay();
  return cert;
}

namespace {

VerifyResult verify_at(const Complex& c, const Certificate& cert, const std::string& path) {
  auto fail = [&](std::string reason) { return VerifyResult{false, path, std::move(reason)}; };
  if (auto* leaf = std::get_if<LeafNode>(&cert.node)) {
    if (c.vertex_count() != 1)
      return fail("leaf on a complex with " + std::to_string(c.vertex_count()) + " vertices");
    if (c.vertices().front() != leaf->vertex)
      return fail("leaf names '" + leaf->vertex + "' but the complex is '" + c.vertices().front() + "'");
    return {};
  }
  if (auto* p = std::get_if<PruneNode>(&cert.node)) {
    for (const auto& r : p->removed)
      if (c.find_vertex(r)) return fail("pruned element '" + r + "' is a vertex of the complex");
    if (!p->child) return fail("prune without child");
    return verify_at(c, *p->child, path + "/child");
  }
  const auto& s = std::get<SplitNode>(cert.node);
  if (!s.dl || !s.lk) return fail("split without both children");
  if (!c.find_vertex(s.vertex)) return fail("split vertex '" + s.vertex + "' is not in the complex");
  if (c.vertex_count() < 2) return fail("split on a single-vertex complex");
  if (auto r = verify_at(deletion(c, s.vertex), *s.dl, path + "/dl"); !r) return r;
  std::optional<Complex> lk;
  try {
    lk.emplace(link(c, s.vertex));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyLink) throw;
    return fail("link of '" + s.vertex + "' is empty");
  }
  return verify_at(*lk, *s.lk, path + "/lk");
}

CollapseSequence extract_at(const Certificate& cert, const Complex& c) {
  if (auto* leaf = std::get_if<LeafNode>(&cert.node)) return {{}, leaf->vertex};
  if (auto* p = std::get_if<PruneNode>(&cert.node)) return extract_at(*p->child, c);
  const auto& s = std::get<SplitNode>(cert.node);
  const auto lk_seq = extract_at(*s.lk, link(c, s.vertex));
  auto dl_seq = extract_at(*s.dl, deletion(c, s.vertex));

  const std::size_t y = c.vertex_index(s.vertex);
  auto cone = [&](const Face& face) {
    FaceMask m = c.mask_of(face) | (FaceMask{1} << y);
    return c.labels_of(m);
  };
  CollapseSequence out;
  for (const auto& pair : lk_seq.pairs) out.pairs.push_back({cone(pair.free_face), cone(pair.coface)});
  out.pairs.push_back({{s.vertex}, cone({lk_seq.final_vertex})});
  out.pairs.insert(out.pairs.end(), dl_seq.pairs.begin(), dl_seq.pairs.end());
  out.final_vertex = dl_seq.final_vertex;
  return out;
}

}  // namespace

VerifyResult verify_certificate(const Complex& complex, const Certificate& cert) {
  return verify_at(complex, cert, "root");
}

CollapseSequence extract_collapses(const Certificate& cert, const Complex& complex) {
  if (auto r = verify_certificate(complex, cert); !r)
    throw Error(ErrorCode::VerificationFailed, "certificate fails at " + r.path + ": " + r.reason);
  auto seq = extract_at(cert, complex);
  try {
    replay_collapses(complex, seq);
  } catch (const NotFreePairError& e) {
    throw Error(ErrorCode::ReplayMismatch, std::string("extracted sequence does not replay: ") + e.what());
  }
  return seq;
}

}  // namespace nonevade
