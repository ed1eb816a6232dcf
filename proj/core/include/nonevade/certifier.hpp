#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonevade/lattice.hpp"
#include "nonevade/order_complex.hpp"

namespace nonevade {

// Which branch of the induction produced a split, and whether the split
// vertex is an atom or a coatom of the ambient lattice.
enum class SplitMode { Case1Atom, Case1Coatom, Case2Atom, Case2Coatom };

std::string_view split_mode_name(SplitMode mode);
std::optional<SplitMode> parse_split_mode(std::string_view name);

struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

struct LeafNode {
  std::string vertex;
};

// Elements removed from the ambient lattice without changing the complex.
struct PruneNode {
  std::vector<std::string> removed;
  CertificatePtr child;
};

// Audit metadata for a split: the interval the link child was certified on,
// the element it was certified for, and any complements of x trimmed from
// the interval because they do not complement z there.
struct SplitContext {
  std::string bottom;
  std::string top;
  std::string z;
  std::vector<std::string> trimmed;
};

struct SplitNode {
  std::string vertex;
  SplitMode mode = SplitMode::Case1Atom;
  SplitContext context;
  CertificatePtr dl;
  CertificatePtr lk;
};

// Nonevasiveness witness: a tree of vertex eliminations.
struct Certificate {
  std::variant<LeafNode, PruneNode, SplitNode> node;
};

bool operator==(const Certificate& a, const Certificate& b);

CertificatePtr make_leaf(std::string vertex);
CertificatePtr make_prune(std::vector<std::string> removed, CertificatePtr child);
CertificatePtr make_split(std::string vertex, SplitMode mode, SplitContext context,
                          CertificatePtr dl, CertificatePtr lk);

// Vertex set a certificate speaks about: a leaf's vertex, or a split vertex
// together with everything its deletion child covers.
std::set<std::string> certificate_vertices(const Certificate& cert);

std::size_t certificate_size(const Certificate& cert);

enum class Decision { Leaf, Case1Atom, Case1Coatom, Prune, Case2Atom, Case2Coatom };

std::string_view decision_name(Decision decision);

struct Rejection {
  std::string candidate;
  std::string reason;  // "below-x", "above-x" or "complement"
};

// One certification step, recorded in preorder.
struct TraceEntry {
  std::size_t depth = 0;
  std::size_t lattice_size = 0;
  std::size_t interior_size = 0;  // |P̄| at this step
  std::string element;
  Decision decision = Decision::Leaf;
  std::string vertex;                // split or leaf vertex
  std::vector<std::string> removed;  // prune only
  std::vector<Rejection> rejected;   // case 1 candidates that failed
};

struct CertifyTrace {
  std::vector<TraceEntry> entries;
};

struct CertifyResult {
  CertificatePtr certificate;
  CertifyTrace trace;
};

// Lattices passed to observers live only for the duration of the call.
struct SplitEvent {
  const Lattice& lattice;
  ElementIndex element;
  ElementIndex vertex;
  SplitMode mode;
  const Lattice& deletion_lattice;
  ElementIndex deletion_element;
  const Lattice& link_lattice;
  ElementIndex link_element;
};

struct PruneEvent {
  const Lattice& lattice;
  ElementIndex element;
  std::span<const ElementIndex> removed;
  const Lattice& pruned;
  ElementIndex pruned_element;
};

class CertifyObserver {
 public:
  virtual ~CertifyObserver() = default;
  virtual void on_split(const SplitEvent&) {}
  virtual void on_prune(const PruneEvent&) {}
};

// Certificate that the order complex of the interior of L \ Co(x) is
// nonevasive. Every step the induction relies on is re-checked at runtime;
// a failed check throws InternalAssertion and indicates a bug. Throws
// ElementOnBoundary if x is 0 or 1.
CertifyResult certify(const Lattice& lattice, ElementIndex x, CertifyObserver* observer = nullptr);
CertifyResult certify(const Lattice& lattice, std::string_view x, CertifyObserver* observer = nullptr);

// Re-runs certification taking every decision from `trace` instead of
// scanning, checking each against its case's preconditions. Throws
// TraceMismatch.
CertificatePtr replay_trace(const Lattice& lattice, ElementIndex x, const CertifyTrace& trace);

struct VerifyResult {
  bool ok = true;
  std::string path;  // e.g. "root/dl/lk"; empty when ok
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

// Complex-level check of the nonevasiveness recursion; independent of any
// lattice. Split modes and contexts are not consulted.
VerifyResult verify_certificate(const Complex& complex, const Certificate& cert);

// Lifts the link child's collapses into the star of the split vertex,
// collapses the remaining edge, then continues with the deletion child.
// Throws VerificationFailed if the certificate does not verify.
CollapseSequence extract_collapses(const Certificate& cert, const Complex& complex);

}  // namespace nonevade
