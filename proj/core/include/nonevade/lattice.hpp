#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nonevade/bit_matrix.hpp"

namespace nonevade {

// Position of an element in its lattice's canonical element list.
using ElementIndex = std::size_t;

// Labels are nonempty and contain no whitespace, commas or '#'.
void validate_label(std::string_view label);

// Finite poset with a fixed canonical element order. The order relation is
// checked for reflexivity, antisymmetry and transitivity on construction.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<std::string> labels, BitMatrix leq);

  // Builds the reflexive-transitive closure of the given cover pairs
  // (first is covered by second). Throws CycleDetected.
  static Poset from_covers(std::vector<std::string> labels,
                           std::span<const std::pair<ElementIndex, ElementIndex>> covers);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex i) const { return labels_.at(i); }
  std::optional<ElementIndex> find(std::string_view label) const;
  ElementIndex index_of(std::string_view label) const;  // throws UnknownElement

  bool leq(ElementIndex u, ElementIndex v) const noexcept { return leq_.test(u, v); }
  bool less(ElementIndex u, ElementIndex v) const noexcept { return u != v && leq_.test(u, v); }
  bool comparable(ElementIndex u, ElementIndex v) const noexcept {
    return leq_.test(u, v) || leq_.test(v, u);
  }
  // Row u holds {v : u <= v}.
  const BitMatrix& order() const noexcept { return leq_; }

  // Induced subposet on `keep`, preserving canonical order (`keep` must be sorted).
  Poset restrict(std::span<const ElementIndex> keep) const;
  Poset dual() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementIndex> index_;
  BitMatrix leq_;
};

// Finite bounded lattice with precomputed meet and join tables.
class Lattice {
 public:
  // Throws NoUniqueBottom, NoUniqueTop or NotALatticeError.
  explicit Lattice(Poset poset);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::vector<std::string>& labels() const noexcept { return poset_.labels(); }
  const std::string& label(ElementIndex i) const { return poset_.label(i); }
  std::optional<ElementIndex> find(std::string_view label) const { return poset_.find(label); }
  ElementIndex index_of(std::string_view label) const { return poset_.index_of(label); }

  bool leq(ElementIndex u, ElementIndex v) const noexcept { return poset_.leq(u, v); }
  bool less(ElementIndex u, ElementIndex v) const noexcept { return poset_.less(u, v); }
  bool comparable(ElementIndex u, ElementIndex v) const noexcept {
    return poset_.comparable(u, v);
  }

  ElementIndex bottom() const noexcept { return bottom_; }
  ElementIndex top() const noexcept { return top_; }
  ElementIndex meet(ElementIndex u, ElementIndex v) const noexcept {
    return meet_[u * size() + v];
  }
  ElementIndex join(ElementIndex u, ElementIndex v) const noexcept {
    return join_[u * size() + v];
  }

  bool is_interior(ElementIndex e) const noexcept { return e != bottom_ && e != top_; }
  bool is_atom(ElementIndex e) const;
  bool is_coatom(ElementIndex e) const;
  std::vector<ElementIndex> atoms() const;
  std::vector<ElementIndex> coatoms() const;
  std::vector<ElementIndex> interior_elements() const;
  // Cover pairs (u, v), u covered by v, sorted by (u, v).
  std::vector<std::pair<ElementIndex, ElementIndex>> covers() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.poset_ == b.poset_; }

 private:
  Poset poset_;
  ElementIndex bottom_ = 0;
  ElementIndex top_ = 0;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
};

// Largest lattice the dense meet/join tables are built for.
inline constexpr std::size_t kMaxLatticeSize = 4096;

// A subset of a lattice's interior L \ {0, 1}. Holds a reference: the lattice
// must outlive the set.
class InteriorSet {
 public:
  InteriorSet(const Lattice& lattice, std::vector<ElementIndex> members);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const std::vector<ElementIndex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::vector<std::string> labels() const;

 private:
  const Lattice* lattice_;
  std::vector<ElementIndex> members_;
};

InteriorSet interior(const Lattice& lattice);

// {y : x ^ y = 0 and x v y = 1}, in canonical order.
std::vector<ElementIndex> complements(const Lattice& lattice, ElementIndex x);

// The interior of P = L \ Co(x).
InteriorSet interior_without_complements(const Lattice& lattice, ElementIndex x);

// Closed interval [u, v] as a lattice. Throws NotComparable.
Lattice interval(const Lattice& lattice, ElementIndex u, ElementIndex v);

// L \ {y} for an atom (coatom) y of L; the result is revalidated.
Lattice remove_atom(const Lattice& lattice, ElementIndex y);
Lattice remove_coatom(const Lattice& lattice, ElementIndex y);

// Induced subposet on the complement of `removed`, revalidated as a lattice.
Lattice remove_elements(const Lattice& lattice, std::span<const ElementIndex> removed);

// Order reversed; element list, and therefore labels, unchanged.
Lattice dual(const Lattice& lattice);

// Connected components of the comparability graph on the interior. Members
// are in canonical order; components are ordered by their first member.
std::vector<std::vector<ElementIndex>> comparability_components(const Lattice& lattice);

std::vector<std::string> labels_of(const Lattice& lattice, std::span<const ElementIndex> elements);

}  // namespace nonevade
