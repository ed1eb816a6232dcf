#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nonevade/lattice.hpp"

namespace nonevade {

// A face as a bitmask over its complex's vertex list.
using FaceMask = std::uint64_t;
inline constexpr std::size_t kMaxComplexVertices = 64;

// A face as vertex labels, in the complex's vertex order.
using Face = std::vector<std::string>;

// Abstract simplicial complex stored by its facets. Every vertex lies in some
// facet and the empty face is implicit. Equality is label-exact: same vertex
// list, same facets.
class Complex {
 public:
  // Non-maximal and repeated facets are dropped; facets are kept sorted by
  // their vertex sequences. Throws InvalidComplex or ComplexTooLarge.
  Complex(std::vector<std::string> vertices, std::vector<FaceMask> facets);
  static Complex from_faces(std::vector<std::string> vertices, std::span<const Face> facets);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<FaceMask>& facets() const noexcept { return facets_; }

  std::optional<std::size_t> find_vertex(std::string_view label) const;
  std::size_t vertex_index(std::string_view label) const;  // throws UnknownVertex
  FaceMask mask_of(std::span<const std::string> face) const;
  Face labels_of(FaceMask face) const;

  bool contains(FaceMask face) const noexcept;
  // All nonempty faces, by size then vertex sequence.
  std::vector<FaceMask> faces() const;
  std::size_t face_count() const { return faces().size(); }
  // f[k] = number of faces with k + 1 vertices.
  std::vector<std::size_t> f_vector() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<FaceMask> facets_;
};

// Sorts masks by their ascending vertex-index sequences.
bool face_order_less(FaceMask a, FaceMask b) noexcept;

// Chains of the interior poset. Throws EmptyInterior.
Complex order_complex(const InteriorSet& interior);

// Faces s with v not in s and s + v a face. Throws UnknownVertex, or
// EmptyLink when v lies in no edge.
Complex link(const Complex& complex, std::string_view vertex);

// Faces not containing v. Throws UnknownVertex or LastVertex.
Complex deletion(const Complex& complex, std::string_view vertex);

// sum_k (-1)^k f_k - 1.
std::int64_t reduced_euler(const Complex& complex);

// Reduced Euler characteristic of the order complex of the lattice's
// interior; -1 for an empty interior, whose complex has only the empty face.
std::int64_t interior_reduced_euler(const Lattice& lattice);

struct CollapsePair {
  Face free_face;
  Face coface;
  friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
};

struct CollapseSequence {
  std::vector<CollapsePair> pairs;
  std::string final_vertex;
  friend bool operator==(const CollapseSequence&, const CollapseSequence&) = default;
};

// Removes each pair in order, requiring it to be free in the current complex,
// and checks that exactly {final_vertex} remains. Throws NotFreePairError or
// ReplayMismatch.
Complex replay_collapses(const Complex& complex, const CollapseSequence& sequence);

}  // namespace nonevade
