#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "nonevade/lattice.hpp"
#include "nonevade/order_complex.hpp"

namespace nonevade {

// Brute-force ground truth, written against the definitions and sharing no
// code path with the certifier.

inline constexpr std::size_t kDefaultNonevasiveCap = 12;       // vertices
inline constexpr std::size_t kDefaultCollapsibleCap = 1 << 14;  // faces

// Canonical serialization of a complex: equal complexes give equal keys.
std::string memo_key(const Complex& complex);

// Literal recursion: one vertex, or some vertex whose deletion and link are
// both nonevasive. An empty link never is. Throws CapExceeded.
bool brute_nonevasive(const Complex& complex, std::size_t vertex_cap = kDefaultNonevasiveCap);

// Backtracking search over elementary collapses down to a single vertex.
// Returns a witness or nullopt if none exists. Throws CapExceeded.
std::optional<CollapseSequence> brute_collapsible(const Complex& complex,
                                                  std::size_t face_cap = kDefaultCollapsibleCap);

// mu(0, 1) by mu(0, 0) = 1, mu(0, v) = -sum_{u < v} mu(0, u).
std::int64_t mobius(const Lattice& lattice);

// First interior element, in canonical order, with no complement.
std::optional<ElementIndex> find_noncomplemented_element(const Lattice& lattice);

}  // namespace nonevade
