#include "nonevade/order_complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "nonevade/error.hpp"

namespace nonevade {

namespace {

FaceMask bit(std::size_t i) { return FaceMask{1} << i; }

// Packs the bits of `mask` selected by `keep` into the low positions.
FaceMask compress(FaceMask mask, FaceMask keep) {
  FaceMask out = 0;
  std::size_t pos = 0;
  while (keep) {
    const int b = std::countr_zero(keep);
    if (mask >> b & 1U) out |= bit(pos);
    ++pos;
    keep &= keep - 1;
  }
  return out;
}

std::vector<std::string> select(const std::vector<std::string>& vertices, FaceMask keep) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (keep >> i & 1U) out.push_back(vertices[i]);
  return out;
}

}  // namespace

bool face_order_less(FaceMask a, FaceMask b) noexcept {
  while (a && b) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

Complex::Complex(std::vector<std::string> vertices, std::vector<FaceMask> facets)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidComplex, "complex has no vertices");
  if (vertices_.size() > kMaxComplexVertices)
    throw Error(ErrorCode::ComplexTooLarge, "complex has " + std::to_string(vertices_.size()) +
                                                " vertices; limit is " +
                                                std::to_string(kMaxComplexVertices));
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    validate_label(v);
    if (!seen.insert(v).second)
      throw Error(ErrorCode::InvalidComplex, "duplicate vertex '" + v + "'");
  }
  const FaceMask all = vertices_.size() == 64 ? ~FaceMask{0} : bit(vertices_.size()) - 1;
  FaceMask covered = 0;
  for (FaceMask f : facets) {
    if (f == 0) throw Error(ErrorCode::InvalidComplex, "empty facet");
    if (f & ~all) throw Error(ErrorCode::InvalidComplex, "facet refers to unknown vertex");
    covered |= f;
  }
  if (covered != all)
    throw Error(ErrorCode::InvalidComplex,
                "vertex '" + vertices_[static_cast<std::size_t>(std::countr_zero(~covered & all))] +
                    "' lies in no facet");

  std::ranges::sort(facets);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (FaceMask f : facets) {
    const bool dominated =
        std::ranges::any_of(facets, [f](FaceMask g) { return g != f && (f & ~g) == 0; });
    if (!dominated) facets_.push_back(f);
  }
  std::ranges::sort(facets_, face_order_less);
}

Complex Complex::from_faces(std::vector<std::string> vertices, std::span<const Face> facets) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<FaceMask> masks;
  for (const auto& f : facets) {
    FaceMask m = 0;
    for (const auto& v : f) {
      auto it = index.find(v);
      if (it == index.end() || it->second >= kMaxComplexVertices)
        throw Error(ErrorCode::InvalidComplex, "facet vertex '" + v + "' is not in the vertex list");
      m |= bit(it->second);
    }
    masks.push_back(m);
  }
  return Complex(std::move(vertices), std::move(masks));
}

std::optional<std::size_t> Complex::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::size_t Complex::vertex_index(std::string_view label) const {
  if (auto i = find_vertex(label)) return *i;
  throw Error(ErrorCode::UnknownVertex, "'" + std::string(label) + "' is not a vertex");
}

FaceMask Complex::mask_of(std::span<const std::string> face) const {
  FaceMask m = 0;
  for (const auto& v : face) m |= bit(vertex_index(v));
  return m;
}

Face Complex::labels_of(FaceMask face) const { return select(vertices_, face); }

bool Complex::contains(FaceMask face) const noexcept {
  return std::ranges::any_of(facets_, [face](FaceMask f) { return (face & ~f) == 0; });
}

std::vector<FaceMask> Complex::faces() const {
  std::unordered_set<FaceMask> all;
  for (FaceMask f : facets_) {
    // Nonempty submasks of f.
    for (FaceMask s = f; s; s = (s - 1) & f) all.insert(s);
  }
  std::vector<FaceMask> out(all.begin(), all.end());
  std::ranges::sort(out, [](FaceMask a, FaceMask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return face_order_less(a, b);
  });
  return out;
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> f;
  for (FaceMask s : faces()) {
    const auto k = static_cast<std::size_t>(std::popcount(s)) - 1;
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

Complex order_complex(const InteriorSet& interior) {
  if (interior.empty()) throw Error(ErrorCode::EmptyInterior, "order complex of an empty poset");
  const Lattice& lattice = interior.lattice();
  const auto& members = interior.members();
  const std::size_t n = members.size();
  if (n > kMaxComplexVertices)
    throw Error(ErrorCode::ComplexTooLarge, "order complex would have " + std::to_string(n) +
                                                " vertices; limit is " +
                                                std::to_string(kMaxComplexVertices));

  auto less = [&](std::size_t i, std::size_t j) { return lattice.less(members[i], members[j]); };
  // Covers within the induced subposet.
  std::vector<std::vector<std::size_t>> up(n);
  std::vector<bool> minimal(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      minimal[j] = false;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (less(i, k) && less(k, j)) direct = false;
      if (direct) up[i].push_back(j);
    }

  // Maximal chains are the cover paths from a minimal to a maximal element.
  std::vector<FaceMask> facets;
  auto walk = [&](auto&& self, std::size_t at, FaceMask chain) -> void {
    chain |= bit(at);
    if (up[at].empty()) {
      facets.push_back(chain);
      return;
    }
    for (std::size_t next : up[at]) self(self, next, chain);
  };
  for (std::size_t i = 0; i < n; ++i)
    if (minimal[i]) walk(walk, i, 0);

  return Complex(labels_of(lattice, members), std::move(facets));
}

Complex link(const Complex& complex, std::string_view vertex) {
  const FaceMask v = bit(complex.vertex_index(vertex));
  std::vector<FaceMask> rest;
  FaceMask support = 0;
  for (FaceMask f : complex.facets())
    if ((f & v) && f != v) {
      rest.push_back(f & ~v);
      support |= f & ~v;
    }
  if (support == 0)
    throw Error(ErrorCode::EmptyLink, "link of isolated vertex '" + std::string(vertex) + "' is empty");
  for (FaceMask& f : rest) f = compress(f, support);
  return Complex(select(complex.vertices(), support), std::move(rest));
}

Complex deletion(const Complex& complex, std::string_view vertex) {
  const std::size_t idx = complex.vertex_index(vertex);
  if (complex.vertex_count() < 2)
    throw Error(ErrorCode::LastVertex, "cannot delete the only vertex '" + std::string(vertex) + "'");
  const FaceMask v = bit(idx);
  const FaceMask keep = ~v & (complex.vertex_count() == 64 ? ~FaceMask{0}
                                                           : bit(complex.vertex_count()) - 1);
  std::vector<FaceMask> rest;
  for (FaceMask f : complex.facets())
    if (FaceMask g = f & ~v) rest.push_back(compress(g, keep));
  return Complex(select(complex.vertices(), keep), std::move(rest));
}

std::int64_t reduced_euler(const Complex& complex) {
  std::int64_t chi = -1;
  const auto f = complex.f_vector();
  for (std::size_t k = 0; k < f.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
  return chi;
}

std::int64_t interior_reduced_euler(const Lattice& lattice) {
  const auto inner = interior(lattice);
  if (inner.empty()) return -1;
  return reduced_euler(order_complex(inner));
}

Complex replay_collapses(const Complex& complex, const CollapseSequence& sequence) {
  const auto all = complex.faces();
  std::unordered_set<FaceMask> faces(all.begin(), all.end());
  const std::size_t n = complex.vertex_count();

  auto to_mask = [&](const Face& face) -> std::optional<FaceMask> {
    FaceMask m = 0;
    for (const auto& v : face) {
      auto i = complex.find_vertex(v);
      if (!i || (m & bit(*i))) return std::nullopt;
      m |= bit(*i);
    }
    return m;
  };

  for (std::size_t step = 0; step < sequence.pairs.size(); ++step) {
    const auto& pair = sequence.pairs[step];
    const auto sigma = to_mask(pair.free_face);
    if (!sigma || *sigma == 0 || !faces.contains(*sigma))
      throw NotFreePairError(step, FreePairFailure::NotAFace);
    // A face is free iff exactly one face has one more vertex and contains it;
    // any larger coface would contain at least two of those.
    std::size_t cofaces = 0;
    FaceMask unique = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (*sigma & bit(u)) continue;
      if (faces.contains(*sigma | bit(u))) {
        ++cofaces;
        unique = *sigma | bit(u);
      }
    }
    if (cofaces > 1) throw NotFreePairError(step, FreePairFailure::MultipleCofaces);
    const auto tau = to_mask(pair.coface);
    if (cofaces == 0 || !tau || *tau != unique)
      throw NotFreePairError(step, FreePairFailure::WrongCoface);
    faces.erase(*sigma);
    faces.erase(unique);
  }

  const auto final_index = complex.find_vertex(sequence.final_vertex);
  if (!final_index || faces.size() != 1 || !faces.contains(bit(*final_index)))
    throw Error(ErrorCode::ReplayMismatch,
                "collapse replay leaves " + std::to_string(faces.size()) +
                    " faces, not the single vertex '" + sequence.final_vertex + "'");
  return Complex({sequence.final_vertex}, {FaceMask{1}});
}

}  // namespace nonevade
