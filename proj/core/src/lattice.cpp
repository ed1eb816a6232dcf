#include "nonevade/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nonevade/error.hpp"

namespace nonevade {

namespace {

using Word = BitMatrix::Word;

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

template <typename Fn>
void for_each_bit(std::span<const Word> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      fn(w * BitMatrix::kWordBits + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
}

std::unordered_map<std::string, ElementIndex> build_index(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, ElementIndex> index;
  index.reserve(labels.size());
  for (ElementIndex i = 0; i < labels.size(); ++i) {
    validate_label(labels[i]);
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorCode::InvalidLabel, "duplicate element label '" + labels[i] + "'");
  }
  return index;
}

// For the bound set `bounds` (common lower bounds, or common upper bounds),
// returns the element whose own down-set (up-set) equals it, if any.
// `closure` is the matrix whose rows are down-sets (up-sets).
std::optional<ElementIndex> extremal_of(std::span<const Word> bounds, const BitMatrix& closure,
                                        const std::vector<std::size_t>& closure_size) {
  std::optional<ElementIndex> best;
  for_each_bit(bounds, [&](std::size_t e) {
    if (!best || closure_size[e] > closure_size[*best]) best = e;
  });
  if (best && std::ranges::equal(closure.row(*best), bounds)) return best;
  return std::nullopt;
}

// Maximal elements of `bounds` with respect to the relation whose rows in
// `closure` list everything "below" each element.
std::vector<std::string> extremal_elements(std::span<const Word> bounds, const BitMatrix& closure,
                                           const Poset& poset) {
  std::vector<std::size_t> members;
  for_each_bit(bounds, [&](std::size_t e) { members.push_back(e); });
  std::vector<std::string> out;
  for (std::size_t e : members) {
    const bool dominated = std::ranges::any_of(
        members, [&](std::size_t f) { return f != e && closure.test(f, e); });
    if (!dominated) out.push_back(poset.label(e));
  }
  return out;
}

}  // namespace

void validate_label(std::string_view label) {
  if (label.empty()) throw Error(ErrorCode::InvalidLabel, "empty element label");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#')
      throw Error(ErrorCode::InvalidLabel, "element label '" + std::string(label) +
                                               "' contains whitespace, ',' or '#'");
  }
}

Poset::Poset(std::vector<std::string> labels, BitMatrix leq)
    : labels_(std::move(labels)), index_(build_index(labels_)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n)
    throw Error(ErrorCode::InvalidOrder, "order matrix size does not match element count");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_.test(i, i))
      throw Error(ErrorCode::InvalidOrder, "order is not reflexive at '" + labels_[i] + "'");
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_.test(i, j) && leq_.test(j, i))
        throw Error(ErrorCode::InvalidOrder, "order is not antisymmetric on '" + labels_[i] +
                                                 "', '" + labels_[j] + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    for_each_bit(leq_.row(i), [&](std::size_t j) {
      if (!is_subset(leq_.row(j), leq_.row(i)))
        throw Error(ErrorCode::InvalidOrder, "order is not transitive through '" + labels_[j] + "'");
    });
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::span<const std::pair<ElementIndex, ElementIndex>> covers) {
  const std::size_t n = labels.size();
  std::vector<std::vector<ElementIndex>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [u, v] : covers) {
    if (u >= n || v >= n) throw Error(ErrorCode::UnknownElement, "cover refers to unknown element");
    if (u == v)
      throw Error(ErrorCode::CycleDetected, "cycle detected: '" + labels[u] + "' covers itself");
    succ[u].push_back(v);
    ++indegree[v];
  }

  // Kahn's algorithm; elements left over lie on or above a cycle.
  std::vector<ElementIndex> topo;
  topo.reserve(n);
  for (ElementIndex i = 0; i < n; ++i)
    if (indegree[i] == 0) topo.push_back(i);
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (ElementIndex v : succ[topo[head]])
      if (--indegree[v] == 0) topo.push_back(v);
  if (topo.size() != n) {
    std::string msg = "cycle detected among:";
    for (ElementIndex i = 0; i < n; ++i)
      if (indegree[i] != 0) msg += " " + labels[i];
    throw Error(ErrorCode::CycleDetected, msg);
  }

  BitMatrix leq(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const ElementIndex u = *it;
    leq.set(u, u);
    auto row = leq.row(u);
    for (ElementIndex v : succ[u]) {
      auto above = leq.row(v);
      for (std::size_t w = 0; w < row.size(); ++w) row[w] |= above[w];
    }
  }
  return Poset(std::move(labels), std::move(leq));
}

std::optional<ElementIndex> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(label) + "'");
}

Poset Poset::restrict(std::span<const ElementIndex> keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (ElementIndex i : keep) labels.push_back(labels_.at(i));
  BitMatrix leq(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (leq_.test(keep[a], keep[b])) leq.set(a, b);
  return Poset(std::move(labels), std::move(leq));
}

Poset Poset::dual() const { return Poset(labels_, leq_.transposed()); }

Lattice::Lattice(Poset poset) : poset_(std::move(poset)) {
  const std::size_t n = poset_.size();
  if (n > kMaxLatticeSize)
    throw Error(ErrorCode::ParamOutOfRange,
                "lattice has " + std::to_string(n) + " elements; limit is " +
                    std::to_string(kMaxLatticeSize));
  const BitMatrix& up = poset_.order();
  const BitMatrix down = up.transposed();
  std::vector<std::size_t> up_size(n), down_size(n);
  for (std::size_t i = 0; i < n; ++i) {
    up_size[i] = up.row_count(i);
    down_size[i] = down.row_count(i);
  }

  std::vector<ElementIndex> minimal, maximal;
  for (std::size_t i = 0; i < n; ++i) {
    if (down_size[i] == 1) minimal.push_back(i);
    if (up_size[i] == 1) maximal.push_back(i);
  }
  auto describe = [&](const std::vector<ElementIndex>& v) {
    std::string s;
    for (ElementIndex e : v) s += " " + poset_.label(e);
    return s;
  };
  if (minimal.size() != 1)
    throw Error(ErrorCode::NoUniqueBottom, "no unique bottom; minimal elements:" + describe(minimal));
  if (maximal.size() != 1)
    throw Error(ErrorCode::NoUniqueTop, "no unique top; maximal elements:" + describe(maximal));
  bottom_ = minimal.front();
  top_ = maximal.front();

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  std::vector<Word> bounds(up.words_per_row());
  for (std::size_t u = 0; u < n; ++u) {
    meet_[u * n + u] = join_[u * n + u] = static_cast<std::uint32_t>(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      ElementIndex m, j;
      if (poset_.leq(u, v)) {
        m = u;
        j = v;
      } else if (poset_.leq(v, u)) {
        m = v;
        j = u;
      } else {
        auto du = down.row(u), dv = down.row(v);
        for (std::size_t w = 0; w < bounds.size(); ++w) bounds[w] = du[w] & dv[w];
        auto glb = extremal_of(bounds, down, down_size);
        if (!glb)
          throw NotALatticeError(poset_.label(u), poset_.label(v),
                                 extremal_elements(bounds, down, poset_), false);
        auto uu = up.row(u), uv = up.row(v);
        for (std::size_t w = 0; w < bounds.size(); ++w) bounds[w] = uu[w] & uv[w];
        auto lub = extremal_of(bounds, up, up_size);
        if (!lub)
          throw NotALatticeError(poset_.label(u), poset_.label(v),
                                 extremal_elements(bounds, up, poset_), true);
        m = *glb;
        j = *lub;
      }
      meet_[u * n + v] = meet_[v * n + u] = static_cast<std::uint32_t>(m);
      join_[u * n + v] = join_[v * n + u] = static_cast<std::uint32_t>(j);
    }
  }
}

bool Lattice::is_atom(ElementIndex e) const {
  if (e == bottom_) return false;
  for (ElementIndex w = 0; w < size(); ++w)
    if (w != e && w != bottom_ && leq(w, e)) return false;
  return true;
}

bool Lattice::is_coatom(ElementIndex e) const {
  if (e == top_) return false;
  for (ElementIndex w = 0; w < size(); ++w)
    if (w != e && w != top_ && leq(e, w)) return false;
  return true;
}

std::vector<ElementIndex> Lattice::atoms() const {
  std::vector<ElementIndex> out;
  for (ElementIndex e = 0; e < size(); ++e)
    if (is_atom(e)) out.push_back(e);
  return out;
}

std::vector<ElementIndex> Lattice::coatoms() const {
  std::vector<ElementIndex> out;
  for (ElementIndex e = 0; e < size(); ++e)
    if (is_coatom(e)) out.push_back(e);
  return out;
}

std::vector<ElementIndex> Lattice::interior_elements() const {
  std::vector<ElementIndex> out;
  for (ElementIndex e = 0; e < size(); ++e)
    if (is_interior(e)) out.push_back(e);
  return out;
}

std::vector<std::pair<ElementIndex, ElementIndex>> Lattice::covers() const {
  const BitMatrix& up = poset_.order();
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (ElementIndex u = 0; u < size(); ++u) {
    for_each_bit(up.row(u), [&](std::size_t v) {
      if (v == u) return;
      // u < v is a cover iff nothing lies strictly between.
      std::size_t between = 0;
      for_each_bit(up.row(u), [&](std::size_t w) {
        if (w != u && w != v && leq(w, v)) ++between;
      });
      if (between == 0) out.emplace_back(u, v);
    });
  }
  return out;
}

InteriorSet::InteriorSet(const Lattice& lattice, std::vector<ElementIndex> members)
    : lattice_(&lattice), members_(std::move(members)) {
  std::ranges::sort(members_);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (ElementIndex m : members_) {
    if (m >= lattice.size())
      throw Error(ErrorCode::UnknownElement, "interior member out of range");
    if (!lattice.is_interior(m))
      throw Error(ErrorCode::ElementOnBoundary,
                  "'" + lattice.label(m) + "' is the bottom or top, not an interior element");
  }
}

std::vector<std::string> InteriorSet::labels() const { return labels_of(*lattice_, members_); }

InteriorSet interior(const Lattice& lattice) {
  return InteriorSet(lattice, lattice.interior_elements());
}

std::vector<ElementIndex> complements(const Lattice& lattice, ElementIndex x) {
  if (x >= lattice.size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  std::vector<ElementIndex> out;
  for (ElementIndex y = 0; y < lattice.size(); ++y)
    if (lattice.meet(x, y) == lattice.bottom() && lattice.join(x, y) == lattice.top())
      out.push_back(y);
  return out;
}

InteriorSet interior_without_complements(const Lattice& lattice, ElementIndex x) {
  const auto co = complements(lattice, x);
  std::vector<ElementIndex> members;
  for (ElementIndex e : lattice.interior_elements())
    if (!std::ranges::binary_search(co, e)) members.push_back(e);
  return InteriorSet(lattice, std::move(members));
}

Lattice interval(const Lattice& lattice, ElementIndex u, ElementIndex v) {
  if (!lattice.leq(u, v))
    throw Error(ErrorCode::NotComparable,
                "'" + lattice.label(u) + "' is not below '" + lattice.label(v) + "'");
  std::vector<ElementIndex> keep;
  for (ElementIndex w = 0; w < lattice.size(); ++w)
    if (lattice.leq(u, w) && lattice.leq(w, v)) keep.push_back(w);
  return Lattice(lattice.poset().restrict(keep));
}

Lattice remove_elements(const Lattice& lattice, std::span<const ElementIndex> removed) {
  std::vector<bool> drop(lattice.size(), false);
  for (ElementIndex r : removed) drop.at(r) = true;
  std::vector<ElementIndex> keep;
  for (ElementIndex w = 0; w < lattice.size(); ++w)
    if (!drop[w]) keep.push_back(w);
  return Lattice(lattice.poset().restrict(keep));
}

Lattice remove_atom(const Lattice& lattice, ElementIndex y) {
  if (y >= lattice.size() || !lattice.is_atom(y))
    throw Error(ErrorCode::NotAnAtom, "'" + lattice.label(y) + "' is not an atom");
  const ElementIndex removed[] = {y};
  return remove_elements(lattice, removed);
}

Lattice remove_coatom(const Lattice& lattice, ElementIndex y) {
  if (y >= lattice.size() || !lattice.is_coatom(y))
    throw Error(ErrorCode::NotACoatom, "'" + lattice.label(y) + "' is not a coatom");
  const ElementIndex removed[] = {y};
  return remove_elements(lattice, removed);
}

Lattice dual(const Lattice& lattice) { return Lattice(lattice.poset().dual()); }

std::vector<std::vector<ElementIndex>> comparability_components(const Lattice& lattice) {
  const auto inner = lattice.interior_elements();
  std::vector<std::size_t> parent(lattice.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = i + 1; j < inner.size(); ++j)
      if (lattice.comparable(inner[i], inner[j])) {
        const auto a = find(inner[i]), b = find(inner[j]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  std::vector<std::vector<ElementIndex>> components;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (ElementIndex e : inner) {
    const auto root = find(e);
    auto [it, fresh] = slot.emplace(root, components.size());
    if (fresh) components.emplace_back();
    components[it->second].push_back(e);
  }
  return components;
}

std::vector<std::string> labels_of(const Lattice& lattice, std::span<const ElementIndex> elements) {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (ElementIndex e : elements) out.push_back(lattice.label(e));
  return out;
}

}  // namespace nonevade
