#include "nonevade/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "nonevade/error.hpp"

namespace nonevade {

namespace {

using Facets = std::vector<FaceMask>;

std::string key_of(const Facets& sorted) {
  return std::string(reinterpret_cast<const char*>(sorted.data()), sorted.size() * sizeof(FaceMask));
}

Facets maximal(Facets faces) {
  std::ranges::sort(faces);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  Facets out;
  for (FaceMask f : faces)
    if (std::ranges::none_of(faces, [f](FaceMask g) { return g != f && (f & ~g) == 0; }))
      out.push_back(f);
  return out;
}

class NonevasiveSearch {
 public:
  bool run(const Facets& facets) {
    FaceMask support = 0;
    for (FaceMask f : facets) support |= f;
    if (std::popcount(support) == 1) return true;
    const auto key = key_of(facets);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = false;
    for (FaceMask rest = support; rest && !result; rest &= rest - 1) {
      const FaceMask v = rest & (~rest + 1);
      Facets lk, dl;
      for (FaceMask f : facets) {
        if ((f & v) && f != v) lk.push_back(f & ~v);
        if (FaceMask g = f & ~v) dl.push_back(g);
      }
      if (lk.empty()) continue;
      result = run(maximal(std::move(dl))) && run(maximal(std::move(lk)));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::unordered_map<std::string, bool> memo_;
};

class CollapseSearch {
 public:
  explicit CollapseSearch(std::size_t n) : n_(n) {}

  // `faces` sorted; on success `path` holds the pairs, innermost last.
  bool run(const Facets& faces, std::vector<std::pair<FaceMask, FaceMask>>& path) {
    if (faces.size() == 1 && std::popcount(faces.front()) == 1) return true;
    const auto key = key_of(faces);
    if (dead_.contains(key)) return false;
    const std::unordered_set<FaceMask> present(faces.begin(), faces.end());
    for (FaceMask sigma : faces) {
      FaceMask coface = 0;
      int count = 0;
      for (std::size_t u = 0; u < n_ && count < 2; ++u) {
        const FaceMask b = FaceMask{1} << u;
        if (!(sigma & b) && present.contains(sigma | b)) {
          ++count;
          coface = sigma | b;
        }
      }
      if (count != 1) continue;
      Facets next;
      next.reserve(faces.size() - 2);
      for (FaceMask f : faces)
        if (f != sigma && f != coface) next.push_back(f);
      path.emplace_back(sigma, coface);
      if (run(next, path)) return true;
      path.pop_back();
    }
    dead_.insert(key);
    return false;
  }

 private:
  std::size_t n_;
  std::unordered_set<std::string> dead_;
};

}  // namespace

std::string memo_key(const Complex& complex) {
  std::string key;
  for (const auto& v : complex.vertices()) key += v + ",";
  key += "|";
  for (FaceMask f : complex.facets()) {
    for (const auto& v : complex.labels_of(f)) key += v + ",";
    key += ";";
  }
  return key;
}

bool brute_nonevasive(const Complex& complex, std::size_t vertex_cap) {
  if (complex.vertex_count() > vertex_cap)
    throw Error(ErrorCode::CapExceeded, "brute_nonevasive: " + std::to_string(complex.vertex_count()) +
                                            " vertices exceed cap " + std::to_string(vertex_cap));
  NonevasiveSearch search;
  return search.run(maximal(complex.facets()));
}

std::optional<CollapseSequence> brute_collapsible(const Complex& complex, std::size_t face_cap) {
  auto cap_exceeded = [&](const std::string& count) {
    return Error(ErrorCode::CapExceeded,
                 "brute_collapsible: " + count + " faces exceed cap " + std::to_string(face_cap));
  };
  // A single facet already contributes 2^k - 1 faces.
  for (FaceMask f : complex.facets()) {
    const auto k = static_cast<std::size_t>(std::popcount(f));
    if (k >= 63 || (std::size_t{1} << k) - 1 > face_cap) throw cap_exceeded("at least 2^" + std::to_string(k) + " - 1");
  }
  auto faces = complex.faces();
  if (faces.size() > face_cap) throw cap_exceeded(std::to_string(faces.size()));
  std::ranges::sort(faces);

  CollapseSearch search(complex.vertex_count());
  std::vector<std::pair<FaceMask, FaceMask>> path;
  if (!search.run(faces, path)) return std::nullopt;

  // The lone survivor is the vertex not removed by any pair.
  std::unordered_set<FaceMask> left(faces.begin(), faces.end());
  CollapseSequence seq;
  for (auto [sigma, tau] : path) {
    left.erase(sigma);
    left.erase(tau);
    seq.pairs.push_back({complex.labels_of(sigma), complex.labels_of(tau)});
  }
  seq.final_vertex = complex.labels_of(*left.begin()).front();
  return seq;
}

std::int64_t mobius(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  // Any linear extension works; sort by the number of elements below.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (lattice.leq(u, v)) ++below[v];
  std::vector<ElementIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::ranges::stable_sort(order, [&](ElementIndex a, ElementIndex b) { return below[a] < below[b]; });

  std::vector<std::int64_t> mu(n, 0);
  for (ElementIndex v : order) {
    if (v == lattice.bottom()) {
      mu[v] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (ElementIndex u = 0; u < n; ++u)
      if (lattice.less(u, v)) sum += mu[u];
    mu[v] = -sum;
  }
  return mu[lattice.top()];
}

std::optional<ElementIndex> find_noncomplemented_element(const Lattice& lattice) {
  for (ElementIndex x : lattice.interior_elements())
    if (complements(lattice, x).empty()) return x;
  return std::nullopt;
}

}  // namespace nonevade
