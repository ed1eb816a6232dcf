#include "nonevade/generate.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "nonevade/error.hpp"

namespace nonevade {

namespace {

using Word = BitMatrix::Word;
using Bits = std::vector<Word>;

Bits make_bits(std::size_t n) { return Bits((n + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits, 0); }

bool bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= Word{1} << (i % 64); }

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<std::size_t> members(const Bits& b, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (bit(b, i)) out.push_back(i);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParamOutOfRange, what);
}

Lattice from_relation(std::vector<std::string> labels, const auto& leq) {
  const std::size_t n = labels.size();
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j)) m.set(i, j);
  return Lattice(Poset(std::move(labels), std::move(m)));
}

Lattice chain(std::int64_t n) {
  require(n >= 1 && static_cast<std::size_t>(n) <= kMaxLatticeSize,
          "chain: n must be in [1, " + std::to_string(kMaxLatticeSize) + "]");
  std::vector<std::string> labels{"0"};
  for (std::int64_t i = 1; i + 1 < n; ++i) labels.push_back(letter_label(static_cast<std::size_t>(i - 1)));
  if (n >= 2) labels.push_back("1");
  return from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; });
}

Lattice boolean(std::int64_t n) {
  require(n >= 0 && n <= 12, "boolean: n must be in [0, 12]");
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> sets(std::size_t{1} << n);
  for (std::uint32_t s = 0; s <= full; ++s) sets[s] = s;
  // Rank first, then lexicographic on the letters.
  auto word = [&](std::uint32_t s) {
    std::string w;
    for (int b = 0; b < n; ++b)
      if (s >> b & 1U) w += static_cast<char>('a' + b);
    return w;
  };
  std::ranges::sort(sets, [&](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return word(a) < word(b);
  });
  std::vector<std::string> labels;
  for (std::uint32_t s : sets) labels.push_back(s == 0 ? "0" : (s == full ? "1" : word(s)));
  if (n == 0) labels = {"0"};
  return from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
    return (sets[i] & ~sets[j]) == 0;
  });
}

Lattice divisor(std::int64_t n) {
  require(n >= 1 && n <= 1'000'000'000'000LL, "divisor: n must be in [1, 10^12]");
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    divs.push_back(d);
    if (d != n / d) divs.push_back(n / d);
  }
  std::ranges::sort(divs);
  require(divs.size() <= kMaxLatticeSize, "divisor: too many divisors");
  std::vector<std::string> labels;
  for (auto d : divs) labels.push_back(std::to_string(d));
  return from_relation(std::move(labels),
                       [&](std::size_t i, std::size_t j) { return divs[j] % divs[i] == 0; });
}

Lattice partition(std::int64_t n) {
  require(n >= 1 && n <= 7, "partition: n must be in [1, 7]");
  // Restricted growth strings enumerate the set partitions of {1..n}.
  std::vector<std::vector<int>> parts;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t pos, int max_block) -> void {
    if (pos == rgs.size()) {
      parts.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  auto blocks = [](const std::vector<int>& p) { return *std::ranges::max_element(p) + 1; };
  std::ranges::stable_sort(parts, [&](const auto& a, const auto& b) { return blocks(a) > blocks(b); });
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    std::string label;
    for (int b = 0; b < blocks(p); ++b) {
      if (b) label += '|';
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == b) label += std::to_string(i + 1);
    }
    labels.push_back(label);
  }
  // p <= q iff p refines q.
  return from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    const auto& p = parts[a];
    const auto& q = parts[b];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] == p[j] && q[i] != q[j]) return false;
    return true;
  });
}

Lattice product(std::int64_t n, std::int64_t m) {
  require(n >= 1 && m >= 1 && n * m <= static_cast<std::int64_t>(kMaxLatticeSize),
          "product: need n, m >= 1 and n*m <= " + std::to_string(kMaxLatticeSize));
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < m; ++j) cells.emplace_back(i, j);
  std::ranges::stable_sort(cells, [](auto a, auto b) { return a.first + a.second < b.first + b.second; });
  std::vector<std::string> labels;
  for (auto [i, j] : cells) labels.push_back(std::to_string(i) + "." + std::to_string(j));
  return from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return cells[a].first <= cells[b].first && cells[a].second <= cells[b].second;
  });
}

Lattice diamond(std::int64_t n) {
  require(n >= 0 && static_cast<std::size_t>(n) + 2 <= kMaxLatticeSize, "diamond: n out of range");
  std::vector<std::string> labels{"0"};
  for (std::int64_t i = 0; i < n; ++i) labels.push_back(letter_label(static_cast<std::size_t>(i)));
  labels.push_back("1");
  const std::size_t top = labels.size() - 1;
  return from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
    return i == j || i == 0 || j == top;
  });
}

Lattice pentagon() {
  // 0 < a < b < 1 and 0 < c < 1.
  const std::vector<std::pair<ElementIndex, ElementIndex>> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Lattice(Poset::from_covers({"0", "a", "b", "c", "1"}, covers));
}

}  // namespace

std::string letter_label(std::size_t index) {
  std::string out;
  ++index;
  while (index > 0) {
    --index;
    out.insert(out.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  }
  return out;
}

Lattice dedekind_macneille(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<Bits> down(n, make_bits(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (poset.leq(q, p)) set_bit(down[p], q);

  // Cuts are exactly the intersections of principal down-sets, the whole
  // poset being the empty intersection.
  Bits whole = make_bits(n);
  for (std::size_t i = 0; i < n; ++i) set_bit(whole, i);
  std::set<Bits> cuts{whole};
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Bits> fresh;
    for (const Bits& s : cuts) {
      Bits t = s;
      for (std::size_t w = 0; w < t.size(); ++w) t[w] &= down[p][w];
      fresh.push_back(std::move(t));
    }
    cuts.insert(fresh.begin(), fresh.end());
    require(cuts.size() <= kMaxLatticeSize, "completion exceeds " + std::to_string(kMaxLatticeSize) +
                                                " elements");
  }

  std::vector<std::pair<Bits, std::vector<std::size_t>>> ordered;
  for (const Bits& c : cuts) ordered.emplace_back(c, members(c, n));
  std::ranges::sort(ordered, [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });

  std::vector<std::string> labels;
  for (const auto& [cut, elems] : ordered) {
    std::vector<std::size_t> maximal;
    for (std::size_t e : elems) {
      const bool dominated = std::ranges::any_of(elems, [&](std::size_t f) { return poset.less(e, f); });
      if (!dominated) maximal.push_back(e);
    }
    if (maximal.size() == 1 && down[maximal.front()] == cut) {
      labels.push_back(poset.label(maximal.front()));
      continue;
    }
    std::string label = "[";
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (i) label += '+';
      label += poset.label(maximal[i]);
    }
    labels.push_back(label + "]");
  }

  return from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
    return subset_of(ordered[i].first, ordered[j].first);
  });
}

Poset random_poset(std::size_t n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(edge_probability);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
  std::vector<std::pair<ElementIndex, ElementIndex>> relations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) relations.emplace_back(i, j);
  return Poset::from_covers(std::move(labels), relations);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"chain",   "boolean", "divisor",  "partition",
                                              "product", "diamond", "pentagon", "random"};
  return names;
}

Lattice generate(std::string_view family, const FamilyParams& params) {
  if (family == "chain") return chain(params.n);
  if (family == "boolean") return boolean(params.n);
  if (family == "divisor") return divisor(params.n);
  if (family == "partition") return partition(params.n);
  if (family == "product") return product(params.n, params.m);
  if (family == "diamond") return diamond(params.n);
  if (family == "pentagon") return pentagon();
  if (family == "random") {
    require(params.n >= 0 && params.n <= 256, "random: n must be in [0, 256]");
    require(params.edge_probability >= 0.0 && params.edge_probability <= 1.0,
            "random: edge probability must be in [0, 1]");
    return dedekind_macneille(
        random_poset(static_cast<std::size_t>(params.n), params.edge_probability, params.seed));
  }
  throw Error(ErrorCode::UnknownFamily, "unknown lattice family '" + std::string(family) + "'");
}

}  // namespace nonevade
