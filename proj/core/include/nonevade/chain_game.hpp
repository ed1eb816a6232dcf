#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonevade/certifier.hpp"
#include "nonevade/lattice.hpp"

namespace nonevade {

struct Strategy;
using StrategyPtr = std::shared_ptr<const Strategy>;

struct AnswerNode {
  bool is_chain = true;
};

struct QueryNode {
  std::string vertex;
  StrategyPtr yes;
  StrategyPtr no;
};

// Decision tree over membership questions "is v in A?".
struct Strategy {
  std::variant<AnswerNode, QueryNode> node;
};

bool operator==(const Strategy& a, const Strategy& b);

StrategyPtr make_answer(bool is_chain);
StrategyPtr make_query(std::string vertex, StrategyPtr yes, StrategyPtr no);

// Longest root-to-leaf query count.
std::size_t strategy_depth(const Strategy& strategy);

// No vertex repeats along a path and every queried vertex is in `ground`.
bool strategy_well_formed(const Strategy& strategy, std::span<const std::string> ground);

// Turns a certificate for the order complex on `ground` (canonical order)
// into a strategy deciding whether a hidden subset is a face. After a YES on
// the split vertex, every ground vertex outside its link is asked about
// first; a YES there settles "not a chain". Throws GroundMismatch.
StrategyPtr compile_strategy(const Certificate& cert, std::span<const std::string> ground);

struct Transcript {
  std::vector<std::pair<std::string, bool>> queries;
  bool verdict = false;
};

// Walks the tree answering truthfully for `hidden`.
Transcript play(const Strategy& strategy, const std::set<std::string>& hidden);

struct GameReport {
  std::size_t ground_size = 0;
  std::size_t subsets_tested = 0;
  std::size_t chains = 0;  // hidden sets that are chains
  std::size_t mismatches = 0;
  std::size_t repeated_queries = 0;  // plays that asked about a vertex twice
  std::size_t max_queries = 0;
  std::map<std::size_t, std::size_t> histogram;  // queries -> plays
};

inline constexpr std::size_t kDefaultGameCap = 16;

// Plays all 2^|ground| hidden sets and compares each verdict with pairwise
// comparability in `order`. Throws CapExceeded or UnknownElement.
GameReport exhaustive_check(const Strategy& strategy, std::span<const std::string> ground,
                            const Lattice& order, std::size_t cap = kDefaultGameCap);

}  // namespace nonevade
