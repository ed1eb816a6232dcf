#include "nonevade/chain_game.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "nonevade/error.hpp"

namespace nonevade {

bool operator==(const Strategy& a, const Strategy& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* x = std::get_if<AnswerNode>(&a.node)) return x->is_chain == std::get<AnswerNode>(b.node).is_chain;
  const auto& p = std::get<QueryNode>(a.node);
  const auto& q = std::get<QueryNode>(b.node);
  return p.vertex == q.vertex && *p.yes == *q.yes && *p.no == *q.no;
}

StrategyPtr make_answer(bool is_chain) {
  return std::make_shared<const Strategy>(Strategy{AnswerNode{is_chain}});
}

StrategyPtr make_query(std::string vertex, StrategyPtr yes, StrategyPtr no) {
  return std::make_shared<const Strategy>(
      Strategy{QueryNode{std::move(vertex), std::move(yes), std::move(no)}});
}

std::size_t strategy_depth(const Strategy& strategy) {
  if (std::holds_alternative<AnswerNode>(strategy.node)) return 0;
  const auto& q = std::get<QueryNode>(strategy.node);
  return 1 + std::max(strategy_depth(*q.yes), strategy_depth(*q.no));
}

namespace {

bool well_formed(const Strategy& s, const std::set<std::string>& ground, std::set<std::string>& asked) {
  if (std::holds_alternative<AnswerNode>(s.node)) return true;
  const auto& q = std::get<QueryNode>(s.node);
  if (!q.yes || !q.no || !ground.contains(q.vertex) || asked.contains(q.vertex)) return false;
  asked.insert(q.vertex);
  const bool ok = well_formed(*q.yes, ground, asked) && well_formed(*q.no, ground, asked);
  asked.erase(q.vertex);
  return ok;
}

StrategyPtr compile(const Certificate& cert, const std::vector<std::string>& ground) {
  const auto implied = certificate_vertices(cert);
  if (implied != std::set<std::string>(ground.begin(), ground.end()))
    throw Error(ErrorCode::GroundMismatch, "certificate vertex set differs from the ground set");

  if (std::holds_alternative<LeafNode>(cert.node)) return make_answer(true);
  if (auto* p = std::get_if<PruneNode>(&cert.node)) return compile(*p->child, ground);

  const auto& s = std::get<SplitNode>(cert.node);
  std::vector<std::string> rest;
  for (const auto& g : ground)
    if (g != s.vertex) rest.push_back(g);
  auto no_branch = compile(*s.dl, rest);

  const auto link_vertices = certificate_vertices(*s.lk);
  std::vector<std::string> link_ground, dead;
  for (const auto& g : rest) (link_vertices.contains(g) ? link_ground : dead).push_back(g);
  if (link_ground.size() != link_vertices.size())
    throw Error(ErrorCode::GroundMismatch, "link child names vertices outside the ground set");

  // A hidden set holding the split vertex and anything outside its link is
  // not a chain.
  auto yes_branch = compile(*s.lk, link_ground);
  for (auto it = dead.rbegin(); it != dead.rend(); ++it)
    yes_branch = make_query(*it, make_answer(false), yes_branch);
  return make_query(s.vertex, yes_branch, no_branch);
}

}  // namespace

bool strategy_well_formed(const Strategy& strategy, std::span<const std::string> ground) {
  std::set<std::string> asked;
  return well_formed(strategy, std::set<std::string>(ground.begin(), ground.end()), asked);
}

StrategyPtr compile_strategy(const Certificate& cert, std::span<const std::string> ground) {
  return compile(cert, std::vector<std::string>(ground.begin(), ground.end()));
}

Transcript play(const Strategy& strategy, const std::set<std::string>& hidden) {
  Transcript t;
  const Strategy* at = &strategy;
  while (auto* q = std::get_if<QueryNode>(&at->node)) {
    const bool member = hidden.contains(q->vertex);
    t.queries.emplace_back(q->vertex, member);
    at = member ? q->yes.get() : q->no.get();
  }
  t.verdict = std::get<AnswerNode>(at->node).is_chain;
  return t;
}

GameReport exhaustive_check(const Strategy& strategy, std::span<const std::string> ground,
                            const Lattice& order, std::size_t cap) {
  const std::size_t n = ground.size();
  if (n > cap || n >= 63)
    throw Error(ErrorCode::CapExceeded, "exhaustive_check: ground of size " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(cap));
  std::vector<ElementIndex> elems;
  std::unordered_map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(order.index_of(ground[i]));
    slot.emplace(ground[i], i);
  }
  // comparable[i]: ground positions comparable to i, including i.
  std::vector<std::uint64_t> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (order.comparable(elems[i], elems[j])) comparable[i] |= std::uint64_t{1} << j;

  GameReport report;
  report.ground_size = n;
  for (std::uint64_t hidden = 0; hidden < (std::uint64_t{1} << n); ++hidden) {
    bool is_chain = true;
    for (std::size_t i = 0; i < n && is_chain; ++i)
      if ((hidden >> i & 1U) && (hidden & ~comparable[i])) is_chain = false;

    std::size_t queries = 0;
    std::uint64_t asked = 0;
    bool repeated = false;
    const Strategy* at = &strategy;
    while (auto* q = std::get_if<QueryNode>(&at->node)) {
      auto it = slot.find(q->vertex);
      if (it == slot.end())
        throw Error(ErrorCode::GroundMismatch, "strategy queries '" + q->vertex + "' outside the ground set");
      const std::uint64_t b = std::uint64_t{1} << it->second;
      if (asked & b) repeated = true;
      asked |= b;
      ++queries;
      at = (hidden & b) ? q->yes.get() : q->no.get();
    }
    const bool verdict = std::get<AnswerNode>(at->node).is_chain;

    ++report.subsets_tested;
    if (is_chain) ++report.chains;
    if (verdict != is_chain) ++report.mismatches;
    if (repeated) ++report.repeated_queries;
    report.max_queries = std::max(report.max_queries, queries);
    ++report.histogram[queries];
  }
  return report;
}

}  // namespace nonevade
