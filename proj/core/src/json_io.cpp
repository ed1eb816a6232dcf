#include "nonevade/json_io.hpp"

#include "nonevade/error.hpp"

namespace nonevade {

using nlohmann::json;

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed ") + what + ": " + e.what());
  }
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

CollapsePair pair_from_json(const json& p) {
  if (!p.is_array() || p.size() != 2) malformed("collapse pair must be [free, coface]");
  return {p[0].get<Face>(), p[1].get<Face>()};
}

CertificatePtr cert_rec(const json& doc) {
  const auto type = doc.at("type").get<std::string>();
  if (type == "leaf") return make_leaf(doc.at("vertex").get<std::string>());
  if (type == "prune")
    return make_prune(doc.at("removed").get<std::vector<std::string>>(), cert_rec(doc.at("child")));
  if (type == "split") {
    const auto mode_name = doc.at("mode").get<std::string>();
    const auto mode = parse_split_mode(mode_name);
    if (!mode) malformed("unknown split mode '" + mode_name + "'");
    SplitContext context;
    context.z = doc.at("z").get<std::string>();
    if (doc.contains("interval")) {
      const auto& iv = doc.at("interval");
      if (!iv.is_array() || iv.size() != 2) malformed("interval must be [bottom, top]");
      context.bottom = iv[0].get<std::string>();
      context.top = iv[1].get<std::string>();
    }
    if (doc.contains("trimmed")) context.trimmed = doc.at("trimmed").get<std::vector<std::string>>();
    return make_split(doc.at("vertex").get<std::string>(), *mode, std::move(context),
                      cert_rec(doc.at("dl")), cert_rec(doc.at("lk")));
  }
  malformed("unknown certificate node type '" + type + "'");
}

StrategyPtr strategy_rec(const json& doc) {
  const auto type = doc.at("type").get<std::string>();
  if (type == "answer") return make_answer(doc.at("chain").get<bool>());
  if (type == "query")
    return make_query(doc.at("vertex").get<std::string>(), strategy_rec(doc.at("yes")),
                      strategy_rec(doc.at("no")));
  malformed("unknown strategy node type '" + type + "'");
}

}  // namespace

json to_json(const Complex& complex) {
  json facets = json::array();
  for (FaceMask f : complex.facets()) facets.push_back(complex.labels_of(f));
  return {{"vertices", complex.vertices()}, {"facets", facets}};
}

Complex complex_from_json(const json& doc) {
  return guarded("complex", [&] {
    auto vertices = doc.at("vertices").get<std::vector<std::string>>();
    auto facets = doc.at("facets").get<std::vector<Face>>();
    return Complex::from_faces(std::move(vertices), facets);
  });
}

json to_json(const CollapseSequence& sequence) {
  json pairs = json::array();
  for (const auto& p : sequence.pairs) pairs.push_back(json::array({p.free_face, p.coface}));
  return {{"pairs", pairs}, {"final", sequence.final_vertex}};
}

CollapseSequence collapse_sequence_from_json(const json& doc) {
  return guarded("collapse sequence", [&] {
    CollapseSequence seq;
    for (const auto& p : doc.at("pairs")) seq.pairs.push_back(pair_from_json(p));
    seq.final_vertex = doc.at("final").get<std::string>();
    return seq;
  });
}

json to_json(const Certificate& cert) {
  if (auto* l = std::get_if<LeafNode>(&cert.node)) return {{"type", "leaf"}, {"vertex", l->vertex}};
  if (auto* p = std::get_if<PruneNode>(&cert.node))
    return {{"type", "prune"}, {"removed", p->removed}, {"child", to_json(*p->child)}};
  const auto& s = std::get<SplitNode>(cert.node);
  json doc = {{"type", "split"},
              {"vertex", s.vertex},
              {"mode", std::string(split_mode_name(s.mode))},
              {"z", s.context.z},
              {"interval", json::array({s.context.bottom, s.context.top})},
              {"dl", to_json(*s.dl)},
              {"lk", to_json(*s.lk)}};
  if (!s.context.trimmed.empty()) doc["trimmed"] = s.context.trimmed;
  return doc;
}

CertificatePtr certificate_from_json(const json& doc) {
  return guarded("certificate", [&] { return cert_rec(doc); });
}

json to_json(const Strategy& strategy) {
  if (auto* a = std::get_if<AnswerNode>(&strategy.node)) return {{"type", "answer"}, {"chain", a->is_chain}};
  const auto& q = std::get<QueryNode>(strategy.node);
  return {{"type", "query"}, {"vertex", q.vertex}, {"yes", to_json(*q.yes)}, {"no", to_json(*q.no)}};
}

StrategyPtr strategy_from_json(const json& doc) {
  return guarded("strategy", [&] { return strategy_rec(doc); });
}

json to_json(const Transcript& transcript) {
  json queries = json::array();
  for (const auto& [v, answer] : transcript.queries) queries.push_back(json::array({v, answer ? 1 : 0}));
  return {{"queries", queries}, {"verdict", transcript.verdict}};
}

json to_json(const GameReport& report) {
  json histogram = json::array();
  for (auto [queries, plays] : report.histogram) histogram.push_back(json::array({queries, plays}));
  return {{"ground_size", report.ground_size},
          {"subsets_tested", report.subsets_tested},
          {"chains", report.chains},
          {"mismatches", report.mismatches},
          {"repeated_queries", report.repeated_queries},
          {"max_queries", report.max_queries},
          {"histogram", histogram}};
}

json to_json(const CertifyTrace& trace) {
  json entries = json::array();
  for (const auto& e : trace.entries) {
    json rejected = json::array();
    for (const auto& r : e.rejected) rejected.push_back({{"candidate", r.candidate}, {"reason", r.reason}});
    json entry = {{"depth", e.depth},
                  {"lattice_size", e.lattice_size},
                  {"interior_size", e.interior_size},
                  {"element", e.element},
                  {"decision", std::string(decision_name(e.decision))},
                  {"rejected", rejected}};
    if (e.decision == Decision::Prune) {
      entry["removed"] = e.removed;
    } else {
      entry["vertex"] = e.vertex;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace nonevade
