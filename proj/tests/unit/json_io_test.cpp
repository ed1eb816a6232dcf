#include <gtest/gtest.h>

#include "nonevade/certifier.hpp"
#include "nonevade/chain_game.hpp"
#include "nonevade/corpus.hpp"
#include "nonevade/json_io.hpp"
#include "support/convert.hpp"

using namespace nonevade;
using testing_support::d12;
using testing_support::path4263;

TEST(JsonIo, ComplexSchema) {
  const auto j = to_json(path4263());
  EXPECT_EQ(j["vertices"], nlohmann::json::parse(R"(["2","3","4","6"])"));
  EXPECT_EQ(j["facets"], nlohmann::json::parse(R"([["2","4"],["2","6"],["3","6"]])"));
  EXPECT_EQ(complex_from_json(j), path4263());
}

TEST(JsonIo, CollapseSchema) {
  const CollapseSequence s{{{{"3"}, {"3", "6"}}}, "2"};
  const auto j = to_json(s);
  EXPECT_EQ(j["final"], "2");
  EXPECT_EQ(j["pairs"], nlohmann::json::parse(R"([[["3"],["3","6"]]])"));
  EXPECT_EQ(collapse_sequence_from_json(j), s);
}

TEST(JsonIo, CertificateSchema) {
  const auto j = to_json(*certify(d12(), "2").certificate);
  EXPECT_EQ(j["type"], "split");
  EXPECT_EQ(j["vertex"], "3");
  EXPECT_EQ(j["mode"], "case1_atom");
  EXPECT_EQ(j["z"], "6");
  EXPECT_EQ(j["lk"], nlohmann::json::parse(R"({"type":"leaf","vertex":"6"})"));
  EXPECT_FALSE(j.contains("trimmed"));
  const auto prune = to_json(*make_prune({"b"}, make_leaf("a")));
  EXPECT_EQ(prune, nlohmann::json::parse(R"({"type":"prune","removed":["b"],"child":{"type":"leaf","vertex":"a"}})"));
}

TEST(JsonIo, StrategyAndTranscriptSchema) {
  const auto s = make_query("b", make_answer(true), make_answer(false));
  EXPECT_EQ(to_json(*s), nlohmann::json::parse(
                             R"({"type":"query","vertex":"b","yes":{"type":"answer","chain":true},"no":{"type":"answer","chain":false}})"));
  const auto t = play(*s, {"b"});
  EXPECT_EQ(to_json(t), nlohmann::json::parse(R"({"queries":[["b",1]],"verdict":true})"));
}

TEST(JsonIo, MalformedDocumentsRejected) {
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"type":"tree"})")), std::exception);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"type":"split","vertex":"a","mode":"x","z":"a"})")),
               std::exception);
  EXPECT_THROW(strategy_from_json(nlohmann::json::parse(R"({"type":"answer"})")), std::exception);
  EXPECT_THROW(parse_json("{"), std::exception);
}

// Emitted documents re-load and re-serialize to identical bytes.
TEST(JsonIo, ByteForByteRoundTripOverNamedCorpus) {
  for (const auto& entry : named_corpus()) {
    const auto& l = entry.lattice;
    for (auto x : l.interior_elements()) {
      const auto cert = certify(l, x).certificate;
      const std::string text = dump(to_json(*cert));
      const auto back = certificate_from_json(parse_json(text));
      EXPECT_EQ(*back, *cert);
      EXPECT_EQ(dump(to_json(*back)), text) << entry.name;

      const auto ground = interior_without_complements(l, x).labels();
      const auto s = compile_strategy(*cert, ground);
      const std::string stext = dump(to_json(*s));
      EXPECT_EQ(dump(to_json(*strategy_from_json(parse_json(stext)))), stext) << entry.name;

      const auto c = order_complex(interior_without_complements(l, x));
      const std::string ctext = dump(to_json(c));
      EXPECT_EQ(dump(to_json(complex_from_json(parse_json(ctext)))), ctext);

      const auto seq = extract_collapses(*cert, c);
      const std::string qtext = dump(to_json(seq));
      EXPECT_EQ(dump(to_json(collapse_sequence_from_json(parse_json(qtext)))), qtext);
    }
  }
}
