#include <gtest/gtest.h>

#include "nonevade/error.hpp"
#include "nonevade/generate.hpp"
#include "nonevade/oracles.hpp"
#include "nonevade/order_complex.hpp"
#include "support/convert.hpp"

using namespace nonevade;
using testing_support::d12;
using testing_support::from_facets;
using testing_support::hollow_triangle;
using testing_support::path4263;
using testing_support::to_ref;

TEST(BruteNonevasive, SpecCases) {
  EXPECT_TRUE(brute_nonevasive(from_facets({"a"}, {{"a"}})));
  EXPECT_FALSE(brute_nonevasive(from_facets({"a", "b"}, {{"a"}, {"b"}})));
  EXPECT_TRUE(brute_nonevasive(from_facets({"a", "b", "c"}, {{"a", "b", "c"}})));
  EXPECT_FALSE(brute_nonevasive(hollow_triangle()));
  EXPECT_TRUE(brute_nonevasive(path4263()));
}

TEST(BruteNonevasive, AgreesWithReference) {
  const std::vector<Complex> cases{
      hollow_triangle(),
      path4263(),
      from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}),
      from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}}),
      from_facets({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"d", "e"}}),
  };
  for (const auto& c : cases) EXPECT_EQ(brute_nonevasive(c), ref::nonevasive(to_ref(c)));
}

TEST(BruteNonevasive, CapExceeded) {
  std::vector<std::string> vs;
  std::vector<Face> facets;
  for (int i = 0; i < 13; ++i) {
    vs.push_back("v" + std::to_string(i));
    facets.push_back({vs.back()});
  }
  const auto c = from_facets(vs, facets);
  try {
    brute_nonevasive(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_FALSE(brute_nonevasive(c, 13));
}

TEST(BruteCollapsible, SpecCases) {
  const auto edge = from_facets({"a", "b"}, {{"a", "b"}});
  const auto s = brute_collapsible(edge);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->pairs.size(), 1U);
  EXPECT_FALSE(brute_collapsible(hollow_triangle()));
  const auto p = brute_collapsible(path4263());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->pairs.size(), 3U);
  EXPECT_EQ(replay_collapses(path4263(), *p).vertex_count(), 1U);
}

TEST(BruteCollapsible, CapExceeded) {
  std::vector<std::string> vs;
  for (int i = 0; i < 6; ++i) vs.push_back(std::string(1, static_cast<char>('a' + i)));
  const auto simplex = from_facets(vs, {vs});
  EXPECT_THROW(brute_collapsible(simplex, 62), Error);
  EXPECT_TRUE(brute_collapsible(simplex, 63));
}

TEST(MemoKey, EqualComplexesEqualKeys) {
  const auto a = from_facets({"a", "b", "c"}, {{"b", "c"}, {"a", "b"}});
  const auto b = from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(memo_key(a), memo_key(b));
  EXPECT_NE(memo_key(a), memo_key(hollow_triangle()));
}

TEST(Mobius, SpecCases) {
  EXPECT_EQ(mobius(generate("chain", {.n = 2})), -1);
  EXPECT_EQ(mobius(generate("boolean", {.n = 3})), -1);
  EXPECT_EQ(mobius(d12()), 0);
  // Reference recursion written independently.
  for (std::int64_t n : {12, 30, 36, 60, 210})
    EXPECT_EQ(mobius(generate("divisor", {.n = n})), ref::mobius(ref::divisor_order(n))) << n;
  EXPECT_EQ(mobius(generate("divisor", {.n = 30})), -1);
  EXPECT_EQ(mobius(generate("partition", {.n = 4})), -6);
}

TEST(Mobius, SelfDual) {
  for (const auto* fam : {"partition", "boolean"}) {
    const auto l = generate(fam, {.n = 4});
    EXPECT_EQ(mobius(l), mobius(dual(l)));
  }
}

TEST(FindNoncomplemented, SpecCases) {
  const auto w = find_noncomplemented_element(d12());
  ASSERT_TRUE(w);
  EXPECT_EQ(d12().label(*w), "2");
  EXPECT_FALSE(find_noncomplemented_element(generate("boolean", {.n = 3})));
  const auto c = generate("chain", {.n = 3});
  ASSERT_TRUE(find_noncomplemented_element(c));
  EXPECT_EQ(c.label(*find_noncomplemented_element(c)), "a");
}
