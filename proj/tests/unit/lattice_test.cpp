#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "nonevade/error.hpp"
#include "nonevade/generate.hpp"
#include "nonevade/lattice.hpp"
#include "nonevade/lattice_io.hpp"
#include "support/convert.hpp"

using namespace nonevade;
using testing_support::d12;
using testing_support::parse;
using testing_support::to_ref;

namespace {

std::vector<std::string> labels(const Lattice& l, const std::vector<ElementIndex>& v) { return labels_of(l, v); }

Lattice b2() { return parse("elements: 0 a b 1\ncover: 0 a\ncover: 0 b\ncover: a 1\ncover: b 1\n"); }

}  // namespace

TEST(ParseLattice, D12MeetIsGcdJoinIsLcm) {
  const auto& l = d12();
  // Oracle: divisibility order enumerated directly, bounds found by scanning.
  const ref::Order oracle = ref::divisor_order(12);
  ASSERT_EQ(l.size(), 6U);
  for (ElementIndex i = 0; i < 6; ++i) {
    for (ElementIndex j = 0; j < 6; ++j) {
      const auto a = std::stoll(l.label(i));
      const auto b = std::stoll(l.label(j));
      EXPECT_EQ(l.label(l.meet(i, j)), oracle.meet(l.label(i), l.label(j)));
      EXPECT_EQ(l.label(l.join(i, j)), oracle.join(l.label(i), l.label(j)));
      EXPECT_EQ(std::stoll(l.label(l.meet(i, j))), std::gcd(a, b));
      EXPECT_EQ(std::stoll(l.label(l.join(i, j))), std::lcm(a, b));
    }
  }
  EXPECT_EQ(l.label(l.bottom()), "1");
  EXPECT_EQ(l.label(l.top()), "12");
}

TEST(ParseLattice, ThreeChain) {
  const auto l = parse("elements: 0 a 1\ncover: 0 a\ncover: a 1\n");
  EXPECT_EQ(l.label(l.bottom()), "0");
  EXPECT_EQ(l.label(l.top()), "1");
  EXPECT_TRUE(l.leq(0, 2));
}

TEST(ParseLattice, BowtieIsNotALattice) {
  try {
    parse("elements: 0 a b c d 1\n"
          "cover: 0 a\ncover: 0 b\ncover: a c\ncover: a d\ncover: b c\ncover: b d\ncover: c 1\ncover: d 1\n");
    FAIL() << "expected NotALattice";
  } catch (const NotALatticeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALattice);
    EXPECT_EQ(e.first(), "a");
    EXPECT_EQ(e.second(), "b");
    EXPECT_EQ(e.witnesses(), (std::vector<std::string>{"c", "d"}));
    EXPECT_TRUE(e.missing_join());
    EXPECT_NE(std::string(e.what()).find("NotALattice(a, b, {c,d})"), std::string::npos);
  }
}

TEST(ParseLattice, Errors) {
  auto code_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;  // sentinel: no error
  };
  EXPECT_EQ(code_of("elements: 0 a b 1\ncover: 0 a\ncover: a b\ncover: b a\ncover: b 1\n"), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of("elements: a b 1\ncover: a 1\ncover: b 1\n"), ErrorCode::NoUniqueBottom);
  EXPECT_EQ(code_of("elements: 0 a b\ncover: 0 a\ncover: 0 b\n"), ErrorCode::NoUniqueTop);
  EXPECT_EQ(code_of("cover: 0 a\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("elements: 0 1\ncover: 0 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("elements: 0 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("elements: 0 1\nbogus line\n"), ErrorCode::ParseError);
}

TEST(ParseLattice, AcceptsJsonForm) {
  const auto l = parse(R"({"elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]]})");
  EXPECT_EQ(l, parse("elements: 0 a 1\ncover: 0 a\ncover: a 1\n"));
}

TEST(ParseLattice, CommentsAndBlankLines) {
  const auto l = parse("# header\n\nelements: 0 a 1  # trailing\ncover: 0 a\n# mid\ncover: a 1\n");
  EXPECT_EQ(l.size(), 3U);
}

TEST(Labels, Validation) {
  EXPECT_THROW(validate_label(""), Error);
  EXPECT_THROW(validate_label("a b"), Error);
  EXPECT_THROW(validate_label("a,b"), Error);
  EXPECT_NO_THROW(validate_label("12|3"));
}

TEST(Complements, SpecCases) {
  const auto b = b2();
  EXPECT_EQ(labels(b, complements(b, b.index_of("a"))), (std::vector<std::string>{"b"}));
  const auto& l = d12();
  const auto oracle = ref::divisor_order(12);
  EXPECT_TRUE(complements(l, l.index_of("2")).empty());
  EXPECT_TRUE(oracle.complements("2").empty());
  EXPECT_EQ(labels(l, complements(l, l.index_of("4"))), (std::vector<std::string>{"3"}));
  EXPECT_EQ(oracle.complements("4"), (std::set<std::string>{"3"}));
  EXPECT_THROW(l.index_of("5"), Error);
}

TEST(Interval, SpecCases) {
  const auto& l = d12();
  const auto i = interval(l, l.index_of("3"), l.index_of("12"));
  EXPECT_EQ(i.labels(), (std::vector<std::string>{"3", "6", "12"}));
  EXPECT_EQ(i.label(i.bottom()), "3");
  EXPECT_EQ(interval(l, l.bottom(), l.top()), l);
  EXPECT_THROW(interval(l, l.index_of("4"), l.index_of("6")), Error);

  const auto b3 = generate("boolean", {.n = 3});
  const auto up = interval(b3, b3.index_of("a"), b3.top());
  EXPECT_EQ(up.labels(), (std::vector<std::string>{"a", "ab", "ac", "1"}));
  EXPECT_EQ(up.atoms().size(), 2U);
  EXPECT_EQ(up.coatoms().size(), 2U);
}

TEST(RemoveAtom, SpecCases) {
  const auto& l = d12();
  const auto no3 = remove_atom(l, l.index_of("3"));
  EXPECT_EQ(no3.labels(), (std::vector<std::string>{"1", "2", "4", "6", "12"}));

  const auto no2 = remove_atom(l, l.index_of("2"));
  EXPECT_EQ(no2.labels(), (std::vector<std::string>{"1", "3", "4", "6", "12"}));
  EXPECT_EQ(no2.label(no2.meet(no2.index_of("4"), no2.index_of("6"))), "1");
  EXPECT_EQ(no2.label(no2.join(no2.index_of("4"), no2.index_of("6"))), "12");

  const auto b = b2();
  const auto chain = remove_atom(b, b.index_of("a"));
  EXPECT_EQ(chain.labels(), (std::vector<std::string>{"0", "b", "1"}));

  EXPECT_THROW(remove_atom(l, l.index_of("4")), Error);
  EXPECT_THROW(remove_coatom(l, l.index_of("2")), Error);
  EXPECT_EQ(remove_coatom(l, l.index_of("4")).labels(), (std::vector<std::string>{"1", "2", "3", "6", "12"}));
}

TEST(Dual, SpecCases) {
  const auto chain = parse("elements: 0 a 1\ncover: 0 a\ncover: a 1\n");
  const auto d = dual(chain);
  EXPECT_EQ(d.label(d.bottom()), "1");
  EXPECT_EQ(d.label(d.top()), "0");
  EXPECT_EQ(dual(dual(d12())), d12());
  const auto dd = dual(d12());
  EXPECT_EQ(labels(dd, dd.atoms()), labels(d12(), d12().coatoms()));
  EXPECT_EQ(labels(dd, dd.atoms()), (std::vector<std::string>{"4", "6"}));
}

TEST(ComparabilityComponents, SpecCases) {
  auto as_labels = [](const Lattice& l) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : comparability_components(l)) out.push_back(labels_of(l, c));
    return out;
  };
  using V = std::vector<std::vector<std::string>>;
  EXPECT_EQ(as_labels(b2()), (V{{"a"}, {"b"}}));
  EXPECT_EQ(as_labels(d12()), (V{{"2", "3", "4", "6"}}));
  EXPECT_EQ(as_labels(generate("diamond", {.n = 3})), (V{{"a"}, {"b"}, {"c"}}));
}

TEST(DedekindMacNeille, Antichain) {
  BitMatrix leq(2);
  leq.set(0, 0);
  leq.set(1, 1);
  const auto l = dedekind_macneille(Poset({"a", "b"}, leq));
  ASSERT_EQ(l.size(), 4U);
  EXPECT_EQ(l.atoms().size(), 2U);
  EXPECT_EQ(l.label(l.bottom()), "[]");
  EXPECT_EQ(labels(l, l.atoms()), (std::vector<std::string>{"a", "b"}));
}

TEST(DedekindMacNeille, FixesLattices) {
  const auto l = dedekind_macneille(d12().poset());
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"1", "2", "3", "4", "6", "12"}));
  for (ElementIndex i = 0; i < 6; ++i)
    for (ElementIndex j = 0; j < 6; ++j) EXPECT_EQ(l.leq(i, j), d12().leq(i, j));
}

TEST(DedekindMacNeille, EmptyPoset) {
  EXPECT_EQ(dedekind_macneille(Poset({}, BitMatrix(0))).size(), 1U);
}

TEST(Generate, SpecFamilies) {
  EXPECT_EQ(generate("chain", {.n = 4}).labels(), (std::vector<std::string>{"0", "a", "b", "1"}));
  const auto b3 = generate("boolean", {.n = 3});
  EXPECT_EQ(b3.size(), 8U);
  EXPECT_EQ(b3.atoms().size(), 3U);
  EXPECT_EQ(generate("divisor", {.n = 12}), d12());
  EXPECT_EQ(generate("partition", {.n = 4}).size(), 15U);
  EXPECT_EQ(generate("product", {.n = 3, .m = 3}).size(), 9U);
  EXPECT_EQ(generate("pentagon", {}).size(), 5U);
}

TEST(Generate, Errors) {
  auto code_of = [](std::string_view fam, FamilyParams p) {
    try {
      generate(fam, p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code_of("tree", {.n = 3}), ErrorCode::UnknownFamily);
  EXPECT_EQ(code_of("boolean", {.n = 13}), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of("chain", {.n = 0}), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of("random", {.n = 5, .edge_probability = 1.5}), ErrorCode::ParamOutOfRange);
}

TEST(Generate, RandomIsReproducible) {
  const FamilyParams p{.n = 8, .edge_probability = 0.4, .seed = 42};
  EXPECT_EQ(generate("random", p), generate("random", p));
}

TEST(LatticeIo, FormatRoundTrip) {
  for (const auto* fam : {"boolean", "divisor", "partition"}) {
    const auto l = generate(fam, {.n = std::string_view(fam) == "divisor" ? 60 : 3});
    EXPECT_EQ(parse_lattice(format_lattice(l, "seed 7")), l) << fam;
    EXPECT_EQ(lattice_from_json(lattice_to_json(l)), l) << fam;
  }
  EXPECT_NE(format_lattice(d12(), "seed 7").find("# seed 7"), std::string::npos);
}
