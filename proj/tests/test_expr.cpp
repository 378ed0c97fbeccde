#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"
#include "ufc/error.hpp"
#include "ufc/expr.hpp"

using namespace ufc;
using ufc::testing::make_dataset;
using ufc::testing::naive_eval;
using ufc::testing::random_expr;

namespace {

FeatureExpr P(const std::string& n) { return FeatureExpr::primitive(n); }
FeatureExpr Not(const FeatureExpr& e) { return FeatureExpr::negation(e); }
FeatureExpr And(const FeatureExpr& a, const FeatureExpr& b) { return FeatureExpr::conjunction(a, b); }

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(Parse, ConjunctionWithNegatedOperand) {
  const FeatureExpr e = parse("water & !cascade");
  ASSERT_TRUE(e.is_conjunction());
  EXPECT_TRUE(e.left().is_primitive());
  EXPECT_EQ(e.left().name(), "water");
  ASSERT_TRUE(e.right().is_negation());
  EXPECT_EQ(e.right().child().name(), "cascade");
}

TEST(Parse, NegatedGroup) {
  const FeatureExpr e = parse("!(sky & building) & tree");
  ASSERT_TRUE(e.is_conjunction());
  ASSERT_TRUE(e.left().is_negation());
  const FeatureExpr& inner = e.left().child();
  ASSERT_TRUE(inner.is_conjunction());
  EXPECT_EQ(inner.left().name(), "sky");
  EXPECT_EQ(inner.right().name(), "building");
  EXPECT_EQ(e.right().name(), "tree");
}

TEST(Parse, LeftAssociativeAndWhitespaceInsensitive) {
  const FeatureExpr e = parse("  a&b &\tc ");
  ASSERT_TRUE(e.is_conjunction());
  ASSERT_TRUE(e.left().is_conjunction());
  EXPECT_EQ(e.right().name(), "c");
  EXPECT_EQ(e, And(And(P("a"), P("b")), P("c")));
}

TEST(Parse, IdentifiersAllowDigitsUnderscoreHyphen) {
  EXPECT_EQ(parse("_x-1 & Y2").text(), "_x-1 & Y2");
  EXPECT_EQ(parse("!!!a"), Not(Not(Not(P("a")))));
}

TEST(Parse, SyntaxErrorsReportOffset) {
  EXPECT_THROW(parse("a &"), ParseError);
  try {
    parse("a &");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
    EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
  }
  EXPECT_EQ(parse_error_offset(""), 0u);
  EXPECT_EQ(parse_error_offset("(a & b"), 6u);
  EXPECT_EQ(parse_error_offset("a b"), 2u);
  EXPECT_EQ(parse_error_offset("a & 1b"), 4u);
  EXPECT_EQ(parse_error_offset("a | b"), 2u);
}

TEST(Print, RoundTripsRandomExpressions) {
  std::mt19937_64 rng(21);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  for (int i = 0; i < 500; ++i) {
    const FeatureExpr e = random_expr(rng, names, 4);
    const FeatureExpr back = parse(e.text());
    EXPECT_EQ(back.text(), e.text());
    EXPECT_EQ(canonicalize(back), canonicalize(e));
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(Not(Not(P("a")))).text(), "a");
  EXPECT_EQ(canonicalize(And(P("b"), P("a"))).text(), "a & b");
  const FeatureExpr e = And(And(P("b"), P("a")), Not(Not(P("c"))));
  EXPECT_EQ(canonical_string(e), "(a & b) & c");
  EXPECT_EQ(canonicalize(canonicalize(e)), canonicalize(e));
  EXPECT_TRUE(canonicalize(e).is_canonical());
  EXPECT_FALSE(e.is_canonical());
}

TEST(Canonicalize, IdempotentAndExtensionPreserving) {
  std::mt19937_64 rng(22);
  const Dataset d = make_dataset({"a", "b", "c"}, {"000", "001", "010", "011", "100", "101", "110", "111"});
  const std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 500; ++i) {
    const FeatureExpr e = random_expr(rng, names, 4);
    const FeatureExpr c = canonicalize(e);
    EXPECT_EQ(canonicalize(c).text(), c.text());
    EXPECT_EQ(evaluate(c, d), evaluate(e, d));
  }
}

TEST(Evaluate, PrimitivePassthroughAndContradiction) {
  std::mt19937_64 rng(23);
  const Dataset d = ufc::testing::random_dataset(rng, 100, 3);
  EXPECT_EQ(evaluate(P("p1"), d), d.column(1));
  EXPECT_TRUE(evaluate(parse("p0 & !p0"), d).none());
  EXPECT_THROW(evaluate(P("zz"), d), Error);
}

TEST(Evaluate, MatchesNaiveInterpreter) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t k = 2 + rng() % 2;
    const Dataset d = ufc::testing::random_dataset(rng, n, k);
    const FeatureExpr e = random_expr(rng, d.names(), 4);
    const Extension x = evaluate(e, d);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(x.test(i), naive_eval(e, d, i)) << e.text();
  }
}

TEST(Evaluate, DeMorganAtExtensionLevel) {
  std::mt19937_64 rng(25);
  const Dataset d = ufc::testing::random_dataset(rng, 200, 4);
  for (int i = 0; i < 100; ++i) {
    const FeatureExpr x = random_expr(rng, d.names(), 2);
    const FeatureExpr y = random_expr(rng, d.names(), 2);
    EXPECT_EQ(evaluate(Not(And(x, y)), d), ~(evaluate(x, d) & evaluate(y, d)));
  }
}

TEST(LiteralCount, Examples) {
  EXPECT_EQ(literal_count(P("a")), 1u);
  EXPECT_EQ(literal_count(parse("water & cascade & !(tree & forest)")), 4u);
  EXPECT_EQ(literal_count(parse("!(a & b) & a")), 2u);
  EXPECT_EQ(literal_count(parse("a & !a")), 2u);
  EXPECT_EQ(literal_count(parse("a & a")), 1u);
  EXPECT_EQ(literal_count(parse("!!a")), 1u);
}

TEST(LiteralCount, BoundedByPrimitiveOccurrences) {
  std::mt19937_64 rng(26);
  const std::vector<std::string> names{"a", "b", "c"};
  for (int i = 0; i < 300; ++i) {
    const FeatureExpr e = random_expr(rng, names, 4);
    const std::size_t lc = literal_count(e);
    EXPECT_GE(lc, primitive_names(e).size());
    EXPECT_LE(lc, 2 * primitive_names(e).size());
    EXPECT_EQ(lc, literals(e).size());
  }
}

TEST(FeatureFile, ReadWriteRoundTrip) {
  std::istringstream in("# comment\n\na & !b\n  c  \n!(a & c)\n");
  const auto features = read_feature_file(in);
  ASSERT_EQ(features.size(), 3u);
  EXPECT_EQ(features[0].text(), "a & !b");
  EXPECT_EQ(features[1].text(), "c");
  std::ostringstream out;
  write_feature_file(out, features);
  std::istringstream again(out.str());
  const auto back = read_feature_file(again);
  ASSERT_EQ(back.size(), features.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], features[i]);
}

TEST(FeatureFile, ParseErrorMentionsLine) {
  std::istringstream in("a\nb &\n");
  try {
    read_feature_file(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}
