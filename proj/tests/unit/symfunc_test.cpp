#include <gtest/gtest.h>

#include <random>

#include "random.hpp"
#include "resint/errors.hpp"
#include "resint/symfunc.hpp"

using namespace resint;
using resint::testing::random_poly;

namespace {

GeneratorSpec xy(int truncation = 6) { return GeneratorSpec({"x", "y"}, {1, 2}, truncation); }

GradedPoly P(const GeneratorSpec& spec, const char* text) { return parse_poly(spec, text); }

}  // namespace

TEST(GeneratorSpec, Validates) {
  EXPECT_THROW(GeneratorSpec({"x"}, {1, 2}, 3), ValidationError);
  EXPECT_THROW(GeneratorSpec({"x"}, {0}, 3), ValidationError);
  EXPECT_THROW(GeneratorSpec({"x"}, {1}, -1), ValidationError);
  EXPECT_THROW(GeneratorSpec({"x", "x"}, {1, 1}, 2), ValidationError);
  EXPECT_NO_THROW(GeneratorSpec({}, {}, 0));
  EXPECT_EQ(GeneratorSpec::roots(3, 4).names(), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(GeneratorSpec::elementary(2, 4).degrees(), (std::vector<int>{1, 2}));
  EXPECT_EQ(xy(), xy());
  EXPECT_FALSE(xy(5) == xy(6));
}

TEST(GradedPoly, AddExamples) {
  const auto s = xy();
  EXPECT_TRUE((P(s, "x") + P(s, "-x")).is_zero());
  EXPECT_EQ(P(s, "x^2 - y") + P(s, "y"), P(s, "x^2"));
  EXPECT_EQ((P(s, "6*x") + P(s, "11*x^2 + 10*y")).to_string(), "6*x + 11*x^2 + 10*y");
  EXPECT_TRUE((P(s, "3*x*y - 2") - P(s, "3*x*y - 2")).terms().empty());
}

TEST(GradedPoly, MulExamples) {
  EXPECT_EQ(P(xy(), "x") * P(xy(), "y"), P(xy(), "x*y"));
  EXPECT_EQ((P(xy(), "x") * P(xy(), "y")).max_degree(), 3);
  EXPECT_TRUE((P(xy(2), "x") * P(xy(2), "y")).is_zero());
  const auto s = xy(2);
  EXPECT_EQ(P(s, "1 + x + y") * P(s, "1 - x + x^2 - y"), GradedPoly::one(s));
}

TEST(GradedPoly, MismatchedSpecsThrow) {
  EXPECT_THROW(P(xy(3), "x") + P(xy(4), "x"), ContextMismatch);
  EXPECT_THROW(P(xy(3), "x") * P(xy(4), "x"), ContextMismatch);
}

TEST(GradedPoly, TruncationAndCanonicalForm) {
  const auto s = xy(3);
  EXPECT_TRUE(P(s, "x^4 + x^2*y").is_zero());
  const auto p = P(s, "x + y + x*y");
  const auto square = p * p;
  for (const auto& [m, c] : square.terms()) EXPECT_LE(m.degree, 3);
  const auto same = p - p + p;
  for (const auto& [m, c] : same.terms()) EXPECT_NE(c, 0);
}

TEST(GradedPoly, FormatAndParseRoundTrip) {
  const auto s = xy();
  for (const char* text : {"18*x^2*y + 9*y^2", "0", "-x", "1 - x + x^2 - y", "-3*y^2"}) {
    EXPECT_EQ(P(s, text).to_string(), text);
  }
  EXPECT_THROW(P(s, "x + w"), ParseError);
}

TEST(GradedPoly, Components) {
  const auto p = P(xy(), "1 + 2*x + 3*x^2 + 4*y + x*y");
  EXPECT_EQ(p.component(2), P(xy(), "3*x^2 + 4*y"));
  EXPECT_EQ(p.component(7), GradedPoly(xy()));
  EXPECT_EQ(p.up_to(1), P(xy(), "1 + 2*x"));
  EXPECT_EQ(p.constant_term(), 1);
  EXPECT_EQ(p.coefficient({1, 1}), 1);
  EXPECT_EQ(p.max_degree(), 3);
}

TEST(SeriesInverse, Examples) {
  const auto s = xy(3);
  const auto inv = series_inverse(P(s, "1 + x + y"));
  EXPECT_EQ(inv.component(1), P(s, "-x"));
  EXPECT_EQ(inv.component(2), P(s, "x^2 - y"));
  EXPECT_EQ(inv.component(3), P(s, "-x^3 + 2*x*y"));
  EXPECT_EQ(series_inverse(GradedPoly::one(s)), GradedPoly::one(s));
  EXPECT_THROW(series_inverse(P(s, "2 + x")), NonUnitError);
  EXPECT_THROW(series_inverse(P(s, "x")), NonUnitError);
}

TEST(SeriesInverse, RandomUnitsInvert) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const GeneratorSpec spec({"a", "b", "c"}, {1, 2, 3}, 1 + t % 7);
    const auto a = random_poly(spec, rng, 6, true);
    EXPECT_EQ(a * series_inverse(a), GradedPoly::one(spec));
  }
}

TEST(GradedPoly, RingLaws) {
  std::mt19937 rng(7);
  const GeneratorSpec spec({"a", "b"}, {1, 2}, 6);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_poly(spec, rng);
    const auto b = random_poly(spec, rng);
    const auto c = random_poly(spec, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(poly_add(a, b), a + b);
    EXPECT_EQ(poly_mul(a, b), a * b);
    EXPECT_TRUE((a - a).terms().empty());
  }
}

TEST(GradedPoly, PowAndAdams) {
  const auto s = xy();
  const auto p = P(s, "1 + x + y");
  EXPECT_EQ(poly_pow(p, 3), p * p * p);
  EXPECT_EQ(poly_pow(p, 0), GradedPoly::one(s));
  EXPECT_EQ(adams(p, 2), P(s, "1 + 2*x + 4*y"));
  EXPECT_EQ(adams(P(s, "x*y - 1"), -1), P(s, "-x*y - 1"));
}

TEST(GradedPoly, EvaluateSubstitutes) {
  const auto roots = GeneratorSpec::roots(2, 4, "t");
  const std::vector<GradedPoly> images{elementary_symmetric(roots, 1), elementary_symmetric(roots, 2)};
  const auto value = evaluate(P(xy(4), "x^2 - 2*y"), images);
  EXPECT_EQ(value, parse_poly(roots, "t1^2 + t2^2"));
}

TEST(RootsToE, NewtonIdentities) {
  const auto roots = GeneratorSpec::roots(2, 4);
  const auto target = GeneratorSpec::elementary(2, 4);
  EXPECT_EQ(roots_to_e(parse_poly(roots, "x1^2 + x2^2"), target), parse_poly(target, "e1^2 - 2*e2"));
  EXPECT_EQ(roots_to_e(parse_poly(roots, "x1*x2"), target), parse_poly(target, "e2"));
  const auto roots3 = GeneratorSpec::roots(3, 3);
  const auto target3 = GeneratorSpec::elementary(3, 3);
  EXPECT_EQ(roots_to_e(parse_poly(roots3, "x1^3 + x2^3 + x3^3"), target3),
            parse_poly(target3, "e1^3 - 3*e1*e2 + 3*e3"));
}

TEST(RootsToE, RejectsNonSymmetric) {
  const auto roots = GeneratorSpec::roots(2, 4);
  const auto target = GeneratorSpec::elementary(2, 4);
  EXPECT_THROW(roots_to_e(parse_poly(roots, "x1"), target), NotSymmetricError);
  EXPECT_THROW(roots_to_e(parse_poly(roots, "x1^2*x2 + x2^3"), target), NotSymmetricError);
  EXPECT_THROW(roots_to_e(parse_poly(roots, "x1"), GeneratorSpec::elementary(3, 4)), ContextMismatch);
}

// Substituting e_i <- e_i(roots) into roots_to_e(p) gives p back.
TEST(RootsToE, IsASectionOfSubstitution) {
  std::mt19937 rng(3);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto roots = GeneratorSpec::roots(k, 6);
    const auto target = GeneratorSpec::elementary(k, 6);
    std::vector<GradedPoly> images;
    for (std::size_t i = 1; i <= k; ++i) images.push_back(elementary_symmetric(roots, i));
    for (int t = 0; t < 40; ++t) {
      const auto q = random_poly(target, rng);
      const auto sym = evaluate(q, images);
      EXPECT_EQ(evaluate(roots_to_e(sym, target), images), sym);
      EXPECT_EQ(roots_to_e(sym, target), q);
    }
  }
}
