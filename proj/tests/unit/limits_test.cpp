#include <gtest/gtest.h>

#include <random>
#include <set>

#include "resint/errors.hpp"
#include "resint/limits.hpp"

using namespace resint;

namespace {

struct Golden {
  Piece a;
  Piece b;
  long main_a, adj_a, tot_a, main_b, adj_b, tot_b;
};

void expect_golden(const GrassContext& ctx, int d, const Golden& g) {
  const auto rep = decompose_degeneration(DegenerationSpec(ctx, d, g.a, g.b));
  SCOPED_TRACE(g.a.to_string() + " + " + g.b.to_string());
  EXPECT_EQ(*rep.pieces[0].main_degree, g.main_a);
  EXPECT_EQ(*rep.pieces[0].adjunct_degree, g.adj_a);
  EXPECT_EQ(*rep.pieces[0].total_degree, g.tot_a);
  EXPECT_EQ(*rep.pieces[1].main_degree, g.main_b);
  EXPECT_EQ(*rep.pieces[1].adjunct_degree, g.adj_b);
  EXPECT_EQ(*rep.pieces[1].total_degree, g.tot_b);
  EXPECT_EQ(*rep.ambient_degree, g.tot_a + g.tot_b);
  EXPECT_TRUE(rep.conserved);
}

}  // namespace

TEST(Piece, ParseAndFormat) {
  EXPECT_EQ(Piece::parse("1x4"), (Piece{1, 4}));
  EXPECT_EQ(Piece::parse("3"), (Piece{3, 1}));
  EXPECT_EQ((Piece{1, 4}).to_string(), "X_1^4");
  EXPECT_EQ((Piece{2, 1}).to_string(), "X_2");
  EXPECT_THROW(Piece::parse("x4"), ParseError);
  EXPECT_THROW(Piece::parse("1x-1"), ParseError);
  EXPECT_THROW(Piece::parse(""), ParseError);
}

TEST(DegenerationSpec, Validates) {
  const GrassContext g(1, 4);
  EXPECT_THROW(DegenerationSpec(g, 5, {1, 2}, {1, 1}), ValidationError);
  EXPECT_THROW(DegenerationSpec(g, 5, {0, 2}, {5, 1}), ValidationError);
  EXPECT_THROW(DegenerationSpec(g, 5, {5, 1}, {1, 0}), ValidationError);
  EXPECT_NO_THROW(DegenerationSpec(g, 5, {1, 4}, {1, 1}));
}

TEST(Fano, Classes) {
  const GrassContext g(1, 3);
  EXPECT_EQ(fano_class(g, 3), parse_poly(g.spec(), "18*x^2*y + 9*y^2"));
  EXPECT_EQ(integrate(g, fano_class(g, 3)), 27);
  EXPECT_EQ(integrate(GrassContext(1, 4), fano_class(GrassContext(1, 4), 5)), 2875);
  EXPECT_EQ(integrate(GrassContext(2, 7), fano_class(GrassContext(2, 7), 4)), 3297280);
  EXPECT_EQ(fano_class(g, 1), parse_poly(g.spec(), "y"));
  EXPECT_THROW(fano_class(g, 0), ValidationError);
}

TEST(Limits, CubicSurface) {
  const GrassContext g(1, 3);
  const auto rep = decompose_degeneration(DegenerationSpec(g, 3, {1, 1}, {1, 2}));
  EXPECT_EQ(rep.pieces[0].total, parse_poly(g.spec(), "6*x^2*y - 3*y^2"));
  EXPECT_EQ(rep.pieces[1].total, parse_poly(g.spec(), "12*x^2*y + 12*y^2"));
  EXPECT_EQ(rep.pieces[0].main, parse_poly(g.spec(), "6*x^2*y + 9*y^2"));
  EXPECT_EQ(rep.pieces[0].adjunct, parse_poly(g.spec(), "-12*y^2"));
  EXPECT_EQ(*rep.pieces[0].total_degree, 3);
  EXPECT_EQ(*rep.pieces[1].total_degree, 24);
}

// Positive-dimensional Fano schemes keep their classes; degrees need a pairing.
TEST(Limits, CubicInHigherSpace) {
  const GrassContext g(1, 5);
  const auto rep = decompose_degeneration(DegenerationSpec(g, 3, {1, 1}, {1, 2}));
  EXPECT_EQ(rep.pieces[0].total, parse_poly(g.spec(), "6*x^2*y - 3*y^2"));
  EXPECT_EQ(rep.pieces[1].total, parse_poly(g.spec(), "12*x^2*y + 12*y^2"));
  EXPECT_FALSE(rep.pieces[0].total_degree.has_value());
  EXPECT_FALSE(rep.ambient_degree.has_value());

  const Partition pair({2, 2, 0});
  const auto paired = decompose_degeneration(DegenerationSpec(g, 3, {1, 1}, {1, 2}), Partition({4}));
  EXPECT_EQ(*paired.pieces[0].total_degree,
            integrate(g, rep.pieces[0].total * schubert_polynomial(g, Partition({4}))));
  EXPECT_EQ(*paired.pieces[0].total_degree + *paired.pieces[1].total_degree, *paired.ambient_degree);
  EXPECT_THROW(decompose_degeneration(DegenerationSpec(g, 3, {1, 1}, {1, 2}), Partition({1})), ValidationError);
}

TEST(Limits, QuinticThreefold) {
  const GrassContext g(1, 4);
  for (const auto& c : std::vector<Golden>{
           {{1, 4}, {1, 1}, 2400, 320, 2720, 1275, -1120, 155},
           {{1, 3}, {2, 1}, 3195, -540, 2655, 1300, -1080, 220},
           {{1, 3}, {1, 2}, 3195, -1080, 2115, 2920, -2160, 760},
           {{1, 2}, {3, 1}, 2920, -540, 2380, 1575, -1080, 495},
           {{2, 2}, {1, 1}, 2880, -640, 2240, 1275, -640, 635},
       }) {
    expect_golden(g, 5, c);
  }
}

TEST(Limits, QuarticInP7) {
  const GrassContext g(2, 7);
  for (const auto& c : std::vector<Golden>{
           {{3, 1}, {1, 1}, 3304098, -2820258, 483840, 3656569, -843129, 2813440},
           {{2, 1}, {2, 1}, 3087616, -1438976, 1648640, 3087616, -1438976, 1648640},
           {{1, 3}, {1, 1}, -20855205, 24000165, 3144960, 3656569, -3504249, 152320},
           {{1, 2}, {1, 2}, 2645888, -997248, 1648640, 2645888, -997248, 1648640},
           {{1, 2}, {2, 1}, 2645888, 561792, 3207680, 3087616, -2998016, 89600},
       }) {
    expect_golden(g, 4, c);
  }
}

// The closed formulas evaluated directly must agree with the generic
// regular-embedding evaluator.
TEST(Limits, DirectFormulaAgrees) {
  for (auto [r, n] : {std::pair{1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 7}}) {
    const GrassContext g(r, n);
    for (int d = 2; d <= 5; ++d) {
      for (const auto& [a, b] : enumerate_degenerations(d)) {
        const DegenerationSpec spec(g, d, a, b);
        EXPECT_EQ(decompose_degeneration(spec), decompose_degeneration_direct(spec))
            << "G(" << r << "," << n << ") " << a.to_string() << " + " << b.to_string();
      }
    }
  }
}

TEST(Limits, SwapExchangesPieces) {
  const GrassContext g(2, 7);
  const DegenerationSpec spec(g, 4, {1, 2}, {2, 1});
  const auto a = decompose_degeneration(spec);
  const auto b = decompose_degeneration(spec.swapped());
  EXPECT_EQ(a.pieces[0], b.pieces[1]);
  EXPECT_EQ(a.pieces[1], b.pieces[0]);
}

// Lines with reduced pieces: the adjunct sum has an empty range.
TEST(Limits, ReducedLinesHaveNoAdjunct) {
  for (int n = 3; n <= 6; ++n) {
    const GrassContext g(1, n);
    for (int d = 2; d <= 2 * n - 3 + 2; ++d) {
      for (const auto& [a, b] : enumerate_degenerations(d)) {
        if (a.multiplicity != 1 || b.multiplicity != 1) continue;
        const auto rep = decompose_degeneration(DegenerationSpec(g, d, a, b));
        EXPECT_TRUE(rep.pieces[0].adjunct.is_zero());
        EXPECT_TRUE(rep.pieces[1].adjunct.is_zero());
      }
    }
  }
}

TEST(Limits, RandomSpecsConserve) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> rd(0, 2);
  std::uniform_int_distribution<int> dd(2, 5);
  for (int t = 0; t < 60; ++t) {
    const int r = rd(rng);
    std::uniform_int_distribution<int> nd(r + 1, 7);
    const int n = nd(rng);
    const int d = dd(rng);
    const auto cases = enumerate_degenerations(d);
    std::uniform_int_distribution<std::size_t> pick(0, cases.size() - 1);
    const auto& [a, b] = cases[pick(rng)];
    const GrassContext g(r, n);
    const auto rep = decompose_degeneration(DegenerationSpec(g, d, a, b));
    EXPECT_TRUE(rep.conserved) << r << " " << n << " " << d;
    EXPECT_EQ(to_schubert(g, rep.pieces[0].total + rep.pieces[1].total), to_schubert(g, fano_class(g, d)));
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_degenerations(2).size(), 1u);
  EXPECT_EQ(enumerate_degenerations(4).size(), 5u);
  EXPECT_EQ(enumerate_degenerations(5).size(), 7u);
  EXPECT_TRUE(enumerate_degenerations(1).empty());
}

TEST(Enumerate, QuinticAndQuarticLists) {
  using PP = std::pair<Piece, Piece>;
  const auto five = enumerate_degenerations(5);
  const std::set<std::string> got5 = [&] {
    std::set<std::string> s;
    for (const auto& [a, b] : five) s.insert(a.to_string() + "+" + b.to_string());
    return s;
  }();
  EXPECT_EQ(got5, (std::set<std::string>{"X_4+X_1", "X_3+X_2", "X_2^2+X_1", "X_1^4+X_1", "X_1^3+X_2",
                                         "X_1^3+X_1^2", "X_1^2+X_3"}));
  const auto four = enumerate_degenerations(4);
  EXPECT_EQ(four, (std::vector<PP>{{{1, 3}, {1, 1}}, {{1, 2}, {1, 2}}, {{1, 2}, {2, 1}}, {{2, 1}, {2, 1}},
                                   {{3, 1}, {1, 1}}}));
  for (const auto& [a, b] : five) EXPECT_EQ(a.degree * a.multiplicity + b.degree * b.multiplicity, 5);
}
