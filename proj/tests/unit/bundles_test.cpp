#include <gtest/gtest.h>

#include <random>

#include "random.hpp"
#include "resint/bundles.hpp"
#include "resint/errors.hpp"

using namespace resint;

namespace {

const GrassContext& lines() {
  static const GrassContext g(1, 3);
  return g;
}

GradedPoly P(const char* text) { return parse_poly(lines().spec(), text); }

// Random honest bundle of the given rank over the spec.
BundleClass random_bundle(const GeneratorSpec& spec, int rank, std::mt19937& rng) {
  return BundleClass(rank, resint::testing::random_poly(spec, rng, 4, true));
}

// c(Sym^d E) for a rank-2 bundle straight from the roots a, b: the product of
// (1 + i a + (d - i) b), pushed through e1 = a + b, e2 = a b by evaluation.
GradedPoly sym_by_roots(int d, const GeneratorSpec& roots) {
  GradedPoly prod = GradedPoly::one(roots);
  for (int i = 0; i <= d; ++i) {
    prod = prod * (GradedPoly::one(roots) + GradedPoly::generator(roots, 0) * Integer(i) +
                   GradedPoly::generator(roots, 1) * Integer(d - i));
  }
  return prod;
}

}  // namespace

TEST(Bundles, ChernOfDualTautological) {
  const auto u = dual_tautological(lines());
  EXPECT_EQ(u.rank(), 2);
  EXPECT_EQ(chern(u, 1), P("x"));
  EXPECT_EQ(chern(u, 0), P("1"));
  EXPECT_EQ(top_chern(u), P("y"));
  EXPECT_TRUE(chern(u, 3).is_zero());
  EXPECT_THROW(chern(u, -1), IndexError);
}

TEST(Bundles, SymCubeGolden) {
  const auto s3 = sym_power(dual_tautological(lines()), 3);
  EXPECT_EQ(s3.rank(), 4);
  EXPECT_EQ(chern(s3, 1), P("6*x"));
  EXPECT_EQ(chern(s3, 2), P("11*x^2 + 10*y"));
  EXPECT_EQ(chern(s3, 3), P("6*x^3 + 30*x*y"));
  EXPECT_EQ(chern(s3, 4), P("18*x^2*y + 9*y^2"));
}

TEST(Bundles, SymSquareAndIdentity) {
  const auto u = dual_tautological(lines());
  EXPECT_EQ(sym_power(u, 2).total_chern(), P("1 + 3*x + 2*x^2 + 4*y + 4*x*y"));
  EXPECT_EQ(sym_power(u, 1), u);
  EXPECT_EQ(sym_power(u, 0), trivial_bundle(lines().spec(), 1));
  EXPECT_THROW(sym_power(u, -1), IndexError);
}

// Independent oracle: expand over explicit roots and compare after
// substituting x = a + b, y = a b into the engine's answer.
TEST(Bundles, SymPowerMatchesRootExpansion) {
  const GrassContext big(1, 8);  // truncation 14, enough for d <= 4
  const auto roots = GeneratorSpec({"a", "b"}, {1, 1}, big.dim());
  const std::vector<GradedPoly> images{parse_poly(roots, "a + b"), parse_poly(roots, "a*b")};
  for (int d = 1; d <= 4; ++d) {
    const auto s = sym_power(dual_tautological(big), d);
    EXPECT_EQ(s.rank(), d + 1);
    EXPECT_EQ(evaluate(s.total_chern(), images), sym_by_roots(d, roots)) << "d = " << d;
  }
}

TEST(Bundles, SymPowerRankLaw) {
  std::mt19937 rng(23);
  const GeneratorSpec spec({"p", "q", "r"}, {1, 2, 3}, 6);
  for (int rank = 1; rank <= 3; ++rank) {
    const auto e = random_bundle(spec, rank, rng);
    for (int d = 0; d <= 4; ++d) {
      const auto s = sym_power(e, d);
      EXPECT_EQ(Integer(s.rank()), binomial(d + rank - 1, rank - 1));
      EXPECT_LE(s.total_chern().max_degree(), s.rank());
    }
  }
}

TEST(Bundles, SegreExamples) {
  const auto u = dual_tautological(lines());
  EXPECT_EQ(segre(u, 1), P("-x"));
  EXPECT_EQ(segre(u, 2), P("x^2 - y"));
  EXPECT_EQ(segre(u, 3), P("-x^3 + 2*x*y"));
  EXPECT_EQ(segre(u, 0), P("1"));
  EXPECT_TRUE(segre(u, -1).is_zero());
  EXPECT_THROW(segre(u, -2), CancellationRequired);
  EXPECT_THROW(segre(u, -3), IndexError);
}

TEST(Bundles, NegativeRankCancellation) {
  const auto u = dual_tautological(lines());
  EXPECT_EQ(segre_negrank_product(u, P("1")), P("-1"));
  const auto s3 = sym_power(u, 3);
  EXPECT_EQ(segre_negrank_product(u, top_chern(s3)), P("-18*x^2*y - 9*y^2"));
}

TEST(Bundles, ChernTimesSegreIsOne) {
  std::mt19937 rng(1000);
  for (int t = 0; t < 1000; ++t) {
    const GeneratorSpec spec({"a", "b", "c"}, {1, 2, 3}, 2 + t % 8);
    const auto e = random_bundle(spec, 1 + t % 5, rng);
    EXPECT_EQ(e.total_chern() * total_segre(e), GradedPoly::one(spec));
  }
}

TEST(Bundles, AdamsTwist) {
  const auto u = dual_tautological(lines());
  EXPECT_EQ(adams_twist(u, 1), u);
  EXPECT_EQ(adams_twist(u, 0).total_chern(), P("1"));
  EXPECT_EQ(adams_twist(u, 2).total_chern(), P("1 + 2*x + 4*y"));

  std::mt19937 rng(31);
  const GeneratorSpec spec({"a", "b"}, {1, 2}, 6);
  for (int t = 0; t < 50; ++t) {
    const auto e = random_bundle(spec, 4, rng);
    const int m = 1 + t % 4;
    const int n = -2 + t % 5;
    EXPECT_EQ(adams_twist(adams_twist(e, m), n).total_chern(), adams_twist(e, Integer(m * n)).total_chern());
    EXPECT_EQ(total_segre(adams_twist(e, m)), adams(total_segre(e), m));
  }
}

TEST(Bundles, Differences) {
  const auto u = dual_tautological(lines());
  const auto s3 = sym_power(u, 3);
  EXPECT_EQ(difference(u, u).total_chern(), P("1"));
  EXPECT_EQ(difference(s3, trivial_bundle(lines().spec())).total_chern(), s3.total_chern());
  EXPECT_EQ(chern(difference(s3, u), 2), P("6*x^2 + 9*y"));
  EXPECT_EQ(difference(difference(s3, u), u).total_chern(),
            s3.total_chern() * total_segre(u) * total_segre(u));

  std::mt19937 rng(41);
  const GeneratorSpec spec({"a", "b"}, {1, 2}, 5);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_bundle(spec, 5, rng);
    const auto b = random_bundle(spec, 3, rng);
    EXPECT_EQ(difference(a, b).total_chern() * b.total_chern(), a.total_chern());
  }
  EXPECT_THROW(difference(u, dual_tautological(GrassContext(1, 4))), ContextMismatch);
}

TEST(Bundles, RankSym) {
  EXPECT_EQ(rank_sym(1, 5), 6);
  EXPECT_EQ(rank_sym(2, 4), 15);
  EXPECT_EQ(rank_sym(3, 0), 1);
}

TEST(Bundles, ConstructorValidates) {
  EXPECT_THROW(BundleClass(2, P("2 + x")), ValidationError);
  EXPECT_THROW(VirtualClass(P("x")), ValidationError);
  EXPECT_THROW(BundleClass(-1, P("1")), ValidationError);
  EXPECT_EQ(BundleClass(1, P("1 + x + y")).total_chern(), P("1 + x"));
}
