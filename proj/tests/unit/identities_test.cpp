#include <gtest/gtest.h>

#include "resint/bundles.hpp"
#include "resint/errors.hpp"
#include "resint/identities.hpp"
#include "resint/limits.hpp"

using namespace resint;

TEST(Identities, CaseValidates) {
  const GrassContext g(1, 3);
  EXPECT_THROW(IdentityCase(g, 0, 2), ValidationError);
  EXPECT_THROW(IdentityCase(g, 2, 0), ValidationError);
  EXPECT_EQ(IdentityCase(g, 1, 2).d(), 3);
}

TEST(Identities, Examples) {
  EXPECT_TRUE(verify_identity(IdentityCase(GrassContext(1, 3), 1, 2)).holds());
  EXPECT_TRUE(verify_identity(IdentityCase(GrassContext(1, 4), 2, 3)).holds());
  const auto sym = verify_identity(IdentityCase(GrassContext(1, 3), 1, 1));
  EXPECT_TRUE(sym.holds());
  EXPECT_EQ(sym.lhs, fano_class(GrassContext(1, 3), 2));
}

TEST(Identities, GridHolds) {
  for (auto [r, n] : {std::pair{1, 3}, {1, 4}, {2, 5}, {1, 6}, {2, 6}}) {
    for (const auto& c : identity_grid(GrassContext(r, n), 4)) {
      const auto res = verify_identity(c);
      EXPECT_TRUE(res.holds()) << "G(" << r << "," << n << ") k=" << c.k() << " l=" << c.l() << ": "
                               << res.residual.to_string();
    }
  }
  EXPECT_EQ(identity_grid(GrassContext(1, 3), 4).size(), 6u);
}

TEST(Identities, SwapInvariance) {
  for (auto [r, n] : {std::pair{1, 4}, {2, 5}}) {
    const GrassContext g(r, n);
    for (const auto mutation : {Mutation::none, Mutation::dropped_cancellation}) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; k + l <= 4; ++l) {
          EXPECT_EQ(verify_identity(IdentityCase(g, k, l), mutation).residual,
                    verify_identity(IdentityCase(g, l, k), mutation).residual);
        }
      }
    }
  }
}

// The right-hand side is minus the sum of the piece totals of the e = f = 1
// degeneration, so its left-hand side is the Fano class.
TEST(Identities, ConsistentWithDegenerations) {
  const GrassContext g(2, 5);
  for (const auto& c : identity_grid(g, 4)) {
    const auto res = verify_identity(c);
    const auto rep = decompose_degeneration(DegenerationSpec(g, c.d(), {c.k(), 1}, {c.l(), 1}));
    EXPECT_EQ(to_schubert(g, rep.pieces[0].total + rep.pieces[1].total), to_schubert(g, res.lhs));
    EXPECT_EQ(to_schubert(g, res.rhs), to_schubert(g, fano_class(g, c.d())));
  }
}

TEST(Identities, InjectedFaultsAreCaught) {
  const auto bad = verify_identity(IdentityCase(GrassContext(2, 5), 1, 1), Mutation::shifted_binomial);
  EXPECT_FALSE(bad.holds());
  EXPECT_FALSE(bad.residual.is_zero());
  // Once r_d exceeds dim G both sides sit above the top degree and vanish,
  // so no fault can show there.
  for (auto [r, n] : {std::pair{1, 3}, {1, 4}, {2, 5}}) {
    const GrassContext g(r, n);
    for (const auto& c : identity_grid(g, 4)) {
      const bool visible = rank_sym(r, c.d()) <= g.dim();
      EXPECT_EQ(verify_identity(c, Mutation::dropped_cancellation).holds(), !visible)
          << "G(" << r << "," << n << ") k=" << c.k() << " l=" << c.l();
    }
  }
}
