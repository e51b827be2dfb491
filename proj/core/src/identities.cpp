#include "resint/identities.hpp"

#include "resint/bundles.hpp"
#include "resint/errors.hpp"

namespace resint {

IdentityCase::IdentityCase(GrassContext ctx, int k, int l) : ctx_(std::move(ctx)), k_(k), l_(l) {
  if (k < 1 || l < 1) {
    throw ValidationError("identity case needs k >= 1 and l >= 1 (got k=" + std::to_string(k) +
                          ", l=" + std::to_string(l) + ")");
  }
}

namespace {

// -c_top(own) c_top(other) Sigma_{own,other}
GradedPoly bracket(const BundleClass& sd, const BundleClass& own, const BundleClass& other, bool shifted,
                   bool drop_boundary) {
  const int rd = sd.rank();
  const int ro = own.rank();
  const int rt = other.rank();
  const GradedPoly own_top = top_chern(own);
  const GradedPoly other_top = top_chern(other);
  GradedPoly out(sd.spec());
  for (int i = 0; i <= rd - ro; ++i) {
    const GradedPoly ci = chern(sd, i);
    for (int j = 0; j <= rd - ro - i; ++j) {
      const int t = j - rt;
      if (t < 0 && (t > -rt || drop_boundary)) continue;
      const Integer b = binomial(shifted ? rd - i : rd - 1 - i, j);
      if (b == 0) continue;
      GradedPoly rest = -(own_top * ci * segre(own, rd - ro - i - j)) * b;
      if (t == -rt) {
        out += segre_negrank_product(other, rest);
      } else {
        out += rest * other_top * segre(other, t);
      }
    }
  }
  return out;
}

}  // namespace

IdentityResult verify_identity(const IdentityCase& c, Mutation mutation) {
  const GrassContext& ctx = c.context();
  const BundleClass u = dual_tautological(ctx);
  const BundleClass sd = sym_power(u, c.d());
  const BundleClass sk = sym_power(u, c.k());
  const BundleClass sl = sym_power(u, c.l());
  GradedPoly lhs = top_chern(sd);
  const bool drop = mutation == Mutation::dropped_cancellation;
  GradedPoly rhs = bracket(sd, sk, sl, mutation == Mutation::shifted_binomial, drop) +
                   bracket(sd, sl, sk, false, drop);
  GradedPoly residual = lhs - rhs;
  SchubertVector cls = to_schubert(ctx, residual);
  return {std::move(lhs), std::move(rhs), std::move(residual), std::move(cls)};
}

std::vector<IdentityCase> identity_grid(const GrassContext& ctx, int dmax) {
  std::vector<IdentityCase> out;
  for (int d = 2; d <= dmax; ++d) {
    for (int k = 1; k < d; ++k) out.emplace_back(ctx, k, d - k);
  }
  return out;
}

}  // namespace resint
