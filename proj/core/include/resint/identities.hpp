#pragma once

#include <vector>

#include "resint/chow.hpp"
#include "resint/symfunc.hpp"

namespace resint {

/// One instance of the characteristic-class identity for E = U* on a
/// Grassmannian, with d = k + l.
class IdentityCase {
 public:
  /// Throws ValidationError unless k >= 1 and l >= 1.
  IdentityCase(GrassContext ctx, int k, int l);

  const GrassContext& context() const noexcept { return ctx_; }
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  int d() const noexcept { return k_ + l_; }

 private:
  GrassContext ctx_;
  int k_;
  int l_;
};

/// Deliberate corruptions of the right-hand side, for checking that the
/// verifier can fail.
enum class Mutation {
  none,
  /// binom(r_d - 1 - i, j) -> binom(r_d - i, j) in the first double sum.
  shifted_binomial,
  /// Boundary terms with Segre index -rank are dropped instead of cancelled.
  dropped_cancellation,
};

struct IdentityResult {
  GradedPoly lhs;
  GradedPoly rhs;
  /// lhs - rhs
  GradedPoly residual;
  SchubertVector residual_class;

  bool holds() const { return residual_class.is_zero(); }
};

/// Evaluates
///
///   c_{r_d}(S^d) + c_{r_k}(S^k) c_{r_l}(S^l) (Sigma_{k,l} + Sigma_{l,k})
///
/// with Sigma_{k,l} = sum_{i=0}^{r_d-r_k} sum_{j=0}^{r_d-r_k-i}
/// binom(r_d-1-i, j) c_i(S^d) s_{j-r_l}(S^l) s_{r_d-r_k-i-j}(S^k).
/// Segre indices strictly between -rank and 0 contribute 0; the index -rank
/// is absorbed into the c_top prefactor (c_top s_{-rank} = -1).
IdentityResult verify_identity(const IdentityCase& c, Mutation mutation = Mutation::none);

/// All cases with k, l >= 1 and k + l <= dmax, ordered by d, then k.
std::vector<IdentityCase> identity_grid(const GrassContext& ctx, int dmax);

}  // namespace resint
