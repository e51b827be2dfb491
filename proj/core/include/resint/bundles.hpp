#pragma once

#include "resint/chow.hpp"
#include "resint/integer.hpp"
#include "resint/symfunc.hpp"

namespace resint {

/// Honest vector bundle: a rank and a total Chern class with constant term 1.
/// The constructor drops Chern classes of degree above the rank.
class BundleClass {
 public:
  BundleClass(int rank, GradedPoly total_chern);

  int rank() const noexcept { return rank_; }
  const GradedPoly& total_chern() const noexcept { return chern_; }
  const GeneratorSpec& spec() const noexcept { return chern_.spec(); }

  friend bool operator==(const BundleClass&, const BundleClass&) = default;

 private:
  int rank_;
  GradedPoly chern_;
};

/// Formal difference of bundles. Carries no rank; Chern classes of any
/// degree are read straight from the series.
class VirtualClass {
 public:
  explicit VirtualClass(GradedPoly total_chern);

  const GradedPoly& total_chern() const noexcept { return chern_; }
  const GeneratorSpec& spec() const noexcept { return chern_.spec(); }

  friend bool operator==(const VirtualClass&, const VirtualClass&) = default;

 private:
  GradedPoly chern_;
};

/// Trivial bundle of the given rank (total Chern class 1).
BundleClass trivial_bundle(const GeneratorSpec& spec, int rank = 1);

/// U* on a Grassmannian: rank k, c_i(U*) the i-th generator.
BundleClass dual_tautological(const GrassContext& ctx);

GradedPoly chern(const BundleClass& e, int i);
GradedPoly chern(const VirtualClass& e, int i);

/// c_rank(E).
GradedPoly top_chern(const BundleClass& e);

/// s_i(E) for i > -rank: the degree-i part of c(E)^{-1}, zero for negative i.
/// Throws IndexError for i < -rank and CancellationRequired for i = -rank,
/// which has no integral representative; see segre_negrank_product.
GradedPoly segre(const BundleClass& e, int i);

/// Total Segre class c(E)^{-1}.
GradedPoly total_segre(const BundleClass& e);

/// c_top(E) * s_{-rank}(E) * other, using s_{-rank}(E) = -1/c_top(E);
/// the c_top factor cancels so the result is -other.
GradedPoly segre_negrank_product(const BundleClass& e, const GradedPoly& other);

/// Sym^d E by the splitting principle. E must be an honest bundle.
BundleClass sym_power(const BundleClass& e, int d);

/// E(m): c_i scaled by m^i.
BundleClass adams_twist(const BundleClass& e, const Integer& m);

/// A - B, with total Chern class c(A) s(B).
VirtualClass difference(const BundleClass& a, const BundleClass& b);
VirtualClass difference(const VirtualClass& a, const BundleClass& b);

/// r_m = rank Sym^m U* = binom(m + r, r).
Integer rank_sym(int r, int m);

}  // namespace resint
