#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "resint/chow.hpp"
#include "resint/errors.hpp"
#include "resint/integer.hpp"
#include "resint/struct_ring.hpp"
#include "resint/symfunc.hpp"

namespace resint {

/// What the residual evaluators need from an ambient graded ring. Degrees
/// are codimensions.
template <class R>
concept ChowRing = requires(const R& ring, const typename R::Element& a, const Integer& c, int deg) {
  typename R::Element;
  { ring.zero() } -> std::convertible_to<typename R::Element>;
  { ring.one() } -> std::convertible_to<typename R::Element>;
  { ring.add(a, a) } -> std::convertible_to<typename R::Element>;
  { ring.sub(a, a) } -> std::convertible_to<typename R::Element>;
  { ring.neg(a) } -> std::convertible_to<typename R::Element>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::Element>;
  { ring.scale(a, c) } -> std::convertible_to<typename R::Element>;
  { ring.component(a, deg) } -> std::convertible_to<typename R::Element>;
  { ring.inverse(a) } -> std::convertible_to<typename R::Element>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.equal(a, a) } -> std::convertible_to<bool>;
  { ring.format(a) } -> std::convertible_to<std::string>;
  { ring.top_degree() } -> std::convertible_to<int>;
};

template <class R>
concept IntegratingRing = ChowRing<R> && requires(const R& ring, const typename R::Element& a) {
  { ring.integrate(a) } -> std::convertible_to<Integer>;
};

/// Truncated polynomial ring over a GeneratorSpec, optionally identified with
/// the Chow ring of a Grassmannian (which supplies integration and equality
/// modulo the Grassmannian's relations).
class PolyRing {
 public:
  using Element = GradedPoly;

  explicit PolyRing(GeneratorSpec spec) : spec_(std::move(spec)) {}
  explicit PolyRing(const GrassContext& ctx) : spec_(ctx.spec()), grass_(ctx) {}

  const GeneratorSpec& spec() const noexcept { return spec_; }
  const std::optional<GrassContext>& grassmannian() const noexcept { return grass_; }

  GradedPoly zero() const { return GradedPoly(spec_); }
  GradedPoly one() const { return GradedPoly::one(spec_); }
  GradedPoly add(const GradedPoly& a, const GradedPoly& b) const { return checked(a) + checked(b); }
  GradedPoly sub(const GradedPoly& a, const GradedPoly& b) const { return checked(a) - checked(b); }
  GradedPoly neg(const GradedPoly& a) const { return -checked(a); }
  GradedPoly mul(const GradedPoly& a, const GradedPoly& b) const { return checked(a) * checked(b); }
  GradedPoly scale(const GradedPoly& a, const Integer& c) const { return checked(a) * c; }
  GradedPoly component(const GradedPoly& a, int degree) const { return checked(a).component(degree); }
  GradedPoly inverse(const GradedPoly& a) const { return series_inverse(checked(a)); }
  bool is_zero(const GradedPoly& a) const { return checked(a).is_zero(); }
  int top_degree() const noexcept { return spec_.truncation(); }
  std::string format(const GradedPoly& a) const { return a.to_string(); }

  /// Equality in the ring: Schubert normal forms on a Grassmannian,
  /// polynomial identity otherwise.
  bool equal(const GradedPoly& a, const GradedPoly& b) const {
    if (grass_) return to_schubert(*grass_, checked(a)) == to_schubert(*grass_, checked(b));
    return checked(a) == checked(b);
  }

  /// Throws UnsupportedOperation without a Grassmannian.
  Integer integrate(const GradedPoly& a) const {
    if (!grass_) throw UnsupportedOperation("integration needs a Grassmannian context");
    return resint::integrate(*grass_, checked(a));
  }

 private:
  const GradedPoly& checked(const GradedPoly& a) const {
    if (!(a.spec() == spec_)) throw ContextMismatch("element is not over this ring's generators");
    return a;
  }

  GeneratorSpec spec_;
  std::optional<GrassContext> grass_;
};

static_assert(IntegratingRing<PolyRing>);
static_assert(IntegratingRing<StructRing>);

}  // namespace resint
