#pragma once

// Residual intersection decompositions of a refined product X.V.
//
// Everything is graded by codimension in V. A Segre class s(Z,V) whose
// dimension-m piece is s_m(Z,V) stores that piece in codimension k - m,
// where k = dim V. The product X.V lives in codimension d.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resint/bundles.hpp"
#include "resint/errors.hpp"
#include "resint/integer.hpp"
#include "resint/ring.hpp"

namespace resint {

template <ChowRing R>
class IntersectionSetup {
 public:
  using Element = typename R::Element;

  /// cN is the total Chern class of N (constant term 1), d the codimension of
  /// X in Y and k the dimension of V.
  IntersectionSetup(const R& ring, Element cN, int d, int k)
      : ring_(&ring), cN_(std::move(cN)), d_(d), k_(k) {
    if (d < 1) throw ValidationError("intersection setup: codimension d must be >= 1");
    if (k < 0) throw ValidationError("intersection setup: dimension k must be >= 0");
    if (!ring.equal(ring.component(cN_, 0), ring.one())) {
      throw ValidationError("intersection setup: c(N) must have constant term 1");
    }
  }

  const R& ring() const noexcept { return *ring_; }
  const Element& cN() const noexcept { return cN_; }
  int d() const noexcept { return d_; }
  int k() const noexcept { return k_; }
  /// c_i(N).
  Element chern(int i) const { return ring_->component(cN_, i); }

 private:
  const R* ring_;
  Element cN_;
  int d_;
  int k_;
};

/// s(Z,V) stored by codimension.
template <class E>
struct SegreData {
  E total;
};

template <class E>
struct DecompositionComponent {
  std::string label;
  E main;
  E adjunct;
  E total;
  std::optional<Integer> main_degree;
  std::optional<Integer> adjunct_degree;
  std::optional<Integer> total_degree;
};

/// Per-component main and adjunct terms plus the ambient class they should
/// add up to. `conserved` records whether the totals sum to `ambient` in the
/// ring.
template <class E>
struct Decomposition {
  std::vector<DecompositionComponent<E>> components;
  E ambient;
  std::optional<Integer> ambient_degree;
  bool conserved = false;
};

/// Rank and total Chern class of a bundle over an arbitrary ring.
template <class E>
struct ChernData {
  int rank;
  E total_chern;
};

namespace detail {

template <ChowRing R>
typename R::Element power(const R& ring, const typename R::Element& a, int e) {
  auto out = ring.one();
  for (int i = 0; i < e; ++i) out = ring.mul(out, a);
  return out;
}

template <ChowRing R>
Decomposition<typename R::Element> finish(const R& ring,
                                          std::vector<DecompositionComponent<typename R::Element>> parts,
                                          std::optional<typename R::Element> ambient) {
  auto sum = ring.zero();
  for (auto& c : parts) {
    c.total = ring.add(c.main, c.adjunct);
    sum = ring.add(sum, c.total);
  }
  Decomposition<typename R::Element> out{std::move(parts), ambient ? *ambient : sum, std::nullopt, false};
  out.conserved = ring.equal(sum, out.ambient);
  return out;
}

}  // namespace detail

/// Integrates every class of the decomposition.
template <IntegratingRing R>
void attach_degrees(const R& ring, Decomposition<typename R::Element>& dec) {
  for (auto& c : dec.components) {
    c.main_degree = ring.integrate(c.main);
    c.adjunct_degree = ring.integrate(c.adjunct);
    c.total_degree = ring.integrate(c.total);
  }
  dec.ambient_degree = ring.integrate(dec.ambient);
}

/// Push-forward of every class along the ring's push-forward, with degrees
/// computed in the target.
inline Decomposition<StructElement> push_forward(const StructRing& ring,
                                                 const Decomposition<StructElement>& dec) {
  const StructRing& target = ring.pushforward_target();
  Decomposition<StructElement> out{{}, ring.pushforward(dec.ambient), std::nullopt, false};
  auto sum = target.zero();
  for (const auto& c : dec.components) {
    DecompositionComponent<StructElement> p{c.label, ring.pushforward(c.main), ring.pushforward(c.adjunct),
                                            ring.pushforward(c.total), {}, {}, {}};
    sum = target.add(sum, p.total);
    out.components.push_back(std::move(p));
  }
  out.conserved = dec.conserved && target.equal(sum, out.ambient);
  attach_degrees(target, out);
  return out;
}

/// {c(N) s(Z,V)}_{k-d}: the codimension-d part of c(N) s(Z,V).
template <ChowRing R>
typename R::Element main_term(const IntersectionSetup<R>& setup,
                              const SegreData<typename R::Element>& sZ) {
  const R& ring = setup.ring();
  return ring.component(ring.mul(setup.cN(), sZ.total), setup.d());
}

/// Decomposition of X.V along W = D + R with D a Cartier divisor of V and R
/// the residual scheme to D in W:
///
///   R_D = {c(N) s(D,V)}_{k-d}
///       + sum_{i=0}^{d-2} sum_{j=1}^{d-1-i} binom(d-1-i, j) c_i(N) s_{d-i-j}(D) s_{k-j}(R,V)
///   R_R = {c(N) s(R,V)}_{k-d}
///       + sum_{i=0}^{d-2} sum_{j=1}^{d-1-i} binom(d-1-i, j) c_i(N) s_j(D) s_{k-d+i+j}(R,V)
///
/// with s_j(D) = (-D)^j. The main terms are the standard ones; the double sums
/// are the adjunct terms. When sW = s(W,V) is given the ambient class is
/// {c(N) s(W,V)}_{k-d}, otherwise the sum of the two totals.
template <ChowRing R>
Decomposition<typename R::Element> divisor_decompose(
    const IntersectionSetup<R>& setup, const SegreData<typename R::Element>& sD,
    const typename R::Element& divisor, const SegreData<typename R::Element>& sR,
    const std::optional<SegreData<typename R::Element>>& sW = std::nullopt,
    std::string label_d = "D", std::string label_r = "R") {
  const R& ring = setup.ring();
  const int d = setup.d();
  if (!ring.equal(ring.component(divisor, 1), divisor)) {
    throw ValidationError("divisor_decompose: divisor class must be homogeneous of codimension 1");
  }
  const auto minus_d = ring.neg(divisor);
  auto adj_d = ring.zero();
  auto adj_r = ring.zero();
  for (int i = 0; i <= d - 2; ++i) {
    const auto ci = setup.chern(i);
    for (int j = 1; j <= d - 1 - i; ++j) {
      const Integer b = binomial(d - 1 - i, j);
      adj_d = ring.add(adj_d, ring.scale(ring.mul(ring.mul(ci, detail::power(ring, minus_d, d - i - j)),
                                                  ring.component(sR.total, j)),
                                         b));
      adj_r = ring.add(adj_r, ring.scale(ring.mul(ring.mul(ci, detail::power(ring, minus_d, j)),
                                                  ring.component(sR.total, d - i - j)),
                                         b));
    }
  }
  std::vector<DecompositionComponent<typename R::Element>> parts;
  parts.push_back({std::move(label_d), main_term(setup, sD), ring.component(adj_d, d), ring.zero(), {}, {}, {}});
  parts.push_back({std::move(label_r), main_term(setup, sR), ring.component(adj_r, d), ring.zero(), {}, {}, {}});
  std::optional<typename R::Element> ambient;
  if (sW) ambient = main_term(setup, *sW);
  return detail::finish(ring, std::move(parts), std::move(ambient));
}

/// The standard residual split of X.V: Z gets its main term
/// {c(N) s(Z,V)}_{k-d} and the residual gets everything else.
template <ChowRing R>
Decomposition<typename R::Element> standard_decompose(const IntersectionSetup<R>& setup,
                                                      const SegreData<typename R::Element>& sZ,
                                                      const SegreData<typename R::Element>& sW,
                                                      std::string label_z = "Z",
                                                      std::string label_r = "R") {
  const R& ring = setup.ring();
  const auto total = main_term(setup, sW);
  const auto mz = main_term(setup, sZ);
  std::vector<DecompositionComponent<typename R::Element>> parts;
  parts.push_back({std::move(label_z), mz, ring.zero(), ring.zero(), {}, {}, {}});
  parts.push_back({std::move(label_r), ring.sub(total, mz), ring.zero(), ring.zero(), {}, {}, {}});
  return detail::finish(ring, std::move(parts), total);
}

/// Symmetric decomposition over a blow-up pi: V~ -> V whose exceptional
/// divisor splits as E~1 + E~2. For l = 1, 2:
///
///   R_{Z_l} = pi_* sum_{i=0}^{d-1} sum_{j=0}^{d-1-i} binom(d-1-i, j)
///                 c_i(N) (-E~_{l^})^j (-E~_l)^{d-1-i-j} [E~_l]
///
/// where l^ is the other index. The j = 0 terms form the main term, the rest
/// the adjunct term. The setup lives on the blow-up ring (c(N) pulled back);
/// the result is pushed forward to the base. The ambient class is
/// pi_* sum_i c_i(N) (-E~1 - E~2)^{d-1-i} [E~1 + E~2].
inline Decomposition<StructElement> symmetric_decompose(const IntersectionSetup<StructRing>& setup,
                                                        const StructElement& e1, const StructElement& e2,
                                                        std::string label1 = "Z1",
                                                        std::string label2 = "Z2") {
  const StructRing& ring = setup.ring();
  if (!ring.has_pushforward()) {
    throw UnsupportedOperation("symmetric_decompose: ring " + ring.name() + " has no push-forward");
  }
  for (const auto* e : {&e1, &e2}) {
    if (!ring.equal(ring.component(*e, 1), *e)) {
      throw ValidationError("symmetric_decompose: exceptional classes must have codimension 1");
    }
  }
  const int d = setup.d();
  auto piece = [&](const StructElement& own, const StructElement& other) {
    const auto minus_own = ring.neg(own);
    const auto minus_other = ring.neg(other);
    StructElement main = ring.zero();
    StructElement adjunct = ring.zero();
    for (int i = 0; i <= d - 1; ++i) {
      const auto ci = setup.chern(i);
      for (int j = 0; j <= d - 1 - i; ++j) {
        auto term = ring.mul(ring.mul(ci, detail::power(ring, minus_other, j)),
                             ring.mul(detail::power(ring, minus_own, d - 1 - i - j), own));
        term = ring.scale(term, binomial(d - 1 - i, j));
        if (j == 0) {
          main = ring.add(main, term);
        } else {
          adjunct = ring.add(adjunct, term);
        }
      }
    }
    return std::pair{ring.component(main, d), ring.component(adjunct, d)};
  };
  auto [m1, a1] = piece(e1, e2);
  auto [m2, a2] = piece(e2, e1);

  const auto w = ring.add(e1, e2);
  auto ambient = ring.zero();
  for (int i = 0; i <= d - 1; ++i) {
    ambient = ring.add(ambient, ring.mul(setup.chern(i), ring.mul(detail::power(ring, ring.neg(w), d - 1 - i), w)));
  }
  std::vector<DecompositionComponent<StructElement>> parts;
  parts.push_back({std::move(label1), std::move(m1), std::move(a1), ring.zero(), {}, {}, {}});
  parts.push_back({std::move(label2), std::move(m2), std::move(a2), ring.zero(), {}, {}, {}});
  return push_forward(ring, detail::finish(ring, std::move(parts), ring.component(ambient, d)));
}

/// Decomposition for Z1, Z2 regularly embedded in V with normal bundles N1,
/// N2 of ranks r1, r2, meeting properly in Z_int:
///
///   M_{Z_l} = c_{d-r_l}(N - N_l) [Z_l]
///   A_{Z_l} = - sum_{i=0}^{d-r1-r2} sum_{j=r_{l^}}^{d-r_l-i} binom(d-1-i, j)
///               c_i(N) s_{j-r_{l^}}(N_{l^}) s_{d-r_l-i-j}(N_l) [Z_int]
///
/// Empty ranges contribute zero. `ambient`, when given, is the class the
/// totals must add up to (for a zero scheme of a section of N, c_d(N)).
template <ChowRing R>
Decomposition<typename R::Element> regular_decompose(
    const IntersectionSetup<R>& setup, const ChernData<typename R::Element>& n1,
    const ChernData<typename R::Element>& n2, const typename R::Element& z1,
    const typename R::Element& z2, const typename R::Element& zint,
    std::optional<typename R::Element> ambient = std::nullopt, std::string label1 = "Z1",
    std::string label2 = "Z2") {
  const R& ring = setup.ring();
  const int d = setup.d();
  const std::array<const ChernData<typename R::Element>*, 2> normal{&n1, &n2};
  const std::array<const typename R::Element*, 2> cls{&z1, &z2};
  const std::array<typename R::Element, 2> segre{ring.inverse(n1.total_chern), ring.inverse(n2.total_chern)};
  const int r_sum = n1.rank + n2.rank;

  std::vector<DecompositionComponent<typename R::Element>> parts;
  for (int l = 0; l < 2; ++l) {
    const int other = 1 - l;
    const int rl = normal[l]->rank;
    const int ro = normal[other]->rank;
    auto main = ring.zero();
    if (d - rl >= 0) {
      main = ring.mul(ring.component(ring.mul(setup.cN(), segre[l]), d - rl), *cls[l]);
    }
    auto sum = ring.zero();
    for (int i = 0; i <= d - r_sum; ++i) {
      const auto ci = setup.chern(i);
      for (int j = ro; j <= d - rl - i; ++j) {
        auto term = ring.mul(ci, ring.mul(ring.component(segre[other], j - ro),
                                          ring.component(segre[l], d - rl - i - j)));
        sum = ring.add(sum, ring.scale(term, binomial(d - 1 - i, j)));
      }
    }
    auto adjunct = ring.neg(ring.mul(sum, zint));
    parts.push_back({l == 0 ? label1 : label2, std::move(main), std::move(adjunct), ring.zero(), {}, {}, {}});
  }
  return detail::finish(ring, std::move(parts), std::move(ambient));
}

/// regular_decompose with honest bundles over a polynomial ring.
inline Decomposition<GradedPoly> regular_decompose(const IntersectionSetup<PolyRing>& setup,
                                                   const BundleClass& n1, const BundleClass& n2,
                                                   const GradedPoly& z1, const GradedPoly& z2,
                                                   const GradedPoly& zint,
                                                   std::optional<GradedPoly> ambient = std::nullopt,
                                                   std::string label1 = "Z1", std::string label2 = "Z2") {
  return regular_decompose(setup, ChernData<GradedPoly>{n1.rank(), n1.total_chern()},
                           ChernData<GradedPoly>{n2.rank(), n2.total_chern()}, z1, z2, zint,
                           std::move(ambient), std::move(label1), std::move(label2));
}

/// Sum of main terms over components W_i whose pairwise intersections have
/// codimension > d (the caller asserts this); the adjunct terms then vanish.
template <ChowRing R>
typename R::Element disjoint_sum(const IntersectionSetup<R>& setup,
                                 const std::vector<SegreData<typename R::Element>>& segre_list) {
  const R& ring = setup.ring();
  auto out = ring.zero();
  for (const auto& s : segre_list) out = ring.add(out, main_term(setup, s));
  return out;
}

}  // namespace resint
