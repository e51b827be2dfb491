#include "resint/bundles.hpp"

#include <algorithm>
#include <functional>

#include "resint/errors.hpp"

namespace resint {

namespace {

GradedPoly require_unit(GradedPoly c, const char* what) {
  if (c.constant_term() != 1) {
    throw ValidationError(std::string(what) + ": total Chern class must have constant term 1");
  }
  return c;
}

// All exponent vectors of length k summing to d, in colex order.
std::vector<std::vector<int>> multisets(int k, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, left - a);
    }
  };
  if (k > 0) rec(0, d);
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace

BundleClass::BundleClass(int rank, GradedPoly total_chern)
    : rank_(rank), chern_(require_unit(std::move(total_chern), "BundleClass").up_to(rank)) {
  if (rank < 0) throw ValidationError("BundleClass: rank must be non-negative");
}

VirtualClass::VirtualClass(GradedPoly total_chern)
    : chern_(require_unit(std::move(total_chern), "VirtualClass")) {}

BundleClass trivial_bundle(const GeneratorSpec& spec, int rank) {
  return BundleClass(rank, GradedPoly::one(spec));
}

BundleClass dual_tautological(const GrassContext& ctx) {
  GradedPoly c = GradedPoly::one(ctx.spec());
  for (int i = 1; i <= ctx.k(); ++i) c += ctx.chern_generator(i);
  return BundleClass(ctx.k(), std::move(c));
}

GradedPoly chern(const BundleClass& e, int i) {
  if (i < 0) throw IndexError("chern: negative index");
  return e.total_chern().component(i);
}

GradedPoly chern(const VirtualClass& e, int i) {
  if (i < 0) throw IndexError("chern: negative index");
  return e.total_chern().component(i);
}

GradedPoly top_chern(const BundleClass& e) { return chern(e, e.rank()); }

GradedPoly total_segre(const BundleClass& e) { return series_inverse(e.total_chern()); }

GradedPoly segre(const BundleClass& e, int i) {
  if (i < -e.rank()) {
    throw IndexError("segre: index " + std::to_string(i) + " below -rank " +
                     std::to_string(-e.rank()));
  }
  if (i == -e.rank()) {
    throw CancellationRequired("segre: s_{-rank}(E) = -1/c_top(E) must be paired with c_top(E); "
                               "use segre_negrank_product");
  }
  if (i < 0) return GradedPoly(e.spec());
  return total_segre(e).component(i);
}

GradedPoly segre_negrank_product(const BundleClass& e, const GradedPoly& other) {
  if (!(other.spec() == e.spec())) throw ContextMismatch("segre_negrank_product: spec mismatch");
  return -other;
}

BundleClass sym_power(const BundleClass& e, int d) {
  if (d < 0) throw IndexError("sym_power: negative degree");
  const int k = e.rank();
  const std::size_t rank = binomial(d + k - 1, k - 1).convert_to<std::size_t>();
  if (d == 0 || k == 0) return trivial_bundle(e.spec(), static_cast<int>(rank));

  const int top = e.spec().truncation();
  const GeneratorSpec roots = GeneratorSpec::roots(static_cast<std::size_t>(k), top);
  GradedPoly product = GradedPoly::one(roots);
  for (const auto& alpha : multisets(k, d)) {
    GradedPoly factor = GradedPoly::one(roots);
    for (int j = 0; j < k; ++j) {
      if (alpha[static_cast<std::size_t>(j)] != 0) {
        factor += GradedPoly::generator(roots, static_cast<std::size_t>(j)) *
                  Integer(alpha[static_cast<std::size_t>(j)]);
      }
    }
    product = product * factor;
  }
  const GradedPoly in_e = roots_to_e(product, GeneratorSpec::elementary(static_cast<std::size_t>(k), top));
  std::vector<GradedPoly> images;
  for (int i = 1; i <= k; ++i) images.push_back(chern(e, i));
  return BundleClass(static_cast<int>(rank), evaluate(in_e, images));
}

BundleClass adams_twist(const BundleClass& e, const Integer& m) {
  return BundleClass(e.rank(), adams(e.total_chern(), m));
}

VirtualClass difference(const BundleClass& a, const BundleClass& b) {
  if (!(a.spec() == b.spec())) throw ContextMismatch("difference: bundles over different specs");
  return VirtualClass(a.total_chern() * total_segre(b));
}

VirtualClass difference(const VirtualClass& a, const BundleClass& b) {
  if (!(a.spec() == b.spec())) throw ContextMismatch("difference: classes over different specs");
  return VirtualClass(a.total_chern() * total_segre(b));
}

Integer rank_sym(int r, int m) {
  if (r < 0 || m < 0) throw IndexError("rank_sym: r and m must be non-negative");
  return binomial(m + r, r);
}

}  // namespace resint
