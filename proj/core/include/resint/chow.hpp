#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "resint/integer.hpp"
#include "resint/symfunc.hpp"

namespace resint {

/// Weakly decreasing list of positive parts (trailing zeros trimmed).
class Partition {
 public:
  Partition() = default;
  /// Sorts nothing: throws ValidationError unless `parts` is weakly decreasing
  /// and non-negative. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  /// Part i, 0 past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  Partition conjugate() const;
  bool fits(std::size_t rows, int cols) const noexcept;

  /// "(2,1)", "()" for the empty partition.
  std::string to_string() const;
  /// Accepts "2,1", "(2,1)", "2 1" or "" for the empty partition.
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Every partition inside the rows x cols box of the given size, in
/// lexicographic order.
std::vector<Partition> partitions_in_box(std::size_t rows, int cols, int size);

/// Chow ring of the Grassmannian of P^r's in P^n.
///
/// Generators are the Chern classes c_1..c_k of U*, k = r+1, with degrees
/// 1..k. They are named x, y, z for k <= 3 and c1..ck otherwise. Schubert
/// classes are indexed by partitions in the k x m box, m = n - r, and
/// c_i(U*) is the column class sigma_{1^i}.
class GrassContext {
 public:
  GrassContext(int r, int n);

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return r_ + 1; }
  int m() const noexcept { return n_ - r_; }
  int dim() const noexcept { return k() * m(); }
  const GeneratorSpec& spec() const noexcept { return spec_; }

  /// c_i(U*), with c_0 = 1 and c_i = 0 for i > k.
  GradedPoly chern_generator(int i) const;
  /// The full-box partition (m, ..., m).
  Partition point_class() const;

  friend bool operator==(const GrassContext& a, const GrassContext& b) {
    return a.r_ == b.r_ && a.n_ == b.n_;
  }

 private:
  int r_;
  int n_;
  GeneratorSpec spec_;
};

/// A class in the Schubert basis; zero coefficients are never stored.
class SchubertVector {
 public:
  explicit SchubertVector(GrassContext ctx) : ctx_(std::move(ctx)) {}
  static SchubertVector basis(const GrassContext& ctx, const Partition& lambda);

  const GrassContext& context() const noexcept { return ctx_; }
  const std::map<Partition, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer coefficient(const Partition& lambda) const;

  /// Adds c * sigma_lambda; throws IndexError if lambda leaves the box.
  void add(const Partition& lambda, const Integer& c);
  SchubertVector& operator+=(const SchubertVector& other);
  SchubertVector operator*(const Integer& c) const;

  friend bool operator==(const SchubertVector& a, const SchubertVector& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "s(3,1) + s(2,2)"; "0" for zero.
  std::string to_string() const;

 private:
  GrassContext ctx_;
  std::map<Partition, Integer> coeffs_;
};

/// Multiplication by c_i(U*): add a vertical strip of i boxes, discarding
/// results that leave the box. Throws IndexError unless 0 <= i <= k.
SchubertVector dual_pieri_multiply(const SchubertVector& v, int i);

/// Class of a polynomial in c_1(U*)..c_k(U*) in the Schubert basis.
SchubertVector to_schubert(const GrassContext& ctx, const GradedPoly& p);

/// Degree of the top-dimensional part of p (coefficient of the point class).
Integer integrate(const GrassContext& ctx, const GradedPoly& p);

/// Independent route to `integrate`: substitutes c_i = e_i(x_1..x_k), multiplies
/// by the Vandermonde product and reads the coefficient of
/// x_1^{m+k-1} x_2^{m+k-2} ... x_k^{m}.
Integer integrate_oracle(const GrassContext& ctx, const GradedPoly& p);

/// Polynomial representative of sigma_lambda (dual Jacobi-Trudi determinant
/// in the c_i(U*)). Throws IndexError if lambda leaves the box.
GradedPoly schubert_polynomial(const GrassContext& ctx, const Partition& lambda);

}  // namespace resint
