#pragma once

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resint/integer.hpp"

namespace resint {

/// Coefficients against a StructRing's basis, in basis order.
struct StructElement {
  std::vector<Integer> coeffs;

  friend bool operator==(const StructElement&, const StructElement&) = default;
};

/// Finite graded ring given by integer structure constants on a homogeneous
/// basis, with a degree functional on the top degree and an optional
/// push-forward to another such ring.
///
/// Degrees are codimensions. Exactly one basis element has degree 0 and it is
/// the unit. Construction verifies that the table is commutative, associative
/// and homogeneous, that integration only sees the top degree and that the
/// push-forward preserves dimension.
class StructRing {
 public:
  using Element = StructElement;

  struct Basis {
    std::string label;
    int degree;
  };

  struct Product {
    std::size_t left;
    std::size_t right;
    Element value;
  };

  struct Pushforward {
    std::shared_ptr<const StructRing> target;
    /// images[i] = push-forward of basis element i, over target.
    std::vector<Element> images;
  };

  /// Products not listed are zero; products with the unit are implicit.
  StructRing(std::string name, std::vector<Basis> basis, const std::vector<Product>& products,
             std::vector<Integer> integral, std::optional<Pushforward> pushforward = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Basis>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  int top_degree() const noexcept { return top_degree_; }
  std::size_t index_of(std::string_view label) const;
  bool has_pushforward() const noexcept { return pushforward_.has_value(); }
  /// Throws UnsupportedOperation without a push-forward.
  const StructRing& pushforward_target() const;

  Element zero() const;
  Element one() const;
  Element basis_element(std::size_t i, const Integer& c = 1) const;
  Element element(std::string_view label, const Integer& c = 1) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(const Element& a, const Integer& c) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, unsigned e) const;
  /// Degree-`degree` part.
  Element component(const Element& a, int degree) const;
  /// Inverse of a unit-constant element, degree by degree.
  Element inverse(const Element& a) const;
  Integer integrate(const Element& a) const;
  Element pushforward(const Element& a) const;

  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// e.g. "1 + 4*h + 4*P"; "0" for zero.
  std::string format(const Element& a) const;
  /// Sums of products of basis labels and integers, e.g. "2*e + 4*P" or
  /// "h*h - 3". Throws ParseError for unknown labels.
  Element parse(std::string_view text, std::size_t line = 0) const;

 private:
  void require(const Element& a, const char* op) const;
  void check_table() const;

  std::string name_;
  std::vector<Basis> basis_;
  std::size_t unit_ = 0;
  int top_degree_ = 0;
  // table_[i][j] = basis_i * basis_j
  std::vector<std::vector<Element>> table_;
  std::vector<Integer> integral_;
  std::optional<Pushforward> pushforward_;
};

/// Free-function forms of the ring operations.
StructElement struct_mul(const StructRing& ring, const StructElement& a, const StructElement& b);
Integer struct_integrate(const StructRing& ring, const StructElement& a);
StructElement struct_pushforward(const StructRing& ring, const StructElement& a);

/// P^m with basis 1, h, h2, ..., h{m-1}, pt (pt = h^m) and integral pt = 1.
std::shared_ptr<const StructRing> projective_space(int m);

/// P^m with the identity push-forward onto a copy of P^m.
std::shared_ptr<const StructRing> projective_space_with_identity(int m);

/// Blow-up of P^2 at a point: basis 1, h, e, P with h*h = P, e*e = -P,
/// h*e = 0, integral P = 1, and push-forward to P^2 sending h to h, e to 0
/// and P to pt.
std::shared_ptr<const StructRing> blowup_p2_at_point();

/// Named rings, pre-populated lazily with the built-ins "P<m>" and "BlP2".
class RingLibrary {
 public:
  void add(std::shared_ptr<const StructRing> ring);
  /// Throws ValidationError if no ring of that name is known.
  std::shared_ptr<const StructRing> find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, std::shared_ptr<const StructRing>> rings_;
};

/// Reads ring blocks into `library`:
///
///   ring NAME
///   basis LABEL:DEGREE ...
///   mul LABEL LABEL = EXPR
///   integral LABEL = INTEGER
///   pushforward TARGET
///   push LABEL = EXPR            # EXPR over TARGET; every label required
///   end
///
/// '#' starts a comment. Errors are ParseError carrying the line number.
/// Returns the names of the rings read, in file order.
std::vector<std::string> load_struct_rings(std::istream& in, RingLibrary& library);

}  // namespace resint
