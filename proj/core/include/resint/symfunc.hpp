#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resint/integer.hpp"

namespace resint {

/// Weighted generators of a truncated graded polynomial ring.
///
/// Generator i is called names[i] and has degree degrees[i] >= 1. Every
/// product drops terms whose weighted degree exceeds `truncation`. A spec with
/// no generators stands for the integers. Copies share storage, so passing a
/// spec around is cheap; equality is by value.
class GeneratorSpec {
 public:
  GeneratorSpec(std::vector<std::string> names, std::vector<int> degrees, int truncation);

  /// Generators x1..xk (or the given names) all of degree 1.
  static GeneratorSpec roots(std::size_t count, int truncation, std::string_view prefix = "x");

  /// Generators of degrees 1..count, named e1..ek unless names are given.
  static GeneratorSpec elementary(std::size_t count, int truncation,
                                  std::vector<std::string> names = {});

  std::size_t size() const noexcept { return data_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::vector<int>& degrees() const noexcept { return data_->degrees; }
  int truncation() const noexcept { return data_->truncation; }

  /// Index of the generator with the given name; throws ParseError if absent.
  std::size_t index_of(std::string_view name) const;

  /// Same generators with a different truncation.
  GeneratorSpec with_truncation(int truncation) const;

  friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> degrees;
    int truncation;
  };
  std::shared_ptr<const Data> data_;
};

/// Exponent vector tagged with its weighted degree. Ordered by degree
/// ascending, then exponents lexicographically descending; this is the
/// serialization order (x^2 before x*y before y^2 in equal degree).
struct Monomial {
  int degree = 0;
  std::vector<int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponents > b.exponents;
  }
};

/// Truncated polynomial with exact integer coefficients.
///
/// Canonical form: no stored coefficient is zero and no stored monomial has
/// degree above the truncation, so equal polynomials compare equal.
class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  explicit GradedPoly(GeneratorSpec spec) : spec_(std::move(spec)) {}

  static GradedPoly constant(const GeneratorSpec& spec, const Integer& value);
  static GradedPoly one(const GeneratorSpec& spec) { return constant(spec, 1); }
  /// The generator with index i.
  static GradedPoly generator(const GeneratorSpec& spec, std::size_t i);
  static GradedPoly variable(const GeneratorSpec& spec, std::string_view name);
  static GradedPoly monomial(const GeneratorSpec& spec, std::vector<int> exponents,
                             const Integer& coefficient = 1);

  const GeneratorSpec& spec() const noexcept { return spec_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coefficient(const std::vector<int>& exponents) const;
  Integer constant_term() const;
  /// Largest weighted degree present, -1 for the zero polynomial.
  int max_degree() const;

  /// Homogeneous part of the given weighted degree.
  GradedPoly component(int degree) const;
  /// Sum of the homogeneous parts of degree <= `degree`.
  GradedPoly up_to(int degree) const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Integer& factor);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Integer& c) { return a *= c; }
  friend GradedPoly operator*(const Integer& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }

  /// Adds c * x^exponents, dropping the term if above truncation.
  void add_term(std::vector<int> exponents, const Integer& c);

  /// e.g. `18*x^2*y + 9*y^2`; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Integer& c);
  void require_same_spec(const GradedPoly& other, const char* op) const;

  GeneratorSpec spec_;
  TermMap terms_;
};

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_pow(const GradedPoly& a, unsigned exponent);

/// Multiplicative inverse up to truncation, built degree by degree.
/// Throws NonUnitError unless the constant term is 1.
GradedPoly series_inverse(const GradedPoly& a);

/// Scales the degree-i part by m^i.
GradedPoly adams(const GradedPoly& a, const Integer& m);

/// Substitutes images[i] for generator i; the result lives over images' spec.
GradedPoly evaluate(const GradedPoly& p, std::span<const GradedPoly> images);

/// e_i in the root variables of `roots` (every generator of degree 1).
GradedPoly elementary_symmetric(const GeneratorSpec& roots, std::size_t i);

/// Rewrites a symmetric polynomial in k degree-1 root variables as a
/// polynomial in e_1..e_k over `target` (k generators of degrees 1..k).
/// Terms of p above target.truncation() are ignored. Throws
/// NotSymmetricError when p is not symmetric.
GradedPoly roots_to_e(const GradedPoly& p, const GeneratorSpec& target);

/// Parses the `to_string` format back; generator names must belong to spec.
GradedPoly parse_poly(const GeneratorSpec& spec, std::string_view text, std::size_t line = 0);

}  // namespace resint
