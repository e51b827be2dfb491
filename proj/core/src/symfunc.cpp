#include "resint/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "resint/errors.hpp"
#include "resint/expression.hpp"

namespace resint {

// ---------------------------------------------------------------------------
// GeneratorSpec

GeneratorSpec::GeneratorSpec(std::vector<std::string> names, std::vector<int> degrees,
                             int truncation) {
  if (names.size() != degrees.size()) {
    throw ValidationError("generator spec: " + std::to_string(names.size()) + " names but " +
                          std::to_string(degrees.size()) + " degrees");
  }
  for (int d : degrees) {
    if (d < 1) throw ValidationError("generator spec: degrees must be >= 1");
  }
  if (truncation < 0) throw ValidationError("generator spec: truncation must be >= 0");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw ValidationError("generator spec: empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw ValidationError("generator spec: duplicate generator '" + names[i] + "'");
      }
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(names), std::move(degrees), truncation});
}

GeneratorSpec GeneratorSpec::roots(std::size_t count, int truncation, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return GeneratorSpec(std::move(names), std::vector<int>(count, 1), truncation);
}

GeneratorSpec GeneratorSpec::elementary(std::size_t count, int truncation,
                                        std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 1; i <= count; ++i) names.push_back("e" + std::to_string(i));
  }
  std::vector<int> degrees(count);
  std::iota(degrees.begin(), degrees.end(), 1);
  return GeneratorSpec(std::move(names), std::move(degrees), truncation);
}

std::size_t GeneratorSpec::index_of(std::string_view name) const {
  const auto& n = names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw ParseError("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - n.begin());
}

GeneratorSpec GeneratorSpec::with_truncation(int truncation) const {
  return GeneratorSpec(names(), degrees(), truncation);
}

bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->truncation == b.data_->truncation && a.data_->degrees == b.data_->degrees &&
         a.data_->names == b.data_->names;
}

// ---------------------------------------------------------------------------
// GradedPoly

namespace {

int weighted_degree(const GeneratorSpec& spec, const std::vector<int>& exponents) {
  const auto& deg = spec.degrees();
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) total += exponents[i] * deg[i];
  return total;
}

}  // namespace

GradedPoly GradedPoly::constant(const GeneratorSpec& spec, const Integer& value) {
  GradedPoly p(spec);
  p.add_term(std::vector<int>(spec.size(), 0), value);
  return p;
}

GradedPoly GradedPoly::generator(const GeneratorSpec& spec, std::size_t i) {
  if (i >= spec.size()) throw IndexError("generator index out of range");
  std::vector<int> e(spec.size(), 0);
  e[i] = 1;
  return monomial(spec, std::move(e));
}

GradedPoly GradedPoly::variable(const GeneratorSpec& spec, std::string_view name) {
  return generator(spec, spec.index_of(name));
}

GradedPoly GradedPoly::monomial(const GeneratorSpec& spec, std::vector<int> exponents,
                                const Integer& coefficient) {
  if (exponents.size() != spec.size()) throw ContextMismatch("exponent vector has wrong length");
  for (int e : exponents) {
    if (e < 0) throw IndexError("negative exponent");
  }
  GradedPoly p(spec);
  p.add_term(std::move(exponents), coefficient);
  return p;
}

void GradedPoly::add_term(std::vector<int> exponents, const Integer& c) {
  int degree = weighted_degree(spec_, exponents);
  add_term(Monomial{degree, std::move(exponents)}, c);
}

void GradedPoly::add_term(Monomial m, const Integer& c) {
  if (c == 0 || m.degree > spec_.truncation()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GradedPoly::coefficient(const std::vector<int>& exponents) const {
  if (exponents.size() != spec_.size()) return 0;
  auto it = terms_.find(Monomial{weighted_degree(spec_, exponents), exponents});
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer GradedPoly::constant_term() const {
  return coefficient(std::vector<int>(spec_.size(), 0));
}

int GradedPoly::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree;
}

GradedPoly GradedPoly::component(int degree) const {
  GradedPoly out(spec_);
  auto lo = terms_.lower_bound(Monomial{degree, std::vector<int>(spec_.size(), degree + 1)});
  for (auto it = lo; it != terms_.end() && it->first.degree == degree; ++it) {
    out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
  }
  return out;
}

GradedPoly GradedPoly::up_to(int degree) const {
  GradedPoly out(spec_);
  for (const auto& [m, c] : terms_) {
    if (m.degree > degree) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void GradedPoly::require_same_spec(const GradedPoly& other, const char* op) const {
  if (!(spec_ == other.spec_)) {
    throw ContextMismatch(std::string(op) + ": operands have different generator specs");
  }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  require_same_spec(other, "poly_add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  require_same_spec(other, "poly_sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Integer& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_same_spec(b, "poly_mul");
  const int limit = a.spec_.truncation();
  const std::size_t n = a.spec_.size();
  GradedPoly out(a.spec_);
  Monomial scratch{0, std::vector<int>(n, 0)};
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.degree > limit) break;
    for (const auto& [mb, cb] : b.terms_) {
      // b is sorted by degree, so nothing further survives truncation.
      if (ma.degree + mb.degree > limit) break;
      scratch.degree = ma.degree + mb.degree;
      for (std::size_t i = 0; i < n; ++i) scratch.exponents[i] = ma.exponents[i] + mb.exponents[i];
      out.add_term(scratch, ca * cb);
    }
  }
  return out;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      int e = m.exponents[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += spec_.names()[i];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + "*" + factors;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) { return a + b; }

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly poly_pow(const GradedPoly& a, unsigned exponent) {
  GradedPoly result = GradedPoly::one(a.spec());
  GradedPoly base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GradedPoly series_inverse(const GradedPoly& a) {
  if (a.constant_term() != 1) {
    throw NonUnitError("series_inverse: constant term is " + a.constant_term().str() +
                       ", expected 1");
  }
  const int top = a.spec().truncation();
  std::vector<GradedPoly> parts;
  parts.reserve(static_cast<std::size_t>(top) + 1);
  for (int t = 0; t <= top; ++t) parts.push_back(a.component(t));

  std::vector<GradedPoly> inv;
  inv.reserve(parts.size());
  inv.push_back(GradedPoly::one(a.spec()));
  for (int t = 1; t <= top; ++t) {
    GradedPoly acc(a.spec());
    for (int j = 1; j <= t; ++j) {
      if (parts[j].is_zero() || inv[t - j].is_zero()) continue;
      acc += parts[j] * inv[t - j];
    }
    inv.push_back(-acc);
  }
  GradedPoly out(a.spec());
  for (const auto& p : inv) out += p;
  return out;
}

GradedPoly adams(const GradedPoly& a, const Integer& m) {
  GradedPoly out(a.spec());
  for (const auto& [mono, c] : a.terms()) {
    out.add_term(mono.exponents, c * ipow(m, static_cast<unsigned>(mono.degree)));
  }
  return out;
}

GradedPoly evaluate(const GradedPoly& p, std::span<const GradedPoly> images) {
  if (images.size() != p.spec().size()) {
    throw ContextMismatch("evaluate: expected " + std::to_string(p.spec().size()) + " images");
  }
  if (images.empty()) throw ContextMismatch("evaluate: no images to infer a target spec from");
  const GeneratorSpec& target = images.front().spec();
  for (const auto& img : images) {
    if (!(img.spec() == target)) throw ContextMismatch("evaluate: images over different specs");
  }
  // powers[i][e] = images[i]^e, grown on demand
  std::vector<std::vector<GradedPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(GradedPoly::one(target));
  auto power = [&](std::size_t i, int e) -> const GradedPoly& {
    auto& pw = powers[i];
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[static_cast<std::size_t>(e)];
  };

  GradedPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    GradedPoly term = GradedPoly::constant(target, c);
    for (std::size_t i = 0; i < m.exponents.size() && !term.is_zero(); ++i) {
      if (m.exponents[i] > 0) term = term * power(i, m.exponents[i]);
    }
    out += term;
  }
  return out;
}

GradedPoly elementary_symmetric(const GeneratorSpec& roots, std::size_t i) {
  for (int d : roots.degrees()) {
    if (d != 1) throw ContextMismatch("elementary_symmetric: root generators must have degree 1");
  }
  const std::size_t k = roots.size();
  GradedPoly out(roots);
  if (i > k) return out;
  // enumerate i-subsets of {0..k-1} via a selection mask
  std::vector<int> mask(k, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(i), 1);
  do {
    out.add_term(mask, 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

GradedPoly roots_to_e(const GradedPoly& p, const GeneratorSpec& target) {
  const GeneratorSpec& roots = p.spec();
  const std::size_t k = roots.size();
  for (int d : roots.degrees()) {
    if (d != 1) throw ContextMismatch("roots_to_e: root generators must have degree 1");
  }
  if (target.size() != k) {
    throw ContextMismatch("roots_to_e: target needs " + std::to_string(k) + " generators");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (target.degrees()[i] != static_cast<int>(i) + 1) {
      throw ContextMismatch("roots_to_e: target generator degrees must be 1..k");
    }
  }

  const int top = std::min(target.truncation(), std::max(p.max_degree(), 0));
  const GeneratorSpec work = roots.with_truncation(top);
  std::vector<GradedPoly> e;
  for (std::size_t i = 1; i <= k; ++i) e.push_back(elementary_symmetric(work, i));

  GradedPoly out(target);
  for (int t = 0; t <= top; ++t) {
    // remainder of degree t keyed by exponents; lex-largest first
    std::map<std::vector<int>, Integer, std::greater<>> rem;
    const GradedPoly part = p.component(t);
    for (const auto& [m, c] : part.terms()) rem.emplace(m.exponents, c);
    while (!rem.empty()) {
      auto lead = rem.begin();
      const std::vector<int> a = lead->first;
      const Integer c = lead->second;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (a[i] < a[i + 1]) {
          throw NotSymmetricError("roots_to_e: input is not symmetric (leading exponent not "
                                  "weakly decreasing at degree " + std::to_string(t) + ")");
        }
      }
      // e-exponents: b_i = a_i - a_{i+1}, b_k = a_k
      std::vector<int> b(k);
      for (std::size_t i = 0; i < k; ++i) b[i] = a[i] - (i + 1 < k ? a[i + 1] : 0);
      GradedPoly expansion = GradedPoly::one(work);
      for (std::size_t i = 0; i < k; ++i) {
        if (b[i] > 0) expansion = expansion * poly_pow(e[i], static_cast<unsigned>(b[i]));
      }
      for (const auto& [m, ce] : expansion.terms()) {
        auto [it, inserted] = rem.try_emplace(m.exponents, 0);
        it->second -= c * ce;
        if (it->second == 0) rem.erase(it);
      }
      out.add_term(b, c);
    }
  }
  return out;
}

GradedPoly parse_poly(const GeneratorSpec& spec, std::string_view text, std::size_t line) {
  GradedPoly out(spec);
  for (const auto& term : parse_expression(text, line)) {
    std::vector<int> exps(spec.size(), 0);
    for (const auto& [name, e] : term.factors) {
      std::size_t idx;
      try {
        idx = spec.index_of(name);
      } catch (const ParseError&) {
        throw ParseError("unknown generator '" + name + "'", line);
      }
      exps[idx] += static_cast<int>(e);
    }
    out.add_term(std::move(exps), term.coefficient);
  }
  return out;
}

}  // namespace resint
