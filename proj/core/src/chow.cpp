#include "resint/chow.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "resint/errors.hpp"

namespace resint {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

bool Partition::fits(std::size_t rows, int cols) const noexcept {
  return parts_.size() <= rows && (parts_.empty() || parts_.front() <= cols);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.size() > 6) throw ParseError("partition part too large: " + cur);
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      throw ParseError("bad character '" + std::string(1, c) + "' in partition '" +
                       std::string(text) + "'");
    }
  }
  flush();
  try {
    return Partition(std::move(parts));
  } catch (const ValidationError& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

std::vector<Partition> partitions_in_box(std::size_t rows, int cols, int size) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == rows) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(size, cols);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// GrassContext

namespace {

GeneratorSpec grass_spec(int k, int dim) {
  std::vector<std::string> names;
  if (k <= 3) {
    static const char* const short_names[] = {"x", "y", "z"};
    for (int i = 0; i < k; ++i) names.emplace_back(short_names[i]);
  } else {
    for (int i = 1; i <= k; ++i) names.push_back("c" + std::to_string(i));
  }
  return GeneratorSpec::elementary(static_cast<std::size_t>(k), dim, std::move(names));
}

}  // namespace

GrassContext::GrassContext(int r, int n)
    : r_(r), n_(n), spec_(grass_spec(r >= 0 ? r + 1 : 1, r >= 0 && n > r ? (r + 1) * (n - r) : 0)) {
  if (r < 0) throw ValidationError("Grassmannian: r must be >= 0");
  if (n <= r) throw ValidationError("Grassmannian: n must exceed r");
}

GradedPoly GrassContext::chern_generator(int i) const {
  if (i == 0) return GradedPoly::one(spec_);
  if (i < 0 || i > k()) return GradedPoly(spec_);
  return GradedPoly::generator(spec_, static_cast<std::size_t>(i - 1));
}

Partition GrassContext::point_class() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(k()), m()));
}

// ---------------------------------------------------------------------------
// SchubertVector

SchubertVector SchubertVector::basis(const GrassContext& ctx, const Partition& lambda) {
  SchubertVector v(ctx);
  v.add(lambda, 1);
  return v;
}

Integer SchubertVector::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void SchubertVector::add(const Partition& lambda, const Integer& c) {
  if (!lambda.fits(static_cast<std::size_t>(ctx_.k()), ctx_.m())) {
    throw IndexError("partition " + lambda.to_string() + " leaves the " +
                     std::to_string(ctx_.k()) + "x" + std::to_string(ctx_.m()) + " box");
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SchubertVector& SchubertVector::operator+=(const SchubertVector& other) {
  if (!(ctx_ == other.ctx_)) throw ContextMismatch("Schubert vectors over different Grassmannians");
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
  return *this;
}

SchubertVector SchubertVector::operator*(const Integer& c) const {
  SchubertVector out(ctx_);
  if (c == 0) return out;
  out.coeffs_ = coeffs_;
  for (auto& [lambda, v] : out.coeffs_) v *= c;
  return out;
}

std::string SchubertVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  // largest partitions first reads more naturally
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [lambda, c] = *it;
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.str() + "*";
    out += "s" + lambda.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pieri, normal form, integration

SchubertVector dual_pieri_multiply(const SchubertVector& v, int i) {
  const GrassContext& ctx = v.context();
  const int k = ctx.k();
  const int m = ctx.m();
  if (i < 0 || i > k) {
    throw IndexError("dual_pieri_multiply: index " + std::to_string(i) + " outside [0, " +
                     std::to_string(k) + "]");
  }
  if (i == 0) return v;
  SchubertVector out(ctx);
  std::vector<int> strip(static_cast<std::size_t>(k), 0);
  std::fill(strip.begin(), strip.begin() + i, 1);
  std::vector<int> mu(static_cast<std::size_t>(k));
  for (const auto& [lambda, c] : v.coeffs()) {
    std::vector<int> mask = strip;
    do {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        auto ju = static_cast<std::size_t>(j);
        mu[ju] = lambda[ju] + mask[ju];
        if (mu[ju] > m) ok = false;
        if (j > 0 && mu[ju] > mu[ju - 1]) ok = false;
      }
      if (ok) out.add(Partition(mu), c);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

SchubertVector to_schubert(const GrassContext& ctx, const GradedPoly& p) {
  if (!(p.spec() == ctx.spec())) {
    throw ContextMismatch("to_schubert: polynomial is not over the Grassmannian's generators");
  }
  std::map<std::vector<int>, SchubertVector> memo;
  const std::size_t k = static_cast<std::size_t>(ctx.k());
  memo.emplace(std::vector<int>(k, 0), SchubertVector::basis(ctx, Partition{}));

  std::function<const SchubertVector&(const std::vector<int>&)> expand =
      [&](const std::vector<int>& e) -> const SchubertVector& {
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::size_t last = k;
    while (last > 0 && e[last - 1] == 0) --last;
    std::vector<int> prev = e;
    --prev[last - 1];
    SchubertVector next = dual_pieri_multiply(expand(prev), static_cast<int>(last));
    return memo.emplace(e, std::move(next)).first->second;
  };

  SchubertVector out(ctx);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.degree > ctx.dim()) continue;
    out += expand(mono.exponents) * c;
  }
  return out;
}

Integer integrate(const GrassContext& ctx, const GradedPoly& p) {
  if (!(p.spec() == ctx.spec())) {
    throw ContextMismatch("integrate: polynomial is not over the Grassmannian's generators");
  }
  return to_schubert(ctx, p.component(ctx.dim())).coefficient(ctx.point_class());
}

Integer integrate_oracle(const GrassContext& ctx, const GradedPoly& p) {
  if (!(p.spec() == ctx.spec())) {
    throw ContextMismatch("integrate_oracle: polynomial is not over the Grassmannian's generators");
  }
  const int k = ctx.k();
  const int m = ctx.m();
  const int vandermonde_degree = k * (k - 1) / 2;
  const GeneratorSpec roots =
      GeneratorSpec::roots(static_cast<std::size_t>(k), ctx.dim() + vandermonde_degree, "t");

  std::vector<GradedPoly> e;
  for (int i = 1; i <= k; ++i) e.push_back(elementary_symmetric(roots, static_cast<std::size_t>(i)));
  GradedPoly expanded = evaluate(p.component(ctx.dim()), e);

  GradedPoly vandermonde = GradedPoly::one(roots);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      vandermonde = vandermonde * (GradedPoly::generator(roots, static_cast<std::size_t>(i)) -
                                   GradedPoly::generator(roots, static_cast<std::size_t>(j)));
    }
  }
  std::vector<int> target(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] = m + k - 1 - i;
  return (expanded * vandermonde).coefficient(target);
}

GradedPoly schubert_polynomial(const GrassContext& ctx, const Partition& lambda) {
  if (!lambda.fits(static_cast<std::size_t>(ctx.k()), ctx.m())) {
    throw IndexError("schubert_polynomial: " + lambda.to_string() + " leaves the box");
  }
  const Partition conj = lambda.conjugate();
  const std::size_t size = conj.length();
  if (size == 0) return GradedPoly::one(ctx.spec());

  // entry(i, j) = e_{conj_i - i + j} = c_{conj_i - i + j}(U*)
  auto entry = [&](std::size_t i, std::size_t j) {
    return ctx.chern_generator(conj[i] - static_cast<int>(i) + static_cast<int>(j));
  };
  // Laplace expansion along the first remaining row
  std::vector<std::size_t> cols(size);
  for (std::size_t j = 0; j < size; ++j) cols[j] = j;
  std::function<GradedPoly(std::size_t, std::vector<std::size_t>&)> det =
      [&](std::size_t row, std::vector<std::size_t>& free_cols) -> GradedPoly {
    if (row == size) return GradedPoly::one(ctx.spec());
    GradedPoly acc(ctx.spec());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
      GradedPoly a = entry(row, free_cols[idx]);
      if (a.is_zero()) continue;
      std::size_t col = free_cols[idx];
      free_cols.erase(free_cols.begin() + static_cast<long>(idx));
      GradedPoly minor = det(row + 1, free_cols);
      free_cols.insert(free_cols.begin() + static_cast<long>(idx), col);
      if (idx % 2 == 0) {
        acc += a * minor;
      } else {
        acc -= a * minor;
      }
    }
    return acc;
  };
  return det(0, cols);
}

}  // namespace resint
