#include "resint/limits.hpp"

#include <algorithm>
#include <cctype>

#include "resint/bundles.hpp"
#include "resint/errors.hpp"
#include "resint/residual.hpp"

namespace resint {

std::string Piece::to_string() const {
  std::string out = "X_" + std::to_string(degree);
  if (multiplicity != 1) out += "^" + std::to_string(multiplicity);
  return out;
}

Piece Piece::parse(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 4 ||
        !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("bad piece '" + text + "', expected KxE such as 1x4");
    }
    return std::stoi(s);
  };
  auto x = text.find_first_of("xX");
  if (x == std::string::npos) return Piece{number(text), 1};
  return Piece{number(text.substr(0, x)), number(text.substr(x + 1))};
}

DegenerationSpec::DegenerationSpec(GrassContext ctx, int d, Piece first, Piece second)
    : ctx_(std::move(ctx)), d_(d), first_(first), second_(second) {
  for (const Piece& p : {first_, second_}) {
    if (p.degree < 1 || p.multiplicity < 1) {
      throw ValidationError("degeneration: piece " + p.to_string() + " needs degree and multiplicity >= 1");
    }
  }
  if (first_.degree * first_.multiplicity + second_.degree * second_.multiplicity != d_) {
    throw ValidationError("degeneration: " + first_.to_string() + " + " + second_.to_string() +
                          " does not have degree " + std::to_string(d_));
  }
}

GradedPoly fano_class(const GrassContext& ctx, int d) {
  if (d < 1) throw ValidationError("fano_class: degree must be >= 1");
  return top_chern(sym_power(dual_tautological(ctx), d));
}

std::optional<Integer> class_degree(const GrassContext& ctx, const GradedPoly& cls, int codim,
                                    const std::optional<Partition>& pairing) {
  if (pairing) {
    if (codim + pairing->size() != ctx.dim()) {
      throw ValidationError("pairing class " + pairing->to_string() + " has codimension " +
                            std::to_string(pairing->size()) + ", expected " +
                            std::to_string(ctx.dim() - codim));
    }
    return integrate(ctx, cls * schubert_polynomial(ctx, *pairing));
  }
  if (codim >= ctx.dim()) return integrate(ctx, cls);
  return std::nullopt;
}

namespace {

struct Bundles {
  BundleClass sd;
  BundleClass n1;
  BundleClass n2;
};

Bundles make_bundles(const DegenerationSpec& spec) {
  const BundleClass u = dual_tautological(spec.context());
  return {sym_power(u, spec.d()),
          adams_twist(sym_power(u, spec.first().degree), spec.first().multiplicity),
          adams_twist(sym_power(u, spec.second().degree), spec.second().multiplicity)};
}

LimitReport finish(const DegenerationSpec& spec, std::array<PieceReport, 2> pieces,
                   GradedPoly ambient, int rd, const std::optional<Partition>& pairing) {
  const GrassContext& ctx = spec.context();
  LimitReport out{ctx.r(), ctx.n(), spec.d(), std::move(pieces), std::move(ambient), std::nullopt,
                  pairing, false};
  GradedPoly sum(ctx.spec());
  for (auto& p : out.pieces) {
    p.total = p.main + p.adjunct;
    sum += p.total;
    p.main_degree = class_degree(ctx, p.main, rd, pairing);
    p.adjunct_degree = class_degree(ctx, p.adjunct, rd, pairing);
    p.total_degree = class_degree(ctx, p.total, rd, pairing);
  }
  out.ambient_degree = class_degree(ctx, out.ambient, rd, pairing);
  out.conserved = to_schubert(ctx, sum) == to_schubert(ctx, out.ambient);
  return out;
}

}  // namespace

LimitReport decompose_degeneration(const DegenerationSpec& spec, const std::optional<Partition>& pairing) {
  const GrassContext& ctx = spec.context();
  const Bundles b = make_bundles(spec);
  const PolyRing ring(ctx);
  const int rd = b.sd.rank();
  const IntersectionSetup<PolyRing> setup(ring, b.sd.total_chern(), rd, ctx.dim());
  const GradedPoly z1 = top_chern(b.n1);
  const GradedPoly z2 = top_chern(b.n2);
  const GradedPoly ambient = top_chern(b.sd);
  const auto dec = regular_decompose(setup, b.n1, b.n2, z1, z2, z1 * z2, ambient,
                                     spec.first().to_string(), spec.second().to_string());
  std::array<PieceReport, 2> pieces{
      PieceReport{spec.first(), dec.components[0].main, dec.components[0].adjunct, GradedPoly(ctx.spec()), {}, {}, {}},
      PieceReport{spec.second(), dec.components[1].main, dec.components[1].adjunct, GradedPoly(ctx.spec()), {}, {}, {}},
  };
  return finish(spec, std::move(pieces), ambient, rd, pairing);
}

LimitReport decompose_degeneration_direct(const DegenerationSpec& spec,
                                          const std::optional<Partition>& pairing) {
  const GrassContext& ctx = spec.context();
  const Bundles b = make_bundles(spec);
  const int rd = b.sd.rank();

  // piece built on `own` with the other piece `other`
  auto piece = [&](const BundleClass& own, const BundleClass& other) {
    const int ro = own.rank();
    const int rt = other.rank();
    GradedPoly main_sum(ctx.spec());
    for (int i = 0; i <= rd - ro; ++i) main_sum += chern(b.sd, i) * segre(own, rd - ro - i);
    GradedPoly main = top_chern(own) * main_sum;

    GradedPoly adj_sum(ctx.spec());
    for (int i = 0; i <= rd - ro - rt; ++i) {
      for (int j = rt; j <= rd - ro - i; ++j) {
        adj_sum += chern(b.sd, i) * segre(other, j - rt) * segre(own, rd - ro - i - j) *
                   binomial(rd - 1 - i, j);
      }
    }
    GradedPoly adjunct = -(top_chern(own) * top_chern(other) * adj_sum);
    return std::pair{std::move(main), std::move(adjunct)};
  };
  auto [m1, a1] = piece(b.n1, b.n2);
  auto [m2, a2] = piece(b.n2, b.n1);
  std::array<PieceReport, 2> pieces{
      PieceReport{spec.first(), std::move(m1), std::move(a1), GradedPoly(ctx.spec()), {}, {}, {}},
      PieceReport{spec.second(), std::move(m2), std::move(a2), GradedPoly(ctx.spec()), {}, {}, {}},
  };
  return finish(spec, std::move(pieces), top_chern(b.sd), rd, pairing);
}

std::vector<std::pair<Piece, Piece>> enumerate_degenerations(int d) {
  // (multiplicity desc, degree asc)
  auto before = [](const Piece& a, const Piece& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return a.degree < b.degree;
  };
  // orientation: larger (multiplicity, degree) first
  auto larger = [](const Piece& a, const Piece& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return a.degree >= b.degree;
  };
  std::vector<Piece> all;
  for (int k = 1; k < d; ++k) {
    for (int e = 1; k * e < d; ++e) all.push_back({k, e});
  }
  std::vector<std::pair<Piece, Piece>> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      const Piece& a = all[i];
      const Piece& b = all[j];
      if (a.degree * a.multiplicity + b.degree * b.multiplicity != d) continue;
      out.push_back(larger(a, b) ? std::pair{a, b} : std::pair{b, a});
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    if (!(x.first == y.first)) return before(x.first, y.first);
    return before(x.second, y.second);
  });
  return out;
}

}  // namespace resint
