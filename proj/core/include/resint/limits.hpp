#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resint/chow.hpp"
#include "resint/integer.hpp"
#include "resint/symfunc.hpp"

namespace resint {

/// An e-fold generic hypersurface of degree k, written X_k^e.
struct Piece {
  int degree = 1;
  int multiplicity = 1;

  friend bool operator==(const Piece&, const Piece&) = default;
  /// "X_k^e", or "X_k" when e = 1.
  std::string to_string() const;
  /// Parses "KxE" (e.g. "1x4"); a bare "K" means multiplicity 1.
  static Piece parse(const std::string& text);
};

/// A degree-d hypersurface in P^n degenerating to X_k^e + X_l^f, with the
/// Grassmannian of P^r's it is studied on.
class DegenerationSpec {
 public:
  /// Throws ValidationError unless all entries are >= 1 and k e + l f = d.
  DegenerationSpec(GrassContext ctx, int d, Piece first, Piece second);

  const GrassContext& context() const noexcept { return ctx_; }
  int d() const noexcept { return d_; }
  const Piece& first() const noexcept { return first_; }
  const Piece& second() const noexcept { return second_; }
  DegenerationSpec swapped() const { return DegenerationSpec(ctx_, d_, second_, first_); }

 private:
  GrassContext ctx_;
  int d_;
  Piece first_;
  Piece second_;
};

struct PieceReport {
  Piece piece;
  GradedPoly main;
  GradedPoly adjunct;
  GradedPoly total;
  std::optional<Integer> main_degree;
  std::optional<Integer> adjunct_degree;
  std::optional<Integer> total_degree;

  friend bool operator==(const PieceReport&, const PieceReport&) = default;
};

/// Distribution of the limiting P^r's over the two pieces.
///
/// Degrees are present when the classes can be integrated: when
/// r_d >= dim G (top-degree classes, or classes that vanish), or when a
/// complementary Schubert class `pairing` was supplied.
struct LimitReport {
  int r = 0;
  int n = 0;
  int d = 0;
  std::array<PieceReport, 2> pieces;
  GradedPoly ambient;
  std::optional<Integer> ambient_degree;
  std::optional<Partition> pairing;
  bool conserved = false;

  friend bool operator==(const LimitReport&, const LimitReport&) = default;
};

/// [F_X] = c_{r_d}(Sym^d U*).
GradedPoly fano_class(const GrassContext& ctx, int d);

/// Degree of a class, integrated against sigma_pairing when one is given.
/// Returns nothing when the class is positive-dimensional and unpaired.
/// Throws ValidationError when the pairing has the wrong size.
std::optional<Integer> class_degree(const GrassContext& ctx, const GradedPoly& cls, int codim,
                                    const std::optional<Partition>& pairing);

/// Runs the regular-embedding decomposition with N = Sym^d U*,
/// N_1 = Sym^k U*(e), N_2 = Sym^l U*(f), [Z_i] = c_top(N_i) and
/// [Z_int] = c_top(N_1) c_top(N_2).
LimitReport decompose_degeneration(const DegenerationSpec& spec,
                                   const std::optional<Partition>& pairing = std::nullopt);

/// Same quantities from the closed formulas written out directly in terms of
/// Chern and Segre classes of the symmetric powers; an independent route
/// used to cross-check decompose_degeneration.
LimitReport decompose_degeneration_direct(const DegenerationSpec& spec,
                                          const std::optional<Partition>& pairing = std::nullopt);

/// All unordered splittings d = k e + l f into two pieces. Each pair is
/// oriented with the larger (multiplicity, degree) first; pairs are sorted by
/// first piece (multiplicity descending, degree ascending), then by second
/// piece the same way.
std::vector<std::pair<Piece, Piece>> enumerate_degenerations(int d);

}  // namespace resint
