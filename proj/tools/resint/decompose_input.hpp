#pragma once

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resint/residual.hpp"
#include "resint/struct_ring.hpp"

namespace resint::cli {

enum class Method { divisor, symmetric };

/// Parsed decomposition input. The file is a list of `key = value` lines
/// ('#' starts a comment):
///
///   ring = NAME          ring from the ring file (or a built-in)
///   d = 2                codimension of X in Y
///   k = 2                dimension of V
///   cN = EXPR            total Chern class of N, over the ring
///   method = divisor     or symmetric
///   labels = A, B        component labels
///
/// divisor:   divisor, segre_D, segre_R and optionally segre_W
/// symmetric: E1, E2 (exceptional classes on a ring with a push-forward)
struct DecomposeInput {
  std::shared_ptr<const StructRing> ring;
  int d = 0;
  int k = 0;
  StructElement cN;
  Method method = Method::divisor;
  std::vector<std::string> labels;
  std::map<std::string, StructElement> classes;
};

/// Throws ParseError (with line numbers) or ValidationError.
DecomposeInput read_decompose_input(std::istream& in, const RingLibrary& library);

/// Runs the decomposition described by `input`. With `standard`, a divisor input
/// is split the standard way instead: segre_D's main term against segre_W.
/// The result is pushed forward when the ring has a push-forward; degrees are
/// attached when the final ring's top degree equals d.
Decomposition<StructElement> run_decomposition(const DecomposeInput& input, bool standard);

/// The ring classes of the result are formatted in.
const StructRing& result_ring(const DecomposeInput& input);

}  // namespace resint::cli
