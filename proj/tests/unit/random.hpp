#pragma once

#include <random>
#include <vector>

#include "resint/symfunc.hpp"

namespace resint::testing {

/// Random polynomial with coefficients in [-bound, bound]; constant term 1
/// when `unit` is set.
inline GradedPoly random_poly(const GeneratorSpec& spec, std::mt19937& rng, int bound = 5, bool unit = false,
                              int max_terms = 8) {
  GradedPoly p(spec);
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> terms(0, max_terms);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> exps(spec.size(), 0);
    int degree = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      std::uniform_int_distribution<int> e(0, 3);
      exps[i] = e(rng);
      degree += exps[i] * spec.degrees()[i];
    }
    if (degree > spec.truncation()) continue;
    p.add_term(exps, coeff(rng));
  }
  if (unit) p = p - GradedPoly::constant(spec, p.constant_term()) + GradedPoly::one(spec);
  return p;
}

}  // namespace resint::testing
