#pragma once

#include <cstdint>
#include <random>

#include "exactalg/ratfun.hpp"

namespace rzlab {

// Seeded source of random instances. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; integer ranges are drawn by
// rejection so that streams agree across standard libraries.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Integer coefficients in [-height, height], exact degree, nonzero leading
// coefficient.
ExactPoly random_poly(InstanceRng& rng, int degree, long height);

// Product of small random integer factors raised to random powers, so
// repeated roots (real and non-real) occur. Degree in [1, max_degree].
ExactPoly random_poly_with_repeats(InstanceRng& rng, int max_degree, long height);

// Reduced P/Q with deg Q >= 1 after reduction and max(deg P, deg Q) in
// [1, max_degree]. Degenerate draws are redrawn.
ExactRatFun random_ratfun(InstanceRng& rng, int max_degree, long height);

// Rational function whose denominator has a repeated root. `pole_power`
// receives the largest multiplicity.
ExactRatFun random_ratfun_with_multiple_pole(InstanceRng& rng, long height);

// Seed for an independent stream derived from a campaign seed and a label.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label);

}  // namespace rzlab
