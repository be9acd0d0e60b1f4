#pragma once

#include "exactalg/ratfun.hpp"

namespace rzlab {

// Zero census of a real polynomial g:
//   K  real simple zeros with g' > 0
//   L  real simple zeros with g' < 0
//   M  real multiple zeros of odd multiplicity
//   N  multiple zeros (real or not)
//   P  non-real simple zeros
struct ZeroCensus {
  int K = 0;
  int L = 0;
  int M = 0;
  int N = 0;
  int P = 0;

  // L + M + 1 >= K
  bool inequality_L() const { return L + M + 1 >= K; }
  // d >= K + L + P + M + 2N
  bool inequality_d(int d) const { return d >= K + L + P + M + 2 * N; }
};

// Requires a non-constant polynomial. Signs of g' at the real simple zeros
// are decided exactly by refining Sturm isolating intervals.
ZeroCensus zero_census(const ExactPoly& g);
ZeroCensus zero_census(const ExactRatFun& g);

// (n - 1) d - 1 + M + N + P.
int census_nonreal_bound(const ZeroCensus& census, int d, int n);

struct RolleResult {
  int real_zeros = 0;       // distinct real zeros of g + shift
  int gaps = 0;             // adjacent pairs examined
  int gaps_witnessed = 0;   // pairs holding a pole of g or a zero of g' that is not a zero of g + shift
  bool holds() const { return gaps_witnessed == gaps; }
};

// Checks that strictly between adjacent real zeros of g + shift there is a
// real pole of g or a real zero of g' that is not a zero of g + shift.
// Fewer than two real zeros make the check vacuous.
RolleResult rolle_interlace(const ExactRatFun& g, const BigRational& shift);
bool rolle_interlace_check(const ExactRatFun& g, const BigRational& shift);

}  // namespace rzlab
