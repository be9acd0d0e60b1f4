#include "theorems/census.hpp"

#include "core/error.hpp"
#include "exactalg/sturm.hpp"
#include "rootlab/roots.hpp"

namespace rzlab {

ZeroCensus zero_census(const ExactPoly& g) {
  if (g.is_zero() || g.is_constant()) throw DomainError("zero census needs a non-constant polynomial");
  ZeroCensus census;
  const ExactPoly dg = g.derivative();
  for (const auto& [factor, mult] : squarefree_decompose(g)) {
    const int real = sturm_distinct_real_roots(factor);
    if (mult == 1) {
      census.P += factor.deg() - real;
      for (auto root : isolate_real_roots(factor)) {
        const int s = refine_until_sign_constant(factor, root, dg);
        if (s > 0) ++census.K;
        else ++census.L;
      }
    } else {
      census.N += factor.deg();
      if (mult % 2 == 1) census.M += real;
    }
  }
  return census;
}

ZeroCensus zero_census(const ExactRatFun& g) {
  if (!g.is_polynomial()) throw DomainError("zero census needs a polynomial");
  return zero_census(g.num() * g.den().leading());
}

int census_nonreal_bound(const ZeroCensus& c, int d, int n) {
  return (n - 1) * d - 1 + c.M + c.N + c.P;
}

RolleResult rolle_interlace(const ExactRatFun& g, const BigRational& shift) {
  RolleResult out;
  const ExactRatFun h = g + shift;
  if (h.is_zero() || h.num().is_constant()) return out;
  const ExactPoly hz = squarefree_part(h.num());
  std::vector<IsolatedRoot> zeros = isolate_real_roots(hz);
  out.real_zeros = static_cast<int>(zeros.size());
  if (zeros.size() < 2) return out;

  // Candidate witnesses: real poles of g and zeros of g' off the zero set
  // of g + shift. Poles of g are never zeros of g + shift.
  ExactPoly witnesses = g.den();
  const ExactRatFun dg = g.derivative();
  if (!dg.is_zero()) witnesses *= dg.num();
  if (witnesses.is_constant()) {
    out.gaps = static_cast<int>(zeros.size()) - 1;
    return out;
  }
  witnesses = squarefree_part(exclude_zeros_of(witnesses, hz));
  if (witnesses.is_constant()) {
    out.gaps = static_cast<int>(zeros.size()) - 1;
    return out;
  }

  // Shrink every isolating interval until it holds no witness, so that the
  // witnesses strictly between two zeros are those between the intervals.
  for (auto& z : zeros) refine_until_sign_constant(hz, z, witnesses);
  const SturmChain chain(witnesses);
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    ++out.gaps;
    const BigRational& a = zeros[i].hi;
    const BigRational& b = zeros[i + 1].lo;
    if (chain.count_in(a, b) > 0 || witnesses.sign_at(a) == 0) ++out.gaps_witnessed;
  }
  return out;
}

bool rolle_interlace_check(const ExactRatFun& g, const BigRational& shift) {
  return rolle_interlace(g, shift).holds();
}

}  // namespace rzlab
