#pragma once

#include <optional>
#include <vector>

#include "exactalg/poly.hpp"

namespace rzlab {

struct RationalInterval {
  BigRational lo;
  BigRational hi;
};

// Sturm chain p_0 = p, p_1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Each
// remainder is divided by the absolute value of its leading coefficient,
// which keeps the signs intact.
class SturmChain {
 public:
  explicit SturmChain(const ExactPoly& p);

  // Sign changes of the chain at x (zeros skipped).
  int variations_at(const BigRational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  // Distinct real roots in the half-open interval (a, b].
  int count_in(const BigRational& a, const BigRational& b) const;
  int count_real() const;

  const std::vector<ExactPoly>& chain() const { return chain_; }

 private:
  std::vector<ExactPoly> chain_;
};

// Exact number of distinct real roots of p, on the whole line or on the
// closed interval [a, b]. Throws DomainError for p = 0.
int sturm_distinct_real_roots(const ExactPoly& p,
                              const std::optional<RationalInterval>& interval = std::nullopt);

// An isolating interval for one real root: either an exact rational root
// (lo == hi) or an open interval (lo, hi) with p(lo) p(hi) < 0 that holds
// exactly one root of the square-free polynomial it was built for.
struct IsolatedRoot {
  BigRational lo;
  BigRational hi;

  bool is_exact() const { return lo == hi; }
};

// Disjoint isolating intervals for all distinct real roots of p, sorted
// increasingly.
std::vector<IsolatedRoot> isolate_real_roots(const ExactPoly& p);

// Halves an isolating interval of a root of the square-free polynomial q.
void bisect(const ExactPoly& q, IsolatedRoot& root);

// Refines `root` (a root of the square-free q) until `other` has no root in
// the closed interval, then returns the sign of `other` there. `other`
// must not vanish at the root itself.
int refine_until_sign_constant(const ExactPoly& q, IsolatedRoot& root,
                               const ExactPoly& other);

// Cauchy bound: every complex root z of p has |z| < bound.
BigRational cauchy_root_bound(const ExactPoly& p);

}  // namespace rzlab
