#include "exactalg/sturm.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace rzlab {

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

ExactPoly scale_abs_leading(const ExactPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / abs(p.leading()));
}

}  // namespace

SturmChain::SturmChain(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  chain_.push_back(scale_abs_leading(p));
  ExactPoly d = scale_abs_leading(p.derivative());
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    ExactPoly r = -divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain_.push_back(scale_abs_leading(r));
  }
}

int SturmChain::variations_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return count_variations(signs);
}

int SturmChain::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    int s = sgn(q.leading());
    if (q.deg() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::count_in(const BigRational& a, const BigRational& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_real() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int sturm_distinct_real_roots(const ExactPoly& p,
                              const std::optional<RationalInterval>& interval) {
  if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (p.is_constant()) return 0;
  // The chain of the square-free part counts (a, b] exactly even when an
  // endpoint is a root.
  SturmChain chain(squarefree_part(p));
  if (!interval) return chain.count_real();
  const auto& [a, b] = *interval;
  if (b < a) return 0;
  return chain.count_in(a, b) + (p.sign_at(a) == 0 ? 1 : 0);
}

BigRational cauchy_root_bound(const ExactPoly& p) {
  if (p.is_constant()) return 1;
  const BigRational lead = abs(p.leading());
  BigRational m = 0;
  for (std::size_t k = 0; k + 1 < p.coefficients().size(); ++k)
    m = std::max(m, BigRational(abs(p.coefficients()[k]) / lead));
  return 1 + m;
}

std::vector<IsolatedRoot> isolate_real_roots(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.is_constant()) return out;
  const ExactPoly q = squarefree_part(p);
  const SturmChain chain(q);
  const BigRational bound = cauchy_root_bound(q);

  struct Pending {
    BigRational lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  const BigRational lo0 = -bound, hi0 = bound;
  const int total = chain.count_in(lo0, hi0);
  if (total > 0) stack.push_back({lo0, hi0, total});
  // Intervals are (lo, hi] with q(lo), q(hi) != 0: |roots| < bound, and a
  // split point that hits a root is emitted as an exact root.
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    BigRational mid = (cur.lo + cur.hi) / 2;
    int left = chain.count_in(cur.lo, mid);
    const int right = cur.count - left;
    BigRational left_hi = mid, right_lo = mid;
    if (q.sign_at(mid) == 0) {
      out.push_back({mid, mid});
      --left;
      // Move both neighbouring endpoints off the root at mid.
      BigRational delta = (mid - cur.lo) / 2;
      while (chain.count_in(mid - delta, mid + delta) != 1 || q.sign_at(mid - delta) == 0 ||
             q.sign_at(mid + delta) == 0)
        delta /= 2;
      left_hi = mid - delta;
      right_lo = mid + delta;
    }
    if (left > 0) stack.push_back({cur.lo, left_hi, left});
    if (right > 0) stack.push_back({right_lo, cur.hi, right});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return out;
}

void bisect(const ExactPoly& q, IsolatedRoot& root) {
  if (root.is_exact()) return;
  BigRational mid = (root.lo + root.hi) / 2;
  int sm = q.sign_at(mid);
  if (sm == 0) {
    root.lo = root.hi = mid;
  } else if (sm == q.sign_at(root.lo)) {
    root.lo = mid;
  } else {
    root.hi = mid;
  }
}

int refine_until_sign_constant(const ExactPoly& q, IsolatedRoot& root,
                               const ExactPoly& other) {
  if (other.is_zero()) throw DomainError("sign of the zero polynomial");
  if (other.is_constant()) return sgn(other.leading());
  if (root.is_exact()) {
    int s = other.sign_at(root.lo);
    if (s == 0) throw DomainError("polynomial vanishes at the isolated root");
    return s;
  }
  const ExactPoly other_sqf = squarefree_part(other);
  const SturmChain chain(other_sqf);
  for (int iter = 0; iter < 4096; ++iter) {
    if (root.is_exact()) return refine_until_sign_constant(q, root, other);
    const bool empty = chain.count_in(root.lo, root.hi) == 0 &&
                       other_sqf.sign_at(root.lo) != 0;
    if (empty) return other.sign_at(root.hi);
    bisect(q, root);
  }
  throw DomainError("polynomial vanishes at the isolated root");
}

}  // namespace rzlab
