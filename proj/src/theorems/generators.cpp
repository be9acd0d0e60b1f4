#include "theorems/generators.hpp"

#include "core/error.hpp"

namespace rzlab {

long InstanceRng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

ExactPoly random_poly(InstanceRng& rng, int degree, long height) {
  std::vector<BigRational> c;
  for (int k = 0; k < degree; ++k) c.emplace_back(rng.uniform(-height, height));
  long lead = 0;
  while (lead == 0) lead = rng.uniform(-height, height);
  c.emplace_back(lead);
  return ExactPoly(std::move(c));
}

ExactPoly random_poly_with_repeats(InstanceRng& rng, int max_degree, long height) {
  for (;;) {
    const int target = static_cast<int>(rng.uniform(1, max_degree));
    ExactPoly p = ExactPoly::constant(BigRational(rng.uniform(1, 3) * (rng.coin() ? 1 : -1)));
    int deg = 0;
    while (deg < target) {
      const int room = target - deg;
      const int fdeg = room >= 2 && rng.coin() ? 2 : 1;
      const int mult = static_cast<int>(rng.uniform(1, std::max(1, room / fdeg)));
      const ExactPoly factor = random_poly(rng, fdeg, std::min<long>(height, 5));
      p *= factor.pow(static_cast<unsigned>(mult));
      deg += fdeg * mult;
    }
    if (!p.is_constant()) return p;
  }
}

ExactRatFun random_ratfun(InstanceRng& rng, int max_degree, long height) {
  for (;;) {
    const int dq = static_cast<int>(rng.uniform(1, max_degree));
    const int dp = static_cast<int>(rng.uniform(0, max_degree));
    const ExactPoly num = random_poly(rng, dp, height);
    const ExactPoly den = random_poly(rng, dq, height);
    const ExactRatFun f = ExactRatFun::normalize(num, den);
    if (!f.is_polynomial() && !f.is_constant() && f.degree() <= max_degree) return f;
  }
}

ExactRatFun random_ratfun_with_multiple_pole(InstanceRng& rng, long height) {
  for (;;) {
    const int s = static_cast<int>(rng.uniform(2, 3));
    const ExactPoly root_factor = random_poly(rng, 1, height);
    ExactPoly den = root_factor.pow(static_cast<unsigned>(s));
    if (rng.coin()) den *= random_poly(rng, 1, height);
    const ExactPoly num = random_poly(rng, static_cast<int>(rng.uniform(0, 2)), height);
    const ExactRatFun f = ExactRatFun::normalize(num, den);
    if (!f.is_constant() && f.den().degree() == den.degree()) return f;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (label + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rzlab
