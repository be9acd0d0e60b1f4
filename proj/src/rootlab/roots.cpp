#include "rootlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "core/error.hpp"

namespace rzlab {

namespace {

using cd = std::complex<double>;

// Deterministic starting points on a perturbed circle of radius `radius`.
std::vector<cd> initial_guesses(int n, double radius) {
  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2 * std::numbers::pi * k / n + 0.4;
    const double r = radius * (1.0 + 0.01 * (k % 3));
    z[static_cast<std::size_t>(k)] = std::polar(r, angle);
  }
  return z;
}

// Aberth-Ehrlich sweeps in double precision. The result only seeds the
// multiprecision stage, so failure to converge is not an error here.
std::vector<cd> aberth_double(const std::vector<double>& c, std::vector<cd> z) {
  const std::size_t n = z.size();
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd p = c.back(), dp = 0.0;
      for (std::size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + c[k];
      }
      if (dp == 0.0) continue;
      const cd w = p / dp;
      cd s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const cd corr = w / (1.0 - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

struct Evaluation {
  MpComplex p;
  MpComplex dp;
};

Evaluation eval_with_derivative(const std::vector<MpReal>& c, const MpComplex& z) {
  MpComplex p(c.back()), dp(0);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += c[k];
  }
  return {p, dp};
}

MpReal relative_residual(const std::vector<MpReal>& c, const MpComplex& z) {
  const MpReal r = z.abs();
  MpReal scale = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) scale = scale * r + abs(*it);
  const MpReal num = evaluate(c, z).abs();
  return scale == 0 ? num : MpReal(num / scale);
}

// Roots of a monic square-free factor with rational coefficients.
std::vector<MpComplex> solve_squarefree(const ExactPoly& q, const RootSolveOptions& opt) {
  const int n = q.deg();
  if (n == 1) return {MpComplex(to_mp(-q.coeff(0) / q.coeff(1)))};

  std::vector<MpReal> c;
  std::vector<double> cdbl;
  bool finite = true;
  for (const auto& a : q.coefficients()) {
    c.push_back(to_mp(a));
    cdbl.push_back(a.get_d());
    finite = finite && std::isfinite(cdbl.back());
  }

  std::vector<cd> seed = initial_guesses(n, fujiwara_bound(q));
  if (finite) {
    std::vector<cd> refined = aberth_double(cdbl, seed);
    bool ok = std::all_of(refined.begin(), refined.end(), [](const cd& v) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
    if (ok) seed = std::move(refined);
  }
  std::vector<MpComplex> z;
  for (const auto& s : seed) z.emplace_back(MpReal(s.real()), MpReal(s.imag()));

  const MpReal eps = pow(MpReal(2), -(opt.precision_bits - 6));
  const MpReal loose = pow(MpReal(2), -(opt.precision_bits / 2));
  bool converged = false;
  MpReal previous = 1;
  int stalled = 0;
  for (int iter = 0; iter < opt.max_iterations && !converged; ++iter) {
    MpReal worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (dp.norm() == 0) {
        z[i].re += eps;
        worst = 1;
        continue;
      }
      const MpComplex w = p / dp;
      MpComplex s;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const MpComplex d = z[i] - z[j];
        const MpReal nd = d.norm();
        s.re += d.re / nd;
        s.im -= d.im / nd;
      }
      const MpComplex corr = w / (MpComplex(1) - w * s);
      z[i] -= corr;
      worst = max(worst, MpReal(corr.abs() / (1 + z[i].abs())));
    }
    converged = worst <= eps;
    // Ill-conditioned clusters leave corrections at the rounding floor
    // rather than below eps; stop once they have stopped shrinking.
    if (!converged && worst <= loose) {
      stalled = worst * 2 > previous ? stalled + 1 : 0;
      if (stalled >= 3) break;
    }
    previous = worst;
  }

  // Newton polishing at full precision.
  for (auto& root : z) {
    for (int k = 0; k < 2; ++k) {
      auto [p, dp] = eval_with_derivative(c, root);
      if (dp.norm() == 0) break;
      root -= p / dp;
    }
  }

  MpReal worst_residual = 0;
  for (const auto& root : z) worst_residual = max(worst_residual, relative_residual(c, root));
  const MpReal residual_cap = pow(MpReal(2), -(opt.precision_bits / 2));
  if (worst_residual > residual_cap) {
    throw NumericError("root iteration did not converge (worst relative residual " +
                           format_mp(worst_residual, 6) + ")",
                       worst_residual.convert_to<double>());
  }
  return z;
}

}  // namespace

double fujiwara_bound(const ExactPoly& p) {
  const int n = p.deg();
  if (n < 1) return 1.0;
  double bound = 0.0;
  for (int k = 1; k <= n; ++k) {
    BigRational ratio = abs(p.coeff(static_cast<std::size_t>(n - k)) / p.leading());
    if (k == n) ratio /= 2;
    const double r = ratio.get_d();
    if (r > 0) bound = std::max(bound, std::pow(r, 1.0 / k));
  }
  return bound > 0 ? 2.0 * bound : 1.0;
}

RootSet find_roots(const ExactPoly& p, const RootSolveOptions& options) {
  if (p.is_zero() || p.deg() < 1) throw DomainError("find_roots needs a polynomial of degree >= 1");
  PrecisionScope scope(options.precision_bits);
  RootSet out;
  out.source_degree = p.deg();
  out.precision_bits = options.precision_bits;

  const MpReal tau = MpReal(options.tau_real);
  MpReal worst = 0;
  for (const auto& [factor, mult] : squarefree_decompose(p)) {
    std::vector<MpComplex> roots = solve_squarefree(factor, options);
    std::vector<MpComplex> upper, lower;
    for (auto& r : roots) {
      if (abs(r.im) <= tau * (1 + abs(r.re))) {
        r.im = 0;
        out.entries.push_back({r, mult, RootClass::Real, std::nullopt});
      } else if (r.im > 0) {
        upper.push_back(r);
      } else {
        lower.push_back(r);
      }
    }
    if (upper.size() != lower.size())
      throw NumericError("roots of a real factor are not closed under conjugation", 1.0);
    std::vector<bool> used(lower.size(), false);
    for (const auto& u : upper) {
      std::size_t best = lower.size();
      MpReal best_dist = 0;
      for (std::size_t j = 0; j < lower.size(); ++j) {
        if (used[j]) continue;
        MpReal d = (u - lower[j].conj()).norm();
        if (best == lower.size() || d < best_dist) {
          best = j;
          best_dist = d;
        }
      }
      used[best] = true;
      MpComplex v = u + lower[best].conj();
      v.re /= 2;
      v.im /= 2;
      const std::size_t idx = out.entries.size();
      out.entries.push_back({v, mult, RootClass::ConjugatePair, idx + 1});
      out.entries.push_back({v.conj(), mult, RootClass::ConjugatePair, idx});
    }
    std::vector<MpReal> c;
    for (const auto& a : factor.coefficients()) c.push_back(to_mp(a));
    for (const auto& r : roots) worst = max(worst, relative_residual(c, r));
  }
  out.worst_relative_residual = worst.convert_to<double>();
  return out;
}

RootSet find_roots_escalating(const ExactPoly& p, RootSolveOptions options, int max_bits) {
  while (true) {
    try {
      return find_roots(p, options);
    } catch (const NumericError&) {
      if (options.precision_bits * 2 > max_bits) throw;
      options.precision_bits *= 2;
    }
  }
}

RootCounts classify_and_count(const RootSet& roots) {
  RootCounts c;
  for (const auto& e : roots.entries) {
    if (e.cls == RootClass::Real) ++c.real_distinct;
    else ++c.nonreal_distinct;
  }
  return c;
}

ExactPoly exclude_zeros_of(const ExactPoly& target, const ExactPoly& f) {
  if (target.is_zero() || f.is_zero()) throw DomainError("exclude_zeros_of needs nonzero polynomials");
  if (f.is_constant()) return target;
  const ExactPoly s = squarefree_part(f);
  ExactPoly r = target;
  while (true) {
    ExactPoly g = gcd(r, s);
    if (g.is_constant()) return r;
    r = exact_quotient(r, g);
  }
}

}  // namespace rzlab
