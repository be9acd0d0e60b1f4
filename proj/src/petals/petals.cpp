#include "petals/petals.hpp"

#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace rzlab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// 1/map(1/w).
ExactRatFun conjugate_at_infinity(const ExactRatFun& map) {
  const ExactRatFun inverted = map.compose_reciprocal();
  if (inverted.is_zero()) throw DomainError("map vanishes identically");
  return inverted.reciprocal();
}

std::vector<double> angles_from_derivative_arg(double arg_d, int nu) {
  std::vector<double> out;
  for (int j = 1; j <= nu; ++j) out.push_back(wrap_angle((-arg_d - std::numbers::pi + kTwoPi * j) / nu));
  return out;
}

// Coefficients of p(a + h) up to h^order, by repeated synthetic division.
template <class T>
std::vector<T> taylor_shift(std::vector<T> p, const T& a, int order) {
  std::vector<T> out;
  for (int k = 0; k <= order && !p.empty(); ++k) {
    T acc = p.back();
    std::vector<T> q(p.size() - 1);
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      q[i] = acc;
      acc = acc * a + p[i];
    }
    out.push_back(acc);
    p = std::move(q);
  }
  out.resize(static_cast<std::size_t>(order) + 1, T(0));
  return out;
}

// Taylor coefficient of order n of num/den at a; n-th derivative over n!.
bool is_zero_value(const BigRational& v) { return sgn(v) == 0; }
bool is_zero_value(const MpComplex& v) { return v.norm() == 0; }

template <class T>
T taylor_coefficient(const std::vector<T>& num, const std::vector<T>& den, const T& a, int n) {
  const std::vector<T> N = taylor_shift(num, a, n);
  const std::vector<T> D = taylor_shift(den, a, n);
  if (is_zero_value(D[0])) throw DomainError("Taylor expansion requested at a pole");
  std::vector<T> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    T acc = N[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= D[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / D[0];
  }
  return q.back();
}

}  // namespace

double angle_distance(double a, double b) {
  double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

AuxMap build_F(const ExactRatFun& f, int m) {
  if (m < 2) throw DomainError("build_F requires m >= 2");
  if (f.is_zero()) throw DomainError("build_F requires f not identically zero");
  const ExactRatFun fw = f.compose_linear(BigRational(1, m - 1), 0);
  AuxMap out;
  out.map = ExactRatFun::identity() - fw.pow(m - 1).reciprocal();
  out.degenerate = out.map.derivative().is_zero();
  return out;
}

ExactRatFun build_G(const ExactRatFun& g, int n) {
  if (n < 1) throw DomainError("build_G requires n >= 1");
  return ExactRatFun::identity() - ExactRatFun::constant(BigRational(1, n + 1)) * g.pow(n + 1);
}

int fixed_point_multiplicity_at_infinity(const ExactRatFun& map) {
  const ExactRatFun h = conjugate_at_infinity(map);
  const ExactRatFun diff = h - ExactRatFun::identity();
  if (diff.is_zero()) throw DomainError("map is the identity");
  if (sgn(diff.num().coeff(0)) != 0) return 0;
  return static_cast<int>(diff.num().valuation());
}

std::vector<double> predicted_angles(const ParabolicPoint& point, const ExactRatFun& map,
                                     int precision_bits) {
  const int mu = point.multiplicity;
  const int nu = mu - 1;
  if (nu < 1) throw DomainError("predicted angles need multiplicity >= 2");
  if (point.at_infinity) {
    const ExactRatFun h = conjugate_at_infinity(map);
    const BigRational value =
        taylor_coefficient(h.num().coefficients(), h.den().coefficients(), BigRational(0), mu);
    if (sgn(value) == 0) throw DomainError("internal inconsistency: derivative of order mu vanishes");
    const double arg_d = sgn(value) > 0 ? 0.0 : std::numbers::pi;
    std::vector<double> phi = angles_from_derivative_arg(arg_d, nu);
    for (auto& a : phi) a = wrap_angle(-a);
    return phi;
  }
  PrecisionScope scope(precision_bits);
  std::vector<MpComplex> num, den;
  for (const auto& c : map.num().coefficients()) num.emplace_back(to_mp(c));
  for (const auto& c : map.den().coefficients()) den.emplace_back(to_mp(c));
  MpComplex value = taylor_coefficient(num, den, point.location, mu);
  for (int k = 2; k <= mu; ++k) value *= MpComplex(MpReal(k));
  const MpReal scale = max(MpReal(1), point.location.abs());
  if (value.abs() <= pow(MpReal(2), -(precision_bits / 2)) * scale)
    throw DomainError("internal inconsistency: derivative of order mu vanishes");
  return angles_from_derivative_arg(value.arg().convert_to<double>(), nu);
}

int real_direction_count(const std::vector<double>& angles) {
  int count = 0;
  for (double a : angles)
    if (angle_distance(a, 0.0) < 1e-9 || angle_distance(a, std::numbers::pi) < 1e-9) ++count;
  return count;
}

std::vector<ParabolicPoint> parabolic_points(const ExactRatFun& map, const RootSolveOptions& options) {
  if (map.degree() < 2) throw DomainError("parabolic_points needs a map of degree >= 2");
  const ExactRatFun diff = map - ExactRatFun::identity();
  std::vector<ParabolicPoint> out;
  if (!diff.num().is_constant()) {
    for (const auto& [factor, mult] : squarefree_decompose(diff.num())) {
      if (mult < 2) continue;
      const RootSet roots = find_roots(factor, options);
      for (const auto& e : roots.entries) {
        ParabolicPoint p;
        p.location = e.value;
        p.multiplicity = mult;
        out.push_back(p);
      }
    }
  }
  const int mu_inf = fixed_point_multiplicity_at_infinity(map);
  if (mu_inf >= 2) {
    ParabolicPoint p;
    p.at_infinity = true;
    p.multiplicity = mu_inf;
    out.push_back(p);
  }
  for (auto& p : out) p.predicted_angles = predicted_angles(p, map, options.precision_bits);
  return out;
}

RootSet critical_points(const ExactRatFun& map, const RootSolveOptions& options) {
  const ExactRatFun d = map.derivative();
  if (d.is_zero()) throw DomainError("degenerate map");
  if (d.num().is_constant()) {
    RootSet empty;
    empty.precision_bits = options.precision_bits;
    return empty;
  }
  return find_roots(d.num(), options);
}

NumericMap::NumericMap(const ExactRatFun& map) {
  for (const auto& c : map.num().coefficients()) num_.push_back(c.get_d());
  for (const auto& c : map.den().coefficients()) den_.push_back(c.get_d());
}

std::optional<std::complex<double>> NumericMap::operator()(std::complex<double> z) const {
  std::complex<double> n = 0.0, d = 0.0;
  for (auto it = num_.rbegin(); it != num_.rend(); ++it) n = n * z + *it;
  for (auto it = den_.rbegin(); it != den_.rend(); ++it) d = d * z + *it;
  if (d == 0.0) return std::nullopt;
  return n / d;
}

PetalAssignment orbit_to_petal(const ExactRatFun& map, std::complex<double> start,
                               const std::vector<ParabolicPoint>& targets, const OrbitCaps& caps) {
  return orbit_to_petal(NumericMap(map), start, targets, caps);
}

PetalAssignment orbit_to_petal(const NumericMap& map, std::complex<double> start,
                               const std::vector<ParabolicPoint>& targets, const OrbitCaps& caps) {
  PetalAssignment out;
  out.start = start;

  std::vector<std::complex<double>> zetas;
  int infinity_target = -1;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    zetas.push_back(targets[i].at_infinity ? 0.0 : targets[i].location.to_double());
    if (targets[i].at_infinity) infinity_target = static_cast<int>(i);
  }
  const double inf_capture = 1.0 / caps.capture_radius;
  const long limit = caps.escalate ? 2 * caps.max_iter : caps.max_iter;

  std::complex<double> z = start;
  int captured = -1;
  double sum_c = 0, sum_s = 0;
  int in_window = 0;
  double previous_mean = 0;
  bool have_previous = false;

  for (long k = 1; k <= limit; ++k) {
    auto next = map(z);
    out.iterations_used = k;
    if (!next) {
      out.reason = "pole hit";
      return out;
    }
    z = *next;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      if (infinity_target < 0) {
        out.outcome = OrbitOutcome::Escaped;
        return out;
      }
      out.reason = "overflow";
      return out;
    }
    if (infinity_target < 0 && std::abs(z) > caps.escape_radius) {
      out.outcome = OrbitOutcome::Escaped;
      return out;
    }

    int target = -1;
    double best = caps.capture_radius;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (targets[i].at_infinity) continue;
      const double dist = std::abs(z - zetas[i]);
      if (dist < best) {
        best = dist;
        target = static_cast<int>(i);
      }
    }
    if (target < 0 && infinity_target >= 0 && std::abs(z) > inf_capture) target = infinity_target;

    if (target != captured) {
      captured = target;
      sum_c = sum_s = 0;
      in_window = 0;
      have_previous = false;
    }
    if (captured < 0) continue;

    const std::complex<double> offset = targets[static_cast<std::size_t>(captured)].at_infinity
                                            ? z
                                            : z - zetas[static_cast<std::size_t>(captured)];
    if (offset == 0.0) {
      out.reason = "landed on the fixed point";
      return out;
    }
    const double angle = std::arg(offset);
    sum_c += std::cos(angle);
    sum_s += std::sin(angle);
    if (++in_window < caps.window) continue;

    const double mean = wrap_angle(std::atan2(sum_s, sum_c));
    sum_c = sum_s = 0;
    in_window = 0;
    if (have_previous && angle_distance(mean, previous_mean) < caps.angle_tol / 2) {
      const auto& thetas = targets[static_cast<std::size_t>(captured)].predicted_angles;
      int nearest = -1;
      double nearest_dist = 0;
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        const double dist = angle_distance(mean, thetas[j]);
        if (nearest < 0 || dist < nearest_dist) {
          nearest = static_cast<int>(j);
          nearest_dist = dist;
        }
      }
      if (nearest >= 0 && nearest_dist <= caps.angle_tol) {
        out.outcome = OrbitOutcome::Petal;
        out.point_index = captured;
        out.petal_index = nearest + 1;
        out.measured_angle = mean;
        return out;
      }
    }
    previous_mean = mean;
    have_previous = true;
  }
  out.reason = "iteration budget exhausted";
  return out;
}

PetalSummary petal_report(const std::vector<ParabolicPoint>& points,
                          const std::vector<PetalAssignment>& assignments) {
  PetalSummary out;
  for (const auto& p : points) {
    PointPetalSummary s;
    s.nu = p.petal_count();
    s.real_direction_petals = real_direction_count(p.predicted_angles);
    s.real_direction_ok = s.real_direction_petals <= (s.nu % 2 == 1 ? 1 : 2);
    s.orbits_per_petal.assign(static_cast<std::size_t>(s.nu), 0);
    out.points.push_back(std::move(s));
  }
  for (const auto& a : assignments) {
    switch (a.outcome) {
      case OrbitOutcome::Escaped: ++out.escaped; break;
      case OrbitOutcome::Undetermined: ++out.undetermined; break;
      case OrbitOutcome::Petal: {
        auto& s = out.points.at(static_cast<std::size_t>(a.point_index));
        ++s.orbits_per_petal.at(static_cast<std::size_t>(a.petal_index - 1));
        break;
      }
    }
  }
  for (auto& s : out.points) {
    for (int j = 1; j <= s.nu; ++j) {
      if (s.orbits_per_petal[static_cast<std::size_t>(j - 1)] > 0) ++s.populated_petals;
      else s.empty_petals.push_back(j);
    }
  }
  return out;
}

}  // namespace rzlab
