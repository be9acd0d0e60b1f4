#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "exactalg/ratfun.hpp"
#include "rootlab/roots.hpp"

namespace rzlab {

struct AuxMap {
  ExactRatFun map;
  // map' vanishes identically.
  bool degenerate = false;
};

// F(z) = z - 1/f(z/(m-1))^(m-1). Critical points of F are the solutions of
// f'(w) + f(w)^m = 0 with w = z/(m-1). Requires m >= 2 and f != 0.
AuxMap build_F(const ExactRatFun& f, int m);

// G(z) = z - g(z)^(n+1)/(n+1), so that G' = 1 - g^n g'. Requires n >= 1.
ExactRatFun build_G(const ExactRatFun& g, int n);

// A multiple fixed point with multiplicity mu >= 2 and nu = mu - 1 petals.
struct ParabolicPoint {
  bool at_infinity = false;
  MpComplex location;  // meaningless when at_infinity
  int multiplicity = 2;
  // theta_1 .. theta_nu in [0, 2pi); entry j-1 holds theta_j.
  std::vector<double> predicted_angles;

  int petal_count() const { return multiplicity - 1; }
  bool is_real() const { return at_infinity || location.im == 0; }
};

// Order of vanishing of map(z) - z at infinity, measured through
// w -> 1/map(1/w) at 0; 0 when infinity is not fixed.
int fixed_point_multiplicity_at_infinity(const ExactRatFun& map);

// All multiple fixed points, finite ones first (multiplicities from the
// exact square-free decomposition of the numerator of map(z) - z) followed
// by infinity when it is a multiple fixed point. Angles are filled in.
// Requires a map of degree >= 2.
std::vector<ParabolicPoint> parabolic_points(const ExactRatFun& map,
                                             const RootSolveOptions& options = {});

// theta_j = (-arg D - pi + 2 pi j)/nu, D the mu-th derivative of the map
// at the point, computed symbolically. At infinity the formula is applied
// to w -> 1/map(1/w) at 0 and the angles are negated.
std::vector<double> predicted_angles(const ParabolicPoint& point, const ExactRatFun& map,
                                     int precision_bits = 128);

// Number of theta_j that are multiples of pi.
int real_direction_count(const std::vector<double>& angles);

// Roots of the numerator of map'. Throws DomainError("degenerate map")
// when map' vanishes identically.
RootSet critical_points(const ExactRatFun& map, const RootSolveOptions& options = {});

struct OrbitCaps {
  long max_iter = 1'000'000;
  double capture_radius = 0.05;
  double angle_tol = 0.05;
  double escape_radius = 1e8;
  // Steps per window of the running angle mean.
  int window = 1000;
  // Allow one doubling of max_iter before giving up.
  bool escalate = true;
};

enum class OrbitOutcome { Petal, Escaped, Undetermined };

struct PetalAssignment {
  std::complex<double> start;
  OrbitOutcome outcome = OrbitOutcome::Undetermined;
  int point_index = -1;  // into the target list
  int petal_index = 0;   // j in 1..nu
  std::optional<double> measured_angle;
  long iterations_used = 0;
  std::string reason;
};

// Double-precision evaluation of a rational map.
class NumericMap {
 public:
  explicit NumericMap(const ExactRatFun& map);
  // nullopt at a pole.
  std::optional<std::complex<double>> operator()(std::complex<double> z) const;

 private:
  std::vector<double> num_;
  std::vector<double> den_;
};

// Iterates the map from `start`. Once the orbit is within capture_radius
// of a target (|z| > 1/capture_radius for infinity) the angle of
// z - zeta (of z at infinity) is averaged over windows of `window` steps;
// when two consecutive window means agree to angle_tol/2 and the mean lies
// within angle_tol of a predicted angle, the orbit is assigned to that
// petal.
PetalAssignment orbit_to_petal(const NumericMap& map, std::complex<double> start,
                               const std::vector<ParabolicPoint>& targets, const OrbitCaps& caps);
PetalAssignment orbit_to_petal(const ExactRatFun& map, std::complex<double> start,
                               const std::vector<ParabolicPoint>& targets, const OrbitCaps& caps);

struct PointPetalSummary {
  int nu = 0;
  int real_direction_petals = 0;
  // At most 2 real-direction petals, at most 1 when nu is odd.
  bool real_direction_ok = true;
  std::vector<int> orbits_per_petal;  // entry j-1 for petal j
  int populated_petals = 0;
  std::vector<int> empty_petals;      // petal indices j without a critical orbit
};

struct PetalSummary {
  std::vector<PointPetalSummary> points;
  int escaped = 0;
  int undetermined = 0;
};

PetalSummary petal_report(const std::vector<ParabolicPoint>& points,
                          const std::vector<PetalAssignment>& assignments);

// Circular distance between two angles.
double angle_distance(double a, double b);

}  // namespace rzlab
