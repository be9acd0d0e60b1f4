#pragma once

#include <optional>
#include <vector>

#include "exactalg/poly.hpp"
#include "rootlab/mp.hpp"

namespace rzlab {

enum class RootClass { Real, ConjugatePair };

struct RootEntry {
  MpComplex value;
  int multiplicity = 1;
  RootClass cls = RootClass::Real;
  // Index of the conjugate partner for ConjugatePair entries.
  std::optional<std::size_t> partner;
};

// All complex roots of a polynomial with multiplicities. Invariants: the
// multiplicities sum to source_degree; every ConjugatePair entry has a
// partner with the conjugate value and the same multiplicity; Real entries
// have an imaginary part of exactly zero.
struct RootSet {
  std::vector<RootEntry> entries;
  int source_degree = 0;
  int precision_bits = 0;
  // Largest |p(root)| / sum |c_k| |root|^k over the polished roots.
  double worst_relative_residual = 0.0;
};

struct RootSolveOptions {
  int precision_bits = 128;
  // Roots with |im| <= tau_real (1 + |re|) after polishing are real.
  double tau_real = 1e-20;
  int max_iterations = 1000;
};

// Complex roots of p (degree >= 1). Multiplicities come from exact
// square-free decomposition; each square-free factor is solved by
// simultaneous Aberth-Ehrlich corrections (a double-precision pass, then
// a pass at full precision), polished by Newton steps, and symmetrized
// across the real axis. Throws NumericError carrying the worst residual
// when the iteration does not converge.
RootSet find_roots(const ExactPoly& p, const RootSolveOptions& options = {});

// As find_roots, doubling the precision on NumericError until max_bits.
RootSet find_roots_escalating(const ExactPoly& p, RootSolveOptions options, int max_bits = 512);

struct RootCounts {
  int real_distinct = 0;
  int nonreal_distinct = 0;
};

RootCounts classify_and_count(const RootSet& roots);

// target divided by every common factor with f, to full multiplicity.
ExactPoly exclude_zeros_of(const ExactPoly& target, const ExactPoly& f);

// Fujiwara bound on the moduli of the roots of p.
double fujiwara_bound(const ExactPoly& p);

}  // namespace rzlab
