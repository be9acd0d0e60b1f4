#include "theorems/bounds.hpp"

#include <array>
#include <utility>

#include "core/error.hpp"
#include "diffpoly/diffpoly.hpp"

namespace rzlab {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 5> kNames{{
    {TheoremId::Cor1, "cor1"},
    {TheoremId::ThmRat, "thm_rat"},
    {TheoremId::CorCRat, "cor_crat"},
    {TheoremId::Thm4Pol, "thm4pol"},
    {TheoremId::Thm9Rat, "thm9_rat"},
}};

// First failed hypothesis, or empty when all hold.
std::string failed_hypothesis(TheoremId id, const ExactRatFun& fn, int k, const BigRational& c) {
  if (fn.is_constant()) return "function must be non-constant";
  switch (id) {
    case TheoremId::Cor1:
      if (!fn.is_polynomial()) return "f must be a polynomial";
      if (k < 2) return "m >= 2";
      break;
    case TheoremId::ThmRat:
      if (k < 5) return "m >= 5";
      break;
    case TheoremId::CorCRat:
      if (k < 3) return "n >= 3";
      if (sgn(c) == 0) return "c != 0";
      break;
    case TheoremId::Thm4Pol:
      if (!fn.is_polynomial()) return "g must be a polynomial";
      if (k < 2) return "n >= 2";
      if (sgn(c) == 0) return "c != 0";
      break;
    case TheoremId::Thm9Rat:
      if (sgn(c) == 0) return "c != 0";
      if ((fn.derivative() + c).is_zero()) return "f' must not be identically -c";
      if (fn.is_polynomial() ? k < 3 : k < 6) return fn.is_polynomial() ? "m >= 3 (polynomial f)" : "m >= 6 (rational f)";
      break;
  }
  return {};
}

bool excludes_zeros_of_f(TheoremId id) {
  return id == TheoremId::Cor1 || id == TheoremId::ThmRat || id == TheoremId::Thm9Rat;
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

BoundReport check_bound(TheoremId theorem, const ExactRatFun& fn, int k, const BigRational& c,
                        const BoundOptions& options) {
  BoundReport r;
  r.theorem = theorem;
  r.m_or_n = k;
  r.c = c;
  r.d = fn.degree();

  r.hypothesis_note = failed_hypothesis(theorem, fn, k, c);
  r.hypotheses_met = r.hypothesis_note.empty();
  if (!r.hypotheses_met) {
    if (options.enforce_hypotheses)
      throw DomainError(std::string(theorem_name(theorem)) + " hypothesis failed: " + r.hypothesis_note);
    if (fn.is_constant() || k < 1) throw DomainError("cannot count zeros for a constant function or k < 1");
  }

  const int d = r.d;
  switch (theorem) {
    case TheoremId::Cor1:
      r.expression = hayman_expr(fn, k, 0);
      r.required_nonreal_min = d * (k - 1) - 1;
      r.required_real_max = d + 1;
      break;
    case TheoremId::ThmRat:
      r.expression = hayman_expr(fn, k, 0);
      r.required_nonreal_min = (k % 2 == 1 ? k - 3 : k - 4) * d;
      r.required_real_max = (k % 2 == 1 ? 3 : 4) * d;
      break;
    case TheoremId::CorCRat:
      r.expression = product_expr(fn, k, c);
      r.required_nonreal_min = d * (k - 2);
      break;
    case TheoremId::Thm4Pol:
      r.expression = product_expr(fn, k, c);
      r.required_nonreal_min = k % 2 == 0 ? d * (k - 1) - 1 : d * (k - 1);
      r.required_real_max = 2 * d;
      break;
    case TheoremId::Thm9Rat:
      r.expression = hayman_expr(fn, k, c);
      r.required_nonreal_min = 1;
      break;
  }
  if (r.expression.is_zero()) throw DomainError("expression vanishes identically");

  const ExactPoly& numer = r.expression.num();
  r.counted = excludes_zeros_of_f(theorem) ? exclude_zeros_of(numer, fn.num()) : numer;

  if (!numer.is_constant()) {
    r.roots = find_roots_escalating(numer, options.solve, options.max_bits);
    r.observed_real = classify_and_count(r.roots).real_distinct;
  }
  if (!r.counted.is_constant()) {
    const RootSet counted_roots =
        r.counted == numer ? r.roots : find_roots_escalating(r.counted, options.solve, options.max_bits);
    r.observed_nonreal = classify_and_count(counted_roots).nonreal_distinct;
  }

  r.pass = r.observed_nonreal >= r.required_nonreal_min &&
           (!r.required_real_max || r.observed_real <= *r.required_real_max);

  if (theorem == TheoremId::Thm4Pol && r.hypotheses_met) {
    r.census = zero_census(fn);
    if (k % 2 == 0) r.census_nonreal_min = census_nonreal_bound(*r.census, d, k);
  }
  return r;
}

}  // namespace rzlab
