#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "exactalg/ratfun.hpp"
#include "rootlab/roots.hpp"
#include "theorems/census.hpp"

namespace rzlab {

enum class TheoremId {
  Cor1,     // real polynomial f, m >= 2: f' + f^m
  ThmRat,   // real rational f, m >= 5: f' + f^m
  CorCRat,  // real rational g, n >= 3, c != 0: g^n g' = c
  Thm4Pol,  // real polynomial g, n >= 2, c != 0: g^n g' = c
  Thm9Rat,  // real rational f, c != 0: f' + f^m + c
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct BoundReport {
  TheoremId theorem = TheoremId::Cor1;
  int d = 0;
  int m_or_n = 0;
  BigRational c = 0;
  int required_nonreal_min = 0;
  std::optional<int> required_real_max;
  int observed_nonreal = 0;  // distinct, after removing zeros of f when the statement does
  int observed_real = 0;     // distinct real zeros of the whole expression
  bool pass = false;

  bool hypotheses_met = true;
  std::string hypothesis_note;  // the failed hypothesis, if any
  ExactRatFun expression;
  ExactPoly counted;            // numerator after excluding zeros of f
  RootSet roots;                // roots of the expression's numerator

  // Polynomial g with n even: the census-refined lower bound
  // (n-1)d - 1 + M + N + P on the non-real solution count.
  std::optional<ZeroCensus> census;
  std::optional<int> census_nonreal_min;
};

struct BoundOptions {
  RootSolveOptions solve;
  int max_bits = 512;
  // When false, a failed hypothesis is recorded instead of thrown, and the
  // counts are still compared with the stated bound (negative controls).
  bool enforce_hypotheses = true;
};

// Builds the theorem's expression, removes zeros of f where the statement
// counts only zeros that are not zeros of f, counts distinct real and
// non-real roots and compares them with the bound. Throws DomainError
// naming the failed hypothesis when enforce_hypotheses is set.
BoundReport check_bound(TheoremId theorem, const ExactRatFun& fn, int m_or_n,
                        const BigRational& c, const BoundOptions& options = {});

}  // namespace rzlab
