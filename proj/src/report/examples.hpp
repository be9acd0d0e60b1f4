#pragma once

#include <string>
#include <vector>

#include "report/json_report.hpp"

namespace rzlab {

struct SubCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ExampleResult {
  int id = 0;
  std::string title;
  std::vector<SubCheck> sub_checks;
  bool pass() const;
};

// The six closed-form examples. Failures are reported in the sub-checks,
// never thrown.
ExampleResult example_1();
ExampleResult example_2();
ExampleResult example_3();
ExampleResult example_4();
ExampleResult example_5();
ExampleResult example_6();
std::vector<ExampleResult> run_examples();

// Irrational constants from their defining polynomials, certified by an
// exact sign change (128 bits unless stated).
MpReal sqrt2_constant(int bits = 128);
// Root of 5a^4 - 10a^2 + 1 near 0.3249.
MpReal example6_a_constant(int bits = 128);

Json example_json(const ExampleResult& r);
Json examples_json(const std::vector<ExampleResult>& results);

}  // namespace rzlab
