#include "report/examples.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"
#include "diffpoly/diffpoly.hpp"
#include "diffpoly/tanfun.hpp"
#include "exactalg/sturm.hpp"
#include "petals/petals.hpp"

namespace rzlab {

namespace {

constexpr int kBits = 128;

std::string str(long v) { return std::to_string(v); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

SubCheck exact_check(std::string name, const std::string& expected, const std::string& observed) {
  return {std::move(name), expected, observed, expected == observed};
}

SubCheck bound_check(std::string name, const MpReal& value, const MpReal& limit) {
  return {std::move(name), "<= " + format_mp(limit, 3), format_mp(value, 6), value <= limit};
}

// Runs `body`, turning a thrown error into a failed sub-check.
void guarded(ExampleResult& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.sub_checks.push_back({name, "no error", e.what(), false});
  }
}

ExactPoly poly(std::initializer_list<long> ascending) {
  std::vector<BigRational> c;
  for (long v : ascending) c.emplace_back(v);
  return ExactPoly(std::move(c));
}

ExactRatFun t_var() { return ExactRatFun::identity(); }

// 20 real sample points in (0.05, 1.5), avoiding the poles used below.
std::vector<MpReal> real_samples() {
  std::vector<MpReal> xs;
  for (int k = 0; k < 20; ++k) xs.push_back(MpReal(0.05) + MpReal(k) * MpReal(0.0725) + MpReal(0.0131));
  return xs;
}

MpReal relative_deviation(const MpReal& a, const MpReal& b) {
  return abs(a - b) / max(MpReal(1), abs(b));
}

MpReal eval_ratfun(const ExactRatFun& f, const MpReal& x) {
  return MpPoly::from_exact(f.num())(x) / MpPoly::from_exact(f.den())(x);
}

// Fourth-order central difference; the step is far below the working
// precision's square root, so truncation error is negligible at 128 bits.
MpReal derivative(const std::function<MpReal(const MpReal&)>& f, const MpReal& x) {
  const MpReal h = pow(MpReal(2), -24);
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

MpReal max_coefficient_deviation(const MpPoly& a, const MpPoly& b) {
  MpReal worst = 0;
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t k = 0; k < n; ++k) {
    const MpReal ak = k < a.coeffs.size() ? a.coeffs[k] : MpReal(0);
    const MpReal bk = k < b.coeffs.size() ? b.coeffs[k] : MpReal(0);
    worst = max(worst, abs(ak - bk));
  }
  return worst;
}

}  // namespace

bool ExampleResult::pass() const {
  return !sub_checks.empty() &&
         std::all_of(sub_checks.begin(), sub_checks.end(), [](const SubCheck& s) { return s.pass; });
}

MpReal sqrt2_constant(int bits) {
  PrecisionScope scope(bits);
  return certified_real_root(poly({-2, 0, 1}), MpReal(1.41421356), bits);
}

MpReal example6_a_constant(int bits) {
  PrecisionScope scope(bits);
  return certified_real_root(poly({1, 0, -10, 0, 5}), MpReal(0.3249), bits);
}

ExampleResult example_1() {
  ExampleResult r{1, "f = exp(-z) + 1, f' + f = 1", {}};
  guarded(r, "identity at 100 points", [&] {
    PrecisionScope scope(kBits);
    auto f = [](const MpComplex& z) {
      const MpReal e = exp(-z.re);
      return MpComplex(e * cos(z.im) + 1, -e * sin(z.im));
    };
    const MpReal h = pow(MpReal(2), -24);
    MpReal worst = 0;
    for (int k = 0; k < 100; ++k) {
      const MpComplex z(MpReal(-2) + MpReal(4) * (k % 10) / 9, MpReal(-3) + MpReal(6) * (k / 10) / 9);
      const MpComplex dh(h, 0);
      const MpComplex d2h(2 * h, 0);
      const MpComplex df = (f(z - d2h) - MpComplex(8) * f(z - dh) + MpComplex(8) * f(z + dh) - f(z + d2h)) /
                           MpComplex(12 * h);
      worst = max(worst, (df + f(z) - MpComplex(1)).abs());
    }
    r.sub_checks.push_back(bound_check("max |f' + f - 1| over 100 points", worst, MpReal(1e-12)));
  });
  return r;
}

ExampleResult example_2() {
  ExampleResult r{2, "f = -tan z, f' + f^2 = -1", {}};
  guarded(r, "reduction", [&] {
    const ReducedTanPoly red = tan_reduce({-t_var(), 1}, HaymanMode{2, 0});
    r.sub_checks.push_back(exact_check("f' + f^2 in t", "-1", to_expression(red.expression, "t")));
    r.sub_checks.push_back(exact_check("has zeros", "false", yes_no(!count_tan_zeros(red).no_zeros)));
  });
  return r;
}

ExampleResult example_3() {
  ExampleResult r{3, "f = 1/(2 sin z) with m = 3 and g = 2 sin z with n = 1", {}};
  // sin z = 2u/(1+u^2) with u = tan(z/2).
  const ExactRatFun one_plus_u2(poly({1, 0, 1}));
  const TanFun f{one_plus_u2 / ExactRatFun(poly({0, 4})), BigRational(1, 2)};
  const TanFun g{ExactRatFun(poly({0, 4})) / one_plus_u2, BigRational(1, 2)};

  auto real_rooted = [&](const std::string& name, const TanFun& fn, const TanMode& mode,
                         const std::function<MpReal(const MpReal&)>& closed_form) {
    guarded(r, name, [&] {
      const ReducedTanPoly red = tan_reduce(fn, mode);
      const TanZeroCount count = count_tan_zeros(red);
      const int deg = count.no_zeros ? 0 : squarefree_part(count.attainable).deg();
      r.sub_checks.push_back(
          exact_check(name + ": real roots of " + to_expression(count.attainable, "u"), str(deg), str(count.real_distinct)));
      r.sub_checks.push_back(exact_check(name + ": non-real roots", "0", str(count.nonreal_distinct)));
      // The half-angle rewrite against the closed form in z.
      PrecisionScope scope(kBits);
      MpReal worst = 0;
      for (const MpReal& x : real_samples())
        worst = max(worst, relative_deviation(eval_ratfun(red.expression, tan(x / 2)), closed_form(x)));
      r.sub_checks.push_back(bound_check(name + ": reduction against closed form", worst, MpReal(1e-25)));
    });
  };
  real_rooted("f' + f^3", f, HaymanMode{3, 0},
              [](const MpReal& x) { return (1 - 2 * sin(2 * x)) / (8 * pow(sin(x), 3)); });
  real_rooted("g g' - 1", g, ProductMode{1, 1}, [](const MpReal& x) { return 2 * sin(2 * x) - 1; });
  return r;
}

ExampleResult example_4() {
  ExampleResult r{4, "f = a - tan(a^4 z) with a = 12, and the sqrt(2) family", {}};
  guarded(r, "quartic", [&] {
    // t = -tan(a^4 z) = tan(b z) with b = -a^4, so f = a + t.
    const BigRational a = 12;
    const TanFun f{t_var() + a, -(a * a * a * a)};
    const ReducedTanPoly w = tan_reduce(f, HaymanMode{4, 0});
    r.sub_checks.push_back(exact_check("w(1)", "-12911", w.expression(BigRational(1)).get_str()));
    r.sub_checks.push_back(exact_check("w(0)", "0", w.expression(BigRational(0)).get_str()));
    r.sub_checks.push_back(
        exact_check("w'(0) > 0", "true", yes_no(sgn(w.expression.derivative()(BigRational(0))) > 0)));
    r.sub_checks.push_back(exact_check("Sturm real roots of w", "4", str(sturm_distinct_real_roots(w.poly))));
  });
  guarded(r, "sqrt(2) family", [&] {
    PrecisionScope scope(kBits);
    const MpReal s = sqrt2_constant(kBits);
    // f = (s + t)/(1 + s t), t = tan(4x); f' + f^4 has numerator
    // (s + t)^4 - 4 (1 + t^2)(1 + s t)^2 over (1 + s t)^4.
    const MpPoly st{{s, 1}}, one_st{{1, s}}, one_t2{{1, 0, 1}};
    const MpPoly numer = st * st * st * st + MpPoly{{-4}} * one_t2 * one_st * one_st;
    const MpPoly claimed{{0, 0, 0, -4 * s, -7}};
    r.sub_checks.push_back(
        bound_check("numerator against -t^3 (4 sqrt2 + 7t)", max_coefficient_deviation(numer, claimed), MpReal(1e-30)));
    auto fx = [&](const MpReal& x) {
      const MpReal t = tan(4 * x);
      return MpReal((s + t) / (1 + s * t));
    };
    MpReal worst = 0;
    for (const MpReal& x : real_samples()) {
      const MpReal t = tan(4 * x);
      const MpReal direct = derivative(fx, x) + pow(fx(x), 4);
      const MpReal closed = -pow(t, 3) * (4 * s + 7 * t) / pow(1 + s * t, 4);
      worst = max(worst, relative_deviation(direct, closed));
    }
    r.sub_checks.push_back(bound_check("f' + f^4 at 20 real points", worst, MpReal(1e-10)));
  });
  return r;
}

ExampleResult example_5() {
  ExampleResult r{5, "f = 1/z with m = 4, and g = (2z^2+8z+3)/(5z+3) with n = 2", {}};
  guarded(r, "1/z", [&] {
    const ExactRatFun inv_z = ExactRatFun::identity().reciprocal();
    const ExactRatFun expected = ExactRatFun::normalize(poly({1, 0, -1}), poly({0, 0, 0, 0, 1}));
    r.sub_checks.push_back(
        exact_check("f' + f^4", to_expression(expected), to_expression(hayman_expr(inv_z, 4, 0))));
    const ExactRatFun e = product_expr(ExactRatFun::identity(), 2, 1);
    r.sub_checks.push_back(exact_check("g^2 g' - 1 with g = z", "z^2 - 1", to_expression(e)));
  });
  guarded(r, "degree 2", [&] {
    const ExactRatFun g = ExactRatFun::normalize(poly({3, 8, 2}), poly({3, 5}));
    const ExactPoly num = product_expr(g, 2, 1).num();
    int mult_at_zero = 0;
    for (const auto& [factor, s] : squarefree_decompose(num))
      if (factor == ExactPoly::identity()) mult_at_zero = s;
    r.sub_checks.push_back(exact_check("multiplicity of 0", "3", str(mult_at_zero)));
    const ExactPoly sf = squarefree_part(num);
    r.sub_checks.push_back(exact_check("distinct roots all real (Sturm)", str(sf.deg()),
                                       str(sturm_distinct_real_roots(sf))));
    r.sub_checks.push_back(exact_check("other zeros (with multiplicity)", "3",
                                       str(num.deg() - mult_at_zero)));
    // G = z - g^3/3: two real zeros of g, each a fixed point with 2 petals.
    int petals = 0;
    for (const auto& p : parabolic_points(build_G(g, 2))) petals += p.petal_count();
    r.sub_checks.push_back(exact_check("petals of z - g^3/3 at zeros of g", "4", str(petals)));
  });
  return r;
}

ExampleResult example_6() {
  ExampleResult r{6, "f = -tan z with m = 6, f = a + tan(bz) with m = 5, polynomial f with m = 2", {}};
  guarded(r, "m = 6", [&] {
    const ReducedTanPoly red = tan_reduce({-t_var(), 1}, HaymanMode{6, 1});
    const ExactPoly expected = poly({0, 0, 1}) * poly({-1, 1}) * poly({1, 1}) * poly({1, 0, 1});
    r.sub_checks.push_back(
        exact_check("f' + f^6 + 1 up to a constant", to_expression(expected, "t"), to_expression(red.poly.monic(), "t")));
    r.sub_checks.push_back(exact_check("non-real attainable roots", "0", str(count_tan_zeros(red).nonreal_distinct)));
  });
  guarded(r, "m = 5", [&] {
    PrecisionScope scope(kBits);
    const MpReal a = example6_a_constant(kBits);
    r.sub_checks.push_back(
        bound_check("a against sqrt(1 - 2/sqrt 5)", abs(a - sqrt(1 - 2 / sqrt(MpReal(5)))), MpReal(1e-35)));
    r.sub_checks.push_back({"a", "0.3249...", format_mp(a, 20), abs(a - MpReal(0.3249)) < MpReal(1e-4)});
    const MpReal b = 5 * a - 10 * pow(a, 3);
    const MpReal c = -pow(a, 5) - b;
    const MpPoly at{{a, 1}};
    const MpPoly G = MpPoly{{b, 0, b}} + at * at * at * at * at + MpPoly{{c}};
    const MpPoly claimed = MpPoly{{0, 1}} * MpPoly{{1, 0, 1}} * MpPoly{{10 * a * a - 1, 5 * a, 1}};
    r.sub_checks.push_back(bound_check("quintic coefficients", max_coefficient_deviation(G, claimed), MpReal(1e-30)));
    const MpReal disc = 25 * a * a - 4 * (10 * a * a - 1);
    r.sub_checks.push_back({"25a^2 - 4(10a^2 - 1) > 0", "> 0", format_mp(disc, 10), disc > 0});
  });
  guarded(r, "polynomial", [&] {
    const ExactRatFun f(poly({2, 8, -16}));
    r.sub_checks.push_back(
        exact_check("f' + f^2 - 12", "256*z^4 - 256*z^3", to_expression(hayman_expr(f, 2, -12))));
  });
  return r;
}

std::vector<ExampleResult> run_examples() {
  return {example_1(), example_2(), example_3(), example_4(), example_5(), example_6()};
}

Json example_json(const ExampleResult& r) {
  Json checks = Json::array();
  for (const auto& s : r.sub_checks)
    checks.push_back(Json{{"name", s.name}, {"expected", s.expected}, {"observed", s.observed}, {"pass", s.pass}});
  return Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"sub_checks", std::move(checks)}};
}

Json examples_json(const std::vector<ExampleResult>& results) {
  Json all = Json::array();
  bool pass = true;
  for (const auto& r : results) {
    all.push_back(example_json(r));
    pass = pass && r.pass();
  }
  return Json{{"examples", std::move(all)}, {"pass", pass}};
}

}  // namespace rzlab
