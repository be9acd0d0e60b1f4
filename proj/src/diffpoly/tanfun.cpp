#include "diffpoly/tanfun.hpp"

#include <regex>
#include <string>

#include "core/error.hpp"
#include "exactalg/parse.hpp"
#include "exactalg/sturm.hpp"
#include "rootlab/mp.hpp"
#include "rootlab/roots.hpp"

namespace rzlab {

TanFun parse_tanfun(std::string_view text) {
  static const std::regex pattern(R"(^\s*R\s*=\s*(.*?)\s*;\s*b\s*=\s*([^;]*?)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern))
    throw ParseError("expected \"R = <ratfun> ; b = <rational>\"", 0);
  const auto r_pos = static_cast<std::size_t>(m.position(1));
  const auto b_pos = static_cast<std::size_t>(m.position(2));
  const std::string_view r_text = text.substr(r_pos, static_cast<std::size_t>(m.length(1)));
  const std::string_view b_text = text.substr(b_pos, static_cast<std::size_t>(m.length(2)));
  TanFun f;
  if (r_text.find_first_of(",;") != std::string_view::npos) f.outer = parse_ratfun_coefficients(r_text, r_pos);
  else f.outer = parse_expression(r_text, r_pos);
  f.frequency = parse_rational(b_text, b_pos);
  if (sgn(f.frequency) == 0) throw ParseError("frequency b must be nonzero", b_pos);
  return f;
}

ReducedTanPoly tan_reduce(const TanFun& f, const TanMode& mode) {
  if (sgn(f.frequency) == 0) throw DomainError("frequency b must be nonzero");
  const ExactRatFun& R = f.outer;
  const ExactRatFun one_plus_t2(ExactPoly(std::vector<BigRational>{1, 0, 1}));
  const ExactRatFun df = ExactRatFun::constant(f.frequency) * R.derivative() * one_plus_t2;
  ExactRatFun expr;
  if (const auto* h = std::get_if<HaymanMode>(&mode)) {
    if (h->m < 1) throw DomainError("hayman mode requires m >= 1");
    expr = df + R.pow(h->m) + h->c;
  } else {
    const auto& p = std::get<ProductMode>(mode);
    if (p.n < 1) throw DomainError("product mode requires n >= 1");
    expr = R.pow(p.n) * df + BigRational(-p.c);
  }
  if (expr.is_zero()) throw DomainError("expression vanishes identically");
  return {expr.num(), expr};
}

TanZeroCount count_tan_zeros(const ReducedTanPoly& reduced) {
  TanZeroCount out;
  const ExactPoly pm_i(std::vector<BigRational>{1, 0, 1});
  ExactPoly p = reduced.poly;
  while (!p.is_constant()) {
    auto [q, r] = divmod(p, pm_i);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++out.excluded_pm_i_multiplicity;
  }
  out.attainable = p;
  if (p.is_constant()) {
    out.no_zeros = true;
    return out;
  }
  out.real_distinct = sturm_distinct_real_roots(p);
  out.nonreal_distinct = squarefree_part(p).deg() - out.real_distinct;
  return out;
}

double tan_reduction_max_deviation(const TanFun& f, const TanMode& mode,
                                   const std::vector<double>& samples) {
  PrecisionScope scope(160);
  const ReducedTanPoly reduced = tan_reduce(f, mode);
  const MpPoly rn = MpPoly::from_exact(f.outer.num()), rd = MpPoly::from_exact(f.outer.den());
  const MpPoly en = MpPoly::from_exact(reduced.expression.num());
  const MpPoly ed = MpPoly::from_exact(reduced.expression.den());
  const MpReal b = to_mp(f.frequency);
  const MpReal h = pow(MpReal(2), -60);
  auto fval = [&](const MpReal& x) {
    MpReal t = tan(b * x);
    return MpReal(rn(t) / rd(t));
  };
  double worst = 0.0;
  for (double xs : samples) {
    const MpReal x(xs);
    const MpReal t = tan(b * x);
    const MpReal fx = fval(x);
    // Fourth-order central difference.
    const MpReal dfx = (-fval(x + 2 * h) + 8 * fval(x + h) - 8 * fval(x - h) + fval(x - 2 * h)) / (12 * h);
    MpReal direct;
    if (const auto* hm = std::get_if<HaymanMode>(&mode)) {
      direct = dfx + pow(fx, hm->m) + to_mp(hm->c);
    } else {
      const auto& pm = std::get<ProductMode>(mode);
      direct = pow(fx, pm.n) * dfx - to_mp(pm.c);
    }
    const MpReal reduced_value = en(t) / ed(t);
    const MpReal dev = abs(direct - reduced_value) / max(MpReal(1), abs(reduced_value));
    worst = std::max(worst, dev.convert_to<double>());
  }
  return worst;
}

}  // namespace rzlab
