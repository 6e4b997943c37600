#include "pqs/curve_bounds.hpp"

#include "pqs/error.hpp"

namespace pqs {

namespace {

bool is_central(CurveKind k)
{
  return k == CurveKind::Central1 || k == CurveKind::Central2;
}

} // namespace

CurveReport degree_bound_report(const SurfaceModel& S, BasisIndex c)
{
  const auto& curve = S.basis().at(c);
  if (curve.kind == CurveKind::String)
    throw ValidationError(curve.label + " is a string component, contained in E");

  const auto K = canonical_class(S);
  const auto E = exceptional_class(S);
  const auto C = DivisorClass::curve(c);

  CurveReport r;
  r.curve = c;
  r.label = curve.label;
  r.genus = adjunction_genus(S, c);
  r.KmE_degree = intersect(S, K - E, C);
  r.bound = 2 * (2 * r.genus - 2);
  r.satisfied = r.KmE_degree <= r.bound;

  if (is_central(curve.kind)) {
    TangentCaseData t;
    t.Y_squared = intersect(S, C, C);
    t.KY_dot_Y = intersect(S, K, C) + t.Y_squared;
    t.Y_dot_E = intersect(S, E, C);
    t.string_excess = t.Y_dot_E + t.Y_squared;
    t.strings_met = S.points_on_central(c).size();
    r.tangent = t;
  }
  return r;
}

std::vector<CurveReport> degree_bound_reports(const SurfaceModel& S)
{
  std::vector<CurveReport> out;
  for (BasisIndex c = 0; c < S.rank(); ++c)
    if (S.basis()[c].kind != CurveKind::String)
      out.push_back(degree_bound_report(S, c));
  return out;
}

GenusCrosscheck central_component_genus_crosscheck(const SurfaceModel& S, BasisIndex c)
{
  const auto& curve = S.basis().at(c);
  if (!is_central(curve.kind))
    throw ValidationError(curve.label + " is not a central component");

  // N_i ~ C2 / <g_i>, M_j ~ C1 / <h_j>
  const bool first = curve.kind == CurveKind::Central1;
  const long long h = first ? curve.mult1 : curve.mult2;
  const long long euler_cover = 2LL * (first ? S.genus2() : S.genus1()) - 2;

  Rational rhs_excess = 0;
  for (auto p : S.points_on_central(c))
    rhs_excess += 1 - make_rational(1, S.locus().points[p].type.n);
  // euler_cover = h (2g - 2 + excess)
  const Rational twice_g = make_rational(euler_cover, h) - rhs_excess + 2;
  if (!is_integer(twice_g) || to_int64(twice_g) % 2 != 0 || twice_g < 0)
    throw InconsistencyError("Riemann-Hurwitz gives no genus for " + curve.label);

  GenusCrosscheck out;
  out.riemann_hurwitz = to_int64(twice_g) / 2;
  out.adjunction = adjunction_genus(S, c);
  out.equal = out.riemann_hurwitz == out.adjunction;
  if (!out.equal)
    throw InconsistencyError("genus of " + curve.label + ": adjunction " +
                             std::to_string(out.adjunction) + ", Riemann-Hurwitz " +
                             std::to_string(out.riemann_hurwitz));
  return out;
}

CentralGenusReport check_central_irrationality(const SurfaceModel& S, bool in_scope)
{
  CentralGenusReport r;
  r.asserted = in_scope;
  for (BasisIndex c = 0; c < S.rank(); ++c) {
    if (!is_central(S.basis()[c].kind))
      continue;
    auto g = adjunction_genus(S, c);
    r.central_genera.emplace_back(c, g);
    if (g == 0)
      r.rational_centrals.push_back(c);
  }
  r.holds = r.rational_centrals.empty();
  return r;
}

std::vector<BranchGenusSolution> solve_branch_genus(long long euler,
                                                    const std::vector<int>& branch_orders)
{
  std::vector<BranchGenusSolution> out;
  // a positive orbifold Euler characteristic is at least 1/42 (Hurwitz)
  if (euler <= 0)
    throw ValidationError("solve_branch_genus needs 2g(C) - 2 > 0");
  const long long h_max = 42 * euler;
  for (long long h = 2; h <= h_max; ++h) {
    bool divides = true;
    Rational excess = 0;
    for (int n : branch_orders) {
      if (n < 2 || h % n != 0)
        divides = false;
      excess += 1 - make_rational(1, n);
    }
    if (!divides)
      continue;
    const Rational twice_g = make_rational(euler, h) - excess + 2;
    if (!is_integer(twice_g) || to_int64(twice_g) % 2 != 0 || twice_g < 0)
      continue;
    out.push_back({h, to_int64(twice_g) / 2});
  }
  return out;
}

std::optional<BasisIndex> find_minus_one_curve(const SurfaceModel& S)
{
  for (BasisIndex c = 0; c < S.rank(); ++c)
    if (S.pairing(c, c) == -1 && adjunction_genus(S, c) == 0)
      return c;
  return std::nullopt;
}

} // namespace pqs
