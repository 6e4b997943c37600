#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pqs/surface.hpp"

namespace pqs {

/// Data of the tangent case Y in a singular fibre: K_Y.Y = K.Y + Y^2, and
/// Y.E + Y^2 = r - sum a_i/n_i over the r strings meeting Y.
struct TangentCaseData
{
  Rational KY_dot_Y;
  Rational Y_dot_E;
  Rational Y_squared;
  Rational string_excess; // r - sum a_i/n_i (oriented towards Y)
  std::size_t strings_met = 0; // N_1(E) for this curve
};

struct CurveReport
{
  BasisIndex curve = 0;
  std::string label;
  long long genus = 0;
  Rational KmE_degree; // (K - E).C
  long long bound = 0; // 2 (2g - 2)
  bool satisfied = false;
  std::optional<TangentCaseData> tangent;
};

/// (K - E).C <= 2(2g(C) - 2) for a fibre or central curve.
/// Throws ValidationError for string components (they lie in E).
CurveReport degree_bound_report(const SurfaceModel& S, BasisIndex c);

/// Reports for every non-string basis curve, in basis order.
std::vector<CurveReport> degree_bound_reports(const SurfaceModel& S);

struct GenusCrosscheck
{
  long long adjunction = 0;
  long long riemann_hurwitz = 0;
  bool equal = false;
};

/// Genus of a central component by adjunction on S and by Riemann-Hurwitz
/// for C -> C/H, the branch data read from the singular points on it.
/// Throws InconsistencyError on mismatch.
GenusCrosscheck central_component_genus_crosscheck(const SurfaceModel& S, BasisIndex c);

struct CentralGenusReport
{
  bool asserted = false; // only under the in-scope flag
  std::vector<std::pair<BasisIndex, long long>> central_genera;
  std::vector<BasisIndex> rational_centrals;
  bool holds = true; // meaningful only when asserted
};

/// Central components are irrational on the c_1^2 = 6, P_g = 0 surfaces.
CentralGenusReport check_central_irrationality(const SurfaceModel& S, bool in_scope);

/// A basis curve with genus 0 and self-intersection -1, if any; S is then not
/// minimal and the degree bound may fail on rational central components.
std::optional<BasisIndex> find_minus_one_curve(const SurfaceModel& S);

struct BranchGenusSolution
{
  long long stabilizer_order = 0;
  long long genus = 0;
};

/// All (|H|, g(Y)) with |H| >= 2, every branch order dividing |H|, g(Y) >= 0 and
///   euler = |H| (2g(Y) - 2 + sum (1 - 1/n_p)),
/// where euler = 2g(C) - 2 and n_p are the branch orders of C -> Y = C/H.
std::vector<BranchGenusSolution> solve_branch_genus(long long euler,
                                                    const std::vector<int>& branch_orders);

} // namespace pqs
