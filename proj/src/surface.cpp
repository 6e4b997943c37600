#include "pqs/surface.hpp"

#include "pqs/error.hpp"

namespace pqs {

DivisorClass DivisorClass::curve(BasisIndex c, Rational coeff)
{
  DivisorClass d;
  d.add(c, coeff);
  return d;
}

Rational DivisorClass::coefficient(BasisIndex c) const
{
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::add(BasisIndex c, const Rational& coeff)
{
  auto& slot = coeffs_[c];
  slot += coeff;
  if (slot == 0)
    coeffs_.erase(c);
  return *this;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs)
{
  for (const auto& [c, x] : rhs.coeffs_)
    add(c, x);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs)
{
  for (const auto& [c, x] : rhs.coeffs_)
    add(c, -x);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s)
{
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [c, x] : coeffs_)
    x *= s;
  return *this;
}

BasisIndex SurfaceModel::string_component(std::size_t point, std::size_t k) const
{
  if (k >= strings_.at(point).length())
    throw ValidationError("string component index out of range");
  return string_start_.at(point) + k;
}

std::vector<std::size_t> SurfaceModel::points_on_central(BasisIndex c) const
{
  const auto& curve = basis_.at(c);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < locus_.points.size(); ++p) {
    const auto& pt = locus_.points[p];
    if ((curve.kind == CurveKind::Central1 && pt.branch1 == curve.index) ||
        (curve.kind == CurveKind::Central2 && pt.branch2 == curve.index))
      out.push_back(p);
  }
  return out;
}

DivisorClass SurfaceModel::singular_fiber1(std::size_t i) const
{
  auto d = DivisorClass::curve(central1(i), sys1_.signature.at(i));
  for (auto p : points_on_central(central1(i)))
    for (std::size_t k = 0; k < strings_[p].length(); ++k) {
      auto z = string_component(p, k);
      d.add(z, basis_[z].mult1);
    }
  return d;
}

DivisorClass SurfaceModel::singular_fiber2(std::size_t j) const
{
  auto d = DivisorClass::curve(central2(j), sys2_.signature.at(j));
  for (auto p : points_on_central(central2(j)))
    for (std::size_t k = 0; k < strings_[p].length(); ++k) {
      auto z = string_component(p, k);
      d.add(z, basis_[z].mult2);
    }
  return d;
}

SurfaceModel build_surface_model(const SphericalSystem& sys1, const SphericalSystem& sys2)
{
  require_hyperbolic_genus(sys1, "C1");
  require_hyperbolic_genus(sys2, "C2");

  SurfaceModel S;
  S.sys1_ = sys1;
  S.sys2_ = sys2;
  S.locus_ = enumerate_singularities(sys1, sys2);
  S.genus1_ = rh_genus(sys1);
  S.genus2_ = rh_genus(sys2);
  const auto& locus = S.locus_;
  const long long order = static_cast<long long>(sys1.group->order());

  auto& basis = S.basis_;
  basis.push_back({CurveKind::Fiber1, 0, 0, 0, 1, 0, "F1"});
  basis.push_back({CurveKind::Fiber2, 0, 0, 0, 0, 1, "F2"});
  for (std::size_t i = 0; i < locus.branches1; ++i) {
    S.central1_.push_back(basis.size());
    basis.push_back({CurveKind::Central1, i, 0, 0, sys1.signature[i], 0,
                     "N" + std::to_string(i + 1)});
  }
  for (std::size_t j = 0; j < locus.branches2; ++j) {
    S.central2_.push_back(basis.size());
    basis.push_back({CurveKind::Central2, j, 0, 0, 0, sys2.signature[j],
                     "M" + std::to_string(j + 1)});
  }
  for (std::size_t p = 0; p < locus.points.size(); ++p) {
    const auto& pt = locus.points[p];
    S.strings_.push_back(make_hj_string(pt.type));
    S.string_start_.push_back(basis.size());
    const auto rays = string_rays(pt.type);
    const long long mi = sys1.signature[pt.branch1];
    const long long mj = sys2.signature[pt.branch2];
    const auto& b = S.strings_.back().b;
    for (std::size_t k = 0; k < b.size(); ++k) {
      // sigma_1 is z1^{m_i} and sigma_2 is z2^{m_j} in the local chart
      if ((mi * rays[k].alpha) % pt.type.n != 0 || (mj * rays[k].beta) % pt.type.n != 0)
        throw InconsistencyError("non-integral string multiplicity");
      basis.push_back({CurveKind::String, p, k, b[k], mi * rays[k].alpha / pt.type.n,
                       mj * rays[k].beta / pt.type.n,
                       "Z" + std::to_string(p + 1) + "." + std::to_string(k + 1)});
    }
  }

  const auto rank = basis.size();
  auto& form = S.form_;
  form.assign(rank, std::vector<Rational>(rank, Rational(0)));
  auto set = [&](BasisIndex a, BasisIndex b, const Rational& v) {
    form[a][b] = v;
    form[b][a] = v;
  };

  set(S.fiber1(), S.fiber2(), order);
  for (std::size_t i = 0; i < locus.branches1; ++i)
    set(S.fiber2(), S.central1(i), Rational(order / sys1.signature[i]));
  for (std::size_t j = 0; j < locus.branches2; ++j)
    set(S.fiber1(), S.central2(j), Rational(order / sys2.signature[j]));

  for (std::size_t i = 0; i < locus.branches1; ++i)
    for (std::size_t j = 0; j < locus.branches2; ++j)
      set(S.central1(i), S.central2(j), Rational(locus.free_orbits[i][j]));

  std::vector<Rational> selfN(locus.branches1, Rational(0));
  std::vector<Rational> selfM(locus.branches2, Rational(0));
  for (std::size_t p = 0; p < locus.points.size(); ++p) {
    const auto& pt = locus.points[p];
    const auto dual = dual_type(pt.type);
    selfN[pt.branch1] -= make_rational(dual.a, pt.type.n);
    selfM[pt.branch2] -= make_rational(pt.type.a, pt.type.n);

    const auto m = string_intersection_matrix(S.strings_[p]);
    const auto l = m.size();
    for (std::size_t r = 0; r < l; ++r)
      for (std::size_t c = 0; c < l; ++c)
        form[S.string_start_[p] + r][S.string_start_[p] + c] = Rational(m[r][c]);
    set(S.string_component(p, 0), S.central2(pt.branch2), 1);
    set(S.string_component(p, l - 1), S.central1(pt.branch1), 1);
  }
  for (std::size_t i = 0; i < locus.branches1; ++i) {
    if (!is_integer(selfN[i]))
      throw ValidationError("central component N" + std::to_string(i + 1) +
                            " has non-integral self-intersection " + to_string(selfN[i]));
    form[S.central1(i)][S.central1(i)] = selfN[i];
  }
  for (std::size_t j = 0; j < locus.branches2; ++j) {
    if (!is_integer(selfM[j]))
      throw ValidationError("central component M" + std::to_string(j + 1) +
                            " has non-integral self-intersection " + to_string(selfM[j]));
    form[S.central2(j)][S.central2(j)] = selfM[j];
  }
  return S;
}

Rational intersect(const SurfaceModel& S, const DivisorClass& d1, const DivisorClass& d2)
{
  Rational total = 0;
  for (const auto& [a, x] : d1.coefficients()) {
    if (a >= S.rank())
      throw ValidationError("divisor refers to unknown basis curve " + std::to_string(a));
    for (const auto& [b, y] : d2.coefficients()) {
      if (b >= S.rank())
        throw ValidationError("divisor refers to unknown basis curve " + std::to_string(b));
      const auto& v = S.pairing(a, b);
      if (v != 0)
        total += x * y * v;
    }
  }
  return total;
}

DivisorClass canonical_class(const SurfaceModel& S)
{
  DivisorClass K;
  K.add(S.fiber1(), 2 * S.sys1().base_genus - 2);
  K.add(S.fiber2(), 2 * S.sys2().base_genus - 2);
  for (BasisIndex c = 0; c < S.rank(); ++c) {
    const auto& curve = S.basis()[c];
    switch (curve.kind) {
    case CurveKind::Central1:
      K.add(c, curve.mult1 - 1);
      break;
    case CurveKind::Central2:
      K.add(c, curve.mult2 - 1);
      break;
    case CurveKind::String:
      K.add(c, (curve.mult1 - 1) + (curve.mult2 - 1) + 1);
      break;
    default:
      break;
    }
  }
  return K;
}

DivisorClass exceptional_class(const SurfaceModel& S)
{
  DivisorClass E;
  for (BasisIndex c = 0; c < S.rank(); ++c)
    if (S.basis()[c].kind == CurveKind::String)
      E.add(c, 1);
  return E;
}

NumericalInvariants numerical_invariants(const SurfaceModel& S)
{
  NumericalInvariants inv;
  const long long order = static_cast<long long>(S.group_order());
  inv.e = make_rational((2LL - 2LL * S.genus1()) * (2LL - 2LL * S.genus2()), order);
  for (std::size_t p = 0; p < S.locus().points.size(); ++p) {
    const auto n = S.locus().points[p].type.n;
    inv.e += 1 - make_rational(1, n);
    inv.e += static_cast<long long>(S.string_of(p).length());
  }
  if (!is_integer(inv.e))
    throw InconsistencyError("Euler number " + to_string(inv.e) + " is not an integer");

  const auto K = canonical_class(S);
  inv.K2 = intersect(S, K, K);

  const Rational chi = (inv.K2 + inv.e) / 12;
  if (!is_integer(chi) || chi <= 0)
    throw InconsistencyError("Noether's formula gives chi = " + to_string(chi) + " from K^2 = " +
                             to_string(inv.K2) + ", e = " + to_string(inv.e));
  inv.chi = to_int64(chi);
  inv.q = S.sys1().base_genus + S.sys2().base_genus;
  inv.pg = inv.chi - 1 + inv.q;
  if (inv.pg < 0)
    throw InconsistencyError("negative geometric genus");
  return inv;
}

long long adjunction_genus(const SurfaceModel& S, BasisIndex c)
{
  const auto C = DivisorClass::curve(c);
  const auto twice = intersect(S, canonical_class(S) + C, C) + 2;
  if (!is_integer(twice) || to_int64(twice) % 2 != 0 || twice < 0)
    throw InconsistencyError("adjunction gives 2g - 2 = " + to_string(twice - 2) + " on " +
                             S.basis().at(c).label);
  return to_int64(twice) / 2;
}

std::string describe(const SurfaceModel& S, BasisIndex c)
{
  return S.basis().at(c).label;
}

} // namespace pqs
