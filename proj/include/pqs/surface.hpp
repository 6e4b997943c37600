#pragma once

#include <map>
#include <string>
#include <vector>

#include "pqs/hj.hpp"
#include "pqs/orbifold.hpp"
#include "pqs/rational.hpp"
#include "pqs/singularities.hpp"

namespace pqs {

/*
 * Divisor lattice of the minimal resolution S of X = (C1 x C2)/G.
 *
 * sigma_1 : S -> C1/G has general fibre F1 ~ C2, sigma_2 : S -> C2/G has
 * general fibre F2 ~ C1. Over branch point i of C1 -> C1/G the fibre of
 * sigma_1 is m_i N_i plus the strings of the singular points on it; the
 * same for sigma_2 with M_j. At a point of oriented type 1/n(1,a) the
 * string Z_1..Z_l meets M_j at Z_1 and N_i at Z_l, and contributes a'/n
 * to -N_i^2 and a/n to -M_j^2.
 */

enum class CurveKind
{
  Fiber1,   // F1, general fibre of sigma_1
  Fiber2,   // F2, general fibre of sigma_2
  Central1, // N_i
  Central2, // M_j
  String,   // Z_k of the string resolving a singular point
};

struct BasisCurve
{
  CurveKind kind = CurveKind::Fiber1;
  std::size_t index = 0;     // branch index (centrals) or singular point index (strings)
  std::size_t component = 0; // position k-1 inside a string
  int b = 0;                 // strings: self-intersection is -b
  long long mult1 = 0;       // multiplicity in the sigma_1 fibre containing it (0: none)
  long long mult2 = 0;       // same for sigma_2
  std::string label;
};

using BasisIndex = std::size_t;

class DivisorClass
{
public:
  DivisorClass() = default;
  static DivisorClass curve(BasisIndex c, Rational coeff = 1);

  const std::map<BasisIndex, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(BasisIndex c) const;
  bool is_zero() const { return coeffs_.empty(); }

  DivisorClass& add(BasisIndex c, const Rational& coeff);
  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Rational& s);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
  std::map<BasisIndex, Rational> coeffs_; // no zero entries
};

class SurfaceModel
{
public:
  const SphericalSystem& sys1() const { return sys1_; }
  const SphericalSystem& sys2() const { return sys2_; }
  const SingularLocus& locus() const { return locus_; }
  std::size_t group_order() const { return sys1_.group->order(); }
  int genus1() const { return genus1_; }
  int genus2() const { return genus2_; }

  const std::vector<BasisCurve>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  const Rational& pairing(BasisIndex a, BasisIndex b) const { return form_.at(a).at(b); }

  BasisIndex fiber1() const { return 0; }
  BasisIndex fiber2() const { return 1; }
  BasisIndex central1(std::size_t i) const { return central1_.at(i); }
  BasisIndex central2(std::size_t j) const { return central2_.at(j); }
  BasisIndex string_component(std::size_t point, std::size_t k) const;
  const HJString& string_of(std::size_t point) const { return strings_.at(point); }

  /// Singular points whose strings meet the given central component.
  std::vector<std::size_t> points_on_central(BasisIndex c) const;

  /// m_i N_i + strings on the fibre, with their multiplicities.
  DivisorClass singular_fiber1(std::size_t i) const;
  DivisorClass singular_fiber2(std::size_t j) const;

private:
  friend SurfaceModel build_surface_model(const SphericalSystem&, const SphericalSystem&);

  SphericalSystem sys1_;
  SphericalSystem sys2_;
  SingularLocus locus_;
  int genus1_ = 0;
  int genus2_ = 0;
  std::vector<BasisCurve> basis_;
  std::vector<std::vector<Rational>> form_;
  std::vector<BasisIndex> central1_;
  std::vector<BasisIndex> central2_;
  std::vector<BasisIndex> string_start_;
  std::vector<HJString> strings_;
};

SurfaceModel build_surface_model(const SphericalSystem& sys1, const SphericalSystem& sys2);

/// Bilinear extension of the pairing table.
Rational intersect(const SurfaceModel& S, const DivisorClass& d1, const DivisorClass& d2);

/*
 * Serrano's formula
 *   K_S = sigma_1^* K_{C1/G} + sigma_2^* K_{C2/G}
 *         + sum (mult - 1) over components of singular sigma_1 fibres
 *         + sum (mult - 1) over components of singular sigma_2 fibres
 *         + sum Z_t,
 * where string components take part in both fibre sums.
 */
DivisorClass canonical_class(const SurfaceModel& S);

DivisorClass exceptional_class(const SurfaceModel& S);

struct NumericalInvariants
{
  Rational e;   // topological Euler number c_2
  Rational K2;  // c_1^2
  long long chi = 0;
  long long q = 0;
  long long pg = 0;
};

/// e is the stratified count
///   e(C1) e(C2) / |G| + sum_p (1 - 1/n_p) + sum_p l_p,
/// chi comes from Noether's formula and must be a positive integer.
NumericalInvariants numerical_invariants(const SurfaceModel& S);

/// Genus of a basis curve from 2g - 2 = (K + C).C.
long long adjunction_genus(const SurfaceModel& S, BasisIndex c);

std::string describe(const SurfaceModel& S, BasisIndex c);

} // namespace pqs
