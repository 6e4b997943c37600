#pragma once

#include <compare>
#include <map>
#include <vector>

#include "pqs/orbifold.hpp"

namespace pqs {

/// Cyclic quotient singularity 1/n(1,a): C^2 / Z_n with xi.(z1, z2) = (xi z1, xi^a z2).
struct SingularityType
{
  int n = 2;
  int a = 1;

  /// Throws ValidationError unless n >= 2, 1 <= a < n and gcd(a, n) = 1.
  static SingularityType make(int n, int a);

  auto operator<=>(const SingularityType&) const = default;
};

SingularityType dual_type(SingularityType t);

/// Lexicographically smaller of (n, a) and (n, a'). For reporting only.
SingularityType normalized_key(SingularityType t);

/*
 * One G-orbit of fixed points on C1 x C2. Fixed points are pairs of cosets
 * (s<g_i>, t<h_j>); the type is oriented with C1 as first factor: the
 * generator of the stabilizer that rotates the C1 tangent by exp(2 pi i/n)
 * rotates the C2 tangent by exp(2 pi i a/n).
 */
struct SingularPoint
{
  SingularityType type;
  std::size_t branch1 = 0; // branch index in sys1
  std::size_t branch2 = 0; // branch index in sys2
  ElementId coset1 = 0;    // representative s
  ElementId coset2 = 0;    // representative t
  ElementId generator = 0; // stabilizer generator with first rotation exponent 1
  std::size_t orbit_size = 0;
};

struct SingularLocus
{
  std::size_t branches1 = 0;
  std::size_t branches2 = 0;
  std::vector<SingularPoint> points; // ordered by cell (i, j), then orbit discovery
  // free_orbits[i][j]: G-orbits of coset pairs over (i, j) with trivial stabilizer
  std::vector<std::vector<std::size_t>> free_orbits;

  /// normalized type -> number of points
  std::map<SingularityType, std::size_t> summary() const;
};

SingularLocus enumerate_singularities(const SphericalSystem& sys1, const SphericalSystem& sys2);

} // namespace pqs
