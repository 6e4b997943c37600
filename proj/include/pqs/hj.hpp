#pragma once

#include <span>
#include <vector>

#include "pqs/rational.hpp"
#include "pqs/singularities.hpp"

namespace pqs {

/*
 * Hirzebruch-Jung strings.
 *
 *   n/a = b_1 - 1/(b_2 - 1/(... - 1/b_l)),   b_k >= 2,
 *
 * and the string for the dual type is the reversed list. Component Z_k has
 * self-intersection -b_k, consecutive components meet once.
 */

using IntMatrix = std::vector<std::vector<long long>>;

struct HJString
{
  std::vector<int> b;
  SingularityType source_type;

  std::size_t length() const { return b.size(); }
};

std::vector<int> hj_expand(int n, int a);
std::vector<int> hj_expand(SingularityType t);

/// Evaluates [b_1, ..., b_l] right to left. Throws ValidationError if some b_k < 2.
Rational hj_evaluate(std::span<const int> b);

/// Expansion plus the |det| = n self-check.
HJString make_hj_string(SingularityType t);

IntMatrix string_intersection_matrix(const HJString& s);

std::size_t string_length(SingularityType t);

/// Determinant of the string matrix via the continuant recurrence.
long long string_determinant(std::span<const int> b);

/*
 * Toric description of the minimal resolution of 1/n(1,a): the exceptional
 * rays v_0 = (0, n), v_1 = (1, a), v_{k+1} = b_k v_k - v_{k-1}, ...,
 * v_{l+1} = (n, 0), all scaled by 1/n. Z_k is the divisor of v_k.
 *
 * The order of vanishing of z1^n along Z_k is alpha_k, that of z2^n is
 * beta_k. Z_1 meets the strict transform of {z2 = 0}, Z_l that of {z1 = 0}.
 */
struct StringRay
{
  long long alpha = 0;
  long long beta = 0;
};

/// Rays v_1..v_l (the exceptional ones only).
std::vector<StringRay> string_rays(SingularityType t);

} // namespace pqs
