#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "pqs/error.hpp"
#include "pqs/hj.hpp"

using namespace pqs;

namespace {

// independent oracle: Gaussian elimination over the rationals
Rational gauss_det(const IntMatrix& M, std::size_t k)
{
  std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      A[i][j] = Rational(M[i][j]);
  Rational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && A[piv][c] == 0)
      ++piv;
    if (piv == k)
      return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const Rational f = A[r][c] / A[c][c];
      for (std::size_t j = c; j < k; ++j)
        A[r][j] -= f * A[c][j];
    }
  }
  return det;
}

} // namespace

TEST_CASE("hj_expand examples")
{
  CHECK(hj_expand(2, 1) == std::vector<int>{2});
  CHECK(hj_expand(5, 2) == std::vector<int>{3, 2});
  for (int n = 2; n <= 12; ++n)
    CHECK(hj_expand(n, n - 1) == std::vector<int>(static_cast<std::size_t>(n - 1), 2));
  CHECK(hj_expand(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(hj_expand(7, 5) == std::vector<int>{2, 2, 3});
  CHECK_THROWS_AS(hj_expand(6, 2), ValidationError);
}

TEST_CASE("hj_evaluate examples")
{
  std::vector<int> b2 = {2}, b222 = {2, 2, 2}, b32 = {3, 2};
  CHECK(hj_evaluate(b2) == 2);
  CHECK(hj_evaluate(b222) == make_rational(4, 3));
  CHECK(hj_evaluate(b32) == make_rational(5, 2));
  std::vector<int> bad = {2, 1};
  CHECK_THROWS_AS(hj_evaluate(bad), ValidationError);
}

TEST_CASE("string matrix and length examples")
{
  CHECK(string_intersection_matrix(make_hj_string(SingularityType::make(2, 1))) ==
        IntMatrix{{-2}});
  CHECK(string_intersection_matrix(make_hj_string(SingularityType::make(3, 2))) ==
        IntMatrix{{-2, 1}, {1, -2}});
  CHECK(string_intersection_matrix(make_hj_string(SingularityType::make(5, 2))) ==
        IntMatrix{{-3, 1}, {1, -2}});
  CHECK(string_length(SingularityType::make(2, 1)) == 1);
  CHECK(string_length(SingularityType::make(9, 8)) == 8);
  CHECK(string_length(SingularityType::make(5, 2)) == 2);
}

TEST_CASE("properties for all coprime (n, a), n <= 50")
{
  for (int n = 2; n <= 50; ++n)
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1)
        continue;
      INFO("n=" << n << " a=" << a);
      const auto t = SingularityType::make(n, a);
      const auto s = make_hj_string(t);
      CHECK(std::all_of(s.b.begin(), s.b.end(), [](int b) { return b >= 2; }));
      CHECK(s.length() <= static_cast<std::size_t>(n - 1));
      CHECK(hj_evaluate(s.b) == make_rational(n, a));

      auto rev = s.b;
      std::reverse(rev.begin(), rev.end());
      CHECK(hj_expand(dual_type(t)) == rev);

      const auto M = string_intersection_matrix(s);
      const std::size_t l = s.length();
      CHECK(gauss_det(M, l) == Rational(l % 2 ? -n : n));
      CHECK(std::abs(string_determinant(s.b)) == n);
      for (std::size_t k = 1; k <= l; ++k) {
        const Rational minor = gauss_det(M, k);
        CHECK((k % 2 ? minor < 0 : minor > 0));
      }

      const auto rays = string_rays(t);
      REQUIRE(rays.size() == l);
      CHECK(rays.front().alpha == 1);
      CHECK(rays.front().beta == a);
      for (const auto& r : rays) {
        CHECK(r.alpha > 0);
        CHECK(r.beta > 0);
        CHECK(r.alpha < n);
        CHECK(r.beta < n);
      }
      CHECK(rays.back().alpha == dual_type(t).a);
      CHECK(rays.back().beta == 1);
    }
}
