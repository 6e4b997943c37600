#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "pqs/error.hpp"
#include "pqs/singularities.hpp"

using namespace pqs;

namespace {

std::map<SingularityType, std::size_t> normalized(const SingularLocus& L)
{
  std::map<SingularityType, std::size_t> out;
  for (const auto& p : L.points)
    ++out[normalized_key(p.type)];
  return out;
}

void check_locus(const SphericalSystem& s1, const SphericalSystem& s2)
{
  auto L = enumerate_singularities(s1, s2);
  const auto G = s1.group->order();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> fixed_in_cell;
  for (const auto& p : L.points) {
    CHECK(s1.signature[p.branch1] % p.type.n == 0);
    CHECK(s2.signature[p.branch2] % p.type.n == 0);
    CHECK(p.orbit_size * static_cast<std::size_t>(p.type.n) == G);
    CHECK(std::gcd(p.type.n, p.type.a) == 1);
    CHECK(element_order(*s1.group, p.generator) == static_cast<std::size_t>(p.type.n));
    fixed_in_cell[{p.branch1, p.branch2}] += p.orbit_size;
  }
  // fixed coset pairs, counted directly
  for (std::size_t i = 0; i < s1.generators.size(); ++i)
    for (std::size_t j = 0; j < s2.generators.size(); ++j) {
      std::size_t fixed = 0, free = 0;
      for (const auto& x : branch_fiber(s1, i))
        for (const auto& y : branch_fiber(s2, j)) {
          auto H = intersect_subgroups(*s1.group, x.stabilizer, y.stabilizer);
          (H.order() > 1 ? fixed : free) += 1;
        }
      CHECK(fixed == fixed_in_cell[{i, j}]);
      CHECK(free == L.free_orbits[i][j] * G);
    }

  auto swapped = enumerate_singularities(s2, s1);
  CHECK(normalized(swapped) == normalized(L));
  std::map<SingularityType, std::size_t> oriented, dual_swapped;
  for (const auto& p : L.points)
    ++oriented[p.type];
  for (const auto& p : swapped.points)
    ++dual_swapped[dual_type(p.type)];
  CHECK(oriented == dual_swapped);
}

} // namespace

TEST_CASE("dual_type and normalized_key")
{
  CHECK(dual_type(SingularityType::make(2, 1)) == SingularityType::make(2, 1));
  CHECK(dual_type(SingularityType::make(5, 2)) == SingularityType::make(5, 3));
  CHECK(dual_type(SingularityType::make(7, 3)) == SingularityType::make(7, 5));
  CHECK(normalized_key(SingularityType::make(2, 1)) == SingularityType::make(2, 1));
  CHECK(normalized_key(SingularityType::make(5, 3)) == SingularityType::make(5, 2));
  CHECK(normalized_key(SingularityType::make(7, 5)) == SingularityType::make(7, 3));
  CHECK_THROWS_AS(SingularityType::make(4, 2), ValidationError);
  CHECK_THROWS_AS(SingularityType::make(1, 0), ValidationError);
  CHECK_THROWS_AS(SingularityType::make(5, 5), ValidationError);

  for (int n = 2; n <= 60; ++n)
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1)
        continue;
      auto t = SingularityType::make(n, a);
      auto d = dual_type(t);
      CHECK((static_cast<long long>(a) * d.a) % n == 1);
      CHECK(dual_type(d) == t);
      CHECK(normalized_key(t) == normalized_key(d));
    }
  for (int n = 2; n <= 60; ++n)
    CHECK(dual_type(SingularityType::make(n, n - 1)) == SingularityType::make(n, n - 1));
}

TEST_CASE("Beauville pair has no singular points")
{
  auto p = fixtures::systems("beauville_55.pq");
  auto L = enumerate_singularities(p.sys1, p.sys2);
  CHECK(L.points.empty());
  for (const auto& row : L.free_orbits)
    for (auto c : row)
      CHECK(c == 1);
}

TEST_CASE("hyperelliptic pair: 36 nodes")
{
  auto p = fixtures::systems("z2_hyperelliptic.pq");
  auto L = enumerate_singularities(p.sys1, p.sys2);
  CHECK(L.points.size() == 36);
  CHECK(L.summary() == std::map<SingularityType, std::size_t>{{SingularityType::make(2, 1), 36}});
}

TEST_CASE("table fixture: two nodes")
{
  auto p = fixtures::systems("z2d4_c1sq6.pq");
  auto L = enumerate_singularities(p.sys1, p.sys2);
  CHECK(L.summary() == std::map<SingularityType, std::size_t>{{SingularityType::make(2, 1), 2}});
}

TEST_CASE("Z/5 mixed types")
{
  auto p = fixtures::systems("z5_mixed.pq");
  auto L = enumerate_singularities(p.sys1, p.sys2);
  CHECK(L.points.size() == 9);
  // every branch point is fixed by all of G; h = a^x rotates C1 by zeta and
  // equals (a^y)^k, so it rotates C2 by zeta^k
  for (const auto& q : L.points) {
    const int x = q.branch1 == 2 ? 3 : 1;
    const int y = q.branch2 == 0 ? 1 : 2;
    int k = 1;
    while ((k * y - x) % 5 != 0)
      ++k;
    CHECK(q.type == SingularityType::make(5, k));
  }
}

TEST_CASE("locus invariants on every fixture")
{
  for (const char* name : fixtures::kAll) {
    INFO(name);
    auto p = fixtures::systems(name);
    check_locus(p.sys1, p.sys2);
  }
}

TEST_CASE("systems over different groups are rejected")
{
  auto a = fixtures::systems("z2_hyperelliptic.pq");
  auto b = fixtures::systems("z5_mixed.pq");
  CHECK_THROWS_AS(enumerate_singularities(a.sys1, b.sys2), ValidationError);
}
