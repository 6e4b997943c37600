#include <random>

#include "doctest.h"
#include "pqs/error.hpp"
#include "pqs/group.hpp"

using namespace pqs;

namespace {

FiniteGroup make(std::size_t degree, std::initializer_list<const char*> cycles)
{
  std::vector<Permutation> gens;
  for (const char* c : cycles)
    gens.push_back(Permutation::parse(c, degree));
  return group_from_generators(gens);
}

ElementId id(const FiniteGroup& G, const char* cycles)
{
  return G.index_of(Permutation::parse(cycles, G.degree()));
}

// (Z/5)^2 on 10 points; (x, y) -> a^x b^y
struct Z5sq
{
  FiniteGroup G = make(10, {"(0 1 2 3 4)", "(5 6 7 8 9)"});
  ElementId a = id(G, "(0 1 2 3 4)");
  ElementId b = id(G, "(5 6 7 8 9)");
  ElementId elt(int x, int y) const { return G.mul(G.pow(a, x), G.pow(b, y)); }
};

void check_group_axioms(const FiniteGroup& G)
{
  std::mt19937 rng(12345);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(G.order() - 1));
  for (int k = 0; k < 200; ++k) {
    auto x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
  }
  for (ElementId g = 0; g < G.order(); ++g) {
    CHECK(G.mul(g, G.inv(g)) == FiniteGroup::identity());
    CHECK(G.mul(G.inv(g), g) == FiniteGroup::identity());
  }
}

} // namespace

TEST_CASE("permutation parsing and printing")
{
  auto p = Permutation::parse("(0 1 2)(3 4)", 5);
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(4) == 3);
  CHECK(p.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse("()", 3).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::parse("(0 1", 3), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("(0 5)", 3), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("(0 1)(1 2)", 3), ValidationError);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{0, 0}), ValidationError);
}

TEST_CASE("composition applies the right factor first")
{
  auto p = Permutation::parse("(0 1)", 3);
  auto q = Permutation::parse("(1 2)", 3);
  auto pq = p * q;
  CHECK(pq(1) == p(q(1)));
  CHECK(pq == Permutation::parse("(0 1 2)", 3));
  CHECK((p * p).is_identity());
}

TEST_CASE("group_from_generators")
{
  CHECK(make(2, {"(0 1)"}).order() == 2);
  CHECK(make(3, {"(0 1)", "(0 1 2)"}).order() == 6);
  auto psl = make(7, {"(0 1 2 3 4 5 6)", "(0 1)(2 4)"});
  CHECK(psl.order() == 168);
  check_group_axioms(psl);
  check_group_axioms(make(6, {"(0 1)", "(2 3 4 5)", "(3 5)"}));
  check_group_axioms(Z5sq{}.G);

  std::vector<Permutation> mixed = {Permutation::parse("(0 1)", 2),
                                    Permutation::parse("(0 1 2)", 3)};
  CHECK_THROWS_AS(group_from_generators(mixed), ValidationError);
  std::vector<Permutation> s5 = {Permutation::parse("(0 1)", 5),
                                 Permutation::parse("(0 1 2 3 4)", 5)};
  CHECK_THROWS_AS(group_from_generators(s5, 100), ValidationError);
  CHECK(group_from_generators(s5, 120).order() == 120);
}

TEST_CASE("element ordering is breadth-first and deterministic")
{
  auto G1 = make(3, {"(0 1)", "(0 1 2)"});
  auto G2 = make(3, {"(0 1)", "(0 1 2)"});
  REQUIRE(G1.order() == G2.order());
  CHECK(G1.element(0).is_identity());
  CHECK(G1.element(1) == Permutation::parse("(0 1)", 3));
  CHECK(G1.element(2) == Permutation::parse("(0 1 2)", 3));
  for (ElementId g = 0; g < G1.order(); ++g)
    CHECK(G1.element(g) == G2.element(g));
}

TEST_CASE("element_order")
{
  auto G = make(5, {"(0 1 2 3 4)", "(0 1)"});
  CHECK(element_order(G, FiniteGroup::identity()) == 1);
  CHECK(element_order(G, id(G, "(0 1)")) == 2);
  CHECK(element_order(G, id(G, "(0 1 2 3 4)")) == 5);
  CHECK(element_order(G, id(G, "(0 1 2)(3 4)")) == 6);
}

TEST_CASE("cyclic_subgroup")
{
  auto G = make(4, {"(0 1 2 3)", "(0 1)"});
  CHECK(cyclic_subgroup(G, FiniteGroup::identity()).order() == 1);
  CHECK(cyclic_subgroup(G, id(G, "(0 1 2 3)")).order() == 4);

  Z5sq z;
  auto line = cyclic_subgroup(z.G, z.elt(1, 2));
  CHECK(line.order() == 5);
  for (int k = 0; k < 5; ++k)
    CHECK(line.contains(z.elt(k, (2 * k) % 5)));
}

TEST_CASE("conjugate_subgroup")
{
  auto G = make(3, {"(0 1)", "(0 1 2)"});
  auto H = cyclic_subgroup(G, id(G, "(0 1)"));
  CHECK(conjugate_subgroup(G, H, FiniteGroup::identity()) == H);
  auto K = conjugate_subgroup(G, H, id(G, "(1 2)"));
  CHECK(K == cyclic_subgroup(G, id(G, "(0 2)")));

  Z5sq z;
  auto L = cyclic_subgroup(z.G, z.elt(1, 3));
  for (ElementId t = 0; t < z.G.order(); ++t)
    CHECK(conjugate_subgroup(z.G, L, t) == L);

  // order is preserved everywhere in S4
  auto S4 = make(4, {"(0 1)", "(0 1 2 3)"});
  for (ElementId g = 0; g < S4.order(); ++g) {
    auto C = cyclic_subgroup(S4, g);
    for (ElementId t = 0; t < S4.order(); ++t)
      CHECK(conjugate_subgroup(S4, C, t).order() == C.order());
  }
}

TEST_CASE("intersect_subgroups")
{
  Z5sq z;
  auto L1 = cyclic_subgroup(z.G, z.elt(1, 0));
  auto L2 = cyclic_subgroup(z.G, z.elt(1, 2));
  CHECK(intersect_subgroups(z.G, L1, L1) == L1);
  CHECK(intersect_subgroups(z.G, L1, L2).order() == 1);

  auto G = make(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  auto H1 = cyclic_subgroup(G, id(G, "(0 1)(2 3)"));
  std::vector<ElementId> gens = {id(G, "(0 1)(2 3)"), id(G, "(0 2)(1 3)")};
  auto H2 = generated_subgroup(G, gens);
  CHECK(H2.order() == 4);
  CHECK(intersect_subgroups(G, H1, H2).order() == 2);

  auto S4 = make(4, {"(0 1)", "(0 1 2 3)"});
  for (ElementId g = 0; g < S4.order(); g += 3)
    for (ElementId h = 0; h < S4.order(); h += 5) {
      auto A = cyclic_subgroup(S4, g), B = cyclic_subgroup(S4, h);
      auto I = intersect_subgroups(S4, A, B);
      CHECK(A.order() % I.order() == 0);
      CHECK(B.order() % I.order() == 0);
    }
}

TEST_CASE("left_cosets")
{
  auto G = make(3, {"(0 1)", "(0 1 2)"});
  std::vector<ElementId> all(G.order());
  for (ElementId g = 0; g < G.order(); ++g)
    all[g] = g;
  CHECK(left_cosets(G, generated_subgroup(G, all)).size() == 1);
  CHECK(left_cosets(G, cyclic_subgroup(G, 0)).size() == 6);
  auto H = cyclic_subgroup(G, id(G, "(0 1)"));
  auto reps = left_cosets(G, H);
  CHECK(reps.size() == 3);
  CHECK(reps.front() == 0);
  auto lookup = coset_lookup(G, H, reps);
  for (ElementId g = 0; g < G.order(); ++g)
    CHECK(H.contains(G.mul(G.inv(reps[lookup[g]]), g)));

  auto psl = make(7, {"(0 1 2 3 4 5 6)", "(0 1)(2 4)"});
  for (ElementId g = 0; g < psl.order(); g += 7) {
    auto C = cyclic_subgroup(psl, g);
    CHECK(left_cosets(psl, C).size() * C.order() == psl.order());
  }
}

TEST_CASE("orbit_partition")
{
  auto T = make(1, {"()"});
  auto singletons = orbit_partition(T, 4, [](ElementId, std::size_t p) { return p; });
  CHECK(singletons.size() == 4);

  auto G = make(3, {"(0 1)", "(0 1 2)"});
  auto regular = orbit_partition(G, G.order(), [&](ElementId g, std::size_t p) {
    return static_cast<std::size_t>(G.mul(g, static_cast<ElementId>(p)));
  });
  CHECK(regular.size() == 1);

  // free diagonal action of (Z/5)^2 on pairs of cosets of two distinct lines
  Z5sq z;
  auto L1 = cyclic_subgroup(z.G, z.elt(1, 0));
  auto L2 = cyclic_subgroup(z.G, z.elt(0, 1));
  auto r1 = left_cosets(z.G, L1), r2 = left_cosets(z.G, L2);
  auto c1 = coset_lookup(z.G, L1, r1), c2 = coset_lookup(z.G, L2, r2);
  auto orbits = orbit_partition(z.G, 25, [&](ElementId g, std::size_t p) {
    std::size_t s = p / 5, t = p % 5;
    return c1[z.G.mul(g, r1[s])] * 5 + c2[z.G.mul(g, r2[t])];
  });
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 25);

  CHECK_THROWS_AS(orbit_partition(G, 3, [](ElementId g, std::size_t p) { return (p + g) % 3; }),
                  ValidationError);
}
