#include "pqs/singularities.hpp"

#include <numeric>

#include "pqs/error.hpp"

namespace pqs {

SingularityType SingularityType::make(int n, int a)
{
  if (n < 2 || a < 1 || a >= n || std::gcd(n, a) != 1)
    throw ValidationError("invalid singularity type 1/" + std::to_string(n) + "(1," +
                          std::to_string(a) + ")");
  return SingularityType{n, a};
}

SingularityType dual_type(SingularityType t)
{
  for (int b = 1; b < t.n; ++b)
    if ((static_cast<long long>(t.a) * b) % t.n == 1)
      return SingularityType{t.n, b};
  // n = 2 falls through only if a is not invertible, excluded by make()
  throw InconsistencyError("no inverse of a modulo n");
}

SingularityType normalized_key(SingularityType t)
{
  auto d = dual_type(t);
  return d < t ? d : t;
}

std::map<SingularityType, std::size_t> SingularLocus::summary() const
{
  std::map<SingularityType, std::size_t> out;
  for (const auto& p : points)
    ++out[normalized_key(p.type)];
  return out;
}

namespace {

// k in 1..n-1 with rot^(k * m / n) == h, where rot has order m and n | m.
int rotation_exponent(const FiniteGroup& G, ElementId rot, int m, int n, ElementId h)
{
  auto step = G.pow(rot, m / n);
  auto x = step;
  for (int k = 1; k < n; ++k, x = G.mul(x, step))
    if (x == h)
      return k;
  throw InconsistencyError("stabilizer generator is not a power of the rotation generator");
}

} // namespace

SingularLocus enumerate_singularities(const SphericalSystem& sys1, const SphericalSystem& sys2)
{
  if (sys1.group != sys2.group) {
    const auto& A = *sys1.group;
    const auto& B = *sys2.group;
    bool same = A.order() == B.order() && A.degree() == B.degree();
    for (std::size_t g = 0; same && g < B.generators().size(); ++g)
      same = A.contains(B.element(B.generators()[g]));
    if (!same)
      throw ValidationError("spherical systems live over different groups");
    // element ids are only comparable within one enumeration
    if (A.generators().size() != B.generators().size())
      throw ValidationError("spherical systems must share one group object");
    for (std::size_t g = 0; g < A.generators().size(); ++g)
      if (!(A.element(A.generators()[g]) == B.element(B.generators()[g])))
        throw ValidationError("spherical systems must share one group object");
  }
  const auto& G = *sys1.group;
  const auto order = G.order();

  SingularLocus locus;
  locus.branches1 = sys1.generators.size();
  locus.branches2 = sys2.generators.size();
  locus.free_orbits.assign(locus.branches1, std::vector<std::size_t>(locus.branches2, 0));

  for (std::size_t i = 0; i < locus.branches1; ++i) {
    const auto gi = sys1.generators[i];
    const int mi = sys1.signature[i];
    const auto K1 = cyclic_subgroup(G, gi);
    const auto reps1 = left_cosets(G, K1);
    const auto look1 = coset_lookup(G, K1, reps1);

    for (std::size_t j = 0; j < locus.branches2; ++j) {
      const auto gj = sys2.generators[j];
      const int mj = sys2.signature[j];
      const auto K2 = cyclic_subgroup(G, gj);
      const auto reps2 = left_cosets(G, K2);
      const auto look2 = coset_lookup(G, K2, reps2);

      const auto n2 = reps2.size();
      auto action = [&](ElementId g, std::size_t pt) {
        auto c1 = look1[G.mul(g, reps1[pt / n2])];
        auto c2 = look2[G.mul(g, reps2[pt % n2])];
        return c1 * n2 + c2;
      };

      for (const auto& orbit : orbit_partition(G, reps1.size() * n2, action)) {
        const auto s = reps1[orbit.front() / n2];
        const auto t = reps2[orbit.front() % n2];
        const auto H = intersect_subgroups(G, conjugate_subgroup(G, K1, s),
                                           conjugate_subgroup(G, K2, t));
        const auto n = static_cast<int>(H.order());
        if (orbit.size() * H.order() != order)
          throw InconsistencyError("orbit-stabilizer mismatch in cell (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
        if (n == 1) {
          ++locus.free_orbits[i][j];
          continue;
        }
        const auto rot1 = G.conjugate(s, gi);
        const auto rot2 = G.conjugate(t, gj);
        const auto h = G.pow(rot1, mi / n);
        if (!H.contains(h))
          throw InconsistencyError("rotation generator power outside the stabilizer");
        const int a = rotation_exponent(G, rot2, mj, n, h);

        SingularPoint p;
        p.type = SingularityType::make(n, a);
        p.branch1 = i;
        p.branch2 = j;
        p.coset1 = s;
        p.coset2 = t;
        p.generator = h;
        p.orbit_size = orbit.size();
        locus.points.push_back(p);
      }
    }
  }
  return locus;
}

} // namespace pqs
