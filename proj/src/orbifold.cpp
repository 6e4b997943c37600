#include "pqs/orbifold.hpp"

#include "pqs/error.hpp"

namespace pqs {

ValidationReport validate_system(const SphericalSystem& sys)
{
  const auto& G = *sys.group;
  auto fail = [](Violation v, std::string msg) { return ValidationReport{v, std::move(msg)}; };

  if (sys.base_genus < 0 || sys.hyperbolic.size() != static_cast<std::size_t>(sys.base_genus))
    return fail(Violation::HyperbolicCount,
                "expected " + std::to_string(sys.base_genus) + " hyperbolic pairs, got " +
                    std::to_string(sys.hyperbolic.size()));
  if (sys.signature.size() != sys.generators.size())
    return fail(Violation::SignatureLength, "signature has " +
                                                std::to_string(sys.signature.size()) +
                                                " entries for " +
                                                std::to_string(sys.generators.size()) +
                                                " generators");

  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    if (sys.signature[i] < 2 || sys.generators[i] == FiniteGroup::identity())
      return fail(Violation::TrivialGenerator,
                  "generator " + std::to_string(i + 1) + " has order < 2");
    auto ord = element_order(G, sys.generators[i]);
    if (ord != static_cast<std::size_t>(sys.signature[i]))
      return fail(Violation::OrderMismatch, "generator " + std::to_string(i + 1) +
                                                " has order " + std::to_string(ord) +
                                                ", signature says " +
                                                std::to_string(sys.signature[i]));
  }

  ElementId prod = FiniteGroup::identity();
  for (auto [a, b] : sys.hyperbolic) {
    auto comm = G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
    prod = G.mul(prod, comm);
  }
  for (auto g : sys.generators)
    prod = G.mul(prod, g);
  if (prod != FiniteGroup::identity())
    return fail(Violation::ProductNotIdentity,
                "product of the generating vector is " + G.element(prod).to_cycle_string() +
                    ", not the identity");

  std::vector<ElementId> all;
  for (auto [a, b] : sys.hyperbolic) {
    all.push_back(a);
    all.push_back(b);
  }
  all.insert(all.end(), sys.generators.begin(), sys.generators.end());
  auto H = generated_subgroup(G, all);
  if (H.order() != G.order())
    return fail(Violation::NotGenerating, "generating vector spans a subgroup of order " +
                                              std::to_string(H.order()) + " in a group of order " +
                                              std::to_string(G.order()));
  return {};
}

SphericalSystem make_system(std::shared_ptr<const FiniteGroup> group, int base_genus,
                            std::vector<std::pair<ElementId, ElementId>> hyperbolic,
                            std::vector<ElementId> generators)
{
  SphericalSystem sys;
  sys.group = std::move(group);
  sys.base_genus = base_genus;
  sys.hyperbolic = std::move(hyperbolic);
  sys.generators = std::move(generators);
  for (auto g : sys.generators)
    sys.signature.push_back(static_cast<int>(element_order(*sys.group, g)));
  auto report = validate_system(sys);
  if (!report.ok())
    throw ValidationError(report.message);
  return sys;
}

long long rh_euler_char(const SphericalSystem& sys)
{
  const auto order = static_cast<long long>(sys.group->order());
  long long total = order * (2LL * sys.base_genus - 2);
  for (int m : sys.signature) {
    if (m <= 0 || order % m != 0)
      throw ValidationError("branch order " + std::to_string(m) + " does not divide |G| = " +
                            std::to_string(order));
    total += order - order / m;
  }
  return total;
}

int rh_genus(const SphericalSystem& sys)
{
  auto chi = rh_euler_char(sys);
  if (chi % 2 != 0 || chi < -2)
    throw InconsistencyError("Riemann-Hurwitz gives 2g - 2 = " + std::to_string(chi) +
                             ", not a genus");
  return static_cast<int>(chi / 2 + 1);
}

void require_hyperbolic_genus(const SphericalSystem& sys, const std::string& which)
{
  auto g = rh_genus(sys);
  if (g < 2)
    throw ValidationError(which + " has genus " + std::to_string(g) + "; genus >= 2 is required");
}

std::vector<CoverPoint> branch_fiber(const SphericalSystem& sys, std::size_t i)
{
  if (i >= sys.generators.size())
    throw ValidationError("branch index " + std::to_string(i) + " out of range");
  const auto& G = *sys.group;
  auto gi = sys.generators[i];
  auto K = cyclic_subgroup(G, gi);
  std::vector<CoverPoint> out;
  for (auto t : left_cosets(G, K)) {
    CoverPoint p;
    p.branch_index = i;
    p.coset_rep = t;
    p.stabilizer = conjugate_subgroup(G, K, t);
    p.rotation_generator = G.conjugate(t, gi);
    out.push_back(std::move(p));
  }
  return out;
}

QuotientData quotient_data(const SphericalSystem& sys)
{
  return {sys.base_genus, sys.generators.size()};
}

} // namespace pqs
