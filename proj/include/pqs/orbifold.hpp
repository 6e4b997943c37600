#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqs/group.hpp"

namespace pqs {

/*
 * A branched G-cover C -> C/G given by a generating vector
 *
 *   a_1, b_1, ..., a_g', b_g', g_1, ..., g_r   with   prod [a_k, b_k] * g_1 ... g_r = 1,
 *
 * where g' is the genus of C/G and the g_i are the local monodromies
 * around the r branch points. Only g' = 0 (spherical systems proper)
 * shows up in the c_1^2 = 6 families, but the genus bookkeeping is general.
 *
 * Rotation convention: the distinguished generator t g_i t^-1 of the
 * stabilizer of the point over branch i labelled by the coset t<g_i>
 * acts on the tangent line at that point by exp(2 pi i / m_i).
 */
struct SphericalSystem
{
  std::shared_ptr<const FiniteGroup> group;
  int base_genus = 0;
  std::vector<std::pair<ElementId, ElementId>> hyperbolic; // size base_genus
  std::vector<ElementId> generators;                       // g_1..g_r
  std::vector<int> signature;                              // m_1..m_r
};

enum class Violation
{
  HyperbolicCount,
  SignatureLength,
  TrivialGenerator,
  OrderMismatch,
  ProductNotIdentity,
  NotGenerating,
};

struct ValidationReport
{
  std::optional<Violation> violation;
  std::string message;

  bool ok() const { return !violation.has_value(); }
};

/// Checks the relation, the orders and generation; reports the first failure.
ValidationReport validate_system(const SphericalSystem& sys);

/// Builds a system with the signature read off the generator orders, then
/// validates it. Throws ValidationError with the report message.
SphericalSystem make_system(std::shared_ptr<const FiniteGroup> group, int base_genus,
                            std::vector<std::pair<ElementId, ElementId>> hyperbolic,
                            std::vector<ElementId> generators);

/// 2g(C) - 2 = |G| (2g' - 2 + sum (1 - 1/m_i)).
long long rh_euler_char(const SphericalSystem& sys); // returns 2g(C) - 2
int rh_genus(const SphericalSystem& sys);

/// Throws ValidationError unless g(C) >= 2.
void require_hyperbolic_genus(const SphericalSystem& sys, const std::string& which);

struct CoverPoint
{
  std::size_t branch_index = 0;
  ElementId coset_rep = 0;
  Subgroup stabilizer;
  ElementId rotation_generator = 0;
};

/// Points of C over branch point i (0-based), one per left coset of <g_i>.
std::vector<CoverPoint> branch_fiber(const SphericalSystem& sys, std::size_t i);

struct QuotientData
{
  int base_genus = 0;
  std::size_t branch_count = 0;
};

QuotientData quotient_data(const SphericalSystem& sys);

} // namespace pqs
