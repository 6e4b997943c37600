#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pqs {

/*
 * Finite groups carried as permutation groups.
 *
 * Composition convention: (p * q)(x) = p(q(x)), i.e. q acts first.
 * Every group is enumerated breadth-first from the identity with the
 * generator order fixed, so element ids are reproducible across runs.
 */

using ElementId = std::uint32_t;

class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  // Disjoint-cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash
{
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Member ids kept sorted; the identity (id 0) is always present.
struct Subgroup
{
  std::vector<ElementId> members;

  std::size_t order() const { return members.size(); }
  bool contains(ElementId g) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

class FiniteGroup
{
public:
  static constexpr std::size_t kDefaultOrderCap = 10000;

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  static constexpr ElementId identity() { return 0; }

  const Permutation& element(ElementId g) const { return elements_[g]; }
  const std::vector<ElementId>& generators() const { return generators_; }

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, long long k) const;
  ElementId conjugate(ElementId t, ElementId g) const; // t g t^-1

  // Throws ValidationError if p is not an element.
  ElementId index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const;

private:
  friend FiniteGroup group_from_generators(std::span<const Permutation>,
                                           std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> table_; // order^2 product table, empty if too large
};

FiniteGroup group_from_generators(std::span<const Permutation> gens,
                                  std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

std::size_t element_order(const FiniteGroup& G, ElementId g);

Subgroup cyclic_subgroup(const FiniteGroup& G, ElementId g);

/// Smallest subgroup containing gens.
Subgroup generated_subgroup(const FiniteGroup& G, std::span<const ElementId> gens);

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, ElementId t);

Subgroup intersect_subgroups(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2);

/// One representative per left coset gH, the least element id of the coset,
/// listed in increasing order.
std::vector<ElementId> left_cosets(const FiniteGroup& G, const Subgroup& H);

/// Maps every element g to the position of its coset gH in left_cosets(G, H).
std::vector<std::size_t> coset_lookup(const FiniteGroup& G, const Subgroup& H,
                                      std::span<const ElementId> reps);

using GroupAction = std::function<std::size_t(ElementId, std::size_t)>;

/// Orbits of an action on {0..npoints-1}, each listed in discovery order,
/// orbits ordered by their least point. The action axioms are checked on
/// every generator pair before enumeration.
std::vector<std::vector<std::size_t>> orbit_partition(const FiniteGroup& G,
                                                      std::size_t npoints,
                                                      const GroupAction& action);

} // namespace pqs
