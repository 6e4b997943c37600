#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqs/orbifold.hpp"
#include "pqs/rational.hpp"
#include "pqs/singularities.hpp"

namespace pqs {

/*
 * Surface description files (.pq):
 *
 *   # comment
 *   label = beauville_55
 *
 *   [group]
 *   degree = 10
 *   a = (0 1 2 3 4)
 *   b = (5 6 7 8 9)
 *
 *   [system1]
 *   base_genus = 0
 *   generators = a, b, a^4*b^4
 *   signature = 5, 5, 5          # optional, checked when present
 *
 *   [system2]
 *   base_genus = 1
 *   hyperbolic = a, b            # 2 * base_genus words
 *   generators = ...
 *
 *   [flags]
 *   in_scope_c1sq6 = false
 *
 * Words are products of named generators: "a*b^-1*a^3"; "1" is the identity.
 */

struct GroupDescription
{
  std::size_t degree = 0;
  std::vector<std::pair<std::string, std::string>> generators; // name -> cycles

  friend bool operator==(const GroupDescription&, const GroupDescription&) = default;
};

struct SystemDescription
{
  int base_genus = 0;
  std::vector<std::string> hyperbolic;
  std::vector<std::string> generators;
  std::optional<std::vector<int>> signature;

  friend bool operator==(const SystemDescription&, const SystemDescription&) = default;
};

struct InputDescription
{
  std::string label;
  GroupDescription group;
  SystemDescription system1;
  SystemDescription system2;
  bool in_scope_c1sq6 = false;

  friend bool operator==(const InputDescription&, const InputDescription&) = default;
};

struct SystemPair
{
  std::shared_ptr<const FiniteGroup> group;
  SphericalSystem sys1;
  SphericalSystem sys2;
};

/// Syntax only; throws ParseError with the offending line.
InputDescription parse_description(std::string_view text);

/// Group, words and generating vectors; throws ValidationError.
SystemPair build_systems(const InputDescription& desc,
                         std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// parse_description followed by build_systems as a semantic check.
InputDescription parse_input(std::string_view text,
                             std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

std::string serialize(const InputDescription& desc);

/// Evaluates a generator word in G.
ElementId evaluate_word(const FiniteGroup& G,
                        const std::vector<std::pair<std::string, ElementId>>& names,
                        std::string_view word);

/*
 * Formula-mode rows (.rows): one surface per line, whitespace-separated
 * key=value tokens,
 *
 *   label=Z2xD4 order=16 g1=3 g2=7 sing=1/2(1,1)x2 pg=0
 *
 * with optional q= (default 0) and Ksq=. sing= is a comma list of
 * "1/n(1,a)xcount" or "none".
 */
struct FormulaRow
{
  std::string label;
  long long order = 0;
  long long g1 = 0;
  long long g2 = 0;
  std::vector<std::pair<SingularityType, long long>> singularities;
  long long q = 0;
  std::optional<long long> pg;
  std::optional<Rational> K2;

  friend bool operator==(const FormulaRow&, const FormulaRow&) = default;
};

std::vector<FormulaRow> parse_formula_rows(std::string_view text);

std::string serialize(const FormulaRow& row);

/// "1/n(1,a)"
SingularityType parse_singularity_type(std::string_view text);

std::string read_file(const std::string& path);

} // namespace pqs
