#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "pqs/curve_bounds.hpp"
#include "pqs/input.hpp"
#include "pqs/surface.hpp"

namespace pqs {

constexpr int kSchemaVersion = 1;

/// Exit codes of the command-line tool.
enum class ExitCode : int
{
  Success = 0,
  Failure = 1,
  Parse = 2,
  Validation = 3,
  Inconsistency = 4,
};

/// Maps the exception currently being handled to an exit code.
ExitCode classify_current_exception();

struct SingularityCount
{
  SingularityType type; // normalized
  long long count = 0;

  friend bool operator==(const SingularityCount&, const SingularityCount&) = default;
};

struct TableRowSummary
{
  std::string label;
  std::string mode; // "full" or "formula"
  long long group_order = 0;
  long long g1 = 0;
  long long g2 = 0;
  std::vector<SingularityCount> singularities;
  Rational e;
  Rational K2;
  long long chi = 0;
  long long q = 0;
  long long pg = 0;
};

/// systems -> singularities -> model -> invariants
TableRowSummary run_invariants(const InputDescription& desc,
                               std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// e from the stratified count; chi from Ksq (Noether) or from pg and q.
TableRowSummary run_formula_row(const FormulaRow& row);

using TableInput = std::variant<InputDescription, FormulaRow>;

struct TableEntry
{
  std::string label;
  std::optional<TableRowSummary> row;
  std::string error; // empty on success
  ExitCode code = ExitCode::Success;
};

std::vector<TableEntry> run_table(const std::vector<TableInput>& inputs,
                                  std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Loads a .pq file (one description) or a .rows file (many formula rows).
std::vector<TableInput> load_table_inputs(const std::string& path);

nlohmann::json to_json(const TableRowSummary& row);
nlohmann::json to_json(const std::vector<TableEntry>& table);
nlohmann::json to_json(const SingularLocus& locus);
nlohmann::json to_json(const CurveReport& report);
nlohmann::json rational_json(const Rational& x);

std::string table_csv(const std::vector<TableEntry>& table);

} // namespace pqs
