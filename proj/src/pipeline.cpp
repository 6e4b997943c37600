#include "pqs/pipeline.hpp"

#include <sstream>

#include "pqs/error.hpp"
#include "pqs/hj.hpp"

namespace pqs {

ExitCode classify_current_exception()
{
  try {
    throw;
  } catch (const ParseError&) {
    return ExitCode::Parse;
  } catch (const ValidationError&) {
    return ExitCode::Validation;
  } catch (const InconsistencyError&) {
    return ExitCode::Inconsistency;
  } catch (...) {
    return ExitCode::Failure;
  }
}

namespace {

std::vector<SingularityCount> count_types(const std::map<SingularityType, std::size_t>& summary)
{
  std::vector<SingularityCount> out;
  for (const auto& [t, c] : summary)
    out.push_back({t, static_cast<long long>(c)});
  return out;
}

void check_row(const TableRowSummary& row)
{
  if (row.pg < 0 || row.q < 0 || row.chi != 1 - row.q + row.pg)
    throw InconsistencyError("row " + row.label + ": chi, q and pg are inconsistent");
}

} // namespace

TableRowSummary run_invariants(const InputDescription& desc, std::size_t order_cap)
{
  auto systems = build_systems(desc, order_cap);
  auto S = build_surface_model(systems.sys1, systems.sys2);
  auto inv = numerical_invariants(S);

  TableRowSummary row;
  row.label = desc.label;
  row.mode = "full";
  row.group_order = static_cast<long long>(S.group_order());
  row.g1 = S.genus1();
  row.g2 = S.genus2();
  row.singularities = count_types(S.locus().summary());
  row.e = inv.e;
  row.K2 = inv.K2;
  row.chi = inv.chi;
  row.q = inv.q;
  row.pg = inv.pg;
  check_row(row);
  return row;
}

TableRowSummary run_formula_row(const FormulaRow& in)
{
  if (in.order <= 0 || in.g1 < 2 || in.g2 < 2)
    throw ValidationError("row " + in.label + ": need |G| > 0 and genera >= 2");

  TableRowSummary row;
  row.label = in.label;
  row.mode = "formula";
  row.group_order = in.order;
  row.g1 = in.g1;
  row.g2 = in.g2;
  row.q = in.q;

  std::map<SingularityType, std::size_t> summary;
  row.e = make_rational((2 - 2 * in.g1) * (2 - 2 * in.g2), in.order);
  for (const auto& [t, count] : in.singularities) {
    summary[normalized_key(t)] += static_cast<std::size_t>(count);
    row.e += Rational(count) * (1 - make_rational(1, t.n) +
                                Rational(static_cast<long long>(string_length(t))));
  }
  row.singularities = count_types(summary);
  if (!is_integer(row.e))
    throw InconsistencyError("row " + in.label + ": Euler number " + to_string(row.e) +
                             " is not an integer");

  if (in.K2) {
    row.K2 = *in.K2;
    const Rational chi = (row.K2 + row.e) / 12;
    if (!is_integer(chi))
      throw InconsistencyError("row " + in.label + ": Noether gives chi = " + to_string(chi));
    row.chi = to_int64(chi);
    row.pg = row.chi - 1 + row.q;
    if (in.pg && *in.pg != row.pg)
      throw InconsistencyError("row " + in.label + ": pg from Noether is " +
                               std::to_string(row.pg) + ", row says " + std::to_string(*in.pg));
  } else if (in.pg) {
    row.pg = *in.pg;
    row.chi = 1 - row.q + row.pg;
    row.K2 = Rational(12 * row.chi) - row.e;
  } else {
    throw ValidationError("row " + in.label + ": formula mode needs Ksq or pg");
  }
  check_row(row);
  return row;
}

std::vector<TableEntry> run_table(const std::vector<TableInput>& inputs, std::size_t order_cap)
{
  std::vector<TableEntry> out;
  for (const auto& input : inputs) {
    TableEntry entry;
    entry.label = std::visit([](const auto& x) { return x.label; }, input);
    try {
      if (const auto* desc = std::get_if<InputDescription>(&input))
        entry.row = run_invariants(*desc, order_cap);
      else
        entry.row = run_formula_row(std::get<FormulaRow>(input));
    } catch (const std::exception& e) {
      entry.error = e.what();
      entry.code = classify_current_exception();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<TableInput> load_table_inputs(const std::string& path)
{
  const auto text = read_file(path);
  std::vector<TableInput> out;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".rows") {
    for (auto& row : parse_formula_rows(text))
      out.emplace_back(std::move(row));
  } else {
    auto desc = parse_description(text);
    if (desc.label.empty())
      desc.label = path;
    out.emplace_back(std::move(desc));
  }
  return out;
}

nlohmann::json rational_json(const Rational& x)
{
  if (is_integer(x))
    return to_int64(x);
  return to_string(x);
}

nlohmann::json to_json(const TableRowSummary& row)
{
  nlohmann::json sings = nlohmann::json::array();
  for (const auto& s : row.singularities)
    sings.push_back({{"n", s.type.n}, {"a", s.type.a}, {"count", s.count}});
  return {
      {"label", row.label},
      {"mode", row.mode},
      {"group_order", row.group_order},
      {"g1", row.g1},
      {"g2", row.g2},
      {"singularities", sings},
      {"e", rational_json(row.e)},
      {"Ksq", rational_json(row.K2)},
      {"chi", row.chi},
      {"q", row.q},
      {"pg", row.pg},
  };
}

nlohmann::json to_json(const std::vector<TableEntry>& table)
{
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& entry : table) {
    if (entry.row) {
      rows.push_back(to_json(*entry.row));
    } else {
      rows.push_back({{"label", entry.label},
                      {"error", entry.error},
                      {"exit_code", static_cast<int>(entry.code)}});
    }
  }
  return {{"schema_version", kSchemaVersion}, {"rows", rows}};
}

nlohmann::json to_json(const SingularLocus& locus)
{
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : locus.points) {
    auto key = normalized_key(p.type);
    points.push_back({{"n", p.type.n},
                      {"a", p.type.a},
                      {"a_normalized", key.a},
                      {"branch_pair", {p.branch1, p.branch2}},
                      {"orbit_size", p.orbit_size}});
  }
  return points;
}

nlohmann::json to_json(const CurveReport& r)
{
  nlohmann::json j = {
      {"curve", r.label},
      {"genus", r.genus},
      {"KmE_degree", rational_json(r.KmE_degree)},
      {"bound", r.bound},
      {"satisfied", r.satisfied},
  };
  if (r.tangent) {
    j["tangent_case"] = {
        {"KY_dot_Y", rational_json(r.tangent->KY_dot_Y)},
        {"Y_dot_E", rational_json(r.tangent->Y_dot_E)},
        {"Y_squared", rational_json(r.tangent->Y_squared)},
        {"string_excess", rational_json(r.tangent->string_excess)},
        {"strings_met", r.tangent->strings_met},
    };
  }
  return j;
}

std::string table_csv(const std::vector<TableEntry>& table)
{
  std::ostringstream out;
  out << "label,mode,group_order,g1,g2,singularities,e,Ksq,chi,q,pg,c1sq_plus_c2,error\n";
  for (const auto& entry : table) {
    out << entry.label << ",";
    if (!entry.row) {
      out << ",,,,,,,,,,,," << '"' << entry.error << '"' << "\n";
      continue;
    }
    const auto& r = *entry.row;
    std::string sings;
    for (const auto& s : r.singularities) {
      if (!sings.empty())
        sings += ";";
      sings += "1/" + std::to_string(s.type.n) + "(1 " + std::to_string(s.type.a) + ")x" +
               std::to_string(s.count);
    }
    out << r.mode << "," << r.group_order << "," << r.g1 << "," << r.g2 << "," << sings << ","
        << to_string(r.e) << "," << to_string(r.K2) << "," << r.chi << "," << r.q << "," << r.pg
        << "," << to_string(r.K2 + r.e) << ",\n";
  }
  return out.str();
}

} // namespace pqs
