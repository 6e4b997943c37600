// pqsurf: invariants and checks for product-quotient surfaces.

#include <iomanip>
#include <iostream>

#include "CLI11.hpp"

#include "pqs/curve_bounds.hpp"
#include "pqs/error.hpp"
#include "pqs/hj.hpp"
#include "pqs/input.hpp"
#include "pqs/local_differentials.hpp"
#include "pqs/pipeline.hpp"
#include "pqs/surface.hpp"

using namespace pqs;

namespace {

struct Options
{
  std::size_t max_group_order = FiniteGroup::kDefaultOrderCap;
  bool json = false;
  bool csv = false;
  std::string file;
  std::vector<std::string> files;
  int n = 0;
  int a = 0;
  int m = 1;
  std::string section;
  long long ksq = 0;
  long long chi = 0;
  int points = 0;
  int m_max = 100;
};

std::string type_string(SingularityType t)
{
  return "1/" + std::to_string(t.n) + "(1," + std::to_string(t.a) + ")";
}

SurfaceModel load_model(const Options& opt, InputDescription* desc_out = nullptr)
{
  auto desc = parse_description(read_file(opt.file));
  auto systems = build_systems(desc, opt.max_group_order);
  if (desc_out)
    *desc_out = desc;
  return build_surface_model(systems.sys1, systems.sys2);
}

int cmd_invariants(const Options& opt)
{
  auto desc = parse_description(read_file(opt.file));
  if (desc.label.empty())
    desc.label = opt.file;
  auto row = run_invariants(desc, opt.max_group_order);
  if (opt.json) {
    auto j = to_json(row);
    j["schema_version"] = kSchemaVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "surface        " << row.label << "\n"
            << "|G|            " << row.group_order << "\n"
            << "g(C1), g(C2)   " << row.g1 << ", " << row.g2 << "\n"
            << "singularities  ";
  if (row.singularities.empty())
    std::cout << "none";
  for (std::size_t k = 0; k < row.singularities.size(); ++k)
    std::cout << (k ? ", " : "") << row.singularities[k].count << " x "
              << type_string(row.singularities[k].type);
  std::cout << "\n"
            << "e = c2         " << to_string(row.e) << "\n"
            << "K^2 = c1^2     " << to_string(row.K2) << "\n"
            << "chi            " << row.chi << "\n"
            << "q              " << row.q << "\n"
            << "p_g            " << row.pg << "\n";
  return 0;
}

int cmd_table(const Options& opt)
{
  std::vector<TableInput> inputs;
  for (const auto& f : opt.files)
    for (auto& in : load_table_inputs(f))
      inputs.push_back(std::move(in));
  auto table = run_table(inputs, opt.max_group_order);

  if (opt.json) {
    std::cout << to_json(table).dump(2) << "\n";
  } else if (opt.csv) {
    std::cout << table_csv(table);
  } else {
    std::cout << std::left << std::setw(22) << "label" << std::setw(7) << "|G|" << std::setw(5)
              << "g1" << std::setw(5) << "g2" << std::setw(6) << "e" << std::setw(6) << "K^2"
              << std::setw(5) << "chi" << std::setw(4) << "q" << std::setw(4) << "pg"
              << "singularities\n";
    for (const auto& entry : table) {
      std::cout << std::setw(22) << entry.label;
      if (!entry.row) {
        std::cout << "error: " << entry.error << "\n";
        continue;
      }
      const auto& r = *entry.row;
      std::string sings;
      for (const auto& s : r.singularities)
        sings += (sings.empty() ? "" : ", ") + std::to_string(s.count) + "x" + type_string(s.type);
      std::cout << std::setw(7) << r.group_order << std::setw(5) << r.g1 << std::setw(5) << r.g2
                << std::setw(6) << to_string(r.e) << std::setw(6) << to_string(r.K2)
                << std::setw(5) << r.chi << std::setw(4) << r.q << std::setw(4) << r.pg
                << (sings.empty() ? "none" : sings) << "\n";
    }
  }
  for (const auto& entry : table)
    if (!entry.row)
      return static_cast<int>(entry.code);
  return 0;
}

int cmd_singularities(const Options& opt)
{
  auto desc = parse_description(read_file(opt.file));
  auto systems = build_systems(desc, opt.max_group_order);
  auto locus = enumerate_singularities(systems.sys1, systems.sys2);
  if (opt.json) {
    std::cout << nlohmann::json{{"schema_version", kSchemaVersion}, {"points", to_json(locus)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << locus.points.size() << " singular point(s)\n";
  for (const auto& p : locus.points)
    std::cout << "  " << type_string(p.type) << "  normalized " << type_string(normalized_key(p.type))
              << "  branches (" << p.branch1 + 1 << ", " << p.branch2 + 1 << ")  orbit size "
              << p.orbit_size << "\n";
  return 0;
}

int cmd_hj(const Options& opt)
{
  auto t = SingularityType::make(opt.n, opt.a);
  auto s = make_hj_string(t);
  auto dual = dual_type(t);
  std::cout << "type        " << type_string(t) << "\n"
            << "expansion   [";
  for (std::size_t k = 0; k < s.b.size(); ++k)
    std::cout << (k ? ", " : "") << s.b[k];
  std::cout << "]\n"
            << "dual        " << type_string(dual) << "\n"
            << "matrix\n";
  for (const auto& row : string_intersection_matrix(s)) {
    std::cout << "   ";
    for (auto x : row)
      std::cout << std::setw(4) << x;
    std::cout << "\n";
  }
  std::cout << "determinant " << string_determinant(s.b) << "\n";
  return 0;
}

int cmd_bounds(const Options& opt)
{
  InputDescription desc;
  auto S = load_model(opt, &desc);
  auto reports = degree_bound_reports(S);
  auto centrals = check_central_irrationality(S, desc.in_scope_c1sq6);
  std::vector<std::pair<BasisIndex, GenusCrosscheck>> checks;
  for (BasisIndex c = 0; c < S.rank(); ++c) {
    auto kind = S.basis()[c].kind;
    if (kind == CurveKind::Central1 || kind == CurveKind::Central2)
      checks.emplace_back(c, central_component_genus_crosscheck(S, c));
  }

  bool all_ok = true;
  for (const auto& r : reports)
    all_ok = all_ok && r.satisfied;
  if (centrals.asserted)
    all_ok = all_ok && centrals.holds;

  if (opt.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports)
      rows.push_back(to_json(r));
    nlohmann::json cc = {{"asserted", centrals.asserted}, {"holds", centrals.holds}};
    std::cout << nlohmann::json{{"schema_version", kSchemaVersion},
                                {"curves", rows},
                                {"central_irrational", cc}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << std::left << std::setw(8) << "curve" << std::setw(7) << "genus" << std::setw(12)
              << "(K-E).C" << std::setw(10) << "2(2g-2)" << std::setw(5) << "ok"
              << "Y^2 / Y.E / r - sum a/n\n";
    for (const auto& r : reports) {
      std::cout << std::setw(8) << r.label << std::setw(7) << r.genus << std::setw(12)
                << to_string(r.KmE_degree) << std::setw(10) << r.bound << std::setw(5)
                << (r.satisfied ? "yes" : "NO");
      if (r.tangent)
        std::cout << to_string(r.tangent->Y_squared) << " / " << to_string(r.tangent->Y_dot_E)
                  << " / " << to_string(r.tangent->string_excess);
      std::cout << "\n";
    }
    for (const auto& [c, chk] : checks)
      std::cout << "genus of " << S.basis()[c].label << ": adjunction " << chk.adjunction
                << ", Riemann-Hurwitz " << chk.riemann_hurwitz << "\n";
    if (centrals.asserted)
      std::cout << "central components irrational: " << (centrals.holds ? "yes" : "NO") << "\n";
    else
      std::cout << "central components irrational: not asserted ("
                << centrals.rational_centrals.size() << " rational)\n";
  }
  return all_ok ? 0 : static_cast<int>(ExitCode::Inconsistency);
}

int cmd_local_check(const Options& opt)
{
  auto s = parse_section(opt.section, opt.m);
  auto d = gamma_pullback(s);
  auto order = vanishing_order(s);
  std::cout << "invariant        " << (invariance_check(s) ? "yes" : "no") << "\n"
            << "pullback         " << to_string(d) << "\n"
            << "holomorphic      " << (is_holomorphic(d) ? "yes" : "no") << "\n"
            << "vanishing order  " << (order ? to_string(*order) : std::string("inf"))
            << " (need " << opt.m << ")\n";
  return 0;
}

int cmd_bigness(const Options& opt)
{
  auto cert = bigness_certificate(Rational(opt.ksq), opt.chi, opt.points, opt.m_max);
  if (!cert) {
    std::cout << "no certificate for m <= " << opt.m_max << "\n";
    return 1;
  }
  std::cout << "m* = " << cert->m << ", lower bound h0(m(K-E)) >= " << to_string(cert->value)
            << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Invariants of product-quotient surfaces"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-group-order", opt.max_group_order, "Cap on |G|");

  auto* inv = app.add_subcommand("invariants", "Numerical invariants of one surface");
  inv->add_option("file", opt.file)->required();
  inv->add_flag("--json", opt.json);

  auto* table = app.add_subcommand("table", "Invariants of many surfaces (.pq or .rows files)");
  table->add_option("files", opt.files);
  table->add_flag("--json", opt.json);
  table->add_flag("--csv", opt.csv);

  auto* sing = app.add_subcommand("singularities", "Singular points of the quotient model");
  sing->add_option("file", opt.file)->required();
  sing->add_flag("--json", opt.json);

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung string of 1/n(1,a)");
  hj->add_option("n", opt.n)->required();
  hj->add_option("a", opt.a)->required();

  auto* bounds = app.add_subcommand("bounds", "Degree bound (K-E).C <= 2(2g-2) per basis curve");
  bounds->add_option("file", opt.file)->required();
  bounds->add_flag("--json", opt.json);

  auto* local = app.add_subcommand("local-check", "Pull back a section through the node chart");
  local->add_option("--m", opt.m)->required();
  local->add_option("--section", opt.section)->required();

  auto* big = app.add_subcommand("bigness", "Certificate that K-E is big");
  big->add_option("--ksq", opt.ksq)->required();
  big->add_option("--chi", opt.chi)->required();
  big->add_option("--points", opt.points)->required();
  big->add_option("--m-max", opt.m_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::Parse);
  }

  try {
    if (*inv)
      return cmd_invariants(opt);
    if (*table)
      return cmd_table(opt);
    if (*sing)
      return cmd_singularities(opt);
    if (*hj)
      return cmd_hj(opt);
    if (*bounds)
      return cmd_bounds(opt);
    if (*local)
      return cmd_local_check(opt);
    if (*big)
      return cmd_bigness(opt);
  } catch (const std::exception& e) {
    std::cerr << "pqsurf: " << e.what() << "\n";
    return static_cast<int>(classify_current_exception());
  }
  return 0;
}
