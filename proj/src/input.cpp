#include "pqs/input.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pqs/error.hpp"

namespace pqs {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Commas inside parentheses do not separate items.
std::vector<std::string> split_list(std::string_view s)
{
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    const char c = k < s.size() ? s[k] : ',';
    depth += c == '(' ? 1 : c == ')' ? -1 : 0;
    if (c == ',' && depth <= 0) {
      auto item = trim(s.substr(start, k - start));
      if (!item.empty())
        out.emplace_back(item);
      start = k + 1;
    }
  }
  return out;
}

bool balanced_cycles(std::string_view s)
{
  bool open = false;
  for (char c : s) {
    if (c == '(') {
      if (open)
        return false;
      open = true;
    } else if (c == ')') {
      if (!open)
        return false;
      open = false;
    } else if (!std::isdigit(static_cast<unsigned char>(c)) &&
               !std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return !open;
}

bool is_identifier(std::string_view s)
{
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

template <typename Int>
std::optional<Int> to_integer(std::string_view s)
{
  s = trim(s);
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

enum class Section
{
  Top,
  Group,
  System1,
  System2,
  Flags,
};

} // namespace

InputDescription parse_description(std::string_view text)
{
  InputDescription desc;
  Section section = Section::Top;
  bool seen_group = false;
  bool seen_sys1 = false;
  bool seen_sys2 = false;
  bool seen_degree = false;
  bool seen_gens1 = false;
  bool seen_gens2 = false;

  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(lineno, "unterminated section header");
      auto name = trim(line.substr(1, line.size() - 2));
      if (name == "group") {
        section = Section::Group;
        seen_group = true;
      } else if (name == "system1") {
        section = Section::System1;
        seen_sys1 = true;
      } else if (name == "system2") {
        section = Section::System2;
        seen_sys2 = true;
      } else if (name == "flags") {
        section = Section::Flags;
      } else {
        throw ParseError(lineno, "unknown section [" + std::string(name) + "]");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(lineno, "expected key = value");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError(lineno, "empty key");

    switch (section) {
    case Section::Top:
      if (key != "label")
        throw ParseError(lineno, "unexpected key '" + std::string(key) + "' before any section");
      desc.label = std::string(value);
      break;

    case Section::Group:
      if (key == "degree") {
        auto d = to_integer<std::size_t>(value);
        if (!d || *d == 0)
          throw ParseError(lineno, "degree must be a positive integer");
        desc.group.degree = *d;
        seen_degree = true;
      } else {
        if (!is_identifier(key) || key == "degree")
          throw ParseError(lineno, "bad generator name '" + std::string(key) + "'");
        for (const auto& [n, c] : desc.group.generators)
          if (n == key)
            throw ParseError(lineno, "duplicate generator '" + std::string(key) + "'");
        if (value.empty() || value.front() != '(' || !balanced_cycles(value))
          throw ParseError(lineno, "generator must be in cycle notation");
        desc.group.generators.emplace_back(std::string(key), std::string(value));
      }
      break;

    case Section::System1:
    case Section::System2: {
      auto& sys = section == Section::System1 ? desc.system1 : desc.system2;
      auto& seen = section == Section::System1 ? seen_gens1 : seen_gens2;
      if (key == "base_genus") {
        auto g = to_integer<int>(value);
        if (!g || *g < 0)
          throw ParseError(lineno, "base_genus must be a non-negative integer");
        sys.base_genus = *g;
      } else if (key == "generators") {
        sys.generators = split_list(value);
        if (sys.generators.empty())
          throw ParseError(lineno, "empty generator list");
        seen = true;
      } else if (key == "hyperbolic") {
        sys.hyperbolic = split_list(value);
      } else if (key == "signature") {
        std::vector<int> sig;
        for (const auto& item : split_list(value)) {
          auto m = to_integer<int>(item);
          if (!m)
            throw ParseError(lineno, "bad signature entry '" + item + "'");
          sig.push_back(*m);
        }
        sys.signature = std::move(sig);
      } else {
        throw ParseError(lineno, "unknown key '" + std::string(key) + "' in system section");
      }
      break;
    }

    case Section::Flags:
      if (key == "in_scope_c1sq6") {
        if (value == "true")
          desc.in_scope_c1sq6 = true;
        else if (value == "false")
          desc.in_scope_c1sq6 = false;
        else
          throw ParseError(lineno, "flag must be true or false");
      } else {
        throw ParseError(lineno, "unknown flag '" + std::string(key) + "'");
      }
      break;
    }
  }

  const auto end = lineno + 1;
  if (!seen_group || !seen_degree || desc.group.generators.empty())
    throw ParseError(end, "missing [group] section with degree and generators");
  if (!seen_sys1 || !seen_gens1)
    throw ParseError(end, "missing [system1] generators");
  if (!seen_sys2 || !seen_gens2)
    throw ParseError(end, "missing [system2] generators");
  return desc;
}

ElementId evaluate_word(const FiniteGroup& G,
                        const std::vector<std::pair<std::string, ElementId>>& names,
                        std::string_view word)
{
  auto fail = [&](const std::string& what) -> ElementId {
    throw ValidationError("word \"" + std::string(word) + "\": " + what);
  };
  word = trim(word);
  if (word.empty())
    return fail("empty");
  if (word == "1")
    return FiniteGroup::identity();

  ElementId result = FiniteGroup::identity();
  std::size_t pos = 0;
  while (true) {
    auto star = word.find('*', pos);
    auto factor = trim(word.substr(pos, star == std::string_view::npos ? star : star - pos));
    long long exponent = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      auto e = to_integer<long long>(factor.substr(caret + 1));
      if (!e)
        return fail("bad exponent");
      exponent = *e;
      factor = trim(factor.substr(0, caret));
    }
    auto it = std::find_if(names.begin(), names.end(),
                           [&](const auto& nm) { return nm.first == factor; });
    if (it == names.end())
      return fail("unknown generator '" + std::string(factor) + "'");
    result = G.mul(result, G.pow(it->second, exponent));
    if (star == std::string_view::npos)
      break;
    pos = star + 1;
  }
  return result;
}

SystemPair build_systems(const InputDescription& desc, std::size_t order_cap)
{
  std::vector<Permutation> perms;
  for (const auto& [name, cycles] : desc.group.generators)
    perms.push_back(Permutation::parse(cycles, desc.group.degree));
  auto group = std::make_shared<const FiniteGroup>(group_from_generators(perms, order_cap));

  std::vector<std::pair<std::string, ElementId>> names;
  for (std::size_t k = 0; k < perms.size(); ++k)
    names.emplace_back(desc.group.generators[k].first, group->generators()[k]);

  auto make = [&](const SystemDescription& sd, const std::string& which) {
    if (sd.hyperbolic.size() != 2 * static_cast<std::size_t>(sd.base_genus))
      throw ValidationError(which + ": base_genus " + std::to_string(sd.base_genus) + " needs " +
                            std::to_string(2 * sd.base_genus) + " hyperbolic words");
    std::vector<std::pair<ElementId, ElementId>> hyp;
    for (std::size_t k = 0; k + 1 < sd.hyperbolic.size(); k += 2)
      hyp.emplace_back(evaluate_word(*group, names, sd.hyperbolic[k]),
                       evaluate_word(*group, names, sd.hyperbolic[k + 1]));
    std::vector<ElementId> gens;
    for (const auto& w : sd.generators)
      gens.push_back(evaluate_word(*group, names, w));

    SphericalSystem sys;
    sys.group = group;
    sys.base_genus = sd.base_genus;
    sys.hyperbolic = std::move(hyp);
    sys.generators = std::move(gens);
    if (sd.signature) {
      sys.signature = *sd.signature;
    } else {
      for (auto g : sys.generators)
        sys.signature.push_back(static_cast<int>(element_order(*group, g)));
    }
    auto report = validate_system(sys);
    if (!report.ok())
      throw ValidationError(which + ": " + report.message);
    return sys;
  };

  return SystemPair{group, make(desc.system1, "system1"), make(desc.system2, "system2")};
}

InputDescription parse_input(std::string_view text, std::size_t order_cap)
{
  auto desc = parse_description(text);
  build_systems(desc, order_cap);
  return desc;
}

namespace {

std::string join(const std::vector<std::string>& items)
{
  std::string out;
  for (const auto& s : items) {
    if (!out.empty())
      out += ", ";
    out += s;
  }
  return out;
}

void write_system(std::ostringstream& out, const char* header, const SystemDescription& sd)
{
  out << "\n[" << header << "]\n";
  out << "base_genus = " << sd.base_genus << "\n";
  if (!sd.hyperbolic.empty())
    out << "hyperbolic = " << join(sd.hyperbolic) << "\n";
  out << "generators = " << join(sd.generators) << "\n";
  if (sd.signature) {
    std::vector<std::string> items;
    for (int m : *sd.signature)
      items.push_back(std::to_string(m));
    out << "signature = " << join(items) << "\n";
  }
}

} // namespace

std::string serialize(const InputDescription& desc)
{
  std::ostringstream out;
  if (!desc.label.empty())
    out << "label = " << desc.label << "\n\n";
  out << "[group]\n";
  out << "degree = " << desc.group.degree << "\n";
  for (const auto& [name, cycles] : desc.group.generators)
    out << name << " = " << cycles << "\n";
  write_system(out, "system1", desc.system1);
  write_system(out, "system2", desc.system2);
  out << "\n[flags]\n";
  out << "in_scope_c1sq6 = " << (desc.in_scope_c1sq6 ? "true" : "false") << "\n";
  return out.str();
}

SingularityType parse_singularity_type(std::string_view text)
{
  // 1/n(1,a)
  text = trim(text);
  auto bad = [&]() -> SingularityType {
    throw ParseError(1, "bad singularity type \"" + std::string(text) + "\"");
  };
  if (text.substr(0, 2) != "1/")
    return bad();
  auto open = text.find('(');
  auto comma = text.find(',');
  auto close = text.find(')');
  if (open == std::string_view::npos || comma == std::string_view::npos ||
      close != text.size() - 1 || !(open < comma && comma < close))
    return bad();
  auto n = to_integer<int>(text.substr(2, open - 2));
  auto one = to_integer<int>(text.substr(open + 1, comma - open - 1));
  auto a = to_integer<int>(text.substr(comma + 1, close - comma - 1));
  if (!n || !one || !a || *one != 1)
    return bad();
  return SingularityType::make(*n, *a);
}

std::vector<FormulaRow> parse_formula_rows(std::string_view text)
{
  std::vector<FormulaRow> rows;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    FormulaRow row;
    bool has_order = false, has_g1 = false, has_g2 = false, has_sing = false;
    std::istringstream tokens{std::string(line)};
    std::string tok;
    while (tokens >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(lineno, "expected key=value, got '" + tok + "'");
      auto key = tok.substr(0, eq);
      auto value = std::string_view(tok).substr(eq + 1);
      auto integer = [&](const char* what) {
        auto v = to_integer<long long>(value);
        if (!v)
          throw ParseError(lineno, std::string(what) + " must be an integer");
        return *v;
      };
      if (key == "label") {
        row.label = std::string(value);
      } else if (key == "order") {
        row.order = integer("order");
        has_order = true;
      } else if (key == "g1") {
        row.g1 = integer("g1");
        has_g1 = true;
      } else if (key == "g2") {
        row.g2 = integer("g2");
        has_g2 = true;
      } else if (key == "q") {
        row.q = integer("q");
      } else if (key == "pg") {
        row.pg = integer("pg");
      } else if (key == "Ksq") {
        row.K2 = Rational(integer("Ksq"));
      } else if (key == "sing") {
        has_sing = true;
        if (value == "none")
          continue;
        for (const auto& item : split_list(value)) {
          auto x = item.rfind('x');
          if (x == std::string::npos)
            throw ParseError(lineno, "singularity entry needs a count: '" + item + "'");
          auto count = to_integer<long long>(std::string_view(item).substr(x + 1));
          if (!count || *count <= 0)
            throw ParseError(lineno, "bad singularity count in '" + item + "'");
          try {
            row.singularities.emplace_back(parse_singularity_type(item.substr(0, x)), *count);
          } catch (const ParseError&) {
            throw ParseError(lineno, "bad singularity type in '" + item + "'");
          } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
          }
        }
      } else {
        throw ParseError(lineno, "unknown key '" + key + "'");
      }
    }
    if (!has_order || !has_g1 || !has_g2 || !has_sing)
      throw ParseError(lineno, "row needs order, g1, g2 and sing");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string serialize(const FormulaRow& row)
{
  std::ostringstream out;
  if (!row.label.empty())
    out << "label=" << row.label << " ";
  out << "order=" << row.order << " g1=" << row.g1 << " g2=" << row.g2 << " sing=";
  if (row.singularities.empty())
    out << "none";
  for (std::size_t k = 0; k < row.singularities.size(); ++k) {
    const auto& [t, count] = row.singularities[k];
    out << (k ? "," : "") << "1/" << t.n << "(1," << t.a << ")x" << count;
  }
  if (row.q != 0)
    out << " q=" << row.q;
  if (row.pg)
    out << " pg=" << *row.pg;
  if (row.K2)
    out << " Ksq=" << to_string(*row.K2);
  return out.str();
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace pqs
