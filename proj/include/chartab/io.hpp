#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chartab/analysis.hpp"
#include "chartab/classfun.hpp"
#include "chartab/cyclo.hpp"
#include "chartab/errors.hpp"
#include "chartab/permgroup.hpp"
#include "chartab/tablegen.hpp"

namespace chartab::io {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Cyclo& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_fraction(q));
  return Json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

inline Cyclo cyclo_from_json(const Json& j) {
  try {
    const auto e = j.at("order").get<std::size_t>();
    std::vector<Rational> raw;
    for (const auto& q : j.at("coeffs")) raw.push_back(parse_rational(q.get<std::string>()));
    if (e == 0 || e > kMaxCycloOrder) throw ParseError("cyclotomic order out of range");
    return Cyclo::from_poly(e, std::move(raw)).descended();
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed cyclotomic value: ") + ex.what());
  }
}

inline Json to_json(const ClassFunction& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(to_json(v));
  return Json{{"group_spec", f.group()->spec()}, {"values", std::move(values)}};
}

inline Json classes_json(const PermGroup& g) {
  Json classes = Json::array();
  for (const auto& c : g.classes().classes())
    classes.push_back({{"rep_cycles", c.representative.cycles()}, {"size", c.size}, {"element_order", c.element_order}});
  return classes;
}

/// Character arrays are 0-based; CLI flags count from 1.
inline Json to_json(const CharacterTable& t) {
  Json chars = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : t.rows[i].values()) values.push_back(to_json(v));
    chars.push_back({{"degree", t.degrees[i]}, {"values", std::move(values)}});
  }
  return Json{{"group", t.group->spec()},
              {"order", t.group->order()},
              {"classes", classes_json(*t.group)},
              {"characters", std::move(chars)}};
}

/// Rebuilds a table from its JSON form, regenerating the group from its spec
/// and checking that the recorded classes match.
inline CharacterTable table_from_json(const Json& j, std::size_t cap = kDefaultCap) {
  try {
    GroupPtr g = parse_group_spec(j.at("group").get<std::string>(), cap);
    if (j.at("order").get<std::size_t>() != g->order()) throw ParseError("recorded order does not match the group");
    const ClassData& cd = g->classes();
    const Json& classes = j.at("classes");
    if (classes.size() != cd.count()) throw ParseError("recorded class count does not match the group");
    for (std::size_t k = 0; k < cd.count(); ++k)
      if (classes[k].at("rep_cycles").get<std::string>() != cd[k].representative.cycles() ||
          classes[k].at("size").get<std::size_t>() != cd[k].size)
        throw ParseError("recorded class " + std::to_string(k) + " does not match the group");
    std::vector<ClassFunction> rows;
    for (const auto& c : j.at("characters")) {
      std::vector<Cyclo> values;
      for (const auto& v : c.at("values")) values.push_back(cyclo_from_json(v));
      rows.emplace_back(g, std::move(values));
    }
    return {g, std::move(rows)};
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed table JSON: ") + ex.what());
  }
}

inline Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"checks", std::move(checks)}, {"all_passed", r.all_passed()}};
}

// ---------------------------------------------------------------------------
// Text

inline constexpr std::size_t kExactWidth = 12;

/// Aligned table, paper-style: class representatives, sizes and element
/// orders as header rows, then one row per character. Values wider than 12
/// characters print as 4-place decimals with a numbered footnote.
inline std::string render_text(const CharacterTable& t) {
  const ClassData& cd = t.class_data();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> footnotes;

  std::vector<std::string> head{"class"}, sizes{"size"}, orders{"order"};
  for (const auto& c : cd.classes()) {
    head.push_back(c.representative.cycles());
    sizes.push_back(std::to_string(c.size));
    orders.push_back(std::to_string(c.element_order));
  }
  grid.push_back(std::move(head));
  grid.push_back(std::move(sizes));
  grid.push_back(std::move(orders));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"chi" + std::to_string(i + 1)};
    for (const auto& v : t.rows[i].values()) {
      std::string exact = v.to_string();
      if (exact.size() <= kExactWidth) {
        row.push_back(std::move(exact));
      } else {
        const auto it = std::find(footnotes.begin(), footnotes.end(), exact);
        const std::size_t k = it - footnotes.begin() + 1;
        if (it == footnotes.end()) footnotes.push_back(exact);
        row.push_back(v.approx(4) + "[" + std::to_string(k) + "]");
      }
    }
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << "Character table of " << t.group->spec() << " (order " << t.group->order() << ", " << cd.count()
      << " classes)\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      std::string cell = grid[r][c];
      if (c + 1 < grid[r].size()) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    out << line << "\n";
    if (r == 2) out << std::string(line.size(), '-') << "\n";
  }
  for (std::size_t k = 0; k < footnotes.size(); ++k) out << "[" << k + 1 << "] " << footnotes[k] << "\n";
  return out.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string render_csv(const CharacterTable& t) {
  const ClassData& cd = t.class_data();
  std::ostringstream out;
  auto line = [&](const std::string& first, auto cell) {
    out << csv_field(first);
    for (std::size_t j = 0; j < cd.count(); ++j) out << "," << csv_field(cell(j));
    out << "\n";
  };
  line("class", [&](std::size_t j) { return cd[j].representative.cycles(); });
  line("size", [&](std::size_t j) { return std::to_string(cd[j].size); });
  line("order", [&](std::size_t j) { return std::to_string(cd[j].element_order); });
  for (std::size_t i = 0; i < t.size(); ++i)
    line("chi" + std::to_string(i + 1), [&](std::size_t j) { return t.rows[i][j].to_string(); });
  return out.str();
}

inline std::string render_text(const CheckReport& r) {
  std::string s;
  for (const auto& c : r.checks) s += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  return s;
}

inline std::string render_classes_text(const PermGroup& g) {
  const ClassData& cd = g.classes();
  std::size_t w = 16;
  for (const auto& c : cd.classes()) w = std::max(w, c.representative.cycles().size() + 2);
  std::ostringstream out;
  out << "Conjugacy classes of " << g.spec() << " (order " << g.order() << ", " << cd.count() << " classes)\n";
  std::string head = "index  representative";
  head.resize(7 + w, ' ');
  out << head << "size    order\n";
  for (std::size_t j = 0; j < cd.count(); ++j) {
    std::string line = std::to_string(j + 1);
    line.resize(7, ' ');
    line += cd[j].representative.cycles();
    line.resize(7 + w, ' ');
    std::string size = std::to_string(cd[j].size);
    size.resize(8, ' ');
    out << line << size << cd[j].element_order << "\n";
  }
  return out.str();
}

inline std::string render_classes_csv(const PermGroup& g) {
  std::ostringstream out;
  out << "index,representative,size,element_order\n";
  const ClassData& cd = g.classes();
  for (std::size_t j = 0; j < cd.count(); ++j)
    out << j + 1 << "," << csv_field(cd[j].representative.cycles()) << "," << cd[j].size << "," << cd[j].element_order
        << "\n";
  return out.str();
}

/// e.g. "chi1 + 2 chi3", or "0" for the zero vector.
inline std::string combination(const std::vector<long>& mult, const std::string& prefix) {
  std::string s;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (mult[i] != 1) s += std::to_string(mult[i]) + " ";
    s += prefix + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

inline std::string values_text(const ClassFunction& f) {
  std::string s = "(";
  for (std::size_t j = 0; j < f.size(); ++j) s += (j ? ", " : "") + f[j].to_string();
  return s + ")";
}

}  // namespace chartab::io
