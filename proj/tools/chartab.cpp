// chartab: character tables of finite permutation groups from the command line.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chartab/chartab.hpp"

namespace {

using namespace chartab;
using io::Json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Config {
  std::string spec;
  std::string subgroup;
  std::optional<long> character;
  std::string chars;
  std::string format = "text";
  std::optional<std::size_t> cap;
  std::vector<std::string> fourier_values;
  std::string table_file;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t resolve_cap(const Config& cfg) {
  if (cfg.cap) {
    if (*cfg.cap == 0) throw UsageError("--cap must be positive");
    return *cfg.cap;
  }
  if (const char* env = std::getenv("CHARTAB_CAP")) {
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty() || v == 0) throw UsageError("CHARTAB_CAP='" + text + "' is not a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

std::size_t char_index(long one_based, std::size_t count) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > count)
    throw UsageError("character index " + std::to_string(one_based) + " out of range 1.." + std::to_string(count));
  return static_cast<std::size_t>(one_based - 1);
}

std::pair<long, long> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--chars expects two indices like 2,3");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const long i = std::stol(a, &u1), j = std::stol(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw UsageError("");
    return {i, j};
  } catch (const std::exception&) {
    throw UsageError("--chars expects two indices like 2,3, got '" + text + "'");
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json values_json(const ClassFunction& f) { return io::to_json(f).at("values"); }

Json mult_json(const std::vector<long>& m) { return Json(m); }

bool is_center(const GroupPtr& g, const Subgroup& n) {
  const Subgroup z = center(g);
  const auto& elems = z.group()->elements();
  return z.order() == n.order() && std::all_of(elems.begin(), elems.end(), [&](const Perm& p) { return n.contains(p); });
}

// ---------------------------------------------------------------------------

int cmd_table(const Config& cfg, std::size_t cap) {
  const auto t = build_character_table(parse_group_spec(cfg.spec, cap));
  if (cfg.format == "json") print_json(io::to_json(t));
  else if (cfg.format == "csv") std::cout << io::render_csv(t);
  else std::cout << io::render_text(t);
  return kOk;
}

int cmd_classes(const Config& cfg, std::size_t cap) {
  const auto g = parse_group_spec(cfg.spec, cap);
  if (cfg.format == "json")
    print_json({{"group", g->spec()}, {"order", g->order()}, {"classes", io::classes_json(*g)}});
  else if (cfg.format == "csv") std::cout << io::render_classes_csv(*g);
  else std::cout << io::render_classes_text(*g);
  return kOk;
}

CharacterTable load_table(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read table file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("table file '" + path + "' is not JSON: " + e.what());
  }
  return io::table_from_json(j, cap);
}

/// Checks either a freshly built table or one saved with `table --format json`.
int cmd_check(const Config& cfg, std::size_t cap) {
  if (cfg.spec.empty() == cfg.table_file.empty()) throw UsageError("check needs exactly one of <spec> or --table");
  const auto table =
      cfg.table_file.empty() ? build_character_table(parse_group_spec(cfg.spec, cap)) : load_table(cfg.table_file, cap);
  const auto report = check_all(table);
  if (cfg.format == "json") {
    print_json(io::to_json(report));
  } else if (cfg.format == "csv") {
    std::cout << "check,passed,detail\n";
    for (const auto& c : report.checks)
      std::cout << io::csv_field(c.name) << "," << (c.passed ? "true" : "false") << "," << io::csv_field(c.detail) << "\n";
  } else {
    std::cout << io::render_text(report);
  }
  return report.all_passed() ? kOk : kFail;
}

int cmd_simple(const Config& cfg, std::size_t cap) {
  const auto g = parse_group_spec(cfg.spec, cap);
  const auto r = burnside_class_test(g);
  const bool ok = r.consistent(*g);
  if (cfg.format == "json") {
    Json classes = Json::array();
    for (const auto& c : r.classes)
      classes.push_back({{"class", c.class_index + 1},
                         {"rep_cycles", c.representative.cycles()},
                         {"size", c.size},
                         {"factorization", c.factorization},
                         {"prime_power", c.prime_power}});
    Json witness = nullptr;
    if (r.witness) witness = {{"order", r.witness->order()}, {"is_center", is_center(g, *r.witness)}};
    print_json({{"group", g->spec()},
                {"classes", std::move(classes)},
                {"prime_power_class", r.prime_power_class ? Json(*r.prime_power_class + 1) : Json(nullptr)},
                {"verdict", r.conclusive() ? "not simple" : "inconclusive"},
                {"is_simple", r.simple},
                {"witness", std::move(witness)},
                {"consistent", ok}});
    return ok ? kOk : kFail;
  }
  std::cout << "Burnside class test for " << g->spec() << " (order " << g->order() << ")\n";
  for (const auto& c : r.classes)
    std::cout << "class " << c.class_index + 1 << " " << c.representative.cycles() << ": size " << c.size << " = "
              << c.factorization << (c.prime_power ? " (prime power)" : "") << "\n";
  if (r.conclusive())
    std::cout << "verdict: not simple, class " << *r.prime_power_class + 1 << " has prime-power size\n";
  else
    std::cout << "verdict: test inconclusive, no non-identity class of prime-power size\n";
  if (r.witness) {
    std::cout << "witness: proper normal subgroup of order " << r.witness->order()
              << (is_center(g, *r.witness) ? " (the center)" : "") << "\n";
  } else {
    std::cout << "witness: none\n";
  }
  std::cout << "is_simple: " << (r.simple ? "yes" : "no") << "\n";
  std::cout << (ok ? "PASS" : "FAIL") << " burnside-consistency\n";
  return ok ? kOk : kFail;
}

int cmd_solvable(const Config& cfg, std::size_t cap) {
  const auto g = parse_group_spec(cfg.spec, cap);
  const auto r = burnside_solvability(g);
  const std::size_t primes = factorize(r.order).size();
  if (cfg.format == "json") {
    print_json({{"group", g->spec()},
                {"order", r.order},
                {"factorization", r.factorization},
                {"theorem_applies", r.theorem_applies},
                {"derived_series_orders", r.derived_orders},
                {"solvable", r.solvable},
                {"consistent", r.consistent()}});
    return r.consistent() ? kOk : kFail;
  }
  std::cout << g->spec() << ": order " << r.order << " = " << r.factorization << "\n";
  std::cout << "derived series orders:";
  for (auto n : r.derived_orders) std::cout << " " << n;
  std::cout << "\n";
  if (r.theorem_applies)
    std::cout << "p^a q^b theorem: applies (" << primes << (primes == 1 ? " prime" : " primes") << ")\n";
  else
    std::cout << "p^a q^b theorem: not applicable (" << primes << " primes)\n";
  std::cout << (r.solvable ? "solvable" : "not solvable") << "\n";
  std::cout << (r.consistent() ? "PASS" : "FAIL") << " burnside-solvability\n";
  return r.consistent() ? kOk : kFail;
}

int cmd_restrict(const Config& cfg, std::size_t cap) {
  if (cfg.subgroup.empty()) throw UsageError("restrict needs --subgroup <spec>");
  const auto g = parse_group_spec(cfg.spec, cap);
  const auto parts = parse_group_spec(cfg.subgroup, cap);
  const Subgroup h = subgroup(g, parts->generators(), parts->spec());
  const auto table = build_character_table(g);
  const auto sub_table = build_character_table(h.group());

  std::vector<std::size_t> which;
  if (cfg.character) which.push_back(char_index(*cfg.character, table.size()));
  else
    for (std::size_t i = 0; i < table.size(); ++i) which.push_back(i);

  bool ok = true;
  Json out = Json::array();
  for (auto i : which) {
    const auto r = restriction_report(table[i], h, sub_table, i);
    ok = ok && r.consistent();
    const std::string combo = io::combination(r.multiplicities, "psi");
    if (cfg.format == "json") {
      out.push_back({{"character", i + 1},
                     {"restricted", values_json(r.restricted)},
                     {"multiplicities", mult_json(r.multiplicities)},
                     {"norm", rational_fraction(r.norm)},
                     {"index", r.index},
                     {"vanishes_off_subgroup", r.vanishes_off_subgroup},
                     {"case", split_case_name(r.split)},
                     {"consistent", r.consistent()}});
      continue;
    }
    std::cout << "chi" << i + 1 << " of " << g->spec() << " restricted to " << h.group()->spec() << " (index " << r.index
              << ")\n";
    std::cout << "  values: " << io::values_text(r.restricted) << "\n";
    std::cout << "  norm: " << Cyclo(r.norm).to_string() << ", bound " << r.index << "\n";
    std::cout << "  vanishes off subgroup: " << (r.vanishes_off_subgroup ? "yes" : "no") << "\n";
    std::cout << "  " << split_case_name(r.split) << ": " << combo << "\n";
    std::cout << "  " << (r.consistent() ? "PASS" : "FAIL") << " restriction-bound\n";
  }
  if (cfg.format == "json") print_json({{"group", g->spec()}, {"subgroup", h.group()->spec()}, {"restrictions", out}});
  return ok ? kOk : kFail;
}

int cmd_tensor(const Config& cfg, std::size_t cap) {
  if (cfg.chars.empty()) throw UsageError("tensor needs --chars <i,j>");
  const auto [a, b] = parse_pair(cfg.chars);
  const auto table = build_character_table(parse_group_spec(cfg.spec, cap));
  const std::size_t i = char_index(a, table.size()), j = char_index(b, table.size());
  const ClassFunction prod = table[i] * table[j];
  const auto mult = decompose(prod, table);
  if (cfg.format == "json") {
    print_json({{"group", table.group->spec()},
                {"chars", {i + 1, j + 1}},
                {"values", values_json(prod)},
                {"multiplicities", mult_json(mult)}});
    return kOk;
  }
  std::cout << "chi" << i + 1 << " * chi" << j + 1 << " = " << io::combination(mult, "chi") << "\n";
  std::cout << "values: " << io::values_text(prod) << "\n";
  std::cout << "multiplicities:";
  for (long m : mult) std::cout << " " << m;
  std::cout << "\n";
  return kOk;
}

int cmd_symalt(const Config& cfg, std::size_t cap) {
  if (!cfg.character) throw UsageError("symalt needs --char <i>");
  const auto table = build_character_table(parse_group_spec(cfg.spec, cap));
  const std::size_t i = char_index(*cfg.character, table.size());
  const auto sa = sym_alt_square(table[i]);
  const auto ms = decompose(sa.sym, table), ma = decompose(sa.alt, table);
  const Cyclo ns = inner_product(sa.sym, sa.sym), na = inner_product(sa.alt, sa.alt);
  if (cfg.format == "json") {
    print_json({{"group", table.group->spec()},
                {"char", i + 1},
                {"sym", {{"values", values_json(sa.sym)}, {"multiplicities", mult_json(ms)}, {"norm", ns.to_string()}}},
                {"alt", {{"values", values_json(sa.alt)}, {"multiplicities", mult_json(ma)}, {"norm", na.to_string()}}}});
    return kOk;
  }
  auto show = [](const char* name, const ClassFunction& f, const std::vector<long>& m, const Cyclo& norm) {
    std::cout << name << ": " << io::values_text(f) << "\n";
    std::cout << "  = " << io::combination(m, "chi") << ", norm " << norm.to_string()
              << (norm == Cyclo(1) ? " (irreducible)" : "") << "\n";
  };
  show("chi_S", sa.sym, ms, ns);
  show("chi_A", sa.alt, ma, na);
  return kOk;
}

int cmd_fourier(const Config& cfg) {
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long v = std::stol(cfg.spec, &used);
    if (used != cfg.spec.size() || v < 1 || v > 1000) throw UsageError("");
    n = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("fourier expects a length n in 1..1000, got '" + cfg.spec + "'");
  }
  if (cfg.fourier_values.size() != n)
    throw UsageError("fourier " + std::to_string(n) + " expects " + std::to_string(n) + " values, got " +
                     std::to_string(cfg.fourier_values.size()));
  std::vector<Cyclo> f;
  for (const auto& s : cfg.fourier_values) f.emplace_back(parse_rational(s));
  const auto fhat = dft_cyclic(f, n);
  const bool inverts = inverse_dft_cyclic(fhat, n) == f;
  const auto pl = plancherel_check(f, n);
  const bool ok = inverts && pl.holds();
  if (cfg.format == "json") {
    Json vals = Json::array();
    for (const auto& v : fhat) vals.push_back(io::to_json(v.descended()));
    print_json({{"n", n},
                {"fhat", std::move(vals)},
                {"inversion", inverts},
                {"plancherel", {{"time_side", pl.time_side.to_string()}, {"frequency_side", pl.frequency_side.to_string()}}},
                {"consistent", ok}});
    return ok ? kOk : kFail;
  }
  for (std::size_t q = 0; q < n; ++q)
    std::cout << "fhat(" << q << ") = " << fhat[q].descended().to_string() << "  ~ " << fhat[q].approx(4) << "\n";
  std::cout << (inverts ? "PASS" : "FAIL") << " inversion\n";
  std::cout << (pl.holds() ? "PASS" : "FAIL") << " plancherel: " << pl.time_side.to_string() << " = "
            << pl.frequency_side.descended().to_string() << "\n";
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables of finite permutation groups"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool with_spec = true) {
    if (with_spec) sub->add_option("spec", cfg.spec, "group spec: S<n>, A<n>, C<n>, D<n>, Q8 or perm:<deg>:<cycles>;...")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cap", cfg.cap, "enumeration cap (default 100000, or CHARTAB_CAP)");
    return sub;
  };
  auto* table = common(app.add_subcommand("table", "print the character table"));
  auto* classes = common(app.add_subcommand("classes", "list conjugacy classes"));
  auto* check = common(app.add_subcommand("check", "run the invariant suite on the table"), false);
  check->add_option("spec", cfg.spec, "group spec, as for table");
  check->add_option("--table", cfg.table_file, "check a table saved as JSON instead of building one");
  auto* simple = common(app.add_subcommand("simple", "class-size simplicity test"));
  auto* solvable = common(app.add_subcommand("solvable", "derived series and the p^a q^b theorem"));
  auto* restrict_cmd = common(app.add_subcommand("restrict", "restrict characters to a subgroup"));
  restrict_cmd->add_option("--subgroup", cfg.subgroup, "subgroup spec on the same points")->required();
  restrict_cmd->add_option("--char", cfg.character, "1-based character index (default: all)");
  auto* tensor = common(app.add_subcommand("tensor", "decompose a product of two characters"));
  tensor->add_option("--chars", cfg.chars, "two 1-based indices i,j")->required();
  auto* symalt = common(app.add_subcommand("symalt", "symmetric and alternating squares"));
  symalt->add_option("--char", cfg.character, "1-based character index")->required();
  auto* fourier = common(app.add_subcommand("fourier", "exact DFT on Z/nZ"), false);
  fourier->add_option("n", cfg.spec, "length")->required();
  fourier->add_option("values", cfg.fourier_values, "n rational values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fourier) return cmd_fourier(cfg);
    const std::size_t cap = resolve_cap(cfg);
    if (*table) return cmd_table(cfg, cap);
    if (*classes) return cmd_classes(cfg, cap);
    if (*check) return cmd_check(cfg, cap);
    if (*simple) return cmd_simple(cfg, cap);
    if (*solvable) return cmd_solvable(cfg, cap);
    if (*restrict_cmd) return cmd_restrict(cfg, cap);
    if (*tensor) return cmd_tensor(cfg, cap);
    if (*symalt) return cmd_symalt(cfg, cap);
  } catch (const ResourceError& e) {
    std::cerr << "chartab: " << e.what() << "\n";
    return kCap;
  } catch (const InternalError& e) {
    std::cerr << "chartab: internal error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "chartab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
