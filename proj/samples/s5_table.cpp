// Builds the table of S5, prints it, and restricts the degree-6 character to A5.
#include <iostream>

#include "chartab/chartab.hpp"

int main() {
  using namespace chartab;
  const auto s5 = parse_group_spec("S5");
  const auto table = build_character_table(s5);
  std::cout << io::render_text(table) << '\n';

  const auto a5 = subgroup(s5, {Perm::from_cycles(5, "(0,1,2)"), Perm::from_cycles(5, "(2,3,4)")}, "A5");
  const auto a5_table = build_character_table(a5.group());
  const auto& chi = table[table.size() - 1];
  const auto report = restriction_report(chi, a5, a5_table, table.size() - 1);
  std::cout << "restriction of the degree " << table.degrees.back() << " character to A5: "
            << io::combination(report.multiplicities, "psi") << '\n';
}
