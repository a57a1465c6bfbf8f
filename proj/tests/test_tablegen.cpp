#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"

using namespace chartab;

namespace {

std::vector<std::string> small_builtins() {
  std::vector<std::string> out;
  for (const auto& name : oracle::builtins_within_cap())
    if (parse_group_spec(name)->order() <= 24) out.push_back(name);
  return out;
}

void expect_hand_table(const oracle::HandTable& book) {
  const auto g = parse_group_spec(book.group);
  const auto reps = oracle::parse_reps(*g, book.reps);
  for (std::size_t c = 0; c < reps.size(); ++c) ASSERT_EQ(g->classes()[g->class_of(reps[c])].size, book.sizes[c]);
  const auto table = build_character_table(g);
  EXPECT_TRUE(oracle::same_rows(table, oracle::to_canonical_columns(*g, reps, book.rows))) << book.group;
}

}  // namespace

TEST(ClassConstants, S3TranspositionSquare) {
  const auto g = parse_group_spec("S3");
  const auto cc = class_constants(*g);
  const std::size_t e = g->class_of(g->identity());
  const std::size_t t = g->class_of(Perm::from_cycles(3, "(0,1)"));
  const std::size_t c = g->class_of(Perm::from_cycles(3, "(0,1,2)"));
  // c_t c_t = 3 c_e + 0 c_t + 3 c_c
  EXPECT_EQ(cc(t, t, e), 3u);
  EXPECT_EQ(cc(t, t, t), 0u);
  EXPECT_EQ(cc(t, t, c), 3u);
  EXPECT_EQ(oracle::brute_class_constant(*g, t, t, c), 3u);
}

TEST(ClassConstants, CyclicGroupMultipliesAsElements) {
  const auto g = parse_group_spec("C4");
  const auto cc = class_constants(*g);
  const Perm r = g->generators()[0];
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        const auto cj = g->class_of(r.pow(j)), ck = g->class_of(r.pow(k)), cl = g->class_of(r.pow(l));
        EXPECT_EQ(cc(cj, ck, cl), (j + k) % 4 == l ? 1u : 0u);
      }
}

TEST(ClassConstants, InvariantsAndBruteForce) {
  for (const auto& name : small_builtins()) {
    const auto g = parse_group_spec(name);
    const auto cc = class_constants(*g);
    const ClassData& cd = g->classes();
    const std::size_t h = cd.count();
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t k = 0; k < h; ++k) {
        std::uint64_t weighted = 0;
        for (std::size_t l = 0; l < h; ++l) {
          weighted += cc(j, k, l) * cd[l].size;
          EXPECT_EQ(cc(j, k, l), cc(k, j, l)) << name;
          EXPECT_EQ(cc(j, k, l), oracle::brute_class_constant(*g, j, k, l)) << name;
          if (j == 0) { EXPECT_EQ(cc(0, k, l), k == l ? 1u : 0u) << name; }
        }
        EXPECT_EQ(weighted, cd[j].size * cd[k].size) << name;
      }
  }
}

TEST(ChoosePrime, Examples) {
  EXPECT_EQ(choose_prime(*parse_group_spec("S3")), 7u);
  EXPECT_EQ(choose_prime(*parse_group_spec("S5")), 61u);
  EXPECT_EQ(choose_prime(*parse_group_spec("C1")), 3u);
  for (const auto& name : oracle::builtins_within_cap()) {
    const auto g = parse_group_spec(name);
    const auto p = choose_prime(*g);
    EXPECT_TRUE(modp::is_prime(p));
    EXPECT_EQ(p % g->exponent(), 1u % g->exponent());
    EXPECT_GT(p * p, 4 * g->order());
  }
}

TEST(Eigenbasis, C2) {
  const auto g = parse_group_spec("C2");
  const auto p = choose_prime(*g);
  auto v = modp_eigenbasis(class_constants(*g), p);
  std::sort(v.begin(), v.end());
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (modp::Vec{1, 1}));
  EXPECT_EQ(v[1], (modp::Vec{1, p - 1}));
}

TEST(Eigenbasis, CentralCharacterIdentityModP) {
  for (const char* spec : {"S3", "S4", "A5", "Q8", "D6", "C6", "S5"}) {
    const auto g = parse_group_spec(spec);
    const auto cc = class_constants(*g);
    const auto p = choose_prime(*g);
    const modp::Field f(p);
    const auto vecs = modp_eigenbasis(cc, p);
    const std::size_t h = cc.classes();
    ASSERT_EQ(vecs.size(), h);
    for (const auto& v : vecs) {
      EXPECT_EQ(v[0], 1u);
      for (std::size_t j = 0; j < h; ++j)
        for (std::size_t k = 0; k < h; ++k) {
          modp::u64 rhs = 0;
          for (std::size_t l = 0; l < h; ++l) rhs = f.add(rhs, f.mul(cc(j, k, l) % p, v[l]));
          EXPECT_EQ(f.mul(v[j], v[k]), rhs) << spec;
        }
    }
  }
}

TEST(Degrees, Examples) {
  auto degrees = [](const char* spec) {
    const auto g = parse_group_spec(spec);
    const auto p = choose_prime(*g);
    auto d = degrees_from_eigen(modp_eigenbasis(class_constants(*g), p), g->classes(), p, g->order());
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(degrees("S5"), (std::vector<long>{1, 1, 4, 4, 5, 5, 6}));
  EXPECT_EQ(degrees("Q8"), (std::vector<long>{1, 1, 1, 1, 2}));
  EXPECT_EQ(degrees("C1"), (std::vector<long>{1}));
  EXPECT_EQ(degrees("A5"), (std::vector<long>{1, 3, 3, 4, 5}));
}

TEST(Tables, HandTablesMatch) {
  expect_hand_table(oracle::s3());
  expect_hand_table(oracle::s4());
  expect_hand_table(oracle::a4());
  expect_hand_table(oracle::s5());
  expect_hand_table(oracle::a5());
}

TEST(Tables, OrderEightTables) {
  const auto q8 = parse_group_spec("Q8");
  const auto tq = build_character_table(q8);
  EXPECT_TRUE(oracle::same_rows(tq, oracle::to_canonical_columns(*q8, oracle::q8_columns(*q8), oracle::order8_rows())));
  const auto d4 = parse_group_spec("D4");
  const auto td = build_character_table(d4);
  EXPECT_TRUE(oracle::same_rows(td, oracle::to_canonical_columns(*d4, oracle::d4_columns(*d4), oracle::order8_rows())));
  EXPECT_TRUE(tables_abstractly_equal(tq, td));
  EXPECT_FALSE(tables_abstractly_equal(tq, build_character_table(parse_group_spec("C8"))));
  EXPECT_FALSE(tables_abstractly_equal(tq, build_character_table(parse_group_spec("S3"))));
}

TEST(Tables, CanonicalOrder) {
  const auto t = build_character_table(parse_group_spec("S4"));
  EXPECT_EQ(t[0], trivial_character(t.group));
  EXPECT_TRUE(std::is_sorted(t.degrees.begin(), t.degrees.end()));
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_FALSE(detail::canonical_row_before(t[i], t[i - 1]));
}

TEST(Tables, CyclicCharacters) {
  for (int n = 1; n <= 9; ++n) {
    const auto g = parse_group_spec("C" + std::to_string(n));
    const auto t = build_character_table(g);
    ASSERT_EQ(t.size(), static_cast<std::size_t>(n));
    std::vector<std::vector<Cyclo>> expected;
    const Perm s = n >= 2 ? g->generators()[0] : g->identity();
    for (int r = 0; r < n; ++r) {
      std::vector<Cyclo> row(n);
      for (int k = 0; k < n; ++k) row[g->class_of(s.pow(k))] = oracle::z(n, r * k);
      expected.push_back(row);
    }
    EXPECT_TRUE(oracle::same_rows(t, expected)) << n;
  }
}

TEST(Tables, LiftFromEigenvectors) {
  const auto g = parse_group_spec("A4");
  const auto p = choose_prime(*g);
  const auto vecs = modp_eigenbasis(class_constants(*g), p);
  const auto degrees = degrees_from_eigen(vecs, g->classes(), p, g->order());
  const auto t = lift_characters(g, vecs, degrees, p);
  const auto book = oracle::a4();
  EXPECT_TRUE(oracle::same_rows(t, oracle::to_canonical_columns(*g, oracle::parse_reps(*g, book.reps), book.rows)));
}

TEST(Tables, InvariantsThroughOrder24) {
  for (const auto& name : small_builtins()) {
    const auto g = parse_group_spec(name);
    const auto t = build_character_table(g);
    const ClassData& cd = g->classes();
    const std::size_t h = cd.count();
    ASSERT_EQ(t.size(), h) << name;
    long squares = 0;
    for (std::size_t i = 0; i < h; ++i) {
      EXPECT_TRUE(is_irreducible(t[i])) << name;
      EXPECT_EQ(g->order() % t.degrees[i], 0u) << name;
      squares += t.degrees[i] * t.degrees[i];
      for (std::size_t k = 0; k < h; ++k) EXPECT_EQ(inner_product(t[i], t[k]), Cyclo(i == k ? 1 : 0)) << name;
    }
    EXPECT_EQ(squares, static_cast<long>(g->order())) << name;
    for (std::size_t a = 0; a < h; ++a) {
      Cyclo weighted(0);
      for (std::size_t i = 0; i < h; ++i) weighted += Cyclo(t.degrees[i]) * t[i][a];
      EXPECT_EQ(weighted, Cyclo(a == 0 ? static_cast<long>(g->order()) : 0)) << name;
      for (std::size_t b = 0; b < h; ++b) {
        Cyclo col(0);
        for (std::size_t i = 0; i < h; ++i) col += t[i][a] * t[i][b].conj();
        const Cyclo expected = a == b ? Cyclo(Rational(static_cast<long>(g->order()), static_cast<long>(cd[a].size)))
                                      : Cyclo(0);
        EXPECT_EQ(col, expected) << name;
      }
    }
  }
}

TEST(LinearCharacters, Counts) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(linear_characters(parse_group_spec("S" + std::to_string(n))).size(), 2u);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(linear_characters(parse_group_spec("C" + std::to_string(n))).size(), std::size_t(n));
  const auto q8 = parse_group_spec("Q8");
  const auto lin = linear_characters(q8);
  ASSERT_EQ(lin.size(), 4u);
  const Perm minus_one = q8->generators()[0] * q8->generators()[0];
  for (const auto& chi : lin) EXPECT_EQ(chi.at(minus_one), Cyclo(1));
}

TEST(LinearCharacters, MatchDegreeOneRows) {
  for (const auto& name : oracle::builtins_within_cap()) {
    const auto g = parse_group_spec(name);
    if (g->order() > 720) continue;
    const auto t = build_character_table(g);
    std::vector<ClassFunction> rows;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t.degrees[i] == 1) rows.push_back(t[i]);
    EXPECT_EQ(linear_characters(g), rows) << name;
    EXPECT_EQ(rows.size(), commutator_subgroup(g).index()) << name;
  }
}
